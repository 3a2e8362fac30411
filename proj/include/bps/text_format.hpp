#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bps/bit_sequence.hpp"

namespace bps {

// Sequence files: optional leading '#' lines carrying key=value metadata,
// then a body of '0'/'1' characters. Newlines in the body are ignored.

struct SequenceFile {
  std::vector<std::pair<std::string, std::string>> metadata;  // file order
  BitSequence sequence;
};

void write_sequence(std::ostream& out, const SequenceFile& file);
SequenceFile read_sequence(std::istream& in);

/// File wrappers; failures to open raise ErrorKind::Io.
void write_sequence_file(const std::filesystem::path& path, const SequenceFile& file);
SequenceFile read_sequence_file(const std::filesystem::path& path);

}  // namespace bps
