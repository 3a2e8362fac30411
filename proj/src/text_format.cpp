#include "bps/text_format.hpp"

#include <fstream>
#include <sstream>

#include "bps/error.hpp"

namespace bps {

namespace {

constexpr std::size_t kBodyLineWidth = 64;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

void write_sequence(std::ostream& out, const SequenceFile& file) {
  for (const auto& [key, value] : file.metadata) out << "# " << key << '=' << value << '\n';
  const auto body = file.sequence.to_string();
  for (std::size_t i = 0; i < body.size(); i += kBodyLineWidth) {
    out << body.substr(i, kBodyLineWidth) << '\n';
  }
}

SequenceFile read_sequence(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::uint8_t> bits;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') {
      if (!bits.empty()) {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line_no) + ": metadata after sequence body");
      }
      const auto entry = trim(std::string_view(line).substr(1));
      const auto eq = entry.find('=');
      if (eq != std::string::npos) {
        metadata.emplace_back(trim(std::string_view(entry).substr(0, eq)),
                              trim(std::string_view(entry).substr(eq + 1)));
      }
      continue;
    }
    for (char c : line) {
      if (c == '0' || c == '1') {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c != '\r' && c != ' ' && c != '\t') {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                          ": unexpected character '" + c + "'");
      }
    }
  }
  if (bits.empty()) throw Error(ErrorKind::Parse, "sequence body is empty");

  std::string label;
  for (const auto& [key, value] : metadata) {
    if (key == "kind") label = value;
  }
  return {std::move(metadata), BitSequence(std::move(bits), std::move(label))};
}

void write_sequence_file(const std::filesystem::path& path, const SequenceFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  write_sequence(out, file);
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

SequenceFile read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return read_sequence(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace bps
