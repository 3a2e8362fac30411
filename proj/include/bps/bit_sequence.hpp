#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bps {

/// A finite binary sequence. Positions are 1-based in the domain model
/// (position 1 is bits()[0]); `label` records where the sequence came from.
class BitSequence {
 public:
  /// Throws InvalidArgument for an empty vector or any value other than 0/1.
  explicit BitSequence(std::vector<std::uint8_t> bits, std::string label = {});

  /// Parses a string of '0'/'1' characters.
  static BitSequence from_string(std::string_view text, std::string label = {});

  std::size_t size() const noexcept { return bits_.size(); }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  const std::string& label() const noexcept { return label_; }

  /// 1-based access; throws OutOfRange outside 1..size().
  int at(std::size_t position) const;

  std::size_t ones() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitSequence& a, const BitSequence& b) noexcept {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::string label_;
};

}  // namespace bps
