#include "bps/bit_sequence.hpp"

#include <algorithm>

#include "bps/error.hpp"

namespace bps {

BitSequence::BitSequence(std::vector<std::uint8_t> bits, std::string label)
    : bits_(std::move(bits)), label_(std::move(label)) {
  if (bits_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "bit sequence must have length >= 1");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw Error(ErrorKind::InvalidArgument, "bit sequence values must be 0 or 1");
  }
}

BitSequence BitSequence::from_string(std::string_view text, std::string label) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("unexpected character '") + c + "' in bit string");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitSequence(std::move(bits), std::move(label));
}

int BitSequence::at(std::size_t position) const {
  if (position < 1 || position > bits_.size()) {
    throw Error(ErrorKind::OutOfRange, "position " + std::to_string(position) +
                                           " outside 1.." + std::to_string(bits_.size()));
  }
  return bits_[position - 1];
}

std::size_t BitSequence::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitSequence::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

}  // namespace bps
