#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bps/bit_sequence.hpp"
#include "bps/primes.hpp"

namespace bps {

/// Ordered, distinct shift offsets a_0 = 0 < a_1 < ... < a_L. L counts the
/// added (non-zero) shifts, so a set like (0, 7, 11, 22) has L = 3.
class ShiftSet {
 public:
  /// Values are sorted on construction. Throws InvalidShiftSet when 0 is
  /// missing, a value repeats, or a value is negative.
  explicit ShiftSet(std::vector<std::int64_t> shifts);

  const std::vector<std::int64_t>& values() const noexcept { return shifts_; }
  std::size_t added_count() const noexcept { return shifts_.size() - 1; }
  std::int64_t max_shift() const noexcept { return shifts_.back(); }
  std::string to_string() const;  // "0,7,11,22"

  friend bool operator==(const ShiftSet&, const ShiftSet&) = default;
  friend auto operator<=>(const ShiftSet&, const ShiftSet&) = default;

 private:
  std::vector<std::int64_t> shifts_;
};

struct DSequenceSpec {
  std::int64_t q;
  std::size_t length;
};

/// a(i) = (2^i mod q) mod 2 for i = 1..length, by iterated doubling.
BitSequence d_sequence(const DSequenceSpec& spec, const PrimeTable& table);

/// Multiplicative order of 2 modulo the odd prime q.
std::int64_t d_sequence_period(std::int64_t q);

/// B(k) = XOR over the shift set of b(k - a_i), k = 1..n, zero-filled for
/// k - a_i < 1.
BitSequence binary_primes_sequence(std::int64_t n, const ShiftSet& shifts,
                                   const PrimeTable& table);

/// Positionwise XOR of a pseudorandom sequence and a binary primes sequence.
BitSequence harden(const BitSequence& pn, const BitSequence& bps);

enum class ShiftStrategy { Explicit, UniformRandom, EvenlySpaced };

std::optional<ShiftStrategy> parse_shift_strategy(std::string_view name);

ShiftSet select_shifts(std::int64_t n, std::int64_t count, ShiftStrategy strategy,
                       std::optional<std::uint64_t> seed = std::nullopt,
                       const std::vector<std::int64_t>& explicit_values = {});

}  // namespace bps
