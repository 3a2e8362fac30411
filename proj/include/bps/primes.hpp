#pragma once

#include <cstdint>
#include <vector>

namespace bps {

inline constexpr std::int64_t kDefaultPrimeLimit = std::int64_t{1} << 24;

/// Immutable primality bitmap over 0..limit, built with a sieve of
/// Eratosthenes. Also keeps a running prefix count so pi(n) is O(1).
class PrimeTable {
 public:
  /// Throws InvalidArgument when limit < 2 or limit exceeds kDefaultPrimeLimit.
  explicit PrimeTable(std::int64_t limit);

  std::int64_t limit() const noexcept { return limit_; }

  /// Precondition-free membership test; values outside 0..limit throw OutOfRange
  /// except negatives, which are never prime.
  bool is_prime(std::int64_t k) const;

  /// Number of primes p <= n.
  std::int64_t count_upto(std::int64_t n) const;

  /// All primes in [lo, hi], ascending. The range is clamped to the table.
  std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) const;

 private:
  std::int64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> prefix_count_;
};

PrimeTable sieve_primes(std::int64_t limit);

/// b(k): 1 at prime positions, 0 elsewhere (including every k < 1).
int prime_indicator(std::int64_t k, const PrimeTable& table);

std::int64_t count_primes(std::int64_t n, const PrimeTable& table);

/// n / ln n.
double pnt_estimate(std::int64_t n);

/// Shifter count from half the natural log of n, rounded half away from zero
/// and floored at 1.
int recommended_shift_count(std::int64_t n);

}  // namespace bps
