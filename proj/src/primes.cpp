#include "bps/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bps/error.hpp"

namespace bps {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "prime table limit must be >= 2, got " + std::to_string(limit));
  }
  if (limit > kDefaultPrimeLimit) {
    throw Error(ErrorKind::InvalidArgument,
                "prime table limit " + std::to_string(limit) + " exceeds " +
                    std::to_string(kDefaultPrimeLimit));
  }
  const auto size = static_cast<std::size_t>(limit) + 1;
  composite_.assign(size, false);
  composite_[0] = composite_[1] = true;
  for (std::size_t i = 2; i * i < size; ++i) {
    if (composite_[i]) continue;
    for (std::size_t j = i * i; j < size; j += i) composite_[j] = true;
  }
  prefix_count_.resize(size);
  std::uint32_t running = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (!composite_[i]) ++running;
    prefix_count_[i] = running;
  }
}

bool PrimeTable::is_prime(std::int64_t k) const {
  if (k < 2) return false;
  if (k > limit_) {
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(k) +
                                           " exceeds prime table limit " +
                                           std::to_string(limit_));
  }
  return !composite_[static_cast<std::size_t>(k)];
}

std::int64_t PrimeTable::count_upto(std::int64_t n) const {
  if (n > limit_) {
    throw Error(ErrorKind::OutOfRange, "count bound " + std::to_string(n) +
                                           " exceeds prime table limit " +
                                           std::to_string(limit_));
  }
  if (n < 2) return 0;
  return prefix_count_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> PrimeTable::primes_in(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = std::max<std::int64_t>(lo, 2); k <= std::min(hi, limit_); ++k) {
    if (!composite_[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

PrimeTable sieve_primes(std::int64_t limit) { return PrimeTable(limit); }

int prime_indicator(std::int64_t k, const PrimeTable& table) {
  return table.is_prime(k) ? 1 : 0;
}

std::int64_t count_primes(std::int64_t n, const PrimeTable& table) {
  return table.count_upto(n);
}

double pnt_estimate(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "prime number theorem estimate needs n >= 2, got " + std::to_string(n));
  }
  const auto x = static_cast<double>(n);
  return x / std::log(x);
}

int recommended_shift_count(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "shift count needs n >= 2, got " + std::to_string(n));
  }
  // std::round is half away from zero.
  const double half_log = 0.5 * std::log(static_cast<double>(n));
  return std::max(1, static_cast<int>(std::round(half_log)));
}

}  // namespace bps
