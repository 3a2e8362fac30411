#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bps/bit_sequence.hpp"
#include "bps/primes.hpp"
#include "bps/sequences.hpp"

namespace bps {

using BigInt = boost::multiprecision::cpp_int;

// Toy attack bounds. With n <= 24 and at most 3 added shifts the full
// hypothesis space is pi(24) * (C(23,1) + C(23,2) + C(23,3)) = 18 423.
inline constexpr std::size_t kMaxAttackLength = 24;
inline constexpr std::int64_t kMaxAttackShifts = 3;

struct SearchSpaceEstimate {
  double log10_paper_formula = 0.0;
  double log10_consistent_formula = 0.0;
  std::optional<BigInt> exact_count;
  std::int64_t n = 0;
  std::int64_t l_max = 0;
};

struct Hypothesis {
  std::int64_t q = 0;
  ShiftSet shifts{std::vector<std::int64_t>{0}};

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct AttackResult {
  std::vector<Hypothesis> consistent_hypotheses;  // sorted by q, then shifts
  BigInt hypotheses_tested = 0;
  std::size_t target_length = 0;
};

/// log10 of N^2/(2 ln N) * N^(N/ln N), evaluated in the log domain.
double search_space_log10_paper(std::int64_t n);

/// log10 of (N/ln N) * (1/2 ln N) * N^(1/2 ln N) = log10(N/2) + (1/2 ln N) log10 N.
double search_space_log10_consistent(std::int64_t n);

/// pi(n) * sum_{L=1..l_max} C(n-1, L).
BigInt exact_hypothesis_count(std::int64_t n, std::int64_t l_max,
                              const PrimeTable& table);

/// Both estimates, plus the exact count when n <= kMaxAttackLength.
SearchSpaceEstimate estimate_search_space(std::int64_t n, std::int64_t l_max,
                                          const PrimeTable& table);

/// The candidate moduli an attacker enumerates for a length-n observation:
/// the pi(n) smallest primes greater than n, i.e. the primes whose D-sequence
/// period can exceed the observed window.
std::vector<std::int64_t> attack_candidate_primes(std::size_t n,
                                                  const PrimeTable& table);

/// Enumerates every (q, shift set) hypothesis with 1..l_max added shifts and
/// keeps the ones whose hardened sequence equals `observed`.
AttackResult brute_force_attack(const BitSequence& observed, std::int64_t l_max,
                                const PrimeTable& table);

}  // namespace bps
