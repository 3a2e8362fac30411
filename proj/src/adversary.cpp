#include "bps/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "bps/error.hpp"

namespace bps {

namespace {

void require_n_at_least_3(std::int64_t n) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "search space is defined for n >= 3, got " + std::to_string(n));
  }
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// Calls visit(shifts) for every shift set with exactly `added` offsets drawn
// from 1..n-1, in lexicographic order.
template <typename Visit>
void for_each_shift_set(std::int64_t n, std::int64_t added, Visit&& visit) {
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(added) + 1);
  offsets[0] = 0;
  for (std::int64_t i = 1; i <= added; ++i) offsets[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(offsets);
    // Advance the rightmost offset that still has room.
    auto i = static_cast<std::size_t>(added);
    while (i >= 1 && offsets[i] == n - 1 - (added - static_cast<std::int64_t>(i))) --i;
    if (i == 0) return;
    ++offsets[i];
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(added); ++j) {
      offsets[j] = offsets[j - 1] + 1;
    }
  }
}

}  // namespace

double search_space_log10_paper(std::int64_t n) {
  require_n_at_least_3(n);
  const auto x = static_cast<double>(n);
  const double ln = std::log(x);
  return std::log10(x * x / (2.0 * ln)) + (x / ln) * std::log10(x);
}

double search_space_log10_consistent(std::int64_t n) {
  require_n_at_least_3(n);
  const auto x = static_cast<double>(n);
  return std::log10(x / 2.0) + 0.5 * std::log(x) * std::log10(x);
}

BigInt exact_hypothesis_count(std::int64_t n, std::int64_t l_max, const PrimeTable& table) {
  require_n_at_least_3(n);
  if (l_max < 1 || l_max > n - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "l_max must lie in 1.." + std::to_string(n - 1) + ", got " +
                    std::to_string(l_max));
  }
  BigInt shift_sets = 0;
  for (std::int64_t l = 1; l <= l_max; ++l) shift_sets += binomial(n - 1, l);
  return BigInt(count_primes(n, table)) * shift_sets;
}

SearchSpaceEstimate estimate_search_space(std::int64_t n, std::int64_t l_max,
                                          const PrimeTable& table) {
  SearchSpaceEstimate est;
  est.n = n;
  est.l_max = l_max;
  est.log10_paper_formula = search_space_log10_paper(n);
  est.log10_consistent_formula = search_space_log10_consistent(n);
  if (n <= static_cast<std::int64_t>(kMaxAttackLength)) {
    est.exact_count = exact_hypothesis_count(n, l_max, table);
  }
  return est;
}

std::vector<std::int64_t> attack_candidate_primes(std::size_t n, const PrimeTable& table) {
  const auto len = static_cast<std::int64_t>(n);
  const auto wanted = static_cast<std::size_t>(count_primes(len, table));
  std::vector<std::int64_t> out;
  for (std::int64_t k = len + 1; out.size() < wanted; ++k) {
    if (table.is_prime(k)) out.push_back(k);
  }
  return out;
}

AttackResult brute_force_attack(const BitSequence& observed, std::int64_t l_max,
                                const PrimeTable& table) {
  const std::size_t n = observed.size();
  if (n > kMaxAttackLength || l_max > kMaxAttackShifts) {
    throw Error(ErrorKind::InstanceTooLarge,
                "toy attack is limited to length <= " + std::to_string(kMaxAttackLength) +
                    " and l_max <= " + std::to_string(kMaxAttackShifts) + " (got length " +
                    std::to_string(n) + ", l_max " + std::to_string(l_max) + ")");
  }
  const auto len = static_cast<std::int64_t>(n);
  if (len < 3 || l_max < 1 || l_max > len - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "attack needs length >= 3 and 1 <= l_max <= length-1");
  }

  std::vector<std::uint8_t> indicator(n + 1, 0);  // indicator[k] = b(k)
  for (std::int64_t k = 1; k <= len; ++k) {
    indicator[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(prime_indicator(k, table));
  }
  const auto target = observed.bits();

  struct Partial {
    std::vector<Hypothesis> matches;
    std::uint64_t tested = 0;
  };

  // Each candidate modulus is an independent slice of the search space.
  auto search_modulus = [&](std::int64_t q) {
    Partial part;
    const auto stream = d_sequence({q, n}, table);
    const auto a = stream.bits();
    std::vector<std::uint8_t> candidate(n);
    for (std::int64_t added = 1; added <= l_max; ++added) {
      for_each_shift_set(len, added, [&](const std::vector<std::int64_t>& offsets) {
        ++part.tested;
        std::copy(a.begin(), a.end(), candidate.begin());
        for (std::int64_t shift : offsets) {
          for (std::int64_t k = shift + 1; k <= len; ++k) {
            candidate[static_cast<std::size_t>(k - 1)] ^= indicator[static_cast<std::size_t>(k - shift)];
          }
        }
        if (std::equal(candidate.begin(), candidate.end(), target.begin())) {
          part.matches.push_back({q, ShiftSet(offsets)});
        }
      });
    }
    return part;
  };

  const auto moduli = attack_candidate_primes(n, table);
  std::vector<std::future<Partial>> pending;
  pending.reserve(moduli.size());
  for (auto q : moduli) pending.push_back(std::async(std::launch::async, search_modulus, q));

  AttackResult result;
  result.target_length = n;
  for (auto& f : pending) {
    auto part = f.get();
    result.hypotheses_tested += part.tested;
    for (auto& h : part.matches) result.consistent_hypotheses.push_back(std::move(h));
  }
  std::sort(result.consistent_hypotheses.begin(), result.consistent_hypotheses.end(),
            [](const Hypothesis& x, const Hypothesis& y) {
              return x.q != y.q ? x.q < y.q : x.shifts < y.shifts;
            });
  return result;
}

}  // namespace bps
