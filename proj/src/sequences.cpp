#include "bps/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "bps/error.hpp"

namespace bps {

namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

void require_odd_prime(std::int64_t q, const PrimeTable* table) {
  if (q < 3 || q % 2 == 0) {
    throw Error(ErrorKind::InvalidModulus,
                "modulus must be an odd prime, got " + std::to_string(q));
  }
  bool prime = true;
  if (table && q <= table->limit()) {
    prime = table->is_prime(q);
  } else {
    for (std::int64_t d = 3; d * d <= q; d += 2) {
      if (q % d == 0) {
        prime = false;
        break;
      }
    }
  }
  if (!prime) {
    throw Error(ErrorKind::InvalidModulus, "modulus " + std::to_string(q) + " is not prime");
  }
}

}  // namespace

ShiftSet::ShiftSet(std::vector<std::int64_t> shifts) : shifts_(std::move(shifts)) {
  std::sort(shifts_.begin(), shifts_.end());
  if (shifts_.empty() || shifts_.front() != 0) {
    throw Error(ErrorKind::InvalidShiftSet,
                "shift set must contain the unshifted offset 0 and no negatives: (" +
                    join(shifts_) + ")");
  }
  if (std::adjacent_find(shifts_.begin(), shifts_.end()) != shifts_.end()) {
    throw Error(ErrorKind::InvalidShiftSet,
                "shift set has duplicate offsets: (" + join(shifts_) + ")");
  }
}

std::string ShiftSet::to_string() const { return join(shifts_); }

BitSequence d_sequence(const DSequenceSpec& spec, const PrimeTable& table) {
  require_odd_prime(spec.q, &table);
  if (spec.q > table.limit()) {
    throw Error(ErrorKind::OutOfRange, "modulus " + std::to_string(spec.q) +
                                           " exceeds prime table limit");
  }
  if (spec.length < 1) {
    throw Error(ErrorKind::InvalidArgument, "D-sequence length must be >= 1");
  }
  std::vector<std::uint8_t> bits(spec.length);
  std::int64_t residue = 1;
  for (auto& bit : bits) {
    residue = (residue * 2) % spec.q;
    bit = static_cast<std::uint8_t>(residue & 1);
  }
  return BitSequence(std::move(bits), "dseq q=" + std::to_string(spec.q));
}

std::int64_t d_sequence_period(std::int64_t q) {
  require_odd_prime(q, nullptr);
  std::int64_t residue = 2 % q;
  std::int64_t t = 1;
  while (residue != 1) {
    residue = (residue * 2) % q;
    ++t;
  }
  return t;
}

BitSequence binary_primes_sequence(std::int64_t n, const ShiftSet& shifts,
                                   const PrimeTable& table) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "binary primes sequence length must be >= 2, got " + std::to_string(n));
  }
  if (n > table.limit()) {
    throw Error(ErrorKind::OutOfRange, "length " + std::to_string(n) +
                                           " exceeds prime table limit " +
                                           std::to_string(table.limit()));
  }
  if (shifts.max_shift() >= n) {
    throw Error(ErrorKind::ShiftOutOfRange,
                "shift " + std::to_string(shifts.max_shift()) +
                    " must be smaller than the length " + std::to_string(n));
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  for (std::int64_t a : shifts.values()) {
    for (std::int64_t k = a + 1; k <= n; ++k) {
      bits[static_cast<std::size_t>(k - 1)] ^= static_cast<std::uint8_t>(prime_indicator(k - a, table));
    }
  }
  return BitSequence(std::move(bits),
                     "bps n=" + std::to_string(n) + " shifts=" + shifts.to_string());
}

BitSequence harden(const BitSequence& pn, const BitSequence& bps) {
  if (pn.size() != bps.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "cannot combine sequences of length " + std::to_string(pn.size()) +
                    " and " + std::to_string(bps.size()));
  }
  std::vector<std::uint8_t> bits(pn.size());
  auto a = pn.bits();
  auto b = bps.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a[i] ^ b[i];
  return BitSequence(std::move(bits), "hardened(" + pn.label() + ", " + bps.label() + ")");
}

std::optional<ShiftStrategy> parse_shift_strategy(std::string_view name) {
  if (name == "explicit") return ShiftStrategy::Explicit;
  if (name == "uniform-random") return ShiftStrategy::UniformRandom;
  if (name == "evenly-spaced") return ShiftStrategy::EvenlySpaced;
  return std::nullopt;
}

ShiftSet select_shifts(std::int64_t n, std::int64_t count, ShiftStrategy strategy,
                       std::optional<std::uint64_t> seed,
                       const std::vector<std::int64_t>& explicit_values) {
  if (count < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "at least one added shift is required, got " + std::to_string(count));
  }
  if (count > n - 1) {
    throw Error(ErrorKind::TooManyShifts,
                std::to_string(count) + " added shifts do not fit in 1.." +
                    std::to_string(n - 1));
  }

  switch (strategy) {
    case ShiftStrategy::Explicit: {
      if (explicit_values.empty()) {
        throw Error(ErrorKind::InvalidArgument, "explicit strategy requires shift values");
      }
      ShiftSet set(explicit_values);
      if (static_cast<std::int64_t>(set.added_count()) != count) {
        throw Error(ErrorKind::InvalidShiftSet,
                    "expected " + std::to_string(count) + " added shifts, got (" +
                        set.to_string() + ")");
      }
      if (set.max_shift() >= n) {
        throw Error(ErrorKind::InvalidShiftSet,
                    "shift " + std::to_string(set.max_shift()) + " must be smaller than " +
                        std::to_string(n));
      }
      return set;
    }
    case ShiftStrategy::UniformRandom: {
      std::mt19937_64 engine(seed ? *seed : std::random_device{}());
      std::uniform_int_distribution<std::int64_t> draw(1, n - 1);
      std::set<std::int64_t> chosen{0};
      while (static_cast<std::int64_t>(chosen.size()) < count + 1) chosen.insert(draw(engine));
      return ShiftSet({chosen.begin(), chosen.end()});
    }
    case ShiftStrategy::EvenlySpaced: {
      std::set<std::int64_t> chosen{0};
      for (std::int64_t i = 1; i <= count; ++i) {
        auto v = static_cast<std::int64_t>(
            std::round(static_cast<double>(i) * static_cast<double>(n) /
                       static_cast<double>(count + 1)));
        // Probe rightward, wrapping inside 1..n-1, until a free offset turns up.
        while (chosen.contains(v)) v = v + 1 > n - 1 ? 1 : v + 1;
        chosen.insert(v);
      }
      return ShiftSet({chosen.begin(), chosen.end()});
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown shift strategy");
}

}  // namespace bps
