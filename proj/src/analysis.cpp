#include "bps/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "bps/error.hpp"

namespace bps {

namespace {

// Sequence bits packed LSB-first, stored twice back to back so that any
// cyclic rotation can be read as a plain window.
class PackedCycle {
 public:
  explicit PackedCycle(std::span<const std::uint8_t> bits) : n_(bits.size()) {
    words_.assign((2 * n_ + 63) / 64 + 1, 0);
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      if (bits[i % n_]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  // 64 bits starting at `offset` (offset + 64 may run past the used range;
  // the trailing padding word is zero).
  std::uint64_t window(std::size_t offset) const {
    const std::size_t w = offset / 64;
    const unsigned s = offset % 64;
    if (s == 0) return words_[w];
    return (words_[w] >> s) | (words_[w + 1] << (64 - s));
  }

  // Number of positions m in 0..n-1 where op(x[m], x[m+lag]) is set.
  template <typename Op>
  std::int64_t count(std::size_t lag, Op op) const {
    std::int64_t total = 0;
    for (std::size_t m = 0; m < n_; m += 64) {
      std::uint64_t v = op(window(m), window(m + lag));
      const std::size_t live = std::min<std::size_t>(64, n_ - m);
      if (live < 64) v &= (std::uint64_t{1} << live) - 1;
      total += std::popcount(v);
    }
    return total;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

double mean_abs_offpeak(const CorrelationSeries& corr) {
  double sum = 0.0;
  for (std::size_t k = 1; k < corr.n; ++k) sum += std::abs(corr.values[k]);
  return sum / static_cast<double>(corr.n - 1);
}

void require_series(const CorrelationSeries& corr) {
  if (corr.n < 2 || corr.values.size() != corr.n) {
    throw Error(ErrorKind::SequenceTooShort,
                "correlation series needs at least two lags");
  }
}

}  // namespace

std::string_view to_string(SymbolMapping mapping) noexcept {
  return mapping == SymbolMapping::Bipolar ? "bipolar" : "raw01";
}

std::string_view to_string(Normalization normalization) noexcept {
  return normalization == Normalization::ByN ? "by-n" : "by-peak";
}

std::string CorrelationConvention::to_string() const {
  return std::string(bps::to_string(mapping)) + "/" + std::string(bps::to_string(normalization));
}

std::optional<SymbolMapping> parse_mapping(std::string_view name) {
  if (name == "bipolar") return SymbolMapping::Bipolar;
  if (name == "raw01") return SymbolMapping::Raw01;
  return std::nullopt;
}

std::optional<Normalization> parse_normalization(std::string_view name) {
  if (name == "by-n") return Normalization::ByN;
  if (name == "by-peak") return Normalization::ByPeak;
  return std::nullopt;
}

std::vector<CorrelationConvention> all_conventions() {
  return {{SymbolMapping::Bipolar, Normalization::ByN},
          {SymbolMapping::Bipolar, Normalization::ByPeak},
          {SymbolMapping::Raw01, Normalization::ByN},
          {SymbolMapping::Raw01, Normalization::ByPeak}};
}

CorrelationSeries autocorrelation(const BitSequence& seq, CorrelationConvention conv) {
  const std::size_t n = seq.size();
  if (n < 2) {
    throw Error(ErrorKind::SequenceTooShort,
                "autocorrelation needs length >= 2, got " + std::to_string(n));
  }
  const PackedCycle packed(seq.bits());
  const auto len = static_cast<std::int64_t>(n);

  // Integer lag sums: bipolar products are +1 on agreement and -1 otherwise,
  // raw01 products are 1 only where both bits are set.
  std::vector<std::int64_t> sums(n);
  for (std::size_t lag = 0; lag < n; ++lag) {
    if (conv.mapping == SymbolMapping::Bipolar) {
      sums[lag] = len - 2 * packed.count(lag, [](auto a, auto b) { return a ^ b; });
    } else {
      sums[lag] = packed.count(lag, [](auto a, auto b) { return a & b; });
    }
  }

  CorrelationSeries out;
  out.convention = conv;
  out.n = n;
  out.values.resize(n);
  const double denom = static_cast<double>(n);
  for (std::size_t lag = 0; lag < n; ++lag) {
    out.values[lag] = static_cast<double>(sums[lag]) / denom;
  }
  if (conv.normalization == Normalization::ByPeak) {
    const double peak = out.values[0];
    if (peak == 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "by-peak normalization is undefined for a zero lag-0 value");
    }
    for (auto& v : out.values) v /= peak;
  }
  return out;
}

double randomness_measure(const CorrelationSeries& corr) {
  require_series(corr);
  return 1.0 - mean_abs_offpeak(corr);
}

OffPeakStats off_peak_stats(const CorrelationSeries& corr) {
  require_series(corr);
  OffPeakStats stats;
  for (std::size_t k = 1; k < corr.n; ++k) {
    stats.max_abs = std::max(stats.max_abs, std::abs(corr.values[k]));
  }
  stats.mean_abs = mean_abs_offpeak(corr);
  return stats;
}

double balance(const BitSequence& seq) {
  return static_cast<double>(seq.ones()) / static_cast<double>(seq.size());
}

AnalysisReport analyze(const BitSequence& seq, CorrelationConvention conv) {
  const auto corr = autocorrelation(seq, conv);
  const auto stats = off_peak_stats(corr);
  AnalysisReport report;
  report.randomness = randomness_measure(corr);
  report.max_offpeak = stats.max_abs;
  report.mean_offpeak = stats.mean_abs;
  report.ones_fraction = balance(seq);
  report.convention = conv;
  report.sequence_label = seq.label();
  return report;
}

}  // namespace bps
