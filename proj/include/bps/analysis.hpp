#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bps/bit_sequence.hpp"

namespace bps {

enum class SymbolMapping { Raw01, Bipolar };
enum class Normalization { ByN, ByPeak };

struct CorrelationConvention {
  SymbolMapping mapping = SymbolMapping::Bipolar;
  Normalization normalization = Normalization::ByN;

  std::string to_string() const;  // e.g. "bipolar/by-n"
  friend bool operator==(const CorrelationConvention&,
                         const CorrelationConvention&) = default;
};

std::string_view to_string(SymbolMapping mapping) noexcept;
std::string_view to_string(Normalization normalization) noexcept;
std::optional<SymbolMapping> parse_mapping(std::string_view name);
std::optional<Normalization> parse_normalization(std::string_view name);

/// The four mapping/normalization combinations, bipolar/by-n first.
std::vector<CorrelationConvention> all_conventions();

struct CorrelationSeries {
  std::vector<double> values;  // lags 0..n-1
  CorrelationConvention convention;
  std::size_t n = 0;
};

struct OffPeakStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

struct AnalysisReport {
  double randomness = 0.0;
  double max_offpeak = 0.0;
  double mean_offpeak = 0.0;
  double ones_fraction = 0.0;
  CorrelationConvention convention;
  std::string sequence_label;
};

/// Periodic autocorrelation over exactly N terms per lag with cyclic index
/// wrap. Lag sums are computed with word-wide XOR/AND and popcount, so every
/// value is an exact integer count divided by N (and by the lag-0 value under
/// by-peak).
///
/// Throws SequenceTooShort for length < 2, and InvalidArgument for a by-peak
/// request whose lag-0 value is zero (an all-zero raw01 sequence).
CorrelationSeries autocorrelation(const BitSequence& seq,
                                  CorrelationConvention conv = {});

/// 1 - mean |c(n)| over n = 1..N-1.
double randomness_measure(const CorrelationSeries& corr);

OffPeakStats off_peak_stats(const CorrelationSeries& corr);

double balance(const BitSequence& seq);

AnalysisReport analyze(const BitSequence& seq, CorrelationConvention conv = {});

}  // namespace bps
