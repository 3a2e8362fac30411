#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bps/analysis.hpp"
#include "bps/primes.hpp"
#include "bps/sequences.hpp"

namespace bps::repro {

enum class Target { Table1, Table2, Fig1, Fig2, Fig3, Fig4, Fig5, Fig6 };

std::optional<Target> parse_target(std::string_view id);
std::string_view to_string(Target target) noexcept;
std::vector<Target> all_targets();

// Reference values the reproduction runs are compared against.
inline constexpr double kReferenceRandomness199 = 0.9949;
inline constexpr double kReferenceOffPeak997 = 0.3133;

/// Shift sets of the reference autocorrelation experiments.
ShiftSet fig4_shifts();  // (0, 7, 11, 22), used with q = 199
ShiftSet fig5_shifts();  // (0, 11, 77, 111), used with q = 997

/// Lengths swept for the randomness-versus-length curve.
std::vector<std::int64_t> fig3_lengths();

struct TableRow {
  std::string label;
  std::string computed;
  std::string printed;
  std::size_t computed_ones = 0;
  std::size_t printed_ones = 0;
  std::vector<std::size_t> mismatch_positions;  // 1-based

  bool matches() const {
    return mismatch_positions.empty() && computed_ones == printed_ones;
  }
};

/// Rows of the n = 10 construction tables: each shifted copy of b(k), then
/// the XOR sum, side by side with the printed values. `added_shifts` is 1
/// (shift set {0,1}) or 2 (shift set {0,1,2}).
std::vector<TableRow> construction_table(int added_shifts, const PrimeTable& table);

struct ShiftCountPoint {
  std::int64_t n;
  int shifts;
};
std::vector<ShiftCountPoint> shift_count_curve();

struct ConventionOffPeak {
  CorrelationConvention convention;
  OffPeakStats stats;
  double randomness = 0.0;
};

/// Off-peak statistics of one sequence under all four conventions.
std::vector<ConventionOffPeak> convention_sweep(const BitSequence& seq);

struct RandomnessPoint {
  std::int64_t n;
  std::vector<ConventionOffPeak> by_convention;  // all_conventions() order
};
std::vector<RandomnessPoint> randomness_curve(const PrimeTable& table);

/// P(k) = B(k) XOR a(k) with the D-sequence emitted for i = 1..q.
BitSequence hardened_experiment(std::int64_t q, const ShiftSet& shifts,
                                const PrimeTable& table);

struct OffPeakPoint {
  std::int64_t prime;
  ShiftSet shifts;
  double mean_offpeak_b;
  double mean_offpeak_p;
};

/// Every prime in [40, 650] with evenly spaced shifts at the recommended count.
std::vector<OffPeakPoint> off_peak_sweep(const PrimeTable& table,
                                         CorrelationConvention conv = {});

struct Output {
  std::string csv;
  std::vector<std::string> summary;  // human-readable lines for stdout
};

/// Runs one target end to end. `conv` selects the convention for the
/// single-series targets (fig2, fig4, fig5, fig6).
Output run(Target target, const PrimeTable& table, CorrelationConvention conv = {});

}  // namespace bps::repro
