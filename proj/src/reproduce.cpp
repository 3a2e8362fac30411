#include "bps/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "bps/error.hpp"
#include "bps/report.hpp"

namespace bps::repro {

namespace {

constexpr std::array<std::string_view, 8> kTargetIds = {
    "table1", "table2", "fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};

// Rows as printed for n = 10: the unshifted b(k), each right-shifted copy,
// then the sum row. Table 2's sum row is reproduced verbatim, including the
// cell at position 9 that disagrees with the XOR of its own input rows.
struct PrintedRow {
  std::string_view label;
  std::string_view bits;
  std::size_t ones;
};
constexpr std::array<PrintedRow, 3> kTable1 = {{
    {"a0=0", "0110101000", 4},
    {"a1=1", "0011010100", 4},
    {"sum", "0101111100", 6},
}};
constexpr std::array<PrintedRow, 4> kTable2 = {{
    {"a0=0", "0110101000", 4},
    {"a1=1", "0011010100", 4},
    {"a2=2", "0001101010", 4},
    {"sum", "0100010100", 3},
}};

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string field_name(const CorrelationConvention& conv) {
  std::string name = std::string(to_string(conv.mapping)) + "_" +
                     std::string(to_string(conv.normalization));
  for (auto& c : name) {
    if (c == '-') c = '_';
  }
  return name;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

Output run_table(int added_shifts, const PrimeTable& table) {
  Output out;
  out.csv = "row,label,computed,printed,computed_ones,printed_ones,match_paper,mismatch_positions\n";
  const auto rows = construction_table(added_shifts, table);
  std::size_t mismatched = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string positions;
    for (auto p : r.mismatch_positions) {
      if (!positions.empty()) positions.push_back(';');
      positions += std::to_string(p);
    }
    out.csv += std::to_string(i + 1) + "," + csv_field(r.label) + "," + r.computed + "," +
               r.printed + "," + std::to_string(r.computed_ones) + "," +
               std::to_string(r.printed_ones) + "," + (r.matches() ? "true" : "false") + "," +
               positions + "\n";
    if (!r.matches()) {
      ++mismatched;
      out.summary.push_back("row " + r.label + ": computed " + r.computed + " (" +
                            std::to_string(r.computed_ones) + " ones), printed " + r.printed +
                            " (" + std::to_string(r.printed_ones) + " ones), differs at " +
                            (positions.empty() ? std::string("count only") : "position " + positions));
    }
  }
  out.summary.insert(out.summary.begin(),
                     std::to_string(rows.size() - mismatched) + "/" + std::to_string(rows.size()) +
                         " rows match the printed table");
  return out;
}

Output run_fig1() {
  Output out;
  out.csv = "n,shifts,half_ln_n\n";
  for (const auto& p : shift_count_curve()) {
    out.csv += std::to_string(p.n) + "," + std::to_string(p.shifts) + "," +
               format_real(0.5 * std::log(static_cast<double>(p.n))) + "\n";
  }
  out.summary.push_back("shift count curve written for n = 10 .. 1000000");
  return out;
}

Output run_fig2(const PrimeTable& table, CorrelationConvention conv) {
  const auto seq = binary_primes_sequence(997, fig5_shifts(), table);
  Output out;
  out.csv = correlation_csv(autocorrelation(seq, conv));
  out.summary.push_back("B(997; " + fig5_shifts().to_string() +
                        ") off-peak versus reference " + fixed(kReferenceOffPeak997, 4) + ":");
  double best = INFINITY;
  std::string best_name;
  for (const auto& c : convention_sweep(seq)) {
    const double d_max = std::abs(c.stats.max_abs - kReferenceOffPeak997);
    const double d_mean = std::abs(c.stats.mean_abs - kReferenceOffPeak997);
    out.summary.push_back("  " + c.convention.to_string() + ": max " + fixed(c.stats.max_abs) +
                          " (distance " + fixed(d_max) + "), mean " + fixed(c.stats.mean_abs) +
                          " (distance " + fixed(d_mean) + ")");
    if (d_max < best) best = d_max, best_name = c.convention.to_string() + " max";
    if (d_mean < best) best = d_mean, best_name = c.convention.to_string() + " mean";
  }
  out.summary.push_back("  closest: " + best_name + " at distance " + fixed(best));
  return out;
}

Output run_fig3(const PrimeTable& table) {
  Output out;
  out.csv = "n";
  for (const auto& c : all_conventions()) out.csv += ",R_" + field_name(c);
  out.csv += "\n";
  const auto curve = randomness_curve(table);
  for (const auto& point : curve) {
    out.csv += std::to_string(point.n);
    for (const auto& c : point.by_convention) out.csv += "," + format_real(c.randomness);
    out.csv += "\n";
  }
  for (const auto& point : curve) {
    if (point.n != 199) continue;
    out.summary.push_back("R of B(199; " + fig4_shifts().to_string() + ") versus reference " +
                          fixed(kReferenceRandomness199, 4) + " (tolerance 0.010):");
    std::string matching;
    for (const auto& c : point.by_convention) {
      const double d = std::abs(c.randomness - kReferenceRandomness199);
      out.summary.push_back("  " + c.convention.to_string() + ": " + fixed(c.randomness) +
                            " (distance " + fixed(d) + ")");
      if (d <= 0.010 && matching.empty()) matching = c.convention.to_string();
    }
    out.summary.push_back("  matching convention: " + (matching.empty() ? "none" : matching));
  }
  return out;
}

Output run_hardened(std::int64_t q, const ShiftSet& shifts, const PrimeTable& table,
                    CorrelationConvention conv) {
  const auto p = hardened_experiment(q, shifts, table);
  const auto a = d_sequence({q, static_cast<std::size_t>(q)}, table);
  Output out;
  const auto corr = autocorrelation(p, conv);
  out.csv = correlation_csv(corr);
  const double p_mean = off_peak_stats(corr).mean_abs;
  const double a_mean = off_peak_stats(autocorrelation(a, conv)).mean_abs;
  out.summary.push_back("P(k) for q=" + std::to_string(q) + ", shifts " + shifts.to_string() +
                        " [" + conv.to_string() + "]: mean off-peak " + fixed(p_mean) +
                        ", D-sequence alone " + fixed(a_mean) +
                        (p_mean <= a_mean ? " (flatter)" : " (not flatter)"));
  return out;
}

Output run_fig6(const PrimeTable& table, CorrelationConvention conv) {
  Output out;
  out.csv = "prime,shifts,mean_offpeak_B,mean_offpeak_P\n";
  const auto sweep = off_peak_sweep(table, conv);
  for (const auto& pt : sweep) {
    out.csv += std::to_string(pt.prime) + "," + csv_field(pt.shifts.to_string()) + "," +
               format_real(pt.mean_offpeak_b) + "," + format_real(pt.mean_offpeak_p) + "\n";
  }
  const auto& first = sweep.front();
  const auto& last = sweep.back();
  out.summary.push_back("P(k) mean off-peak: p=" + std::to_string(first.prime) + " " +
                        fixed(first.mean_offpeak_p) + ", p=" + std::to_string(last.prime) + " " +
                        fixed(last.mean_offpeak_p));
  out.summary.push_back(last.mean_offpeak_p < first.mean_offpeak_p
                            ? "off-peak decreases with p"
                            : "off-peak does not decrease with p");
  return out;
}

}  // namespace

std::optional<Target> parse_target(std::string_view id) {
  for (std::size_t i = 0; i < kTargetIds.size(); ++i) {
    if (kTargetIds[i] == id) return static_cast<Target>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Target target) noexcept {
  return kTargetIds[static_cast<std::size_t>(target)];
}

std::vector<Target> all_targets() {
  std::vector<Target> out;
  for (std::size_t i = 0; i < kTargetIds.size(); ++i) out.push_back(static_cast<Target>(i));
  return out;
}

ShiftSet fig4_shifts() { return ShiftSet({0, 7, 11, 22}); }
ShiftSet fig5_shifts() { return ShiftSet({0, 11, 77, 111}); }

std::vector<std::int64_t> fig3_lengths() { return {53, 101, 199, 401, 797, 997}; }

std::vector<TableRow> construction_table(int added_shifts, const PrimeTable& table) {
  if (added_shifts != 1 && added_shifts != 2) {
    throw Error(ErrorKind::InvalidArgument, "construction tables exist for 1 or 2 shifts");
  }
  constexpr std::int64_t n = 10;
  std::vector<PrintedRow> printed;
  if (added_shifts == 1) {
    printed.assign(kTable1.begin(), kTable1.end());
  } else {
    printed.assign(kTable2.begin(), kTable2.end());
  }

  std::vector<std::string> computed;
  std::vector<std::int64_t> offsets;
  for (std::int64_t a = 0; a <= added_shifts; ++a) {
    offsets.push_back(a);
    std::string row;
    for (std::int64_t k = 1; k <= n; ++k) {
      row.push_back(static_cast<char>('0' + prime_indicator(k - a, table)));
    }
    computed.push_back(row);
  }
  computed.push_back(binary_primes_sequence(n, ShiftSet(offsets), table).to_string());

  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    TableRow r;
    r.label = std::string(printed[i].label);
    r.computed = computed[i];
    r.printed = std::string(printed[i].bits);
    r.computed_ones = static_cast<std::size_t>(std::count(r.computed.begin(), r.computed.end(), '1'));
    r.printed_ones = printed[i].ones;
    for (std::size_t pos = 0; pos < r.computed.size(); ++pos) {
      if (r.computed[pos] != r.printed[pos]) r.mismatch_positions.push_back(pos + 1);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ShiftCountPoint> shift_count_curve() {
  std::vector<ShiftCountPoint> out;
  for (std::int64_t decade = 10; decade <= 1'000'000; decade *= 10) {
    for (std::int64_t step : {1, 2, 5}) {
      const auto n = decade * step;
      if (n > 1'000'000) break;
      out.push_back({n, recommended_shift_count(n)});
    }
  }
  return out;
}

std::vector<ConventionOffPeak> convention_sweep(const BitSequence& seq) {
  std::vector<ConventionOffPeak> out;
  for (const auto& conv : all_conventions()) {
    const auto corr = autocorrelation(seq, conv);
    out.push_back({conv, off_peak_stats(corr), randomness_measure(corr)});
  }
  return out;
}

std::vector<RandomnessPoint> randomness_curve(const PrimeTable& table) {
  std::vector<RandomnessPoint> out;
  for (auto n : fig3_lengths()) {
    out.push_back({n, convention_sweep(binary_primes_sequence(n, fig4_shifts(), table))});
  }
  return out;
}

BitSequence hardened_experiment(std::int64_t q, const ShiftSet& shifts, const PrimeTable& table) {
  const auto a = d_sequence({q, static_cast<std::size_t>(q)}, table);
  const auto b = binary_primes_sequence(q, shifts, table);
  return harden(a, b);
}

std::vector<OffPeakPoint> off_peak_sweep(const PrimeTable& table, CorrelationConvention conv) {
  std::vector<OffPeakPoint> out;
  for (auto p : table.primes_in(40, 650)) {
    const auto shifts =
        select_shifts(p, recommended_shift_count(p), ShiftStrategy::EvenlySpaced);
    const auto b = binary_primes_sequence(p, shifts, table);
    const auto hardened = harden(d_sequence({p, static_cast<std::size_t>(p)}, table), b);
    out.push_back({p, shifts, off_peak_stats(autocorrelation(b, conv)).mean_abs,
                   off_peak_stats(autocorrelation(hardened, conv)).mean_abs});
  }
  return out;
}

Output run(Target target, const PrimeTable& table, CorrelationConvention conv) {
  switch (target) {
    case Target::Table1: return run_table(1, table);
    case Target::Table2: return run_table(2, table);
    case Target::Fig1: return run_fig1();
    case Target::Fig2: return run_fig2(table, conv);
    case Target::Fig3: return run_fig3(table);
    case Target::Fig4: return run_hardened(199, fig4_shifts(), table, conv);
    case Target::Fig5: return run_hardened(997, fig5_shifts(), table, conv);
    case Target::Fig6: return run_fig6(table, conv);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reproduction target");
}

}  // namespace bps::repro
