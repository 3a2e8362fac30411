// Command-line front end: sequence generation, analysis, hardening,
// complexity accounting, the toy attack and the reproduction harness.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bps/adversary.hpp"
#include "bps/analysis.hpp"
#include "bps/error.hpp"
#include "bps/primes.hpp"
#include "bps/report.hpp"
#include "bps/reproduce.hpp"
#include "bps/sequences.hpp"
#include "bps/text_format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(bps::ErrorKind kind) {
  return kind == bps::ErrorKind::Io ? kExitIo : kExitDomain;
}

std::vector<std::int64_t> parse_shift_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--shifts: '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError("--shifts: empty list");
  // The unshifted copy is always part of the sum.
  if (std::find(out.begin(), out.end(), 0) == out.end()) out.insert(out.begin(), 0);
  return out;
}

std::int64_t table_limit_for(std::int64_t n) {
  return std::clamp<std::int64_t>(4 * n + 64, 1024, bps::kDefaultPrimeLimit);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw bps::Error(bps::ErrorKind::Io, "cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw bps::Error(bps::ErrorKind::Io, "failed writing " + out_path);
}

struct ConventionFlags {
  std::string mapping = "bipolar";
  std::string normalization = "by-n";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--convention", mapping, "Symbol mapping before correlating")
        ->check(CLI::IsMember({"bipolar", "raw01"}))
        ->capture_default_str();
    cmd.add_option("--normalize", normalization, "Lag-sum normalization")
        ->check(CLI::IsMember({"by-n", "by-peak"}))
        ->capture_default_str();
  }

  bps::CorrelationConvention get() const {
    return {*bps::parse_mapping(mapping), *bps::parse_normalization(normalization)};
  }
};

struct GenOptions {
  std::string kind;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> len;
  std::string shifts;
  std::string strategy;
  std::optional<std::int64_t> count;
  std::optional<std::uint64_t> seed;
  std::string out;
};

bps::ShiftSet shifts_for(const GenOptions& o, std::int64_t n,
                         std::vector<std::pair<std::string, std::string>>& meta) {
  std::string strategy = o.strategy;
  if (strategy.empty()) strategy = o.shifts.empty() ? "evenly-spaced" : "explicit";
  const auto parsed = *bps::parse_shift_strategy(strategy);
  if (parsed == bps::ShiftStrategy::Explicit) {
    if (o.shifts.empty()) throw UsageError("explicit strategy needs --shifts");
    const auto values = parse_shift_list(o.shifts);
    const bps::ShiftSet set(values);
    if (set.max_shift() >= n) {
      throw bps::Error(bps::ErrorKind::ShiftOutOfRange,
                       "shift " + std::to_string(set.max_shift()) +
                           " must be smaller than the length " + std::to_string(n));
    }
    return set;
  }
  if (!o.shifts.empty()) throw UsageError("--shifts only applies to the explicit strategy");
  const auto count = o.count.value_or(bps::recommended_shift_count(n));
  meta.emplace_back("strategy", strategy);
  if (parsed == bps::ShiftStrategy::UniformRandom) {
    if (!o.seed) throw UsageError("uniform-random strategy needs --seed");
    meta.emplace_back("seed", std::to_string(*o.seed));
  }
  return bps::select_shifts(n, count, parsed, o.seed);
}

int cmd_gen(const GenOptions& o) {
  std::vector<std::pair<std::string, std::string>> meta{{"kind", o.kind}};
  std::optional<bps::BitSequence> seq;

  if (o.kind == "dseq") {
    if (!o.q) throw UsageError("gen dseq needs --q");
    const auto len = o.len.value_or(*o.q);
    if (len < 1) throw UsageError("--len must be >= 1");
    const bps::PrimeTable table(table_limit_for(*o.q));
    seq = bps::d_sequence({*o.q, static_cast<std::size_t>(len)}, table);
    meta.emplace_back("q", std::to_string(*o.q));
    meta.emplace_back("n", std::to_string(len));
  } else if (o.kind == "bps") {
    if (!o.n) throw UsageError("gen bps needs --n");
    const bps::PrimeTable table(table_limit_for(*o.n));
    meta.emplace_back("n", std::to_string(*o.n));
    const auto shifts = shifts_for(o, *o.n, meta);
    meta.emplace_back("shifts", shifts.to_string());
    seq = bps::binary_primes_sequence(*o.n, shifts, table);
  } else {
    if (!o.q) throw UsageError("gen hardened needs --q");
    const auto n = o.n.value_or(*o.q);
    const bps::PrimeTable table(table_limit_for(std::max(n, *o.q)));
    meta.emplace_back("q", std::to_string(*o.q));
    meta.emplace_back("n", std::to_string(n));
    const auto shifts = shifts_for(o, n, meta);
    meta.emplace_back("shifts", shifts.to_string());
    const auto a = bps::d_sequence({*o.q, static_cast<std::size_t>(n)}, table);
    seq = bps::harden(a, bps::binary_primes_sequence(n, shifts, table));
  }

  std::ostringstream text;
  bps::write_sequence(text, {meta, *seq});
  emit(text.str(), o.out);
  return kExitOk;
}

int cmd_analyze(const std::string& in, const ConventionFlags& conv, const std::string& csv_out) {
  const auto file = bps::read_sequence_file(in);
  const auto corr = bps::autocorrelation(file.sequence, conv.get());
  if (!csv_out.empty()) emit(bps::correlation_csv(corr), csv_out);
  std::cout << bps::to_json(bps::analyze(file.sequence, conv.get())).dump(2) << '\n';
  return kExitOk;
}

int cmd_reproduce(const std::string& id, const ConventionFlags& conv, std::string out) {
  const auto target = bps::repro::parse_target(id);
  if (!target) throw UsageError("unknown reproduction target '" + id + "'");
  if (out.empty()) out = id + ".csv";
  const bps::PrimeTable table(4096);
  const auto result = bps::repro::run(*target, table, conv.get());
  emit(result.csv, out);
  std::cout << id << ": wrote " << out << '\n';
  for (const auto& line : result.summary) std::cout << line << '\n';
  return kExitOk;
}

int cmd_complexity(std::int64_t n, std::optional<std::int64_t> l_max) {
  if (n < 3) throw bps::Error(bps::ErrorKind::InvalidArgument, "--n must be >= 3");
  const bps::PrimeTable table(table_limit_for(std::min<std::int64_t>(n, 1024)));
  const auto bound = l_max.value_or(std::min<std::int64_t>(bps::recommended_shift_count(n), n - 1));
  std::cout << bps::to_json(bps::estimate_search_space(n, bound, table)).dump(2) << '\n';
  return kExitOk;
}

int cmd_attack(const std::string& in, std::int64_t l_max) {
  const auto file = bps::read_sequence_file(in);
  const bps::PrimeTable table(1024);
  std::cout << bps::to_json(bps::brute_force_attack(file.sequence, l_max, table)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary primes sequences: generation, hardening, correlation analysis"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a sequence file");
  gen_cmd->add_option("kind", gen.kind, "dseq | bps | hardened")
      ->required()
      ->check(CLI::IsMember({"dseq", "bps", "hardened"}));
  gen_cmd->add_option("--q", gen.q, "Odd prime modulus of the D-sequence");
  gen_cmd->add_option("--n", gen.n, "Length of the binary primes sequence (hardened: defaults to q)");
  gen_cmd->add_option("--len", gen.len, "Number of D-sequence terms (defaults to q)");
  gen_cmd->add_option("--shifts", gen.shifts,
                      "Comma-separated shift offsets; 0 is prepended when absent");
  gen_cmd->add_option("--strategy", gen.strategy, "explicit | uniform-random | evenly-spaced")
      ->check(CLI::IsMember({"explicit", "uniform-random", "evenly-spaced"}));
  gen_cmd->add_option("--count", gen.count,
                      "Number of added shifts for generated shift sets (default: recommended)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for uniform-random shift selection");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  std::string analyze_in, analyze_csv;
  ConventionFlags analyze_conv;
  auto* analyze_cmd = app.add_subcommand("analyze", "Autocorrelation report for a sequence file");
  analyze_cmd->add_option("input", analyze_in, "Sequence file")->required();
  analyze_conv.add_to(*analyze_cmd);
  analyze_cmd->add_option("--csv", analyze_csv, "Write the lag,c series to this file");

  std::string repro_target, repro_out;
  ConventionFlags repro_conv;
  auto* repro_cmd = app.add_subcommand("reproduce", "Regenerate one of the reference tables or figures");
  auto* repro_pos = repro_cmd->add_option("target", repro_target,
                                          "table1 table2 fig1 fig2 fig3 fig4 fig5 fig6");
  auto* repro_fig = repro_cmd->add_option("--fig", repro_target, "Same as the positional target");
  repro_pos->excludes(repro_fig);
  repro_cmd->add_option("--out", repro_out, "Output CSV (default: <target>.csv)");
  repro_conv.add_to(*repro_cmd);

  std::int64_t complexity_n = 0;
  std::optional<std::int64_t> complexity_lmax;
  auto* complexity_cmd = app.add_subcommand("complexity", "Attacker search-space estimates");
  complexity_cmd->add_option("--n", complexity_n, "Sequence length N (>= 3)")->required();
  complexity_cmd->add_option("--l-max", complexity_lmax,
                             "Largest shift count for the exact count (default: recommended)");

  std::string attack_in;
  std::int64_t attack_lmax = 1;
  auto* attack_cmd = app.add_subcommand("attack", "Exhaustive toy attack on a short observed sequence");
  attack_cmd->add_option("input", attack_in, "Observed sequence file")->required();
  attack_cmd->add_option("--l-max", attack_lmax, "Largest number of added shifts to try (<= 3)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*analyze_cmd) return cmd_analyze(analyze_in, analyze_conv, analyze_csv);
    if (*repro_cmd) {
      if (repro_target.empty()) throw UsageError("reproduce needs a target");
      return cmd_reproduce(repro_target, repro_conv, repro_out);
    }
    if (*complexity_cmd) return cmd_complexity(complexity_n, complexity_lmax);
    if (*attack_cmd) return cmd_attack(attack_in, attack_lmax);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bps::Error& e) {
    std::cerr << "error (" << bps::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
