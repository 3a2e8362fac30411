#include "bps/report.hpp"

#include <charconv>
#include <limits>

namespace bps {

std::string format_real(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string correlation_csv(const CorrelationSeries& corr) {
  std::string out = "lag,c\n";
  for (std::size_t k = 0; k < corr.values.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_real(corr.values[k]);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["randomness"] = report.randomness;
  j["max_offpeak"] = report.max_offpeak;
  j["mean_offpeak"] = report.mean_offpeak;
  j["ones_fraction"] = report.ones_fraction;
  j["convention"] = {{"mapping", to_string(report.convention.mapping)},
                     {"normalization", to_string(report.convention.normalization)}};
  j["sequence_label"] = report.sequence_label;
  return j;
}

nlohmann::ordered_json to_json(const AttackResult& result) {
  nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
  for (const auto& h : result.consistent_hypotheses) {
    hyps.push_back({{"q", h.q}, {"shifts", h.shifts.values()}, {"matched", true}});
  }
  nlohmann::ordered_json j;
  j["consistent_hypotheses"] = std::move(hyps);
  // Exact integers go out as JSON numbers while they fit, as strings beyond.
  if (result.hypotheses_tested <= std::numeric_limits<std::uint64_t>::max()) {
    j["hypotheses_tested"] = result.hypotheses_tested.convert_to<std::uint64_t>();
  } else {
    j["hypotheses_tested"] = result.hypotheses_tested.str();
  }
  j["target_length"] = result.target_length;
  return j;
}

nlohmann::ordered_json to_json(const SearchSpaceEstimate& estimate) {
  nlohmann::ordered_json j;
  j["log10_paper_formula"] = estimate.log10_paper_formula;
  j["log10_consistent_formula"] = estimate.log10_consistent_formula;
  if (estimate.exact_count) {
    const auto& count = *estimate.exact_count;
    if (count <= std::numeric_limits<std::uint64_t>::max()) {
      j["exact_count"] = count.convert_to<std::uint64_t>();
    } else {
      j["exact_count"] = count.str();
    }
  }
  return j;
}

}  // namespace bps
