#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bps/adversary.hpp"
#include "bps/analysis.hpp"

namespace bps {

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

/// "lag,c" header then one LF-terminated row per lag.
std::string correlation_csv(const CorrelationSeries& corr);

nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const AttackResult& result);

/// {log10_paper_formula, log10_consistent_formula[, exact_count]}
nlohmann::ordered_json to_json(const SearchSpaceEstimate& estimate);

}  // namespace bps
