#pragma once

#include <string>

#include "json.hpp"

#include "alphastab/harness.hpp"
#include "alphastab/stability.hpp"

namespace alphastab::cli {

using nlohmann::json;

// Analyze document: {input, class, alpha, mu, konig, verdicts, certificates,
// timing}. report_from_json ignores input and timing, so
// report_from_json(report_to_json(r, ...)) == r.
json report_to_json(const StabilityReport& r, const std::string& input, double seconds);
StabilityReport report_from_json(const json& j);

json harness_to_json(const HarnessReport& r);
HarnessReport harness_from_json(const json& j);

json ears_to_json(const EarDecomposition& dec);
EarDecomposition ears_from_json(const json& j);

json decomposition_to_json(const BistableDecomposition& dec);
BistableDecomposition decomposition_from_json(const json& j);

json matching_to_json(const Matching& m);
Matching matching_from_json(const json& j);

// Human-readable forms.
std::string format_report(const StabilityReport& r, const std::string& input);
std::string format_ears(const EarDecomposition& dec);
std::string format_decomposition(const BistableDecomposition& dec);
std::string format_harness(const HarnessReport& r);

}  // namespace alphastab::cli
