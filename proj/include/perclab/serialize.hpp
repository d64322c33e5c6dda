#pragma once

#include "json.hpp"
#include "perclab/expansion.hpp"
#include "perclab/experiments.hpp"
#include "perclab/locallimit.hpp"
#include "perclab/percolation.hpp"

namespace perclab {

// nlohmann::json ADL hooks. Vertex sets serialize as sorted arrays, exact
// rationals as "num/den" strings next to their double value, certificates as
// lowercase hex.

void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const ExpansionReport& r);
void to_json(nlohmann::json& j, const FlowResult& r);
void to_json(nlohmann::json& j, const MengerReport& r);
void to_json(nlohmann::json& j, const Estimate& e);
void to_json(nlohmann::json& j, const SurvivalEstimate& s);
void to_json(nlohmann::json& j, const ReachDistribution& r);

/// {radius, total, exhaustive, entries: [{cert_hex, count}] sorted by cert}.
void to_json(nlohmann::json& j, const BallDistribution& d);
/// Inverse of the above; ValidationError on malformed input.
void from_json(const nlohmann::json& j, BallDistribution& d);

void to_json(nlohmann::json& j, const ConvergenceReport& r);
void to_json(nlohmann::json& j, const ClassFlowReport& r);
void to_json(nlohmann::json& j, const LocalityReport& r);
void to_json(nlohmann::json& j, const ConstancyReport& r);

}  // namespace perclab
