#include "perclab/serialize.hpp"

#include <algorithm>

#include "perclab/errors.hpp"

namespace perclab {

using nlohmann::json;

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const ExpansionReport& r) {
  j = json{{"method", method_name(r.method)}, {"lower", r.lower}, {"upper", r.upper}};
  if (r.lower_exact) j["lower_exact"] = *r.lower_exact;
  if (r.upper_exact) j["upper_exact"] = *r.upper_exact;
  if (r.witness) {
    auto w = *r.witness;
    std::sort(w.begin(), w.end());
    j["witness"] = w;
  }
  if (r.lambda2) {
    j["lambda2"] = *r.lambda2;
    j["residual"] = r.residual;
    j["converged"] = r.converged;
  }
}

void to_json(json& j, const FlowResult& r) {
  json cut = json::array();
  for (auto [u, v] : r.min_cut) cut.push_back({u, v});
  j = json{{"value", r.value}, {"min_cut", cut}, {"paths", r.paths}};
}

void to_json(json& j, const MengerReport& r) {
  j = json{{"flow", r.flow},
           {"a1_size", r.a1_size},
           {"a2_size", r.a2_size},
           {"c", r.c},
           {"expansion_bound_holds", r.expansion_bound_holds},
           {"flow_per_min_side", r.flow_per_min_side},
           {"path_lengths", r.path_lengths},
           {"c_valid", r.c_valid}};
  if (r.flow_per_quarter_mass) j["flow_per_quarter_mass"] = *r.flow_per_quarter_mass;
  if (r.K) {
    j["K"] = *r.K;
    j["short_paths"] = r.short_paths;
    j["short_path_floor"] = r.short_path_floor;
    j["short_path_bound_holds"] = r.short_path_bound_holds;
  }
  if (r.exact_h) j["exact_h"] = *r.exact_h;
}

void to_json(json& j, const Estimate& e) {
  j = json{{"estimate", e.value},
           {"successes", e.successes},
           {"trials", e.trials},
           {"half_width", e.half_width},
           {"ci_low", e.low()},
           {"ci_high", e.high()}};
}

void to_json(json& j, const SurvivalEstimate& s) {
  j = s.estimate;
  j["radius"] = s.radius;
  j["p"] = s.p;
  j["seed"] = s.seed;
}

void to_json(json& j, const ReachDistribution& r) {
  json counts = json::array();
  for (auto [size, count] : r.counts) counts.push_back({{"size", size}, {"count", count}});
  j = json{{"radius", r.radius}, {"trials", r.trials}, {"sizes", counts}, {"at_least_radius", r.at_least_radius}};
}

void to_json(json& j, const BallDistribution& d) {
  json entries = json::array();
  for (const auto& [cert, count] : d.counts) entries.push_back({{"cert_hex", to_hex(cert)}, {"count", count}});
  j = json{{"radius", d.radius}, {"total", d.total}, {"exhaustive", d.exhaustive}, {"entries", entries}};
}

void from_json(const json& j, BallDistribution& d) {
  try {
    d = BallDistribution{};
    d.radius = j.at("radius").get<std::uint32_t>();
    d.total = j.at("total").get<std::size_t>();
    d.exhaustive = j.value("exhaustive", true);
    std::size_t sum = 0;
    for (const auto& e : j.at("entries")) {
      const auto count = e.at("count").get<std::size_t>();
      if (!d.counts.emplace(from_hex(e.at("cert_hex").get<std::string>()), count).second) {
        throw ValidationError("duplicate certificate in ball distribution");
      }
      sum += count;
    }
    if (sum != d.total) throw ValidationError("ball distribution counts do not sum to total");
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("malformed ball distribution JSON: ") + ex.what());
  }
}

void to_json(json& j, const ConvergenceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"n", row.n}, {"tv_distance", row.tv}});
  j = json{{"radius", r.radius}, {"reference", r.reference}, {"rows", rows}};
}

void to_json(json& j, const ClassFlowReport& r) {
  j = json{{"status", status_name(r.status)},
           {"radius", r.radius},
           {"class1_size", r.class1_size},
           {"class2_size", r.class2_size},
           {"required_size", r.required_size},
           {"K", r.K}};
  if (r.menger) j["menger"] = *r.menger;
  if (r.v1) {
    j["short_path"] = {{"v1", *r.v1},
                       {"v2", *r.v2},
                       {"length", r.path_length},
                       {"ball_contained", r.ball_contained},
                       {"nearby_match", r.nearby_match}};
  }
}

void to_json(json& j, const LocalityReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    json rows = json::array();
    for (const auto& row : run.rows) rows.push_back({{"p", row.p}, {"prob", row.prob}});
    json checks = json::array();
    for (const auto& c : run.checks) {
      checks.push_back({{"p", c.p}, {"prob", c.prob}, {"expect_giant", c.expect_giant}, {"ok", c.ok}});
    }
    json entry{{"n", run.n}, {"graph_seed", run.graph_seed}, {"rows", rows}, {"checks", checks}};
    if (run.window_low) entry["window_low"] = *run.window_low;
    if (run.window_high) entry["window_high"] = *run.window_high;
    if (auto w = run.window_width()) entry["window_width"] = *w;
    runs.push_back(entry);
  }
  const auto& c = r.config;
  j = json{{"d", c.d},         {"alpha", c.alpha},         {"trials", c.trials},
           {"seed", c.seed},   {"margin", c.margin},       {"fail_low", c.fail_low},
           {"pass_high", c.pass_high}, {"p_c", r.p_c},     {"runs", runs},
           {"windows_shrink", r.windows_shrink},           {"verdict", verdict_name(r.verdict)}};
}

namespace {

json class_json(const ClassMass& c) {
  json j{{"cert_hex", to_hex(c.certificate)}, {"mass", c.mass}, {"tree_degree", c.tree_degree}};
  if (c.oracle_p_c) j["oracle_p_c"] = *c.oracle_p_c;
  return j;
}

}  // namespace

void to_json(json& j, const ConstancyReport& r) {
  json negative_classes = json::array();
  for (const auto& c : r.negative_top) negative_classes.push_back(class_json(c));
  j = json{{"seed", r.config.seed},
           {"radius", r.config.radius},
           {"positive",
            {{"n", r.config.positive_n}, {"classes", r.positive_classes}, {"top_class", class_json(r.positive_top)}}},
           {"negative",
            {{"n", r.config.negative_n},
             {"top_classes", negative_classes},
             {"bridge_cut", r.bridge_cut},
             {"bridge_cut_is_two_over_n", r.bridge_cut_is_two_over_n},
             {"upper_search", r.upper_search},
             {"halves_flow", r.halves_flow},
             {"class_flow", r.class_flow}}}};
}

}  // namespace perclab
