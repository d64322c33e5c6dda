#include "perclab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "perclab/errors.hpp"
#include "perclab/generators.hpp"

namespace perclab {

namespace {

std::string num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, ptr};
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::vacuous: return "VACUOUS";
  }
  return "?";
}

std::optional<double> LocalityRun::window_width() const {
  if (!window_low || !window_high) return std::nullopt;
  return *window_high - *window_low;
}

std::string LocalityReport::csv() const {
  std::string out = "n,p,alpha,prob,ci_low,ci_high,trials,seed\n";
  for (const auto& run : runs) {
    for (const auto& r : run.rows) {
      out += std::to_string(run.n) + ',' + num(r.p) + ',' + num(r.alpha) + ',' + num(r.prob.value) + ',' +
             num(r.prob.low()) + ',' + num(r.prob.high()) + ',' + std::to_string(r.prob.trials) + ',' +
             std::to_string(r.seed) + '\n';
    }
  }
  return out;
}

LocalityReport verify_locality(const LocalityConfig& cfg) {
  if (cfg.d < 3) throw ValidationError("verify_locality needs d >= 3: cycles (d = 2) are not expanders");
  if (cfg.n_list.empty()) throw ValidationError("verify_locality needs at least one n");
  if (cfg.trials == 0) throw ValidationError("verify_locality needs trials >= 1");
  giant_threshold(cfg.alpha, 1);  // validates alpha

  LocalityReport report;
  report.config = cfg;
  report.p_c = tree_critical_probability(cfg.d);
  std::size_t checked = 0;
  bool all_ok = true;
  std::optional<double> previous_width;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    LocalityRun run;
    run.n = cfg.n_list[i];
    run.graph_seed = splitmix_at(cfg.seed, i);
    const Graph g = generate({Family::random_regular, run.n, cfg.d, run.graph_seed});
    run.rows = threshold_scan(g, cfg.p_grid, cfg.alpha, cfg.seed, cfg.trials);
    for (const auto& row : run.rows) {
      if (!run.window_low && row.prob.value > cfg.fail_low) run.window_low = row.p;
      if (!run.window_high && row.prob.value >= cfg.pass_high) run.window_high = row.p;
      if (row.p <= report.p_c - cfg.margin) {
        run.checks.push_back({row.p, row.prob.value, false, row.prob.value <= cfg.fail_low});
      } else if (row.p >= report.p_c + cfg.margin) {
        run.checks.push_back({row.p, row.prob.value, true, row.prob.value >= cfg.pass_high});
      }
    }
    for (const auto& c : run.checks) all_ok = all_ok && c.ok;
    checked += run.checks.size();
    if (auto w = run.window_width()) {
      if (previous_width && *w > *previous_width + 1e-12) report.windows_shrink = false;
      previous_width = w;
    }
    report.runs.push_back(std::move(run));
  }
  if (checked == 0) report.verdict = Verdict::vacuous;
  else report.verdict = all_ok && report.windows_shrink ? Verdict::pass : Verdict::fail;
  return report;
}

namespace {

ClassMass describe_class(const Certificate& cert, double mass, std::uint32_t radius,
                         std::initializer_list<std::size_t> tree_degrees) {
  ClassMass out{cert, mass, 0, std::nullopt};
  for (auto d : tree_degrees) {
    if (RootedBall::from_graph(regular_tree_ball(d, radius), 0, radius).certificate() == cert) {
      out.tree_degree = d;
      out.oracle_p_c = tree_critical_probability(d);
    }
  }
  return out;
}

}  // namespace

ConstancyReport verify_constancy(const ConstancyConfig& cfg) {
  ConstancyReport report;
  report.config = cfg;

  const Graph positive = generate({Family::random_regular, cfg.positive_n, 3, cfg.seed});
  const auto pos_dist = ball_distribution(positive, cfg.radius);
  report.positive_classes = pos_dist.counts.size();
  const auto pos_ranked = pos_dist.ranked();
  report.positive_top = describe_class(pos_ranked.front().first, pos_ranked.front().second, cfg.radius, {3});

  const std::size_t n = cfg.negative_n;
  const Graph negative = generate({Family::bridged_pair, n, 4, cfg.seed});
  const auto neg_ranked = ball_distribution(negative, cfg.radius).ranked();
  for (std::size_t i = 0; i < std::min<std::size_t>(2, neg_ranked.size()); ++i) {
    report.negative_top.push_back(describe_class(neg_ranked[i].first, neg_ranked[i].second, cfg.radius, {2, 4}));
  }

  std::vector<Vertex> regular_half(n / 2), cycle_half(n / 2);
  std::iota(regular_half.begin(), regular_half.end(), 0);
  std::iota(cycle_half.begin(), cycle_half.end(), static_cast<Vertex>(n / 2));
  report.bridge_cut = cut_witness(negative, cycle_half);
  report.bridge_cut_is_two_over_n = report.bridge_cut.upper_exact == Rational(2, static_cast<std::int64_t>(n));
  report.upper_search = cheeger_upper_search(negative);
  report.halves_flow = edge_disjoint_paths(negative, regular_half, cycle_half).value;

  if (report.negative_top.size() == 2) {
    // Representative balls for the two heaviest classes.
    auto representative = [&](const Certificate& cert) {
      for (Vertex v = 0; v < negative.num_vertices(); ++v) {
        auto b = extract_ball(negative, v, cfg.radius);
        if (b.certificate() == cert) return b;
      }
      throw ValidationError("class representative not found");
    };
    report.class_flow = disjoint_class_flow(negative, representative(report.negative_top[0].certificate),
                                            representative(report.negative_top[1].certificate), cfg.c, cfg.p0);
  }
  return report;
}

std::string ConstancyReport::narrative() const {
  std::ostringstream out;
  out << "positive side: random 3-regular graph, n=" << config.positive_n << ", radius " << config.radius << "\n"
      << "  ball classes observed: " << positive_classes << "\n"
      << "  heaviest class mass: " << num(positive_top.mass)
      << (positive_top.tree_degree == 3 ? " (3-regular tree ball)" : "") << "\n"
      << "  limit concentrates on one rooted class; p_c of the limit = "
      << (positive_top.oracle_p_c ? num(*positive_top.oracle_p_c) : std::string("n/a")) << "\n";
  out << "negative control: bridged_pair, n=" << config.negative_n << "\n";
  for (const auto& cls : negative_top) {
    out << "  class mass " << num(cls.mass);
    if (cls.tree_degree == 2) out << " (path ball, Z-like half)";
    if (cls.tree_degree == 4) out << " (4-regular tree ball)";
    if (cls.oracle_p_c) out << ", oracle p_c = " << num(*cls.oracle_p_c);
    out << "\n";
  }
  out << "  Cheeger upper bound from the bridge cut: " << bridge_cut.upper_exact->str()
      << (bridge_cut_is_two_over_n ? " (= 2/n)" : "") << "\n"
      << "  best cut from upper-bound search: " << upper_search.upper_exact->str() << "\n"
      << "  edge-disjoint paths between the halves: " << halves_flow << "\n"
      << "  class flow: status " << status_name(class_flow.status) << ", L = "
      << (class_flow.menger ? std::to_string(class_flow.menger->flow) : std::string("-")) << ", needed c*min|A_i| = "
      << (class_flow.menger ? num((class_flow.menger->c * Rational(static_cast<std::int64_t>(std::min(
                                                                 class_flow.class1_size, class_flow.class2_size))))
                                                    .to_double())
                          : std::string("-")) << ", K = " << class_flow.K.str()
      << "\n";
  const bool distinct = negative_top.size() == 2 && negative_top[0].oracle_p_c && negative_top[1].oracle_p_c &&
                        *negative_top[0].oracle_p_c != *negative_top[1].oracle_p_c;
  out << "  without expansion the limit mixes two rooted graphs with different p_c: " << (distinct ? "yes" : "no")
      << "\n";
  return out.str();
}

}  // namespace perclab
