#include "perclab/locallimit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "perclab/errors.hpp"
#include "perclab/random.hpp"

namespace perclab {

double BallDistribution::probability(const Certificate& cert) const {
  auto it = counts.find(cert);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

std::vector<std::pair<Certificate, double>> BallDistribution::ranked() const {
  std::vector<std::pair<Certificate, double>> out;
  for (const auto& [cert, count] : counts) out.emplace_back(cert, static_cast<double>(count) / static_cast<double>(total));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

BallDistribution ball_distribution(const Graph& g, std::uint32_t R, BallMode mode) {
  BallDistribution dist;
  dist.radius = R;
  dist.exhaustive = !mode.sampled;
  if (!mode.sampled) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) ++dist.counts[extract_ball(g, v, R).certificate()];
    dist.total = g.num_vertices();
    return dist;
  }
  if (mode.samples == 0) throw ValidationError("sampled ball_distribution needs k >= 1");
  if (g.num_vertices() == 0) throw ValidationError("ball_distribution on an empty graph");
  SplitMix64 rng(mode.seed);
  for (std::size_t i = 0; i < mode.samples; ++i) {
    const auto v = static_cast<Vertex>(rng.below(g.num_vertices()));
    ++dist.counts[extract_ball(g, v, R).certificate()];
  }
  dist.total = mode.samples;
  return dist;
}

BallDistribution point_mass(const RootedBall& ball) {
  BallDistribution dist;
  dist.radius = ball.radius();
  dist.counts[ball.certificate()] = 1;
  dist.total = 1;
  return dist;
}

double tv_distance(const BallDistribution& a, const BallDistribution& b) {
  if (a.radius != b.radius) {
    throw ValidationError("tv_distance: radius mismatch (" + std::to_string(a.radius) + " vs " +
                          std::to_string(b.radius) + ")");
  }
  double sum = 0.0;
  for (const auto& [cert, count] : a.counts) sum += std::abs(a.probability(cert) - b.probability(cert));
  for (const auto& [cert, count] : b.counts) {
    if (!a.counts.count(cert)) sum += b.probability(cert);
  }
  return std::min(1.0, sum / 2.0);
}

ConvergenceReport convergence_report(std::span<const Graph> graphs, std::uint32_t R,
                                     const BallDistribution& reference) {
  ConvergenceReport report;
  report.radius = R;
  report.reference = reference;
  for (const auto& g : graphs) {
    report.rows.push_back({g.num_vertices(), tv_distance(ball_distribution(g, R), reference)});
  }
  return report;
}

std::vector<Vertex> class_members(const Graph& g, const RootedBall& target) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (extract_ball(g, v, target.radius()).certificate() == target.certificate()) out.push_back(v);
  }
  return out;
}

std::size_t class_count(const Graph& g, const RootedBall& target) { return class_members(g, target).size(); }

std::string_view status_name(ClassFlowStatus s) {
  switch (s) {
    case ClassFlowStatus::ok: return "ok";
    case ClassFlowStatus::same_class: return "same_class";
    case ClassFlowStatus::class_too_small: return "class_too_small";
    case ClassFlowStatus::no_short_path: return "no_short_path";
  }
  return "?";
}

ClassFlowReport disjoint_class_flow(const Graph& g, const RootedBall& t1, const RootedBall& t2, const Rational& c,
                                    const Rational& p0) {
  if (t1.radius() != t2.radius()) throw ValidationError("disjoint_class_flow: t1 and t2 must share a radius");
  ClassFlowReport r;
  r.radius = t1.radius();
  r.K = constant_K(g.delta_bound(), c, p0);
  r.required_size = p0.to_double() * static_cast<double>(g.num_vertices()) / 4.0;
  if (t1.certificate() == t2.certificate()) {
    r.status = ClassFlowStatus::same_class;
    r.class1_size = r.class2_size = class_count(g, t1);
    return r;
  }
  const auto a1 = class_members(g, t1);
  const auto a2 = class_members(g, t2);
  r.class1_size = a1.size();
  r.class2_size = a2.size();
  if (static_cast<double>(std::min(a1.size(), a2.size())) < r.required_size) r.status = ClassFlowStatus::class_too_small;
  if (a1.empty() || a2.empty()) return r;

  r.menger = menger_expander_bound(g, a1, a2, c, r.K, p0);
  if (r.menger->short_paths == 0) {
    if (r.status == ClassFlowStatus::ok) r.status = ClassFlowStatus::no_short_path;
    return r;
  }
  const FlowResult flow = edge_disjoint_paths(g, a1, a2);
  const auto& path = flow.paths.front();  // shortest first
  r.v1 = path.front();
  r.v2 = path.back();
  r.path_length = path.size() - 1;

  const auto k_floor = static_cast<std::uint32_t>(
      std::min<std::int64_t>(r.K.num() / r.K.den(), static_cast<std::int64_t>(g.num_vertices())));
  const auto near = ball_vertices(g, *r.v1, r.radius + k_floor);
  std::unordered_set<Vertex> near_set(near.vertices.begin(), near.vertices.end());
  const auto small = ball_vertices(g, *r.v2, r.radius);
  r.ball_contained = std::all_of(small.vertices.begin(), small.vertices.end(),
                                 [&](Vertex v) { return near_set.count(v) > 0; });
  const auto dist = bfs_distances(g, *r.v1);
  r.nearby_match = dist[*r.v2] <= k_floor && ball_class_member(g, *r.v2, t2);
  return r;
}

}  // namespace perclab
