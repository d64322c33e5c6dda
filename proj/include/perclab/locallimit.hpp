#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "perclab/ball.hpp"
#include "perclab/canonical.hpp"
#include "perclab/expansion.hpp"
#include "perclab/graph.hpp"
#include "perclab/rational.hpp"

namespace perclab {

/// Empirical law of the radius-R ball class around a uniform root.
struct BallDistribution {
  std::uint32_t radius = 0;
  /// certificate -> occurrences; ordered by certificate bytes.
  std::map<Certificate, std::size_t> counts;
  std::size_t total = 0;
  /// One ball per vertex (true) or k sampled roots (false).
  bool exhaustive = true;

  double probability(const Certificate& cert) const;
  /// Classes by decreasing mass (ties by certificate).
  std::vector<std::pair<Certificate, double>> ranked() const;
};

struct BallMode {
  bool sampled = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static BallMode exhaustive() { return {}; }
  static BallMode sample(std::size_t k, std::uint64_t seed) { return {true, k, seed}; }
};

/// Throws CapExceeded when a ball exceeds the canonicalization cap.
BallDistribution ball_distribution(const Graph& g, std::uint32_t R, BallMode mode = BallMode::exhaustive());

/// Reference law concentrated on one ball class.
BallDistribution point_mass(const RootedBall& ball);

/// Half the L1 distance over the union of supports. ValidationError on radius mismatch.
double tv_distance(const BallDistribution& a, const BallDistribution& b);

struct ConvergenceRow {
  std::size_t n = 0;
  double tv = 0.0;
};

struct ConvergenceReport {
  std::uint32_t radius = 0;
  BallDistribution reference;
  std::vector<ConvergenceRow> rows;
};

/// Exhaustive radius-R distribution of every graph against `reference`, in
/// input order.
ConvergenceReport convergence_report(std::span<const Graph> graphs, std::uint32_t R,
                                     const BallDistribution& reference);

/// Vertices whose radius-target.radius ball is rooted-isomorphic to target.
std::vector<Vertex> class_members(const Graph& g, const RootedBall& target);
std::size_t class_count(const Graph& g, const RootedBall& target);

enum class ClassFlowStatus {
  ok,
  /// t1 and t2 are the same class; the argument needs two distinct classes.
  same_class,
  /// Some class has fewer than p0 n / 4 members.
  class_too_small,
  /// No flow path of length <= K between the classes.
  no_short_path,
};
std::string_view status_name(ClassFlowStatus s);

/// The vertex-class / edge-disjoint-path chain run on a concrete graph.
struct ClassFlowReport {
  ClassFlowStatus status = ClassFlowStatus::ok;
  std::uint32_t radius = 0;
  std::size_t class1_size = 0;
  std::size_t class2_size = 0;
  /// p0 n / 4.
  double required_size = 0.0;
  Rational K;
  std::optional<MengerReport> menger;

  /// Endpoints of the shortest flow path of length <= K, if any.
  std::optional<Vertex> v1;
  std::optional<Vertex> v2;
  std::size_t path_length = 0;
  /// B(v2, R) is a subset of B(v1, R + floor(K)).
  bool ball_contained = false;
  /// v2 lies within K of v1 and B(v2, R) is in t2's class: a t2-ball sits
  /// next to a t1-rooted vertex.
  bool nearby_match = false;
};

/// t1, t2 must share a radius (ValidationError otherwise). c is the claimed
/// Cheeger lower bound, p0 the claimed class mass; K = 4 delta / (c p0).
ClassFlowReport disjoint_class_flow(const Graph& g, const RootedBall& t1, const RootedBall& t2, const Rational& c,
                                    const Rational& p0);

}  // namespace perclab
