#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "perclab/graph.hpp"
#include "perclab/random.hpp"

namespace perclab {

struct PercConfig {
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

/// Throws ValidationError unless 0 <= p <= 1 and trials >= 1.
void validate(const PercConfig& cfg);

/// Edge `e` is open in trial `trial` at level p iff its uniform is below p.
/// The uniform does not depend on p, so open sets are monotone in p.
inline double edge_uniform(std::uint64_t seed, std::uint64_t trial, EdgeId e) {
  return to_unit(splitmix_at(trial_key(seed, trial), e));
}

/// Binomial proportion with a 95% normal-approximation half-width.
struct Estimate {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double value = 0.0;
  double half_width = 0.0;

  double low() const;
  double high() const;
  /// Standard error sqrt(value (1 - value) / trials).
  double std_error() const;
};
Estimate binomial_estimate(std::size_t successes, std::size_t trials);

struct PercolationSample {
  /// Bit e set iff edge e is open; 64 edges per word.
  std::vector<std::uint64_t> open_edges;
  std::size_t largest_component = 0;
  /// component size -> number of components.
  std::map<std::size_t, std::size_t> component_histogram;

  bool is_open(EdgeId e) const { return open_edges[e / 64] >> (e % 64) & 1; }
  /// Bytes in edge order (edge e is bit e%8 of byte e/8), lowercase hex.
  std::string open_edges_hex(std::size_t num_edges) const;
};

/// One Bernoulli(p) bond configuration, deterministic in (g, seed, trial).
PercolationSample percolate(const Graph& g, const PercConfig& cfg, std::size_t trial_index);

/// Smallest integer size counted as "at least alpha * n".
std::size_t giant_threshold(double alpha, std::size_t n);

/// Fraction of cfg.trials samples whose largest component has >= alpha*n vertices.
Estimate giant_probability(const Graph& g, const PercConfig& cfg, double alpha);

struct SurvivalEstimate {
  std::uint32_t radius = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  Estimate estimate;
};

/// P(o is joined by an open path inside B_g(o, R) to a vertex at distance
/// exactly R), with percolation on the ball's own edges (ball-local edge ids).
/// Zero when the sphere at distance R is empty.
SurvivalEstimate ball_survival(const Graph& g, Vertex o, std::uint32_t R, const PercConfig& cfg);

struct ReachDistribution {
  std::uint32_t radius = 0;
  /// |B'_p(o, R)| -> number of trials.
  std::map<std::size_t, std::size_t> counts;
  std::size_t trials = 0;
  /// P(|B'_p(o, R)| >= R).
  Estimate at_least_radius;
};

/// Distribution of the number of vertices joined to o by open paths of length
/// <= R. Uses global edge ids, so trial t sees the same configuration as
/// percolate(g, cfg, t).
ReachDistribution reach_set_size(const Graph& g, Vertex o, std::uint32_t R, const PercConfig& cfg);

struct ScanRow {
  double p = 0.0;
  double alpha = 0.0;
  Estimate prob;
  std::uint64_t seed = 0;
};

/// Giant-component probability on every grid point. Trial t uses the same
/// edge uniforms at every p (monotone coupling), so each trial's largest
/// component is non-decreasing along the grid. Edges are added in uniform
/// order per trial, one union-find pass for the whole grid.
std::vector<ScanRow> threshold_scan(const Graph& g, std::span<const double> p_grid, double alpha,
                                    std::uint64_t seed, std::size_t trials);

/// CSV with header "p,alpha,prob,ci_low,ci_high,trials,seed".
std::string scan_csv(std::span<const ScanRow> rows);

/// Exact probability that the root of the infinite d-regular tree reaches
/// depth R through open edges. With a_0 = 1, a_k = 1 - (1 - p a_{k-1})^(d-1)
/// (a non-root vertex reaching k levels below itself), the root survives to
/// depth R >= 1 with probability 1 - (1 - p a_{R-1})^d.
double tree_survival_oracle(std::size_t d, double p, std::uint32_t R);

/// 1 / (d - 1), the bond percolation threshold of the d-regular tree.
double tree_critical_probability(std::size_t d);

/// Two-stage decomposition 1 - p = (1 - p1)(1 - eps).
double sprinkled_p(double p1, double eps);
double sprinkled_p1(double p, double eps);

}  // namespace perclab
