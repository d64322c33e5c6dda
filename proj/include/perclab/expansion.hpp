#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "perclab/graph.hpp"
#include "perclab/rational.hpp"

namespace perclab {

enum class ExpansionMethod { exact, spectral, cut_witness };
std::string_view method_name(ExpansionMethod m);

/// Bounds lower <= h(G) <= upper on the Cheeger constant
///   h(G) = min { |E(A, V\A)| / |A| : 0 < |A| <= |V|/2 }.
struct ExpansionReport {
  ExpansionMethod method = ExpansionMethod::exact;
  double lower = 0.0;
  double upper = 0.0;
  /// Exact values where the bound is rational (exact, cut_witness).
  std::optional<Rational> lower_exact;
  std::optional<Rational> upper_exact;
  /// Sorted vertex set achieving `upper`.
  std::optional<std::vector<Vertex>> witness;
  /// Spectral diagnostics.
  std::optional<double> lambda2;
  double residual = 0.0;
  bool converged = true;
};

/// Edges with exactly one endpoint in `a`.
std::vector<Edge> edge_boundary(const Graph& g, std::span<const Vertex> a);

/// |E(A, V\A)| / min(|A|, |V\A|); the cut ratio that h(G) minimizes.
Rational cut_ratio(const Graph& g, std::span<const Vertex> a);

inline constexpr std::size_t kExactCheegerCap = 24;

/// Exhaustive h(G) over all 2^n subsets (Gray-code order). Ties go to the
/// lexicographically smallest sorted vertex set. Disconnected graphs report
/// h = 0 with a component-union witness. Throws CapExceeded above `max_n`
/// and ValidationError for n < 2.
ExpansionReport cheeger_exact(const Graph& g, std::size_t max_n = kExactCheegerCap);

struct SpectralOptions {
  /// Dense symmetric eigensolve up to this many vertices, restarted Lanczos above.
  std::size_t dense_limit = 2000;
  double tolerance = 1e-8;
  std::size_t krylov_dim = 64;
  std::size_t max_restarts = 400;
};

/// Second-smallest Laplacian eigenpair. `residual` is ||L x - lambda2 x||.
struct FiedlerPair {
  double lambda2 = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  bool converged = true;
  std::size_t iterations = 0;
};
FiedlerPair fiedler_pair(const Graph& g, const SpectralOptions& opts = {});

/// lambda2/2 <= h(G) <= sqrt(2 * maxdeg * lambda2), both sides widened by
/// the achieved eigen-residual. Disconnected graphs give [0, 0]. A Lanczos
/// run that hits the restart cap is reported with converged = false and the
/// achieved residual, not thrown.
ExpansionReport cheeger_spectral_bounds(const Graph& g, const SpectralOptions& opts = {});

/// Cut-ratio upper bound for a caller-supplied vertex set (the smaller side
/// becomes the witness).
ExpansionReport cut_witness(const Graph& g, std::span<const Vertex> a);

/// Best cut found among bridges, BFS-order sweeps and (for n up to the dense
/// limit) the Fiedler-vector sweep.
ExpansionReport cheeger_upper_search(const Graph& g, const SpectralOptions& opts = {});

/// Maximum edge-disjoint a1-to-a2 path packing (Menger) via unit-capacity
/// shortest-augmenting-path max-flow.
struct FlowResult {
  std::size_t value = 0;
  /// Saturated edges leaving the residual-reachable side; |min_cut| == value.
  std::vector<Edge> min_cut;
  /// Graph vertices reachable from a1 in the final residual network.
  std::vector<Vertex> source_side;
  /// A decomposition of the flow into `value` edge-disjoint paths (vertex
  /// sequences from a1 to a2), extracted shortest-first so lengths are
  /// non-decreasing.
  std::vector<std::vector<Vertex>> paths;
};

/// Throws ValidationError when a1/a2 are empty, overlap or out of range.
FlowResult edge_disjoint_paths(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2);

/// K = 4 delta / (c p0). Throws ValidationError unless c > 0 and 0 < p0 <= 1.
Rational constant_K(std::size_t delta, const Rational& c, const Rational& p0);

struct MengerReport {
  std::size_t flow = 0;
  std::size_t a1_size = 0;
  std::size_t a2_size = 0;
  Rational c;
  /// flow >= c * min(|a1|, |a2|).
  bool expansion_bound_holds = false;
  double flow_per_min_side = 0.0;
  /// flow / (n p0 / 4), when p0 was supplied.
  std::optional<double> flow_per_quarter_mass;

  std::optional<Rational> K;
  /// Decomposition paths of length <= K.
  std::size_t short_paths = 0;
  /// flow - delta * n / (2K): at most delta*n/2 edges exist, so at most
  /// (delta n / 2) / K disjoint paths can be longer than K.
  double short_path_floor = 0.0;
  bool short_path_bound_holds = false;

  /// Exact h(G) when n <= kExactCheegerCap; c_valid is false when c > h.
  std::optional<Rational> exact_h;
  bool c_valid = true;
  /// Lengths of the decomposition paths (edges), non-decreasing.
  std::vector<std::size_t> path_lengths;
};

/// Checks the expander flow chain on concrete sets. `min_size` is the stated
/// lower bound on |a1|, |a2| (ValidationError when violated).
MengerReport menger_expander_bound(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2,
                                   const Rational& c, std::optional<Rational> K = std::nullopt,
                                   std::optional<Rational> p0 = std::nullopt, std::size_t min_size = 1);

}  // namespace perclab
