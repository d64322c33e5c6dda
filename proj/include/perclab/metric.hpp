#pragma once

#include <cstdint>

#include "perclab/graph.hpp"
#include "perclab/rational.hpp"

namespace perclab {

/// Agreement radius t between two rooted graphs and D = 1/(1+t).
struct RootedDistance {
  /// Meaningless (uint32 max) when `infinite` is set.
  std::uint32_t t = 0;
  /// Rooted graphs isomorphic in full (t = infinity, D = 0).
  bool infinite = false;
  /// Balls still agreed at s_max; t is only a lower bound.
  bool truncated = false;

  /// D as an exact rational (0 when infinite).
  Rational d() const { return infinite ? Rational(0) : Rational(1, std::int64_t{1} + t); }
  double value() const { return infinite ? 0.0 : 1.0 / (1.0 + t); }
};

/// Largest s <= s_max with B_{g1}(o1, s) rooted-isomorphic to B_{g2}(o2, s).
/// Radius-0 balls always agree, so t = 0 when radius-1 balls differ. Returns
/// infinite once both balls cover their whole components and still agree;
/// returns t = s_max with `truncated` when agreement outlasts s_max.
RootedDistance distinguishing_radius(const Graph& g1, Vertex o1, const Graph& g2, Vertex o2,
                                     std::uint32_t s_max);

/// Same contract as distinguishing_radius; use .d() / .value() for D.
RootedDistance metric_d(const Graph& g1, Vertex o1, const Graph& g2, Vertex o2, std::uint32_t s_max);

}  // namespace perclab
