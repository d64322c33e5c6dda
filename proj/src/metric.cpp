#include "perclab/metric.hpp"

#include <limits>

#include "perclab/ball.hpp"
#include "perclab/errors.hpp"

namespace perclab {

RootedDistance distinguishing_radius(const Graph& g1, Vertex o1, const Graph& g2, Vertex o2,
                                     std::uint32_t s_max) {
  g1.check_vertex(o1);
  g2.check_vertex(o2);
  if (s_max < 1) throw ValidationError("distinguishing_radius: s_max must be >= 1");
  const std::uint32_t ecc1 = eccentricity(g1, o1);
  const std::uint32_t ecc2 = eccentricity(g2, o2);

  RootedDistance out;
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    if (extract_ball(g1, o1, s).certificate() != extract_ball(g2, o2, s).certificate()) {
      out.t = s - 1;
      return out;
    }
    // Both balls are whole components now; every larger ball is the same.
    if (s >= ecc1 && s >= ecc2) {
      out.infinite = true;
      out.t = std::numeric_limits<std::uint32_t>::max();
      return out;
    }
  }
  out.t = s_max;
  out.truncated = true;
  return out;
}

RootedDistance metric_d(const Graph& g1, Vertex o1, const Graph& g2, Vertex o2, std::uint32_t s_max) {
  return distinguishing_radius(g1, o1, g2, o2, s_max);
}

}  // namespace perclab
