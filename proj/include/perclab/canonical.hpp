#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

/// Canonical byte string of a rooted connected graph. Equal certificates
/// if and only if a root-preserving isomorphism exists.
using Certificate = std::vector<std::uint8_t>;

inline constexpr std::size_t kDefaultCanonCap = 10000;

/// Canonical form of (g, root). `g` must be connected.
///
/// Pendant trees (non-root degree-1 vertices, peeled repeatedly) are folded
/// into AHU parenthesis codes attached to the vertex they hang from. What
/// remains is a vertex-labelled core that goes through colour refinement
/// seeded by (distance to root, label) and an individualization search that
/// keeps the lexicographically least adjacency encoding. The search skips
/// interchangeable twins, jumps back on automorphisms found against the first
/// leaf, and prunes first-path children by known orbits.
///
/// Throws CapExceeded when g has more than `max_vertices` vertices and
/// ValidationError when g is disconnected or root is out of range.
Certificate canonical_form(const Graph& g, Vertex root, std::size_t max_vertices = kDefaultCanonCap);

std::string to_hex(const Certificate& cert);
Certificate from_hex(std::string_view hex);

}  // namespace perclab
