#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "perclab/graph.hpp"
#include "perclab/random.hpp"

namespace perclab {

enum class Family { cycle, complete, torus2d, random_regular, bridged_pair };

std::string_view family_name(Family f);
/// Throws ValidationError for unknown names.
Family parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::cycle;
  std::size_t n = 0;
  /// Regularity degree; random_regular only.
  std::size_t d = 3;
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Throws ValidationError when the parameters are infeasible.
void validate(const GenSpec& spec);

/// Deterministic in (family, n, d, seed).
///   cycle           C_n, n >= 3                            (delta 2)
///   complete        K_n, n >= 2                            (delta n-1)
///   torus2d         k x k wrap-around grid, n = k^2, k >= 3 (delta 4)
///   random_regular  uniform simple d-regular graph by configuration-model
///                   pairing with rejection; CapExceeded after 1000 tries
///   bridged_pair    random 4-regular graph on vertices [0, n/2) plus the
///                   cycle on [n/2, n), joined by the edge {0, n/2} (delta 5)
Graph generate(const GenSpec& spec);

/// Configuration-model sampler shared by random_regular and bridged_pair.
/// Draws from `rng` until a simple pairing appears.
Graph random_regular(std::size_t n, std::size_t d, SplitMix64& rng);

/// Explicit radius-R ball of the infinite d-regular tree rooted at vertex 0
/// (root has d children, every other internal vertex d-1).
Graph regular_tree_ball(std::size_t d, std::uint32_t radius);

/// Flat "key=value" lines: family, n, d, seed.
std::string to_key_values(const GenSpec& spec);
GenSpec gen_spec_from_key_values(std::string_view text);

/// Edge-list text: "u v" per line, '#' comments, optional "n <count>" header
/// before the first edge. delta_bound of the result is the observed max
/// degree. Throws ParseError (with line number) on malformed lines,
/// self-loops, duplicate edges and id overflow.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);

/// Inverse of load_edge_list. Emits "n <count>" only when the edge list alone
/// would not imply the vertex count.
std::string write_edge_list(const Graph& g);

}  // namespace perclab
