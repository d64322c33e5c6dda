#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace perclab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1 with a declared degree
/// bound. Immutable after construction. Adjacency is stored CSR-style with
/// sorted neighbor lists; each adjacency slot also carries the id of the
/// undirected edge it belongs to, where edges are numbered in (u, v), u < v,
/// lexicographic order.
class Graph {
 public:
  Graph() = default;

  /// Throws ValidationError on self-loops, duplicates, out-of-range ids or a
  /// degree above `delta_bound`. delta_bound = 0 means "use observed max
  /// degree" (at least 1).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::size_t delta_bound = 0);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t delta_bound() const noexcept { return delta_bound_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical edge list, u < v, sorted.
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v < num_vertices(); }
  /// Throws ValidationError when v is not a vertex.
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.delta_bound_ == b.delta_bound_ && a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Edge> edges_;
  std::size_t delta_bound_ = 1;
  std::size_t max_degree_ = 0;
};

inline constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;

/// Hop distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Component label per vertex, labels numbered 0.. in order of smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g);

bool is_connected(const Graph& g);

/// Largest hop distance from v inside its component.
std::uint32_t eccentricity(const Graph& g, Vertex v);

/// Graph induced on `vertices` (relabeled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace perclab
