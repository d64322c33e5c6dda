#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "perclab/canonical.hpp"
#include "perclab/graph.hpp"

namespace perclab {

/// Closed ball B_G(o, r): the subgraph induced on every vertex within
/// distance r of the root, root at local index 0, plus its canonical
/// certificate. Immutable.
class RootedBall {
 public:
  /// Wraps an explicit rooted graph as a ball of the given radius. Every
  /// vertex must lie within `radius` of `root`.
  static RootedBall from_graph(Graph graph, Vertex root, std::uint32_t radius,
                               std::size_t max_vertices = kDefaultCanonCap);

  const Graph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  std::uint32_t radius() const noexcept { return radius_; }
  const Certificate& certificate() const noexcept { return certificate_; }
  /// Vertex ids in the source graph, indexed by local id (identity for
  /// balls built with from_graph).
  std::span<const Vertex> source_vertices() const noexcept { return source_; }
  /// Local hop distance to the root, indexed by local id.
  std::span<const std::uint32_t> depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return graph_.num_vertices(); }

 private:
  friend RootedBall extract_ball(const Graph&, Vertex, std::uint32_t, std::size_t);

  Graph graph_;
  Vertex root_ = 0;
  std::uint32_t radius_ = 0;
  Certificate certificate_;
  std::vector<Vertex> source_;
  std::vector<std::uint32_t> depth_;
};

/// Vertices of B_G(o, r) in BFS order (o first) with their distances.
struct BallVertices {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> depth;
};
BallVertices ball_vertices(const Graph& g, Vertex o, std::uint32_t r);

/// Induced subgraph on ball_vertices(g, o, r); local ids follow BFS order,
/// so the root is local vertex 0.
struct BallGraph {
  Graph graph;
  BallVertices members;
};
BallGraph ball_subgraph(const Graph& g, Vertex o, std::uint32_t r);

/// Induced closed ball around o, certificate included. Deterministic: local
/// ids follow BFS discovery order over sorted adjacency.
RootedBall extract_ball(const Graph& g, Vertex o, std::uint32_t r,
                        std::size_t max_vertices = kDefaultCanonCap);

/// Recomputes the certificate from the ball's graph and root.
Certificate canonical_certificate(const RootedBall& b, std::size_t max_vertices = kDefaultCanonCap);

/// Root-preserving isomorphism test. Throws ValidationError on radius mismatch.
bool rooted_isomorphic(const RootedBall& a, const RootedBall& b);

/// True iff B_g(o, target.radius) is rooted-isomorphic to target.
bool ball_class_member(const Graph& g, Vertex o, const RootedBall& target);

}  // namespace perclab
