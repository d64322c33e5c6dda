#include "perclab/ball.hpp"

#include <string>
#include <unordered_map>

#include "perclab/errors.hpp"

namespace perclab {

BallVertices ball_vertices(const Graph& g, Vertex o, std::uint32_t r) {
  g.check_vertex(o);
  BallVertices ball;
  std::unordered_map<Vertex, std::uint32_t> seen;
  ball.vertices.push_back(o);
  ball.depth.push_back(0);
  seen.emplace(o, 0);
  for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
    const std::uint32_t d = ball.depth[head];
    if (d == r) break;  // BFS order: everything after is at depth r too
    for (Vertex w : g.neighbors(ball.vertices[head])) {
      if (seen.emplace(w, d + 1).second) {
        ball.vertices.push_back(w);
        ball.depth.push_back(d + 1);
      }
    }
  }
  return ball;
}

BallGraph ball_subgraph(const Graph& g, Vertex o, std::uint32_t r) {
  BallVertices bv = ball_vertices(g, o, r);
  std::unordered_map<Vertex, Vertex> local;
  local.reserve(bv.vertices.size());
  for (std::size_t i = 0; i < bv.vertices.size(); ++i) local.emplace(bv.vertices[i], static_cast<Vertex>(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < bv.vertices.size(); ++i) {
    for (Vertex w : g.neighbors(bv.vertices[i])) {
      auto it = local.find(w);
      if (it != local.end() && it->second > i) edges.emplace_back(static_cast<Vertex>(i), it->second);
    }
  }
  return {Graph::from_edges(bv.vertices.size(), edges, g.delta_bound()), std::move(bv)};
}

RootedBall extract_ball(const Graph& g, Vertex o, std::uint32_t r, std::size_t max_vertices) {
  BallVertices probe = ball_vertices(g, o, r);
  if (probe.vertices.size() > max_vertices) {
    throw CapExceeded("ball of radius " + std::to_string(r) + " has " + std::to_string(probe.vertices.size()) +
                      " vertices, canonicalization cap is " + std::to_string(max_vertices));
  }
  BallGraph bg = ball_subgraph(g, o, r);
  RootedBall ball;
  ball.graph_ = std::move(bg.graph);
  ball.root_ = 0;
  ball.radius_ = r;
  ball.certificate_ = canonical_form(ball.graph_, 0, max_vertices);
  ball.source_ = std::move(bg.members.vertices);
  ball.depth_ = std::move(bg.members.depth);
  return ball;
}

RootedBall RootedBall::from_graph(Graph graph, Vertex root, std::uint32_t radius, std::size_t max_vertices) {
  auto dist = bfs_distances(graph, root);
  for (auto d : dist) {
    if (d == kUnreachable || d > radius) {
      throw ValidationError("graph is not a ball of radius " + std::to_string(radius) + " around its root");
    }
  }
  RootedBall ball;
  ball.certificate_ = canonical_form(graph, root, max_vertices);
  ball.graph_ = std::move(graph);
  ball.root_ = root;
  ball.radius_ = radius;
  ball.depth_ = std::move(dist);
  ball.source_.resize(ball.graph_.num_vertices());
  for (Vertex v = 0; v < ball.source_.size(); ++v) ball.source_[v] = v;
  return ball;
}

Certificate canonical_certificate(const RootedBall& b, std::size_t max_vertices) {
  return canonical_form(b.graph(), b.root(), max_vertices);
}

bool rooted_isomorphic(const RootedBall& a, const RootedBall& b) {
  if (a.radius() != b.radius()) {
    throw ValidationError("rooted_isomorphic: radius mismatch (" + std::to_string(a.radius()) + " vs " +
                          std::to_string(b.radius()) + ")");
  }
  return a.certificate() == b.certificate();
}

bool ball_class_member(const Graph& g, Vertex o, const RootedBall& target) {
  return extract_ball(g, o, target.radius()).certificate() == target.certificate();
}

}  // namespace perclab
