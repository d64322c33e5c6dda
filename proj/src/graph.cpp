#include "perclab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "perclab/errors.hpp"

namespace perclab {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t delta_bound) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  if (auto dup = std::adjacent_find(canon.begin(), canon.end()); dup != canon.end()) {
    throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + ")");
  }

  Graph g;
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : canon) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(2 * canon.size());
  g.edge_ids_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // neighbor list sorted: u's higher neighbors arrive in increasing order and
  // v's lower neighbors arrive in increasing u.
  for (std::size_t id = 0; id < canon.size(); ++id) {
    auto [u, v] = canon[id];
    g.neighbors_[cursor[v]] = u;
    g.edge_ids_[cursor[v]++] = static_cast<EdgeId>(id);
  }
  for (std::size_t id = 0; id < canon.size(); ++id) {
    auto [u, v] = canon[id];
    g.neighbors_[cursor[u]] = v;
    g.edge_ids_[cursor[u]++] = static_cast<EdgeId>(id);
  }
  g.edges_ = std::move(canon);
  g.max_degree_ = n == 0 ? 0 : *std::max_element(degree.begin(), degree.end());
  if (delta_bound == 0) {
    g.delta_bound_ = std::max<std::size_t>(1, g.max_degree_);
  } else {
    if (g.max_degree_ > delta_bound) {
      throw ValidationError("max degree " + std::to_string(g.max_degree_) + " exceeds delta bound " +
                            std::to_string(delta_bound));
    }
    g.delta_bound_ = delta_bound;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range for n=" +
                          std::to_string(num_vertices()));
  }
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> label(n, kUnreachable);
  std::vector<Vertex> queue;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnreachable) continue;
    queue.assign(1, s);
    label[s] = next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (label[w] == kUnreachable) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::uint32_t eccentricity(const Graph& g, Vertex v) {
  std::uint32_t ecc = 0;
  for (auto d : bfs_distances(g, v)) {
    if (d != kUnreachable) ecc = std::max(ecc, d);
  }
  return ecc;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] != kUnreachable && local[w] > i) edges.emplace_back(static_cast<Vertex>(i), local[w]);
    }
  }
  return Graph::from_edges(vertices.size(), edges, g.delta_bound());
}

}  // namespace perclab
