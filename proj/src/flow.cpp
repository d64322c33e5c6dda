#include <algorithm>
#include <limits>
#include <string>

#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"

namespace perclab {

namespace {

// Residual network: every undirected edge is a pair of mutually reverse arcs
// of capacity 1, terminal arcs have "infinite" capacity.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  int add_pair(std::uint32_t u, std::uint32_t v, std::int64_t cap_uv, std::int64_t cap_vu) {
    const int id = static_cast<int>(to_.size());
    push(u, v, cap_uv);
    push(v, u, cap_vu);
    return id;
  }

  // Dinic: BFS level graph, DFS blocking flow. Shortest augmenting paths first.
  std::size_t max_flow(std::uint32_t s, std::uint32_t t) {
    std::size_t total = 0;
    while (build_levels(s, t)) {
      cursor_ = head_;
      while (std::int64_t pushed = augment(s, t)) total += static_cast<std::size_t>(pushed);
    }
    return total;
  }

  std::vector<char> reachable(std::uint32_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::uint32_t> queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a = head_[queue[i]]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

  std::int64_t residual(int arc) const { return cap_[arc]; }

 private:
  void push(std::uint32_t from, std::uint32_t to, std::int64_t cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  bool build_levels(std::uint32_t s, std::uint32_t t) {
    level_.assign(head_.size(), -1);
    std::vector<std::uint32_t> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      for (int a = head_[u]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  // One unit along a level-increasing path (iterative DFS with arc cursors).
  std::int64_t augment(std::uint32_t s, std::uint32_t t) {
    std::vector<int> arcs;
    std::uint32_t u = s;
    while (u != t) {
      int& a = cursor_[u];
      while (a != -1 && !(cap_[a] > 0 && level_[to_[a]] == level_[u] + 1)) a = next_[a];
      if (a == -1) {
        if (u == s) return 0;
        level_[u] = -1;  // dead end
        const int back = arcs.back();
        arcs.pop_back();
        u = to_[back ^ 1];
        continue;
      }
      arcs.push_back(a);
      u = to_[a];
    }
    for (int a : arcs) {
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
    }
    return 1;
  }

  std::vector<int> head_;
  std::vector<std::uint32_t> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> next_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace

FlowResult edge_disjoint_paths(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2) {
  if (a1.empty() || a2.empty()) throw ValidationError("edge_disjoint_paths: terminal sets must be nonempty");
  const std::size_t n = g.num_vertices();
  std::vector<char> side(n, 0);  // 1 = a1, 2 = a2
  for (Vertex v : a1) {
    g.check_vertex(v);
    side[v] = 1;
  }
  for (Vertex v : a2) {
    g.check_vertex(v);
    if (side[v] == 1) throw ValidationError("edge_disjoint_paths: terminal sets overlap at vertex " + std::to_string(v));
    side[v] = 2;
  }

  const auto source = static_cast<std::uint32_t>(n);
  const auto sink = static_cast<std::uint32_t>(n + 1);
  constexpr std::int64_t kInfinite = std::numeric_limits<std::int32_t>::max();
  UnitFlowNetwork net(n + 2);
  std::vector<int> edge_arc(g.num_edges());
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.edges()[id];
    edge_arc[id] = net.add_pair(u, v, 1, 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 1) net.add_pair(source, v, kInfinite, 0);
    if (side[v] == 2) net.add_pair(v, sink, kInfinite, 0);
  }

  FlowResult result;
  result.value = net.max_flow(source, sink);

  const auto seen = net.reachable(source);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) result.source_side.push_back(v);
  }
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.edges()[id];
    if (seen[u] != seen[v]) result.min_cut.push_back(g.edges()[id]);
  }

  // Net flow per edge: residual of u->v is 1 - f(u->v).
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> flow_out(n);
  std::vector<char> used(g.num_edges(), 0);
  std::vector<std::int64_t> excess(n, 0);
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.edges()[id];
    const std::int64_t f = 1 - net.residual(edge_arc[id]);
    if (f > 0) flow_out[u].emplace_back(v, id);
    if (f < 0) flow_out[v].emplace_back(u, id);
    if (f != 0) {
      const Vertex from = f > 0 ? u : v, to = f > 0 ? v : u;
      ++excess[from];
      --excess[to];
    }
  }

  // Shortest-first decomposition: multi-source BFS from vertices with
  // remaining outflow to any a2 vertex with remaining inflow.
  for (std::size_t k = 0; k < result.value; ++k) {
    std::vector<std::int64_t> pred_edge(n, -1);
    std::vector<Vertex> pred(n, kUnreachable);
    std::vector<char> seen_v(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == 1 && excess[v] > 0) {
        seen_v[v] = 1;
        queue.push_back(v);
      }
    }
    Vertex end = kUnreachable;
    for (std::size_t head = 0; head < queue.size() && end == kUnreachable; ++head) {
      const Vertex u = queue[head];
      for (auto [w, id] : flow_out[u]) {
        if (used[id] || seen_v[w]) continue;
        seen_v[w] = 1;
        pred[w] = u;
        pred_edge[w] = static_cast<std::int64_t>(id);
        if (side[w] == 2 && excess[w] < 0) {
          end = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (end == kUnreachable) break;  // unreachable for a valid flow
    std::vector<Vertex> path{end};
    for (Vertex v = end; pred[v] != kUnreachable; v = pred[v]) {
      used[static_cast<std::size_t>(pred_edge[v])] = 1;
      path.push_back(pred[v]);
    }
    std::reverse(path.begin(), path.end());
    --excess[path.front()];
    ++excess[path.back()];
    result.paths.push_back(std::move(path));
  }
  return result;
}

}  // namespace perclab
