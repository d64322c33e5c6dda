#include "perclab/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "perclab/errors.hpp"

namespace perclab {

std::string_view method_name(ExpansionMethod m) {
  switch (m) {
    case ExpansionMethod::exact: return "exact";
    case ExpansionMethod::spectral: return "spectral";
    case ExpansionMethod::cut_witness: return "cut_witness";
  }
  return "?";
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> a) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : a) {
    g.check_vertex(v);
    in[v] = 1;
  }
  return in;
}

// Smaller side of the cut given by `in` (ties keep the marked side).
std::vector<Vertex> smaller_side(const std::vector<char>& in) {
  std::vector<Vertex> inside, outside;
  for (Vertex v = 0; v < in.size(); ++v) (in[v] ? inside : outside).push_back(v);
  return inside.size() <= outside.size() ? inside : outside;
}

}  // namespace

std::vector<Edge> edge_boundary(const Graph& g, std::span<const Vertex> a) {
  const auto in = membership(g, a);
  std::vector<Edge> out;
  for (auto e : g.edges()) {
    if (in[e.first] != in[e.second]) out.push_back(e);
  }
  return out;
}

Rational cut_ratio(const Graph& g, std::span<const Vertex> a) {
  const auto in = membership(g, a);
  const auto inside = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  const std::size_t side = std::min(inside, g.num_vertices() - inside);
  if (side == 0) throw ValidationError("cut_ratio: the cut must split the vertex set");
  std::int64_t crossing = 0;
  for (auto e : g.edges()) crossing += in[e.first] != in[e.second];
  return {crossing, static_cast<std::int64_t>(side)};
}

ExpansionReport cheeger_exact(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.num_vertices();
  if (n > max_n) {
    throw CapExceeded("cheeger_exact: n=" + std::to_string(n) + " exceeds the subset-enumeration cap " +
                      std::to_string(max_n));
  }
  if (n < 2) throw ValidationError("cheeger_exact needs at least 2 vertices");
  if (n > 62) throw CapExceeded("cheeger_exact: n too large for bitmask enumeration");

  std::vector<std::uint64_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  // Sorted-list lexicographic order on vertex sets given as bitmasks.
  auto lex_less = [](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const int x = std::countr_zero(diff);
    const std::uint64_t above = x == 63 ? 0 : ~((std::uint64_t{2} << x) - 1);
    if (a >> x & 1) return (b & above) != 0;
    return (a & above) == 0;
  };

  std::uint64_t mask = 0, best_mask = 0;
  std::int64_t size = 0, boundary = 0;
  std::int64_t best_num = 0, best_den = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << v;
    const auto deg = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
    if (mask & bit) {
      mask ^= bit;
      boundary -= deg - 2 * std::popcount(nbr[v] & mask);
      --size;
    } else {
      boundary += deg - 2 * std::popcount(nbr[v] & mask);
      mask ^= bit;
      ++size;
    }
    if (size == 0 || 2 * static_cast<std::size_t>(size) > n) continue;
    if (best_den == 0 || boundary * best_den < best_num * size ||
        (boundary * best_den == best_num * size && lex_less(mask, best_mask))) {
      best_num = boundary;
      best_den = size;
      best_mask = mask;
    }
  }

  ExpansionReport report;
  report.method = ExpansionMethod::exact;
  const Rational h(best_num, best_den);
  report.lower_exact = h;
  report.upper_exact = h;
  report.lower = report.upper = h.to_double();
  std::vector<Vertex> witness;
  for (Vertex v = 0; v < n; ++v) {
    if (best_mask >> v & 1) witness.push_back(v);
  }
  report.witness = std::move(witness);
  return report;
}

ExpansionReport cut_witness(const Graph& g, std::span<const Vertex> a) {
  const auto in = membership(g, a);
  ExpansionReport report;
  report.method = ExpansionMethod::cut_witness;
  const Rational ratio = cut_ratio(g, a);
  report.lower_exact = Rational(0);
  report.upper_exact = ratio;
  report.lower = 0.0;
  report.upper = ratio.to_double();
  report.witness = smaller_side(in);
  return report;
}

namespace {

// Bridges as (parent, child) DFS-tree edges with the child's subtree size.
struct Bridge {
  Vertex parent;
  Vertex child;
  std::size_t subtree;
};

std::vector<Bridge> find_bridges(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> order(n, kUnreachable), low(n, 0);
  std::vector<std::size_t> subtree(n, 1);
  std::vector<Bridge> bridges;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  std::uint32_t clock = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (order[s] != kUnreachable) continue;
    std::vector<Frame> stack{{s, static_cast<EdgeId>(-1), 0}};
    order[s] = low[s] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      auto ids = g.incident_edges(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next];
        const EdgeId id = ids[f.next++];
        if (id == f.via) continue;
        if (order[w] == kUnreachable) {
          order[w] = low[w] = clock++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[child]);
      subtree[parent] += subtree[child];
      if (low[child] > order[parent]) bridges.push_back({parent, child, subtree[child]});
    }
  }
  return bridges;
}

// Evaluates every prefix of `order` as a cut; returns (best ratio, prefix length).
std::pair<Rational, std::size_t> sweep(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in(n, 0);
  std::int64_t boundary = 0;
  std::optional<Rational> best;
  std::size_t best_k = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Vertex v = order[k];
    std::int64_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in[w];
    boundary += static_cast<std::int64_t>(g.degree(v)) - 2 * inside;
    in[v] = 1;
    const auto side = static_cast<std::int64_t>(std::min(k + 1, n - k - 1));
    const Rational ratio(boundary, side);
    if (!best || ratio < *best) {
      best = ratio;
      best_k = k + 1;
    }
  }
  return {*best, best_k};
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex source) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> order;
  for (Vertex s : {source}) {
    order.push_back(s);
    seen[s] = 1;
  }
  for (std::size_t head = 0; order.size() < g.num_vertices(); ++head) {
    if (head == order.size()) {  // next component
      Vertex s = 0;
      while (seen[s]) ++s;
      order.push_back(s);
      seen[s] = 1;
    }
    for (Vertex w : g.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

}  // namespace

ExpansionReport cheeger_upper_search(const Graph& g, const SpectralOptions& opts) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ValidationError("cheeger_upper_search needs at least 2 vertices");

  std::optional<Rational> best;
  std::vector<Vertex> best_side;
  auto consider = [&](const Rational& ratio, auto&& make_side) {
    if (!best || ratio < *best) {
      best = ratio;
      best_side = make_side();
    }
  };

  if (!is_connected(g)) {
    const auto label = component_labels(g);
    consider(Rational(0), [&] {
      std::vector<char> in(n, 0);
      for (Vertex v = 0; v < n; ++v) in[v] = label[v] == label[0];
      return smaller_side(in);
    });
  }

  for (const auto& b : find_bridges(g)) {
    const std::size_t side = std::min(b.subtree, n - b.subtree);
    consider(Rational(1, static_cast<std::int64_t>(side)), [&] {
      // Subtree of the child: everything reachable without the bridge edge.
      std::vector<char> in(n, 0);
      std::vector<Vertex> queue{b.child};
      in[b.child] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
          if (in[w] || (queue[head] == b.child && w == b.parent)) continue;
          in[w] = 1;
          queue.push_back(w);
        }
      }
      return smaller_side(in);
    });
  }

  auto consider_order = [&](const std::vector<Vertex>& order) {
    auto [ratio, k] = sweep(g, order);
    consider(ratio, [&] {
      std::vector<char> in(n, 0);
      for (std::size_t i = 0; i < k; ++i) in[order[i]] = 1;
      return smaller_side(in);
    });
  };

  const auto from0 = bfs_order(g, 0);
  consider_order(from0);
  consider_order(bfs_order(g, from0.back()));

  if (n <= opts.dense_limit && is_connected(g)) {
    const FiedlerPair fp = fiedler_pair(g, opts);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return fp.vector[a] < fp.vector[b]; });
    consider_order(order);
  }

  ExpansionReport report;
  report.method = ExpansionMethod::cut_witness;
  report.lower_exact = Rational(0);
  report.upper_exact = *best;
  report.upper = best->to_double();
  std::sort(best_side.begin(), best_side.end());
  report.witness = std::move(best_side);
  return report;
}

Rational constant_K(std::size_t delta, const Rational& c, const Rational& p0) {
  if (delta == 0) throw ValidationError("constant_K: delta must be positive");
  if (c <= Rational(0)) throw ValidationError("constant_K: c must be positive");
  if (p0 <= Rational(0) || p0 > Rational(1)) throw ValidationError("constant_K: p0 must lie in (0, 1]");
  return Rational(4 * static_cast<std::int64_t>(delta)) / (c * p0);
}

MengerReport menger_expander_bound(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2,
                                   const Rational& c, std::optional<Rational> K, std::optional<Rational> p0,
                                   std::size_t min_size) {
  if (a1.size() < min_size || a2.size() < min_size) {
    throw ValidationError("menger_expander_bound: terminal sets smaller than the stated minimum " +
                          std::to_string(min_size));
  }
  const FlowResult flow = edge_disjoint_paths(g, a1, a2);
  const std::size_t n = g.num_vertices();

  MengerReport r;
  r.flow = flow.value;
  r.a1_size = a1.size();
  r.a2_size = a2.size();
  r.c = c;
  const auto min_side = static_cast<std::int64_t>(std::min(a1.size(), a2.size()));
  r.expansion_bound_holds = Rational(static_cast<std::int64_t>(flow.value)) >= c * Rational(min_side);
  r.flow_per_min_side = static_cast<double>(flow.value) / static_cast<double>(min_side);
  if (p0) r.flow_per_quarter_mass = static_cast<double>(flow.value) / (static_cast<double>(n) * p0->to_double() / 4.0);

  for (const auto& p : flow.paths) r.path_lengths.push_back(p.size() - 1);
  if (K) {
    r.K = K;
    for (auto len : r.path_lengths) {
      if (Rational(static_cast<std::int64_t>(len)) <= *K) ++r.short_paths;
    }
    r.short_path_floor = static_cast<double>(flow.value) -
                         static_cast<double>(g.delta_bound()) * static_cast<double>(n) / (2.0 * K->to_double());
    r.short_path_bound_holds = static_cast<double>(r.short_paths) >= r.short_path_floor;
  }

  if (n >= 2 && n <= kExactCheegerCap) {
    r.exact_h = *cheeger_exact(g).lower_exact;
    r.c_valid = !(*r.exact_h < c);
  }
  return r;
}

}  // namespace perclab
