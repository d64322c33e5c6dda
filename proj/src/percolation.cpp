#include "perclab/percolation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "perclab/ball.hpp"
#include "perclab/errors.hpp"

namespace perclab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns the size of the merged component.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return size_[a];
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void format_double(std::string& out, double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, ptr);
}

}  // namespace

void validate(const PercConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ValidationError("percolation p must lie in [0, 1]");
  if (cfg.trials == 0) throw ValidationError("percolation needs trials >= 1");
}

double Estimate::low() const { return std::max(0.0, value - half_width); }
double Estimate::high() const { return std::min(1.0, value + half_width); }
double Estimate::std_error() const {
  return trials == 0 ? 0.0 : std::sqrt(value * (1.0 - value) / static_cast<double>(trials));
}

Estimate binomial_estimate(std::size_t successes, std::size_t trials) {
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  if (trials == 0) return e;
  e.value = static_cast<double>(successes) / static_cast<double>(trials);
  e.half_width = 1.96 * e.std_error();
  return e;
}

std::string PercolationSample::open_edges_hex(std::size_t num_edges) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t byte = 0; byte * 8 < num_edges; ++byte) {
    const auto b = static_cast<unsigned>(open_edges[byte / 8] >> (8 * (byte % 8)) & 0xFF);
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

PercolationSample percolate(const Graph& g, const PercConfig& cfg, std::size_t trial_index) {
  validate(cfg);
  if (trial_index >= cfg.trials) throw ValidationError("percolate: trial_index must be < trials");
  const std::uint64_t key = trial_key(cfg.seed, trial_index);
  PercolationSample s;
  s.open_edges.assign((g.num_edges() + 63) / 64, 0);
  UnionFind uf(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (to_unit(splitmix_at(key, e)) < cfg.p) {
      s.open_edges[e / 64] |= std::uint64_t{1} << (e % 64);
      uf.unite(g.edges()[e].first, g.edges()[e].second);
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (uf.find(v) == v) {
      const std::size_t size = uf.size_of(v);
      ++s.component_histogram[size];
      s.largest_component = std::max(s.largest_component, size);
    }
  }
  return s;
}

std::size_t giant_threshold(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0, 1]");
  // Guard against alpha*n landing a hair above an integer through rounding.
  return static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) * (1.0 - 1e-12)));
}

Estimate giant_probability(const Graph& g, const PercConfig& cfg, double alpha) {
  validate(cfg);
  const std::size_t need = giant_threshold(alpha, g.num_vertices());
  std::size_t hits = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) hits += percolate(g, cfg, t).largest_component >= need;
  return binomial_estimate(hits, cfg.trials);
}

SurvivalEstimate ball_survival(const Graph& g, Vertex o, std::uint32_t R, const PercConfig& cfg) {
  validate(cfg);
  if (R < 1) throw ValidationError("ball_survival needs R >= 1");
  const BallGraph ball = ball_subgraph(g, o, R);
  const auto& depth = ball.members.depth;
  SurvivalEstimate out;
  out.radius = R;
  out.p = cfg.p;
  out.seed = cfg.seed;

  if (depth.back() < R) {
    out.estimate = binomial_estimate(0, cfg.trials);
    return out;
  }
  const Graph& b = ball.graph;
  std::vector<std::uint32_t> stamp(b.num_vertices(), 0);
  std::vector<Vertex> queue;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t key = trial_key(cfg.seed, t);
    const auto mark = static_cast<std::uint32_t>(t + 1);
    queue.assign(1, 0);
    stamp[0] = mark;
    bool reached = false;
    for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
      const Vertex u = queue[head];
      auto nb = b.neighbors(u);
      auto ids = b.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Vertex w = nb[i];
        if (stamp[w] == mark || !(to_unit(splitmix_at(key, ids[i])) < cfg.p)) continue;
        stamp[w] = mark;
        if (depth[w] == R) {
          reached = true;
          break;
        }
        queue.push_back(w);
      }
    }
    hits += reached;
  }
  out.estimate = binomial_estimate(hits, cfg.trials);
  return out;
}

ReachDistribution reach_set_size(const Graph& g, Vertex o, std::uint32_t R, const PercConfig& cfg) {
  validate(cfg);
  if (R < 1) throw ValidationError("reach_set_size needs R >= 1");
  g.check_vertex(o);
  ReachDistribution out;
  out.radius = R;
  out.trials = cfg.trials;
  std::unordered_map<Vertex, std::uint32_t> dist;
  std::vector<Vertex> queue;
  std::size_t big = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t key = trial_key(cfg.seed, t);
    dist.clear();
    dist.emplace(o, 0);
    queue.assign(1, o);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const std::uint32_t du = dist[u];
      if (du == R) continue;
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (dist.count(nb[i]) || !(to_unit(splitmix_at(key, ids[i])) < cfg.p)) continue;
        dist.emplace(nb[i], du + 1);
        queue.push_back(nb[i]);
      }
    }
    ++out.counts[queue.size()];
    big += queue.size() >= R;
  }
  out.at_least_radius = binomial_estimate(big, cfg.trials);
  return out;
}

std::vector<ScanRow> threshold_scan(const Graph& g, std::span<const double> p_grid, double alpha,
                                    std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw ValidationError("threshold_scan needs trials >= 1");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0)) throw ValidationError("p grid values must lie in [0, 1]");
    if (i > 0 && p_grid[i] < p_grid[i - 1]) throw ValidationError("p grid must be sorted ascending");
  }
  const std::size_t need = giant_threshold(alpha, g.num_vertices());
  const std::size_t m = g.num_edges();
  std::vector<std::size_t> hits(p_grid.size(), 0);
  std::vector<std::pair<double, EdgeId>> order(m);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t key = trial_key(seed, t);
    for (EdgeId e = 0; e < m; ++e) order[e] = {to_unit(splitmix_at(key, e)), e};
    std::sort(order.begin(), order.end());
    UnionFind uf(g.num_vertices());
    std::size_t largest = g.num_vertices() > 0 ? 1 : 0;
    std::size_t next = 0;
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
      for (; next < m && order[next].first < p_grid[j]; ++next) {
        auto [u, v] = g.edges()[order[next].second];
        largest = std::max(largest, uf.unite(u, v));
      }
      hits[j] += largest >= need;
    }
  }
  std::vector<ScanRow> rows;
  for (std::size_t j = 0; j < p_grid.size(); ++j) {
    rows.push_back({p_grid[j], alpha, binomial_estimate(hits[j], trials), seed});
  }
  return rows;
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "p,alpha,prob,ci_low,ci_high,trials,seed\n";
  for (const auto& r : rows) {
    format_double(out, r.p);
    out += ',';
    format_double(out, r.alpha);
    out += ',';
    format_double(out, r.prob.value);
    out += ',';
    format_double(out, r.prob.low());
    out += ',';
    format_double(out, r.prob.high());
    out += ',' + std::to_string(r.prob.trials) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

namespace {

// 1 - (1 - q)^k; the log form keeps precision once q is tiny.
double at_least_one(double q, std::size_t k) {
  const auto kd = static_cast<double>(k);
  if (q > 1e-3) return 1.0 - std::pow(1.0 - q, kd);
  return -std::expm1(kd * std::log1p(-q));
}

}  // namespace

double tree_survival_oracle(std::size_t d, double p, std::uint32_t R) {
  if (d < 2) throw ValidationError("tree_survival_oracle needs d >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("tree_survival_oracle needs p in [0, 1]");
  if (R == 0) return 1.0;
  double below = 1.0;  // a_0
  for (std::uint32_t k = 1; k < R; ++k) below = at_least_one(p * below, d - 1);
  return at_least_one(p * below, d);
}

double tree_critical_probability(std::size_t d) {
  if (d < 2) throw ValidationError("tree_critical_probability needs d >= 2");
  return 1.0 / static_cast<double>(d - 1);
}

double sprinkled_p(double p1, double eps) { return 1.0 - (1.0 - p1) * (1.0 - eps); }

double sprinkled_p1(double p, double eps) {
  if (eps >= 1.0) throw ValidationError("sprinkling needs eps < 1");
  return 1.0 - (1.0 - p) / (1.0 - eps);
}

}  // namespace perclab
