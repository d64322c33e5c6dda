#include "perclab/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "perclab/errors.hpp"
#include "perclab/random.hpp"

namespace perclab {

namespace {

constexpr int kRejectionCap = 1000;

std::size_t isqrt(std::size_t n) {
  auto k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (k * k > n) --k;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

std::vector<Edge> cycle_edges(Vertex first, std::size_t len) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < len; ++i) {
    edges.emplace_back(first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % len));
  }
  return edges;
}

std::vector<Edge> random_regular_edges(std::size_t n, std::size_t d, SplitMix64& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    for (std::size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Vertex u = std::min(stubs[i], stubs[i + 1]);
      const Vertex v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) return edges;
  }
  throw CapExceeded("random_regular: no simple pairing after " + std::to_string(kRejectionCap) + " attempts");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::torus2d: return "torus2d";
    case Family::random_regular: return "random_regular";
    case Family::bridged_pair: return "bridged_pair";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::cycle, Family::complete, Family::torus2d, Family::random_regular, Family::bridged_pair}) {
    if (family_name(f) == name) return f;
  }
  throw ValidationError("unknown graph family '" + std::string(name) + "'");
}

void validate(const GenSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::cycle:
      if (n < 3) throw ValidationError("cycle needs n >= 3");
      break;
    case Family::complete:
      if (n < 2) throw ValidationError("complete needs n >= 2");
      break;
    case Family::torus2d: {
      const std::size_t k = isqrt(n);
      if (k * k != n) throw ValidationError("torus2d needs a perfect-square n, got " + std::to_string(n));
      if (k < 3) throw ValidationError("torus2d needs side >= 3");
      break;
    }
    case Family::random_regular:
      if (spec.d < 3) throw ValidationError("random_regular needs d >= 3");
      if ((n * spec.d) % 2 != 0) throw ValidationError("random_regular needs n*d even");
      if (n <= spec.d) throw ValidationError("random_regular needs n > d");
      break;
    case Family::bridged_pair:
      if (n % 2 != 0) throw ValidationError("bridged_pair needs even n");
      if (n < 10) throw ValidationError("bridged_pair needs n >= 10 (4-regular half on >= 5 vertices)");
      break;
  }
}

Graph random_regular(std::size_t n, std::size_t d, SplitMix64& rng) {
  return Graph::from_edges(n, random_regular_edges(n, d, rng), d);
}

Graph generate(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::cycle:
      return Graph::from_edges(n, cycle_edges(0, n), 2);
    case Family::complete: {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return Graph::from_edges(n, edges, n - 1);
    }
    case Family::torus2d: {
      const std::size_t k = isqrt(n);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const auto v = static_cast<Vertex>(i * k + j);
          edges.emplace_back(v, static_cast<Vertex>(((i + 1) % k) * k + j));
          edges.emplace_back(v, static_cast<Vertex>(i * k + (j + 1) % k));
        }
      }
      return Graph::from_edges(n, edges, 4);
    }
    case Family::random_regular: {
      SplitMix64 rng(spec.seed);
      return random_regular(n, spec.d, rng);
    }
    case Family::bridged_pair: {
      const std::size_t half = n / 2;
      SplitMix64 rng(spec.seed);
      std::vector<Edge> edges = random_regular_edges(half, 4, rng);
      auto ring = cycle_edges(static_cast<Vertex>(half), half);
      edges.insert(edges.end(), ring.begin(), ring.end());
      edges.emplace_back(0, static_cast<Vertex>(half));
      return Graph::from_edges(n, edges, 5);
    }
  }
  throw ValidationError("unknown family");
}

Graph regular_tree_ball(std::size_t d, std::uint32_t radius) {
  if (d < 2) throw ValidationError("regular_tree_ball needs d >= 2");
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (std::uint32_t level = 0; level < radius; ++level) {
    std::vector<Vertex> grown;
    for (Vertex v : frontier) {
      const std::size_t kids = level == 0 ? d : d - 1;
      for (std::size_t i = 0; i < kids; ++i) {
        edges.emplace_back(v, next);
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return Graph::from_edges(next, edges, d);
}

std::string to_key_values(const GenSpec& spec) {
  std::ostringstream out;
  out << "family=" << family_name(spec.family) << "\n"
      << "n=" << spec.n << "\n"
      << "d=" << spec.d << "\n"
      << "seed=" << spec.seed << "\n";
  return out.str();
}

GenSpec gen_spec_from_key_values(std::string_view text) {
  GenSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  auto number = [](std::string_view key, std::string_view value) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
      throw ValidationError("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
    }
    return x;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("expected key=value, got '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "family") spec.family = parse_family(value);
    else if (key == "n") spec.n = number(key, value);
    else if (key == "d") spec.d = number(key, value);
    else if (key == "seed") spec.seed = number(key, value);
    else throw ValidationError("unknown GenSpec key '" + key + "'");
  }
  return spec;
}

}  // namespace perclab
