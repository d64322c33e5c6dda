#include "perclab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "perclab/errors.hpp"

namespace perclab {

namespace {

using Colors = std::vector<std::uint32_t>;
using Encoding = std::vector<std::uint32_t>;

struct Core {
  std::vector<std::vector<std::uint32_t>> adj;  // sorted
  std::vector<std::string> label;               // concatenated pendant-tree codes
  std::uint32_t root = 0;
};

// Peels pendant trees into labels; returns the labelled core.
Core strip_pendant_trees(const Graph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<std::vector<std::string>> pending(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (v != root && deg[v] == 1) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    auto& kids = pending[v];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      pending[w].push_back(std::move(code));
      if (--deg[w] == 1 && w != root) queue.push_back(w);
      break;
    }
  }

  Core core;
  std::vector<std::uint32_t> local(n, kUnreachable);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      local[v] = static_cast<std::uint32_t>(members.size());
      members.push_back(v);
    }
  }
  core.root = local[root];
  core.adj.resize(members.size());
  core.label.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      if (!removed[w]) core.adj[i].push_back(local[w]);
    }
    auto& kids = pending[members[i]];
    std::sort(kids.begin(), kids.end());
    for (auto& k : kids) core.label[i] += k;
  }
  return core;
}

// Replace colours by the rank of their signature among all distinct
// signatures; returns the number of classes.
template <typename Sig>
std::uint32_t rank_by(std::vector<Sig>& sigs, Colors& colors) {
  const std::size_t n = sigs.size();
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return sigs[a] < sigs[b]; });
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && sigs[idx[i - 1]] < sigs[idx[i]]) ++rank;
    colors[idx[i]] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

class Canonizer {
 public:
  explicit Canonizer(const Core& core) : core_(core), n_(static_cast<std::uint32_t>(core.adj.size())) {}

  Colors initial_colors() const {
    std::vector<std::uint32_t> dist(n_, kUnreachable);
    std::vector<std::uint32_t> queue{core_.root};
    dist[core_.root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto w : core_.adj[queue[head]]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[queue[head]] + 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::pair<std::uint32_t, const std::string*>> sigs(n_);
    for (std::uint32_t v = 0; v < n_; ++v) sigs[v] = {dist[v], &core_.label[v]};
    std::vector<std::pair<std::uint32_t, std::string_view>> keyed(n_);
    for (std::uint32_t v = 0; v < n_; ++v) keyed[v] = {sigs[v].first, *sigs[v].second};
    Colors colors(n_);
    rank_by(keyed, colors);
    return colors;
  }

  std::uint32_t refine(Colors& colors) const {
    std::uint32_t classes = 0;
    for (auto c : colors) classes = std::max(classes, c + 1);
    std::vector<std::vector<std::uint32_t>> sigs(n_);
    for (;;) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        auto& s = sigs[v];
        s.clear();
        s.push_back(colors[v]);
        for (auto w : core_.adj[v]) s.push_back(colors[w]);
        std::sort(s.begin() + 1, s.end());
      }
      const std::uint32_t next = rank_by(sigs, colors);
      if (next == classes) return classes;
      classes = next;
    }
  }

  Encoding run() {
    Colors colors = initial_colors();
    refine(colors);
    std::vector<std::uint32_t> path;
    search(colors, path);
    return best_;
  }

  // Order of vertices (by position) at the first leaf; used to read labels.
  const std::vector<std::uint32_t>& first_order() const { return first_order_; }

 private:
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  bool twins(std::uint32_t u, std::uint32_t v) const {
    const auto& a = core_.adj[u];
    const auto& b = core_.adj[v];
    if (a.size() != b.size()) return false;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i < a.size() && a[i] == v) { ++i; continue; }
      if (j < b.size() && b[j] == u) { ++j; continue; }
      if (i == a.size() || j == b.size() || a[i] != b[j]) return false;
      ++i;
      ++j;
    }
    return true;
  }

  Encoding encode(const Colors& pos, std::vector<std::uint32_t>& order) const {
    order.assign(n_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) order[pos[v]] = v;
    Encoding enc;
    std::vector<std::uint32_t> higher;
    for (std::uint32_t i = 0; i < n_; ++i) {
      higher.clear();
      for (auto w : core_.adj[order[i]]) {
        if (pos[w] > i) higher.push_back(pos[w]);
      }
      std::sort(higher.begin(), higher.end());
      enc.push_back(static_cast<std::uint32_t>(higher.size()));
      enc.insert(enc.end(), higher.begin(), higher.end());
    }
    return enc;
  }

  bool on_first_path(const std::vector<std::uint32_t>& path) const {
    return have_first_ && path.size() <= first_path_.size() &&
           std::equal(path.begin(), path.end(), first_path_.begin());
  }

  // Union-find root of v under automorphisms that fix the first `depth`
  // individualized vertices.
  std::uint32_t orbit_of(std::uint32_t v, std::size_t depth) const {
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [fix_depth, perm] : automorphisms_) {
      if (fix_depth < depth) continue;
      for (std::uint32_t x = 0; x < n_; ++x) {
        auto a = find(x), b = find(perm[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    return find(v);
  }

  std::size_t search(Colors& colors, std::vector<std::uint32_t>& path) {
    std::uint32_t classes = 0;
    for (auto c : colors) classes = std::max(classes, c + 1);
    if (classes == n_) return leaf(colors, path);

    std::vector<std::uint32_t> size(classes, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    while (size[target] == 1) ++target;

    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }

    const std::size_t depth = path.size();
    std::vector<std::uint32_t> explored;
    Colors child(n_);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const std::uint32_t v = cell[i];
      bool twin = false;
      for (std::size_t j = 0; j < i && !twin; ++j) twin = twins(cell[j], v);
      if (twin) continue;
      if (!explored.empty() && on_first_path(path)) {
        const auto orbit = orbit_of(v, depth);
        bool seen = false;
        for (auto u : explored) seen = seen || orbit_of(u, depth) == orbit;
        if (seen) continue;
      }
      for (std::uint32_t w = 0; w < n_; ++w) {
        child[w] = colors[w] > target || (colors[w] == target && w != v) ? colors[w] + 1 : colors[w];
      }
      refine(child);
      path.push_back(v);
      const std::size_t jump = search(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  std::size_t leaf(const Colors& colors, const std::vector<std::uint32_t>& path) {
    std::vector<std::uint32_t> order;
    Encoding enc = encode(colors, order);
    if (!have_first_) {
      have_first_ = true;
      first_path_ = path;
      first_order_ = order;
      first_enc_ = enc;
      best_ = std::move(enc);
      return kNoJump;
    }
    if (enc == first_enc_) {
      std::vector<std::uint32_t> perm(n_);
      for (std::uint32_t i = 0; i < n_; ++i) perm[first_order_[i]] = order[i];
      std::size_t common = 0;
      while (common < path.size() && path[common] == first_path_[common]) ++common;
      automorphisms_.emplace_back(common, std::move(perm));
      return common;
    }
    if (enc < best_) best_ = std::move(enc);
    return kNoJump;
  }

  const Core& core_;
  std::uint32_t n_;
  bool have_first_ = false;
  std::vector<std::uint32_t> first_path_;
  std::vector<std::uint32_t> first_order_;
  Encoding first_enc_;
  Encoding best_;
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> automorphisms_;
};

void put_varint(Certificate& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(x | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(x));
}

}  // namespace

Certificate canonical_form(const Graph& g, Vertex root, std::size_t max_vertices) {
  g.check_vertex(root);
  if (g.num_vertices() > max_vertices) {
    throw CapExceeded("rooted graph has " + std::to_string(g.num_vertices()) +
                      " vertices, canonicalization cap is " + std::to_string(max_vertices) +
                      " (radius too large for the degree bound)");
  }
  if (!is_connected(g)) throw ValidationError("canonical_form requires a connected graph");

  const Core core = strip_pendant_trees(g, root);
  Canonizer canon(core);
  const Encoding enc = canon.run();

  Certificate cert;
  cert.push_back(1);  // format version
  put_varint(cert, core.adj.size());
  for (auto v : canon.first_order()) {
    put_varint(cert, core.label[v].size());
    for (char c : core.label[v]) cert.push_back(c == '(' ? 0x28 : 0x29);
  }
  for (auto x : enc) put_varint(cert, x);
  return cert;
}

std::string to_hex(const Certificate& cert) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * cert.size());
  for (auto b : cert) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

Certificate from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    throw ValidationError("certificate hex must be lowercase hex digits: '" + std::string(hex) + "'");
  };
  if (hex.size() % 2 != 0) throw ValidationError("certificate hex has odd length");
  Certificate out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace perclab
