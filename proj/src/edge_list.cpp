#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "perclab/errors.hpp"
#include "perclab/generators.hpp"

namespace perclab {

namespace {

constexpr std::uint64_t kMaxVertexId = std::numeric_limits<Vertex>::max() - 1;

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > kMaxVertexId)) {
    throw ParseError(line_no, "vertex id overflow: '" + std::string(token) + "'");
  }
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_seen;
  std::uint64_t declared_n = 0;
  bool have_header = false;
  std::uint64_t max_id_plus_one = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty() || parts[0][0] == '#') continue;

    if (parts[0] == "n") {
      if (parts.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (have_header) throw ParseError(line_no, "duplicate 'n' header");
      if (!edges.empty()) throw ParseError(line_no, "'n' header must precede all edges");
      declared_n = parse_id(parts[1], line_no);
      have_header = true;
      continue;
    }
    if (parts.size() != 2) throw ParseError(line_no, "expected 'u v', got '" + line + "'");
    const auto u = parse_id(parts[0], line_no);
    const auto v = parse_id(parts[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (auto [it, fresh] = first_seen.emplace(e, line_no); !fresh) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                    " (first on line " + std::to_string(it->second) + ")");
    }
    if (have_header && std::max(u, v) >= declared_n) {
      throw ParseError(line_no, "vertex id " + std::to_string(std::max(u, v)) + " >= declared n " +
                                    std::to_string(declared_n));
    }
    max_id_plus_one = std::max(max_id_plus_one, std::max(u, v) + 1);
    edges.push_back(e);
  }
  const std::uint64_t n = have_header ? declared_n : max_id_plus_one;
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  Vertex top = 0;
  for (auto [u, v] : g.edges()) top = std::max(top, v);
  if (g.num_edges() == 0 || top + 1 != g.num_vertices()) {
    out += "n " + std::to_string(g.num_vertices()) + "\n";
  }
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace perclab
