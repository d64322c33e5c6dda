#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "perclab/ball.hpp"
#include "perclab/errors.hpp"
#include "perclab/experiments.hpp"
#include "perclab/expansion.hpp"
#include "perclab/generators.hpp"
#include "perclab/locallimit.hpp"
#include "perclab/percolation.hpp"
#include "perclab/serialize.hpp"
#include "perclab/svg.hpp"

namespace perclab::cli {

namespace {

using nlohmann::json;

// Splices "key=value" lines from --config FILE in as "--key value" flags,
// skipping keys the command line already sets.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (it + 1 == args.end()) throw ValidationError("--config needs a file path");
  const std::string path = *(it + 1);
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");

  std::vector<std::string> rest(args.begin(), it);
  rest.insert(rest.end(), it + 2, args.end());
  std::set<std::string> given;
  for (const auto& a : rest) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  std::vector<std::string> injected;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("config line is not key=value: '" + line + "'");
    const std::string key = line.substr(0, eq);
    if (given.count(key)) continue;
    injected.push_back("--" + key);
    injected.push_back(line.substr(eq + 1));
  }
  // Insert right after the subcommand name.
  std::vector<std::string> out(rest.begin(), rest.begin() + std::min<std::size_t>(2, rest.size()));
  out.insert(out.end(), injected.begin(), injected.end());
  if (rest.size() > 2) out.insert(out.end(), rest.begin() + 2, rest.end());
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      grid.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad number in list: '" + item + "'");
    }
  }
  if (grid.empty()) throw ValidationError("empty list");
  return grid;
}

template <typename T>
std::vector<T> parse_ints(const std::string& text) {
  std::vector<T> out;
  for (double x : parse_grid(text)) {
    if (x < 0 || x != static_cast<double>(static_cast<T>(x))) throw ValidationError("expected integers in '" + text + "'");
    out.push_back(static_cast<T>(x));
  }
  return out;
}

Graph read_graph(const std::string& path) {
  if (path.empty()) throw ValidationError("an input edge-list file is required");
  if (path == "-") return load_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return load_edge_list(in);
}

void emit(const std::string& data, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << data;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + output + "'");
  file << data;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    const auto args = expand_config(raw_args);
    CLI::App app{"perclab: bond percolation and local weak convergence experiments", "perclab"};
    app.require_subcommand(1);
    std::string config_unused;
    app.add_option("--config", config_unused, "flat key=value file; command-line flags win");

    std::string output;
    std::string input;
    std::uint64_t seed = 1;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
    std::string family = "cycle";
    std::size_t gen_n = 0, gen_d = 3;
    gen->add_option("--family", family, "cycle|complete|torus2d|random_regular|bridged_pair")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--d", gen_d, "degree (random_regular)");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--output", output, "write the edge list here instead of stdout");

    // cheeger
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant report (JSON)");
    std::string mode = "exact";
    cheeger->add_option("input,--input", input, "edge-list file ('-' for stdin)");
    cheeger->add_option("--mode", mode, "exact|spectral|upper")->check(CLI::IsMember({"exact", "spectral", "upper"}));
    cheeger->add_option("--output", output);

    // scan
    auto* scan = app.add_subcommand("scan", "giant-component probability over a p grid");
    std::string p_grid_text = "0.4,0.6";
    double alpha = 0.05;
    std::size_t trials = 100;
    std::string format = "csv";
    scan->add_option("input,--input", input, "edge-list file ('-' for stdin)");
    scan->add_option("--p-grid", p_grid_text, "comma-separated ascending p values");
    scan->add_option("--alpha", alpha, "giant size fraction");
    scan->add_option("--trials", trials);
    scan->add_option("--seed", seed);
    scan->add_option("--format", format)->check(CLI::IsMember({"csv", "svg", "json"}));
    scan->add_option("--output", output);

    // verify-locality
    auto* locality = app.add_subcommand("verify-locality", "giant threshold vs the tree p_c on random regular graphs");
    LocalityConfig lc;
    std::string n_list_text = "1000,10000";
    locality->add_option("--d", lc.d);
    locality->add_option("--n-list", n_list_text, "comma-separated graph sizes");
    locality->add_option("--p-grid", p_grid_text);
    locality->add_option("--alpha", lc.alpha);
    locality->add_option("--trials", lc.trials);
    locality->add_option("--seed", seed);
    locality->add_option("--margin", lc.margin);
    locality->add_option("--fail-low", lc.fail_low);
    locality->add_option("--pass-high", lc.pass_high);
    locality->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    locality->add_option("--output", output);

    // verify-constancy
    auto* constancy = app.add_subcommand("verify-constancy", "expander vs bridged non-expander ball-class report");
    ConstancyConfig cc;
    std::string c_text = "1/10", p0_text = "1/2";
    std::string text_format = "text";
    constancy->add_option("--n", cc.negative_n, "bridged_pair size")->capture_default_str();
    constancy->add_option("--positive-n", cc.positive_n, "random 3-regular size")->capture_default_str();
    constancy->add_option("--seed", seed);
    constancy->add_option("--radius", cc.radius);
    constancy->add_option("--c", c_text, "claimed Cheeger lower bound for the class-flow step");
    constancy->add_option("--p0", p0_text, "claimed class mass for the class-flow step");
    constancy->add_option("--format", text_format)->check(CLI::IsMember({"text", "json"}));
    constancy->add_option("--output", output);

    // survival
    auto* survival = app.add_subcommand("survival", "P(root joined to the radius-R sphere) inside the ball");
    std::uint32_t vertex = 0, radius = 1;
    std::size_t tree_d = 0;
    double p = 0.5;
    survival->add_option("input,--input", input, "edge-list file (omit with --tree-d)");
    survival->add_option("--tree-d", tree_d, "use the radius-R ball of the d-regular tree instead of a file");
    survival->add_option("--vertex", vertex);
    survival->add_option("--radius", radius);
    survival->add_option("--p", p);
    survival->add_option("--trials", trials);
    survival->add_option("--seed", seed);
    survival->add_option("--output", output);

    // balls
    auto* balls = app.add_subcommand("balls", "radius-R ball-class distribution (JSON)");
    std::size_t samples = 0;
    std::string ball_mode = "exhaustive";
    balls->add_option("input,--input", input);
    balls->add_option("--radius", radius);
    balls->add_option("--mode", ball_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    balls->add_option("--samples", samples);
    balls->add_option("--seed", seed);
    balls->add_option("--output", output);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kValidation;
    }

    if (gen->parsed()) {
      GenSpec spec{parse_family(family), gen_n, gen_d, seed};
      const Graph g = generate(spec);
      emit(write_edge_list(g), output, out);
      err << "n=" << g.num_vertices() << " edges=" << g.num_edges() << " max_degree=" << g.max_degree() << "\n";
      return kOk;
    }
    if (cheeger->parsed()) {
      const Graph g = read_graph(input);
      ExpansionReport report = mode == "exact"      ? cheeger_exact(g)
                               : mode == "spectral" ? cheeger_spectral_bounds(g)
                                                    : cheeger_upper_search(g);
      emit(dump(report), output, out);
      return kOk;
    }
    if (scan->parsed()) {
      const Graph g = read_graph(input);
      const auto grid = parse_grid(p_grid_text);
      const auto rows = threshold_scan(g, grid, alpha, seed, trials);
      if (format == "csv") {
        emit(scan_csv(rows), output, out);
      } else if (format == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"p", r.p}, {"alpha", r.alpha}, {"seed", r.seed}, {"prob", r.prob}});
        emit(dump(j), output, out);
      } else {
        std::vector<double> ys;
        for (const auto& r : rows) ys.push_back(r.prob.value);
        emit(svg_curve(grid, ys, "giant-component probability", "p", "P(largest >= alpha n)"), output, out);
      }
      return kOk;
    }
    if (locality->parsed()) {
      lc.n_list = parse_ints<std::size_t>(n_list_text);
      lc.p_grid = parse_grid(p_grid_text);
      lc.seed = seed;
      const LocalityReport report = verify_locality(lc);
      emit(format == "json" ? dump(report) : report.csv(), output, out);
      err << "verdict: " << verdict_name(report.verdict) << " (p_c = " << report.p_c << ")\n";
      return kOk;
    }
    if (constancy->parsed()) {
      cc.seed = seed;
      cc.c = Rational::parse(c_text);
      cc.p0 = Rational::parse(p0_text);
      const ConstancyReport report = verify_constancy(cc);
      emit(text_format == "json" ? dump(report) : report.narrative(), output, out);
      return kOk;
    }
    if (survival->parsed()) {
      PercConfig cfg{p, seed, trials};
      Graph g;
      Vertex root = vertex;
      if (tree_d != 0) {
        g = regular_tree_ball(tree_d, radius);
        root = 0;
      } else {
        g = read_graph(input);
      }
      emit(dump(ball_survival(g, root, radius, cfg)), output, out);
      return kOk;
    }
    if (balls->parsed()) {
      const Graph g = read_graph(input);
      const BallMode bm = ball_mode == "sampled" ? BallMode::sample(samples, seed) : BallMode::exhaustive();
      emit(dump(ball_distribution(g, radius, bm)), output, out);
      return kOk;
    }
    return kValidation;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace perclab::cli
