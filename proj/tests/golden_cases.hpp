// CLI invocations with fixed seeds whose output is checked in under
// tests/golden.
#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace golden {

namespace fs = std::filesystem;

inline const fs::path kData = PERCLAB_TEST_DATA;
inline const fs::path kGolden = PERCLAB_TEST_GOLDEN;

struct Result {
  int code;
  std::string out;
  std::string err;
};

inline Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "perclab");
  std::ostringstream out, err;
  const int code = perclab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string data(const std::string& name) { return (kData / name).string(); }

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

inline std::vector<GoldenCase> golden_cases() {
  return {
      {"gen_cycle3.txt", {"gen", "--family", "cycle", "--n", "3"}},
      {"gen_random_regular_10.txt", {"gen", "--family", "random_regular", "--n", "10", "--d", "3", "--seed", "1"}},
      {"gen_bridged_pair_20.txt", {"gen", "--family", "bridged_pair", "--n", "20", "--seed", "7"}},
      {"gen_torus_16.txt", {"gen", "--family", "torus2d", "--n", "16"}},
      {"cheeger_c6_exact.json", {"cheeger", data("c6.txt"), "--mode", "exact"}},
      {"cheeger_k4_exact.json", {"cheeger", data("k4.txt")}},
      {"cheeger_bp40_upper.json", {"cheeger", data("bp40.txt"), "--mode", "upper"}},
      {"scan_rr200.csv",
       {"scan", data("rr200.txt"), "--p-grid", "0.3,0.4,0.5,0.6,0.7", "--alpha", "0.1", "--trials", "50", "--seed",
        "3"}},
      {"scan_rr200.svg",
       {"scan", data("rr200.txt"), "--p-grid", "0.3,0.4,0.5,0.6,0.7", "--alpha", "0.1", "--trials", "50", "--seed",
        "3", "--format", "svg"}},
      {"survival_tree_d3_r1.json",
       {"survival", "--tree-d", "3", "--radius", "1", "--p", "0.5", "--trials", "10000", "--seed", "1"}},
      {"survival_rr200.json",
       {"survival", data("rr200.txt"), "--vertex", "7", "--radius", "3", "--p", "0.6", "--trials", "2000"}},
      {"balls_bp40_r1.json", {"balls", data("bp40.txt"), "--radius", "1"}},
      {"verify_locality_small.csv",
       {"verify-locality", "--n-list", "1000,3000", "--p-grid", "0.3,0.7", "--trials", "20", "--seed", "2"}},
      {"verify_constancy_small.json",
       {"verify-constancy", "--n", "200", "--positive-n", "2000", "--seed", "1", "--format", "json"}},
  };
}


// Runs every case; returns the names whose output differs from the file.
inline std::vector<std::string> mismatches() {
  std::vector<std::string> bad;
  for (const auto& c : golden_cases()) {
    const Result r = run(c.args);
    if (r.code != 0 || r.out != slurp(kGolden / c.name)) bad.push_back(c.name);
  }
  return bad;
}

}  // namespace golden
