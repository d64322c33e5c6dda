#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden_cases.hpp"

using namespace golden;

TEST(CliGolden, MatchesCheckedInOutput) {
  const bool update = std::getenv("PERCLAB_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    const Result r = run(c.args);
    ASSERT_EQ(r.code, 0) << c.name << ": " << r.err;
    const fs::path file = kGolden / c.name;
    if (update) {
      std::ofstream(file, std::ios::binary) << r.out;
      continue;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(r.out, slurp(file)) << c.name;
  }
}

TEST(CliGolden, TwoRunsAreByteIdentical) {
  for (const auto& c : golden_cases()) EXPECT_EQ(run(c.args).out, run(c.args).out) << c.name;
  const std::vector<std::string> spectral{"cheeger", data("rr200.txt"), "--mode", "spectral"};
  EXPECT_EQ(run(spectral).out, run(spectral).out);
}

TEST(Cli, GenSummaryGoesToStderr) {
  const Result r = run({"gen", "--family", "bridged_pair", "--n", "20", "--seed", "7"});
  EXPECT_EQ(r.err, "n=20 edges=31 max_degree=5\n");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 31);
}

TEST(Cli, OutputFlagWritesFile) {
  const fs::path tmp = fs::temp_directory_path() / "perclab_cli_out.txt";
  const Result r = run({"gen", "--family", "cycle", "--n", "4", "--output", tmp.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(tmp), "0 1\n0 3\n1 2\n2 3\n");
  fs::remove(tmp);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  const fs::path cfg = fs::temp_directory_path() / "perclab_cli.cfg";
  std::ofstream(cfg) << "# generator\nfamily=cycle\nn=5\nseed=3\n";
  Result r = run({"gen", "--config", cfg.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  r = run({"gen", "--config", cfg.string(), "--n", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  std::ofstream(cfg) << "bogus line\n";
  EXPECT_EQ(run({"gen", "--config", cfg.string()}).code, 2);
  fs::remove(cfg);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gen", "--family", "petersen", "--n", "10"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "cycle", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "cycle"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"cheeger", data("missing.txt")}).code, 2);
  EXPECT_EQ(run({"verify-locality", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"scan", data("c6.txt"), "--p-grid", "0.6,0.4"}).code, 2);

  const Result cap = run({"cheeger", data("c25.txt"), "--mode", "exact"});
  EXPECT_EQ(cap.code, 3);
  EXPECT_NE(cap.err.find("cap"), std::string::npos);
  EXPECT_TRUE(cap.out.empty());

  const Result dup = run({"cheeger", data("dup.txt")});
  EXPECT_EQ(dup.code, 2);
  EXPECT_NE(dup.err.find("line 3"), std::string::npos);
}

TEST(Cli, LocalityVerdicts) {
  Result r = run({"verify-locality", "--n-list", "300", "--p-grid", "0.45,0.55", "--trials", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("VACUOUS"), std::string::npos);
  r = run({"verify-locality", "--n-list", "2000", "--p-grid", "0.2,0.8", "--trials", "20", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"PASS\""), std::string::npos);
}

TEST(Cli, SurvivalExtremes) {
  Result r = run({"survival", "--tree-d", "3", "--radius", "2", "--p", "1", "--trials", "50"});
  EXPECT_NE(r.out.find("\"estimate\": 1.0"), std::string::npos) << r.out;
  r = run({"survival", "--tree-d", "3", "--radius", "2", "--p", "0", "--trials", "50"});
  EXPECT_NE(r.out.find("\"estimate\": 0.0"), std::string::npos) << r.out;
}
