#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"
#include "perclab/generators.hpp"

using namespace perclab;

TEST(Boundary, Examples) {
  const std::vector<Vertex> k4a{0};
  EXPECT_EQ(edge_boundary(oracle::complete(4), k4a).size(), 3u);
  const std::vector<Vertex> arc{0, 1, 2};
  EXPECT_EQ(edge_boundary(oracle::cycle(6), arc).size(), 2u);
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(edge_boundary(oracle::cycle(6), all).empty());
}

TEST(CheegerExact, Examples) {
  auto r = cheeger_exact(oracle::complete(2));
  EXPECT_EQ(*r.lower_exact, Rational(1));
  EXPECT_EQ(*r.witness, std::vector<Vertex>{0});
  r = cheeger_exact(oracle::cycle(6));
  EXPECT_EQ(*r.lower_exact, Rational(2, 3));
  EXPECT_EQ(*r.upper_exact, Rational(2, 3));
  EXPECT_EQ(*r.witness, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(*cheeger_exact(oracle::complete(4)).lower_exact, Rational(2));
}

TEST(CheegerExact, CapAndDisconnected) {
  EXPECT_THROW(cheeger_exact(oracle::cycle(25)), CapExceeded);
  const auto r = cheeger_exact(oracle::make(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(*r.lower_exact, Rational(0));
}

TEST(CheegerExact, MatchesSubsetOracle) {
  SplitMix64 rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rng.below(11);
    const Graph g = oracle::random_connected(n, 0.25, rng);
    const auto r = cheeger_exact(g);
    EXPECT_EQ(*r.lower_exact, oracle::cheeger(g));
    EXPECT_EQ(cut_ratio(g, *r.witness), *r.lower_exact);
    EXPECT_LE(2 * r.witness->size(), n);
  }
}

TEST(Spectral, Examples) {
  auto r = cheeger_spectral_bounds(oracle::cycle(6));
  EXPECT_NEAR(*r.lambda2, 1.0, 1e-9);
  EXPECT_NEAR(r.lower, 0.5, 1e-8);
  EXPECT_NEAR(r.upper, 2.0, 1e-8);
  r = cheeger_spectral_bounds(oracle::complete(4));
  EXPECT_NEAR(*r.lambda2, 4.0, 1e-9);
  EXPECT_NEAR(r.lower, 2.0, 1e-8);
  EXPECT_NEAR(r.upper, std::sqrt(24.0), 1e-8);
  r = cheeger_spectral_bounds(oracle::make(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_EQ(r.upper, 0.0);
}

TEST(Spectral, CycleClosedForm) {
  for (std::size_t n : {5u, 12u, 40u}) {
    const double expect = 2.0 - 2.0 * std::cos(2.0 * M_PI / static_cast<double>(n));
    EXPECT_NEAR(fiedler_pair(oracle::cycle(n)).lambda2, expect, 1e-9);
  }
}

TEST(Spectral, LanczosMatchesDense) {
  SplitMix64 rng(43);
  for (int rep = 0; rep < 4; ++rep) {
    const Graph g = random_regular(300, 3, rng);
    SpectralOptions sparse;
    sparse.dense_limit = 10;
    const auto a = fiedler_pair(g);
    const auto b = fiedler_pair(g, sparse);
    EXPECT_TRUE(b.converged);
    EXPECT_NEAR(a.lambda2, b.lambda2, 1e-6);
  }
  // a cycle has a doubly degenerate lambda2; only the value is compared
  SpectralOptions sparse;
  sparse.dense_limit = 10;
  EXPECT_NEAR(fiedler_pair(oracle::cycle(200), sparse).lambda2, 2.0 - 2.0 * std::cos(2.0 * M_PI / 200), 1e-6);
}

TEST(Spectral, SandwichOnRandomGraphs) {
  SplitMix64 rng(47);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = oracle::random_connected(4 + rng.below(10), 0.2, rng);
    const double h = oracle::cheeger(g).to_double();
    const auto r = cheeger_spectral_bounds(g);
    EXPECT_LE(r.lower, h + 1e-12);
    EXPECT_GE(r.upper, h - 1e-12);
  }
}

TEST(UpperSearch, FindsBridgeAndIsAnUpperBound) {
  const Graph bp = generate({Family::bridged_pair, 200, 3, 3});
  const auto r = cheeger_upper_search(bp);
  EXPECT_EQ(*r.upper_exact, Rational(1, 100));
  SplitMix64 rng(53);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_connected(4 + rng.below(10), 0.2, rng);
    const auto u = cheeger_upper_search(g);
    EXPECT_GE(*u.upper_exact, oracle::cheeger(g));
    EXPECT_EQ(cut_ratio(g, *u.witness), *u.upper_exact);
  }
}

TEST(Flow, Examples) {
  const std::vector<Vertex> a{0}, b{2}, c{3};
  EXPECT_EQ(edge_disjoint_paths(oracle::path(3), a, b).value, 1u);
  EXPECT_EQ(edge_disjoint_paths(oracle::complete(4), a, c).value, 3u);
  const std::vector<Vertex> top{7};
  EXPECT_EQ(edge_disjoint_paths(oracle::cube3(), a, top).value, 3u);
}

TEST(Flow, PathsAreValidAndShortestFirst) {
  SplitMix64 rng(59);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 6 + rng.below(20);
    const Graph g = oracle::random_connected(n, 0.15, rng);
    std::vector<Vertex> a1{0, 1}, a2{static_cast<Vertex>(n - 1), static_cast<Vertex>(n - 2)};
    const auto f = edge_disjoint_paths(g, a1, a2);
    EXPECT_EQ(f.paths.size(), f.value);
    EXPECT_EQ(f.min_cut.size(), f.value);
    std::set<Edge> used;
    std::size_t last = 0;
    for (const auto& p : f.paths) {
      EXPECT_TRUE(p.front() <= 1);
      EXPECT_TRUE(p.back() >= n - 2);
      EXPECT_GE(p.size(), last);
      last = p.size();
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        EXPECT_TRUE(g.has_edge(p[i], p[i + 1]));
        EXPECT_TRUE(used.insert(std::minmax(p[i], p[i + 1])).second);
      }
    }
    // the cut separates source_side from a2
    std::set<Vertex> side(f.source_side.begin(), f.source_side.end());
    for (auto [u, v] : f.min_cut) EXPECT_NE(side.count(u), side.count(v));
    for (Vertex t : a2) EXPECT_FALSE(side.count(t));
  }
}

TEST(Flow, RejectsOverlap) {
  const std::vector<Vertex> a{0, 1}, b{1, 2};
  EXPECT_THROW(edge_disjoint_paths(oracle::path(3), a, b), ValidationError);
}

TEST(ConstantK, Examples) {
  EXPECT_EQ(constant_K(4, Rational(1, 2), Rational(1, 4)), Rational(128));
  EXPECT_EQ(constant_K(1, Rational(4), Rational(1)), Rational(1));
  EXPECT_EQ(constant_K(3, Rational::parse("0.1"), Rational::parse("0.2")), Rational(600));
}

TEST(Menger, Examples) {
  const std::vector<Vertex> a{0, 1}, b{2, 3};
  auto r = menger_expander_bound(oracle::complete(4), a, b, Rational(2));
  EXPECT_EQ(r.flow, 4u);
  EXPECT_TRUE(r.expansion_bound_holds);

  const std::vector<Vertex> s{0}, t{3};
  r = menger_expander_bound(oracle::cycle(6), s, t, Rational(2, 3));
  EXPECT_EQ(r.flow, 2u);
  EXPECT_TRUE(r.expansion_bound_holds);

  const Graph bp = generate({Family::bridged_pair, 20, 3, 7});
  std::vector<Vertex> h1, h2;
  for (Vertex v = 0; v < 10; ++v) h1.push_back(v);
  for (Vertex v = 10; v < 20; ++v) h2.push_back(v);
  r = menger_expander_bound(bp, h1, h2, Rational(1, 5));
  EXPECT_EQ(r.flow, 1u);
  EXPECT_FALSE(r.expansion_bound_holds);
  ASSERT_TRUE(r.exact_h.has_value());
  EXPECT_FALSE(r.c_valid);
}
