#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "perclab/errors.hpp"
#include "perclab/generators.hpp"
#include "perclab/graph.hpp"
#include "perclab/rational.hpp"

using namespace perclab;

TEST(Rational, NormalizesAndParses) {
  EXPECT_EQ(Rational(4, -6), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("2/3"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("0.1").str(), "1/10");
  EXPECT_THROW(Rational::parse("1/0"), ValidationError);
  EXPECT_THROW(Rational::parse("abc"), ValidationError);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
}

TEST(Graph, RejectsBadEdges) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(2, loop), ValidationError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, dup), ValidationError);
  std::vector<Edge> out{{0, 5}};
  EXPECT_THROW(Graph::from_edges(2, out), ValidationError);
  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_THROW(Graph::from_edges(4, star, 2), ValidationError);
}

TEST(Graph, NeighborsAndDistancesMatchMatrix) {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_graph(12, 0.25, rng);
    const auto A = oracle::adjacency(g);
    const auto D = oracle::all_distances(A);
    for (Vertex u = 0; u < 12; ++u) {
      std::set<Vertex> nb(g.neighbors(u).begin(), g.neighbors(u).end());
      for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(nb.count(v) == 1, A[u][v] == 1);
      const auto bfs = bfs_distances(g, u);
      for (Vertex v = 0; v < 12; ++v) {
        if (D[u][v] >= oracle::kInf) EXPECT_EQ(bfs[v], kUnreachable);
        else EXPECT_EQ(static_cast<int>(bfs[v]), D[u][v]);
      }
    }
    const auto labels = component_labels(g);
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(labels[u] == labels[v], D[u][v] < oracle::kInf);
  }
}

TEST(Graph, IncidentEdgeIdsPointAtEdgeList) {
  const Graph g = oracle::cube3();
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    auto ids = g.incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Edge e = g.edges()[ids[i]];
      EXPECT_EQ(std::minmax(u, nb[i]), std::minmax(e.first, e.second));
    }
  }
}

TEST(EdgeList, Examples) {
  const Graph p3 = load_edge_list("0 1\n1 2\n");
  EXPECT_EQ(p3.num_vertices(), 3u);
  EXPECT_EQ(p3.num_edges(), 2u);
  const Graph h = load_edge_list("# comment\nn 4\n0 1\n");
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_THROW(load_edge_list("0 0\n"), ParseError);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    load_edge_list("0 1\n1 2\n# x\n2 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  try {
    load_edge_list("0 1\nfoo\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(load_edge_list("0 99999999999\n"), ParseError);
  EXPECT_THROW(load_edge_list("n 2\n0 3\n"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  SplitMix64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = oracle::random_graph(9, 0.3, rng);
    EXPECT_EQ(load_edge_list(write_edge_list(g)), g);
  }
}

TEST(Generators, Examples) {
  const Graph c3 = generate({Family::cycle, 3, 3, 0});
  EXPECT_EQ(c3.num_edges(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(c3.degree(v), 2u);

  const Graph rr = generate({Family::random_regular, 10, 3, 1});
  EXPECT_EQ(rr.num_edges(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(rr.degree(v), 3u);

  const Graph bp = generate({Family::bridged_pair, 20, 3, 7});
  EXPECT_EQ(bp.num_edges(), 31u);
  std::map<std::size_t, int> degs;
  for (Vertex v = 0; v < 20; ++v) ++degs[bp.degree(v)];
  EXPECT_EQ(degs[5], 1);
  EXPECT_EQ(degs[3], 1);
  EXPECT_EQ(degs[4], 9);
  EXPECT_EQ(degs[2], 9);
  EXPECT_EQ(bp.delta_bound(), 5u);

  const Graph t = generate({Family::torus2d, 16, 3, 0});
  EXPECT_EQ(t.num_edges(), 32u);
  EXPECT_EQ(generate({Family::complete, 5, 3, 0}).num_edges(), 10u);
}

TEST(Generators, Validation) {
  EXPECT_THROW(generate({Family::cycle, 2, 3, 0}), ValidationError);
  EXPECT_THROW(generate({Family::random_regular, 7, 3, 0}), ValidationError);
  EXPECT_THROW(generate({Family::random_regular, 10, 2, 0}), ValidationError);
  EXPECT_THROW(generate({Family::torus2d, 10, 3, 0}), ValidationError);
  EXPECT_THROW(generate({Family::bridged_pair, 9, 3, 0}), ValidationError);
  EXPECT_THROW(parse_family("petersen"), ValidationError);
}

TEST(Generators, DeterministicPerSeed) {
  for (auto f : {Family::random_regular, Family::bridged_pair}) {
    const GenSpec s{f, 40, 3, 99};
    EXPECT_EQ(write_edge_list(generate(s)), write_edge_list(generate(s)));
    EXPECT_NE(write_edge_list(generate(s)), write_edge_list(generate({f, 40, 3, 100})));
  }
}

TEST(Generators, KeyValuesRoundTrip) {
  const GenSpec s{Family::bridged_pair, 20, 3, 7};
  EXPECT_EQ(gen_spec_from_key_values(to_key_values(s)), s);
}

// On 6 labelled vertices there are 70 cubic graphs: 60 prisms, 10 copies of
// K_{3,3}. A uniform sampler hits K_{3,3} with probability 1/7.
TEST(Generators, RandomRegularLooksUniform) {
  SplitMix64 rng(2024);
  const int draws = 7000;
  int bipartite = 0;
  for (int i = 0; i < draws; ++i) {
    const Graph g = random_regular(6, 3, rng);
    const auto A = oracle::adjacency(g);
    bool has_triangle = false;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) has_triangle |= A[a][b] && A[b][c] && A[a][c];
    bipartite += !has_triangle;
  }
  const double p = 1.0 / 7.0;
  const double sigma = std::sqrt(draws * p * (1 - p));
  EXPECT_NEAR(bipartite, draws * p, 4 * sigma);
}

TEST(Generators, RegularTreeBall) {
  const Graph t = regular_tree_ball(3, 3);
  EXPECT_EQ(t.num_vertices(), 1u + 3 + 6 + 12);
  EXPECT_EQ(t.degree(0), 3u);
  EXPECT_EQ(oracle::eccentricity(t, 0), 3);
}
