#include <gtest/gtest.h>

#include "oracles.hpp"
#include "perclab/errors.hpp"
#include "perclab/generators.hpp"
#include "perclab/locallimit.hpp"
#include "perclab/serialize.hpp"

using namespace perclab;

TEST(BallDistribution, Examples) {
  auto d = ball_distribution(oracle::cycle(6), 1);
  ASSERT_EQ(d.counts.size(), 1u);
  EXPECT_EQ(d.counts.begin()->second, 6u);
  EXPECT_EQ(d.counts.begin()->first, extract_ball(oracle::path(3), 1, 1).certificate());

  d = ball_distribution(oracle::complete(4), 1);
  ASSERT_EQ(d.counts.size(), 1u);
  EXPECT_EQ(d.counts.begin()->second, 4u);

  d = ball_distribution(oracle::path(3), 1);
  ASSERT_EQ(d.counts.size(), 2u);
  EXPECT_EQ(d.counts.at(extract_ball(oracle::path(3), 1, 1).certificate()), 1u);
  EXPECT_EQ(d.counts.at(extract_ball(oracle::path(3), 0, 1).certificate()), 2u);
}

TEST(BallDistribution, SampledIsSeededAndConsistent) {
  const Graph g = generate({Family::bridged_pair, 200, 3, 1});
  const auto a = ball_distribution(g, 1, BallMode::sample(500, 4));
  const auto b = ball_distribution(g, 1, BallMode::sample(500, 4));
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_LT(tv_distance(a, ball_distribution(g, 1)), 0.1);
}

TEST(BallDistribution, JsonRoundTrip) {
  const auto d = ball_distribution(oracle::path(5), 2);
  nlohmann::json j = d;
  const auto back = j.get<BallDistribution>();
  EXPECT_EQ(back.counts, d.counts);
  EXPECT_EQ(back.total, d.total);
  EXPECT_EQ(back.radius, d.radius);
}

TEST(TotalVariation, Examples) {
  const RootedBall A = extract_ball(oracle::path(3), 1, 1);
  const RootedBall B = extract_ball(oracle::path(3), 0, 1);
  const auto pa = point_mass(A), pb = point_mass(B);
  EXPECT_EQ(tv_distance(pa, pa), 0.0);
  EXPECT_EQ(tv_distance(pa, pb), 1.0);
  BallDistribution half;
  half.radius = 1;
  half.counts[A.certificate()] = 1;
  half.counts[B.certificate()] = 1;
  half.total = 2;
  EXPECT_DOUBLE_EQ(tv_distance(half, pa), 0.5);
  EXPECT_THROW(tv_distance(pa, ball_distribution(oracle::cycle(5), 2)), ValidationError);
}

TEST(TotalVariation, IsAMetric) {
  SplitMix64 rng(61);
  std::vector<BallDistribution> ds;
  for (int i = 0; i < 12; ++i) ds.push_back(ball_distribution(oracle::random_connected(8 + rng.below(8), 0.15, rng), 1));
  for (const auto& x : ds)
    for (const auto& y : ds) {
      EXPECT_DOUBLE_EQ(tv_distance(x, y), tv_distance(y, x));
      EXPECT_GE(tv_distance(x, y), 0.0);
      EXPECT_LE(tv_distance(x, y), 1.0);
      for (const auto& z : ds) EXPECT_LE(tv_distance(x, z), tv_distance(x, y) + tv_distance(y, z) + 1e-12);
    }
}

TEST(Convergence, Examples) {
  const auto z = point_mass(extract_ball(oracle::path(5), 2, 2));
  std::vector<Graph> cycles{oracle::cycle(10), oracle::cycle(100), oracle::cycle(1000)};
  for (const auto& row : convergence_report(cycles, 2, z).rows) EXPECT_EQ(row.tv, 0.0);

  const Graph g = oracle::cube3();
  std::vector<Graph> self{g};
  EXPECT_EQ(convergence_report(self, 2, ball_distribution(g, 2)).rows[0].tv, 0.0);

  std::vector<Graph> k4{oracle::complete(4)};
  EXPECT_EQ(convergence_report(k4, 1, point_mass(extract_ball(oracle::path(3), 1, 1))).rows[0].tv, 1.0);
}

TEST(ClassCount, Examples) {
  const RootedBall path = extract_ball(oracle::path(3), 1, 1);
  EXPECT_EQ(class_count(oracle::cycle(6), path), 6u);
  EXPECT_EQ(class_count(oracle::cycle(6), extract_ball(oracle::cycle(3), 0, 1)), 0u);
  EXPECT_EQ(class_count(oracle::cube3(), extract_ball(oracle::cycle(3), 0, 0)), 8u);
}

TEST(ClassCount, ClassesPartitionTheVertices) {
  SplitMix64 rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = oracle::random_connected(30, 0.05, rng);
    const auto d = ball_distribution(g, 2);
    std::size_t total = 0;
    for (const auto& [cert, count] : d.counts) {
      std::size_t via_class = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const RootedBall b = extract_ball(g, v, 2);
        if (b.certificate() == cert) {
          via_class = class_count(g, b);
          break;
        }
      }
      EXPECT_EQ(via_class, count);
      total += count;
    }
    EXPECT_EQ(total, g.num_vertices());
  }
}

TEST(ClassFlow, BridgedPairHasOnePath) {
  const Graph g = generate({Family::bridged_pair, 200, 3, 2});
  // interior of the 4-regular half vs the cycle half
  const RootedBall t1 = extract_ball(regular_tree_ball(4, 2), 0, 1);
  const RootedBall t2 = extract_ball(oracle::path(3), 1, 1);
  const auto r = disjoint_class_flow(g, t1, t2, Rational(1, 10), Rational(1, 2));
  ASSERT_TRUE(r.menger.has_value());
  EXPECT_EQ(r.menger->flow, 1u);
  EXPECT_FALSE(r.menger->expansion_bound_holds);
  EXPECT_GE(r.class1_size, 70u);
  EXPECT_GT(r.class2_size, 90u);
}

TEST(ClassFlow, SameClassIsReported) {
  const Graph g = generate({Family::random_regular, 1000, 3, 1});
  const RootedBall star = extract_ball(regular_tree_ball(3, 1), 0, 1);
  EXPECT_EQ(disjoint_class_flow(g, star, star, Rational(1, 10), Rational(1, 2)).status, ClassFlowStatus::same_class);
  const RootedBall path = extract_ball(oracle::path(3), 1, 1);
  EXPECT_EQ(disjoint_class_flow(oracle::cycle(50), path, path, Rational(1, 10), Rational(1, 2)).status,
            ClassFlowStatus::same_class);
}

TEST(BallDistribution, TreeClassMassGrowsWithN) {
  const Certificate tree = extract_ball(regular_tree_ball(3, 2), 0, 2).certificate();
  double prev = 0.0;
  for (std::size_t n : {1000u, 10000u, 100000u}) {
    const double mass = ball_distribution(generate({Family::random_regular, n, 3, 1}), 2).probability(tree);
    EXPECT_GT(mass, prev) << n;
    prev = mass;
  }
  EXPECT_GE(prev, 0.99);
}
