#include <gtest/gtest.h>

#include <random>

#include "nwforest/oracle.hpp"
#include "support.hpp"

using namespace nwf;
using nwf::fixtures::complete_graph;

TEST(CheckCondition, TriangleOneForest) {
  auto report = check_condition(complete_graph(3), 1);
  EXPECT_FALSE(report.satisfied);
  EXPECT_EQ(report.violator, (VertexSet{0, 1, 2}));
  EXPECT_EQ(report.excess, 1);
}

TEST(CheckCondition, K4TwoForests) {
  EXPECT_TRUE(check_condition(complete_graph(4), 2).satisfied);
}

TEST(CheckCondition, EdgelessAlwaysSatisfied) {
  for (std::size_t r = 0; r < 3; ++r) EXPECT_TRUE(check_condition(Graph(6), r).satisfied);
}

TEST(CheckCondition, PrefersLargestExcess) {
  // K4 at r = 1: triangles exceed by 1, the whole set by 6 - 3 = 3.
  auto report = check_condition(complete_graph(4), 1);
  EXPECT_EQ(report.excess, 3);
  EXPECT_EQ(report.violator, VertexSet::range(4));
}

TEST(CheckCondition, TiesGoToSmallerSetThenEnumerationOrder) {
  // Three parallel edges on {0,1} and a triangle on {2,3,4}, r = 1:
  // {0,1} and the whole set both exceed by 2; the smaller one wins.
  Graph g(5, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {3, 4}, {2, 4}});
  auto report = check_condition(g, 1);
  EXPECT_EQ(report.excess, 2);
  EXPECT_EQ(report.violator, (VertexSet{0, 1}));

  // Two disjoint triangles: both exceed by 1 at equal size; bitmask 0b111 comes first.
  Graph two(6, {{3, 4}, {4, 5}, {3, 5}, {0, 1}, {1, 2}, {0, 2}});
  auto r2 = check_condition(two, 1);
  EXPECT_EQ(r2.excess, 1);
  EXPECT_EQ(r2.violator, (VertexSet{0, 1, 2}));
}

TEST(CheckCondition, SizeLimit) {
  EXPECT_THROW(check_condition(Graph(21), 1), SizeLimitExceeded);
  EXPECT_THROW(check_condition(Graph(6), 1, 5), SizeLimitExceeded);
}

TEST(BruteDecompose, SingleEdgeGoesToFirstForest) {
  auto d = brute_decompose(Graph(2, {{0, 1}}), 2);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->forest_of(0), 1u);
}

TEST(BruteDecompose, TriangleOneForestInfeasible) {
  EXPECT_FALSE(brute_decompose(complete_graph(3), 1).has_value());
}

TEST(BruteDecompose, FourCycleTwoForests) {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto d = brute_decompose(c4, 2);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(verify_decomposition(c4, *d));
  // Lexicographically first: edges 0..2 in forest 1, closing edge in forest 2.
  EXPECT_EQ(std::vector<ForestIndex>(d->assignment().begin(), d->assignment().end()),
            (std::vector<ForestIndex>{1, 1, 1, 2}));
}

TEST(BruteDecompose, ZeroForests) {
  EXPECT_TRUE(brute_decompose(Graph(3), 0).has_value());
  EXPECT_FALSE(brute_decompose(Graph(2, {{0, 1}}), 0).has_value());
}

TEST(BruteDecompose, SizeLimit) {
  EXPECT_THROW(brute_decompose(complete_graph(6), 3), SizeLimitExceeded);
}

TEST(VerifyDecomposition, Examples) {
  Graph tri = complete_graph(3);
  EXPECT_FALSE(verify_decomposition(tri, Decomposition(2, std::vector<ForestIndex>{1, 1, 1})));
  EXPECT_TRUE(verify_decomposition(tri, Decomposition(2, std::vector<ForestIndex>{1, 1, 2})));
  EXPECT_FALSE(verify_decomposition(tri, Decomposition(2, std::vector<ForestIndex>{1, 0, 2})));
  EXPECT_FALSE(verify_decomposition(tri, Decomposition(2, std::vector<ForestIndex>{1, 1})));
  EXPECT_TRUE(verify_decomposition(Graph(), Decomposition(0, 0)));
}

TEST(VerifyCertificate, Examples) {
  Graph tri = complete_graph(3);
  EXPECT_TRUE(verify_certificate(tri, 1, VertexSet{0, 1, 2}));
  EXPECT_FALSE(verify_certificate(tri, 1, VertexSet{0, 1}));
  EXPECT_FALSE(verify_certificate(tri, 1, VertexSet{}));
  EXPECT_FALSE(verify_certificate(tri, 1, VertexSet{0, 7}));
  EXPECT_TRUE(verify_certificate(complete_graph(5), 2, VertexSet::range(5)));
}

// brute force and subset enumeration must agree; a reported violator is a
// certificate.
TEST(OracleProperties, EnumerationAgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 1500; ++round) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = rng() % 10;
    const std::size_t r = rng() % 4;
    Graph g = fixtures::random_multigraph(rng, n, m, 0.05);
    auto report = check_condition(g, r);
    auto brute = brute_decompose(g, r);
    ASSERT_EQ(report.satisfied, brute.has_value()) << "round " << round;
    if (brute) {
      EXPECT_TRUE(verify_decomposition(g, *brute));
    }
    if (!report.satisfied) {
      EXPECT_TRUE(verify_certificate(g, r, report.violator));
      EXPECT_EQ(report.excess, static_cast<std::int64_t>(restriction_edge_count(g, report.violator)) -
                                   static_cast<std::int64_t>(r * (report.violator.size() - 1)));
    }
  }
}
