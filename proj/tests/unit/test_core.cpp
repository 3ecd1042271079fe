#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "balforest/colouring.hpp"
#include "balforest/embedding.hpp"
#include "balforest/errors.hpp"
#include "balforest/forest.hpp"
#include "balforest/generators.hpp"
#include "balforest/io.hpp"
#include "balforest/rational.hpp"
#include "brute_force.hpp"

namespace balforest {
namespace {

using testing::direct_sum;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), InvalidInput);
  EXPECT_THROW(Rational::parse("abc"), InvalidInput);
}

TEST(Rational, RoundingAndOrdering) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(5, 2).round(), 3);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), InvalidInput);
}

TEST(Colouring, BuilderDegreesAndSums) {
  ColouredCompleteGraph::Builder b(4);
  b.set(0, 1, Colour::Red).set(2, 0, Colour::Red).set(3, 2, Colour::Red);
  const auto g = b.build();
  EXPECT_TRUE(g.is_red(1, 0));
  EXPECT_TRUE(g.is_red(0, 2));
  EXPECT_FALSE(g.is_red(1, 3));
  EXPECT_EQ(g.red_degree(0), 2);
  EXPECT_EQ(g.blue_degree(0), 1);
  EXPECT_EQ(g.signed_degree(1), -1);
  EXPECT_EQ(g.red_edge_count(), 3);
  EXPECT_EQ(g.total_sum(), 0);
  EXPECT_TRUE(is_balanced(g));
  EXPECT_THROW(ColouredCompleteGraph::Builder(1), InvalidInput);
  EXPECT_THROW(b.set(1, 1, Colour::Red), InvalidInput);
  EXPECT_THROW(b.set(0, 4, Colour::Red), InvalidInput);
}

TEST(Colouring, DegreeSumsMatchEdgeCountOnRandomInstances) {
  for (int n : {2, 5, 13, 64, 65, 130}) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto g = random_colouring_with_red_count(n, pairs / 3, static_cast<std::uint64_t>(n));
    std::int64_t degree_total = 0;
    std::int64_t red = 0;
    for (Vertex i = 0; i < n; ++i) {
      degree_total += g.red_degree(i);
      for (Vertex j = 0; j < i; ++j) red += g.is_red(i, j) ? 1 : 0;
    }
    EXPECT_EQ(red, pairs / 3);
    EXPECT_EQ(degree_total, 2 * red);
    const auto neg = g.negated();
    EXPECT_EQ(neg.red_edge_count(), pairs - red);
    EXPECT_EQ(neg.negated(), g);
  }
}

TEST(Colouring, RBalancedVertices) {
  const auto g = c0_colouring(8);
  // Every vertex of c0(8) has red degree 2 or 5.
  EXPECT_EQ(r_balanced_vertices(g, 2).size(), 8u);
  EXPECT_TRUE(r_balanced_vertices(g, 3).empty());
  EXPECT_EQ(r_balanced_vertices(g, 0).size(), 8u);
  EXPECT_THROW(r_balanced_vertices(g, -1), InvalidInput);
  EXPECT_TRUE(r_balanced_vertices(testing::all_red(6), 1).empty());
}

TEST(Forest, ValidatesAcyclicity) {
  EXPECT_NO_THROW(Forest(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_THROW(Forest(3, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);
  EXPECT_THROW(Forest(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Forest(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Forest(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(Forest(0, {}), InvalidInput);
}

TEST(Forest, DegreesAndOrdering) {
  const Forest f(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  EXPECT_EQ(f.max_degree(), 3);
  EXPECT_EQ(f.min_degree(), 0);
  EXPECT_EQ(f.degree(5), 0);
  EXPECT_TRUE(f.has_edge(4, 3));
  EXPECT_FALSE(f.has_edge(1, 2));
  const auto order = f.vertices_by_degree();
  EXPECT_EQ(order[0], 0);
  EXPECT_EQ(order[1], 3);
  EXPECT_EQ(f.min_degree_vertex_excluding(5, 0), -1);
  EXPECT_EQ(f.min_degree_vertex_excluding(1, 2), 5);
  const Forest p(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p.min_degree_vertex_excluding(0, 2), -1);
  EXPECT_EQ(p.min_degree_vertex_excluding(1, 2), 0);
}

TEST(Embedding, SumMatchesDirectCount) {
  const auto g = random_balanced_colouring(9, 4);
  const Forest f = make_forest({ForestKind::Random, 9, 3, 2});
  std::vector<Vertex> map{3, 1, 4, 0, 5, 8, 2, 7, 6};
  const Embedding e(map, f, g);
  EXPECT_EQ(e.sum(), direct_sum(g, map, f));
  EXPECT_EQ(subgraph_sum(g, e, f), e.sum());
  EXPECT_EQ(e.preimage(4), 2);
  EXPECT_THROW(Embedding({0, 0, 1, 2, 3, 4, 5, 6, 7}, f, g), InvalidInput);
  EXPECT_THROW(Embedding({0, 1}, f, g), InvalidInput);
}

TEST(Embedding, SwapDeltaAgreesWithRecomputationEverywhere) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial;
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto g = random_colouring_with_red_count(n, pairs / 2, rng());
    const Forest f = make_forest({ForestKind::Random, n, 4, rng()});
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    Embedding e(map, f, g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::vector<Vertex> swapped = map;
        std::swap(swapped[u], swapped[v]);
        ASSERT_EQ(e.sum() + e.swap_delta(u, v, f, g), direct_sum(g, swapped, f));
      }
    }
    e.swap(0, n - 1, f, g);
    std::swap(map[0], map[n - 1]);
    EXPECT_EQ(e.sum(), direct_sum(g, map, f));
    EXPECT_EQ(e.image(0), map[0]);
    EXPECT_EQ(e.preimage(map[0]), 0);
    EXPECT_THROW(e.swap(2, 2, f, g), InvalidInput);
  }
}

TEST(PartialEmbedding, AssignAndValidate) {
  PartialEmbedding p(4, 5);
  p.assign(2, 4);
  p.assign(0, 1);
  EXPECT_EQ(p.size(), 2);
  EXPECT_EQ(p.domain(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p.image_set(), (std::vector<Vertex>{1, 4}));
  EXPECT_THROW(p.assign(1, 4), InvalidInput);
  EXPECT_THROW(p.assign(2, 3), InvalidInput);
  p.unassign(2);
  EXPECT_FALSE(p.uses(4));
  EXPECT_THROW(PartialEmbedding({0, 0, -1}, 3), InvalidInput);
  const Forest f(3, {{0, 1}});
  const auto g = testing::all_red(3);
  const Embedding e({2, 0, 1}, f, g);
  EXPECT_TRUE(extends(e, PartialEmbedding({2, -1, -1}, 3)));
  EXPECT_FALSE(extends(e, PartialEmbedding({1, -1, -1}, 3)));
  EXPECT_EQ(PartialEmbedding::from_embedding(e).size(), 3);
}

TEST(Io, ColouringRoundTrip) {
  for (int n : {2, 3, 17, 40}) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto g = random_colouring_with_red_count(n, pairs / 2, 9);
    std::stringstream ss;
    io::write_colouring(ss, g);
    EXPECT_EQ(io::read_colouring(ss), g);
  }
  std::stringstream bad("3\nR\nRX\n");
  EXPECT_THROW(io::read_colouring(bad), InvalidInput);
  std::stringstream crlf("3\r\nR\r\n\r\nBB\r\n");
  const auto g = io::read_colouring(crlf);
  EXPECT_TRUE(g.is_red(1, 0));
  EXPECT_FALSE(g.is_red(2, 1));
}

TEST(Io, ForestAndEmbeddingRoundTrip) {
  const Forest f = make_forest({ForestKind::Random, 30, 4, 5});
  std::stringstream ss;
  io::write_forest(ss, f);
  const Forest back = io::read_forest(ss);
  EXPECT_EQ(back, f);

  const auto g = random_balanced_colouring(12, 1);
  const Forest path = make_forest({ForestKind::Path, 12, 0, 0});
  std::vector<Vertex> map{11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
  const Embedding e(map, path, g);
  EXPECT_EQ(io::embedding_from_json(io::embedding_to_json(e), path, g), e);
  auto tampered = io::embedding_to_json(e);
  tampered["sum"] = e.sum() + 2;
  EXPECT_THROW(io::embedding_from_json(tampered, path, g), InvalidInput);

  PartialEmbedding p(5, 7);
  p.assign(3, 6);
  EXPECT_EQ(io::partial_from_json(io::partial_to_json(p), 7), p);

  std::stringstream truncated("4 3\n0 1\n1 2\n");
  EXPECT_THROW(io::read_forest(truncated), InvalidInput);
}

}  // namespace
}  // namespace balforest
