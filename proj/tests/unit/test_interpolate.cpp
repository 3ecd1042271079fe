#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "balforest/errors.hpp"
#include "balforest/generators.hpp"
#include "balforest/interpolate.hpp"
#include "balforest/solver.hpp"
#include "brute_force.hpp"

namespace balforest {
namespace {

using testing::direct_sum;

std::vector<Vertex> to_vector(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

TEST(SignedPair, RejectsWrongSigns) {
  const auto g = testing::all_red(4);
  const Forest f(4, {{0, 1}});
  const Embedding e = Embedding::identity(f, g);
  EXPECT_THROW(make_signed_pair(e, e, f), InvalidInput);
}

TEST(Interpolate, ReturnsQualifyingInputUnchanged) {
  const auto g = random_balanced_colouring(8, 1);
  // Six edges, so zero sums are possible.
  const Forest f(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  std::mt19937_64 rng(5);
  // Find a zero-sum embedding and pair it with itself.
  for (int t = 0; t < 1000; ++t) {
    Embedding e = random_extension(f, g, nullptr, rng);
    if (e.sum() == 0) {
      const auto pair = make_signed_pair(e, e, f);
      EXPECT_TRUE(pair.disagreement.empty());
      EXPECT_EQ(pair.delta_i, 0);
      const auto result = interpolate(pair, f, g);
      EXPECT_EQ(result.embedding, e);
      EXPECT_TRUE(result.trace.steps.empty());
      return;
    }
  }
  FAIL() << "no zero-sum embedding sampled";
}

// Replays every recorded transposition from the positive end and checks
// each running sum against a direct recount.
void check_run(const SignedPair& pair, const Forest& f, const ColouredCompleteGraph& g) {
  const auto result = interpolate(pair, f, g);
  const int bound = pair.delta_i + f.min_degree();
  ASSERT_LE(std::abs(result.embedding.sum()), bound);
  ASSERT_EQ(result.trace.achieved_bound, bound);
  std::vector<Vertex> map = to_vector(pair.positive.map());
  if (result.trace.steps.empty()) {
    ASSERT_TRUE(result.embedding == pair.positive || result.embedding == pair.negative);
    return;
  }
  int previous = direct_sum(g, map, f);
  ASSERT_EQ(previous, result.trace.start_sum);
  for (const auto& step : result.trace.steps) {
    std::swap(map[step.u], map[step.v]);
    const int s = direct_sum(g, map, f);
    ASSERT_EQ(s, step.sum);
    ASSERT_LE(std::abs(s - previous), 2 * bound);
    previous = s;
  }
  ASSERT_EQ(map, to_vector(result.embedding.map()));
}

TEST(Interpolate, PathOnEightVertices500Trials) {
  const Forest f = make_forest({ForestKind::Path, 8, 0, 0});
  for (std::uint64_t t = 0; t < 500; ++t) {
    const auto g = random_balanced_colouring(8, t);
    std::mt19937_64 rng(t);
    auto outcome = try_find_signed_pair(f, g, nullptr, 5000, rng);
    ASSERT_TRUE(outcome.pair.has_value()) << t;
    check_run(*outcome.pair, f, g);
    EXPECT_LE(std::abs(interpolate(*outcome.pair, f, g).embedding.sum()), outcome.pair->delta_i + 1);
  }
}

TEST(Interpolate, ExtremePairsAcrossFamilies) {
  // Pair the global minimum with the global maximum so the walk is long.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8 + trial % 9;
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const auto g = random_colouring_with_red_count(n, pairs / 2, rng());
    const int kind = trial % 4;
    const Forest f = kind == 0   ? make_forest({ForestKind::Star, n, 0, 0})
                     : kind == 1 ? make_forest({ForestKind::Random, n, 3, rng()})
                     : kind == 2 ? Forest(n, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}})
                                 : make_forest({ForestKind::Broom, n, n / 2, 0});
    std::optional<Embedding> lo;
    std::optional<Embedding> hi;
    for (int s = 0; s < 400; ++s) {
      Embedding e = random_extension(f, g, nullptr, rng);
      if (!lo || e.sum() < lo->sum()) lo = e;
      if (!hi || e.sum() > hi->sum()) hi = e;
    }
    if (lo->sum() > 0 || hi->sum() < 0) continue;
    const auto pair = make_signed_pair(*lo, *hi, f);
    check_run(pair, f, g);
  }
}

TEST(Interpolate, TraceJsonLines) {
  InterpolationTrace trace;
  trace.steps.push_back({0, 1, 2, 3});
  trace.steps.push_back({1, 4, 0, -1});
  std::ostringstream out;
  write_trace_json_lines(out, trace);
  EXPECT_EQ(out.str(), "{\"step\":0,\"sum\":3,\"u\":1,\"v\":2}\n{\"step\":1,\"sum\":-1,\"u\":4,\"v\":0}\n");
}

// The five conclusions about the interpolating sequence, checked directly.
void check_claim9(const Claim9Sequence& seq, const PartialEmbedding& f, const PartialEmbedding& g,
                  const std::vector<Vertex>& m, const std::set<Vertex>& u, Vertex a) {
  const auto& h = seq.steps;
  const std::size_t r = seq.labels.size();
  ASSERT_EQ(h.size(), 3 * r + 1);
  EXPECT_EQ(h.front(), g);
  EXPECT_EQ(h.back(), f);
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::set<Vertex> images;
    for (Vertex v : m) {
      images.insert(h[k].image(v));
      EXPECT_TRUE(u.count(h[k].image(v))) << "step " << k;
    }
    EXPECT_EQ(images.size(), m.size()) << "step " << k << " not injective";
    if (k > 0) {
      int moved = 0;
      for (Vertex v : m) moved += h[k].image(v) != h[k - 1].image(v);
      EXPECT_LE(moved, 1) << "step " << k;
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    if (i < r) EXPECT_FALSE(h[3 * i].uses(a)) << i;
    for (std::size_t j = 1; j <= i; ++j) EXPECT_EQ(h[3 * i].image(seq.labels[j - 1]), f.image(seq.labels[j - 1]));
  }
}

TEST(Claim9, IdenticalPlacementsGiveConstantSequence) {
  PartialEmbedding g(6, 6);
  g.assign(0, 3);
  g.assign(2, 1);
  g.assign(4, 5);
  const std::vector<Vertex> m{0, 2, 4};
  const auto seq = claim9_sequence(g, g, m, std::vector<Vertex>{0}, 0);
  EXPECT_EQ(seq.steps.size(), 3 * seq.labels.size() + 1);
  for (const auto& h : seq.steps) EXPECT_EQ(h, g);
}

TEST(Claim9, DisjointImagesSingleVertex) {
  PartialEmbedding g(3, 5);
  g.assign(1, 0);
  PartialEmbedding f(3, 5);
  f.assign(1, 4);
  const std::vector<Vertex> m{1};
  const auto seq = claim9_sequence(f, g, m, {}, 2);
  ASSERT_EQ(seq.steps.size(), 4u);
  EXPECT_EQ(seq.steps[1], seq.steps[0]);
  EXPECT_EQ(seq.steps[2].image(1), 4);
  EXPECT_EQ(seq.steps[3], seq.steps[2]);
}

TEST(Claim9, OverlappingImagesHandWorked) {
  // M = {0..4}, N = {0, 1}, U = {0..6}, a = 5. f shifts 2 -> 3 -> 4 -> a, so
  // the first two rounds must park a vertex at a.
  PartialEmbedding g(7, 7);
  PartialEmbedding f(7, 7);
  for (Vertex v = 0; v < 5; ++v) g.assign(v, v);
  f.assign(0, 0);
  f.assign(1, 1);
  f.assign(2, 3);
  f.assign(3, 4);
  f.assign(4, 5);
  const std::vector<Vertex> m{0, 1, 2, 3, 4};
  const auto seq = claim9_sequence(f, g, m, std::vector<Vertex>{0, 1}, 5);
  EXPECT_EQ(seq.labels, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(to_vector(seq.steps[1].map()), (std::vector<Vertex>{0, 1, 2, 5, 4, -1, -1}));
  EXPECT_EQ(to_vector(seq.steps[3].map()), (std::vector<Vertex>{0, 1, 3, 2, 4, -1, -1}));
  EXPECT_EQ(to_vector(seq.steps[6].map()), (std::vector<Vertex>{0, 1, 3, 4, 2, -1, -1}));
  check_claim9(seq, f, g, m, {0, 1, 2, 3, 4, 5, 6}, 5);
}

TEST(Claim9, RandomInstancesSatisfyAllConclusions) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 6 + trial % 7;
    std::vector<Vertex> all(static_cast<std::size_t>(size));
    std::iota(all.begin(), all.end(), 0);
    const int mk = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size - 2));
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> m(all.begin(), all.begin() + mk);
    std::sort(m.begin(), m.end());
    std::vector<Vertex> n(m.begin(), m.begin() + static_cast<long>(rng() % static_cast<std::uint64_t>(mk)));
    std::shuffle(all.begin(), all.end(), rng);
    PartialEmbedding g(size, size);
    for (std::size_t i = 0; i < m.size(); ++i) g.assign(m[i], all[i]);
    const Vertex a = all[m.size()];
    // f permutes g's images on M \ N together with a.
    std::vector<Vertex> pool;
    for (Vertex v : m) {
      if (std::find(n.begin(), n.end(), v) == n.end()) pool.push_back(g.image(v));
    }
    pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    PartialEmbedding f(size, size);
    std::size_t next = 0;
    for (Vertex v : m) f.assign(v, std::find(n.begin(), n.end(), v) != n.end() ? g.image(v) : pool[next++]);
    std::set<Vertex> u(all.begin(), all.begin() + mk + 1);
    const auto seq = claim9_sequence(f, g, m, n, a);
    check_claim9(seq, f, g, m, u, a);
  }
}

TEST(Claim9, RejectsBrokenPreconditions) {
  PartialEmbedding g(4, 4);
  g.assign(0, 0);
  g.assign(1, 1);
  PartialEmbedding f(4, 4);
  f.assign(0, 2);
  f.assign(1, 1);
  const std::vector<Vertex> m{0, 1};
  EXPECT_THROW(claim9_sequence(f, g, m, std::vector<Vertex>{0}, 3), InvalidInput);  // disagree on N
  EXPECT_THROW(claim9_sequence(f, g, m, {}, 1), InvalidInput);                       // a used by g
  EXPECT_THROW(claim9_sequence(f, g, std::vector<Vertex>{0}, {}, 3), InvalidInput);  // domain is not M
  EXPECT_THROW(claim9_sequence(f, g, m, std::vector<Vertex>{2}, 3), InvalidInput);   // N outside M
  EXPECT_NO_THROW(claim9_sequence(f, g, m, {}, 3));
}

}  // namespace
}  // namespace balforest
