#include <cstdlib>

#include <gtest/gtest.h>

#include "balforest/errors.hpp"
#include "balforest/generators.hpp"

namespace balforest {
namespace {

TEST(RandomBalanced, CountsParityAndDeterminism) {
  const auto g4 = random_balanced_colouring(4, 0);
  EXPECT_EQ(g4.red_edge_count(), 3);
  EXPECT_EQ(g4.blue_edge_count(), 3);
  EXPECT_THROW(random_balanced_colouring(6, 0), ParityError);
  EXPECT_THROW(random_balanced_colouring(7, 0), ParityError);
  try {
    random_balanced_colouring(6, 0);
  } catch (const ParityError& e) {
    EXPECT_NE(std::string(e.what()).find("mod 4"), std::string::npos);
  }
  const auto a = random_balanced_colouring(9, 42);
  EXPECT_TRUE(is_balanced(a));
  EXPECT_EQ(a, random_balanced_colouring(9, 42));
  EXPECT_NE(a, random_balanced_colouring(9, 43));
}

TEST(C0, SmallCaseByHand) {
  const auto g = c0_colouring(8);
  EXPECT_TRUE(is_balanced(g));
  EXPECT_EQ(g.red_edge_count(), 14);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(std::abs(g.signed_degree(v)), 3);
  EXPECT_FALSE(g.is_red(0, 1));  // u1 u2
  EXPECT_TRUE(g.is_red(4, 5));   // v1 v2
  EXPECT_TRUE(g.is_red(0, 4));   // u1 v1, 1 + 1 even
  EXPECT_FALSE(g.is_red(0, 5));  // u1 v2, 1 + 2 odd
  EXPECT_THROW(c0_colouring(6), InvalidInput);
}

TEST(C0, BalancedUpTo64) {
  for (int n = 4; n <= 64; n += 4) {
    const auto g = c0_colouring(n);
    EXPECT_TRUE(is_balanced(g)) << n;
    EXPECT_FALSE(g.is_red(0, 1));
    // Rule re-evaluated from its definition.
    const int h = n / 2;
    for (int i = 1; i <= h; ++i) {
      for (int j = 1; j <= h; ++j) {
        ASSERT_EQ(g.is_red(i - 1, h + j - 1), (i + j) % 2 == 0);
      }
    }
  }
}

// Both admissible intervals for d, written out from their defining formulas.
struct Interval {
  Rational lo;
  Rational hi;
};

Interval degree_interval(const Rational& e) {
  const Rational q(1, 4);
  const Rational h(1, 2);
  return {(q + e * e / Rational(2) - e) / (h - e), (q - e * e / Rational(2)) / (h + e)};
}

Interval density_interval(const Rational& e) {
  return {(Rational(1, 8) - e - e * e / Rational(2)) / (Rational(1, 4) - e * e), Rational(1, 2)};
}

bool admissible(const Rational& d, const Rational& e) {
  const auto a = degree_interval(e);
  const auto b = density_interval(e);
  return a.lo < d && d < a.hi && b.lo < d && d < b.hi && Rational(0) < d && d < Rational(1);
}

Rational smallest_admissible(const Rational& e) {
  for (std::int64_t q = 1;; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (admissible(Rational(p, q), e)) return Rational(p, q);
    }
  }
}

TEST(DensityRatio, KnownValues) {
  EXPECT_EQ(choose_density_ratio(Rational(1, 10)), Rational(2, 5));
  const auto w = density_window(Rational(1, 10));
  EXPECT_EQ(w.low(), Rational(31, 80));    // 0.3875
  EXPECT_EQ(w.high(), Rational(49, 120));  // 0.40833...
  const auto quarter = density_window(Rational(1, 4));
  EXPECT_EQ(quarter.low(), Rational(1, 8));
  EXPECT_EQ(quarter.high(), Rational(7, 24));
  // 1/4 has the smallest denominator inside (1/8, 7/24).
  EXPECT_EQ(choose_density_ratio(Rational(1, 4)), Rational(1, 4));
  EXPECT_THROW(choose_density_ratio(Rational(1, 2)), InvalidInput);
  EXPECT_THROW(choose_density_ratio(Rational(0)), InvalidInput);
}

TEST(DensityRatio, AdmissibleAndSmallestAcrossGrid) {
  for (int k = 1; k <= 49; ++k) {
    const Rational e(k, 100);
    const Rational d = choose_density_ratio(e);
    EXPECT_TRUE(admissible(d, e)) << k;
    EXPECT_EQ(d, smallest_admissible(e)) << k;
    // The degree interval sits inside the density interval.
    EXPECT_LT(density_interval(e).lo, degree_interval(e).lo);
    EXPECT_LT(degree_interval(e).hi, density_interval(e).hi);
  }
}

TEST(Perturbed, RedCountMatchesRule) {
  for (int n : {40, 101, 400}) {
    const auto params = make_perturbed_params(n, Rational(1, 10));
    EXPECT_EQ(params.part_a, Rational(n * 2, 5).round());
    EXPECT_EQ(params.part_a + params.part_b, n);
    const auto g = perturbed_colouring(params);
    const std::int64_t x = params.d.num();
    const std::int64_t y = params.d.den();
    std::int64_t cross = 0;
    for (std::int64_t i = 1; i <= params.part_a; ++i) {
      for (std::int64_t j = 1; j <= params.part_b; ++j) {
        std::int64_t r = (i + j) % y;
        if (r == 0) r = y;
        cross += r <= x ? 1 : 0;
        ASSERT_EQ(g.is_red(static_cast<Vertex>(i - 1), static_cast<Vertex>(params.part_a + j - 1)), r <= x);
      }
    }
    const std::int64_t b = params.part_b;
    EXPECT_EQ(g.red_edge_count(), b * (b - 1) / 2 + cross);
    EXPECT_FALSE(g.is_red(0, 1));
    EXPECT_TRUE(g.is_red(n - 1, n - 2));
  }
}

TEST(Perturbed, RejectsDensityOutsideWindow) {
  // d = 4/5 would leave only residue 5 blue, but it is not admissible.
  PerturbedParams p{20, Rational(1, 10), Rational(4, 5), 8, 12};
  EXPECT_THROW(perturbed_colouring(p), InvalidInput);
  EXPECT_THROW(make_perturbed_params(20, Rational(1, 10), Rational(4, 5)), InvalidInput);
  EXPECT_THROW(make_perturbed_params(20, Rational(3, 5)), InvalidInput);
}

TEST(Perturbed, Density2000) {
  const auto g = perturbed_colouring(make_perturbed_params(2000, Rational(1, 10)));
  const double density = static_cast<double>(g.red_edge_count()) / static_cast<double>(g.edge_count());
  EXPECT_GE(density, 0.4);
  EXPECT_LE(density, 0.6);
  for (Vertex v = 0; v < 2000; ++v) {
    const double red = g.red_degree(v);
    ASSERT_TRUE(red >= (0.75 + 0.005) * 2000 - 4 || red <= (0.25 - 0.005) * 2000 + 4) << v;
  }
}

TEST(Forests, Families) {
  const Forest star = make_forest({ForestKind::Star, 8, 0, 0});
  EXPECT_EQ(star.max_degree(), 7);
  EXPECT_EQ(star.edge_count(), 7);
  const Forest path = make_forest({ForestKind::Path, 5, 0, 0});
  EXPECT_EQ(path.max_degree(), 2);
  EXPECT_EQ(path.min_degree(), 1);
  EXPECT_TRUE(path.has_edge(3, 4));
  const Forest broom = make_forest({ForestKind::Broom, 20, 15, 0});
  EXPECT_EQ(broom.max_degree(), 15);
  EXPECT_EQ(broom.edge_count(), 19);
  EXPECT_EQ(broom.vertices_by_degree()[0], 0);
  EXPECT_THROW(make_forest({ForestKind::Broom, 20, 20, 0}), InvalidInput);
  EXPECT_EQ(parse_forest_kind("broom"), ForestKind::Broom);
  EXPECT_THROW(parse_forest_kind("tree"), InvalidInput);
}

TEST(Forests, RandomRespectsCapAndSeed) {
  for (int cap : {2, 3, 5, 19}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Forest f = make_forest({ForestKind::Random, 20, cap, seed});
      EXPECT_LE(f.max_degree(), cap);
      EXPECT_EQ(f.edge_count(), 19);
      EXPECT_EQ(f, make_forest({ForestKind::Random, 20, cap, seed}));
    }
  }
  EXPECT_THROW(make_forest({ForestKind::Random, 20, 1, 0}), InvalidInput);
}

TEST(Forests, DoubleStar) {
  const Forest f = double_star(32, 17);
  EXPECT_TRUE(f.has_edge(0, 1));
  EXPECT_EQ(f.degree(0), 17);
  EXPECT_EQ(f.degree(1), 32 - 17);
  EXPECT_EQ(f.edge_count(), 31);
}

}  // namespace
}  // namespace balforest
