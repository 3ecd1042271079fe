#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "balforest/bounds.hpp"
#include "balforest/colouring.hpp"
#include "balforest/embedding.hpp"
#include "balforest/forest.hpp"
#include "balforest/interpolate.hpp"

namespace balforest {

enum class Strategy { Auto, InterpolateOnly, GreedyStar, LocalSearch };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

struct SolverConfig {
  std::uint64_t seed = 0;
  int max_restarts = 200;
  /// Samples per sign search.
  int sample_budget = 5000;
  /// Empty means: eps* of the degree offset, clamped to [1/n, 1/8].
  std::optional<double> fixed_epsilon;
  Strategy strategy = Strategy::Auto;
  /// Instances with n at or below this are solved exactly by enumeration.
  int exact_threshold = 8;
  /// Swap evaluations allowed in the local-search polish.
  std::int64_t local_search_budget = 200000;

  /// Throws InvalidInput on non-positive budgets or eps outside [1/n, 1/8].
  void validate(int n) const;
};

/// Which guarantee backs the returned embedding.
enum class Certificate {
  /// Exhaustive optimum.
  ExactOptimum,
  /// Interpolation between a pair agreeing on an anchored vertex set, so
  /// |sum| <= delta_I + min_degree with delta_I below the anchored degrees.
  Interpolation,
  /// Case of two high-degree centres placed against a red-poor vertex.
  GreedyStar,
  /// Interpolation from an unanchored pair: |sum| <= delta_I + min_degree <= Delta + 1.
  Generic,
  /// No guarantee fired; best embedding seen.
  HeuristicOnly,
};

std::string_view to_string(Certificate c);

struct SolveStats {
  int restarts = 0;
  std::int64_t samples = 0;
  std::int64_t local_search_moves = 0;
};

struct SolveResult {
  Embedding embedding;
  int achieved = 0;
  Certificate certificate = Certificate::HeuristicOnly;
  /// Numeric value of the certificate, when one fired.
  std::optional<int> certified_value;
  BoundReport theorem_bound;
  bool within_theorem = false;
  SolveStats stats;
  /// Swap trace of the interpolation behind the certificate, if that is
  /// where it came from.
  std::optional<InterpolationTrace> trace;
};

/// Outcome of sampling random extensions of an anchor.
struct SignSearchOutcome {
  std::optional<SignedPair> pair;
  /// Sample with the smallest |sum| (lexicographically smallest map on ties).
  std::optional<Embedding> best;
  std::int64_t samples = 0;
};

/// Uniformly random bijection extending the anchor (or unconstrained when
/// anchor is null).
Embedding random_extension(const Forest& forest, const ColouredCompleteGraph& g, const PartialEmbedding* anchor,
                           std::mt19937_64& rng);

/// Draws up to `budget` random extensions, stopping as soon as one sample
/// with sum <= 0 and one with sum >= 0 have been seen.
SignSearchOutcome try_find_signed_pair(const Forest& forest, const ColouredCompleteGraph& g,
                                       const PartialEmbedding* anchor, int budget, std::mt19937_64& rng);

/// Same, seeded from cfg; throws SignSearchFailure when the budget runs out.
SignedPair find_signed_pair(const Forest& forest, const ColouredCompleteGraph& g,
                            const std::optional<PartialEmbedding>& anchor, const SolverConfig& cfg);

/// Forest vertices of degree at least 2/eps. Requires 1/n <= eps <= 1/8.
std::vector<Vertex> large_degree_set(const Forest& forest, double eps);

/// First-improvement descent over single transpositions, scanned in
/// ascending (u, v) order, accepting a swap when |sum| strictly drops.
/// Vertices flagged in `frozen` never move. Returns the number of
/// evaluations spent.
std::int64_t local_search(Embedding& f, const Forest& forest, const ColouredCompleteGraph& g,
                          std::int64_t budget, std::span<const char> frozen = {});

struct GreedyStarEmbedding {
  Embedding embedding;
  std::vector<Vertex> x_red;
  std::vector<Vertex> x_blue;
  std::vector<Vertex> y_blue;
  /// |sum| bound implied by the forced red and blue edges.
  int guaranteed = 0;
};

/// Places the two highest-degree forest vertices v1 -> x and v2 -> y, then
/// forces floor(3n/8) neighbours of v1 onto red neighbours of x,
/// floor(n/8) - 1 onto blue neighbours of x, and floor(n/4) - 1 private
/// neighbours of v2 onto blue neighbours of y. The rest is placed by a seeded
/// shuffle and then improved by local search that leaves the forced part alone.
///
/// Requires deg(v1) >= n/2, deg(v2) >= n/4, x (n/4 - 1)-balanced with
/// red_degree(x) >= (n-1)/2, and red_degree(y) < n/4.
GreedyStarEmbedding greedy_star_balance(const Forest& forest, const ColouredCompleteGraph& g, Vertex x, Vertex y,
                                        std::uint64_t seed = 0);

/// End-to-end search. Deterministic in (forest, colouring, cfg).
SolveResult solve(const Forest& forest, const ColouredCompleteGraph& g, const SolverConfig& cfg = {});

}  // namespace balforest
