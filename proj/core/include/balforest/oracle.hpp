#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "balforest/colouring.hpp"
#include "balforest/embedding.hpp"
#include "balforest/forest.hpp"

namespace balforest {

/// Budgets count complete embeddings visited, not time.
inline constexpr std::int64_t kDefaultOracleBudget = 3628800;  // 10!

struct MinImbalance {
  int value = 0;
  Embedding witness;
};

/// Minimum |c(f(F))| over all embeddings, with a witness. Refuses n > 10
/// unless allow_large is set. Stars are reduced to the choice of centre and
/// paths to one orientation; every other forest is enumerated in full
/// (with pruning on the number of unplaced edges).
MinImbalance exact_min_imbalance(const Forest& forest, const ColouredCompleteGraph& g, bool allow_large = false);

enum class SignKind { Red, Blue, Mixed, Neutral };

std::string_view to_string(SignKind kind);

/// Extremes of c over every extension of a partial embedding.
/// Red: min >= 0 (and max > 0); Blue: max <= 0 (and min < 0); Neutral: all
/// extensions sum to 0; Mixed: min < 0 < max.
struct SignVerdict {
  SignKind kind = SignKind::Neutral;
  int min_sum = 0;
  int max_sum = 0;
  Embedding min_witness;
  Embedding max_witness;

  bool is_red() const { return min_sum >= 0; }
  bool is_blue() const { return max_sum <= 0; }
  bool is_mixed() const { return min_sum < 0 && max_sum > 0; }
};

/// Refuses when (n - |dom p|)! exceeds the budget.
SignVerdict exact_sign(const Forest& forest, const ColouredCompleteGraph& g, const PartialEmbedding& p,
                       std::int64_t budget = kDefaultOracleBudget);

struct SignFixingResult {
  bool sign_fixing = true;
  /// On failure: a placement of L inside U whose extensions take both strict signs.
  std::optional<PartialEmbedding> witness;
  std::optional<Embedding> negative;
  std::optional<Embedding> positive;
};

/// True iff every injection L -> U has extensions of one sign only.
/// Refuses when P(|U|, |L|) (n - |L|)! exceeds the budget.
SignFixingResult is_sign_fixing(const Forest& forest, const ColouredCompleteGraph& g, std::span<const Vertex> l,
                                std::span<const Vertex> u, std::int64_t budget = kDefaultOracleBudget);

struct MinimalSignFixing {
  /// Inclusion-minimal U-sign-fixing subset of L.
  std::vector<Vertex> m;
  /// Vertices of M with at least two neighbours inside M.
  std::vector<Vertex> n;
};

/// Drops vertices of L in ascending order while the remainder stays
/// sign-fixing. Throws PreconditionError if L itself is not sign-fixing.
MinimalSignFixing minimal_sign_fixing_subset(const Forest& forest, const ColouredCompleteGraph& g,
                                             std::span<const Vertex> l, std::span<const Vertex> u,
                                             std::int64_t budget = kDefaultOracleBudget);

}  // namespace balforest
