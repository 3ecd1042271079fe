#include "balforest/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "balforest/errors.hpp"
#include "balforest/io.hpp"

namespace balforest {
namespace {

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::int64_t>::max();
  return out;
}

std::int64_t factorial(int k) {
  std::int64_t out = 1;
  for (int i = 2; i <= k; ++i) out = saturating_mul(out, i);
  return out;
}

/// Depth-first enumeration of the bijections extending a partial embedding.
/// Free forest vertices are placed in ascending index order and each tries
/// host vertices in ascending order, so leaves are visited in lexicographic
/// order of the image tuple.
class ExtensionEnumerator {
 public:
  ExtensionEnumerator(const Forest& forest, const ColouredCompleteGraph& g, const PartialEmbedding& fixed)
      : forest_(forest), g_(g), image_(fixed.map().begin(), fixed.map().end()),
        used_(static_cast<std::size_t>(g.n()), 0) {
    const int n = g.n();
    for (Vertex x = 0; x < n; ++x) used_[x] = fixed.uses(x) ? 1 : 0;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      if (fixed.contains(v)) {
        placed[v] = 1;
      } else {
        order_.push_back(v);
      }
    }
    int remaining = forest.edge_count();
    for (const auto& [u, v] : forest.edges()) {
      if (placed[u] && placed[v]) {
        base_sum_ += g.colour(image_[u], image_[v]);
        --remaining;
      }
    }
    remaining_after_.resize(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const Vertex v = order_[k];
      for (Vertex w : forest.neighbours(v)) {
        if (placed[w]) --remaining;
      }
      placed[v] = 1;
      remaining_after_[k] = remaining;
    }
  }

  std::size_t free_count() const { return order_.size(); }

  /// Require image(a) < image(b); both must be free.
  void require_ordered(Vertex a, Vertex b) {
    ordered_a_ = a;
    ordered_b_ = b;
  }

  /// Visit calls `leaf(sum)` for every complete extension and consults
  /// `prune(partial_sum, remaining_edges)` before descending.
  template <class Leaf, class Prune>
  void run(Leaf&& leaf, Prune&& prune) {
    descend(0, base_sum_, leaf, prune);
  }

  Embedding current_embedding() const { return Embedding(image_, forest_, g_); }

 private:
  template <class Leaf, class Prune>
  bool descend(std::size_t k, int sum, Leaf& leaf, Prune& prune) {
    if (k == order_.size()) return leaf(sum);
    const Vertex v = order_[k];
    for (Vertex x = 0; x < g_.n(); ++x) {
      if (used_[x]) continue;
      if (v == ordered_b_ && x < image_[ordered_a_]) continue;
      int next = sum;
      for (Vertex w : forest_.neighbours(v)) {
        if (image_[w] != PartialEmbedding::kUnassigned) next += g_.colour(x, image_[w]);
      }
      if (prune(next, remaining_after_[k])) continue;
      image_[v] = x;
      used_[x] = 1;
      const bool stop = descend(k + 1, next, leaf, prune);
      used_[x] = 0;
      image_[v] = PartialEmbedding::kUnassigned;
      if (stop) return true;
    }
    return false;
  }

  const Forest& forest_;
  const ColouredCompleteGraph& g_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::vector<int> remaining_after_;
  int base_sum_ = 0;
  Vertex ordered_a_ = -1;
  Vertex ordered_b_ = -1;
};

void check_sizes(const Forest& forest, const ColouredCompleteGraph& g) {
  if (forest.n() != g.n()) throw InvalidInput("forest and colouring have different vertex counts");
}

Vertex star_centre(const Forest& forest) {
  if (forest.n() < 3) return -1;
  for (Vertex v = 0; v < forest.n(); ++v) {
    if (forest.degree(v) == forest.n() - 1) return v;
  }
  return -1;
}

bool is_path(const Forest& forest) {
  return forest.n() >= 3 && forest.edge_count() == forest.n() - 1 && forest.max_degree() <= 2;
}

std::vector<Vertex> checked_set(std::span<const Vertex> vs, int n, const char* what) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidInput(std::string(what) + " has repeated vertices");
  }
  if (!out.empty() && (out.front() < 0 || out.back() >= n)) throw InvalidInput(std::string(what) + " out of range");
  return out;
}

}  // namespace

std::string_view to_string(SignKind kind) {
  switch (kind) {
    case SignKind::Red:
      return "red";
    case SignKind::Blue:
      return "blue";
    case SignKind::Mixed:
      return "mixed";
    case SignKind::Neutral:
      return "neutral";
  }
  return "unknown";
}

MinImbalance exact_min_imbalance(const Forest& forest, const ColouredCompleteGraph& g, bool allow_large) {
  check_sizes(forest, g);
  const int n = g.n();
  if (n > 10 && !allow_large) {
    throw OracleRefusal("exact minimisation over " + std::to_string(n) + "! embeddings refused (limit n <= 10)");
  }
  const int floor_value = forest.edge_count() % 2;

  if (const Vertex centre = star_centre(forest); centre >= 0) {
    // Every leaf is interchangeable, so only the centre's image matters.
    Vertex best = 0;
    for (Vertex x = 1; x < n; ++x) {
      if (std::abs(g.signed_degree(x)) < std::abs(g.signed_degree(best))) best = x;
    }
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    map[centre] = best;
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v == centre) continue;
      if (next == best) ++next;
      map[v] = next++;
    }
    Embedding witness(std::move(map), forest, g);
    return {std::abs(witness.sum()), std::move(witness)};
  }

  ExtensionEnumerator enumerator(forest, g, PartialEmbedding(n, n));
  if (is_path(forest)) {
    Vertex a = -1;
    Vertex b = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (forest.degree(v) == 1) (a < 0 ? a : b) = v;
    }
    enumerator.require_ordered(a, b);
  }

  int best = std::numeric_limits<int>::max();
  std::optional<Embedding> witness;
  enumerator.run(
      [&](int sum) {
        if (std::abs(sum) < best) {
          best = std::abs(sum);
          witness = enumerator.current_embedding();
        }
        return best == floor_value;
      },
      [&](int sum, int remaining) { return std::abs(sum) - remaining >= best; });
  return {best, std::move(*witness)};
}

SignVerdict exact_sign(const Forest& forest, const ColouredCompleteGraph& g, const PartialEmbedding& p,
                       std::int64_t budget) {
  check_sizes(forest, g);
  if (p.forest_size() != g.n() || p.host_size() != g.n()) {
    throw InvalidInput("partial embedding does not match the instance");
  }
  const int free_count = g.n() - p.size();
  if (factorial(free_count) > budget) {
    throw OracleRefusal("exact sign needs " + std::to_string(free_count) + "! extensions, budget is " +
                        std::to_string(budget));
  }
  ExtensionEnumerator enumerator(forest, g, p);
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  std::optional<Embedding> lo_witness;
  std::optional<Embedding> hi_witness;
  enumerator.run(
      [&](int sum) {
        if (sum < lo) {
          lo = sum;
          lo_witness = enumerator.current_embedding();
        }
        if (sum > hi) {
          hi = sum;
          hi_witness = enumerator.current_embedding();
        }
        return false;
      },
      [&](int sum, int remaining) { return sum - remaining >= lo && sum + remaining <= hi; });

  SignKind kind = SignKind::Mixed;
  if (lo == 0 && hi == 0) {
    kind = SignKind::Neutral;
  } else if (lo >= 0) {
    kind = SignKind::Red;
  } else if (hi <= 0) {
    kind = SignKind::Blue;
  }
  return {kind, lo, hi, std::move(*lo_witness), std::move(*hi_witness)};
}

SignFixingResult is_sign_fixing(const Forest& forest, const ColouredCompleteGraph& g, std::span<const Vertex> l,
                                std::span<const Vertex> u, std::int64_t budget) {
  check_sizes(forest, g);
  const int n = g.n();
  const auto l_set = checked_set(l, n, "L");
  const auto u_set = checked_set(u, n, "U");
  if (l_set.size() > u_set.size()) return {};  // no placement of L inside U exists

  std::int64_t placements = 1;
  for (std::size_t k = 0; k < l_set.size(); ++k) {
    placements = saturating_mul(placements, static_cast<std::int64_t>(u_set.size() - k));
  }
  const std::int64_t work = saturating_mul(placements, factorial(n - static_cast<int>(l_set.size())));
  if (work > budget) {
    throw OracleRefusal("sign-fixing test needs " + std::to_string(work) + " extensions, budget is " +
                        std::to_string(budget));
  }

  PartialEmbedding placement(n, n);
  SignFixingResult result;
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == l_set.size()) {
      SignVerdict verdict = exact_sign(forest, g, placement, std::numeric_limits<std::int64_t>::max());
      if (!verdict.is_mixed()) return false;
      result.sign_fixing = false;
      result.witness = placement;
      result.negative = std::move(verdict.min_witness);
      result.positive = std::move(verdict.max_witness);
      return true;
    }
    for (Vertex x : u_set) {
      if (placement.uses(x)) continue;
      placement.assign(l_set[k], x);
      const bool found = self(self, k + 1);
      placement.unassign(l_set[k]);
      if (found) return true;
    }
    return false;
  };
  place(place, 0);
  return result;
}

MinimalSignFixing minimal_sign_fixing_subset(const Forest& forest, const ColouredCompleteGraph& g,
                                             std::span<const Vertex> l, std::span<const Vertex> u,
                                             std::int64_t budget) {
  std::vector<Vertex> current = checked_set(l, g.n(), "L");
  const SignFixingResult check = is_sign_fixing(forest, g, current, u, budget);
  if (!check.sign_fixing) {
    throw PreconditionError("L is not U-sign-fixing; counterexample placement " +
                            io::partial_to_json(*check.witness).dump() + " has extensions with sums " +
                            std::to_string(check.negative->sum()) + " and " + std::to_string(check.positive->sum()));
  }
  for (std::size_t k = 0; k < current.size();) {
    std::vector<Vertex> smaller = current;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_sign_fixing(forest, g, smaller, u, budget).sign_fixing) {
      current = std::move(smaller);
    } else {
      ++k;
    }
  }
  MinimalSignFixing out;
  out.m = current;
  for (Vertex v : current) {
    int inside = 0;
    for (Vertex w : forest.neighbours(v)) {
      if (std::binary_search(current.begin(), current.end(), w)) ++inside;
    }
    if (inside >= 2) out.n.push_back(v);
  }
  return out;
}

}  // namespace balforest
