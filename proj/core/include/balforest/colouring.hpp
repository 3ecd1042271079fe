#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace balforest {

using Vertex = std::int32_t;

/// Blue is -1, red is +1.
enum class Colour : std::int8_t { Blue = -1, Red = 1 };

inline int value(Colour c) { return static_cast<int>(c); }

/// A red/blue colouring of the edges of K_n.
///
/// One bit per unordered pair, packed over the strict lower triangle; a set
/// bit means red. Red and blue degrees are computed once at construction and
/// the object is immutable afterwards, so it can be shared between threads.
class ColouredCompleteGraph {
 public:
  class Builder;

  int n() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }

  bool is_red(Vertex i, Vertex j) const;
  /// +1 for red, -1 for blue. Requires i != j.
  int colour(Vertex i, Vertex j) const { return is_red(i, j) ? 1 : -1; }

  int red_degree(Vertex v) const { return red_degree_[static_cast<std::size_t>(v)]; }
  int blue_degree(Vertex v) const { return n_ - 1 - red_degree(v); }
  /// red_degree(v) - blue_degree(v), the sum of the star centred at v.
  int signed_degree(Vertex v) const { return 2 * red_degree(v) - (n_ - 1); }

  std::int64_t red_edge_count() const { return red_edges_; }
  std::int64_t blue_edge_count() const { return edge_count() - red_edges_; }
  /// c(K_n): red edges minus blue edges.
  std::int64_t total_sum() const { return 2 * red_edges_ - edge_count(); }

  /// The same graph with every colour flipped.
  ColouredCompleteGraph negated() const;

  /// Builds a colouring from a rule evaluated once for every pair i > j.
  template <class IsRed>
  static ColouredCompleteGraph from_rule(int n, IsRed&& is_red);

  friend bool operator==(const ColouredCompleteGraph& a, const ColouredCompleteGraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  ColouredCompleteGraph(int n, std::vector<std::uint64_t> bits);

  static std::size_t pair_index(Vertex i, Vertex j) {
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> red_degree_;
  std::int64_t red_edges_ = 0;
};

/// Mutable staging area for a colouring; every pair starts blue.
class ColouredCompleteGraph::Builder {
 public:
  explicit Builder(int n);

  int n() const { return n_; }
  Builder& set(Vertex i, Vertex j, Colour c);
  bool is_red(Vertex i, Vertex j) const;
  ColouredCompleteGraph build() const;

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

template <class IsRed>
ColouredCompleteGraph ColouredCompleteGraph::from_rule(int n, IsRed&& is_red) {
  Builder builder(n);
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if (is_red(i, j)) builder.set(i, j, Colour::Red);
    }
  }
  return builder.build();
}

/// True iff the colouring has as many red as blue edges.
bool is_balanced(const ColouredCompleteGraph& g);

/// Vertices with at least r incident edges of each colour, ascending.
std::vector<Vertex> r_balanced_vertices(const ColouredCompleteGraph& g, int r);

}  // namespace balforest
