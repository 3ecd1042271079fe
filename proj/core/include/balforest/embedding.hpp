#pragma once

#include <span>
#include <vector>

#include "balforest/colouring.hpp"
#include "balforest/forest.hpp"

namespace balforest {

/// A bijection from the vertices of a forest to the vertices of K_n, with
/// its colour sum c(f(F)) kept up to date under swaps.
///
/// The forest and colouring are not stored; callers pass the same pair to
/// every mutating call.
class Embedding {
 public:
  /// map[v] is the image of forest vertex v. Throws InvalidInput unless map
  /// is a permutation of 0..n-1 with n = F.n() = g.n().
  Embedding(std::vector<Vertex> map, const Forest& forest, const ColouredCompleteGraph& g);

  static Embedding identity(const Forest& forest, const ColouredCompleteGraph& g);

  int size() const { return static_cast<int>(forward_.size()); }
  Vertex image(Vertex v) const { return forward_[static_cast<std::size_t>(v)]; }
  Vertex preimage(Vertex x) const { return inverse_[static_cast<std::size_t>(x)]; }
  std::span<const Vertex> map() const { return forward_; }
  int sum() const { return sum_; }

  /// Change of sum if the images of u and v were exchanged. Only edges at u
  /// or v are rescored.
  int swap_delta(Vertex u, Vertex v, const Forest& forest, const ColouredCompleteGraph& g) const;
  /// Exchanges the images of u and v and updates the cached sum.
  void swap(Vertex u, Vertex v, const Forest& forest, const ColouredCompleteGraph& g);

  friend bool operator==(const Embedding& a, const Embedding& b) { return a.forward_ == b.forward_; }
  /// Lexicographic on the image tuple.
  friend bool operator<(const Embedding& a, const Embedding& b) { return a.forward_ < b.forward_; }

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
  int sum_ = 0;
};

/// Sum over forest edges uv of colour(f(u), f(v)), recomputed from scratch.
int subgraph_sum(const ColouredCompleteGraph& g, std::span<const Vertex> map, const Forest& forest);
int subgraph_sum(const ColouredCompleteGraph& g, const Embedding& f, const Forest& forest);

/// Copy of f with the images of u and v exchanged. Throws InvalidInput if u == v.
Embedding swap_images(const Embedding& f, Vertex u, Vertex v, const Forest& forest,
                      const ColouredCompleteGraph& g);

/// Injective map from a subset of forest vertices into K_n.
class PartialEmbedding {
 public:
  static constexpr Vertex kUnassigned = -1;

  PartialEmbedding(int forest_size, int host_size);
  /// map[v] is an image or kUnassigned. Throws InvalidInput if two vertices
  /// share an image or an image is out of range.
  PartialEmbedding(std::vector<Vertex> map, int host_size);

  int forest_size() const { return static_cast<int>(forward_.size()); }
  int host_size() const { return static_cast<int>(used_.size()); }
  int size() const { return assigned_; }
  bool empty() const { return assigned_ == 0; }

  bool contains(Vertex v) const { return forward_[static_cast<std::size_t>(v)] != kUnassigned; }
  Vertex image(Vertex v) const { return forward_[static_cast<std::size_t>(v)]; }
  bool uses(Vertex x) const { return used_[static_cast<std::size_t>(x)] != 0; }
  std::span<const Vertex> map() const { return forward_; }

  /// Domain, ascending.
  std::vector<Vertex> domain() const;
  /// Image set, ascending.
  std::vector<Vertex> image_set() const;

  void assign(Vertex v, Vertex x);
  void unassign(Vertex v);

  /// Restriction to the given forest vertices (those not in the domain are skipped).
  PartialEmbedding restricted_to(std::span<const Vertex> vertices) const;
  static PartialEmbedding from_embedding(const Embedding& f);

  friend bool operator==(const PartialEmbedding& a, const PartialEmbedding& b) {
    return a.forward_ == b.forward_ && a.used_.size() == b.used_.size();
  }

 private:
  std::vector<Vertex> forward_;
  std::vector<char> used_;
  int assigned_ = 0;
};

/// True iff f agrees with p on the domain of p.
bool extends(const Embedding& f, const PartialEmbedding& p);

}  // namespace balforest
