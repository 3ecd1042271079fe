#pragma once

#include <span>
#include <utility>
#include <vector>

#include "balforest/colouring.hpp"

namespace balforest {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple acyclic graph on vertices 0..n-1. Isolated vertices are allowed.
///
/// The constructor rejects out-of-range endpoints, loops, repeated edges and
/// cycles. Adjacency is stored in compressed rows and never changes.
class Forest {
 public:
  Forest(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  /// Vertices sorted by degree, highest first; ties by lowest index.
  std::vector<Vertex> vertices_by_degree() const;
  /// Lowest-index vertex of degree min_degree() outside {a, b}, or -1 if none.
  Vertex min_degree_vertex_excluding(Vertex a, Vertex b) const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

}  // namespace balforest
