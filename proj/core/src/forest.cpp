#include "balforest/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "balforest/errors.hpp"

namespace balforest {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// False if a and b were already joined.
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidInput("forest needs at least one vertex");
  if (edges_.size() > static_cast<std::size_t>(n - 1)) {
    throw InvalidInput("a forest on " + std::to_string(n) + " vertices has at most n - 1 edges");
  }
  DisjointSets sets(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    // Repeated edges are caught here too: the second copy closes a 2-cycle.
    if (!sets.unite(u, v)) {
      throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " closes a cycle");
    }
    ++degree[u];
    ++degree[v];
  }

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
  max_degree_ = *std::max_element(degree.begin(), degree.end());
  min_degree_ = *std::min_element(degree.begin(), degree.end());
}

std::span<const Vertex> Forest::neighbours(Vertex v) const {
  return std::span<const Vertex>(adjacency_).subspan(static_cast<std::size_t>(offsets_[v]),
                                                     static_cast<std::size_t>(degree(v)));
}

bool Forest::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Vertex> Forest::vertices_by_degree() const {
  std::vector<Vertex> order(static_cast<std::size_t>(n_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](Vertex a, Vertex b) { return degree(a) > degree(b); });
  return order;
}

Vertex Forest::min_degree_vertex_excluding(Vertex a, Vertex b) const {
  for (Vertex w = 0; w < n_; ++w) {
    if (w != a && w != b && degree(w) == min_degree_) return w;
  }
  return -1;
}

}  // namespace balforest
