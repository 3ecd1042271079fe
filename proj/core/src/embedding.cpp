#include "balforest/embedding.hpp"

#include <numeric>
#include <string>

#include "balforest/errors.hpp"

namespace balforest {

Embedding::Embedding(std::vector<Vertex> map, const Forest& forest, const ColouredCompleteGraph& g)
    : forward_(std::move(map)) {
  const int n = g.n();
  if (forest.n() != n) {
    throw InvalidInput("forest has " + std::to_string(forest.n()) + " vertices but K_n has " + std::to_string(n));
  }
  if (static_cast<int>(forward_.size()) != n) {
    throw InvalidInput("embedding map has " + std::to_string(forward_.size()) + " entries, expected " +
                       std::to_string(n));
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex x = forward_[v];
    if (x < 0 || x >= n) throw InvalidInput("image " + std::to_string(x) + " out of range");
    if (inverse_[x] != -1) throw InvalidInput("image " + std::to_string(x) + " used twice");
    inverse_[x] = v;
  }
  sum_ = subgraph_sum(g, forward_, forest);
}

Embedding Embedding::identity(const Forest& forest, const ColouredCompleteGraph& g) {
  std::vector<Vertex> map(static_cast<std::size_t>(g.n()));
  std::iota(map.begin(), map.end(), 0);
  return Embedding(std::move(map), forest, g);
}

int Embedding::swap_delta(Vertex u, Vertex v, const Forest& forest, const ColouredCompleteGraph& g) const {
  const Vertex fu = forward_[u];
  const Vertex fv = forward_[v];
  int delta = 0;
  // Edge uv (if present) keeps its colour: both endpoints trade places.
  for (Vertex w : forest.neighbours(u)) {
    if (w == v) continue;
    const Vertex fw = forward_[w];
    delta += g.colour(fv, fw) - g.colour(fu, fw);
  }
  for (Vertex w : forest.neighbours(v)) {
    if (w == u) continue;
    const Vertex fw = forward_[w];
    delta += g.colour(fu, fw) - g.colour(fv, fw);
  }
  return delta;
}

void Embedding::swap(Vertex u, Vertex v, const Forest& forest, const ColouredCompleteGraph& g) {
  if (u == v) throw InvalidInput("cannot swap a vertex with itself");
  sum_ += swap_delta(u, v, forest, g);
  std::swap(forward_[u], forward_[v]);
  inverse_[forward_[u]] = u;
  inverse_[forward_[v]] = v;
}

int subgraph_sum(const ColouredCompleteGraph& g, std::span<const Vertex> map, const Forest& forest) {
  if (static_cast<int>(map.size()) != forest.n()) {
    throw InvalidInput("embedding domain does not match the forest");
  }
  int sum = 0;
  for (const auto& [u, v] : forest.edges()) sum += g.colour(map[u], map[v]);
  return sum;
}

int subgraph_sum(const ColouredCompleteGraph& g, const Embedding& f, const Forest& forest) {
  return subgraph_sum(g, f.map(), forest);
}

Embedding swap_images(const Embedding& f, Vertex u, Vertex v, const Forest& forest, const ColouredCompleteGraph& g) {
  Embedding out = f;
  out.swap(u, v, forest, g);
  return out;
}

PartialEmbedding::PartialEmbedding(int forest_size, int host_size)
    : forward_(static_cast<std::size_t>(forest_size), kUnassigned), used_(static_cast<std::size_t>(host_size), 0) {
  if (forest_size < 0 || host_size < 0) throw InvalidInput("negative size");
}

PartialEmbedding::PartialEmbedding(std::vector<Vertex> map, int host_size)
    : PartialEmbedding(static_cast<int>(map.size()), host_size) {
  for (Vertex v = 0; v < static_cast<Vertex>(map.size()); ++v) {
    if (map[v] != kUnassigned) assign(v, map[v]);
  }
}

std::vector<Vertex> PartialEmbedding::domain() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < forest_size(); ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> PartialEmbedding::image_set() const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < host_size(); ++x) {
    if (uses(x)) out.push_back(x);
  }
  return out;
}

void PartialEmbedding::assign(Vertex v, Vertex x) {
  if (v < 0 || v >= forest_size()) throw InvalidInput("forest vertex " + std::to_string(v) + " out of range");
  if (x < 0 || x >= host_size()) throw InvalidInput("host vertex " + std::to_string(x) + " out of range");
  if (contains(v)) throw InvalidInput("forest vertex " + std::to_string(v) + " is already placed");
  if (uses(x)) throw InvalidInput("host vertex " + std::to_string(x) + " is already used");
  forward_[v] = x;
  used_[x] = 1;
  ++assigned_;
}

void PartialEmbedding::unassign(Vertex v) {
  if (v < 0 || v >= forest_size() || !contains(v)) return;
  used_[forward_[v]] = 0;
  forward_[v] = kUnassigned;
  --assigned_;
}

PartialEmbedding PartialEmbedding::restricted_to(std::span<const Vertex> vertices) const {
  PartialEmbedding out(forest_size(), host_size());
  for (Vertex v : vertices) {
    if (contains(v)) out.assign(v, image(v));
  }
  return out;
}

PartialEmbedding PartialEmbedding::from_embedding(const Embedding& f) {
  return PartialEmbedding(std::vector<Vertex>(f.map().begin(), f.map().end()), f.size());
}

bool extends(const Embedding& f, const PartialEmbedding& p) {
  if (f.size() != p.forest_size()) return false;
  for (Vertex v = 0; v < p.forest_size(); ++v) {
    if (p.contains(v) && f.image(v) != p.image(v)) return false;
  }
  return true;
}

}  // namespace balforest
