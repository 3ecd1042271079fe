#include "balforest/colouring.hpp"

#include <bit>
#include <string>

#include "balforest/errors.hpp"

namespace balforest {
namespace {

std::size_t word_count(int n) {
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (pairs + 63) / 64;
}

void check_pair(int n, Vertex i, Vertex j) {
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw InvalidInput("vertex out of range for K_" + std::to_string(n));
  }
  if (i == j) throw InvalidInput("K_n has no loop at vertex " + std::to_string(i));
}

}  // namespace

ColouredCompleteGraph::ColouredCompleteGraph(int n, std::vector<std::uint64_t> bits)
    : n_(n), bits_(std::move(bits)), red_degree_(static_cast<std::size_t>(n), 0) {
  for (Vertex i = 1; i < n_; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if (is_red(i, j)) {
        ++red_degree_[static_cast<std::size_t>(i)];
        ++red_degree_[static_cast<std::size_t>(j)];
      }
    }
  }
  for (auto word : bits_) red_edges_ += std::popcount(word);
}

bool ColouredCompleteGraph::is_red(Vertex i, Vertex j) const {
  const std::size_t k = pair_index(i, j);
  return (bits_[k >> 6] >> (k & 63)) & 1U;
}

ColouredCompleteGraph ColouredCompleteGraph::negated() const {
  std::vector<std::uint64_t> bits = bits_;
  for (auto& word : bits) word = ~word;
  const std::size_t pairs = static_cast<std::size_t>(edge_count());
  if (pairs % 64 != 0) bits.back() &= (std::uint64_t{1} << (pairs % 64)) - 1;
  return ColouredCompleteGraph(n_, std::move(bits));
}

ColouredCompleteGraph::Builder::Builder(int n) : n_(n) {
  if (n < 2) throw InvalidInput("K_n needs n >= 2, got " + std::to_string(n));
  bits_.assign(word_count(n), 0);
}

ColouredCompleteGraph::Builder& ColouredCompleteGraph::Builder::set(Vertex i, Vertex j, Colour c) {
  check_pair(n_, i, j);
  const std::size_t k = pair_index(i, j);
  const std::uint64_t mask = std::uint64_t{1} << (k & 63);
  if (c == Colour::Red) {
    bits_[k >> 6] |= mask;
  } else {
    bits_[k >> 6] &= ~mask;
  }
  return *this;
}

bool ColouredCompleteGraph::Builder::is_red(Vertex i, Vertex j) const {
  check_pair(n_, i, j);
  const std::size_t k = pair_index(i, j);
  return (bits_[k >> 6] >> (k & 63)) & 1U;
}

ColouredCompleteGraph ColouredCompleteGraph::Builder::build() const { return ColouredCompleteGraph(n_, bits_); }

bool is_balanced(const ColouredCompleteGraph& g) { return g.total_sum() == 0; }

std::vector<Vertex> r_balanced_vertices(const ColouredCompleteGraph& g, int r) {
  if (r < 0) throw InvalidInput("r must be non-negative");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.red_degree(v) >= r && g.blue_degree(v) >= r) out.push_back(v);
  }
  return out;
}

}  // namespace balforest
