#include "balforest/interpolate.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "balforest/errors.hpp"

namespace balforest {

SignedPair make_signed_pair(Embedding negative, Embedding positive, const Forest& forest) {
  if (negative.size() != forest.n() || positive.size() != forest.n()) {
    throw InvalidInput("signed pair: embeddings do not match the forest");
  }
  if (negative.sum() > 0 || positive.sum() < 0) {
    throw InvalidInput("signed pair needs c(negative) <= 0 <= c(positive), got " + std::to_string(negative.sum()) +
                       " and " + std::to_string(positive.sum()));
  }
  SignedPair pair{std::move(negative), std::move(positive), {}, 0};
  for (Vertex v = 0; v < forest.n(); ++v) {
    if (pair.negative.image(v) != pair.positive.image(v)) {
      pair.disagreement.push_back(v);
      pair.delta_i = std::max(pair.delta_i, forest.degree(v));
    }
  }
  return pair;
}

InterpolationResult interpolate(const SignedPair& pair, const Forest& forest, const ColouredCompleteGraph& g) {
  if (pair.negative.sum() > 0 || pair.positive.sum() < 0) {
    throw InvalidInput("interpolate needs c(negative) <= 0 <= c(positive)");
  }
  const int min_degree = forest.min_degree();
  const int bound = pair.delta_i + min_degree;
  InterpolationTrace trace;
  trace.achieved_bound = bound;

  if (std::abs(pair.positive.sum()) <= bound) {
    trace.start_sum = pair.positive.sum();
    return {pair.positive, std::move(trace)};
  }
  if (std::abs(pair.negative.sum()) <= bound) {
    trace.start_sum = pair.negative.sum();
    return {pair.negative, std::move(trace)};
  }

  Embedding current = pair.positive;
  trace.start_sum = current.sum();
  auto transpose = [&](Vertex u, Vertex v) {
    const int before = current.sum();
    current.swap(u, v, forest, g);
    if (std::abs(current.sum() - before) > 2 * bound) {
      throw std::logic_error("interpolation step exceeded 2 (delta_I + delta)");
    }
    trace.steps.push_back({trace.steps.size(), u, v, current.sum()});
    return std::abs(current.sum()) <= bound;
  };

  for (Vertex v : pair.disagreement) {
    const Vertex target = pair.negative.image(v);
    if (current.image(v) == target) continue;
    const Vertex u = current.preimage(target);
    if (forest.degree(u) == min_degree || forest.degree(v) == min_degree) {
      if (transpose(u, v)) return {std::move(current), std::move(trace)};
      continue;
    }
    const Vertex w = forest.min_degree_vertex_excluding(u, v);
    if (w < 0) throw InvalidInput("interpolation through a minimum-degree vertex needs n >= 3");
    if (transpose(u, w)) return {std::move(current), std::move(trace)};
    if (transpose(v, w)) return {std::move(current), std::move(trace)};
    if (transpose(u, w)) return {std::move(current), std::move(trace)};
  }
  // The walk ends at the negative embedding, which was already rejected, so
  // some step must have landed inside the window.
  throw std::logic_error("interpolation walk never entered [-bound, bound]");
}

void write_trace_json_lines(std::ostream& out, const InterpolationTrace& trace) {
  for (const auto& step : trace.steps) {
    out << nlohmann::json{{"step", step.index}, {"u", step.u}, {"v", step.v}, {"sum", step.sum}}.dump() << '\n';
  }
}

Claim9Sequence claim9_sequence(const PartialEmbedding& f, const PartialEmbedding& g, std::span<const Vertex> m,
                               std::span<const Vertex> n, Vertex a) {
  if (f.forest_size() != g.forest_size() || f.host_size() != g.host_size()) {
    throw InvalidInput("claim9_sequence: f and g live on different vertex sets");
  }
  std::vector<Vertex> m_sorted(m.begin(), m.end());
  std::sort(m_sorted.begin(), m_sorted.end());
  if (std::adjacent_find(m_sorted.begin(), m_sorted.end()) != m_sorted.end()) {
    throw InvalidInput("claim9_sequence: M has repeated vertices");
  }
  if (f.domain() != m_sorted || g.domain() != m_sorted) {
    throw InvalidInput("claim9_sequence: f and g must both have domain exactly M");
  }
  std::vector<char> in_n(static_cast<std::size_t>(f.forest_size()), 0);
  for (Vertex v : n) {
    if (!std::binary_search(m_sorted.begin(), m_sorted.end(), v)) throw InvalidInput("claim9_sequence: N must lie inside M");
    if (f.image(v) != g.image(v)) throw InvalidInput("claim9_sequence: f and g must agree on N");
    in_n[v] = 1;
  }
  if (a < 0 || a >= g.host_size()) throw InvalidInput("claim9_sequence: spare vertex out of range");
  if (g.uses(a)) throw InvalidInput("claim9_sequence: spare vertex lies in the image of g");

  Claim9Sequence out;
  Vertex parked_last = -1;
  for (Vertex v : m_sorted) {
    if (in_n[v]) continue;
    if (f.image(v) == a) {
      parked_last = v;
    } else {
      out.labels.push_back(v);
    }
  }
  if (parked_last >= 0) out.labels.push_back(parked_last);

  const auto& labels = out.labels;
  const std::size_t r = labels.size();
  std::vector<Vertex> current(g.map().begin(), g.map().end());
  out.steps.emplace_back(current, g.host_size());
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex vi = labels[i];
    const Vertex goal = f.image(vi);
    const std::vector<Vertex> before = current;

    // Park whichever later vertex currently sits on goal at the spare vertex.
    if (before[vi] != goal) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (before[labels[j]] == goal) current[labels[j]] = a;
      }
    }
    out.steps.emplace_back(current, g.host_size());

    current[vi] = goal;
    out.steps.emplace_back(current, g.host_size());

    // The parked vertex takes the place v_i vacated.
    for (std::size_t j = i + 1; j < r; ++j) {
      if (current[labels[j]] == a) current[labels[j]] = before[vi];
    }
    out.steps.emplace_back(current, g.host_size());
  }
  return out;
}

}  // namespace balforest
