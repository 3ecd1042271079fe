#include "balforest/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "balforest/errors.hpp"

namespace balforest {

ColouredCompleteGraph random_colouring_with_red_count(int n, std::int64_t red_edges, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("K_n needs n >= 2");
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (red_edges < 0 || red_edges > total) throw InvalidInput("red edge count out of range");
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(total));
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) pairs.push_back({i, j});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  ColouredCompleteGraph::Builder builder(n);
  for (std::int64_t k = 0; k < red_edges; ++k) builder.set(pairs[k].u, pairs[k].v, Colour::Red);
  return builder.build();
}

ColouredCompleteGraph random_balanced_colouring(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("K_n needs n >= 2");
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (total % 2 != 0) {
    throw ParityError("no balanced colouring of K_" + std::to_string(n) + ": C(n,2) = " + std::to_string(total) +
                      " is odd; n must be 0 or 1 (mod 4)");
  }
  return random_colouring_with_red_count(n, total / 2, seed);
}

ColouredCompleteGraph c0_colouring(int n) {
  if (n < 4 || n % 4 != 0) throw InvalidInput("c0 colouring needs n divisible by 4, got " + std::to_string(n));
  const int half = n / 2;
  return ColouredCompleteGraph::from_rule(n, [half](Vertex i, Vertex j) {
    // i > j, so if either endpoint is a u it is j.
    if (i < half) return false;  // u_i u_j
    if (j >= half) return true;  // v_i v_j
    const int ui = j + 1;
    const int vj = i - half + 1;
    return (ui + vj) % 2 == 0;
  });
}

DensityWindow density_window(const Rational& eps) {
  if (!(Rational(0) < eps && eps < Rational(1, 2))) {
    throw InvalidInput("epsilon must lie strictly between 0 and 1/2, got " + eps.str());
  }
  const Rational quarter(1, 4);
  const Rational half(1, 2);
  const Rational sq_half = eps * eps / Rational(2);
  return DensityWindow{
      .degree_low = (quarter + sq_half - eps) / (half - eps),
      .degree_high = (quarter - sq_half) / (half + eps),
      .density_low = (Rational(1, 8) - eps - sq_half) / (quarter - eps * eps),
      .density_high = half,
  };
}

Rational choose_density_ratio(const Rational& eps) {
  const DensityWindow window = density_window(eps);
  Rational low = window.low();
  const Rational high = window.high();
  if (low < Rational(0)) low = Rational(0);
  if (!(low < high)) {
    throw std::logic_error("empty admissible interval for d at epsilon " + eps.str());
  }
  for (std::int64_t q = 1; q <= 1'000'000; ++q) {
    const std::int64_t p = (low * Rational(q)).floor() + 1;
    const Rational candidate(p, q);
    if (candidate < high) return candidate;
  }
  throw std::logic_error("no admissible d with denominator below 10^6 at epsilon " + eps.str());
}

PerturbedParams make_perturbed_params(int n, const Rational& eps, std::optional<Rational> d) {
  if (n < 2) throw InvalidInput("perturbed colouring needs n >= 2");
  PerturbedParams params;
  params.n = n;
  params.epsilon = eps;
  params.d = d ? *d : choose_density_ratio(eps);
  params.part_a = static_cast<int>(((Rational(1, 2) - eps) * Rational(n)).round());
  params.part_b = n - params.part_a;
  if (params.part_a < 1 || params.part_b < 1) throw InvalidInput("both parts must be non-empty");
  if (!(Rational(0) < params.d && params.d < Rational(1))) {
    throw InvalidInput("d must lie strictly between 0 and 1, got " + params.d.str());
  }
  if (!density_window(eps).contains(params.d)) {
    throw InvalidInput("d = " + params.d.str() + " is outside the admissible window for epsilon " + eps.str());
  }
  return params;
}

ColouredCompleteGraph perturbed_colouring(const PerturbedParams& p) {
  if (p.n < 2 || p.part_a < 1 || p.part_b < 1 || p.part_a + p.part_b != p.n) {
    throw InvalidInput("perturbed colouring: part sizes must be positive and sum to n");
  }
  if (p.part_a != ((Rational(1, 2) - p.epsilon) * Rational(p.n)).round()) {
    throw InvalidInput("perturbed colouring: |A| must be round((1/2 - eps) n)");
  }
  if (!(Rational(0) < p.d && p.d < Rational(1)) || !density_window(p.epsilon).contains(p.d)) {
    throw InvalidInput("perturbed colouring: d = " + p.d.str() + " is not admissible");
  }
  const std::int64_t x = p.d.num();
  const std::int64_t y = p.d.den();
  const int split = p.part_a;
  return ColouredCompleteGraph::from_rule(p.n, [=](Vertex i, Vertex j) {
    if (i < split) return false;  // both in A
    if (j >= split) return true;  // both in B
    const std::int64_t a_index = j + 1;
    const std::int64_t b_index = i - split + 1;
    const std::int64_t residue = (a_index + b_index - 1) % y + 1;
    return residue <= x;
  });
}

std::string_view to_string(ForestKind kind) {
  switch (kind) {
    case ForestKind::Star:
      return "star";
    case ForestKind::Path:
      return "path";
    case ForestKind::Random:
      return "random";
    case ForestKind::Broom:
      return "broom";
  }
  return "unknown";
}

ForestKind parse_forest_kind(std::string_view name) {
  for (auto kind : {ForestKind::Star, ForestKind::Path, ForestKind::Random, ForestKind::Broom}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidInput("unknown forest kind '" + std::string(name) + "'");
}

Forest make_forest(const ForestSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw InvalidInput("forest needs n >= 1");
  std::vector<Edge> edges;
  switch (spec.kind) {
    case ForestKind::Star:
      for (Vertex k = 1; k < n; ++k) edges.push_back({0, k});
      break;
    case ForestKind::Path:
      for (Vertex k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1});
      break;
    case ForestKind::Broom: {
      const int d = spec.max_degree;
      if (d < 1 || d > n - 1 || (d == 1 && n > 2)) {
        throw InvalidInput("broom needs 2 <= max degree <= n - 1, got " + std::to_string(d));
      }
      for (Vertex k = 1; k <= d; ++k) edges.push_back({0, k});
      for (Vertex k = d; k + 1 < n; ++k) edges.push_back({k, k + 1});
      break;
    }
    case ForestKind::Random: {
      const int cap = spec.max_degree;
      if (n > 1 && (cap < 1 || (cap == 1 && n > 2))) {
        throw InvalidInput("random forest on " + std::to_string(n) + " vertices cannot have degree cap " +
                           std::to_string(cap));
      }
      std::mt19937_64 rng(spec.seed);
      std::vector<int> degree(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> open;
      for (Vertex k = 1; k < n; ++k) {
        open.clear();
        for (Vertex j = 0; j < k; ++j) {
          if (degree[j] < cap) open.push_back(j);
        }
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        const Vertex parent = open[pick(rng)];
        ++degree[parent];
        ++degree[k];
        edges.push_back({parent, k});
      }
      std::vector<Vertex> label(static_cast<std::size_t>(n));
      std::iota(label.begin(), label.end(), 0);
      std::shuffle(label.begin(), label.end(), rng);
      for (auto& e : edges) e = {label[e.u], label[e.v]};
      break;
    }
  }
  return Forest(n, std::move(edges));
}

Forest double_star(int n, int first_degree) {
  if (n < 2 || first_degree < 1 || first_degree > n - 1) {
    throw InvalidInput("double star needs n >= 2 and 1 <= first degree <= n - 1");
  }
  std::vector<Edge> edges{{0, 1}};
  for (Vertex k = 2; k <= first_degree; ++k) edges.push_back({0, k});
  for (Vertex k = first_degree + 1; k < n; ++k) edges.push_back({1, k});
  return Forest(n, std::move(edges));
}

}  // namespace balforest
