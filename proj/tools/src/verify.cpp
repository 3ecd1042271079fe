#include "balforest/tools/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "balforest/bounds.hpp"
#include "balforest/colouring.hpp"
#include "balforest/errors.hpp"
#include "balforest/generators.hpp"
#include "balforest/interpolate.hpp"
#include "balforest/io.hpp"
#include "balforest/oracle.hpp"
#include "balforest/solver.hpp"
#include "seeding.hpp"

namespace balforest::tools {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  /// Records one check; `payload` is only evaluated on failure.
  template <class Payload>
  void check(bool ok, Payload&& payload) {
    ++result_.checked;
    if (ok) return;
    ++result_.violations;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(payload());
  }
  void check(bool ok) {
    check(ok, [] { return nlohmann::json::object(); });
  }
  nlohmann::json& details() { return result_.details; }
  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

ColouredCompleteGraph near_balanced_colouring(int n, std::uint64_t seed) {
  if (n % 4 == 0 || n % 4 == 1) return random_balanced_colouring(n, seed);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return random_colouring_with_red_count(n, pairs / 2, seed);
}

Forest family_forest(int family, int n, std::uint64_t seed) {
  switch (family % 3) {
    case 0:
      return make_forest({ForestKind::Path, n, 0, seed});
    case 1:
      return make_forest({ForestKind::Star, n, 0, seed});
    default:
      return make_forest({ForestKind::Random, n, std::max(2, n / 3), seed});
  }
}

std::vector<Vertex> sample_subset(std::vector<Vertex> pool, std::size_t k, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// --- balanced-vertices -------------------------------------------------------

std::vector<PropertyResult> balanced_vertices(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  Property count("balanced-vertex-count");
  for (int n : sizes) {
    if (n < 5 || (n % 4 != 0 && n % 4 != 1)) {
      throw InvalidInput("balanced-vertices needs n >= 5 with n = 0 or 1 (mod 4), got " + std::to_string(n));
    }
    for (int t = 0; t < trials; ++t) {
      const auto g = random_balanced_colouring(n, derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)}));
      // eps = k/n for every k with 1/n <= eps < 1/4.
      for (int k = 1; 4 * k < n; ++k) {
        const int r = (n - 4 * k + 3) / 4;  // ceil((1/4 - k/n) n)
        const auto found = r_balanced_vertices(g, r);
        count.check(static_cast<int>(found.size()) >= k + 1, [&] {
          return nlohmann::json{{"n", n}, {"trial", t}, {"eps_numerator", k}, {"r", r}, {"found", found.size()}};
        });
      }
    }
  }
  return {count.take()};
}

// --- interpolation -----------------------------------------------------------

std::vector<PropertyResult> interpolation(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  Property bound("sum-within-delta-i-plus-min-degree");
  Property steps("step-change-at-most-twice-bound");
  Property replay("trace-replays-to-result");
  std::int64_t runs = 0;
  for (int n : sizes) {
    if (n < 3) throw InvalidInput("interpolation suite needs n >= 3");
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)});
      const auto g = near_balanced_colouring(n, s);
      const Forest forest = family_forest(t, n, s);
      std::mt19937_64 rng(s);
      auto outcome = try_find_signed_pair(forest, g, nullptr, 5000, rng);
      if (!outcome.pair) continue;
      ++runs;
      const auto result = interpolate(*outcome.pair, forest, g);
      const int limit = outcome.pair->delta_i + forest.min_degree();
      auto payload = [&] {
        return nlohmann::json{{"n", n}, {"trial", t}, {"bound", limit},
                              {"negative", io::embedding_to_json(outcome.pair->negative)},
                              {"positive", io::embedding_to_json(outcome.pair->positive)}};
      };
      bound.check(std::abs(result.embedding.sum()) <= limit && result.trace.achieved_bound == limit, payload);

      Embedding current = outcome.pair->positive;
      if (result.trace.steps.empty() && result.embedding == outcome.pair->negative) current = outcome.pair->negative;
      int previous = current.sum();
      bool steps_ok = true;
      bool replay_ok = current.sum() == result.trace.start_sum;
      for (const auto& step : result.trace.steps) {
        current.swap(step.u, step.v, forest, g);
        replay_ok = replay_ok && current.sum() == step.sum && current.sum() == subgraph_sum(g, current.map(), forest);
        steps_ok = steps_ok && std::abs(current.sum() - previous) <= 2 * limit;
        previous = current.sum();
      }
      replay_ok = replay_ok && current == result.embedding;
      steps.check(steps_ok, payload);
      replay.check(replay_ok, payload);
    }
  }
  bound.details()["runs"] = runs;
  return {bound.take(), steps.take(), replay.take()};
}

// --- claim9 ------------------------------------------------------------------

struct Claim9Instance {
  PartialEmbedding f;
  PartialEmbedding g;
  std::vector<Vertex> m;
  std::vector<Vertex> n;
  std::vector<Vertex> u;
  Vertex a;
};

/// Random (f, g, M, N, a) with f(M), g(M) inside a host set U and f, g
/// agreeing on N. f reuses images of g where possible so that the walk has
/// to park vertices at a.
Claim9Instance random_claim9_instance(int size, std::mt19937_64& rng) {
  const auto all = iota_vertices(size);
  std::uniform_int_distribution<int> m_size(1, size - 2);
  const int mk = m_size(rng);
  const int uk = std::uniform_int_distribution<int>(mk + 1, size)(rng);
  const auto m = sample_subset(all, static_cast<std::size_t>(mk), rng);
  const auto n = sample_subset(m, static_cast<std::size_t>(std::uniform_int_distribution<int>(0, mk - 1)(rng)), rng);
  const auto u = sample_subset(all, static_cast<std::size_t>(uk), rng);

  std::vector<Vertex> hosts = u;
  std::shuffle(hosts.begin(), hosts.end(), rng);
  PartialEmbedding g(size, size);
  for (std::size_t i = 0; i < m.size(); ++i) g.assign(m[i], hosts[i]);
  const Vertex a = hosts[m.size()];

  PartialEmbedding f(size, size);
  for (Vertex v : n) f.assign(v, g.image(v));
  // Three times in four, offer f the images g gives M \ N (and a) first.
  const bool reuse = std::uniform_int_distribution<int>(0, 3)(rng) != 0;
  std::vector<Vertex> preferred;
  std::vector<Vertex> others;
  for (Vertex x : u) {
    if (f.uses(x)) continue;
    (reuse && (x == a || g.uses(x)) ? preferred : others).push_back(x);
  }
  std::shuffle(preferred.begin(), preferred.end(), rng);
  std::shuffle(others.begin(), others.end(), rng);
  std::vector<Vertex> free_hosts = preferred;
  free_hosts.insert(free_hosts.end(), others.begin(), others.end());
  std::size_t next = 0;
  for (Vertex v : m) {
    if (!f.contains(v)) f.assign(v, free_hosts[next++]);
  }
  return {std::move(f), std::move(g), m, n, u, a};
}

std::vector<PropertyResult> claim9(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  Property injective("each-step-injective");
  Property inside_u("each-step-inside-u");
  Property one_move("consecutive-steps-differ-in-at-most-one-vertex");
  Property spare_free("spare-vertex-free-after-each-round");
  Property fixed("round-i-places-first-i-labels");
  Property ends("starts-at-g-ends-at-f");
  std::int64_t overlapping = 0;
  for (int size : sizes) {
    if (size < 3) throw InvalidInput("claim9 suite needs n >= 3");
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(derive_seed(seed, {static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(t)}));
      const auto inst = random_claim9_instance(size, rng);
      const auto seq = claim9_sequence(inst.f, inst.g, inst.m, inst.n, inst.a);
      const auto& h = seq.steps;
      const std::size_t r = seq.labels.size();
      auto payload = [&] {
        return nlohmann::json{{"n", size}, {"trial", t}, {"f", io::partial_to_json(inst.f)},
                              {"g", io::partial_to_json(inst.g)}, {"M", inst.m}, {"N", inst.n}, {"a", inst.a}};
      };
      bool overlap = false;
      for (Vertex v : inst.m) overlap = overlap || (inst.g.uses(inst.f.image(v)) && inst.f.image(v) != inst.g.image(v));
      overlapping += overlap ? 1 : 0;

      ends.check(h.size() == 3 * r + 1 && h.front() == inst.g && h.back() == inst.f, payload);
      for (std::size_t k = 0; k < h.size(); ++k) {
        // Injectivity and U-containment, recomputed from the raw map.
        std::vector<char> seen(static_cast<std::size_t>(size), 0);
        bool inj = true;
        bool in_u = true;
        for (Vertex v : inst.m) {
          const Vertex x = h[k].image(v);
          if (x < 0) {
            inj = false;
            continue;
          }
          inj = inj && !seen[x];
          seen[x] = 1;
          in_u = in_u && std::binary_search(inst.u.begin(), inst.u.end(), x);
        }
        injective.check(inj && h[k].domain() == inst.m, payload);
        inside_u.check(in_u, payload);
        if (k > 0) {
          int moved = 0;
          for (Vertex v : inst.m) moved += h[k].image(v) != h[k - 1].image(v) ? 1 : 0;
          one_move.check(moved <= 1, payload);
        }
      }
      for (std::size_t i = 1; i <= r; ++i) {
        const auto& h3i = h[3 * i];
        if (i < r) spare_free.check(!h3i.uses(inst.a), payload);
        bool placed = true;
        for (std::size_t j = 1; j <= i; ++j) placed = placed && h3i.image(seq.labels[j - 1]) == inst.f.image(seq.labels[j - 1]);
        fixed.check(placed, payload);
      }
    }
  }
  ends.details()["instances_with_overlapping_images"] = overlapping;
  return {injective.take(), inside_u.take(), one_move.take(), spare_free.take(), fixed.take(), ends.take()};
}

// --- bounds ------------------------------------------------------------------

/// Minimum over an eps grid of max(1 + 2/eps, 2 + (xi n + 2 eps n)_+).
double grid_infimum(int n, double xi, double step) {
  double best = std::numeric_limits<double>::infinity();
  const double lo = 1.0 / n;
  const double hi = 0.125;
  const auto count = static_cast<long>(std::floor((hi - lo) / step));
  for (long k = 0; k <= count + 1; ++k) {
    const double eps = std::min(lo + static_cast<double>(k) * step, hi);
    const double value = std::max(1.0 + 2.0 / eps, 2.0 + std::max(xi * n + 2.0 * eps * n, 0.0));
    best = std::min(best, value);
  }
  return best;
}

std::vector<PropertyResult> bounds(const std::vector<int>& sizes, int trials, std::uint64_t) {
  constexpr double kStep = 1e-4;
  Property grid("phi-matches-grid-infimum");
  Property range("epsilon-star-in-range");
  Property crossing("branches-cross-at-epsilon-star");
  double worst_gap = 0.0;
  for (int n : sizes) {
    if (n < 32) throw InvalidInput("bounds suite needs n >= 32");
    const double lo = -0.25 + 16.0 / n;
    for (int t = 0; t < trials; ++t) {
      const double xi = trials == 1 ? lo : lo + (0.25 - lo) * t / (trials - 1);
      const double p = phi(n, xi);
      const double e = epsilon_star(n, xi);
      const double g = grid_infimum(n, xi, kStep);
      // Moving eps by one grid step changes either branch by at most this.
      const double tolerance = kStep * std::max(2.0 / (e * e), 2.0 * n) + 1e-9;
      worst_gap = std::max(worst_gap, g - p);
      auto payload = [&] { return nlohmann::json{{"n", n}, {"xi", xi}, {"phi", p}, {"grid", g}, {"eps_star", e}}; };
      grid.check(g >= p - 1e-9 && g - p <= tolerance, payload);
      range.check(e >= 1.0 / n - 1e-12 && e <= 0.125 + 1e-12, payload);
      crossing.check(std::abs((2.0 / e + 1.0) - (2.0 + xi * n + 2.0 * e * n)) <= 1e-9, payload);
    }
  }
  grid.details()["worst_gap"] = worst_gap;

  Property theorem2("theorem3-below-theorem2");
  Property sqrt_ineq("sqrt-term-below-n-over-8-plus-16");
  for (int n = 32; n <= 10000; n = n < 256 ? n + 1 : n + 97) {
    for (int delta = 1; 2 * delta < n; delta += (n < 256 ? 1 : 7)) {
      const double t3 = theorem3_bound(n, delta);
      theorem2.check(t3 <= theorem2_bound(delta).to_double() + 1e-9,
                     [&] { return nlohmann::json{{"n", n}, {"delta", delta}, {"theorem3", t3}}; });
    }
    for (int k = -100; k <= 100; ++k) {
      const double x = 0.25 * n * k / 100.0;
      const double lhs = std::sqrt(x * x / 4.0 + 4.0 * n);
      sqrt_ineq.check(lhs <= n / 8.0 + 16.0 + 1e-9, [&] { return nlohmann::json{{"n", n}, {"x", x}}; });
    }
  }
  return {grid.take(), range.take(), crossing.take(), theorem2.take(), sqrt_ineq.take()};
}

// --- c0-star -----------------------------------------------------------------

std::vector<PropertyResult> c0_star(const std::vector<int>& sizes) {
  Property balanced("c0-balanced");
  Property every_centre("every-centre-imbalance");
  Property optimum("oracle-star-minimum");
  for (int n : sizes) {
    const auto g = c0_colouring(n);
    const int expected = (n - 2) / 2;
    balanced.check(is_balanced(g), [&] { return nlohmann::json{{"n", n}}; });
    for (Vertex x = 0; x < n; ++x) {
      every_centre.check(std::abs(g.signed_degree(x)) == expected,
                         [&] { return nlohmann::json{{"n", n}, {"centre", x}, {"signed_degree", g.signed_degree(x)}}; });
    }
    const auto star = make_forest({ForestKind::Star, n, 0, 0});
    const auto exact = exact_min_imbalance(star, g, /*allow_large=*/true);
    optimum.check(exact.value == expected && exact.value == c0_star_imbalance(n),
                  [&] { return nlohmann::json{{"n", n}, {"oracle", exact.value}, {"expected", expected}}; });
  }
  return {balanced.take(), every_centre.take(), optimum.take()};
}

// --- perturbed ---------------------------------------------------------------

std::vector<PropertyResult> perturbed(const std::vector<int>& sizes) {
  const Rational eps(1, 10);
  const double e = eps.to_double();
  Property density("red-density-within-eps");
  Property closed_form("red-count-matches-rule");
  Property separated("degrees-separated");
  Property star("star-imbalance-at-every-centre");
  for (int n : sizes) {
    const auto params = make_perturbed_params(n, eps);
    const auto g = perturbed_colouring(params);
    const std::int64_t x = params.d.num();
    const std::int64_t y = params.d.den();

    std::int64_t cross = 0;
    for (std::int64_t i = 1; i <= params.part_a; ++i) {
      for (std::int64_t j = 1; j <= params.part_b; ++j) cross += ((i + j - 1) % y + 1) <= x ? 1 : 0;
    }
    const std::int64_t expected_red = static_cast<std::int64_t>(params.part_b) * (params.part_b - 1) / 2 + cross;
    closed_form.check(g.red_edge_count() == expected_red,
                      [&] { return nlohmann::json{{"n", n}, {"red", g.red_edge_count()}, {"expected", expected_red}}; });

    const double d_r = static_cast<double>(g.red_edge_count()) / static_cast<double>(g.edge_count());
    density.check(d_r >= 0.5 - e && d_r <= 0.5 + e, [&] { return nlohmann::json{{"n", n}, {"density", d_r}}; });
    density.details()["density_n" + std::to_string(n)] = d_r;

    constexpr double kSlack = 4.0;
    double worst_star = std::numeric_limits<double>::infinity();
    for (Vertex v = 0; v < n; ++v) {
      const double red = g.red_degree(v);
      separated.check(red >= (0.75 + e * e / 2) * n - kSlack || red <= (0.25 - e * e / 2) * n + kSlack,
                      [&] { return nlohmann::json{{"n", n}, {"vertex", v}, {"red_degree", red}}; });
      const double imbalance = std::abs(g.signed_degree(v));
      worst_star = std::min(worst_star, imbalance);
      star.check(imbalance >= (0.5 + e * e) * n - kSlack,
                 [&] { return nlohmann::json{{"n", n}, {"centre", v}, {"imbalance", imbalance}}; });
    }
    star.details()["min_imbalance_n" + std::to_string(n)] = worst_star;
    star.details()["d"] = params.d.str();
  }
  return {density.take(), closed_form.take(), separated.take(), star.take()};
}

// --- expectation-2.1 ---------------------------------------------------------

std::vector<PropertyResult> expectation21(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  Property mean_bound("mean-abs-sum-within-half-delta-plus-4");
  for (int n : sizes) {
    if (n < 17 || (n % 4 != 0 && n % 4 != 1)) {
      throw InvalidInput("expectation-2.1 needs n >= 17 with n = 0 or 1 (mod 4)");
    }
    // Broom: centre degree 3n/4, second degree at most 2, so Delta' < Delta / 2.
    const Forest forest = make_forest({ForestKind::Broom, n, 3 * n / 4, 0});
    const auto g = random_balanced_colouring(n, derive_seed(seed, {static_cast<std::uint64_t>(n)}));
    const auto order = forest.vertices_by_degree();
    const int delta = forest.max_degree();
    const auto hosts = r_balanced_vertices(g, (n + 3) / 4 - 1);
    if (hosts.empty()) throw std::logic_error("balanced colouring without an (n/4 - 1)-balanced vertex");
    const Vertex x = hosts.front();

    PartialEmbedding anchor(n, n);
    anchor.assign(order[0], x);
    std::mt19937_64 rng(derive_seed(seed, {static_cast<std::uint64_t>(n), 1}));
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    double sum_signed = 0.0;
    for (int t = 0; t < trials; ++t) {
      const double s = random_extension(forest, g, &anchor, rng).sum();
      sum_abs += std::abs(s);
      sum_sq += s * s;
      sum_signed += s;
    }
    const double mean = sum_abs / trials;
    const double variance = std::max(0.0, sum_sq / trials - mean * mean) * trials / std::max(1, trials - 1);
    const double se = std::sqrt(variance / trials);
    const double limit = 0.5 * delta + 4.0 + 3.0 * se;
    mean_bound.check(mean <= limit, [&] {
      return nlohmann::json{{"n", n}, {"mean_abs", mean}, {"limit", limit}, {"anchor", x}};
    });
    const std::string key = "n" + std::to_string(n);
    mean_bound.details()[key] = {{"delta", delta}, {"anchor", x}, {"mean_abs_sum", mean}, {"mean_sum", sum_signed / trials},
                                 {"std_error", se}, {"limit", limit}};
  }
  return {mean_bound.take()};
}

struct Defaults {
  std::vector<int> sizes;
  int trials;
};

Defaults defaults_for(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::BalancedVertices:
      return {{8, 9, 16, 25}, 100};
    case VerifySuite::Interpolation:
      return {{8, 9, 12, 16}, 125};
    case VerifySuite::Claim9:
      return {{7, 10, 12}, 100};
    case VerifySuite::Bounds:
      return {{100, 1000}, 100};
    case VerifySuite::C0Star:
      return {{8, 12, 16}, 1};
    case VerifySuite::Perturbed:
      return {{2000}, 1};
    case VerifySuite::Expectation21:
      return {{64}, 10000};
  }
  return {{}, 1};
}

}  // namespace

std::string_view to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::BalancedVertices:
      return "balanced-vertices";
    case VerifySuite::Interpolation:
      return "interpolation";
    case VerifySuite::Claim9:
      return "claim9";
    case VerifySuite::Bounds:
      return "bounds";
    case VerifySuite::C0Star:
      return "c0-star";
    case VerifySuite::Perturbed:
      return "perturbed";
    case VerifySuite::Expectation21:
      return "expectation-2.1";
  }
  return "unknown";
}

const std::vector<VerifySuite>& all_verify_suites() {
  static const std::vector<VerifySuite> suites{VerifySuite::BalancedVertices, VerifySuite::Interpolation,
                                               VerifySuite::Claim9,           VerifySuite::Bounds,
                                               VerifySuite::C0Star,           VerifySuite::Perturbed,
                                               VerifySuite::Expectation21};
  return suites;
}

VerifySuite parse_verify_suite(std::string_view name) {
  for (VerifySuite s : all_verify_suites()) {
    if (to_string(s) == name) return s;
  }
  throw InvalidInput("unknown verify suite '" + std::string(name) + "'");
}

void VerifySuiteSpec::validate() const {
  if (trials < 0) throw InvalidInput("trial count must be positive");
  for (int n : sizes) {
    if (n < 1) throw InvalidInput("sizes must be positive");
  }
  if (suite == VerifySuite::C0Star) {
    for (int n : sizes) {
      if (n % 4 != 0) throw InvalidInput("c0-star needs n divisible by 4");
    }
  }
}

bool VerifyReport::passed() const {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    props.push_back({{"name", p.name},
                     {"passed", p.passed()},
                     {"checked", p.checked},
                     {"violations", p.violations},
                     {"counterexamples", p.counterexamples},
                     {"details", p.details}});
  }
  return {{"suite", std::string(to_string(suite))}, {"passed", passed()}, {"properties", props}};
}

VerifyReport run_verify(const VerifySuiteSpec& spec) {
  spec.validate();
  const Defaults defaults = defaults_for(spec.suite);
  const std::vector<int>& sizes = spec.sizes.empty() ? defaults.sizes : spec.sizes;
  const int trials = spec.trials > 0 ? spec.trials : defaults.trials;

  VerifyReport report;
  report.suite = spec.suite;
  switch (spec.suite) {
    case VerifySuite::BalancedVertices:
      report.properties = balanced_vertices(sizes, trials, spec.seed);
      break;
    case VerifySuite::Interpolation:
      report.properties = interpolation(sizes, trials, spec.seed);
      break;
    case VerifySuite::Claim9:
      report.properties = claim9(sizes, trials, spec.seed);
      break;
    case VerifySuite::Bounds:
      report.properties = bounds(sizes, trials, spec.seed);
      break;
    case VerifySuite::C0Star:
      report.properties = c0_star(sizes);
      break;
    case VerifySuite::Perturbed:
      report.properties = perturbed(sizes);
      break;
    case VerifySuite::Expectation21:
      report.properties = expectation21(sizes, trials, spec.seed);
      break;
  }
  return report;
}

}  // namespace balforest::tools
