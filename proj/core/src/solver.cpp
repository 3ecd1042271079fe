#include "balforest/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "balforest/errors.hpp"
#include "balforest/oracle.hpp"

namespace balforest {
namespace {

/// Independent engine seed for stream `stream` of a run seeded with `seed`.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

bool better(const Embedding& a, const Embedding& b) {
  if (std::abs(a.sum()) != std::abs(b.sum())) return std::abs(a.sum()) < std::abs(b.sum());
  return a < b;
}

/// Keeps the best embedding seen and the strongest certificate that fired.
/// Both reductions are order-independent.
class Tracker {
 public:
  void offer(const Embedding& e) {
    if (!best_ || better(e, *best_)) best_ = e;
  }
  void certify(Certificate kind, int value, std::optional<InterpolationTrace> trace = std::nullopt) {
    if (!value_ || value < *value_) {
      kind_ = kind;
      value_ = value;
      trace_ = std::move(trace);
    }
  }
  bool certified() const { return value_.has_value(); }
  const std::optional<Embedding>& best() const { return best_; }
  Certificate kind() const { return kind_; }
  std::optional<int> value() const { return value_; }
  const std::optional<InterpolationTrace>& trace() const { return trace_; }

 private:
  std::optional<Embedding> best_;
  Certificate kind_ = Certificate::HeuristicOnly;
  std::optional<int> value_;
  std::optional<InterpolationTrace> trace_;
};

class Search {
 public:
  Search(const Forest& forest, const ColouredCompleteGraph& g, const SolverConfig& cfg)
      : forest_(forest), g_(g), cfg_(cfg), report_(make_bound_report(g.n(), forest.max_degree())) {}

  SolveResult run() {
    const int n = g_.n();
    if (forest_.edge_count() == 0) {
      const Embedding e = Embedding::identity(forest_, g_);
      tracker_.offer(e);
      tracker_.certify(Certificate::ExactOptimum, 0);
      return finish();
    }
    if (cfg_.strategy == Strategy::Auto && n <= cfg_.exact_threshold) {
      MinImbalance exact = exact_min_imbalance(forest_, g_, /*allow_large=*/true);
      tracker_.offer(exact.witness);
      tracker_.certify(Certificate::ExactOptimum, exact.value);
      return finish();
    }

    switch (cfg_.strategy) {
      case Strategy::LocalSearch: {
        std::mt19937_64 rng(sub_seed(cfg_.seed, 0));
        tracker_.offer(random_extension(forest_, g_, nullptr, rng));
        ++stats_.samples;
        break;
      }
      case Strategy::InterpolateOnly:
        attempt_pair(nullptr, 0, Certificate::Generic);
        return finish();
      case Strategy::GreedyStar:
        if (!try_forced_greedy()) dispatch();
        break;
      case Strategy::Auto:
        dispatch();
        break;
    }
    polish();
    return finish();
  }

 private:
  bool within_theorem() const {
    return tracker_.best() && within_bound(std::abs(tracker_.best()->sum()), report_.theorem3);
  }

  void dispatch() {
    const int n = g_.n();
    const int max_degree = forest_.max_degree();
    if (2 * max_degree >= n) {
      high_degree_branch();
    } else if (max_degree > 15) {
      anchored_large_degree_branch();
    } else {
      attempt_pair(nullptr, 0, Certificate::Generic);
    }
    if (!tracker_.certified()) attempt_pair(nullptr, 1, Certificate::Generic);
  }

  /// Samples extensions of the anchor; on success interpolates and records
  /// the delta_I + min_degree certificate.
  bool attempt_pair(const PartialEmbedding* anchor, std::uint64_t stream, Certificate kind) {
    std::mt19937_64 rng(sub_seed(cfg_.seed, stream));
    SignSearchOutcome outcome = try_find_signed_pair(forest_, g_, anchor, cfg_.sample_budget, rng);
    stats_.samples += outcome.samples;
    if (outcome.best) tracker_.offer(*outcome.best);
    if (!outcome.pair) return false;
    InterpolationResult result = interpolate(*outcome.pair, forest_, g_);
    tracker_.offer(result.embedding);
    tracker_.certify(kind, outcome.pair->delta_i + forest_.min_degree(), std::move(result.trace));
    return true;
  }

  /// Maximum degree at least n/2: anchor the top vertex at a balanced host
  /// vertex and, when the second degree is also large, the runner-up too.
  void high_degree_branch() {
    const int n = g_.n();
    const auto order = forest_.vertices_by_degree();
    const Vertex v1 = order[0];
    const Vertex v2 = order[1];
    const bool two_centres = 2 * forest_.degree(v2) >= forest_.degree(v1);
    const auto hosts = balanced_hosts();

    for (std::size_t k = 0; k < hosts.size() && static_cast<int>(k) < cfg_.max_restarts; ++k) {
      const Vertex x = hosts[k];
      ++stats_.restarts;
      PartialEmbedding anchor(n, n);
      anchor.assign(v1, x);
      if (two_centres) {
        const bool red_heavy = 2 * g_.red_degree(x) >= n - 1;
        auto red_in_orientation = [&](Vertex y) { return red_heavy ? g_.red_degree(y) : g_.blue_degree(y); };
        if (const Vertex poor = first_vertex(x, [&](Vertex y) { return 4 * red_in_orientation(y) < n; });
            poor >= 0 && run_greedy(x, poor, red_heavy, k)) {
          return;
        }
        if (const Vertex y = first_vertex(x, [&](Vertex y) { return 2 * red_in_orientation(y) <= n - 1; }); y >= 0) {
          anchor.assign(v2, y);
        }
      }
      if (attempt_pair(&anchor, 100 + k, Certificate::Interpolation)) return;
      if (within_theorem()) return;
    }
  }

  /// 15 < Delta < n/2: pin every vertex of degree >= 2/eps inside the
  /// (1/4 - eps) n-balanced host vertices, so the disagreement set of any
  /// pair found only holds vertices of degree below 2/eps.
  void anchored_large_degree_branch() {
    const int n = g_.n();
    double eps = 0.0;
    if (cfg_.fixed_epsilon) {
      eps = *cfg_.fixed_epsilon;
    } else {
      eps = report_.epsilon_star.value_or(0.125);
      eps = std::clamp(eps, 1.0 / n, 0.125);
    }
    const auto large = large_degree_set(forest_, eps);
    const int r = static_cast<int>(std::ceil((0.25 - eps) * n - 1e-9));
    auto hosts = r_balanced_vertices(g_, std::max(r, 0));
    if (hosts.size() < large.size()) return;

    for (int k = 0; k < cfg_.max_restarts; ++k) {
      ++stats_.restarts;
      std::mt19937_64 rng(sub_seed(cfg_.seed, 1000 + static_cast<std::uint64_t>(k)));
      std::shuffle(hosts.begin(), hosts.end(), rng);
      PartialEmbedding anchor(n, n);
      for (std::size_t i = 0; i < large.size(); ++i) anchor.assign(large[i], hosts[i]);
      if (attempt_pair(&anchor, 2000 + static_cast<std::uint64_t>(k), Certificate::Interpolation)) return;
      if (large.empty() || within_theorem()) return;
    }
  }

  bool try_forced_greedy() {
    const int n = g_.n();
    const auto order = forest_.vertices_by_degree();
    if (n < 8 || 2 * forest_.degree(order[0]) < n || 4 * forest_.degree(order[1]) < n) return false;
    const auto hosts = balanced_hosts();
    for (std::size_t k = 0; k < hosts.size() && static_cast<int>(k) < cfg_.max_restarts; ++k) {
      const Vertex x = hosts[k];
      const bool red_heavy = 2 * g_.red_degree(x) >= n - 1;
      const Vertex poor = first_vertex(x, [&](Vertex y) {
        return 4 * (red_heavy ? g_.red_degree(y) : g_.blue_degree(y)) < n;
      });
      ++stats_.restarts;
      if (poor >= 0 && run_greedy(x, poor, red_heavy, k)) return true;
    }
    return false;
  }

  bool run_greedy(Vertex x, Vertex y, bool red_heavy, std::size_t stream) {
    const int n = g_.n();
    const auto order = forest_.vertices_by_degree();
    if (n < 8 || 4 * forest_.degree(order[1]) < n) return false;
    try {
      const ColouredCompleteGraph& oriented = red_heavy ? g_ : negated();
      GreedyStarEmbedding greedy = greedy_star_balance(forest_, oriented, x, y, sub_seed(cfg_.seed, 3000 + stream));
      Embedding in_g(std::vector<Vertex>(greedy.embedding.map().begin(), greedy.embedding.map().end()), forest_, g_);
      tracker_.offer(in_g);
      tracker_.certify(Certificate::GreedyStar, greedy.guaranteed);
      return true;
    } catch (const PreconditionError&) {
      return false;
    }
  }

  const ColouredCompleteGraph& negated() {
    if (!negated_) negated_ = g_.negated();
    return *negated_;
  }

  /// (n/4 - 1)-balanced host vertices, or the single most balanced vertex if
  /// there are none.
  std::vector<Vertex> balanced_hosts() const {
    const int n = g_.n();
    const int r = (n + 3) / 4 - 1;
    auto hosts = r_balanced_vertices(g_, std::max(r, 0));
    if (hosts.empty()) {
      Vertex best = 0;
      for (Vertex v = 1; v < n; ++v) {
        if (std::min(g_.red_degree(v), g_.blue_degree(v)) > std::min(g_.red_degree(best), g_.blue_degree(best))) {
          best = v;
        }
      }
      hosts.push_back(best);
    }
    return hosts;
  }

  template <class Pred>
  Vertex first_vertex(Vertex skip, Pred&& pred) const {
    for (Vertex y = 0; y < g_.n(); ++y) {
      if (y != skip && pred(y)) return y;
    }
    return -1;
  }

  void polish() {
    if (!tracker_.best()) return;
    Embedding e = *tracker_.best();
    stats_.local_search_moves += local_search(e, forest_, g_, cfg_.local_search_budget);
    tracker_.offer(e);
  }

  SolveResult finish() {
    const Embedding& e = *tracker_.best();
    const int achieved = std::abs(e.sum());
    if (tracker_.value() && achieved > *tracker_.value()) {
      throw std::logic_error("solver returned an embedding above its own certificate");
    }
    return SolveResult{
        .embedding = e,
        .achieved = achieved,
        .certificate = tracker_.kind(),
        .certified_value = tracker_.value(),
        .theorem_bound = report_,
        .within_theorem = within_bound(achieved, report_.theorem3),
        .stats = stats_,
        .trace = tracker_.trace(),
    };
  }

  const Forest& forest_;
  const ColouredCompleteGraph& g_;
  const SolverConfig& cfg_;
  BoundReport report_;
  Tracker tracker_;
  SolveStats stats_;
  std::optional<ColouredCompleteGraph> negated_;
};

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto:
      return "auto";
    case Strategy::InterpolateOnly:
      return "interpolate-only";
    case Strategy::GreedyStar:
      return "greedy-star";
    case Strategy::LocalSearch:
      return "local-search";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::Auto, Strategy::InterpolateOnly, Strategy::GreedyStar, Strategy::LocalSearch}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidInput("unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::ExactOptimum:
      return "exact";
    case Certificate::Interpolation:
      return "interpolation";
    case Certificate::GreedyStar:
      return "greedy-star";
    case Certificate::Generic:
      return "generic";
    case Certificate::HeuristicOnly:
      return "heuristic-only";
  }
  return "unknown";
}

void SolverConfig::validate(int n) const {
  if (max_restarts <= 0 || sample_budget <= 0 || local_search_budget < 0) {
    throw InvalidInput("solver budgets must be positive");
  }
  if (fixed_epsilon && (*fixed_epsilon < 1.0 / n - 1e-12 || *fixed_epsilon > 0.125 + 1e-12)) {
    throw InvalidInput("fixed epsilon must lie in [1/n, 1/8]");
  }
}

Embedding random_extension(const Forest& forest, const ColouredCompleteGraph& g, const PartialEmbedding* anchor,
                           std::mt19937_64& rng) {
  const int n = g.n();
  std::vector<Vertex> map(static_cast<std::size_t>(n), PartialEmbedding::kUnassigned);
  std::vector<Vertex> free_hosts;
  free_hosts.reserve(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    if (!anchor || !anchor->uses(x)) free_hosts.push_back(x);
  }
  std::shuffle(free_hosts.begin(), free_hosts.end(), rng);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    map[v] = (anchor && anchor->contains(v)) ? anchor->image(v) : free_hosts[next++];
  }
  return Embedding(std::move(map), forest, g);
}

SignSearchOutcome try_find_signed_pair(const Forest& forest, const ColouredCompleteGraph& g,
                                       const PartialEmbedding* anchor, int budget, std::mt19937_64& rng) {
  if (budget <= 0) throw InvalidInput("sample budget must be positive");
  if (anchor && (anchor->forest_size() != forest.n() || anchor->host_size() != g.n())) {
    throw InvalidInput("anchor does not match the instance");
  }
  SignSearchOutcome outcome;
  std::optional<Embedding> negative;
  std::optional<Embedding> positive;
  for (int s = 0; s < budget; ++s) {
    Embedding e = random_extension(forest, g, anchor, rng);
    ++outcome.samples;
    if (!outcome.best || better(e, *outcome.best)) outcome.best = e;
    if (!negative && e.sum() <= 0) negative = e;
    if (!positive && e.sum() >= 0) positive = e;
    if (negative && positive) {
      outcome.pair = make_signed_pair(std::move(*negative), std::move(*positive), forest);
      break;
    }
  }
  return outcome;
}

SignedPair find_signed_pair(const Forest& forest, const ColouredCompleteGraph& g,
                            const std::optional<PartialEmbedding>& anchor, const SolverConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  SignSearchOutcome outcome =
      try_find_signed_pair(forest, g, anchor ? &*anchor : nullptr, cfg.sample_budget, rng);
  if (!outcome.pair) {
    throw SignSearchFailure("no embeddings of both signs among " + std::to_string(outcome.samples) + " samples");
  }
  return std::move(*outcome.pair);
}

std::vector<Vertex> large_degree_set(const Forest& forest, double eps) {
  const int n = forest.n();
  if (eps < 1.0 / n - 1e-12 || eps > 0.125 + 1e-12) {
    throw InvalidInput("large degree set needs 1/n <= eps <= 1/8");
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (forest.degree(v) * eps >= 2.0 - 1e-12) out.push_back(v);
  }
  if (static_cast<double>(out.size()) > eps * n + 1e-9) {
    throw std::logic_error("more than eps n vertices of degree >= 2/eps");
  }
  return out;
}

std::int64_t local_search(Embedding& f, const Forest& forest, const ColouredCompleteGraph& g, std::int64_t budget,
                          std::span<const char> frozen) {
  const int n = f.size();
  const int floor_value = forest.edge_count() % 2;
  auto is_frozen = [&](Vertex v) { return !frozen.empty() && frozen[static_cast<std::size_t>(v)] != 0; };
  std::int64_t evaluations = 0;
  bool improved = true;
  while (improved && std::abs(f.sum()) > floor_value) {
    improved = false;
    for (Vertex u = 0; u < n; ++u) {
      if (is_frozen(u)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (is_frozen(v)) continue;
        if (evaluations >= budget) return evaluations;
        const int delta = f.swap_delta(u, v, forest, g);
        ++evaluations;
        if (std::abs(f.sum() + delta) < std::abs(f.sum())) {
          f.swap(u, v, forest, g);
          improved = true;
          if (std::abs(f.sum()) <= floor_value) return evaluations;
        }
      }
    }
  }
  return evaluations;
}

GreedyStarEmbedding greedy_star_balance(const Forest& forest, const ColouredCompleteGraph& g, Vertex x, Vertex y,
                                        std::uint64_t seed) {
  const int n = g.n();
  if (forest.n() != n) throw InvalidInput("forest and colouring have different vertex counts");
  if (n < 8) throw PreconditionError("greedy star needs n >= 8");
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw PreconditionError("greedy star needs distinct x, y");
  const auto order = forest.vertices_by_degree();
  const Vertex v1 = order[0];
  const Vertex v2 = order[1];
  if (2 * forest.degree(v1) < n || 4 * forest.degree(v2) < n) {
    throw PreconditionError("greedy star needs deg(v1) >= n/2 and deg(v2) >= n/4");
  }
  const int r = (n + 3) / 4 - 1;
  if (std::min(g.red_degree(x), g.blue_degree(x)) < r || 2 * g.red_degree(x) < n - 1) {
    throw PreconditionError("greedy star needs x balanced with red degree >= (n-1)/2");
  }
  if (4 * g.red_degree(y) >= n) throw PreconditionError("greedy star needs red_degree(y) < n/4");

  const int red_count = 3 * n / 8;
  const int blue_count = n / 8 - 1;
  const int private_count = n / 4 - 1;

  std::vector<Vertex> around_v1;
  for (Vertex w : forest.neighbours(v1)) {
    if (w != v2) around_v1.push_back(w);
  }
  std::vector<Vertex> private_v2;
  for (Vertex w : forest.neighbours(v2)) {
    if (w != v1 && !forest.has_edge(v1, w)) private_v2.push_back(w);
  }
  if (static_cast<int>(around_v1.size()) < red_count + blue_count ||
      static_cast<int>(private_v2.size()) < private_count) {
    throw PreconditionError("greedy star: centres have too few neighbours");
  }

  GreedyStarEmbedding out{Embedding::identity(forest, g), {}, {}, {}, 0};
  out.x_red.assign(around_v1.begin(), around_v1.begin() + red_count);
  out.x_blue.assign(around_v1.begin() + red_count, around_v1.begin() + red_count + blue_count);
  out.y_blue.assign(private_v2.begin(), private_v2.begin() + private_count);

  PartialEmbedding placed(n, n);
  placed.assign(v1, x);
  placed.assign(v2, y);
  auto place_all = [&](const std::vector<Vertex>& vertices, Vertex centre, bool want_red) {
    std::size_t next = 0;
    for (Vertex target = 0; target < n && next < vertices.size(); ++target) {
      if (target == centre || placed.uses(target) || g.is_red(centre, target) != want_red) continue;
      placed.assign(vertices[next++], target);
    }
    if (next < vertices.size()) throw PreconditionError("greedy star: not enough host neighbours of the right colour");
  };
  place_all(out.x_red, x, true);
  place_all(out.x_blue, x, false);
  place_all(out.y_blue, y, false);

  std::vector<char> frozen(static_cast<std::size_t>(n), 0);
  for (Vertex v : placed.domain()) frozen[v] = 1;
  if (placed.size() != 2 + red_count + blue_count + private_count) {
    throw std::logic_error("greedy star: forced sets overlap");
  }

  std::mt19937_64 rng(seed);
  Embedding e = random_extension(forest, g, &placed, rng);
  local_search(e, forest, g, 200000, frozen);

  const int m = forest.edge_count();
  out.guaranteed = std::max(m - 2 * (blue_count + private_count), m - 2 * red_count);
  if (std::abs(e.sum()) > out.guaranteed) throw std::logic_error("greedy star embedding exceeds its guarantee");
  out.embedding = std::move(e);
  return out;
}

SolveResult solve(const Forest& forest, const ColouredCompleteGraph& g, const SolverConfig& cfg) {
  if (forest.n() != g.n()) throw InvalidInput("forest and colouring have different vertex counts");
  cfg.validate(g.n());
  return Search(forest, g, cfg).run();
}

}  // namespace balforest
