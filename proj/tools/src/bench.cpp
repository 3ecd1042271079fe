#include "balforest/tools/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "balforest/errors.hpp"
#include "balforest/solver.hpp"
#include "seeding.hpp"

namespace balforest::tools {
namespace {

struct Cell {
  int n;
  ForestKind family;
  std::uint64_t seed;
};

ColouredCompleteGraph bench_colouring(int n, std::uint64_t seed) {
  if (n % 4 == 0 || n % 4 == 1) return random_balanced_colouring(n, seed);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return random_colouring_with_red_count(n, pairs / 2, seed);
}

BenchRow run_cell(const Cell& cell, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const Forest forest = bench_forest(cell.family, cell.n, derive_seed(cell.seed, {1}));
  const auto g = bench_colouring(cell.n, derive_seed(cell.seed, {2}));
  SolverConfig cfg;
  cfg.seed = derive_seed(cell.seed, {3});
  const SolveResult result = solve(forest, g, cfg);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return BenchRow{
      .n = cell.n,
      .max_degree = forest.max_degree(),
      .family = cell.family,
      .seed = cell.seed,
      .achieved = result.achieved,
      .bound = result.theorem_bound.theorem3,
      .certified_bound = result.certified_value,
      .millis = timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0,
  };
}

}  // namespace

Forest bench_forest(ForestKind family, int n, std::uint64_t seed) {
  switch (family) {
    case ForestKind::Random:
      return make_forest({family, n, std::max(2, n / 8), seed});
    case ForestKind::Broom:
      return make_forest({family, n, std::max(2, 3 * n / 4), seed});
    default:
      return make_forest({family, n, 0, seed});
  }
}

std::vector<BenchRow> run_bench(const BenchGrid& grid) {
  if (grid.seeds_per_cell <= 0 || grid.threads <= 0) throw InvalidInput("bench needs positive seed and thread counts");
  std::vector<Cell> cells;
  for (int n : grid.sizes) {
    if (n < 3) throw InvalidInput("bench sizes must be at least 3");
    for (ForestKind family : grid.families) {
      for (int k = 0; k < grid.seeds_per_cell; ++k) cells.push_back({n, family, grid.seed + static_cast<std::uint64_t>(k)});
    }
  }

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = run_cell(cells[i], grid.timing);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::min<int>(grid.threads, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tuple(a.n, static_cast<int>(a.family), a.seed) < std::tuple(b.n, static_cast<int>(b.family), b.seed);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,delta,family,seed,achieved,bound,certified_bound,millis\n";
  char bound[32];
  for (const auto& row : rows) {
    std::snprintf(bound, sizeof bound, "%.6f", row.bound);
    out << row.n << ',' << row.max_degree << ',' << to_string(row.family) << ',' << row.seed << ',' << row.achieved
        << ',' << bound << ',';
    if (row.certified_bound) out << *row.certified_bound;
    out << ',' << row.millis << '\n';
  }
}

}  // namespace balforest::tools
