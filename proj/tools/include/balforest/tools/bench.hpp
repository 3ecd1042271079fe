#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "balforest/generators.hpp"

namespace balforest::tools {

struct BenchGrid {
  std::vector<int> sizes{16, 32, 48, 64};
  std::vector<ForestKind> families{ForestKind::Path, ForestKind::Star, ForestKind::Random};
  int seeds_per_cell = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Wall-clock column; off by default so reruns are byte-identical.
  bool timing = false;
};

struct BenchRow {
  int n = 0;
  int max_degree = 0;
  ForestKind family = ForestKind::Path;
  std::uint64_t seed = 0;
  int achieved = 0;
  double bound = 0.0;
  std::optional<int> certified_bound;
  std::int64_t millis = 0;
};

/// Forest used for a bench cell: random forests get degree cap max(2, n/8),
/// brooms a centre of degree 3n/4.
Forest bench_forest(ForestKind family, int n, std::uint64_t seed);

/// Runs solve on every cell and returns rows sorted by (n, family, seed).
std::vector<BenchRow> run_bench(const BenchGrid& grid);

/// Columns: n,delta,family,seed,achieved,bound,certified_bound,millis.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace balforest::tools
