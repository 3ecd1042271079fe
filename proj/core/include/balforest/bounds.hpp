#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "balforest/rational.hpp"

namespace balforest {

/// Delta / 2 + 18, exact.
Rational theorem2_bound(int max_degree);

/// Delta / 2 + 9 when Delta >= n/2 or Delta <= 15, otherwise
/// (Delta - n/4 + 3)/2 + sqrt((Delta - n/4 + 1)^2 / 4 + 4n).
double theorem3_bound(int n, int max_degree);

/// (Delta - n/4) / n.
double normalized_offset(int n, int max_degree);

/// Closed form of min over eps in [1/n, 1/8] of
/// max(1 + 2/eps, 2 + (xi n + 2 eps n)_+). Requires n >= 32 and
/// xi in [-1/4 + 16/n, 1/4].
double phi(int n, double xi);
/// The eps at which the two branches of phi cross; lies in [1/n, 1/8].
double epsilon_star(int n, double xi);

/// max(1 + 2/eps, 2 + (Delta - (1/4 - 2 eps) n)_+). Requires n >= 32,
/// Delta <= n/2 and 1/n <= eps <= 1/8.
double lemma8_bound(int n, int max_degree, double eps);

/// 4n / (eta n - 2). Requires 15 <= Delta <= (1/4 - eta) n, 0 < eta < 1/4
/// and eta n > 2.
double corollary4_bound(int n, int max_degree, double eta);

/// (n - 2) / 2: the absolute sum of every spanning star in c0(n).
int c0_star_imbalance(int n);

/// Smallest double strictly above `bound`, so that an integer compared
/// against it with <= can never fail because of rounding in the bound.
double round_up(double bound);
bool within_bound(int achieved, double bound);

struct BoundReport {
  int n = 0;
  int max_degree = 0;
  Rational theorem2;
  double theorem3 = 0.0;
  double xi = 0.0;
  std::optional<double> lemma10_phi;
  std::optional<double> epsilon_star;
  std::optional<double> corollary4;
};

/// Evaluates every bound that is defined at (n, Delta); corollary4 needs eta.
BoundReport make_bound_report(int n, int max_degree, std::optional<double> eta = std::nullopt);

nlohmann::json to_json(const BoundReport& report);

}  // namespace balforest
