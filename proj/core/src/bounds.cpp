#include "balforest/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "balforest/errors.hpp"

namespace balforest {
namespace {

constexpr double kDomainSlack = 1e-12;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

bool xi_in_domain(int n, double xi) {
  return n >= 32 && xi >= -0.25 + 16.0 / n - kDomainSlack && xi <= 0.25 + kDomainSlack;
}

}  // namespace

Rational theorem2_bound(int max_degree) {
  require(max_degree >= 0, "maximum degree must be non-negative");
  return Rational(max_degree, 2) + Rational(18);
}

double theorem3_bound(int n, int max_degree) {
  require(n >= 1 && max_degree >= 0 && max_degree <= std::max(n - 1, 0),
          "theorem3_bound needs 0 <= Delta <= n - 1");
  if (2 * max_degree >= n || max_degree <= 15) return 0.5 * max_degree + 9.0;
  const double offset = max_degree - 0.25 * n;
  return 0.5 * (offset + 3.0) + std::sqrt(0.25 * (offset + 1.0) * (offset + 1.0) + 4.0 * n);
}

double normalized_offset(int n, int max_degree) { return (max_degree - 0.25 * n) / n; }

double phi(int n, double xi) {
  require(xi_in_domain(n, xi), "phi needs n >= 32 and xi in [-1/4 + 16/n, 1/4]");
  const double xn = xi * n;
  return (3.0 + xn) / 2.0 + std::sqrt((1.0 + xn) * (1.0 + xn) + 16.0 * n) / 2.0;
}

double epsilon_star(int n, double xi) {
  require(xi_in_domain(n, xi), "epsilon* needs n >= 32 and xi in [-1/4 + 16/n, 1/4]");
  const double xn = xi * n;
  const double eps = (-1.0 - xn + std::sqrt((1.0 + xn) * (1.0 + xn) + 16.0 * n)) / (4.0 * n);
  if (eps < 1.0 / n - kDomainSlack || eps > 0.125 + kDomainSlack) {
    throw std::logic_error("epsilon* = " + std::to_string(eps) + " left [1/n, 1/8]");
  }
  return eps;
}

double lemma8_bound(int n, int max_degree, double eps) {
  require(n >= 32, "lemma8_bound needs n >= 32");
  require(max_degree >= 0 && 2 * max_degree <= n, "lemma8_bound needs Delta <= n/2");
  require(eps >= 1.0 / n - kDomainSlack && eps <= 0.125 + kDomainSlack, "lemma8_bound needs 1/n <= eps <= 1/8");
  const double excess = max_degree - (0.25 - 2.0 * eps) * n;
  return std::max(1.0 + 2.0 / eps, 2.0 + std::max(excess, 0.0));
}

double corollary4_bound(int n, int max_degree, double eta) {
  require(eta > 0.0 && eta < 0.25, "corollary4_bound needs 0 < eta < 1/4");
  require(eta * n > 2.0, "corollary4_bound needs eta n > 2");
  require(max_degree >= 15 && max_degree <= (0.25 - eta) * n + kDomainSlack,
          "corollary4_bound needs 15 <= Delta <= (1/4 - eta) n");
  return 4.0 * n / (eta * n - 2.0);
}

int c0_star_imbalance(int n) {
  require(n >= 4 && n % 4 == 0, "c0 needs n divisible by 4");
  return (n - 2) / 2;
}

double round_up(double bound) { return std::nextafter(bound, std::numeric_limits<double>::infinity()); }

bool within_bound(int achieved, double bound) { return static_cast<double>(achieved) <= round_up(bound); }

BoundReport make_bound_report(int n, int max_degree, std::optional<double> eta) {
  BoundReport report;
  report.n = n;
  report.max_degree = max_degree;
  report.theorem2 = theorem2_bound(max_degree);
  report.theorem3 = theorem3_bound(n, max_degree);
  report.xi = normalized_offset(n, max_degree);
  if (xi_in_domain(n, report.xi)) {
    report.lemma10_phi = phi(n, report.xi);
    report.epsilon_star = epsilon_star(n, report.xi);
  }
  if (eta && *eta > 0.0 && *eta < 0.25 && *eta * n > 2.0 && max_degree >= 15 &&
      max_degree <= (0.25 - *eta) * n + kDomainSlack) {
    report.corollary4 = corollary4_bound(n, max_degree, *eta);
  }
  return report;
}

nlohmann::json to_json(const BoundReport& report) {
  auto optional_number = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {
      {"n", report.n},
      {"delta", report.max_degree},
      {"theorem2", report.theorem2.to_double()},
      {"theorem2_exact", report.theorem2.str()},
      {"theorem3", report.theorem3},
      {"xi", report.xi},
      {"lemma10_phi", optional_number(report.lemma10_phi)},
      {"epsilon_star", optional_number(report.epsilon_star)},
      {"corollary4", optional_number(report.corollary4)},
  };
}

}  // namespace balforest
