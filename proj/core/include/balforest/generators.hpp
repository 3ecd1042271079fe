#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "balforest/colouring.hpp"
#include "balforest/forest.hpp"
#include "balforest/rational.hpp"

namespace balforest {

/// Uniform over balanced colourings: the edge list is shuffled with a seeded
/// engine and the first half is coloured red. Throws ParityError unless
/// n = 0 or 1 (mod 4).
ColouredCompleteGraph random_balanced_colouring(int n, std::uint64_t seed);

/// Uniform over colourings with exactly red_edges red edges.
ColouredCompleteGraph random_colouring_with_red_count(int n, std::int64_t red_edges, std::uint64_t seed);

/// The two-class colouring on u_1..u_{n/2} (indices 0..n/2-1) and
/// v_1..v_{n/2} (indices n/2..n-1): u_i u_j blue, v_i v_j red, u_i v_j blue
/// iff i + j is odd. Every spanning star has sum of absolute value n/2 - 1.
/// Requires n divisible by 4.
ColouredCompleteGraph c0_colouring(int n);

/// Open window of admissible density ratios d for a perturbation size eps:
/// the intersection of the degree-separation interval and the density interval.
struct DensityWindow {
  Rational degree_low;
  Rational degree_high;
  Rational density_low;
  Rational density_high;
  Rational low() const { return degree_low < density_low ? density_low : degree_low; }
  Rational high() const { return degree_high < density_high ? degree_high : density_high; }
  bool contains(const Rational& d) const { return low() < d && d < high(); }
};

DensityWindow density_window(const Rational& eps);

/// Smallest-denominator rational strictly inside density_window(eps), ties to
/// the smaller numerator. Requires 0 < eps < 1/2.
Rational choose_density_ratio(const Rational& eps);

/// Parameters of the perturbed two-class colouring. Part A holds vertices
/// 0..part_a-1, part B the rest.
struct PerturbedParams {
  int n = 0;
  Rational epsilon;
  Rational d;
  int part_a = 0;
  int part_b = 0;
};

/// Fills in part sizes (|A| = round((1/2 - eps) n)) and, if d is absent,
/// choose_density_ratio(eps). Throws InvalidInput on inadmissible values.
PerturbedParams make_perturbed_params(int n, const Rational& eps, std::optional<Rational> d = std::nullopt);

/// A blue inside, B red inside; a_i b_j (1-based within each part) is red iff
/// the representative of i + j modulo y in {1..y} is at most x, where d = x/y.
ColouredCompleteGraph perturbed_colouring(const PerturbedParams& params);

enum class ForestKind { Star, Path, Random, Broom };

std::string_view to_string(ForestKind kind);
ForestKind parse_forest_kind(std::string_view name);

struct ForestSpec {
  ForestKind kind = ForestKind::Path;
  int n = 0;
  /// Degree cap for Random, centre degree for Broom; ignored otherwise.
  int max_degree = 0;
  std::uint64_t seed = 0;
};

/// star: centre 0 joined to every other vertex.
/// path: 0-1-...-(n-1).
/// broom: centre 0 joined to 1..D, with a path D-(D+1)-...-(n-1) hanging off D.
/// random: vertices attach one at a time to a uniformly chosen earlier vertex
///   below the degree cap, then labels are shuffled.
Forest make_forest(const ForestSpec& spec);

/// Two adjacent centres 0 and 1; vertex 0 gets first_degree neighbours in
/// total and vertex 1 takes all remaining vertices.
Forest double_star(int n, int first_degree);

}  // namespace balforest
