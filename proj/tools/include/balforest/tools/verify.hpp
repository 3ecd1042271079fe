#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace balforest::tools {

enum class VerifySuite { BalancedVertices, Interpolation, Claim9, Bounds, C0Star, Perturbed, Expectation21 };

std::string_view to_string(VerifySuite suite);
/// Throws InvalidInput on an unknown name.
VerifySuite parse_verify_suite(std::string_view name);
const std::vector<VerifySuite>& all_verify_suites();

struct VerifySuiteSpec {
  VerifySuite suite = VerifySuite::BalancedVertices;
  /// Instance sizes; empty means the suite's defaults.
  std::vector<int> sizes;
  /// Trials per size; 0 means the suite's default.
  int trials = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PropertyResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  /// At most a handful of failing payloads.
  nlohmann::json counterexamples = nlohmann::json::array();
  /// Suite-specific measurements (means, extremes) for the report.
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return checked > 0 && violations == 0; }
};

struct VerifyReport {
  VerifySuite suite = VerifySuite::BalancedVertices;
  std::vector<PropertyResult> properties;

  bool passed() const;
  nlohmann::json to_json() const;
};

VerifyReport run_verify(const VerifySuiteSpec& spec);

}  // namespace balforest::tools
