#pragma once

// The identity suites run by `matschroed check`. Each suite reduces its
// residuals to one worst-case number compared against a tolerance.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matschroed/families.hpp"

namespace matschroed {

struct CheckConfig {
  FamilySpec spec;
  int n_max = 8;
  std::optional<int> quad_order;
  std::optional<double> tolerance;  // replaces every suite tolerance when set
  std::uint64_t seed = 42;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool passed() const { return value < tolerance; }
};

/// Seed from MATSCHROED_SEED, 42 when unset or unparsable.
std::uint64_t seed_from_env();

/// sum_{n <= top} C_n Phi~_n with C_n entries uniform in the unit square.
MatrixGaussian random_span_element(const FamilyContext& ctx, int top, std::mt19937_64& rng);

std::vector<CheckResult> run_checks(const CheckConfig& config);

/// One line per result: PASS/FAIL, name, value, tolerance, detail.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace matschroed
