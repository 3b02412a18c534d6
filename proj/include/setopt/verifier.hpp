#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setopt/vectorizer.hpp"

namespace setopt {

struct CheckResult {
  std::string name;
  std::string instance_id;
  bool passed = true;
  /// Hard checks must hold exactly; soft ones are reported findings.
  bool hard = true;
  std::string detail;
  /// Instance plus parameters, present on failure.
  nlohmann::json counterexample;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  /// convex experiment: agreeing labels / compared labels (1 when none).
  double agreement = 1.0;
  std::size_t compared = 0;

  bool hard_failure() const;
  std::size_t failures() const;
  std::vector<const CheckResult*> failed() const;
  nlohmann::json to_json() const;
};

struct SuiteConfig {
  /// Seeds of the random finite instances.
  std::vector<std::uint64_t> seeds;
  /// Seeds of the random polytope instances.
  std::vector<std::uint64_t> polytope_seeds;
  /// Positive eps values; eps = 0 is always checked.
  std::vector<double> eps_grid{0.1, 0.7, 1.5};
  int p_max = 3;
  int threshold_samples = 20;
  bool golden = true;
  /// Test fixture: flips one oracle verdict so the equivalence check must fail.
  bool inject_oracle_fault = false;

  static SuiteConfig defaults();  // 50 finite seeds, 20 polytope seeds
};

SuiteReport run_suite(const SuiteConfig& config);

/// Per-instance property checks used by run_suite, callable on any instance.
SuiteReport check_finite_instance(const Instance& inst, const std::string& id,
                                  const SuiteConfig& config);
SuiteReport check_polytope_instance(const Instance& inst, const std::string& id);

/// Named golden checks on the built-in examples.
SuiteReport check_golden();

struct ConvexConfig {
  std::uint64_t seed = 1;
  int grid = 17;
  int n = 1;
  int count = 10;
};

/// For each seeded convex polyhedral instance compares the weak VP_{n+1}
/// members with the weak solutions of the set problem. Disagreements are soft.
SuiteReport convex_experiment(const ConvexConfig& config);

/// The same comparison on a given polytope instance.
CheckResult convex_check(const Instance& inst, const std::string& id, int p, std::size_t& agree,
                         std::size_t& total);

}  // namespace setopt
