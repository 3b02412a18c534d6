#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "oracles.hpp"
#include "setopt/verifier.hpp"
#include "support.hpp"

using setopt::Rational;
using setopt::SuiteConfig;
using setopt::Vec;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.seeds = {1, 2, 3, 4};
  cfg.polytope_seeds = {1001, 1002};
  cfg.golden = false;
  return cfg;
}

// Grid of labels "0", "1/8", ... with images shift(x) + conv(triangle).
setopt::Instance translated(int g, bool moving) {
  setopt::Instance inst;
  setopt::set_orthant_cone(inst, 2);
  const std::vector<Vec<Rational>> tri{{0, 0}, {2, 1}, {1, 3}};
  for (int k = 0; k < g; ++k) {
    const Rational x(k, g - 1);
    inst.decisions.push_back({setopt::format_rational(x), {x}});
    std::vector<Vec<Rational>> pts;
    for (const auto& v : tri) pts.push_back(moving ? Vec<Rational>{v[0] + x, v[1] - x} : v);
    inst.images.push_back(setopt::ImageSet<Rational>::polytope(pts));
  }
  return inst;
}

}  // namespace

TEST(Verifier, SmallSuitePasses) {
  auto rep = setopt::run_suite(small_config());
  EXPECT_FALSE(rep.hard_failure());
  for (const auto* c : rep.failed()) ADD_FAILURE() << c->name << " on " << c->instance_id << ": " << c->detail;
  EXPECT_GT(rep.checks.size(), 100u);
}

TEST(Verifier, GoldenChecksPass) {
  auto rep = setopt::check_golden();
  EXPECT_EQ(rep.failures(), 0u);
  std::set<std::string> names;
  for (const auto& c : rep.checks) names.insert(c.name);
  for (const char* n : {"cantor_limit_weak_member", "cantor_minimal_p_monotone"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Verifier, InjectedFaultIsReportedWithReplay) {
  auto cfg = small_config();
  cfg.inject_oracle_fault = true;
  auto rep = setopt::run_suite(cfg);
  ASSERT_TRUE(rep.hard_failure());
  auto failed = rep.failed();
  ASSERT_EQ(failed.size(), 1u);
  const auto& c = *failed[0];
  EXPECT_EQ(c.name, "oracle_equivalence");
  EXPECT_EQ(c.instance_id, "random_finite seed=1");

  // the payload rebuilds the same instance and names the lattice point
  auto inst = setopt::instance_from_json(c.counterexample["instance"]);
  setopt::ExampleParams p;
  p.seed = 1;
  EXPECT_EQ(inst, setopt::make_example("random_finite", p));
  const auto& params = c.counterexample["params"];
  ASSERT_TRUE(params.contains("kind") && params.contains("p") && params.contains("eps"));
  auto prob = setopt::make_problem<Rational>(inst);
  const auto kind = params["kind"] == "weak" ? setopt::VpKind::Weak : setopt::VpKind::Min;
  const Rational eps = setopt::parse_rational(params["eps"].get<std::string>());
  const int budget = params["p"].get<int>();
  EXPECT_EQ(setopt::membership_vp(prob, budget, eps, kind).member,
            setopt::brute_force_vp(prob, budget, eps, kind).member);
}

TEST(Verifier, EmptyEpsGridRunsOnlyZero) {
  auto cfg = small_config();
  cfg.seeds = {5};
  cfg.polytope_seeds = {};
  cfg.eps_grid = {};
  auto rep = setopt::run_suite(cfg);
  EXPECT_FALSE(rep.hard_failure());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
  auto j = rep.to_json();
  for (const auto& c : j["checks"]) EXPECT_FALSE(c.contains("counterexample"));
  // every lattice check ran at eps = 0 only: the report is a strict subset of the default one
  auto full = small_config();
  full.seeds = {5};
  full.polytope_seeds = {};
  EXPECT_LT(rep.checks.size(), setopt::run_suite(full).checks.size());
}

TEST(Verifier, DeterministicReport) {
  auto cfg = small_config();
  cfg.seeds = {7, 8};
  EXPECT_EQ(setopt::run_suite(cfg).to_json().dump(), setopt::run_suite(cfg).to_json().dump());
}

TEST(ConvexExperiment, CountZeroIsEmpty) {
  setopt::ConvexConfig cfg;
  cfg.count = 0;
  auto rep = setopt::convex_experiment(cfg);
  EXPECT_TRUE(rep.checks.empty());
  EXPECT_EQ(rep.compared, 0u);
}

TEST(ConvexExperiment, ConstantImageAgrees) {
  auto inst = translated(9, false);
  std::size_t agree = 0, total = 0;
  auto r = setopt::convex_check(inst, "constant", 2, agree, total);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(agree, 9u);
  EXPECT_EQ(total, 9u);
  EXPECT_EQ(oracle::orthant_polytope_weak(inst, Rational(0)), std::vector<bool>(9, true));
}

TEST(ConvexExperiment, TranslatedTriangleAgrees) {
  auto inst = translated(9, true);
  std::size_t agree = 0, total = 0;
  auto r = setopt::convex_check(inst, "translated", 2, agree, total);
  EXPECT_EQ(total, 9u);
  EXPECT_EQ(agree, total) << r.detail;
  EXPECT_EQ(oracle::orthant_polytope_weak(inst, Rational(0)), std::vector<bool>(9, true));
}

TEST(ConvexExperiment, SeededRunReportsRatio) {
  setopt::ConvexConfig cfg;
  cfg.count = 2;
  cfg.grid = 9;
  auto rep = setopt::convex_experiment(cfg);
  EXPECT_EQ(rep.checks.size(), 2u);
  EXPECT_GT(rep.compared, 0u);
  EXPECT_GE(rep.agreement, 0.0);
  EXPECT_LE(rep.agreement, 1.0);
  for (const auto& c : rep.checks) EXPECT_FALSE(c.hard);
}
