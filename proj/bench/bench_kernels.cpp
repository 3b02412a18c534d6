// Serial reference against the OpenMP kernels on the same problems.

#include <benchmark/benchmark.h>

#include "setopt/vectorizer.hpp"

namespace {

using setopt::Exec;

const setopt::Problem<double>& polytope_problem() {
  static const auto prob = setopt::make_problem<double>(
      setopt::make_example("convex_polyhedral", setopt::ExampleParams{.grid = 33, .seed = 7}));
  return prob;
}

const setopt::Problem<double>& finite_problem() {
  static const auto prob = setopt::make_problem<double>(setopt::make_example(
      "random_finite", setopt::ExampleParams{.seed = 3, .decisions = 60, .max_image = 12, .coord_range = 20}));
  return prob;
}

void margin_matrix(benchmark::State& state, Exec exec, bool polytope) {
  const auto& prob = polytope ? polytope_problem() : finite_problem();
  for (auto _ : state) benchmark::DoNotOptimize(setopt::margin_matrix(prob, exec));
  state.counters["pairs"] = static_cast<double>(prob.size() * prob.size());
}

void relation_matrix(benchmark::State& state, Exec exec) {
  const auto& prob = polytope_problem();
  for (auto _ : state)
    benchmark::DoNotOptimize(setopt::relation_matrix(prob, setopt::Relation::LowerStrong, 0.0, exec));
}

void membership(benchmark::State& state, Exec exec) {
  const auto& prob = finite_problem();
  setopt::VpOptions opts;
  opts.exec = exec;
  for (auto _ : state)
    benchmark::DoNotOptimize(setopt::membership_vp(prob, 2, 0.0, setopt::VpKind::Min, opts));
}

}  // namespace

BENCHMARK_CAPTURE(margin_matrix, polytope_serial, Exec::Serial, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(margin_matrix, polytope_parallel, Exec::Parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(margin_matrix, finite_serial, Exec::Serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(margin_matrix, finite_parallel, Exec::Parallel, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(relation_matrix, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(relation_matrix, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(membership, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(membership, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
