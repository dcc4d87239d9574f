// Microbenchmarks for the hot paths: operator assembly, admissibility
// validation, the coupled solve, and field evaluation.  Run with
// --benchmark_filter=... to select.
#include <benchmark/benchmark.h>

#include <vector>

#include "holes2d/config_io.hpp"
#include "holes2d/potentials.hpp"
#include "holes2d/representation.hpp"
#include "holes2d/rescaled_system.hpp"

using namespace holes2d;

namespace {

ProblemConfig config_with(int M) {
  ProblemConfig cfg = default_config().config;
  cfg.M = M;
  return cfg;
}

void BM_single_layer_self(benchmark::State& state) {
  const auto curve = ParametrizedCurve::ellipse({0.0, 0.0}, 1.0, 0.6);
  const PeriodicRule rule(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(single_layer_self(curve, 1.0, rule));
  }
}
BENCHMARK(BM_single_layer_self)->Arg(64)->Arg(128)->Arg(256);

void BM_adjoint_double_layer_self(benchmark::State& state) {
  const auto curve = ParametrizedCurve::ellipse({0.0, 0.0}, 1.0, 0.6);
  const PeriodicRule rule(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adjoint_double_layer_self(curve, rule));
  }
}
BENCHMARK(BM_adjoint_double_layer_self)->Arg(64)->Arg(128)->Arg(256);

// operator assembly alone; admissibility is checked once up front in the
// public entry points and measured separately below
void BM_assemble_lambda_unchecked(benchmark::State& state) {
  const ProblemConfig cfg = config_with(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_lambda_unchecked(cfg, 0.2, 0.3));
  }
}
BENCHMARK(BM_assemble_lambda_unchecked)->Arg(64)->Arg(128)->Arg(256);

void BM_validate_configuration(benchmark::State& state) {
  const ProblemConfig cfg = config_with(128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_configuration(cfg, 0.2, 0.3));
  }
}
BENCHMARK(BM_validate_configuration);

void BM_solve_densities_unchecked(benchmark::State& state) {
  const ProblemConfig cfg = config_with(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_densities_unchecked(cfg, 0.2, 0.3));
  }
}
BENCHMARK(BM_solve_densities_unchecked)->Arg(64)->Arg(128)->Arg(256);

// the full checked entry point, validation included
void BM_solve_densities(benchmark::State& state) {
  const ProblemConfig cfg = config_with(128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_densities(cfg, 0.2, 0.3));
  }
}
BENCHMARK(BM_solve_densities);

void BM_field_eval(benchmark::State& state) {
  const ProblemConfig cfg = config_with(128);
  const DensityQuadruple q = solve_densities(cfg, 0.2, 0.3);
  const HarmonicField field = build_field(cfg, q);
  std::vector<Vec2> xs;
  for (int k = 0; k < 32; ++k) xs.push_back(Vec2{0.7, 0.0});
  const int eval_M = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_field(field, xs, eval_M));
  }
}
BENCHMARK(BM_field_eval)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
