#include <benchmark/benchmark.h>

#include "robsched/bench/generator.hpp"
#include "robsched/exact/scenarios.hpp"
#include "robsched/exact/solvers.hpp"
#include "robsched/objective.hpp"
#include "robsched/ptas/scheme.hpp"
#include "robsched/reduction/dual_search.hpp"

using namespace robsched;

namespace {

Instance identical_instance(int n, int gamma, std::uint64_t seed = 1) {
  bench::GeneratorConfig config;
  config.seed = seed;
  config.family = bench::Family::IdenticalUniformRandom;
  config.n_min = config.n_max = n;
  config.m_min = config.m_max = 3;
  config.gamma_min = config.gamma_max = gamma;
  return bench::generate(config);
}

Instance unrelated_instance(int n, int gamma, std::uint64_t seed = 2) {
  bench::GeneratorConfig config;
  config.seed = seed;
  config.family = bench::Family::UnrelatedRandom;
  config.n_min = config.n_max = n;
  config.m_min = config.m_max = 3;
  config.gamma_min = config.gamma_max = gamma;
  return bench::generate(config);
}

}  // namespace

static void ObjectiveEvaluation(benchmark::State& state) {
  Instance inst = identical_instance(static_cast<int>(state.range(0)), 3);
  Schedule schedule = exact::greedy_schedule(inst);
  for (auto _ : state) {
    Value v = worst_case_makespan(inst, schedule);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(ObjectiveEvaluation)->Arg(8)->Arg(32)->Arg(128);

static void AdversaryEnumeration(benchmark::State& state) {
  Instance inst = identical_instance(static_cast<int>(state.range(0)), 3);
  Schedule schedule = exact::greedy_schedule(inst);
  for (auto _ : state) {
    auto worst = exact::adversary_argmax(inst, schedule);
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(AdversaryEnumeration)->Arg(8)->Arg(12)->Arg(16);

static void BruteForceSolve(benchmark::State& state) {
  Instance inst = identical_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto result = exact::optimal_bruteforce(inst);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BruteForceSolve)->Arg(6)->Arg(8);

static void BranchAndBoundSolve(benchmark::State& state) {
  Instance inst = unrelated_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto result = exact::optimal_bnb(inst);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BranchAndBoundSolve)->Arg(8)->Arg(10)->Arg(12);

static void ThresholdSearchExact(benchmark::State& state) {
  Instance inst = unrelated_instance(8, 2);
  reduction::ExactCmaxSubroutine sub;
  for (auto _ : state) {
    auto result = reduction::binary_search_solve(inst, sub, Rational(1, 100));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(ThresholdSearchExact);

static void OutlineSchemeDualStep(benchmark::State& state) {
  Instance inst = identical_instance(8, 2);
  Value opt = exact::optimal_bnb(inst).value;
  const Rational eps(1, state.range(0));
  for (auto _ : state) {
    auto schedule = ptas::ptas_dual_step(inst, opt, eps);
    benchmark::DoNotOptimize(schedule);
  }
}
BENCHMARK(OutlineSchemeDualStep)->Arg(5)->Arg(8);

static void RestrictedSchemeDualStep(benchmark::State& state) {
  Instance inst = identical_instance(8, 2);
  Value opt = exact::optimal_bnb(inst).value;
  const Rational eps(1, state.range(0));
  for (auto _ : state) {
    auto schedule = ptas::eptas_dual_step(inst, opt, eps);
    benchmark::DoNotOptimize(schedule);
  }
}
BENCHMARK(RestrictedSchemeDualStep)->Arg(5)->Arg(8);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
