#include <benchmark/benchmark.h>

#include "ftc/gadgets.hpp"
#include "ftc/montecarlo.hpp"
#include "ftc/noise.hpp"
#include "ftc/steane.hpp"
#include "ftc/tableau.hpp"

namespace {

void BM_TableauCnotChain(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  ftc::StabilizerState s(n);
  for (std::size_t q = 0; q < n; ++q) s.apply(ftc::Gate::H, q);
  for (auto _ : state) {
    for (std::size_t q = 0; q + 1 < n; ++q) s.apply(ftc::Gate::CNOT, q, q + 1);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n - 1));
}
BENCHMARK(BM_TableauCnotChain)->Arg(64)->Arg(256)->Arg(1024);

void BM_TableauMeasure(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  ftc::Rng rng(1);
  for (auto _ : state) {
    state.PauseTiming();
    ftc::StabilizerState s(n);
    for (std::size_t q = 0; q < n; ++q) s.apply(ftc::Gate::H, q);
    for (std::size_t q = 0; q + 1 < n; ++q) s.apply(ftc::Gate::CNOT, q, q + 1);
    state.ResumeTiming();
    for (std::size_t q = 0; q < n; ++q) benchmark::DoNotOptimize(s.measure(ftc::PauliString::single(n, q, 'Z'), rng));
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n));
}
BENCHMARK(BM_TableauMeasure)->Arg(64)->Arg(256);

void BM_SteaneEncode(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ftc::steane::encode_logical(false));
  }
}
BENCHMARK(BM_SteaneEncode);

void BM_GadgetTrial(benchmark::State& state) {
  const auto bp = ftc::blueprint_for("cz_single", int(state.range(0)));
  const auto m = ftc::NoiseModel::uniform_depolarizing(1e-3);
  ftc::Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ftc::run_gadget(bp, m, rng, {}));
  }
}
BENCHMARK(BM_GadgetTrial)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RunTrialsBatch(benchmark::State& state) {
  ftc::TrialPlan plan;
  plan.gadget = "cz_single";
  plan.level = 1;
  plan.model = ftc::NoiseModel::uniform_depolarizing(1e-3);
  plan.trials = state.range(0);
  plan.master_seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ftc::run_trials(plan));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTrialsBatch)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
