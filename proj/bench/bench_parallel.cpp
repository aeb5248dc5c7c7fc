// Serial reference vs OpenMP paths for the batch kernels and a fuzz family.

#include <benchmark/benchmark.h>

#include "tsc/fuzz.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"

namespace {

std::vector<tsc::Sequent> sequent_batch(std::size_t size) {
  std::vector<tsc::Sequent> out;
  for (std::size_t i = 0; i < size; ++i) {
    auto rng = tsc::gen::instance_rng(7, "bench-sequents", i);
    tsc::gen::FormulaShape shape;
    shape.max_modalities = 6;
    const auto phi = tsc::gen::formula(rng, shape);
    out.push_back({phi, tsc::gen::weaken(rng, phi)});
  }
  return out;
}

void BM_Derives(benchmark::State& state, tsc::Execution exec) {
  const auto batch = sequent_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tsc::derives_batch(batch, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Family(benchmark::State& state, tsc::Execution exec) {
  tsc::fuzz::Options options;
  options.count = static_cast<std::size_t>(state.range(0));
  options.exec = exec;
  const auto& family = tsc::fuzz::family("axiom-6-schmerl");
  for (auto _ : state) benchmark::DoNotOptimize(tsc::fuzz::run_family(family, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Derives, serial, tsc::Execution::Serial)->Arg(256)->Arg(2048);
BENCHMARK_CAPTURE(BM_Derives, parallel, tsc::Execution::Parallel)->Arg(256)->Arg(2048);
BENCHMARK_CAPTURE(BM_Family, serial, tsc::Execution::Serial)->Arg(500);
BENCHMARK_CAPTURE(BM_Family, parallel, tsc::Execution::Parallel)->Arg(500);

BENCHMARK_MAIN();
