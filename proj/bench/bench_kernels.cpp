// Reference vs serial vs OpenMP correlation kernels, and serial vs parallel
// sweeps. Thread count follows SNEST_THREADS.

#include <benchmark/benchmark.h>

#include "snest/basis.hpp"
#include "snest/correlation.hpp"
#include "snest/states.hpp"
#include "snest/sweep.hpp"

namespace {

using namespace snest;

SymmetricPovm povm_for(int d) {
  MeasurementSpec m = default_measurement(d);
  if (d == 4) {  // many small POVMs stresses the outer loop
    m.N = 15;
    m.M = 2;
    m.scheme = GroupingScheme::sequential;
  }
  return make_measurement(m, d);
}

void BM_Correlation(benchmark::State& state, Execution exec) {
  const int d = int(state.range(0));
  const SymmetricPovm p = povm_for(d);
  const DensityMatrix rho = isotropic(d, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix(rho, p, p, exec));
  state.counters["entries"] = double(p.size() * p.size());
}

void BM_Sweep(benchmark::State& state, Execution exec) {
  SweepSpec spec = figure_spec(Figure::fig3);
  spec.points = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Correlation, reference, Execution::reference)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Correlation, serial, Execution::serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Correlation, parallel, Execution::parallel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Sweep, serial, Execution::serial)->Arg(181)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Execution::parallel)->Arg(181)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
