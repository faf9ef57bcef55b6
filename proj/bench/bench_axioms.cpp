// Serial and OpenMP axiom sweeps over AK(1) windows.

#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"

#include <benchmark/benchmark.h>

using namespace antialg;

namespace {

template <Execution Exec>
void sweep(benchmark::State& state, Profile profile) {
  const long bound = state.range(0);
  const AlgebraDef w = builtin(BuiltinName::ak1, WindowSpec::of(bound, bound / 2));
  std::size_t tuples = 0;
  for (auto _ : state) {
    const Report r = check_profile(w, profile, Exec);
    tuples = r.checked() + r.skipped();
    if (!r.passed()) state.SkipWithError("profile failed");
    benchmark::DoNotOptimize(r);
  }
  state.counters["tuples"] = static_cast<double>(tuples);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tuples));
}

void antialgebra_serial(benchmark::State& s) { sweep<Execution::serial>(s, Profile::antialgebra); }
void antialgebra_parallel(benchmark::State& s) { sweep<Execution::parallel>(s, Profile::antialgebra); }
void jordan_serial(benchmark::State& s) { sweep<Execution::serial>(s, Profile::jordan_super); }
void jordan_parallel(benchmark::State& s) { sweep<Execution::parallel>(s, Profile::jordan_super); }

}  // namespace

BENCHMARK(antialgebra_serial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(antialgebra_parallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(jordan_serial)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(jordan_parallel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
