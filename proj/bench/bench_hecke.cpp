// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hecke_walks/verify.hpp"

using namespace hw;

namespace {

const HeckeAlgebra& algebra() {
  static const HeckeAlgebra H(AffineWeylGroup::make(RootDatum::build(CartanType::C, 2, LatticeFlavor::simply_connected)),
                              ParameterSystem{{3, 2, 1}});
  return H;
}

// theta_lambda for a non-dominant lambda has many terms in the T basis.
std::pair<HeckeElement, HeckeElement> operands(int size) {
  const auto& H = algebra();
  return {theta(H, Coweight::from({-size, size})), theta(H, Coweight::from({size, -size}))};
}

void BM_mul_serial(benchmark::State& state) {
  const auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(algebra().mul_serial(a, b));
  state.counters["terms"] = static_cast<double>(a.terms().size() * b.terms().size());
}

void BM_mul_parallel(benchmark::State& state) {
  const auto [a, b] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(algebra().mul_parallel(a, b));
  state.counters["terms"] = static_cast<double>(a.terms().size() * b.terms().size());
}

void run_kernel_suite(benchmark::State& state, bool parallel) {
  SuiteOptions opt;
  opt.parallel = parallel;
  opt.max_length = static_cast<int>(state.range(0));
  opt.straighten_length = 4;
  for (auto _ : state) benchmark::DoNotOptimize(suite_kernel(algebra(), Orientation::standard(), opt));
}

void BM_kernel_suite_serial(benchmark::State& state) { run_kernel_suite(state, false); }
void BM_kernel_suite_parallel(benchmark::State& state) { run_kernel_suite(state, true); }

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_suite_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_suite_parallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
