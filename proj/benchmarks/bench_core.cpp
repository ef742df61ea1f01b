#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ltv/commute.hpp"
#include "ltv/compose.hpp"
#include "ltv/system.hpp"

using namespace ltv;

namespace {

LtvSystem closed_form_system(double y0) {
  return LtvSystem::first_order(CoefficientSequence::closed_form("exp(0.01*k)"),
                                CoefficientSequence::closed_form("1 + 0.5*sin(0.1*pi*k)"), y0,
                                "A");
}

LtvSystem tabulated_system(long K, double y0) {
  std::vector<double> a1(K + 1), a0(K + 1);
  for (long k = 0; k <= K; ++k) {
    a1[k] = std::exp(0.01 * static_cast<double>(k));
    a0[k] = 1.0 + 0.5 * std::sin(0.1 * M_PI * static_cast<double>(k));
  }
  return LtvSystem::first_order(CoefficientSequence::tabulated(std::move(a1)),
                                CoefficientSequence::tabulated(std::move(a0)), y0, "T");
}

void SimulateClosedForm(benchmark::State& state) {
  const long K = state.range(0);
  const LtvSystem sys = closed_form_system(1.0);
  const Signal x = Signal::unit_sample(0, K);
  for (auto _ : state) {
    Signal y = simulate(sys, x, K);
    benchmark::DoNotOptimize(y);
  }
  state.SetComplexityN(K);
}
BENCHMARK(SimulateClosedForm)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void SimulateTabulated(benchmark::State& state) {
  const long K = state.range(0);
  const LtvSystem sys = tabulated_system(K, 1.0);
  const Signal x = Signal::unit_sample(0, K);
  for (auto _ : state) {
    Signal y = simulate(sys, x, K);
    benchmark::DoNotOptimize(y);
  }
  state.SetComplexityN(K);
}
BENCHMARK(SimulateTabulated)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void ExpressionEval(benchmark::State& state) {
  const Expr e = Expr::parse("9 + 3*sin(0.1*pi*k) * exp(0.001*k)");
  long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval(k % 1000));
    ++k;
  }
}
BENCHMARK(ExpressionEval);

void CascadeBuild(benchmark::State& state) {
  const long K = state.range(0);
  const LtvSystem a = tabulated_system(K + 1, 1.0);
  const LtvSystem b = tabulated_system(K + 1, 0.5);
  for (auto _ : state) {
    CascadeSystem cs = cascade_first_order(a, b, K);
    benchmark::DoNotOptimize(cs);
  }
  state.SetComplexityN(K);
}
BENCHMARK(CascadeBuild)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void ConvolveQuadratic(benchmark::State& state) {
  const long K = state.range(0);
  const Signal x = Signal::unit_sample(0, K);
  const auto h = [](long k, long l) { return k >= l ? 1.0 / static_cast<double>(k - l + 1) : 0.0; };
  for (auto _ : state) {
    Signal y = convolve(h, x, K);
    benchmark::DoNotOptimize(y);
  }
  state.SetComplexityN(K);
}
BENCHMARK(ConvolveQuadratic)->RangeMultiplier(4)->Range(128, 1024)->Complexity();

void CheckConditions(benchmark::State& state) {
  const long K = state.range(0);
  const LtvSystem a = tabulated_system(K + 2, 1.0);
  const LtvSystem b = synthesize_pair(a, {1.0, 2.0}, K + 2, 1.0);
  for (auto _ : state) {
    CommutativityReport r = check_conditions(a, b, K, true);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(K);
}
BENCHMARK(CheckConditions)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
