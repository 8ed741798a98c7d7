// Serial reference vs OpenMP kernels on the workloads the verification routes use.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "susy/factorization.hpp"
#include "susy/kernels.hpp"
#include "susy/ladder.hpp"
#include "susy/spectral.hpp"

using namespace susy;

namespace {

const TridiagonalOperator& chirp_operator() {
  static const TridiagonalOperator op = discretize(chirp_under(6, 1.0), Grid::symmetric(15.0, 4001));
  return op;
}

void BM_EigenSerial(benchmark::State& state) {
  const auto& op = chirp_operator();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::lowest_eigenvalues(op.diag, op.offdiag, state.range(0)));
  }
}

void BM_EigenOmp(benchmark::State& state) {
  const auto& op = chirp_operator();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::omp::lowest_eigenvalues(op.diag, op.offdiag, state.range(0)));
  }
}

template <class Kernel>
void residual_sweep(benchmark::State& state, Kernel kernel) {
  const Grid grid = Grid::symmetric(15.0, static_cast<std::size_t>(state.range(0)));
  const LadderMode m = mode(3, 6, 1.0);
  const ModeEvaluator f(m.mode);
  const ChirpProfile profile = chirp_under(6, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(grid.count(), [&](std::size_t i) {
      const double t = grid.at(i);
      const ModeValue v = f(t);
      return std::abs(-v.d2 + profile(t) * v.value - m.eigenvalue * v.value);
    }));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ResidualSerial(benchmark::State& state) {
  residual_sweep(state, [](std::size_t n, auto&& f) { return kernels::serial::max_over(n, f); });
}

void BM_ResidualOmp(benchmark::State& state) {
  residual_sweep(state, [](std::size_t n, auto&& f) { return kernels::omp::max_over(n, f); });
}

std::vector<std::vector<double>> mode_samples() {
  const Grid grid = Grid::symmetric(30.0, 8001);
  std::vector<std::vector<double>> out;
  for (const LadderMode& m : modes(8, 1.0)) {
    const ModeEvaluator f(m.mode);
    out.push_back(kernels::serial::tabulate(grid.count(), [&](std::size_t i) { return f.value(grid.at(i)); }));
  }
  return out;
}

void BM_GramSerial(benchmark::State& state) {
  const auto samples = mode_samples();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::gram(samples, 0.0075));
}

void BM_GramOmp(benchmark::State& state) {
  const auto samples = mode_samples();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::gram(samples, 0.0075));
}

}  // namespace

BENCHMARK(BM_EigenSerial)->Arg(6)->Arg(64);
BENCHMARK(BM_EigenOmp)->Arg(6)->Arg(64);
BENCHMARK(BM_ResidualSerial)->Arg(4001)->Arg(1 << 20);
BENCHMARK(BM_ResidualOmp)->Arg(4001)->Arg(1 << 20);
BENCHMARK(BM_GramSerial);
BENCHMARK(BM_GramOmp);

BENCHMARK_MAIN();
