// Serial reference kernels against their OpenMP counterparts, plus a full
// solve in both execution modes.

#include "knudsen/kernels.hpp"
#include "knudsen/transport_solver.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace knudsen;

namespace {

struct Fixture {
  HalfRangeQuadrature quad;
  std::size_t points;
  std::vector<double> plus, minus, m0, m1, m2, incoming;

  Fixture(int nx, int n_mu)
      : quad(HalfRangeQuadrature::build(n_mu)), points(static_cast<std::size_t>(nx) + 1) {
    const std::size_t n = points * quad.nodes().size();
    plus.resize(n);
    minus.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      plus[j] = std::sin(0.001 * static_cast<double>(j));
      minus[j] = std::cos(0.001 * static_cast<double>(j));
    }
    m0.assign(points, 0.1);
    m1.assign(points, 0.2);
    m2.assign(points, 0.3);
    incoming.assign(quad.nodes().size(), 1.0);
  }
};

template <bool Parallel>
void BM_CollisionMoments(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    kernels::MomentFields out{f.m0, f.m1, f.m2};
    if constexpr (Parallel) {
      kernels::collision_moments_omp(f.plus, f.minus, f.quad.nodes(), f.quad.weights(), out);
    } else {
      kernels::collision_moments_serial(f.plus, f.minus, f.quad.nodes(), f.quad.weights(), out);
    }
    benchmark::DoNotOptimize(f.m0.data());
  }
}

template <bool Parallel>
void BM_Sweeps(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto step = kernels::CellPropagator::for_width(25.0 / static_cast<double>(state.range(0)));
  const kernels::ConstMomentFields m{f.m0, f.m1, f.m2};
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::sweep_outgoing_omp(m, f.quad.nodes(), step, f.plus);
      kernels::sweep_incoming_omp(m, f.quad.nodes(), step, f.incoming, f.minus);
    } else {
      kernels::sweep_outgoing_serial(m, f.quad.nodes(), step, f.plus);
      kernels::sweep_incoming_serial(m, f.quad.nodes(), step, f.incoming, f.minus);
    }
    benchmark::DoNotOptimize(f.plus.data());
  }
}

void BM_Solve(benchmark::State& state) {
  SolverConfig c;
  c.nx = 2000;
  c.n_mu = 40;
  c.acceleration = Acceleration::Anderson;
  c.execution = state.range(0) ? Execution::OpenMP : Execution::Serial;
  const HalfRangeQuadrature quad = HalfRangeQuadrature::build(c.n_mu);
  for (auto _ : state) {
    NumericField f = solve({1.0, 0.0}, c, quad);
    benchmark::DoNotOptimize(f.plus.data());
  }
}

}  // namespace

BENCHMARK(BM_CollisionMoments<false>)->Args({2000, 40})->Args({8000, 80});
BENCHMARK(BM_CollisionMoments<true>)->Args({2000, 40})->Args({8000, 80});
BENCHMARK(BM_Sweeps<false>)->Args({2000, 40})->Args({8000, 80});
BENCHMARK(BM_Sweeps<true>)->Args({2000, 40})->Args({8000, 80});
BENCHMARK(BM_Solve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
