#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "clifford/algebra/random.hpp"
#include "clifford/geometry/hybrid.hpp"
#include "clifford/quadrature/formulas.hpp"

using namespace clifford;

namespace {

struct Scenario {
  Signature sig;
  Field f;
  Paravector x0;
  Boundary b;
  GridSpec grid;
};

Scenario make_scenario(int p, int q, int outer) {
  const Signature sig(p, q);
  std::vector<double> c(sig.n() + 1, 0.0);
  c[0] = 0.3;
  GridSpec g;
  g.outer_nodes = {outer};
  return {sig, fueter_basis(sig, Space::real_pq)[0], Paravector::real(sig, c),
          Boundary::sphere(Paravector(sig, Space::real_pq), 1.0), g};
}

void run(benchmark::State& state, Execution exec) {
  const auto s = make_scenario(static_cast<int>(state.range(0)), 1, static_cast<int>(state.range(1)));
  const double eps = 0.05;
  const Integrand integrand = [&](const ChartPoint& cp) {
    return second_formula_integrand(s.f, s.x0, eps, Side::left, cp);
  };
  const ConeRefinement cone{s.x0, eps};
  QuadratureStats stats;
  for (auto _ : state) {
    auto v = integrate_boundary(s.b, integrand, s.grid, cone, exec, &stats);
    benchmark::DoNotOptimize(v);
  }
  state.counters["nodes"] = static_cast<double>(stats.nodes);
  state.counters["threads"] = exec == Execution::parallel ? omp_get_max_threads() : 1;
  state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(stats.nodes), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_IntegrateSerial(benchmark::State& state) { run(state, Execution::serial); }
void BM_IntegrateParallel(benchmark::State& state) { run(state, Execution::parallel); }

BENCHMARK(BM_IntegrateSerial)->Args({1, 32})->Args({1, 128})->Args({2, 16})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IntegrateParallel)->Args({1, 32})->Args({1, 128})->Args({2, 16})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MultivectorProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n - n / 2, n / 2);
  std::mt19937_64 rng(1);
  auto a = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 1.0);
  auto b = random_multivector<GaussianRational>(sig, Space::real_pq, rng, 1.0);
  Multivector fa(sig, Space::real_pq), fb(sig, Space::real_pq);
  a.for_each_nonzero([&](Mask m, const GaussianRational& v) { fa.set(m, v.to_complex()); });
  b.for_each_nonzero([&](Mask m, const GaussianRational& v) { fb.set(m, v.to_complex()); });
  for (auto _ : state) benchmark::DoNotOptimize(fa * fb);
}
BENCHMARK(BM_MultivectorProduct)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
