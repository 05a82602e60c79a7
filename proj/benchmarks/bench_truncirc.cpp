#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "truncirc/connes.hpp"
#include "truncirc/states.hpp"
#include "truncirc/toeplitz.hpp"
#include "truncirc/wasserstein.hpp"

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> random_roots(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> roots(static_cast<size_t>(count));
  for (double& r : roots) r = angle(rng);
  return roots;
}

void bm_pure_from_roots(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(1);
  const auto roots = random_roots(n - 1, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncirc::pure_from_roots(roots));
  }
}

void bm_connes_distance(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(2);
  const auto phi = truncirc::moment_state(
      truncirc::pure_from_roots(random_roots(n - 1, rng)));
  const auto psi = truncirc::moment_state(
      truncirc::pure_from_roots(random_roots(n - 1, rng)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncirc::connes_distance(phi, psi).value);
  }
}

void bm_w1_circle(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto mu = truncirc::pullback(truncirc::fejer_state(n, 0.0));
  const auto nu = truncirc::pullback(truncirc::fejer_state(n, 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncirc::w1_circle(mu, nu));
  }
}

void bm_vandermonde_decompose(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  // Fixed low rank with equispaced nodes: the cost being measured is the
  // n-dependence of the decomposition, and this stays well conditioned.
  std::vector<truncirc::VandermondeAtom> atoms;
  const int count = 4;
  for (int j = 0; j < count; ++j)
    atoms.push_back({kTwoPi * j / count, weight(rng)});
  const auto t = truncirc::vandermonde_reconstruct(atoms, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncirc::vandermonde_decompose(t));
  }
}

BENCHMARK(bm_pure_from_roots)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_connes_distance)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_w1_circle)->Arg(8)->Arg(64);
BENCHMARK(bm_vandermonde_decompose)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
