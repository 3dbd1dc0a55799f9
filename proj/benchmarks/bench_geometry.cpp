#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "crooked/crooked_plane.hpp"
#include "crooked/flows.hpp"
#include "crooked/foliation.hpp"

using namespace crooked;

namespace {

std::vector<std::pair<CrookedPlane, CrookedPlane>> random_pairs(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-5, 5), ang(0, 2 * M_PI), rap(-2, 2);
  const auto dir = [&] {
    const double th = ang(rng), s = rap(rng);
    return LorentzVector{std::cosh(s) * std::cos(th), std::cosh(s) * std::sin(th), std::sinh(s)};
  };
  std::vector<std::pair<CrookedPlane, CrookedPlane>> out;
  while (out.size() < n) {
    const LorentzVector a = dir(), b = dir();
    if (pair_class(a, b) != PairClass::ultraparallel) continue;
    out.emplace_back(CrookedPlane({box(rng), box(rng), box(rng)}, a), CrookedPlane({box(rng), box(rng), box(rng)}, b));
  }
  return out;
}

void BM_NullFrame(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t = t > 3.0 ? -3.0 : t + 1e-3;
    benchmark::DoNotOptimize(null_frame({std::cosh(t), 0.3, std::sinh(t)}));
  }
}
BENCHMARK(BM_NullFrame);

void BM_DgDisjoint(benchmark::State& state) {
  const auto pairs = random_pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(dg_disjoint(a, b));
  }
}
BENCHMARK(BM_DgDisjoint);

void BM_ConeDisjoint(benchmark::State& state) {
  const auto pairs = random_pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(cone_disjoint(a, b));
  }
}
BENCHMARK(BM_ConeDisjoint);

void BM_Calibrate(benchmark::State& state) {
  const double c1 = std::cosh(1.0), s1 = std::sinh(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(calibrate({1, 0, 0}, {1, 0, 0}, {c1, 1, s1}, {c1, 0, s1}));
}
BENCHMARK(BM_Calibrate);

void BM_VerifySOrbit(benchmark::State& state) {
  const FoliationSpec spec = hyperbolic_spec(make_hyperbolic_flow(1, 1), {RegionKind::spacelike, 0.5, 0, 0},
                                             DirectorFamily::ultraparallel);
  const auto grid = uniform_grid(-2, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(spec, grid).pass());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifySOrbit)->Arg(17)->Arg(33)->Arg(65)->Complexity(benchmark::oNSquared);

}  // namespace
