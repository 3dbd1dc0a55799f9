#include <benchmark/benchmark.h>

#include <cmath>

#include "crooked/oracle.hpp"

using namespace crooked;

namespace {

CrookedPlane plane_a() { return CrookedPlane({0, 0, 0}, {1, 0, 0}); }
CrookedPlane plane_b() { return CrookedPlane({0, 1, 0}, {std::cosh(1.0), 0, std::sinh(1.0)}); }
// Second vertex pulled back: intersects.
CrookedPlane plane_c() { return CrookedPlane({0, -1, 0}, {std::cosh(1.0), 0, std::sinh(1.0)}); }

void BM_Mesh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CrookedPlane a = plane_a();
  for (auto _ : state) benchmark::DoNotOptimize(mesh_crooked_plane(a, 20.0, n).size());
}
BENCHMARK(BM_Mesh)->Arg(16)->Arg(64);

void BM_OracleDisjointPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CrookedPlane a = plane_a(), b = plane_b();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_disjoint(a, b, 20.0, n).intersecting);
}
BENCHMARK(BM_OracleDisjointPair)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_OracleIntersectingPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CrookedPlane a = plane_a(), b = plane_c();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_disjoint(a, b, 20.0, n).intersecting);
}
BENCHMARK(BM_OracleIntersectingPair)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
