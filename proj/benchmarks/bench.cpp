#include <benchmark/benchmark.h>

#include "amalgam/closure.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/orbits.hpp"
#include "amalgam/reduction.hpp"
#include "amalgam/stabilizer_chain.hpp"
#include "amalgam/suites.hpp"

namespace {

using namespace amalgam;

void BM_ExactProduct(benchmark::State& state) {
  const Generators g = builtin_generators();
  MatrixR m = g.c;
  for (auto _ : state) {
    m = m * g.b * g.c;
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ExactProduct);

void BM_CharPolyBC(benchmark::State& state) {
  const Generators g = builtin_generators();
  const MatrixR bc = g.b * g.c;
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(bc));
}
BENCHMARK(BM_CharPolyBC);

void BM_FieldMul(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  const Field F = legendre_minus_two(p) == Residuosity::square ? Field::prime(p) : Field::quadratic(p);
  FieldElem x = F.order() - 1;
  for (auto _ : state) {
    x = F.add(F.mul(x, x), 1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(5)->Arg(11)->Arg(1009);

void BM_ClosureL3(benchmark::State& state) {
  const ReductionContext ctx = ReductionContext::make(3);
  const auto gens = reduced_group_generators(builtin_generators(), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_closure(ctx.field(), gens).size());
}
BENCHMARK(BM_ClosureL3)->Unit(benchmark::kMillisecond);

void BM_ProjectiveOrbits(benchmark::State& state) {
  const ReductionContext ctx = ReductionContext::make(static_cast<std::uint32_t>(state.range(0)));
  const auto gens = reduced_group_generators(builtin_generators(), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(ctx.field(), gens));
}
BENCHMARK(BM_ProjectiveOrbits)->Arg(3)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_CertifiedOrder(benchmark::State& state) {
  const ReductionContext ctx = ReductionContext::make(static_cast<std::uint32_t>(state.range(0)));
  const auto gens = reduced_group_generators(builtin_generators(), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_group_order(ctx.field(), gens, {}, theorem_target(ctx)).order);
}
BENCHMARK(BM_CertifiedOrder)->Arg(11)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
