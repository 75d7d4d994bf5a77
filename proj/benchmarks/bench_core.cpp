#include <benchmark/benchmark.h>

#include <qgrass/encoder.hpp>
#include <qgrass/hom.hpp>
#include <qgrass/linalg.hpp>
#include <qgrass/subcat.hpp>

using namespace qgrass;

namespace {

EncodedInstance conic(std::uint32_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  return encode({parse_poly("T0*T2 - T1^2", 2, f)}, {parse_poly("T0", 2, f)});
}

void BM_RrefRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Matrix m = random_matrix(FieldSpec::rationals(), n, n, rng, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Matrix m = random_matrix(FieldSpec::prime(2147483647), n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_HomDimEncoded(benchmark::State& state) {
  const auto inst = conic(5);
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(inst.v, inst.w));
}
BENCHMARK(BM_HomDimEncoded);

void BM_EnumerateConicSubreps(benchmark::State& state) {
  const auto inst = conic(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subreps(inst.v, inst.point_dims()));
}
BENCHMARK(BM_EnumerateConicSubreps)->Arg(3)->Arg(5)->Arg(7);

void BM_ExactGrassmannianConic(benchmark::State& state) {
  const auto inst = conic(static_cast<std::uint32_t>(state.range(0)));
  const auto pred = inst.perp_w();
  for (auto _ : state) benchmark::DoNotOptimize(exact_grassmannian_points(inst.v, inst.point_dims(), pred));
}
BENCHMARK(BM_ExactGrassmannianConic)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
