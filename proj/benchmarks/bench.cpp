#include <benchmark/benchmark.h>

#include "suite.hpp"
#include "turaev/alexander.hpp"
#include "turaev/covers.hpp"
#include "turaev/link.hpp"
#include "turaev/smith.hpp"
#include "turaev/turaev_norm.hpp"

using namespace turaev;

namespace {

void norm_on_cover(benchmark::State& state, NormMethod method) {
  const auto w = wirtinger(parse_pd(*pd_fixture("fig8")));
  const auto phi = w.total_meridian_class();
  const auto spec = CoverSpec::cyclic(w.presentation, phi, static_cast<std::size_t>(state.range(0)));
  const auto x = cover_complex(w.presentation, spec);
  const auto k = cochain_from_values(x, lift_class(w.presentation, spec, phi));
  for (auto _ : state) benchmark::DoNotOptimize(turaev_norm(x, k, method));
}

void BM_NormLP(benchmark::State& state) { norm_on_cover(state, NormMethod::LP); }
void BM_NormBrute(benchmark::State& state) { norm_on_cover(state, NormMethod::Brute); }

void BM_AlexanderKnot(benchmark::State& state) {
  const auto p = wirtinger(parse_pd(*pd_fixture("fig8"))).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(p));
}

void BM_AlexanderWhitehead(benchmark::State& state) {
  const auto p = wirtinger(parse_pd(*pd_fixture("whitehead"))).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(p));
}

void BM_SmithInteger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  suite::Rng rng(1);
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(integer_invariant_factors(m));
}

}  // namespace

BENCHMARK(BM_NormLP)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_NormBrute)->Arg(1)->Arg(2);
BENCHMARK(BM_AlexanderKnot);
BENCHMARK(BM_AlexanderWhitehead);
BENCHMARK(BM_SmithInteger)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
