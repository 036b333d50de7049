#include "flatknot/alexander.hpp"
#include "flatknot/bracket.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/quandle.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace flatknot;

namespace {

GaussCode fixture(const std::string& rel) {
  std::ifstream in(std::string(FLATKNOT_FIXTURE_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gauss(ss.str());
}

PolyMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (auto& row : m)
    for (auto& x : row)
      for (int k = 0; k < 2; ++k)
        x += LaurentPoly(coeff(rng)) * LaurentPoly::variable("t", expo(rng)) * LaurentPoly::variable("u", expo(rng));
  return m;
}

void BM_Determinant(benchmark::State& state) {
  const PolyMatrix m = random_matrix(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(lp_det(m));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(6);

void BM_Alexander(benchmark::State& state) {
  const GaussCode g = fixture("seeds/seed04.gauss");
  for (auto _ : state) benchmark::DoNotOptimize(alexander_delta(g));
}
BENCHMARK(BM_Alexander);

void BM_Bracket(benchmark::State& state) {
  const GaussCode g = fixture("seeds/seed0" + std::to_string(state.range(0)) + ".gauss");
  for (auto _ : state) benchmark::DoNotOptimize(bracket(g));
}
BENCHMARK(BM_Bracket)->Arg(0)->Arg(7);

void BM_Scramble(benchmark::State& state) {
  const GaussCode g = fixture("seeds/seed03.gauss");
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scramble(g, MoveSystem::flat_virtual(), seed++, 50));
}
BENCHMARK(BM_Scramble);

void BM_Colorings(benchmark::State& state) {
  const GaussCode g = fixture("seeds/seed05.gauss");
  const FiniteKFlatBiquandle b = alexander_biquandle(7, 3, {2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(count_colorings(g, b));
}
BENCHMARK(BM_Colorings);

}  // namespace

BENCHMARK_MAIN();
