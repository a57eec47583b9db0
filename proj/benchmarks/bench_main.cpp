#include <string>

#include <benchmark/benchmark.h>

#include "lgih/complex.hpp"
#include "lgih/facelattice.hpp"
#include "lgih/hcalc.hpp"
#include "lgih/ihomology.hpp"
#include "lgih/json_io.hpp"
#include "lgih/lghomology.hpp"
#include "lgih/stratsimplex.hpp"

namespace {

lgih::StratifiedComplex load(const std::string& name) {
  return lgih::complex_from_json(lgih::read_json_file(std::string(LGIH_DATA_DIR) + "/complexes/" + name + ".json"));
}

void BM_FlagVectorCube(benchmark::State& state) {
  auto cube = lgih::from_word(std::string(static_cast<std::size_t>(state.range(0)), 'I'));
  for (auto _ : state) benchmark::DoNotOptimize(lgih::flag_vector(cube));
}
BENCHMARK(BM_FlagVectorCube)->DenseRange(3, 5);

void BM_FitPredict(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto query = lgih::flag_vector(lgih::dual(lgih::from_word(std::string(static_cast<std::size_t>(n), 'I'))));
  for (auto _ : state) benchmark::DoNotOptimize(lgih::fit_and_predict(lgih::ic_training(n), query));
}
BENCHMARK(BM_FitPredict)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DdCheck(benchmark::State& state) {
  auto shapes = lgih::shapes_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& s : shapes) benchmark::DoNotOptimize(lgih::dd_check(s));
}
BENCHMARK(BM_DdCheck)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IhSuspendedTorus(benchmark::State& state) {
  auto k = load("suspension_torus");
  for (auto _ : state) benchmark::DoNotOptimize(lgih::ih_ranks(k));
}
BENCHMARK(BM_IhSuspendedTorus)->Unit(benchmark::kMillisecond);

void BM_LgConeHexagon(benchmark::State& state) {
  auto k = load("cone_hexagon");
  if (state.range(1)) k = lgih::barycentric_subdivision(k);
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lgih::lg_ranks(k, i, lgih::WSequence{{0}}));
}
BENCHMARK(BM_LgConeHexagon)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
