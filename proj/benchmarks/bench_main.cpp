#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "arsobstruct/engine.hpp"
#include "arsobstruct/enumerate.hpp"
#include "arsobstruct/mesh.hpp"

namespace {

using namespace arsob;

const Catalogue& shipped() {
  static Catalogue c = Catalogue::load(Catalogue::default_path());
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraPresentation gentle() {
  return parse_presentation(
      read_file(std::string(ARSOB_DATA_DIR) + "/examples/gentle_two_nodes.alg"));
}

void BM_DecideWholeCatalogue(benchmark::State& state) {
  const Catalogue& cat = shipped();
  std::vector<ADEType> types = cat.types();
  for (auto _ : state)
    for (const ADEType& t : types) {
      Verdict v = decide(cat, {AdeInput{t, 3}});
      benchmark::DoNotOptimize(v.outcome);
    }
}
BENCHMARK(BM_DecideWholeCatalogue)->Unit(benchmark::kMillisecond);

void BM_InstantiateGentle(benchmark::State& state) {
  AlgebraPresentation p = gentle();
  for (auto _ : state) {
    AlgebraInstance a = instantiate(p);
    benchmark::DoNotOptimize(a.dimension());
  }
}
BENCHMARK(BM_InstantiateGentle);

void BM_MeshInstantiate(benchmark::State& state) {
  const ValuedTranslationQuiver& tq =
      shipped().get(parse_ade("A" + std::to_string(state.range(0)))).ar_quiver;
  AlgebraPresentation p = mesh_presentation(tq);
  int cap = static_cast<int>(mesh_length_cap(tq));
  for (auto _ : state) {
    AlgebraInstance a = instantiate(p, cap);
    benchmark::DoNotOptimize(a.dimension());
  }
}
BENCHMARK(BM_MeshInstantiate)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_StableGpSplit(benchmark::State& state) {
  AlgebraPresentation p = gentle();
  p.field = Field::prime(2);
  AlgebraInstance a = instantiate(p);
  for (auto _ : state) {
    StableGpQuiver q = stable_gp_quiver(a, {2, 2, 2});
    benchmark::DoNotOptimize(q.modules.size());
  }
}
BENCHMARK(BM_StableGpSplit)->Unit(benchmark::kMillisecond);

void BM_Reduction(benchmark::State& state) {
  for (auto _ : state) {
    ReductionResult r = reduce_ade(shipped(), parse_ade("E8"));
    benchmark::DoNotOptimize(r.target.index);
  }
}
BENCHMARK(BM_Reduction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
