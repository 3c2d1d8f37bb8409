#include <benchmark/benchmark.h>

#include "hallpi/verify.hpp"

using namespace hallpi;

namespace {

void BM_BuildGroup(benchmark::State& state, const char* spec) {
  for (auto _ : state) {
    auto g = build(spec);
    benchmark::DoNotOptimize(g.group.order());
  }
}
BENCHMARK_CAPTURE(BM_BuildGroup, sym12, "Sym(12)");
BENCHMARK_CAPTURE(BM_BuildGroup, gl52, "GL(5,2)");
BENCHMARK_CAPTURE(BM_BuildGroup, gl52_extension, "Semidirect(GL(5,2),TransposeInverse)");
BENCHMARK_CAPTURE(BM_BuildGroup, psl227, "PSL(2,27)");

void BM_Membership(benchmark::State& state) {
  auto g = build("GL(5,2)");
  auto s = build("Sym(31)", BuildOptions{31, 5000, 1});
  std::size_t i = 0;
  const auto& gens = s.group.generators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.group.contains(gens[i++ % gens.size()]));
  }
}
BENCHMARK(BM_Membership);

void BM_Lattice(benchmark::State& state, const char* spec, const char* pi) {
  auto g = build(spec);
  auto p = PrimeSet::parse(pi);
  for (auto _ : state) {
    PiSubgroupLattice lattice(g.group, p);
    benchmark::DoNotOptimize(lattice.class_count());
  }
}
BENCHMARK_CAPTURE(BM_Lattice, psl27_23, "PSL(2,7)", "2,3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lattice, alt6_23, "Alt(6)", "2,3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lattice, psl33_23, "PSL(3,3)", "2,3")->Unit(benchmark::kMillisecond);

void BM_CatalogHall(benchmark::State& state, const char* spec) {
  auto g = build(spec);
  auto pi = PrimeSet::parse("2,3");
  for (auto _ : state) {
    auto r = hall_classes(g, pi, Mode::CatalogCertified);
    benchmark::DoNotOptimize(r.classes.size());
  }
}
BENCHMARK_CAPTURE(BM_CatalogHall, gl52, "GL(5,2)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CatalogHall, gl52_extension, "Semidirect(GL(5,2),TransposeInverse)")
    ->Unit(benchmark::kMillisecond);

void BM_Normalizer(benchmark::State& state) {
  auto g = build("Semidirect(GL(5,2),TransposeInverse)");
  auto h = flag_stabilizer(g, FlagSpec{{2, 1, 2}});
  for (auto _ : state) {
    auto n = normalizer(g.group, h);
    benchmark::DoNotOptimize(n.order());
  }
}
BENCHMARK(BM_Normalizer)->Unit(benchmark::kMillisecond);

void BM_Example(benchmark::State& state) {
  for (auto _ : state) {
    auto rs = run_example(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_Example)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
