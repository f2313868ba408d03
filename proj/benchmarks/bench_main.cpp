#include <benchmark/benchmark.h>

#include "k3lat/claims.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/k3embed.hpp"
#include "k3lat/quadform.hpp"

using namespace k3lat;

static void BM_DetL2(benchmark::State& st) {
  IntMatrix g = build_named("L2").gram;
  for (auto _ : st) benchmark::DoNotOptimize(det(g));
}
BENCHMARK(BM_DetL2);

static void BM_SmithL2(benchmark::State& st) {
  IntMatrix g = build_named("L2").gram;
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(g));
}
BENCHMARK(BM_SmithL2);

static void BM_DiscriminantGroup(benchmark::State& st) {
  Lattice l = build_named(st.range(0) ? "KummerK" : "L2");
  for (auto _ : st) benchmark::DoNotOptimize(discriminant_group(l));
}
BENCHMARK(BM_DiscriminantGroup)->Arg(0)->Arg(1);

static void BM_HilbertSymbol(benchmark::State& st) {
  long p = st.range(0);
  for (auto _ : st)
    for (long a = -20; a <= 20; ++a)
      if (a) benchmark::DoNotOptimize(hilbert_symbol(Rat(a), Rat(a * a + 7), Place(p)));
}
BENCHMARK(BM_HilbertSymbol)->Arg(2)->Arg(7);

static void BM_GenusEqual(benchmark::State& st) {
  Lattice a = build_named("N1"), b = build_named("N2");
  for (auto _ : st) benchmark::DoNotOptimize(genus_equal(a, b));
}
BENCHMARK(BM_GenusEqual)->Unit(benchmark::kMillisecond);

static void BM_EvenOverlatticesD8(benchmark::State& st) {
  Lattice d8 = root_lattice(RootType::D, 8);
  for (auto _ : st) benchmark::DoNotOptimize(even_overlattices(d8, 2));
}
BENCHMARK(BM_EvenOverlatticesD8);

static void BM_ShortVectorsE8(benchmark::State& st) {
  IntMatrix g = root_lattice(RootType::E, 8).gram;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  for (auto _ : st) benchmark::DoNotOptimize(short_vectors(g, Int(st.range(0))));
}
BENCHMARK(BM_ShortVectorsE8)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Claim(benchmark::State& st) {
  static const char* ids[] = {"L2.disc", "T.glue-isom", "rank17.trans", "L.overlattice-unique"};
  std::string id = ids[st.range(0)];
  st.SetLabel(id);
  for (auto _ : st) benchmark::DoNotOptimize(run_claim(id));
}
BENCHMARK(BM_Claim)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
