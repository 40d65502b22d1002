#include <benchmark/benchmark.h>

#include "powergraph/metric_dim.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/poset.hpp"
#include "powergraph/power_graph.hpp"

using namespace powergraph;

static void BM_BuildCyclic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_cyclic(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BuildCyclic)->Arg(64)->Arg(512)->Arg(2048);

static void BM_BuildSymmetric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_symmetric(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BuildSymmetric)->Arg(4)->Arg(5)->Arg(6);

static void BM_PowerGraph(benchmark::State& state) {
  Group g = make_cyclic(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power_graph(g));
}
BENCHMARK(BM_PowerGraph)->Arg(64)->Arg(512)->Arg(2048);

static void BM_Orientation(benchmark::State& state) {
  Group g = build_group("S(5)");
  for (auto _ : state) benchmark::DoNotOptimize(is_transitive(transitive_orientation(g)));
}
BENCHMARK(BM_Orientation);

static void BM_TwinPartition(benchmark::State& state) {
  Group g = make_cyclic(static_cast<std::uint64_t>(state.range(0)));
  Graph pg = power_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(twin_partition(g, pg));
}
BENCHMARK(BM_TwinPartition)->Arg(120)->Arg(500);

static void BM_DimFormulaCyclic(benchmark::State& state) {
  Group g = make_cyclic(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dim_formula(g));
}
BENCHMARK(BM_DimFormulaCyclic)->Arg(120)->Arg(500);

static void BM_DimFormulaPsiFamily(benchmark::State& state) {
  Group g = build_group("E(2,3)xZ(9)");
  for (auto _ : state) benchmark::DoNotOptimize(dim_formula(g));
}
BENCHMARK(BM_DimFormulaPsiFamily);

static void BM_OracleDim(benchmark::State& state) {
  Group g = build_group(state.range(0) == 0 ? "D(12)" : "E(2,3)xZ(9)");
  Graph pg = power_graph(g);
  oracle::SearchBudget budget;
  budget.max_vertices = 128;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_dim(pg, budget));
}
BENCHMARK(BM_OracleDim)->Arg(0)->Arg(1);

static void BM_StructureTheorem(benchmark::State& state) {
  Group g = build_group("S(4)");
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure_theorem(g));
}
BENCHMARK(BM_StructureTheorem);

static void BM_PowerGraphIso(benchmark::State& state) {
  Group a = build_group("E(3,3)");
  Group b = build_group("Z(3)xZ(9)");
  for (auto _ : state) benchmark::DoNotOptimize(power_graph_iso(a, b));
}
BENCHMARK(BM_PowerGraphIso);

static void BM_ClassStructure(benchmark::State& state) {
  Group g = build_group("E(2,3)xZ(9)");
  TwinPartition tp = twin_partition(g);
  for (auto _ : state) benchmark::DoNotOptimize(class_structure_check(g, tp));
}
BENCHMARK(BM_ClassStructure);
BENCHMARK_MAIN();
