#include <benchmark/benchmark.h>

#include "tron/analysis.hpp"
#include "tron/constructions.hpp"
#include "tron/enumerate.hpp"
#include "tron/qbf.hpp"
#include "tron/reductions.hpp"
#include "tron/solver.hpp"

namespace {

using namespace tron;

void BM_SolveTwoPaths(benchmark::State& state) {
  const Graph g = two_paths(static_cast<std::size_t>(state.range(0)));
  SolveOptions opts;
  opts.memoize = state.range(1) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    SolveResult r = solve(g, GameRules::free_start(), opts);
    nodes = r.nodes_expanded;
    benchmark::DoNotOptimize(r.outcome);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_SolveTwoPaths)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SolveAllGraphs(benchmark::State& state) {
  const auto graphs = all_graphs(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(solve(g, GameRules::free_start()).outcome);
  }
  state.counters["graphs"] = static_cast<double>(graphs.size());
}
BENCHMARK(BM_SolveAllGraphs)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_VertexConnectivity(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Visage v = k_connected_visage(k, minimal_afar_height(k).value(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(v.graph).kappa);
  state.counters["vertices"] = static_cast<double>(v.graph.vertex_count());
}
BENCHMARK(BM_VertexConnectivity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

constexpr const char* kFormula = "p cnf 2 2\ne 1 0\na 2 0\n1 2 1 0\n-1 -2 2 0\n";

void BM_BuildGPhi(benchmark::State& state) {
  const Qbf phi = parse_qdimacs(kFormula);
  for (auto _ : state) benchmark::DoNotOptimize(build_G_phi(phi).graph.vertex_count());
}
BENCHMARK(BM_BuildGPhi);

void BM_SolveGPhi(benchmark::State& state) {
  const ReductionOutput red = build_G_phi(parse_qdimacs(kFormula));
  const GameRules rules = GameRules::given_start(*red.alice_start, *red.bob_start);
  for (auto _ : state) benchmark::DoNotOptimize(solve(red.graph, rules).outcome);
  state.counters["vertices"] = static_cast<double>(red.graph.vertex_count());
}
BENCHMARK(BM_SolveGPhi)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
