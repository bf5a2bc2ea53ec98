// Serial reference vs OpenMP kernels. Argument 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "gpos/families.hpp"
#include "gpos/metric.hpp"
#include "gpos/search.hpp"
#include "gpos/solvers.hpp"

namespace {

using namespace gpos;

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void BM_Distances(benchmark::State& st) {
    const Graph g = random_graph(static_cast<std::size_t>(st.range(1)), 0.05, 1);
    for (auto _ : st) benchmark::DoNotOptimize(all_pairs_distances(g, mode(st)));
}
BENCHMARK(BM_Distances)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMillisecond);

void BM_GeodesicTable(benchmark::State& st) {
    const auto d = all_pairs_distances(kneser_2(static_cast<std::size_t>(st.range(1))).graph);
    for (auto _ : st) benchmark::DoNotOptimize(ConflictTable::geodesic(d, mode(st)));
}
BENCHMARK(BM_GeodesicTable)->ArgsProduct({{0, 1}, {10, 14}})->Unit(benchmark::kMillisecond);

void BM_LowerGpKneser(benchmark::State& st) {
    const Graph g = kneser_2(static_cast<std::size_t>(st.range(1))).graph;
    const SolverOptions opt{mode(st), kDefaultMonophonicCap};
    for (auto _ : st) benchmark::DoNotOptimize(lower_gp_number(g, opt));
}
BENCHMARK(BM_LowerGpKneser)->ArgsProduct({{0, 1}, {12, 14}})->Unit(benchmark::kMillisecond);

void BM_GpRandom40(benchmark::State& st) {
    const Graph g = random_graph(40, 0.15, 7);
    const SolverOptions opt{mode(st), kDefaultMonophonicCap};
    for (auto _ : st) benchmark::DoNotOptimize(gp_number(g, opt));
}
BENCHMARK(BM_GpRandom40)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
