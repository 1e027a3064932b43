#include <benchmark/benchmark.h>

#include "hamlg/connectivity.hpp"
#include "hamlg/connectors.hpp"
#include "hamlg/io.hpp"
#include "hamlg/pipeline.hpp"

using namespace hamlg;

namespace {

void BM_BuildLineGraph(benchmark::State& state) {
    auto h = generate_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto lg = build_line_graph(h);
        benchmark::DoNotOptimize(lg.graph.edgeCount());
    }
}
BENCHMARK(BM_BuildLineGraph)->Arg(10)->Arg(20)->Arg(28);

void BM_LocalEdgeConnectivity(benchmark::State& state) {
    auto ig = build_incidence_graph(generate_complete(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto lc = local_edge_connectivity(ig.graph, 0, 1, 18);
        benchmark::DoNotOptimize(lc.value);
    }
}
BENCHMARK(BM_LocalEdgeConnectivity)->Arg(19)->Arg(28);

void BM_ConnectorSearch(benchmark::State& state) {
    auto ig = build_incidence_graph(generate_complete(static_cast<int>(state.range(0))));
    std::vector<VertexId> blacks;
    for (VertexId v = 0; v < ig.blackCount; ++v) blacks.push_back(v);
    for (auto _ : state) {
        auto r = find_edge_disjoint_T_connectors(ig.graph, blacks, 2);
        benchmark::DoNotOptimize(r.status);
    }
}
BENCHMARK(BM_ConnectorSearch)->Arg(19)->Arg(28);

void BM_EulerTrail(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MultiGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.addEdge(i, j);
    // odd n keeps every degree even
    for (auto _ : state) {
        auto w = closed_trail_of(g);
        benchmark::DoNotOptimize(w.length());
    }
}
BENCHMARK(BM_EulerTrail)->Arg(21)->Arg(41);

void BM_CertifyTheorem(benchmark::State& state) {
    auto h = generate_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cert = certify(h);
        benchmark::DoNotOptimize(cert.verified);
    }
}
BENCHMARK(BM_CertifyTheorem)->Arg(28)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
