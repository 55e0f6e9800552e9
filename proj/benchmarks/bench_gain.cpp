/******************************************************************************
 * bench_gain.cpp
 *****************************************************************************/

#include <benchmark/benchmark.h>

#include <random>

#include "sgc/evaluation.hpp"
#include "sgc/modularity.hpp"
#include "sgc/weighted_graph.hpp"

namespace {

void BM_delta_modularity(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<sgc::EdgeWeight> w(1, 1000);
    sgc::EdgeWeight d = w(rng), k_cur = w(rng), k_can = w(rng);
    sgc::EdgeWeight vol_cur = d + w(rng), vol_can = w(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sgc::delta_modularity(d, k_cur, k_can, vol_cur, vol_can, 1000000));
    }
}
BENCHMARK(BM_delta_modularity);

void BM_compute_cluster(benchmark::State& state) {
    const auto degree = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t n = 100000;
    const auto g = sgc::planted_partition(100, n, degree / static_cast<double>(n / 100), 0.0, 7);

    sgc::EdgeWeight total = 0;
    std::vector<sgc::EdgeWeight> degrees(n, 0);
    for (sgc::NodeID v = 0; v < n; ++v)
        for (const auto& [u, w] : g.adjacency[v]) {
            degrees[v] += w;
            total += w;
        }
    total /= 2;

    std::vector<sgc::ClusterID> assignment(n);
    std::mt19937_64 rng(3);
    for (auto& c : assignment) c = static_cast<sgc::ClusterID>(rng() % 128);
    auto st = sgc::clustering_state::from_assignment(assignment, degrees, total);

    sgc::gain_scorer scorer;
    scorer.resize(n);
    sgc::node_record rec;
    std::uint64_t cursor = 0;
    for (auto _ : state) {
        rec.id = static_cast<sgc::NodeID>(cursor++ % n);
        rec.neighbors = g.adjacency[rec.id];
        rec.weighted_degree = degrees[rec.id];
        benchmark::DoNotOptimize(
            scorer.compute_cluster(rec, st, sgc::stream_phase::restream));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_compute_cluster)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
