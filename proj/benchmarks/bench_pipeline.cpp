/******************************************************************************
 * bench_pipeline.cpp
 *****************************************************************************/

#include <benchmark/benchmark.h>

#include <cstdio>
#include <filesystem>
#include <numeric>

#include "sgc/evaluation.hpp"
#include "sgc/graph_io.hpp"
#include "sgc/louvain.hpp"
#include "sgc/modularity.hpp"
#include "sgc/quotient.hpp"

namespace {

// one shared on-disk instance, built lazily
const std::string& instance_path() {
    static const std::string path = [] {
        const auto file = std::filesystem::temp_directory_path() / "sgc-bench.graph";
        const auto g = sgc::planted_partition(50, 20000, 0.02, 0.0005, 11);
        sgc::write_metis(file.string(), g.adjacency, false);
        return file.string();
    }();
    return path;
}

void BM_stream_pass(benchmark::State& state) {
    const auto& path = instance_path();
    for (auto _ : state) {
        sgc::node_stream stream(path);
        auto st = sgc::clustering_state::singletons(stream.header().node_count,
                                                    stream.header().total_edge_weight);
        sgc::gain_scorer scorer;
        scorer.resize(stream.header().node_count);
        sgc::stream_pass_assign(stream, st, scorer);
        benchmark::DoNotOptimize(st.num_clusters());
    }
}
BENCHMARK(BM_stream_pass)->Unit(benchmark::kMillisecond);

void BM_quotient_build(benchmark::State& state) {
    const auto& path = instance_path();
    for (auto _ : state) {
        sgc::node_stream stream(path);
        auto st = sgc::clustering_state::singletons(stream.header().node_count,
                                                    stream.header().total_edge_weight);
        sgc::gain_scorer scorer;
        scorer.resize(stream.header().node_count);
        sgc::quotient_edge_accumulator acc;
        sgc::stream_pass_assign(stream, st, scorer,
                                [&](const sgc::node_record& rec, const sgc::clustering_state& s) {
                                    sgc::accumulate_edges(rec, s, acc);
                                });
        benchmark::DoNotOptimize(sgc::finalize(acc, st).graph.node_count());
    }
}
BENCHMARK(BM_quotient_build)->Unit(benchmark::kMillisecond);

void BM_louvain_quotient(benchmark::State& state) {
    sgc::node_stream stream(instance_path());
    auto st = sgc::clustering_state::singletons(stream.header().node_count,
                                                stream.header().total_edge_weight);
    sgc::gain_scorer scorer;
    scorer.resize(stream.header().node_count);
    sgc::quotient_edge_accumulator acc;
    sgc::stream_pass_assign(stream, st, scorer,
                            [&](const sgc::node_record& rec, const sgc::clustering_state& s) {
                                sgc::accumulate_edges(rec, s, acc);
                            });
    const auto qg = sgc::finalize(acc, st);
    std::vector<sgc::ClusterID> singles(qg.graph.node_count());
    std::iota(singles.begin(), singles.end(), sgc::ClusterID{0});

    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgc::louvain(qg.graph, singles, {.seed = seed++}));
    }
    state.SetLabel("|V_Q|=" + std::to_string(qg.graph.node_count()) +
                   " |E_Q|=" + std::to_string(qg.graph.undirected_edge_count()));
}
BENCHMARK(BM_louvain_quotient)->Unit(benchmark::kMillisecond);

void BM_nmi(benchmark::State& state) {
    const auto g = sgc::planted_partition(50, 100000, 0.001, 0.0, 3);
    std::vector<sgc::ClusterID> predicted(g.truth.begin(), g.truth.end());
    for (std::size_t v = 0; v < predicted.size(); v += 17) predicted[v] += 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgc::nmi(predicted, g.truth));
    }
}
BENCHMARK(BM_nmi);

} // namespace

BENCHMARK_MAIN();
