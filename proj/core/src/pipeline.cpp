/******************************************************************************
 * pipeline.cpp
 *****************************************************************************/

#include "sgc/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <sys/resource.h>

#include "sgc/graph_io.hpp"
#include "sgc/memetic.hpp"
#include "sgc/modularity.hpp"
#include "sgc/quotient.hpp"
#include "sgc/restream.hpp"

namespace sgc {

namespace {

class phase_timer {
public:
    phase_timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::uint64_t peak_rss_bytes() {
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
    return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // ru_maxrss is in KiB on Linux
}

void validate(const mode_config& cfg) {
    if (cfg.ls_floor < 0.0 || cfg.ls_floor > 1.0)
        throw std::invalid_argument("ls floor must be in [0, 1]");
    if (cfg.evo_time_s <= 0.0) throw std::invalid_argument("evo time must be positive");
    if (cfg.ls_time_s <= 0.0) throw std::invalid_argument("ls time must be positive");
    if (cfg.population_size < 2) throw std::invalid_argument("population size must be at least 2");
}

} // namespace

const char* mode_name(cluster_mode mode) {
    switch (mode) {
    case cluster_mode::light: return "light";
    case cluster_mode::light_plus: return "light-plus";
    case cluster_mode::evo: return "evo";
    case cluster_mode::strong: return "strong";
    }
    return "light";
}

std::optional<cluster_mode> parse_mode(std::string_view name) {
    if (name == "light") return cluster_mode::light;
    if (name == "light-plus" || name == "light_plus") return cluster_mode::light_plus;
    if (name == "evo") return cluster_mode::evo;
    if (name == "strong") return cluster_mode::strong;
    return std::nullopt;
}

run_result run(const mode_config& cfg, const std::string& graph_path) {
    validate(cfg);
    const bool refine_quotient =
        cfg.mode == cluster_mode::evo || cfg.mode == cluster_mode::strong;
    const bool restream =
        cfg.mode == cluster_mode::light_plus || cfg.mode == cluster_mode::strong;

    node_stream stream(graph_path, cfg.sanitize);
    const std::uint64_t n = stream.header().node_count;

    run_result result;
    result.stats.mode = mode_name(cfg.mode);
    result.stats.n = n;
    result.stats.m = stream.header().edge_count;

    clustering_state state = clustering_state::singletons(n, stream.header().total_edge_weight);
    gain_scorer scorer;
    scorer.resize(n);

    std::optional<quotient_edge_accumulator> accumulator;
    stream_hook hook;
    if (refine_quotient) {
        accumulator.emplace();
        hook = [&accumulator](const node_record& rec, const clustering_state& st) {
            accumulate_edges(rec, st, *accumulator);
        };
    }

    {
        phase_timer timer;
        stream_pass_assign(stream, state, scorer, hook);
        result.stats.stream_seconds = timer.seconds();
    }

    if (refine_quotient) {
        phase_timer timer;
        const quotient_graph qg = finalize(*accumulator, state);
        accumulator.reset();
        result.quotient_nodes = qg.graph.node_count();
        result.quotient_edges = qg.graph.undirected_edge_count();
        if (!cfg.quotient_dump_path.empty()) dump_metis(cfg.quotient_dump_path, qg.graph);

        // the projected first pass enters the population as the singleton
        // supernode partition, so refinement can never fall below it
        std::vector<ClusterID> baseline(qg.graph.node_count());
        std::iota(baseline.begin(), baseline.end(), ClusterID{0});

        evolution_config evo_cfg;
        evo_cfg.population_size = cfg.population_size;
        evo_cfg.time_budget_s = cfg.evo_time_s;
        evo_cfg.max_iterations = cfg.evo_iterations;
        evo_cfg.seed = cfg.seed;
        const evolution_result evo = evolve(qg.graph, evo_cfg, &baseline);
        project(qg, evo.best_partition, state);
        result.stats.evo_seconds = timer.seconds();
    }

    if (restream) {
        phase_timer timer;
        ls_config ls_cfg;
        ls_cfg.gain_floor = cfg.ls_floor;
        ls_cfg.time_cutoff_s = cfg.ls_time_s;
        ls_cfg.verbose = cfg.verbose;
        const ls_report report = restream_local_search(stream, state, scorer, ls_cfg);
        result.stats.ls_seconds = timer.seconds();
        result.stats.ls_rounds = report.rounds.size();
        result.ls_round_gains.reserve(report.rounds.size());
        for (const auto& round : report.rounds) result.ls_round_gains.push_back(round.delta_q);
    }

    result.stats.modularity = modularity(stream, state);
    result.stats.clusters = state.num_clusters();

    result.output_path = cfg.output_path.empty()
                             ? graph_path + "." + mode_name(cfg.mode) + ".clustering"
                             : cfg.output_path;
    write_clustering(result.output_path, state.assignments());

    if (!cfg.truth_path.empty()) {
        const std::vector<ClusterID> truth = read_clustering(cfg.truth_path);
        if (truth.size() != n)
            throw parse_error("truth label count does not match the graph");
        result.stats.nmi_score = nmi(state.assignments(), truth);
    }
    if (cfg.audit)
        result.stats.audit_modularity = audit_modularity(graph_path, state.assignments(), cfg.sanitize);

    result.stats.peak_memory_bytes = peak_rss_bytes();
    if (!cfg.stats_json_path.empty()) {
        std::ofstream out(cfg.stats_json_path, std::ios::out | std::ios::binary);
        if (!out.is_open()) throw io_error("cannot open stats file: " + cfg.stats_json_path);
        out << to_json(result.stats) << '\n';
    }

    result.assignments.assign(state.assignments().begin(), state.assignments().end());
    return result;
}

} // namespace sgc
