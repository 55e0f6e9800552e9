/******************************************************************************
 * pipeline.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evaluation.hpp"
#include "graph_io.hpp"
#include "types.hpp"

namespace sgc {

// The four modes: light = one-pass streaming; light-plus adds re-streaming
// local search; evo adds memetic quotient refinement; strong runs both.
enum class cluster_mode { light, light_plus, evo, strong };

const char* mode_name(cluster_mode mode);
std::optional<cluster_mode> parse_mode(std::string_view name);

struct mode_config {
    cluster_mode mode = cluster_mode::light;
    double evo_time_s = 15.0;
    std::uint64_t evo_iterations = 0;   // > 0: deterministic iteration budget
    std::size_t population_size = 10;
    double ls_time_s = 600.0;
    double ls_floor = 0.05;
    std::uint64_t seed = 1;
    bool sanitize = false;
    bool verbose = false;
    bool audit = false;
    std::string output_path;            // empty: <input>.<mode>.clustering
    std::string stats_json_path;
    std::string truth_path;             // triggers NMI evaluation
    std::string quotient_dump_path;
};

struct run_result {
    run_stats stats;
    std::vector<ClusterID> assignments;
    std::string output_path;
    std::vector<double> ls_round_gains;
    std::uint64_t quotient_nodes = 0;
    std::uint64_t quotient_edges = 0;   // undirected, self-loops excluded
};

// Executes the configured pipeline on a METIS node-stream file, writes the
// clustering (and stats JSON when requested), and returns the run record.
// Throws parse_error / io_error / std::invalid_argument for bad inputs.
run_result run(const mode_config& cfg, const std::string& graph_path);

} // namespace sgc
