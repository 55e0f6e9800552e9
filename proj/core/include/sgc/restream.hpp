/******************************************************************************
 * restream.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <vector>

#include "clustering_state.hpp"
#include "graph_io.hpp"
#include "modularity.hpp"

namespace sgc {

struct ls_config {
    double gain_floor = 0.05;    // X: relative per-round gain floor in [0, 1]
    double time_cutoff_s = 600.0;
    bool verbose = false;        // per-round progress line on stderr
};

struct ls_round_stats {
    std::uint64_t visited = 0;
    std::uint64_t moves = 0;
    std::uint64_t io_reads = 0;  // node records read from disk this round
    double delta_q = 0.0;
    double elapsed_s = 0.0;
};

struct ls_report {
    std::vector<ls_round_stats> rounds;
    double initial_modularity = 0.0;
    double final_modularity = 0.0;
    bool hit_time_cutoff = false;
};

// Continue iff delta_q >= x * q_total; against a non-positive total the floor
// is meaningless and any positive gain continues.
bool round_gain_check(double delta_q, double q_total, double x);

// Re-streaming local search: round 1 revisits all of V in stream order,
// later rounds only the active nodes (neighbors of moved nodes plus the
// movers), read selectively through the offset index. Moves never create new
// cluster ids and are applied immediately; modularity is non-decreasing
// across rounds. The relative gain floor applies from round 2 on.
ls_report restream_local_search(node_stream& stream, clustering_state& state,
                                gain_scorer& scorer, const ls_config& cfg);

} // namespace sgc
