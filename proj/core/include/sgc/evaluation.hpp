/******************************************************************************
 * evaluation.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace sgc {

// Normalized mutual information of two partitions of the same node set:
// I(X;Y) / ((H(X)+H(Y))/2) with natural logarithms, computed from the
// contingency table. 1 iff the partitions are identical up to relabeling.
double nmi(std::span<const ClusterID> predicted, std::span<const ClusterID> truth);

struct synthetic_graph {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    std::vector<std::vector<std::pair<NodeID, EdgeWeight>>> adjacency;
    std::vector<ClusterID> truth;
};

// K cliques of size s, unit weights; consecutive cliques are joined by one
// bridge edge between their last nodes, ring closed. m = K*s*(s-1)/2 + K.
synthetic_graph ring_of_cliques(std::uint32_t clique_count, std::uint32_t clique_size);

// Equal-size blocks (k divides n); intra-block edges with probability p_in,
// inter-block with p_out, unit weights, seeded.
synthetic_graph planted_partition(std::uint32_t k, std::uint64_t n, double p_in,
                                  double p_out, std::uint64_t seed);

// Uniform random graph with integer edge weights in [w_min, w_max].
synthetic_graph random_graph(std::uint64_t n, double p, EdgeWeight w_min,
                             EdgeWeight w_max, std::uint64_t seed);

// Independent second-pass modularity evaluation straight from the file: own
// accumulation of intra-cluster weights, volumes and m. Cross-check for the
// incremental path.
double audit_modularity(const std::string& graph_path, std::span<const ClusterID> assignments,
                        bool sanitize = false);

struct run_stats {
    std::string mode;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double modularity = 0.0;
    std::uint64_t clusters = 0;
    double stream_seconds = -1.0;   // < 0: phase not run
    double evo_seconds = -1.0;
    double ls_seconds = -1.0;
    std::uint64_t ls_rounds = 0;
    std::uint64_t peak_memory_bytes = 0;
    double nmi_score = -1.0;        // < 0: not evaluated
    double audit_modularity = -2.0; // < -1: not evaluated
};

std::string to_json(const run_stats& stats);
std::string to_key_values(const run_stats& stats);

} // namespace sgc
