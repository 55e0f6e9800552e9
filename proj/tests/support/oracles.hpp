/******************************************************************************
 * oracles.hpp
 *
 * Test-only reference implementations, kept independent of the library code
 * paths they are used to check.
 *****************************************************************************/

#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "sgc/evaluation.hpp"
#include "sgc/types.hpp"
#include "sgc/weighted_graph.hpp"

namespace sgc::test {

// Plain-definition modularity from an explicit edge list. `self_loops` uses
// the library's quotient convention (l = twice the intra weight): l counts
// once toward the degree and l/2 toward intra weight and m.
inline double brute_modularity(std::uint64_t n,
                               std::span<const std::tuple<NodeID, NodeID, EdgeWeight>> edges,
                               std::span<const EdgeWeight> self_loops,
                               std::span<const ClusterID> partition) {
    std::vector<double> degree(n, 0.0);
    double two_m = 0.0;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (!self_loops.empty()) {
            degree[v] += static_cast<double>(self_loops[v]);
            two_m += static_cast<double>(self_loops[v]);
        }
    }
    for (const auto& [u, v, w] : edges) {
        degree[u] += static_cast<double>(w);
        degree[v] += static_cast<double>(w);
        two_m += 2.0 * static_cast<double>(w);
    }
    if (two_m == 0.0) return 0.0;
    const double m = two_m / 2.0;

    ClusterID max_id = 0;
    for (ClusterID c : partition) max_id = std::max(max_id, c);
    std::vector<double> intra(max_id + 1, 0.0);
    std::vector<double> volume(max_id + 1, 0.0);
    for (std::uint64_t v = 0; v < n; ++v) {
        volume[partition[v]] += degree[v];
        if (!self_loops.empty()) intra[partition[v]] += static_cast<double>(self_loops[v]) / 2.0;
    }
    for (const auto& [u, v, w] : edges)
        if (partition[u] == partition[v]) intra[partition[u]] += static_cast<double>(w);

    double q = 0.0;
    for (std::size_t c = 0; c <= max_id; ++c) {
        const double vol_term = volume[c] / (2.0 * m);
        q += intra[c] / m - vol_term * vol_term;
    }
    return q;
}

inline std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edge_list(const synthetic_graph& g) {
    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    for (NodeID v = 0; v < g.node_count; ++v)
        for (const auto& [u, w] : g.adjacency[v])
            if (u > v) edges.emplace_back(v, u, w);
    return edges;
}

inline std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edge_list(const weighted_graph& g) {
    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    for (NodeID v = 0; v < g.node_count(); ++v)
        for (const auto& e : g.neighbors(v))
            if (e.target > v) edges.emplace_back(v, e.target, e.weight);
    return edges;
}

inline std::vector<EdgeWeight> self_loops(const weighted_graph& g) {
    std::vector<EdgeWeight> selfs(g.node_count());
    for (NodeID v = 0; v < g.node_count(); ++v) selfs[v] = g.self_loop(v);
    return selfs;
}

inline double brute_modularity(const synthetic_graph& g, std::span<const ClusterID> partition) {
    return brute_modularity(g.node_count, edge_list(g), {}, partition);
}

inline double brute_modularity(const weighted_graph& g, std::span<const ClusterID> partition) {
    return brute_modularity(g.node_count(), edge_list(g), self_loops(g), partition);
}

inline std::vector<EdgeWeight> degrees(const synthetic_graph& g) {
    std::vector<EdgeWeight> d(g.node_count, 0);
    for (NodeID v = 0; v < g.node_count; ++v)
        for (const auto& [u, w] : g.adjacency[v]) d[v] += w;
    return d;
}

// Enumerates every partition of [0, n) as restricted growth strings.
template <typename F>
inline void enumerate_partitions(std::uint64_t n, F&& f) {
    std::vector<ClusterID> rgs(n, 0);
    const auto recurse = [&](auto&& self, std::uint64_t pos, ClusterID max_used) -> void {
        if (pos == n) {
            f(std::span<const ClusterID>(rgs));
            return;
        }
        for (ClusterID c = 0; c <= max_used + 1 && c < n; ++c) {
            rgs[pos] = c;
            self(self, pos + 1, std::max(max_used, c));
        }
    };
    assert(n >= 1);
    rgs[0] = 0;
    recurse(recurse, 1, 0);
}

// Exhaustive modularity optimum; feasible for n <= 10 or so.
inline double optimal_modularity(const weighted_graph& g) {
    double best = -1.0;
    enumerate_partitions(g.node_count(), [&](std::span<const ClusterID> partition) {
        best = std::max(best, brute_modularity(g, partition));
    });
    return best;
}

inline std::vector<ClusterID> random_partition(std::uint64_t n, std::uint64_t max_clusters,
                                               std::mt19937_64& rng) {
    std::uniform_int_distribution<ClusterID> pick(0, static_cast<ClusterID>(max_clusters - 1));
    std::vector<ClusterID> partition(n);
    for (auto& c : partition) c = pick(rng);
    return canonicalize_partition(partition);
}

} // namespace sgc::test
