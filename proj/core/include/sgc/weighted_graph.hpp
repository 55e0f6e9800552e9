/******************************************************************************
 * weighted_graph.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "types.hpp"

namespace sgc {

// In-memory undirected weighted graph in CSR form with explicit self-loops.
// The self-loop weight l(v) follows the contraction convention: it equals
// twice the contracted intra-cluster weight, counts once toward the weighted
// degree and l/2 toward intra-cluster edge weight and the total weight m.
class weighted_graph {
public:
    struct edge {
        NodeID target;
        EdgeWeight weight;
        bool operator==(const edge&) const = default;
    };

    weighted_graph() = default;

    // undirected_edges: (u, v, w) each given once; u == v accumulates 2w into
    // the self-loop. self_loops/node_weights may be empty (zero / one each).
    static weighted_graph build(std::uint64_t n,
                                std::span<const std::tuple<NodeID, NodeID, EdgeWeight>> undirected_edges,
                                std::vector<EdgeWeight> self_loops = {},
                                std::vector<NodeWeight> node_weights = {});

    // Symmetric adjacency (both directions present, no self entries).
    static weighted_graph from_adjacency(
        const std::vector<std::vector<std::pair<NodeID, EdgeWeight>>>& adjacency);

    std::uint64_t node_count() const { return self_loop_.size(); }
    EdgeWeight total_weight() const { return total_weight_; }
    std::span<const edge> neighbors(NodeID v) const {
        return {adj_.data() + adj_start_[v], adj_.data() + adj_start_[v + 1]};
    }
    EdgeWeight self_loop(NodeID v) const { return self_loop_[v]; }
    EdgeWeight degree(NodeID v) const { return degree_[v]; }
    NodeWeight node_weight(NodeID v) const { return node_weight_[v]; }
    std::uint64_t directed_edge_count() const { return adj_.size(); }
    std::uint64_t undirected_edge_count() const { return adj_.size() / 2; }

private:
    std::vector<std::uint64_t> adj_start_;
    std::vector<edge> adj_;
    std::vector<EdgeWeight> self_loop_;
    std::vector<EdgeWeight> degree_;
    std::vector<NodeWeight> node_weight_;
    EdgeWeight total_weight_ = 0;
};

// Canonical modularity of a partition of g; self-loops contribute l/2 to the
// intra-cluster edge weight and once to volumes. 0 on edgeless graphs.
double graph_modularity(const weighted_graph& g, std::span<const ClusterID> partition);

// Renumbers partition ids densely in order of first appearance.
std::vector<ClusterID> canonicalize_partition(std::span<const ClusterID> partition);

std::uint64_t count_clusters(std::span<const ClusterID> partition);

// True when the two partitions induce the same grouping (ids may differ).
bool same_partition(std::span<const ClusterID> a, std::span<const ClusterID> b);

} // namespace sgc
