/******************************************************************************
 * clustering_state.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace sgc {

// Per-node cluster assignments plus per-cluster volumes and sizes. Cluster
// ids live in [0, n): during the first pass they are the node ids of founding
// singletons; after quotient projection they are dense quotient cluster ids.
// Volumes are exact integers; floating point enters only at gain evaluation.
class clustering_state {
public:
    clustering_state() = default;

    // Singleton clustering C[v] = v with volumes still unaccounted; each
    // node's degree is added when it arrives in the stream (add_degree).
    static clustering_state singletons(std::uint64_t n, EdgeWeight total_weight);

    // Rebuilds aggregates from a fixed assignment; degrees[v] = weighted
    // degree of node v.
    static clustering_state from_assignment(std::vector<ClusterID> assignments,
                                            std::span<const EdgeWeight> degrees,
                                            EdgeWeight total_weight);

    std::uint64_t node_count() const { return assignments_.size(); }
    ClusterID assignment(NodeID v) const { return assignments_[v]; }
    std::span<const ClusterID> assignments() const { return assignments_; }
    EdgeWeight cluster_volume(ClusterID c) const { return volume_[c]; }
    std::uint32_t cluster_size(ClusterID c) const { return size_[c]; }
    EdgeWeight total_weight() const { return total_weight_; }
    std::uint32_t num_clusters() const { return num_clusters_; }

    // Called once per node when it arrives in the stream.
    void add_degree(NodeID v, EdgeWeight d);

    // Moves v (of weighted degree d) into cluster `to`, updating volumes,
    // sizes and the non-empty cluster count.
    void apply_move(NodeID v, ClusterID to, EdgeWeight d);

    // Wholesale replacement after quotient projection.
    void replace(std::vector<ClusterID> assignments, std::vector<EdgeWeight> volume,
                 std::vector<std::uint32_t> size, std::uint32_t num_clusters);

    bool operator==(const clustering_state&) const = default;

private:
    std::vector<ClusterID> assignments_;
    std::vector<EdgeWeight> volume_;
    std::vector<std::uint32_t> size_;
    EdgeWeight total_weight_ = 0;
    std::uint32_t num_clusters_ = 0;
};

} // namespace sgc
