/******************************************************************************
 * quotient.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustering_state.hpp"
#include "types.hpp"
#include "weighted_graph.hpp"

namespace sgc {

// Flat open-addressing map from normalized (cluster, cluster) pairs to
// accumulated edge weight. O(|E_Q|) memory.
class quotient_edge_accumulator {
public:
    explicit quotient_edge_accumulator(std::uint64_t expected_pairs = 16);

    void add(ClusterID a, ClusterID b, EdgeWeight w);
    std::uint64_t pair_count() const { return count_; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t i = 0; i < keys_.size(); ++i) {
            if (keys_[i] != kEmpty) {
                f(static_cast<ClusterID>(keys_[i] >> 32),
                  static_cast<ClusterID>(keys_[i] & 0xffffffffu), values_[i]);
            }
        }
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    void grow();

    std::vector<std::uint64_t> keys_;
    std::vector<EdgeWeight> values_;
    std::uint64_t count_ = 0;
};

// Streaming quotient update (invoked per node, after its assignment): folds
// the edges of v toward already streamed neighbors (u < v) into the
// accumulator. Intra-cluster edges count twice, so the accumulated self pair
// is the stored self-loop weight l = 2 * intra.
void accumulate_edges(const node_record& v, const clustering_state& state,
                      quotient_edge_accumulator& acc);

// Contracted clustering: one supernode per non-empty cluster, weighted by
// member count; quotient degree of a supernode equals the cluster volume in
// the input graph, and the quotient total weight equals m.
struct quotient_graph {
    weighted_graph graph;
    std::vector<ClusterID> cluster_id;  // dense supernode -> original cluster id
    std::vector<ClusterID> dense_id;    // original cluster id -> dense supernode
};

quotient_graph finalize(const quotient_edge_accumulator& acc, const clustering_state& state);

// Modularity of a partition of the supernodes; by construction equal to the
// input-graph modularity of the expanded clustering.
double quotient_modularity(const quotient_graph& qg, std::span<const ClusterID> partition);

// Pushes a supernode partition back down: each input node's cluster becomes
// the (densely renumbered) quotient cluster of its supernode; volumes and
// sizes are rebuilt from the per-cluster aggregates.
void project(const quotient_graph& qg, std::span<const ClusterID> partition,
             clustering_state& state);

// In-memory contraction by a partition; same self-loop convention as the
// streaming path. Dense supernode ids are assigned in node order.
struct contraction {
    weighted_graph graph;
    std::vector<ClusterID> node_to_super;
};

contraction contract(const weighted_graph& g, std::span<const ClusterID> partition);

// Debug dump in METIS format (fmt=1); self-loops are emitted as explicit
// self entries.
void dump_metis(const std::string& path, const weighted_graph& g);

} // namespace sgc
