/******************************************************************************
 * modularity.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clustering_state.hpp"
#include "graph_io.hpp"
#include "types.hpp"

namespace sgc {

// Exact change in Newman modularity Q = sum_C [ e_C/m - (vol_C/2m)^2 ] when a
// node of weighted degree d moves from its current cluster to a candidate:
//
//   dQ = (k_can - k_cur)/m - d/(2 m^2) * (d + vol_can - vol_cur)
//
// k_cur: edge weight from the node into its current cluster, excluding itself
// k_can: edge weight from the node into the candidate cluster
// vol_cur: volume of the current cluster, including the node
// vol_can: volume of the candidate cluster, excluding the node
double delta_modularity(EdgeWeight d, EdgeWeight k_cur, EdgeWeight k_can,
                        EdgeWeight vol_cur, EdgeWeight vol_can, EdgeWeight m);

enum class stream_phase {
    first_pass,  // clusters of not-yet-streamed neighbors are not candidates
    restream     // every neighbor cluster is a candidate; no fresh ids
};

// Gain evaluation scratch, reusable across nodes. O(n) memory once; per call
// the work is proportional to deg(v).
class gain_scorer {
public:
    void resize(std::uint64_t n);

    // Returns the gain-maximizing cluster among the clusters of v's
    // neighbors, or v's current cluster when no candidate has strictly
    // positive gain. Equal gains break toward the lower cluster id.
    ClusterID compute_cluster(const node_record& v, const clustering_state& state,
                              stream_phase phase, double* gain_out = nullptr);

private:
    std::vector<EdgeWeight> weight_to_;
    std::vector<std::uint32_t> stamp_;
    std::vector<ClusterID> touched_;
    std::uint32_t epoch_ = 0;
};

// Invoked per node right after its assignment (quotient construction hook).
using stream_hook = std::function<void(const node_record&, const clustering_state&)>;

// One full pass over the node stream: starting from singletons, every node is
// assigned exactly once to the cluster maximizing modularity gain. Builds the
// stream's offset index as a side effect.
void stream_pass_assign(node_stream& stream, clustering_state& state,
                        gain_scorer& scorer, const stream_hook& hook = {});

// Full recompute of Q from one pass over the stream (rewinds it first).
// Defined as 0 on edgeless graphs.
double modularity(node_stream& stream, const clustering_state& state);

} // namespace sgc
