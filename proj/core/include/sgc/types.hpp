/******************************************************************************
 * types.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sgc {

using NodeID = std::uint32_t;
using ClusterID = std::uint32_t;
using EdgeWeight = std::int64_t;
using NodeWeight = std::uint64_t;

inline constexpr ClusterID kNoCluster = static_cast<ClusterID>(-1);

// One streamed node together with its full weighted neighborhood.
// Neighbors are kept sorted by target id; parallel entries are merged or
// rejected at parse time, so a target appears at most once.
struct node_record {
    NodeID id = 0;
    std::vector<std::pair<NodeID, EdgeWeight>> neighbors;
    EdgeWeight weighted_degree = 0;

    void clear() {
        id = 0;
        neighbors.clear();
        weighted_degree = 0;
    }

    bool operator==(const node_record&) const = default;
};

} // namespace sgc
