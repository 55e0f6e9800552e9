/******************************************************************************
 * clustering_state.cpp
 *****************************************************************************/

#include "sgc/clustering_state.hpp"

#include <cassert>
#include <stdexcept>

namespace sgc {

clustering_state clustering_state::singletons(std::uint64_t n, EdgeWeight total_weight) {
    clustering_state state;
    state.assignments_.resize(n);
    for (std::uint64_t v = 0; v < n; ++v) state.assignments_[v] = static_cast<ClusterID>(v);
    state.volume_.assign(n, 0);
    state.size_.assign(n, 1);
    state.total_weight_ = total_weight;
    state.num_clusters_ = static_cast<std::uint32_t>(n);
    return state;
}

clustering_state clustering_state::from_assignment(std::vector<ClusterID> assignments,
                                                   std::span<const EdgeWeight> degrees,
                                                   EdgeWeight total_weight) {
    if (assignments.size() != degrees.size())
        throw std::invalid_argument("assignment/degree length mismatch");
    const std::uint64_t n = assignments.size();
    clustering_state state;
    state.volume_.assign(n, 0);
    state.size_.assign(n, 0);
    state.total_weight_ = total_weight;
    for (std::uint64_t v = 0; v < n; ++v) {
        const ClusterID c = assignments[v];
        if (c >= n) throw std::invalid_argument("cluster id out of range");
        state.volume_[c] += degrees[v];
        if (state.size_[c]++ == 0) ++state.num_clusters_;
    }
    state.assignments_ = std::move(assignments);
    return state;
}

void clustering_state::add_degree(NodeID v, EdgeWeight d) {
    assert(v < assignments_.size());
    volume_[assignments_[v]] += d;
}

void clustering_state::apply_move(NodeID v, ClusterID to, EdgeWeight d) {
    const ClusterID from = assignments_[v];
    if (from == to) return;
    assert(volume_[from] >= d && "cluster volume underflow");
    volume_[from] -= d;
    volume_[to] += d;
    assert(size_[from] >= 1);
    if (--size_[from] == 0) --num_clusters_;
    if (size_[to]++ == 0) ++num_clusters_;
    assignments_[v] = to;
}

void clustering_state::replace(std::vector<ClusterID> assignments, std::vector<EdgeWeight> volume,
                               std::vector<std::uint32_t> size, std::uint32_t num_clusters) {
    assert(assignments.size() == assignments_.size());
    assignments_ = std::move(assignments);
    volume_ = std::move(volume);
    size_ = std::move(size);
    num_clusters_ = num_clusters;
}

} // namespace sgc
