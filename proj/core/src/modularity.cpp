/******************************************************************************
 * modularity.cpp
 *****************************************************************************/

#include "sgc/modularity.hpp"

#include <cassert>
#include <cstdio>

namespace sgc {

double delta_modularity(EdgeWeight d, EdgeWeight k_cur, EdgeWeight k_can,
                        EdgeWeight vol_cur, EdgeWeight vol_can, EdgeWeight m) {
    assert(m > 0);
    assert(vol_cur >= d);
    const double dm = static_cast<double>(m);
    const double dd = static_cast<double>(d);
    return static_cast<double>(k_can - k_cur) / dm -
           dd / (2.0 * dm * dm) * (dd + static_cast<double>(vol_can - vol_cur));
}

void gain_scorer::resize(std::uint64_t n) {
    weight_to_.assign(n, 0);
    stamp_.assign(n, 0);
    touched_.clear();
    touched_.reserve(64);
    epoch_ = 0;
}

ClusterID gain_scorer::compute_cluster(const node_record& v, const clustering_state& state,
                                       stream_phase phase, double* gain_out) {
    const ClusterID cur = state.assignment(v.id);
    if (gain_out) *gain_out = 0.0;
    if (v.neighbors.empty()) return cur;  // isolated nodes stay put

    if (++epoch_ == 0) {                  // stamp wrap-around
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    touched_.clear();
    for (const auto& [u, w] : v.neighbors) {
        const ClusterID c = state.assignment(u);
        if (stamp_[c] != epoch_) {
            stamp_[c] = epoch_;
            weight_to_[c] = 0;
            touched_.push_back(c);
        }
        weight_to_[c] += w;
    }

    const EdgeWeight k_cur = stamp_[cur] == epoch_ ? weight_to_[cur] : 0;
    const EdgeWeight vol_cur = state.cluster_volume(cur);
    const EdgeWeight m = state.total_weight();

    double best_gain = 0.0;
    ClusterID best = kNoCluster;
    for (const ClusterID c : touched_) {
        if (c == cur) continue;
        const EdgeWeight vol_can = state.cluster_volume(c);
        // In the first pass a zero-volume cluster is the untouched singleton
        // of a node that has not streamed yet; it is not a candidate.
        if (phase == stream_phase::first_pass && vol_can == 0) continue;
        const double gain = delta_modularity(v.weighted_degree, k_cur, weight_to_[c],
                                             vol_cur, vol_can, m);
        if (gain <= 0.0) continue;
        if (best == kNoCluster || gain > best_gain || (gain == best_gain && c < best)) {
            best_gain = gain;
            best = c;
        }
    }
    if (best == kNoCluster) return cur;
    if (gain_out) *gain_out = best_gain;
    return best;
}

void stream_pass_assign(node_stream& stream, clustering_state& state,
                        gain_scorer& scorer, const stream_hook& hook) {
    assert(state.node_count() == stream.header().node_count);
    assert(state.num_clusters() == state.node_count() && "expects a fresh singleton state");
    node_record rec;
    while (stream.next(rec)) {
        state.add_degree(rec.id, rec.weighted_degree);
        const ClusterID target = scorer.compute_cluster(rec, state, stream_phase::first_pass);
        if (target != state.assignment(rec.id))
            state.apply_move(rec.id, target, rec.weighted_degree);
        if (hook) hook(rec, state);
    }
}

double modularity(node_stream& stream, const clustering_state& state) {
    const EdgeWeight m = stream.header().total_edge_weight;
    if (m <= 0) {
        std::fprintf(stderr, "warning: modularity of an edgeless graph is defined as 0\n");
        return 0.0;
    }
    const std::uint64_t n = state.node_count();
    std::vector<EdgeWeight> twice_intra(n, 0);
    std::vector<EdgeWeight> volume(n, 0);

    stream.rewind();
    node_record rec;
    while (stream.next(rec)) {
        const ClusterID c = state.assignment(rec.id);
        volume[c] += rec.weighted_degree;
        for (const auto& [u, w] : rec.neighbors)
            if (state.assignment(u) == c) twice_intra[c] += w;
    }

    const double dm = static_cast<double>(m);
    double q = 0.0;
    for (std::uint64_t c = 0; c < n; ++c) {
        if (volume[c] == 0) continue;  // empty clusters and isolated singletons contribute 0
        const double vol_term = static_cast<double>(volume[c]) / (2.0 * dm);
        q += static_cast<double>(twice_intra[c]) / (2.0 * dm) - vol_term * vol_term;
    }
    return q;
}

} // namespace sgc
