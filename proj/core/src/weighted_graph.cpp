/******************************************************************************
 * weighted_graph.cpp
 *****************************************************************************/

#include "sgc/weighted_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sgc {

weighted_graph weighted_graph::build(std::uint64_t n,
                                     std::span<const std::tuple<NodeID, NodeID, EdgeWeight>> undirected_edges,
                                     std::vector<EdgeWeight> self_loops,
                                     std::vector<NodeWeight> node_weights) {
    weighted_graph g;
    if (self_loops.empty()) self_loops.assign(n, 0);
    if (node_weights.empty()) node_weights.assign(n, 1);
    assert(self_loops.size() == n && node_weights.size() == n);
    g.self_loop_ = std::move(self_loops);
    g.node_weight_ = std::move(node_weights);

    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& [u, v, w] : undirected_edges) {
        assert(u < n && v < n && w > 0);
        if (u == v) {
            g.self_loop_[u] += 2 * w;
            continue;
        }
        ++counts[u + 1];
        ++counts[v + 1];
    }
    for (std::uint64_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];
    g.adj_start_ = counts;
    g.adj_.resize(counts[n]);
    std::vector<std::uint64_t> cursor(g.adj_start_.begin(), g.adj_start_.end() - 1);
    for (const auto& [u, v, w] : undirected_edges) {
        if (u == v) continue;
        g.adj_[cursor[u]++] = {v, w};
        g.adj_[cursor[v]++] = {u, w};
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_start_[v]);
        auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_start_[v + 1]);
        std::sort(begin, end, [](const edge& a, const edge& b) { return a.target < b.target; });
    }

    g.degree_.assign(n, 0);
    EdgeWeight twice_total = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        EdgeWeight d = g.self_loop_[v];
        for (const edge& e : g.neighbors(static_cast<NodeID>(v))) d += e.weight;
        g.degree_[v] = d;
        twice_total += d;
    }
    assert(twice_total % 2 == 0);
    g.total_weight_ = twice_total / 2;
    return g;
}

weighted_graph weighted_graph::from_adjacency(
    const std::vector<std::vector<std::pair<NodeID, EdgeWeight>>>& adjacency) {
    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    for (NodeID v = 0; v < adjacency.size(); ++v) {
        for (const auto& [u, w] : adjacency[v]) {
            assert(u != v && "self entries are not expected in symmetric adjacency input");
            if (u > v) edges.emplace_back(v, u, w);
        }
    }
    return build(adjacency.size(), edges);
}

double graph_modularity(const weighted_graph& g, std::span<const ClusterID> partition) {
    if (partition.size() != g.node_count())
        throw std::invalid_argument("partition length does not match graph size");
    const EdgeWeight m = g.total_weight();
    if (m <= 0) return 0.0;

    ClusterID max_id = 0;
    for (ClusterID c : partition) max_id = std::max(max_id, c);
    std::vector<EdgeWeight> twice_intra(max_id + 1, 0);
    std::vector<EdgeWeight> volume(max_id + 1, 0);

    for (NodeID v = 0; v < g.node_count(); ++v) {
        const ClusterID c = partition[v];
        volume[c] += g.degree(v);
        twice_intra[c] += g.self_loop(v);
        for (const auto& e : g.neighbors(v))
            if (partition[e.target] == c) twice_intra[c] += e.weight;
    }

    const double dm = static_cast<double>(m);
    double q = 0.0;
    for (std::uint64_t c = 0; c <= max_id; ++c) {
        if (volume[c] == 0) continue;
        const double vol_term = static_cast<double>(volume[c]) / (2.0 * dm);
        q += static_cast<double>(twice_intra[c]) / (2.0 * dm) - vol_term * vol_term;
    }
    return q;
}

std::vector<ClusterID> canonicalize_partition(std::span<const ClusterID> partition) {
    ClusterID max_id = 0;
    for (ClusterID c : partition) max_id = std::max(max_id, c);
    std::vector<ClusterID> remap(max_id + 1, kNoCluster);
    std::vector<ClusterID> out(partition.size());
    ClusterID next = 0;
    for (std::size_t v = 0; v < partition.size(); ++v) {
        ClusterID& slot = remap[partition[v]];
        if (slot == kNoCluster) slot = next++;
        out[v] = slot;
    }
    return out;
}

std::uint64_t count_clusters(std::span<const ClusterID> partition) {
    ClusterID max_id = 0;
    for (ClusterID c : partition) max_id = std::max(max_id, c);
    std::vector<bool> seen(max_id + 1, false);
    std::uint64_t count = 0;
    for (ClusterID c : partition) {
        if (!seen[c]) {
            seen[c] = true;
            ++count;
        }
    }
    return count;
}

bool same_partition(std::span<const ClusterID> a, std::span<const ClusterID> b) {
    if (a.size() != b.size()) return false;
    return canonicalize_partition(a) == canonicalize_partition(b);
}

} // namespace sgc
