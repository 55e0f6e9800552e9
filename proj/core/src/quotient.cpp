/******************************************************************************
 * quotient.cpp
 *****************************************************************************/

#include "sgc/quotient.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "sgc/graph_io.hpp"

namespace sgc {

namespace {

std::uint64_t pack_pair(ClusterID a, ClusterID b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t hash_key(std::uint64_t key) {
    // splitmix64 finalizer
    key += 0x9e3779b97f4a7c15ull;
    key = (key ^ (key >> 30)) * 0xbf58476d1ce4e5b9ull;
    key = (key ^ (key >> 27)) * 0x94d049bb133111ebull;
    return key ^ (key >> 31);
}

} // namespace

quotient_edge_accumulator::quotient_edge_accumulator(std::uint64_t expected_pairs) {
    const std::uint64_t capacity = std::bit_ceil(std::max<std::uint64_t>(16, expected_pairs * 2));
    keys_.assign(capacity, kEmpty);
    values_.assign(capacity, 0);
}

void quotient_edge_accumulator::add(ClusterID a, ClusterID b, EdgeWeight w) {
    if (2 * (count_ + 1) > keys_.size()) grow();
    const std::uint64_t key = pack_pair(a, b);
    const std::uint64_t mask = keys_.size() - 1;
    std::uint64_t slot = hash_key(key) & mask;
    while (keys_[slot] != kEmpty && keys_[slot] != key) slot = (slot + 1) & mask;
    if (keys_[slot] == kEmpty) {
        keys_[slot] = key;
        ++count_;
    }
    values_[slot] += w;
}

void quotient_edge_accumulator::grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
    std::vector<EdgeWeight> old_values(values_.size() * 2, 0);
    old_keys.swap(keys_);
    old_values.swap(values_);
    const std::uint64_t mask = keys_.size() - 1;
    for (std::uint64_t i = 0; i < old_keys.size(); ++i) {
        if (old_keys[i] == kEmpty) continue;
        std::uint64_t slot = hash_key(old_keys[i]) & mask;
        while (keys_[slot] != kEmpty) slot = (slot + 1) & mask;
        keys_[slot] = old_keys[i];
        values_[slot] = old_values[i];
    }
}

void accumulate_edges(const node_record& v, const clustering_state& state,
                      quotient_edge_accumulator& acc) {
    const ClusterID cv = state.assignment(v.id);
    for (const auto& [u, w] : v.neighbors) {
        if (u >= v.id) continue;  // accumulated when the later endpoint streams
        const ClusterID cu = state.assignment(u);
        acc.add(cu, cv, cu == cv ? 2 * w : w);
    }
}

quotient_graph finalize(const quotient_edge_accumulator& acc, const clustering_state& state) {
    const std::uint64_t n = state.node_count();
    quotient_graph qg;
    qg.dense_id.assign(n, kNoCluster);
    qg.cluster_id.reserve(state.num_clusters());
    for (std::uint64_t c = 0; c < n; ++c) {
        if (state.cluster_size(static_cast<ClusterID>(c)) > 0) {
            qg.dense_id[c] = static_cast<ClusterID>(qg.cluster_id.size());
            qg.cluster_id.push_back(static_cast<ClusterID>(c));
        }
    }
    const std::uint64_t supernodes = qg.cluster_id.size();

    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    edges.reserve(acc.pair_count());
    std::vector<EdgeWeight> self_loops(supernodes, 0);
    acc.for_each([&](ClusterID a, ClusterID b, EdgeWeight w) {
        const ClusterID da = qg.dense_id[a];
        const ClusterID db = qg.dense_id[b];
        assert(da != kNoCluster && db != kNoCluster);
        if (da == db)
            self_loops[da] = w;
        else
            edges.emplace_back(da, db, w);
    });
    std::sort(edges.begin(), edges.end());

    std::vector<NodeWeight> node_weights(supernodes);
    for (std::uint64_t i = 0; i < supernodes; ++i)
        node_weights[i] = state.cluster_size(qg.cluster_id[i]);

    qg.graph = weighted_graph::build(supernodes, edges, std::move(self_loops),
                                     std::move(node_weights));
    return qg;
}

double quotient_modularity(const quotient_graph& qg, std::span<const ClusterID> partition) {
    return graph_modularity(qg.graph, partition);
}

void project(const quotient_graph& qg, std::span<const ClusterID> partition,
             clustering_state& state) {
    assert(partition.size() == qg.graph.node_count());
    const std::vector<ClusterID> dense = canonicalize_partition(partition);
    const std::uint64_t n = state.node_count();

    std::vector<EdgeWeight> volume(n, 0);
    std::vector<std::uint32_t> size(n, 0);
    std::uint32_t num_clusters = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        const auto cluster = static_cast<ClusterID>(c);
        if (state.cluster_size(cluster) == 0) continue;
        const ClusterID target = dense[qg.dense_id[cluster]];
        volume[target] += state.cluster_volume(cluster);
        if (size[target] == 0) ++num_clusters;
        size[target] += state.cluster_size(cluster);
    }

    std::vector<ClusterID> assignments(n);
    for (std::uint64_t v = 0; v < n; ++v)
        assignments[v] = dense[qg.dense_id[state.assignment(static_cast<NodeID>(v))]];

    state.replace(std::move(assignments), std::move(volume), std::move(size), num_clusters);
}

contraction contract(const weighted_graph& g, std::span<const ClusterID> partition) {
    assert(partition.size() == g.node_count());
    contraction result;
    result.node_to_super = canonicalize_partition(partition);
    const std::uint64_t supernodes = count_clusters(result.node_to_super);

    quotient_edge_accumulator acc(g.undirected_edge_count() / 2 + 1);
    std::vector<EdgeWeight> self_loops(supernodes, 0);
    std::vector<NodeWeight> node_weights(supernodes, 0);
    for (NodeID v = 0; v < g.node_count(); ++v) {
        const ClusterID cv = result.node_to_super[v];
        self_loops[cv] += g.self_loop(v);
        node_weights[cv] += g.node_weight(v);
        for (const auto& e : g.neighbors(v)) {
            if (e.target >= v) continue;
            const ClusterID cu = result.node_to_super[e.target];
            acc.add(cu, cv, cu == cv ? 2 * e.weight : e.weight);
        }
    }

    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    edges.reserve(acc.pair_count());
    acc.for_each([&](ClusterID a, ClusterID b, EdgeWeight w) {
        if (a == b)
            self_loops[a] += w;
        else
            edges.emplace_back(a, b, w);
    });
    std::sort(edges.begin(), edges.end());

    result.graph = weighted_graph::build(supernodes, edges, std::move(self_loops),
                                         std::move(node_weights));
    return result;
}

void dump_metis(const std::string& path, const weighted_graph& g) {
    std::vector<std::vector<std::pair<NodeID, EdgeWeight>>> adjacency(g.node_count());
    for (NodeID v = 0; v < g.node_count(); ++v) {
        if (g.self_loop(v) > 0) adjacency[v].emplace_back(v, g.self_loop(v));
        for (const auto& e : g.neighbors(v)) adjacency[v].emplace_back(e.target, e.weight);
        std::sort(adjacency[v].begin(), adjacency[v].end());
    }
    write_metis(path, adjacency, /*edge_weights=*/true);
}

} // namespace sgc
