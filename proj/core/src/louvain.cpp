/******************************************************************************
 * louvain.cpp
 *****************************************************************************/

#include "sgc/louvain.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "sgc/modularity.hpp"
#include "sgc/quotient.hpp"

namespace sgc {

namespace {

// One-level local moving: sweeps in shuffled order until a full sweep gains
// less than min_sweep_gain. Mutates the partition in place.
void local_moves(const weighted_graph& g, std::vector<ClusterID>& part,
                 std::mt19937_64& rng, double min_sweep_gain) {
    const std::uint64_t n = g.node_count();
    const EdgeWeight m = g.total_weight();
    if (m <= 0 || n == 0) return;

    std::vector<EdgeWeight> volume(n, 0);
    for (NodeID v = 0; v < n; ++v) volume[part[v]] += g.degree(v);

    std::vector<NodeID> order(n);
    std::iota(order.begin(), order.end(), NodeID{0});

    std::vector<EdgeWeight> weight_to(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<ClusterID> touched;
    std::uint32_t epoch = 0;

    const int max_sweeps = 1000;  // safety net; convergence ends sweeps in practice
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        double sweep_gain = 0.0;
        for (const NodeID v : order) {
            const auto neighbors = g.neighbors(v);
            if (neighbors.empty()) continue;
            const ClusterID cur = part[v];

            ++epoch;
            touched.clear();
            for (const auto& e : neighbors) {
                const ClusterID c = part[e.target];
                if (stamp[c] != epoch) {
                    stamp[c] = epoch;
                    weight_to[c] = 0;
                    touched.push_back(c);
                }
                weight_to[c] += e.weight;
            }
            const EdgeWeight k_cur = stamp[cur] == epoch ? weight_to[cur] : 0;
            const EdgeWeight d = g.degree(v);

            double best_gain = 0.0;
            ClusterID best = kNoCluster;
            for (const ClusterID c : touched) {
                if (c == cur) continue;
                const double gain =
                    delta_modularity(d, k_cur, weight_to[c], volume[cur], volume[c], m);
                if (gain <= 0.0) continue;
                if (best == kNoCluster || gain > best_gain || (gain == best_gain && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }
            if (best != kNoCluster) {
                volume[cur] -= d;
                volume[best] += d;
                part[v] = best;
                sweep_gain += best_gain;
            }
        }
        if (sweep_gain < min_sweep_gain) break;
    }
}

std::vector<ClusterID> louvain_level(const weighted_graph& g, std::vector<ClusterID> part,
                                     std::mt19937_64& rng, const louvain_config& cfg,
                                     int levels_left) {
    local_moves(g, part, rng, cfg.min_sweep_gain);
    part = canonicalize_partition(part);
    const std::uint64_t clusters = count_clusters(part);
    if (clusters == g.node_count() || levels_left <= 1) return part;

    const contraction ctr = contract(g, part);
    std::vector<ClusterID> sub_init(ctr.graph.node_count());
    std::iota(sub_init.begin(), sub_init.end(), ClusterID{0});
    const std::vector<ClusterID> sub =
        louvain_level(ctr.graph, std::move(sub_init), rng, cfg, levels_left - 1);

    for (std::size_t v = 0; v < part.size(); ++v) part[v] = sub[ctr.node_to_super[v]];
    return canonicalize_partition(part);
}

} // namespace

std::vector<ClusterID> louvain(const weighted_graph& g, std::span<const ClusterID> init,
                               const louvain_config& cfg) {
    assert(init.size() == g.node_count());
    std::mt19937_64 rng(cfg.seed);
    return louvain_level(g, canonicalize_partition(init), rng, cfg, std::max(cfg.max_levels, 1));
}

std::vector<ClusterID> label_propagation(const weighted_graph& g, int rounds,
                                         std::uint64_t seed) {
    assert(rounds >= 1);
    const std::uint64_t n = g.node_count();
    std::mt19937_64 rng(seed);

    std::vector<ClusterID> labels(n);
    std::iota(labels.begin(), labels.end(), ClusterID{0});
    std::vector<NodeID> order(n);
    std::iota(order.begin(), order.end(), NodeID{0});

    std::vector<EdgeWeight> weight_to(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<ClusterID> touched;
    std::vector<ClusterID> tied;
    std::uint32_t epoch = 0;

    for (int round = 0; round < rounds; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (const NodeID v : order) {
            const auto neighbors = g.neighbors(v);
            if (neighbors.empty()) continue;

            ++epoch;
            touched.clear();
            for (const auto& e : neighbors) {
                const ClusterID c = labels[e.target];
                if (stamp[c] != epoch) {
                    stamp[c] = epoch;
                    weight_to[c] = 0;
                    touched.push_back(c);
                }
                weight_to[c] += e.weight;
            }
            EdgeWeight best_weight = 0;
            tied.clear();
            for (const ClusterID c : touched) {
                if (weight_to[c] > best_weight) {
                    best_weight = weight_to[c];
                    tied.clear();
                    tied.push_back(c);
                } else if (weight_to[c] == best_weight) {
                    tied.push_back(c);
                }
            }
            ClusterID winner = tied.front();
            if (tied.size() > 1) {
                std::uniform_int_distribution<std::size_t> coin(0, tied.size() - 1);
                winner = tied[coin(rng)];
            }
            if (winner != labels[v]) {
                labels[v] = winner;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return canonicalize_partition(labels);
}

} // namespace sgc
