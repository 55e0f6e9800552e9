/******************************************************************************
 * louvain.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weighted_graph.hpp"

namespace sgc {

struct louvain_config {
    std::uint64_t seed = 0;
    int max_levels = 10;
    double min_sweep_gain = 1e-12;
};

// Seeded multi-level modularity optimizer: local-move sweeps in shuffled node
// order until no improving move, then contraction and recursion. The returned
// partition never has lower modularity than init. Pure function of
// (g, init, cfg); safe to call concurrently on a shared graph.
std::vector<ClusterID> louvain(const weighted_graph& g, std::span<const ClusterID> init,
                               const louvain_config& cfg);

// Sequential label propagation from singleton labels, visiting nodes in
// seeded random order; each node adopts the neighbor label of maximum
// incident weight, ties broken by seeded coin. Diversity source for the
// memetic population.
std::vector<ClusterID> label_propagation(const weighted_graph& g, int rounds,
                                         std::uint64_t seed);

} // namespace sgc
