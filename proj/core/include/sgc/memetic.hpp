/******************************************************************************
 * memetic.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "weighted_graph.hpp"

namespace sgc {

// One clustering of the quotient graph with cached modularity and the sorted
// set of inter-cluster edges (packed u<v pairs) used for similarity.
struct individual {
    std::vector<ClusterID> partition;
    double fitness = 0.0;
    std::vector<std::uint64_t> cut_signature;
};

individual make_individual(const weighted_graph& g, std::vector<ClusterID> partition);

std::uint64_t cut_difference(const individual& a, const individual& b);

struct population {
    std::vector<individual> members;
    std::uint64_t generation = 0;

    std::size_t best_index() const;
};

// P individuals seeded from label propagation + Louvain with per-individual
// sub-seeds; when given, `baseline` occupies slot 0 as-is (the projected
// first-pass clustering, i.e. the singleton supernode partition).
population init_population(const weighted_graph& g, std::size_t count, std::uint64_t seed,
                           const std::vector<ClusterID>* baseline = nullptr);

// Two distinct uniform draws; the fitter one wins, ties toward the lower index.
std::size_t tournament_select(const population& pop, std::mt19937_64& rng);

// Partition intersection: nodes share an overlay cluster iff they share a
// cluster in both inputs. Result ids are dense in first-appearance order.
std::vector<ClusterID> overlay(std::span<const ClusterID> p1, std::span<const ClusterID> p2);

// Tournament-selected parents, overlay contraction, Louvain refinement on the
// contracted graph, expansion. Falls back to the fitter parent, so the
// offspring is never worse than either parent.
individual recombine(const population& pop, const weighted_graph& g, std::mt19937_64& rng);

// Splits every cluster of size >= 2 into blocks of ceil(s/2) and floor(s/2)
// members, growing the first block breadth-first from a random member
// (restarting from another random member when the cluster is disconnected).
std::vector<ClusterID> split_clusters(const weighted_graph& g,
                                      std::span<const ClusterID> partition,
                                      std::mt19937_64& rng);

// Splits the clusters of two uniformly drawn individuals, then recombines the
// two modified partitions (without the parent-fitness floor).
individual mutate(const population& pop, const weighted_graph& g, std::mt19937_64& rng);

// If any member is dominated (fitness <= offspring's), replaces the dominated
// member with the smallest cut-signature symmetric difference; otherwise the
// offspring is discarded. Returns whether it was accepted.
bool replace_most_similar(population& pop, individual offspring);

struct evolution_config {
    std::size_t population_size = 10;
    double time_budget_s = 15.0;
    std::uint64_t max_iterations = 0;   // > 0: deterministic budget, wall clock ignored
    std::uint64_t seed = 1;
    double recombine_probability = 0.9;
};

struct evolution_result {
    std::vector<ClusterID> best_partition;
    double best_fitness = 0.0;
    std::uint64_t iterations = 0;
};

evolution_result evolve(const weighted_graph& g, const evolution_config& cfg,
                        const std::vector<ClusterID>* baseline = nullptr);

} // namespace sgc
