/******************************************************************************
 * memetic.cpp
 *****************************************************************************/

#include "sgc/memetic.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "sgc/louvain.hpp"
#include "sgc/quotient.hpp"

namespace sgc {

namespace {

std::uint64_t pack(NodeID u, NodeID v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<std::uint64_t> cut_edges(const weighted_graph& g,
                                     std::span<const ClusterID> partition) {
    std::vector<std::uint64_t> cut;
    for (NodeID v = 0; v < g.node_count(); ++v)
        for (const auto& e : g.neighbors(v))
            if (e.target > v && partition[e.target] != partition[v])
                cut.push_back(pack(v, e.target));
    std::sort(cut.begin(), cut.end());
    return cut;
}

individual refine_overlay(const weighted_graph& g, std::span<const ClusterID> ov,
                          std::mt19937_64& rng) {
    const contraction ctr = contract(g, ov);
    std::vector<ClusterID> singles(ctr.graph.node_count());
    std::iota(singles.begin(), singles.end(), ClusterID{0});
    louvain_config lc;
    lc.seed = rng();
    const std::vector<ClusterID> sub = louvain(ctr.graph, singles, lc);

    std::vector<ClusterID> expanded(g.node_count());
    for (NodeID v = 0; v < g.node_count(); ++v) expanded[v] = sub[ctr.node_to_super[v]];
    return make_individual(g, std::move(expanded));
}

} // namespace

std::vector<ClusterID> split_clusters(const weighted_graph& g,
                                      std::span<const ClusterID> partition,
                                      std::mt19937_64& rng) {
    const std::uint64_t n = g.node_count();
    std::vector<ClusterID> out = canonicalize_partition(partition);
    const std::uint64_t clusters = count_clusters(out);

    std::vector<std::vector<NodeID>> members(clusters);
    for (NodeID v = 0; v < n; ++v) members[out[v]].push_back(v);

    std::vector<std::uint8_t> visited(n, 0);
    std::vector<NodeID> queue;
    ClusterID next_id = static_cast<ClusterID>(clusters);

    for (ClusterID c = 0; c < clusters; ++c) {
        auto& nodes = members[c];
        if (nodes.size() < 2) continue;
        const std::size_t target = (nodes.size() + 1) / 2;

        std::shuffle(nodes.begin(), nodes.end(), rng);
        std::size_t restart = 0;
        std::size_t grown = 0;
        queue.clear();
        std::size_t head = 0;
        while (grown < target) {
            if (head == queue.size()) {
                while (visited[nodes[restart]]) ++restart;
                visited[nodes[restart]] = 1;
                queue.push_back(nodes[restart]);
            }
            const NodeID v = queue[head++];
            out[v] = next_id;
            ++grown;
            for (const auto& e : g.neighbors(v)) {
                if (out[e.target] == c && !visited[e.target]) {
                    visited[e.target] = 1;
                    queue.push_back(e.target);
                }
            }
        }
        ++next_id;
        for (const NodeID v : nodes) visited[v] = 0;
    }
    return canonicalize_partition(out);
}

individual make_individual(const weighted_graph& g, std::vector<ClusterID> partition) {
    individual ind;
    ind.partition = canonicalize_partition(partition);
    ind.fitness = graph_modularity(g, ind.partition);
    ind.cut_signature = cut_edges(g, ind.partition);
    return ind;
}

std::uint64_t cut_difference(const individual& a, const individual& b) {
    const auto& x = a.cut_signature;
    const auto& y = b.cut_signature;
    std::uint64_t diff = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++i;
            ++j;
        } else if (x[i] < y[j]) {
            ++i;
            ++diff;
        } else {
            ++j;
            ++diff;
        }
    }
    diff += (x.size() - i) + (y.size() - j);
    return diff;
}

std::size_t population::best_index() const {
    assert(!members.empty());
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].fitness > members[best].fitness) best = i;
    return best;
}

population init_population(const weighted_graph& g, std::size_t count, std::uint64_t seed,
                           const std::vector<ClusterID>* baseline) {
    assert(count >= 2);
    population pop;
    pop.members.reserve(count);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0 && baseline) {
            pop.members.push_back(make_individual(g, *baseline));
            continue;
        }
        const std::uint64_t lp_seed = rng();
        const std::uint64_t louvain_seed = rng();
        const int rounds = 1 + static_cast<int>(i % 3);
        const std::vector<ClusterID> lp = label_propagation(g, rounds, lp_seed);
        louvain_config lc;
        lc.seed = louvain_seed;
        pop.members.push_back(make_individual(g, louvain(g, lp, lc)));
    }
    return pop;
}

std::size_t tournament_select(const population& pop, std::mt19937_64& rng) {
    const std::size_t count = pop.members.size();
    assert(count >= 2);
    std::uniform_int_distribution<std::size_t> first(0, count - 1);
    std::uniform_int_distribution<std::size_t> second(0, count - 2);
    std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    const double fi = pop.members[i].fitness;
    const double fj = pop.members[j].fitness;
    if (fi > fj) return i;
    if (fj > fi) return j;
    return std::min(i, j);
}

std::vector<ClusterID> overlay(std::span<const ClusterID> p1, std::span<const ClusterID> p2) {
    assert(p1.size() == p2.size());
    std::vector<ClusterID> out(p1.size());
    std::unordered_map<std::uint64_t, ClusterID> seen;
    seen.reserve(p1.size());
    ClusterID next = 0;
    for (std::size_t v = 0; v < p1.size(); ++v) {
        const auto [it, inserted] = seen.try_emplace(pack(p1[v], p2[v]), next);
        if (inserted) ++next;
        out[v] = it->second;
    }
    return out;
}

individual recombine(const population& pop, const weighted_graph& g, std::mt19937_64& rng) {
    const std::size_t a = tournament_select(pop, rng);
    const std::size_t b = tournament_select(pop, rng);
    const individual& pa = pop.members[a];
    const individual& pb = pop.members[b];

    const std::vector<ClusterID> ov = overlay(pa.partition, pb.partition);
    individual offspring = refine_overlay(g, ov, rng);

    // flat recombination keeps the contract: never worse than either parent
    const individual& fitter = pa.fitness >= pb.fitness ? pa : pb;
    if (offspring.fitness < fitter.fitness) return fitter;
    return offspring;
}

individual mutate(const population& pop, const weighted_graph& g, std::mt19937_64& rng) {
    const std::size_t count = pop.members.size();
    std::uniform_int_distribution<std::size_t> first(0, count - 1);
    std::uniform_int_distribution<std::size_t> second(0, count - 2);
    std::size_t a = first(rng);
    std::size_t b = second(rng);
    if (b >= a) ++b;

    const std::vector<ClusterID> sa = split_clusters(g, pop.members[a].partition, rng);
    const std::vector<ClusterID> sb = split_clusters(g, pop.members[b].partition, rng);
    return refine_overlay(g, overlay(sa, sb), rng);
}

bool replace_most_similar(population& pop, individual offspring) {
    std::size_t best = pop.members.size();
    std::uint64_t best_diff = 0;
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (pop.members[i].fitness > offspring.fitness) continue;
        const std::uint64_t diff = cut_difference(pop.members[i], offspring);
        if (best == pop.members.size() || diff < best_diff) {
            best = i;
            best_diff = diff;
        }
    }
    if (best == pop.members.size()) return false;
    pop.members[best] = std::move(offspring);
    return true;
}

evolution_result evolve(const weighted_graph& g, const evolution_config& cfg,
                        const std::vector<ClusterID>* baseline) {
    assert(cfg.population_size >= 2);
    std::mt19937_64 rng(cfg.seed);
    population pop = init_population(g, cfg.population_size, rng(), baseline);

    individual best = pop.members[pop.best_index()];
    const auto start = std::chrono::steady_clock::now();
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    evolution_result result;
    for (;;) {
        if (cfg.max_iterations > 0) {
            if (result.iterations >= cfg.max_iterations) break;
        } else {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() >= cfg.time_budget_s) break;
        }
        individual offspring = coin(rng) < cfg.recombine_probability ? recombine(pop, g, rng)
                                                                     : mutate(pop, g, rng);
        const double fitness = offspring.fitness;
        if (replace_most_similar(pop, std::move(offspring)) && fitness > best.fitness)
            best = pop.members[pop.best_index()];
        ++result.iterations;
        ++pop.generation;
    }
    result.best_partition = std::move(best.partition);
    result.best_fitness = best.fitness;
    return result;
}

} // namespace sgc
