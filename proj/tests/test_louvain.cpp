/******************************************************************************
 * test_louvain.cpp
 *****************************************************************************/

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sgc/evaluation.hpp"
#include "sgc/louvain.hpp"
#include "support/oracles.hpp"

using namespace sgc;

namespace {

weighted_graph two_triangles_bridge() {
    const std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges{
        {0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, 1}};
    return weighted_graph::build(6, edges);
}

std::vector<ClusterID> singletons(std::uint64_t n) {
    std::vector<ClusterID> p(n);
    std::iota(p.begin(), p.end(), ClusterID{0});
    return p;
}

weighted_graph clique(std::uint64_t n) {
    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    for (NodeID i = 0; i < n; ++i)
        for (NodeID j = i + 1; j < n; ++j) edges.emplace_back(i, j, 1);
    return weighted_graph::build(n, edges);
}

} // namespace

TEST_SUITE("louvain") {

TEST_CASE("recovers the optimal partition of two bridged triangles") {
    const auto g = two_triangles_bridge();
    const double optimum = test::optimal_modularity(g);
    CHECK(optimum == doctest::Approx(5.0 / 14.0).epsilon(1e-12));

    const auto result = louvain(g, singletons(6), {.seed = 1});
    CHECK(graph_modularity(g, result) == doctest::Approx(optimum).epsilon(1e-12));
    CHECK(same_partition(result, std::vector<ClusterID>{0, 0, 0, 1, 1, 1}));
}

TEST_CASE("an optimal init is a fixed point") {
    const auto g = two_triangles_bridge();
    const std::vector<ClusterID> optimal{0, 0, 0, 1, 1, 1};
    const auto result = louvain(g, optimal, {.seed = 9});
    CHECK(same_partition(result, optimal));
}

TEST_CASE("never returns a worse partition than its init") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t n = 6 + rng() % 40;
        const auto sg = random_graph(n, 0.2, 1, 4, rng());
        const auto g = weighted_graph::from_adjacency(sg.adjacency);
        if (g.total_weight() == 0) continue;

        const auto init = test::random_partition(n, 1 + n / 3, rng);
        const auto result = louvain(g, init, {.seed = rng()});
        CHECK(graph_modularity(g, result) >= graph_modularity(g, init) - 1e-12);
    }
}

TEST_CASE("matches the exhaustive optimum on tiny graphs in at least 9 of 10 cases") {
    std::mt19937_64 rng(2718);
    int instances = 0;
    int matched = 0;
    while (instances < 10) {
        const std::uint64_t n = 5 + rng() % 4;  // <= 8
        const auto sg = random_graph(n, 0.45, 1, 3, rng());
        const auto g = weighted_graph::from_adjacency(sg.adjacency);
        if (g.total_weight() == 0) continue;
        ++instances;

        const double optimum = test::optimal_modularity(g);
        double best = -1.0;
        for (std::uint64_t restart = 0; restart < 10; ++restart) {
            const auto result = louvain(g, singletons(n), {.seed = restart});
            best = std::max(best, graph_modularity(g, result));
        }
        if (std::abs(best - optimum) <= 1e-9) ++matched;
    }
    CHECK(matched >= 9);
}

TEST_CASE("handles self-loops with the quotient convention") {
    // ring of 8 supernodes, self-loop 12 each (= contracted 4-clique), unit ring edges
    std::vector<std::tuple<NodeID, NodeID, EdgeWeight>> edges;
    for (NodeID i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8, 1);
    const auto g = weighted_graph::build(8, edges, std::vector<EdgeWeight>(8, 12));
    CHECK(g.total_weight() == 56);

    // supernode singletons are optimal here; louvain must not merge
    const auto result = louvain(g, singletons(8), {.seed = 3});
    CHECK(same_partition(result, singletons(8)));
    CHECK(graph_modularity(g, result) == doctest::Approx(test::optimal_modularity(g)).epsilon(1e-12));
}

TEST_CASE("label propagation unifies a clique within a few rounds") {
    const auto g = clique(6);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto labels = label_propagation(g, 5, seed);
        CHECK(count_clusters(labels) == 1);
    }
}

TEST_CASE("label propagation leaves an edgeless graph unchanged") {
    const auto g = weighted_graph::build(5, {});
    const auto labels = label_propagation(g, 3, 42);
    CHECK(labels == singletons(5));
}

TEST_CASE("label propagation seeds produce diverse partitions") {
    const auto sg = random_graph(50, 0.12, 1, 1, 1234);
    const auto g = weighted_graph::from_adjacency(sg.adjacency);
    std::set<std::vector<ClusterID>> distinct;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        distinct.insert(label_propagation(g, 2, seed));
    CHECK(distinct.size() >= 2);
}

TEST_CASE("louvain is deterministic per seed") {
    const auto sg = random_graph(40, 0.15, 1, 3, 77);
    const auto g = weighted_graph::from_adjacency(sg.adjacency);
    const auto a = louvain(g, singletons(40), {.seed = 5});
    const auto b = louvain(g, singletons(40), {.seed = 5});
    CHECK(a == b);
}

} // TEST_SUITE
