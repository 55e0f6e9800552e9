/******************************************************************************
 * test_restream.cpp
 *****************************************************************************/

#include <doctest.h>

#include <set>
#include <random>

#include "sgc/evaluation.hpp"
#include "sgc/restream.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace sgc;
using test::temp_dir;

namespace {

clustering_state make_state(const synthetic_graph& g, std::vector<ClusterID> assignments) {
    EdgeWeight total = 0;
    for (const auto& [u, v, w] : test::edge_list(g)) total += w;
    return clustering_state::from_assignment(std::move(assignments), test::degrees(g), total);
}

// clique partition of ring_of_cliques(20, 6) with clique 0 split in half,
// mimicking a bad first pass
std::vector<ClusterID> split_first_clique(const synthetic_graph& g, std::uint32_t clique_size) {
    std::vector<ClusterID> assignments(g.truth.begin(), g.truth.end());
    ClusterID fresh = 0;
    for (const ClusterID c : assignments) fresh = std::max(fresh, c);
    ++fresh;
    for (NodeID v = 0; v < clique_size / 2; ++v) assignments[v] = fresh;
    return assignments;
}

} // namespace

TEST_SUITE("restream") {

TEST_CASE("round gain check") {
    CHECK(round_gain_check(0.06, 1.0, 0.05));
    CHECK(!round_gain_check(0.04, 1.0, 0.05));
    SUBCASE("non-positive totals fall back to any positive gain") {
        CHECK(round_gain_check(0.01, -0.2, 0.05));
        CHECK(round_gain_check(0.01, 0.0, 0.05));
        CHECK(!round_gain_check(0.0, -0.2, 0.05));
    }
}

TEST_CASE("a locally optimal state passes through unchanged in one round") {
    temp_dir dir;
    const auto g = ring_of_cliques(5, 4);
    const auto path = test::write_graph(dir, "ring.graph", g);
    node_stream stream(path);

    auto state = make_state(g, std::vector<ClusterID>(g.truth.begin(), g.truth.end()));
    const auto before = state;
    gain_scorer scorer;
    scorer.resize(g.node_count);

    const auto report = restream_local_search(stream, state, scorer, {});
    REQUIRE(report.rounds.size() == 1);
    CHECK(report.rounds[0].moves == 0);
    CHECK(report.rounds[0].io_reads == g.node_count);
    CHECK(state == before);
    CHECK(report.final_modularity == doctest::Approx(report.initial_modularity));
}

TEST_CASE("a split clique is healed back to the closed form optimum") {
    temp_dir dir;
    const auto g = ring_of_cliques(20, 6);
    const auto path = test::write_graph(dir, "ring.graph", g);
    node_stream stream(path);

    auto state = make_state(g, split_first_clique(g, 6));
    gain_scorer scorer;
    scorer.resize(g.node_count);

    ls_config cfg;
    cfg.gain_floor = 0.0;  // run to convergence
    const auto report = restream_local_search(stream, state, scorer, cfg);

    CHECK(report.final_modularity > report.initial_modularity);
    CHECK(modularity(stream, state) == doctest::Approx(0.8875).epsilon(1e-9));
    CHECK(same_partition(state.assignments(), g.truth));
    for (const auto& round : report.rounds) CHECK(round.delta_q >= 0.0);
}

TEST_CASE("initial modularity comes from a full evaluation") {
    temp_dir dir;
    const auto g = ring_of_cliques(4, 4);
    const auto path = test::write_graph(dir, "ring.graph", g);
    node_stream stream(path);
    auto assignments = std::vector<ClusterID>(g.truth.begin(), g.truth.end());
    auto state = make_state(g, assignments);
    gain_scorer scorer;
    scorer.resize(g.node_count);
    const auto report = restream_local_search(stream, state, scorer, {});
    CHECK(report.initial_modularity == doctest::Approx(test::brute_modularity(g, assignments)));
}

TEST_CASE("a gain floor of 1.0 stops after the full round") {
    temp_dir dir;
    const auto g = ring_of_cliques(20, 6);
    const auto path = test::write_graph(dir, "ring.graph", g);
    node_stream stream(path);

    auto state = make_state(g, split_first_clique(g, 6));
    gain_scorer scorer;
    scorer.resize(g.node_count);

    ls_config cfg;
    cfg.gain_floor = 1.0;
    const auto report = restream_local_search(stream, state, scorer, cfg);
    CHECK(report.rounds.size() == 1);
}

TEST_CASE("no new cluster ids appear during local search") {
    temp_dir dir;
    std::mt19937_64 rng(424);
    for (int instance = 0; instance < 5; ++instance) {
        const auto g = planted_partition(4, 64, 0.3, 0.03, rng());
        const auto path = test::write_graph(dir, "pp.graph", g);
        node_stream stream(path);

        const auto start_partition = test::random_partition(g.node_count, 10, rng);
        auto state = make_state(g, start_partition);
        gain_scorer scorer;
        scorer.resize(g.node_count);

        const std::set<ClusterID> before(start_partition.begin(), start_partition.end());
        ls_config cfg;
        cfg.gain_floor = 0.0;
        const auto report = restream_local_search(stream, state, scorer, cfg);

        for (const ClusterID c : state.assignments()) CHECK(before.contains(c));
        CHECK(modularity(stream, state) >=
              test::brute_modularity(g, start_partition) - 1e-12);
        for (const auto& round : report.rounds) CHECK(round.delta_q >= 0.0);
    }
}

TEST_CASE("later rounds only read the active nodes from disk") {
    temp_dir dir;
    const auto g = ring_of_cliques(20, 6);
    const auto path = test::write_graph(dir, "ring.graph", g);
    node_stream stream(path);

    auto state = make_state(g, split_first_clique(g, 6));
    gain_scorer scorer;
    scorer.resize(g.node_count);

    ls_config cfg;
    cfg.gain_floor = 0.0;
    const auto report = restream_local_search(stream, state, scorer, cfg);
    REQUIRE(report.rounds.size() >= 2);

    CHECK(report.rounds[0].io_reads == g.node_count);
    std::uint64_t selective = 0;
    for (std::size_t r = 1; r < report.rounds.size(); ++r) {
        CHECK(report.rounds[r].io_reads == report.rounds[r].visited);
        selective += report.rounds[r].io_reads;
    }
    // the stream-level counter proves nothing else was read selectively
    CHECK(stream.selective_reads() == selective);
}

TEST_CASE("accumulated gains match the exact modularity change") {
    temp_dir dir;
    std::mt19937_64 rng(11);
    const auto g = random_graph(60, 0.12, 1, 4, 17);
    const auto path = test::write_graph(dir, "rand.graph", g, true);
    node_stream stream(path);

    const auto start = test::random_partition(g.node_count, 12, rng);
    auto state = make_state(g, start);
    gain_scorer scorer;
    scorer.resize(g.node_count);

    ls_config cfg;
    cfg.gain_floor = 0.0;
    const auto report = restream_local_search(stream, state, scorer, cfg);
    const double q_exact = modularity(stream, state);
    CHECK(report.final_modularity == doctest::Approx(q_exact).epsilon(1e-9));
}

} // TEST_SUITE
