/******************************************************************************
 * restream.cpp
 *****************************************************************************/

#include "sgc/restream.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>

namespace sgc {

bool round_gain_check(double delta_q, double q_total, double x) {
    if (q_total <= 0.0) return delta_q > 0.0;
    return delta_q >= x * q_total;
}

ls_report restream_local_search(node_stream& stream, clustering_state& state,
                                gain_scorer& scorer, const ls_config& cfg) {
    assert(cfg.gain_floor >= 0.0 && cfg.gain_floor <= 1.0);
    assert(cfg.time_cutoff_s > 0.0);
    const std::uint64_t n = state.node_count();

    ls_report report;
    report.initial_modularity = modularity(stream, state);
    double q_total = report.initial_modularity;

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    std::vector<NodeID> active;
    std::vector<NodeID> next_active;
    std::vector<std::uint8_t> queued(n, 0);
    node_record rec;

    for (int round = 1;; ++round) {
        ls_round_stats rs;
        double round_gain = 0.0;

        const auto visit = [&](const node_record& r) {
            ++rs.visited;
            double gain = 0.0;
            const ClusterID target = scorer.compute_cluster(r, state, stream_phase::restream, &gain);
            if (target == state.assignment(r.id)) return;
            state.apply_move(r.id, target, r.weighted_degree);
            round_gain += gain;
            ++rs.moves;
            // the mover re-enters the active set together with its neighbors
            if (!queued[r.id]) {
                queued[r.id] = 1;
                next_active.push_back(r.id);
            }
            for (const auto& [u, w] : r.neighbors) {
                if (!queued[u]) {
                    queued[u] = 1;
                    next_active.push_back(u);
                }
            }
        };

        if (round == 1) {
            stream.rewind();
            while (stream.next(rec)) {
                visit(rec);
                ++rs.io_reads;
            }
        } else {
            for (const NodeID v : active) {
                stream.read_node_at(v, rec);
                visit(rec);
                ++rs.io_reads;
            }
        }

        for (const NodeID v : next_active) queued[v] = 0;
        std::sort(next_active.begin(), next_active.end());
        q_total += round_gain;
        rs.delta_q = round_gain;
        rs.elapsed_s = elapsed();
        report.rounds.push_back(rs);
        if (cfg.verbose)
            std::fprintf(stderr, "ls round %d: visited=%llu moves=%llu dQ=%.8f elapsed=%.2fs\n",
                         round, static_cast<unsigned long long>(rs.visited),
                         static_cast<unsigned long long>(rs.moves), round_gain, rs.elapsed_s);

        active.swap(next_active);
        next_active.clear();
        if (active.empty()) break;
        if (!round_gain_check(round_gain, q_total, cfg.gain_floor)) break;
        if (rs.elapsed_s >= cfg.time_cutoff_s) {
            report.hit_time_cutoff = true;
            break;
        }
    }

    report.final_modularity = q_total;
    return report;
}

} // namespace sgc
