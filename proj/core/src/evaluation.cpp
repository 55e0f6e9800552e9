/******************************************************************************
 * evaluation.cpp
 *****************************************************************************/

#include "sgc/evaluation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "sgc/graph_io.hpp"
#include "sgc/weighted_graph.hpp"

#include <json.hpp>

namespace sgc {

namespace {

double entropy(const std::vector<std::uint64_t>& counts, double n) {
    double h = 0.0;
    for (const std::uint64_t c : counts) {
        if (c == 0) continue;  // 0 log 0 = 0
        const double p = static_cast<double>(c) / n;
        h -= p * std::log(p);
    }
    return h;
}

// Calls f(t) for every success of a Bernoulli(p) process over pair indices
// [0, total); geometric gap sampling keeps the cost proportional to the
// number of successes.
template <typename F>
void sample_pairs(std::uint64_t total, double p, std::mt19937_64& rng, F&& f) {
    if (total == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t t = 0; t < total; ++t) f(t);
        return;
    }
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double denom = std::log1p(-p);
    double position = -1.0;
    for (;;) {
        const double gap = std::floor(std::log1p(-u01(rng)) / denom);
        position += gap + 1.0;
        if (position >= static_cast<double>(total)) break;
        f(static_cast<std::uint64_t>(position));
    }
}

// Decodes the t-th pair (i < j) of [0, nn) in lexicographic order.
std::pair<std::uint64_t, std::uint64_t> decode_triangular(std::uint64_t t, std::uint64_t nn) {
    const auto row_start = [nn](std::uint64_t i) { return i * nn - i * (i + 1) / 2; };
    const double disc = (2.0 * static_cast<double>(nn) - 1.0);
    std::uint64_t i = static_cast<std::uint64_t>(
        (disc - std::sqrt(disc * disc - 8.0 * static_cast<double>(t))) / 2.0);
    while (i + 1 < nn && row_start(i + 1) <= t) ++i;
    while (i > 0 && row_start(i) > t) --i;
    const std::uint64_t j = i + 1 + (t - row_start(i));
    return {i, j};
}

void push_edge(synthetic_graph& g, NodeID u, NodeID v, EdgeWeight w) {
    g.adjacency[u].emplace_back(v, w);
    g.adjacency[v].emplace_back(u, w);
    ++g.edge_count;
}

void sort_adjacency(synthetic_graph& g) {
    for (auto& neighbors : g.adjacency) std::sort(neighbors.begin(), neighbors.end());
}

} // namespace

double nmi(std::span<const ClusterID> predicted, std::span<const ClusterID> truth) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("nmi: partition length mismatch");
    assert(!predicted.empty());
    const double n = static_cast<double>(predicted.size());

    const std::vector<ClusterID> x = canonicalize_partition(predicted);
    const std::vector<ClusterID> y = canonicalize_partition(truth);
    if (x == y) return 1.0;  // identical up to relabeling

    const std::uint64_t kx = count_clusters(x);
    const std::uint64_t ky = count_clusters(y);
    std::vector<std::uint64_t> a(kx, 0);
    std::vector<std::uint64_t> b(ky, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> joint;
    joint.reserve(predicted.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        ++a[x[v]];
        ++b[y[v]];
        ++joint[(static_cast<std::uint64_t>(x[v]) << 32) | y[v]];
    }

    double information = 0.0;
    for (const auto& [key, count] : joint) {
        const std::uint64_t i = key >> 32;
        const std::uint64_t j = key & 0xffffffffu;
        const double pij = static_cast<double>(count) / n;
        information += pij * std::log(pij * n * n / (static_cast<double>(a[i]) * static_cast<double>(b[j])));
    }
    const double hx = entropy(a, n);
    const double hy = entropy(b, n);
    if (hx + hy == 0.0) return 1.0;
    return std::clamp(information / ((hx + hy) / 2.0), 0.0, 1.0);
}

synthetic_graph ring_of_cliques(std::uint32_t clique_count, std::uint32_t clique_size) {
    if (clique_count < 3 || clique_size < 3)
        throw std::invalid_argument("ring_of_cliques: need at least 3 cliques of size 3");
    synthetic_graph g;
    g.node_count = static_cast<std::uint64_t>(clique_count) * clique_size;
    g.adjacency.resize(g.node_count);
    g.truth.resize(g.node_count);

    for (std::uint32_t k = 0; k < clique_count; ++k) {
        const NodeID base = k * clique_size;
        for (std::uint32_t i = 0; i < clique_size; ++i) {
            g.truth[base + i] = k;
            for (std::uint32_t j = i + 1; j < clique_size; ++j)
                push_edge(g, base + i, base + j, 1);
        }
    }
    for (std::uint32_t k = 0; k < clique_count; ++k) {
        const NodeID a = k * clique_size + clique_size - 1;
        const NodeID b = ((k + 1) % clique_count) * clique_size + clique_size - 1;
        push_edge(g, a, b, 1);
    }
    sort_adjacency(g);
    return g;
}

synthetic_graph planted_partition(std::uint32_t k, std::uint64_t n, double p_in,
                                  double p_out, std::uint64_t seed) {
    if (k == 0 || n % k != 0)
        throw std::invalid_argument("planted_partition: k must divide n");
    if (!(0.0 <= p_out && p_out < p_in && p_in <= 1.0))
        throw std::invalid_argument("planted_partition: need 0 <= p_out < p_in <= 1");

    synthetic_graph g;
    g.node_count = n;
    g.adjacency.resize(n);
    g.truth.resize(n);
    const std::uint64_t block = n / k;
    for (std::uint64_t v = 0; v < n; ++v) g.truth[v] = static_cast<ClusterID>(v / block);

    std::mt19937_64 rng(seed);
    for (std::uint32_t a = 0; a < k; ++a) {
        const NodeID base = static_cast<NodeID>(a * block);
        sample_pairs(block * (block - 1) / 2, p_in, rng, [&](std::uint64_t t) {
            const auto [i, j] = decode_triangular(t, block);
            push_edge(g, base + static_cast<NodeID>(i), base + static_cast<NodeID>(j), 1);
        });
    }
    if (p_out > 0.0) {
        for (std::uint32_t a = 0; a < k; ++a) {
            for (std::uint32_t b = a + 1; b < k; ++b) {
                const NodeID base_a = static_cast<NodeID>(a * block);
                const NodeID base_b = static_cast<NodeID>(b * block);
                sample_pairs(block * block, p_out, rng, [&](std::uint64_t t) {
                    push_edge(g, base_a + static_cast<NodeID>(t / block),
                              base_b + static_cast<NodeID>(t % block), 1);
                });
            }
        }
    }
    sort_adjacency(g);
    return g;
}

synthetic_graph random_graph(std::uint64_t n, double p, EdgeWeight w_min,
                             EdgeWeight w_max, std::uint64_t seed) {
    if (n == 0 || w_min < 1 || w_max < w_min)
        throw std::invalid_argument("random_graph: bad parameters");
    synthetic_graph g;
    g.node_count = n;
    g.adjacency.resize(n);
    g.truth.assign(n, 0);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<EdgeWeight> weight(w_min, w_max);
    sample_pairs(n * (n - 1) / 2, p, rng, [&](std::uint64_t t) {
        const auto [i, j] = decode_triangular(t, n);
        push_edge(g, static_cast<NodeID>(i), static_cast<NodeID>(j), weight(rng));
    });
    sort_adjacency(g);
    return g;
}

double audit_modularity(const std::string& graph_path, std::span<const ClusterID> assignments,
                        bool sanitize) {
    node_stream stream(graph_path, sanitize);
    if (assignments.size() != stream.header().node_count)
        throw parse_error("audit: clustering length does not match the graph");

    ClusterID max_id = 0;
    for (const ClusterID c : assignments) max_id = std::max(max_id, c);
    std::vector<EdgeWeight> twice_intra(static_cast<std::uint64_t>(max_id) + 1, 0);
    std::vector<EdgeWeight> volume(static_cast<std::uint64_t>(max_id) + 1, 0);

    EdgeWeight twice_total = 0;
    node_record rec;
    while (stream.next(rec)) {
        const ClusterID c = assignments[rec.id];
        twice_total += rec.weighted_degree;
        volume[c] += rec.weighted_degree;
        for (const auto& [u, w] : rec.neighbors)
            if (assignments[u] == c) twice_intra[c] += w;
    }
    if (twice_total == 0) {
        std::fprintf(stderr, "warning: modularity of an edgeless graph is defined as 0\n");
        return 0.0;
    }

    const double dm = static_cast<double>(twice_total) / 2.0;
    double q = 0.0;
    for (std::size_t c = 0; c < volume.size(); ++c) {
        if (volume[c] == 0) continue;
        const double vol_term = static_cast<double>(volume[c]) / (2.0 * dm);
        q += static_cast<double>(twice_intra[c]) / (2.0 * dm) - vol_term * vol_term;
    }
    return q;
}

std::string to_json(const run_stats& stats) {
    nlohmann::ordered_json j;
    j["mode"] = stats.mode;
    j["n"] = stats.n;
    j["m"] = stats.m;
    j["modularity"] = stats.modularity;
    j["clusters"] = stats.clusters;
    nlohmann::ordered_json phases = nlohmann::ordered_json::object();
    if (stats.stream_seconds >= 0.0) phases["stream"] = stats.stream_seconds;
    if (stats.evo_seconds >= 0.0) phases["evo"] = stats.evo_seconds;
    if (stats.ls_seconds >= 0.0) phases["ls"] = stats.ls_seconds;
    j["phase_seconds"] = phases;
    j["peak_memory_bytes"] = stats.peak_memory_bytes;
    j["ls_rounds"] = stats.ls_rounds;
    if (stats.nmi_score >= 0.0) {
        j["nmi"] = stats.nmi_score;
        j["nmi_normalization"] = "arithmetic-mean";
    }
    if (stats.audit_modularity >= -1.0) j["audit_modularity"] = stats.audit_modularity;
    return j.dump(2);
}

std::string to_key_values(const run_stats& stats) {
    char buffer[512];
    std::string line = "mode=" + stats.mode;
    std::snprintf(buffer, sizeof buffer, " n=%llu m=%llu modularity=%.10f clusters=%llu",
                  static_cast<unsigned long long>(stats.n),
                  static_cast<unsigned long long>(stats.m), stats.modularity,
                  static_cast<unsigned long long>(stats.clusters));
    line += buffer;
    if (stats.stream_seconds >= 0.0) {
        std::snprintf(buffer, sizeof buffer, " stream_s=%.4f", stats.stream_seconds);
        line += buffer;
    }
    if (stats.evo_seconds >= 0.0) {
        std::snprintf(buffer, sizeof buffer, " evo_s=%.4f", stats.evo_seconds);
        line += buffer;
    }
    if (stats.ls_seconds >= 0.0) {
        std::snprintf(buffer, sizeof buffer, " ls_s=%.4f ls_rounds=%llu", stats.ls_seconds,
                      static_cast<unsigned long long>(stats.ls_rounds));
        line += buffer;
    }
    std::snprintf(buffer, sizeof buffer, " peak_memory_bytes=%llu",
                  static_cast<unsigned long long>(stats.peak_memory_bytes));
    line += buffer;
    if (stats.nmi_score >= 0.0) {
        std::snprintf(buffer, sizeof buffer, " nmi=%.6f", stats.nmi_score);
        line += buffer;
    }
    if (stats.audit_modularity >= -1.0) {
        std::snprintf(buffer, sizeof buffer, " audit_modularity=%.10f", stats.audit_modularity);
        line += buffer;
    }
    return line;
}

} // namespace sgc
