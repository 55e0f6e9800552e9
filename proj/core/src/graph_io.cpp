/******************************************************************************
 * graph_io.cpp
 *****************************************************************************/

#include "sgc/graph_io.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <filesystem>

namespace sgc {

namespace {

bool is_comment(const std::string& line) {
    for (char c : line) {
        if (c == '%') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return false;
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

// Splits a line into unsigned integer tokens; returns false on a non-numeric
// token and reports its text.
bool tokenize_uints(const std::string& line, std::vector<std::uint64_t>& out,
                    std::string* bad_token) {
    out.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        if (*p == ' ' || *p == '\t' || *p == '\r') {
            ++p;
            continue;
        }
        std::uint64_t value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
            if (bad_token) {
                const char* stop = p;
                while (stop != end && *stop != ' ' && *stop != '\t' && *stop != '\r') ++stop;
                bad_token->assign(p, stop);
            }
            return false;
        }
        out.push_back(value);
        p = next;
    }
    return true;
}

const int kValidFmts[] = {0, 1, 10, 11, 100, 101, 110, 111};

} // namespace

void node_offset_index::reset(std::uint64_t n) {
    offsets_.assign(n, 0);
    recorded_ = 0;
    complete_ = false;
}

void node_offset_index::record(NodeID v, std::uint64_t offset) {
    assert(v < offsets_.size());
    assert(v == recorded_ && "offsets are recorded in stream order");
    assert(recorded_ == 0 || offset > offsets_[recorded_ - 1]);
    offsets_[v] = offset;
    if (++recorded_ == offsets_.size()) complete_ = true;
}

std::uint64_t node_offset_index::at(NodeID v) const {
    if (!complete_) throw std::logic_error("offset index not built");
    if (v >= offsets_.size()) throw std::out_of_range("node id out of range");
    return offsets_[v];
}

node_stream::node_stream(const std::string& path, bool sanitize)
    : path_(path), sanitize_(sanitize) {
    in_.open(path, std::ios::in | std::ios::binary);
    if (!in_.is_open()) throw io_error("cannot open graph file: " + path);
    parse_header(path);
    index_.reset(header_.node_count);

    if (header_.has_edge_weights()) {
        // One pass over the node stream cannot know the total edge weight
        // upfront, but the gain formula needs m; sum it here once.
        node_record rec;
        EdgeWeight twice_total = 0;
        while (next(rec)) twice_total += rec.weighted_degree;
        header_.total_edge_weight = twice_total / 2;
        rewind();
    } else {
        header_.total_edge_weight = static_cast<EdgeWeight>(header_.edge_count);
    }
}

void node_stream::parse_header(const std::string& path) {
    std::vector<std::uint64_t> tokens;
    for (;;) {
        if (!std::getline(in_, line_)) throw parse_error(path + ": missing header line");
        ++line_no_;
        if (is_comment(line_) || is_blank(line_)) continue;
        break;
    }
    std::string bad;
    if (!tokenize_uints(line_, tokens, &bad))
        throw parse_error(path + ": malformed header, non-numeric token '" + bad + "'");
    if (tokens.size() < 2 || tokens.size() > 3)
        throw parse_error(path + ": malformed header, expected 'n m [fmt]'");
    if (tokens[0] == 0) throw parse_error(path + ": malformed header, node count must be positive");
    header_.node_count = tokens[0];
    header_.edge_count = tokens[1];
    header_.fmt = tokens.size() == 3 ? static_cast<int>(tokens[2]) : 0;
    if (std::find(std::begin(kValidFmts), std::end(kValidFmts), header_.fmt) ==
        std::end(kValidFmts))
        throw parse_error(path + ": unsupported fmt '" + std::to_string(header_.fmt) + "'");
    data_start_ = static_cast<std::uint64_t>(in_.tellg());
}

bool node_stream::next_data_line(std::uint64_t* offset_out) {
    for (;;) {
        auto pos = in_.tellg();
        if (!std::getline(in_, line_)) return false;
        ++line_no_;
        if (is_comment(line_)) continue;
        if (offset_out) *offset_out = static_cast<std::uint64_t>(pos);
        return true;
    }
}

bool node_stream::next(node_record& out) {
    if (!sequential_valid_)
        throw std::logic_error("sequential read after read_node_at; rewind() first");
    if (cursor_ == header_.node_count) {
        if (!entry_count_checked_) {
            entry_count_checked_ = true;
            if (entry_count_ != 2 * header_.edge_count)
                throw parse_error(path_ + ": edge count mismatch, header declares " +
                                  std::to_string(header_.edge_count) + " edges but the degree sum is " +
                                  std::to_string(entry_count_));
        }
        return false;
    }
    std::uint64_t offset = 0;
    if (!next_data_line(&offset))
        throw parse_error(path_ + ": unexpected end of file, expected " +
                          std::to_string(header_.node_count) + " node lines");
    if (!index_.complete()) index_.record(cursor_, offset);
    parse_node_line(cursor_, out);
    ++cursor_;
    return true;
}

void node_stream::parse_node_line(NodeID v, node_record& out) {
    out.clear();
    out.id = v;

    static thread_local std::vector<std::uint64_t> tokens;
    std::string bad;
    if (!tokenize_uints(line_, tokens, &bad))
        throw parse_error(path_ + ":" + std::to_string(line_no_) + ": non-numeric token '" + bad + "'");

    std::size_t i = 0;
    if (header_.has_node_sizes()) i += 1;   // parsed and ignored
    if (header_.has_node_weights()) i += 1; // parsed and ignored
    if (i > tokens.size())
        throw parse_error(path_ + ":" + std::to_string(line_no_) + ": truncated node prefix");

    const bool weighted = header_.has_edge_weights();
    if (weighted && (tokens.size() - i) % 2 != 0)
        throw parse_error(path_ + ":" + std::to_string(line_no_) + ": dangling edge weight");

    while (i < tokens.size()) {
        const std::uint64_t raw = tokens[i++];
        if (raw < 1 || raw > header_.node_count)
            throw parse_error(path_ + ":" + std::to_string(line_no_) + ": neighbor id " +
                              std::to_string(raw) + " out of range [1, " +
                              std::to_string(header_.node_count) + "]");
        const NodeID u = static_cast<NodeID>(raw - 1);
        EdgeWeight w = 1;
        if (weighted) {
            const std::uint64_t rw = tokens[i++];
            if (rw == 0)
                throw parse_error(path_ + ":" + std::to_string(line_no_) + ": non-positive edge weight");
            w = static_cast<EdgeWeight>(rw);
        }
        if (u == v) {
            // self entries count twice toward the degree-sum consistency check
            if (!entry_count_checked_) entry_count_ += 2;
            if (!sanitize_)
                throw parse_error(path_ + ":" + std::to_string(line_no_) + ": self-loop at node " +
                                  std::to_string(v + 1));
            ++dropped_self_loops_;
            continue;
        }
        if (!entry_count_checked_) entry_count_ += 1;
        out.neighbors.emplace_back(u, w);
    }

    std::sort(out.neighbors.begin(), out.neighbors.end());
    auto scan = out.neighbors.begin();
    auto keep = out.neighbors.begin();
    while (scan != out.neighbors.end()) {
        auto run = scan + 1;
        while (run != out.neighbors.end() && run->first == scan->first) {
            if (!sanitize_)
                throw parse_error(path_ + ":" + std::to_string(line_no_) + ": parallel edge to node " +
                                  std::to_string(scan->first + 1));
            scan->second += run->second;
            ++merged_parallel_edges_;
            ++run;
        }
        *keep++ = *scan;
        scan = run;
    }
    out.neighbors.erase(keep, out.neighbors.end());

    out.weighted_degree = 0;
    for (const auto& [u, w] : out.neighbors) out.weighted_degree += w;
}

void node_stream::rewind() {
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(data_start_));
    cursor_ = 0;
    sequential_valid_ = true;
}

void node_stream::read_node_at(NodeID v, node_record& out) {
    const std::uint64_t offset = index_.at(v);
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(offset));
    sequential_valid_ = false;
    if (!std::getline(in_, line_))
        throw io_error(path_ + ": seek to node " + std::to_string(v) + " failed");
    parse_node_line(v, out);
    ++selective_reads_;
}

void write_clustering(const std::string& path, std::span<const ClusterID> assignments) {
    std::ofstream out(path, std::ios::out | std::ios::binary);
    if (!out.is_open()) throw io_error("cannot open output file: " + path);
    for (ClusterID c : assignments) out << c << '\n';
    if (!out) throw io_error("write failed: " + path);
}

std::vector<ClusterID> read_clustering(const std::string& path) {
    std::ifstream in(path, std::ios::in | std::ios::binary);
    if (!in.is_open()) throw io_error("cannot open file: " + path);
    std::vector<ClusterID> result;
    std::string line;
    std::vector<std::uint64_t> tokens;
    while (std::getline(in, line)) {
        if (is_blank(line)) continue;
        std::string bad;
        if (!tokenize_uints(line, tokens, &bad) || tokens.size() != 1)
            throw parse_error(path + ": expected one integer per line, got '" + line + "'");
        result.push_back(static_cast<ClusterID>(tokens[0]));
    }
    return result;
}

void write_metis(const std::string& path,
                 const std::vector<std::vector<std::pair<NodeID, EdgeWeight>>>& adjacency,
                 bool edge_weights) {
    std::uint64_t directed = 0;
    std::uint64_t selfs = 0;
    for (NodeID v = 0; v < adjacency.size(); ++v) {
        for (const auto& [u, w] : adjacency[v]) {
            if (u == v)
                ++selfs;
            else
                ++directed;
        }
    }
    assert(directed % 2 == 0 && "adjacency must contain both directions of every edge");

    std::ofstream out(path, std::ios::out | std::ios::binary);
    if (!out.is_open()) throw io_error("cannot open output file: " + path);
    out << adjacency.size() << ' ' << (directed / 2 + selfs);
    if (edge_weights) out << ' ' << 1;
    out << '\n';
    for (const auto& neighbors : adjacency) {
        bool first = true;
        for (const auto& [u, w] : neighbors) {
            if (!first) out << ' ';
            first = false;
            out << (u + 1);
            if (edge_weights) out << ' ' << w;
        }
        out << '\n';
    }
    if (!out) throw io_error("write failed: " + path);
}

bool validate_symmetry(const std::string& path, std::string* what) {
    node_stream stream(path, /*sanitize=*/true);
    const std::uint64_t n = stream.header().node_count;
    std::vector<std::vector<std::pair<NodeID, EdgeWeight>>> adjacency(n);
    node_record rec;
    while (stream.next(rec)) adjacency[rec.id] = rec.neighbors;
    for (NodeID v = 0; v < n; ++v) {
        for (const auto& [u, w] : adjacency[v]) {
            auto it = std::lower_bound(adjacency[u].begin(), adjacency[u].end(),
                                       std::make_pair(v, EdgeWeight{0}));
            if (it == adjacency[u].end() || it->first != v || it->second != w) {
                if (what)
                    *what = "edge (" + std::to_string(v) + ", " + std::to_string(u) +
                            ") has no symmetric counterpart of weight " + std::to_string(w);
                return false;
            }
        }
    }
    return true;
}

} // namespace sgc
