/******************************************************************************
 * graph_io.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace sgc {

// Malformed input data; the CLI maps this to exit code 1.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures; the CLI maps this to exit code 2.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// METIS header line `n m [fmt]`. The format code is read as three decimal
// digits: 1s = edge weights, 10s = node weights, 100s = node sizes. Node
// weights and sizes are parsed and ignored.
struct graph_header {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;       // undirected edges declared by the header
    int fmt = 0;
    EdgeWeight total_edge_weight = 0;   // equals edge_count for unweighted files

    bool has_edge_weights() const { return fmt % 10 == 1; }
    bool has_node_weights() const { return (fmt / 10) % 10 == 1; }
    bool has_node_sizes() const { return (fmt / 100) % 10 == 1; }
};

// Byte position of every node's adjacency line, filled in as a side effect of
// the first complete pass. One machine word per node.
class node_offset_index {
public:
    void reset(std::uint64_t n);
    void record(NodeID v, std::uint64_t offset);
    std::uint64_t at(NodeID v) const;
    bool complete() const { return complete_; }
    std::uint64_t size() const { return offsets_.size(); }

private:
    std::vector<std::uint64_t> offsets_;
    std::uint64_t recorded_ = 0;
    bool complete_ = false;
};

// Single-pass reader over a METIS node stream. One record is resident at a
// time; records arrive in ascending id order. Node ids are 1-indexed on disk
// and 0-indexed in memory. '%' comment lines are skipped.
//
// With sanitize on, parallel edges are merged by summing their weights and
// self-loops are dropped (both counted); with sanitize off they are rejected.
// After the last record of the first full pass, the total adjacency entry
// count is checked against 2m from the header (a self entry counts as 2).
//
// A handle must not be shared across threads; multiple independent handles on
// the same file are fine.
class node_stream {
public:
    node_stream(const std::string& path, bool sanitize = false);

    const graph_header& header() const { return header_; }

    // Next record in id order; false at end of stream.
    bool next(node_record& out);

    // Back to node 0. Keeps the offset index.
    void rewind();

    // Read one node line through the offset index (re-stream rounds >= 2).
    // Requires a completed first pass. Invalidates the sequential cursor
    // until the next rewind().
    void read_node_at(NodeID v, node_record& out);

    const node_offset_index& offsets() const { return index_; }
    bool index_complete() const { return index_.complete(); }

    std::uint64_t selective_reads() const { return selective_reads_; }
    std::uint64_t dropped_self_loops() const { return dropped_self_loops_; }
    std::uint64_t merged_parallel_edges() const { return merged_parallel_edges_; }

private:
    bool next_data_line(std::uint64_t* offset_out);
    void parse_node_line(NodeID v, node_record& out);
    void parse_header(const std::string& path);

    std::ifstream in_;
    std::string path_;
    std::string line_;
    graph_header header_;
    node_offset_index index_;
    std::uint64_t data_start_ = 0;
    std::uint64_t line_no_ = 0;         // 1-based physical line of line_
    NodeID cursor_ = 0;
    bool sequential_valid_ = true;
    bool sanitize_ = false;
    bool entry_count_checked_ = false;
    std::uint64_t entry_count_ = 0;     // raw entries; self entries count twice
    std::uint64_t selective_reads_ = 0;
    std::uint64_t dropped_self_loops_ = 0;
    std::uint64_t merged_parallel_edges_ = 0;
};

// Clustering output: one cluster id per line, line v = cluster of node v.
void write_clustering(const std::string& path, std::span<const ClusterID> assignments);

// Reads any one-integer-per-line file (clusterings, ground-truth labels).
std::vector<ClusterID> read_clustering(const std::string& path);

// Writes a graph in METIS format. `adjacency` holds both directions of every
// edge; self entries are allowed (used by the quotient debug dump) and are
// emitted once, counting as one edge in the header.
void write_metis(const std::string& path,
                 const std::vector<std::vector<std::pair<NodeID, EdgeWeight>>>& adjacency,
                 bool edge_weights);

// Validation mode for small files: every edge must appear from both
// endpoints with the same weight.
bool validate_symmetry(const std::string& path, std::string* what = nullptr);

} // namespace sgc
