#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"

namespace netrobust {

struct SnapLoadResult {
    Graph graph;                             // symmetrized, deduplicated, loop-free
    std::vector<std::int64_t> original_ids;  // dense id -> original id (ascending)
    std::int64_t data_lines = 0;             // raw directed edge lines, self-loops included
    std::int64_t self_loop_lines = 0;        // dropped
    std::int64_t comment_lines = 0;
};

// SNAP edge-list format: '#' comment lines, data lines of two
// whitespace-separated decimal ids, LF or CRLF. Ids are compacted to
// dense [0, n) in ascending original-id order. Throws std::runtime_error
// with the line number on malformed input and on input with no edges.
SnapLoadResult load_snap_edgelist(std::istream& in);

SnapLoadResult load_snap_file(const std::string& path);

// One "u v" line per undirected edge, u < v, LF endings. Re-loading the
// output reproduces the graph with identical dense ids.
void write_snap_edgelist(const Graph& g, std::ostream& out);

// "dense original" lines, for tracing metrics back to raw dataset ids.
void write_id_map(const std::vector<std::int64_t>& original_ids, std::ostream& out);

}  // namespace netrobust
