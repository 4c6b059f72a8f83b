#include "netrobust/snap_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace netrobust {

namespace {

bool parse_id(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && out >= 0;
}

}  // namespace

SnapLoadResult load_snap_edgelist(std::istream& in) {
    SnapLoadResult res;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw_edges;
    std::string line;
    std::int64_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == line.size()) continue;  // blank
        if (line[pos] == '#') {
            ++res.comment_lines;
            continue;
        }

        std::int64_t ids[2];
        int found = 0;
        while (pos < line.size()) {
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            if (found == 2 || !parse_id(std::string_view(line).substr(pos, end - pos), ids[found]))
                throw std::runtime_error("malformed edge line " + std::to_string(line_no) +
                                         ": \"" + line + "\"");
            ++found;
            pos = end;
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        }
        if (found != 2)
            throw std::runtime_error("malformed edge line " + std::to_string(line_no) +
                                     ": expected two ids, got " + std::to_string(found));

        ++res.data_lines;
        if (ids[0] == ids[1]) {
            ++res.self_loop_lines;
            // node still exists, keep it in the id map
            raw_edges.emplace_back(ids[0], ids[0]);
            continue;
        }
        raw_edges.emplace_back(ids[0], ids[1]);
    }

    if (res.data_lines == 0) throw std::runtime_error("empty edge list: no data lines");

    // Dense compaction in ascending original-id order keeps reloads of our
    // own output id-stable.
    res.original_ids.reserve(raw_edges.size() * 2);
    for (const auto& [a, b] : raw_edges) {
        res.original_ids.push_back(a);
        res.original_ids.push_back(b);
    }
    std::sort(res.original_ids.begin(), res.original_ids.end());
    res.original_ids.erase(std::unique(res.original_ids.begin(), res.original_ids.end()),
                           res.original_ids.end());

    auto dense = [&](std::int64_t orig) {
        return static_cast<NodeId>(std::lower_bound(res.original_ids.begin(),
                                                    res.original_ids.end(), orig) -
                                   res.original_ids.begin());
    };

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges)
        if (a != b) edges.emplace_back(dense(a), dense(b));

    res.graph = Graph::from_edges(static_cast<NodeId>(res.original_ids.size()), edges);
    return res;
}

SnapLoadResult load_snap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_snap_edgelist(in);
}

void write_snap_edgelist(const Graph& g, std::ostream& out) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.neighbors(v))
            if (u > v) out << v << ' ' << u << '\n';
}

void write_id_map(const std::vector<std::int64_t>& original_ids, std::ostream& out) {
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        out << i << ' ' << original_ids[i] << '\n';
}

}  // namespace netrobust
