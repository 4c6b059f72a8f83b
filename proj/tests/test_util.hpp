#pragma once

// Test-only helpers: an independent BFS component oracle, plain random
// graph generators, and dataset discovery.

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/rng.hpp"

namespace netrobust::testing {

// Breadth-first labeling, independent of the union-find implementation.
// Canonical label = smallest member id (BFS from ascending ids gives this
// for free).
inline ComponentLabeling bfs_components(const Graph& g) {
    const NodeId n = g.node_count();
    ComponentLabeling out;
    out.label.assign(static_cast<std::size_t>(n), -1);
    for (NodeId start = 0; start < n; ++start) {
        if (out.label[start] >= 0) continue;
        std::int64_t size = 0;
        std::deque<NodeId> queue{start};
        out.label[start] = start;
        while (!queue.empty()) {
            const NodeId v = queue.front();
            queue.pop_front();
            ++size;
            for (NodeId u : g.neighbors(v)) {
                if (out.label[u] < 0) {
                    out.label[u] = start;
                    queue.push_back(u);
                }
            }
        }
        out.component_sizes.push_back(size);
        if (size > out.largest_size) {
            out.largest_size = size;
            out.largest_label = start;
        }
    }
    return out;
}

// Erdos-Renyi-style G(n, M): M distinct uniform pairs.
inline Graph gen_gnm(NodeId n, std::int64_t m_edges, Rng& rng) {
    Graph g(n);
    std::int64_t added = 0;
    while (added < m_edges) {
        const NodeId u = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
        const NodeId v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
        if (g.add_edge(u, v)) ++added;
    }
    return g;
}

inline std::optional<std::string> epinions_path() {
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates;
    if (const char* dir = std::getenv("NETROBUST_DATA_DIR"))
        candidates.emplace_back(fs::path(dir) / "soc-Epinions1.txt");
#ifdef NETROBUST_SOURCE_DIR
    candidates.emplace_back(fs::path(NETROBUST_SOURCE_DIR) / "data" / "soc-Epinions1.txt");
#endif
    candidates.emplace_back("data/soc-Epinions1.txt");
    for (const auto& p : candidates)
        if (fs::exists(p)) return p.string();
    return std::nullopt;
}

}  // namespace netrobust::testing
