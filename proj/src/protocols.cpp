#include "netrobust/protocols.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "netrobust/generate.hpp"

namespace netrobust {

const char* protocol_name(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::None: return "none";
        case ProtocolKind::TwoSFF: return "2sff";
        case ProtocolKind::A3F: return "a3f";
    }
    return "?";
}

ProtocolKind protocol_from_name(const std::string& name) {
    if (name == "none") return ProtocolKind::None;
    if (name == "2sff") return ProtocolKind::TwoSFF;
    if (name == "a3f") return ProtocolKind::A3F;
    throw std::invalid_argument("unknown protocol \"" + name + "\" (none|2sff|a3f)");
}

void ProtocolConfig::validate() const {
    if (m < 0) throw std::invalid_argument("protocol m must be >= 0");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("participation q must lie in [0,1]");
    if (fat_count < 0) throw std::invalid_argument("fat_count must be >= 0");
}

NodeId default_fat_count(NodeId n) {
    if (n < 2) return 1;
    return static_cast<NodeId>(std::bit_width(static_cast<std::uint64_t>(n)) - 1);
}

std::vector<NodeId> select_participants(NodeId n, double q, Rng& rng) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("participation q must lie in [0,1]");
    const std::int64_t k = round_count(q, n);
    std::vector<NodeId> pool(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) pool[v] = v;
    if (k >= n) return pool;
    for (std::int64_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.below(pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<NodeId> select_fat_nodes(const Graph& g, NodeId fat_count) {
    if (fat_count > g.node_count())
        throw std::invalid_argument("fat_count exceeds node count");
    std::vector<NodeId> order(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::partial_sort(order.begin(), order.begin() + fat_count, order.end(),
                      [&](NodeId x, NodeId y) {
                          const NodeId dx = g.degree(x), dy = g.degree(y);
                          return dx != dy ? dx > dy : x < y;
                      });
    order.resize(static_cast<std::size_t>(fat_count));
    return order;
}

namespace {

inline std::uint64_t pack_edge(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

struct EdgeCollector {
    const Graph& g;
    EnrichmentResult& res;
    std::unordered_set<std::uint64_t> seen;

    // Rejects self-loops, edges already in the original graph, and
    // duplicates of earlier proposals.
    void propose(NodeId v, NodeId u) {
        if (u == v) return;
        const auto& nbrs = g.neighbors(v);
        if (std::binary_search(nbrs.begin(), nbrs.end(), u)) return;
        if (!seen.insert(pack_edge(v, u)).second) return;
        res.added_edges.emplace_back(std::min(v, u), std::max(v, u));
    }
};

}  // namespace

EnrichmentResult run_2sff(const Graph& g, std::span<const NodeId> participants, int m,
                          std::uint64_t seed) {
    EnrichmentResult res;
    res.participants.assign(participants.begin(), participants.end());
    EdgeCollector collector{g, res, {}};

    // Per-participant substream: results do not depend on iteration order.
    for (NodeId v : participants) {
        g.check_node(v);
        const auto& nbrs = g.neighbors(v);
        if (nbrs.empty()) {
            ++res.skipped_isolated;
            continue;
        }
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(v)));
        for (int round = 0; round < m; ++round) {
            const NodeId w = nbrs[rng.below(nbrs.size())];
            const auto& wn = g.neighbors(w);
            const NodeId u = wn[rng.below(wn.size())];  // w has >= 1 neighbor: v
            res.messages_sent += 2;
            collector.propose(v, u);
        }
    }
    return res;
}

EnrichmentResult run_a3f(const Graph& g, std::span<const NodeId> participants,
                         std::span<const NodeId> fat_list, int m, std::uint64_t seed) {
    if (fat_list.empty()) throw std::invalid_argument("A3F requires a non-empty fat list");
    for (NodeId w : fat_list) g.check_node(w);

    EnrichmentResult res;
    res.participants.assign(participants.begin(), participants.end());
    EdgeCollector collector{g, res, {}};

    for (NodeId v : participants) {
        g.check_node(v);
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(v)));
        for (int round = 0; round < m; ++round) {
            const NodeId w = fat_list[rng.below(fat_list.size())];
            res.messages_sent += 2;
            const auto& wn = g.neighbors(w);
            if (wn.empty()) continue;  // wasted query
            const NodeId u = wn[rng.below(wn.size())];
            collector.propose(v, u);
        }
    }
    return res;
}

Graph apply_enrichment(const Graph& g, const EnrichmentResult& result) {
    Graph enriched = g;
    for (const auto& [u, v] : result.added_edges) enriched.add_edge(u, v);
    return enriched;
}

}  // namespace netrobust
