#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/rng.hpp"

namespace netrobust {

enum class ProtocolKind { None, TwoSFF, A3F };

const char* protocol_name(ProtocolKind kind);
ProtocolKind protocol_from_name(const std::string& name);

struct ProtocolConfig {
    ProtocolKind kind = ProtocolKind::None;
    int m = 0;             // rounds per participating node
    double q = 1.0;        // participation fraction
    NodeId fat_count = 0;  // A3F list size; 0 = floor(log2 n)

    void validate() const;
};

struct EnrichmentResult {
    std::vector<std::pair<NodeId, NodeId>> added_edges;  // u < v, deduplicated
    std::int64_t messages_sent = 0;
    std::vector<NodeId> participants;  // sorted
    std::int64_t skipped_isolated = 0;  // 2SFF participants with no neighbors
};

// Uniformly random subset of round(q*n) nodes, sorted. q=1 selects all.
std::vector<NodeId> select_participants(NodeId n, double q, Rng& rng);

// Top fat_count nodes by (degree desc, id asc) on the initial graph.
std::vector<NodeId> select_fat_nodes(const Graph& g, NodeId fat_count);

NodeId default_fat_count(NodeId n);  // floor(log2 n), the commonly known list size

// Two Steps Friend Finder: each participant runs m independent length-2
// walks on the pre-enrichment graph and befriends the endpoint. Candidate
// edges that are self-loops, already present, or already proposed are
// dropped; their messages still count. Isolated participants no-op.
EnrichmentResult run_2sff(const Graph& g, std::span<const NodeId> participants, int m,
                          std::uint64_t seed);

// Ask Fat For a Friend: each participant, m times, asks a uniformly random
// member of fat_list for a uniformly random neighbor and befriends the
// reply, under the same rejection rules. Two messages per round even when
// the queried fat node has no neighbors.
EnrichmentResult run_a3f(const Graph& g, std::span<const NodeId> participants,
                         std::span<const NodeId> fat_list, int m, std::uint64_t seed);

// Original graph plus the proposed edges.
Graph apply_enrichment(const Graph& g, const EnrichmentResult& result);

}  // namespace netrobust
