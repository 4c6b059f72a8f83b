#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/protocols.hpp"
#include "netrobust/rng.hpp"

namespace netrobust {

enum class AdversaryStrategy { RandomFailures, TargetedDegree };

const char* strategy_name(AdversaryStrategy s);
AdversaryStrategy strategy_from_name(const std::string& name);

// The corrupted set is always chosen from the initial graph, never from
// the enriched one.
struct CorruptionPlan {
    AdversaryStrategy strategy = AdversaryStrategy::RandomFailures;
    double fraction = 0.0;
    std::vector<NodeId> corrupted;  // sorted, |corrupted| = round(fraction * n)
};

CorruptionPlan plan_random_failures(const Graph& g, double fraction, Rng& rng);
CorruptionPlan plan_targeted(const Graph& g, double fraction);

struct GameConfig {
    ProtocolConfig protocol;
    AdversaryStrategy strategy = AdversaryStrategy::RandomFailures;
    double corruption_fraction = 0.0;
    std::uint64_t seed = 0;
    bool participants_honest_only = false;  // sample participants from honest nodes only
};

struct GameOutcome {
    double frac_all = 0.0;              // honest nodes in the largest honest component
    double frac_participants = 0.0;     // restricted to honest participants
    double frac_nonparticipants = 0.0;  // restricted to honest non-participants
    double xi = 0.0;                    // = frac_all

    std::int64_t messages = 0;
    std::int64_t edges_added = 0;      // |E_P|
    std::int64_t edges_surviving = 0;  // E_P edges with both endpoints honest

    std::int64_t honest = 0;
    std::int64_t honest_participants = 0;
    std::int64_t honest_nonparticipants = 0;
    std::int64_t in_largest = 0;
    std::int64_t in_largest_participants = 0;
    std::int64_t in_largest_nonparticipants = 0;

    std::vector<std::int64_t> component_sizes;  // honest-subgraph histogram, auxiliary
};

// Disconnection game: enrich on the initial graph, remove the corrupted
// set with its incident edges, measure largest-component fractions over
// honest nodes. Corruption is planned before enrichment and re-derived
// afterwards to enforce its independence from E_P.
GameOutcome play_game(const Graph& g, const GameConfig& cfg);

// Same steps with explicit participant / fat / corrupted sets (used by the
// theorem checks, where participation is per-partition rather than uniform).
GameOutcome play_game_with(const Graph& g, ProtocolKind kind, int m,
                           std::span<const NodeId> participants,
                           std::span<const NodeId> fat_list,
                           std::span<const NodeId> corrupted, std::uint64_t protocol_seed);

// Largest component size / node count of an honest-induced subgraph.
double xi_strength(const Graph& g_honest);

}  // namespace netrobust
