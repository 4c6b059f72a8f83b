#include "netrobust/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "netrobust/generate.hpp"

namespace netrobust {

const char* strategy_name(AdversaryStrategy s) {
    return s == AdversaryStrategy::RandomFailures ? "random" : "targeted";
}

AdversaryStrategy strategy_from_name(const std::string& name) {
    if (name == "random") return AdversaryStrategy::RandomFailures;
    if (name == "targeted") return AdversaryStrategy::TargetedDegree;
    throw std::invalid_argument("unknown adversary \"" + name + "\" (random|targeted)");
}

CorruptionPlan plan_random_failures(const Graph& g, double fraction, Rng& rng) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("corruption fraction must lie in [0,1]");
    CorruptionPlan plan;
    plan.strategy = AdversaryStrategy::RandomFailures;
    plan.fraction = fraction;
    const std::int64_t k = round_count(fraction, g.node_count());
    std::vector<NodeId> pool(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) pool[v] = v;
    for (std::int64_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.below(pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    plan.corrupted = std::move(pool);
    return plan;
}

CorruptionPlan plan_targeted(const Graph& g, double fraction) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("corruption fraction must lie in [0,1]");
    CorruptionPlan plan;
    plan.strategy = AdversaryStrategy::TargetedDegree;
    plan.fraction = fraction;
    const std::int64_t k = round_count(fraction, g.node_count());
    std::vector<NodeId> order(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](NodeId x, NodeId y) {
        const NodeId dx = g.degree(x), dy = g.degree(y);
        return dx != dy ? dx > dy : x < y;
    });
    order.resize(static_cast<std::size_t>(k));
    std::sort(order.begin(), order.end());
    plan.corrupted = std::move(order);
    return plan;
}

double xi_strength(const Graph& g_honest) {
    if (g_honest.node_count() == 0) throw std::invalid_argument("empty honest graph");
    return static_cast<double>(connected_components(g_honest).largest_size) /
           static_cast<double>(g_honest.node_count());
}

GameOutcome play_game_with(const Graph& g, ProtocolKind kind, int m,
                           std::span<const NodeId> participants,
                           std::span<const NodeId> fat_list,
                           std::span<const NodeId> corrupted, std::uint64_t protocol_seed) {
    EnrichmentResult enrichment;
    enrichment.participants.assign(participants.begin(), participants.end());
    switch (kind) {
        case ProtocolKind::None: break;
        case ProtocolKind::TwoSFF:
            enrichment = run_2sff(g, participants, m, protocol_seed);
            break;
        case ProtocolKind::A3F:
            enrichment = run_a3f(g, participants, fat_list, m, protocol_seed);
            break;
    }

    const Graph enriched = apply_enrichment(g, enrichment);
    const InducedSubgraph honest = remove_nodes(enriched, corrupted);
    const ComponentLabeling labeling = connected_components(honest.graph);

    GameOutcome out;
    out.messages = enrichment.messages_sent;
    out.edges_added = static_cast<std::int64_t>(enrichment.added_edges.size());
    for (const auto& [u, v] : enrichment.added_edges)
        if (honest.new_id[u] >= 0 && honest.new_id[v] >= 0) ++out.edges_surviving;

    out.honest = honest.graph.node_count();
    out.in_largest = labeling.largest_size;
    out.component_sizes = labeling.component_sizes;

    std::vector<char> is_participant(static_cast<std::size_t>(g.node_count()), 0);
    for (NodeId v : participants) is_participant[v] = 1;
    for (NodeId orig : honest.kept) {
        const bool in_largest =
            labeling.label[honest.new_id[orig]] == labeling.largest_label;
        if (is_participant[orig]) {
            ++out.honest_participants;
            if (in_largest) ++out.in_largest_participants;
        } else {
            ++out.honest_nonparticipants;
            if (in_largest) ++out.in_largest_nonparticipants;
        }
    }

    auto frac = [](std::int64_t num, std::int64_t den) {
        return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
    };
    out.frac_all = frac(out.in_largest, out.honest);
    out.frac_participants = frac(out.in_largest_participants, out.honest_participants);
    out.frac_nonparticipants = frac(out.in_largest_nonparticipants, out.honest_nonparticipants);
    out.xi = out.frac_all;
    return out;
}

GameOutcome play_game(const Graph& g, const GameConfig& cfg) {
    cfg.protocol.validate();

    // Substreams: 1 = corruption plan, 2 = participant selection,
    // 3 = protocol rounds. The plan is drawn before enrichment.
    auto make_plan = [&]() {
        if (cfg.strategy == AdversaryStrategy::RandomFailures) {
            Rng plan_rng(mix_seed(cfg.seed, 1));
            return plan_random_failures(g, cfg.corruption_fraction, plan_rng);
        }
        return plan_targeted(g, cfg.corruption_fraction);
    };
    const CorruptionPlan plan = make_plan();

    Rng part_rng(mix_seed(cfg.seed, 2));
    std::vector<NodeId> participants;
    if (cfg.participants_honest_only) {
        std::vector<char> gone(static_cast<std::size_t>(g.node_count()), 0);
        for (NodeId v : plan.corrupted) gone[v] = 1;
        std::vector<NodeId> honest_pool;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (!gone[v]) honest_pool.push_back(v);
        const std::int64_t k =
            round_count(cfg.protocol.q, static_cast<std::int64_t>(honest_pool.size()));
        for (std::int64_t i = 0; i < k; ++i) {
            const std::size_t j =
                i + part_rng.below(honest_pool.size() - static_cast<std::size_t>(i));
            std::swap(honest_pool[static_cast<std::size_t>(i)], honest_pool[j]);
        }
        honest_pool.resize(static_cast<std::size_t>(k));
        std::sort(honest_pool.begin(), honest_pool.end());
        participants = std::move(honest_pool);
    } else {
        participants = select_participants(g.node_count(), cfg.protocol.q, part_rng);
    }

    std::vector<NodeId> fat_list;
    if (cfg.protocol.kind == ProtocolKind::A3F) {
        const NodeId count = cfg.protocol.fat_count > 0 ? cfg.protocol.fat_count
                                                        : default_fat_count(g.node_count());
        fat_list = select_fat_nodes(g, count);
    }

    GameOutcome out = play_game_with(g, cfg.protocol.kind, cfg.protocol.m, participants,
                                     fat_list, plan.corrupted, mix_seed(cfg.seed, 3));

    // The plan must be a function of the initial graph alone.
    const CorruptionPlan replay = make_plan();
    if (replay.corrupted != plan.corrupted)
        throw std::logic_error("corruption plan is not independent of enrichment");
    return out;
}

}  // namespace netrobust
