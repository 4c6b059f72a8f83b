#include "netrobust/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netrobust {

std::int64_t round_count(double fraction, std::int64_t n) {
    return static_cast<std::int64_t>(std::floor(fraction * static_cast<double>(n) + 0.5));
}

Graph generate_ba(const BaSpec& spec, Rng& rng) {
    if (spec.m_attach < 1 || spec.seed_size < spec.m_attach || spec.n < spec.seed_size)
        throw std::invalid_argument("infeasible BA spec: need n >= seed_size >= m_attach >= 1");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(spec.seed_size) * spec.seed_size / 2 +
                  static_cast<std::size_t>(spec.n - spec.seed_size) * spec.m_attach);

    // Endpoint list: node v appears deg(v) times; sampling an index is a
    // degree-proportional draw.
    std::vector<NodeId> endpoints;
    for (NodeId i = 0; i < spec.seed_size; ++i)
        for (NodeId j = i + 1; j < spec.seed_size; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }

    std::vector<NodeId> targets;
    for (NodeId v = spec.seed_size; v < spec.n; ++v) {
        // Snapshot the list so all m_attach draws see the pre-arrival degrees.
        const std::size_t pool = endpoints.size();
        targets.clear();
        while (targets.size() < static_cast<std::size_t>(spec.m_attach)) {
            const NodeId cand = endpoints[rng.below(pool)];
            if (std::find(targets.begin(), targets.end(), cand) == targets.end())
                targets.push_back(cand);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(spec.n, edges);
}

NodeId TheoremInstanceSpec::fat_count() const {
    return static_cast<NodeId>(std::ceil(C * std::log(static_cast<double>(n))));
}

NodeId TheoremInstanceSpec::outsider_count() const {
    return static_cast<NodeId>(round_count(alpha, n));
}

NodeId TheoremInstanceSpec::neighborhood_count() const {
    return n - fat_count() - outsider_count();
}

NodeId TheoremInstanceSpec::degree_lo() const {
    const double log_n = std::log(static_cast<double>(n));
    return static_cast<NodeId>(std::ceil(a * static_cast<double>(n) / log_n));
}

NodeId TheoremInstanceSpec::degree_hi() const {
    const double log_n = std::log(static_cast<double>(n));
    return static_cast<NodeId>(std::floor(b * static_cast<double>(n) / log_n));
}

void TheoremInstanceSpec::validate() const {
    if (n < 3) throw std::invalid_argument("theorem instance: n too small");
    if (!(0.0 < a && a <= b)) throw std::invalid_argument("theorem instance: need 0 < a <= b");
    if (!(0.0 < alpha && alpha < 1.0))
        throw std::invalid_argument("theorem instance: need 0 < alpha < 1");
    if (beta < 0.0 || beta > 1.0 || gamma < 0.0 || gamma > 1.0)
        throw std::invalid_argument("theorem instance: beta, gamma must lie in [0,1]");
    if (C <= 0.0) throw std::invalid_argument("theorem instance: need C > 0");

    const std::int64_t w = fat_count();
    const std::int64_t nw = neighborhood_count();
    const std::int64_t lo = degree_lo();
    const std::int64_t hi = degree_hi();
    if (nw < 0)
        throw std::invalid_argument("theorem instance: (1-alpha)n leaves no room for W");
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("theorem instance: empty fat-degree band [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    if (hi > nw)
        throw std::invalid_argument("theorem instance: fat degree " + std::to_string(hi) +
                                    " exceeds neighborhood size " + std::to_string(nw));
    if (w * hi < nw)
        throw std::invalid_argument(
            "theorem instance: W cannot cover its neighborhood (|W|*max_deg = " +
            std::to_string(w * hi) + " < |N_W| = " + std::to_string(nw) + ")");
}

namespace {

// Uniform k-subset of `pool` (partial Fisher-Yates), returned sorted.
std::vector<NodeId> sample_subset(std::vector<NodeId> pool, std::int64_t k, Rng& rng) {
    for (std::int64_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.below(pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

TheoremInstance build_theorem_instance(const TheoremInstanceSpec& spec, Rng& rng) {
    spec.validate();
    const NodeId w_count = spec.fat_count();
    const NodeId nw_count = spec.neighborhood_count();
    const NodeId out_count = spec.outsider_count();
    const NodeId d_lo = spec.degree_lo();
    const NodeId d_hi = spec.degree_hi();

    TheoremInstance inst;
    for (NodeId v = 0; v < w_count; ++v) inst.fat_nodes.push_back(v);
    for (NodeId v = w_count; v < w_count + nw_count; ++v) inst.neighborhood.push_back(v);
    for (NodeId v = w_count + nw_count; v < spec.n; ++v) inst.outsiders.push_back(v);

    // Target degrees, uniform in the band; top up round-robin (capped at the
    // band max) until the stubs can cover every neighborhood node.
    std::vector<NodeId> target(static_cast<std::size_t>(w_count));
    std::int64_t total = 0;
    for (auto& d : target) {
        d = d_lo + static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(d_hi - d_lo + 1)));
        total += d;
    }
    std::size_t cursor = 0;
    while (total < nw_count) {
        if (target[cursor] < d_hi) {
            ++target[cursor];
            ++total;
        }
        cursor = (cursor + 1) % target.size();
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(total));
    std::vector<NodeId> remaining = target;
    std::vector<std::unordered_set<NodeId>> fat_adj(remaining.size());

    // Pass 1: cover the whole neighborhood, cycling over fat nodes that
    // still have stubs.
    std::size_t fat_cursor = 0;
    for (NodeId j = 0; j < nw_count; ++j) {
        while (remaining[fat_cursor] == 0) fat_cursor = (fat_cursor + 1) % remaining.size();
        edges.emplace_back(static_cast<NodeId>(fat_cursor), w_count + j);
        fat_adj[fat_cursor].insert(w_count + j);
        --remaining[fat_cursor];
        fat_cursor = (fat_cursor + 1) % remaining.size();
    }

    // Pass 2: leftover stubs go to uniformly random neighborhood nodes,
    // resampling collisions (degree_hi <= |N_W| keeps this feasible).
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        while (remaining[i] > 0) {
            const NodeId u = w_count + static_cast<NodeId>(rng.below(nw_count));
            if (fat_adj[i].insert(u).second) {
                edges.emplace_back(static_cast<NodeId>(i), u);
                --remaining[i];
            }
        }
    }

    inst.graph = Graph::from_edges(spec.n, edges);

    if (spec.beta == 1.0 && spec.gamma == 1.0) {
        inst.participants.resize(static_cast<std::size_t>(spec.n));
        for (NodeId v = 0; v < spec.n; ++v) inst.participants[v] = v;
    } else {
        auto from_nw = sample_subset(inst.neighborhood, round_count(spec.gamma, nw_count), rng);
        auto from_out = sample_subset(inst.outsiders, round_count(spec.beta, out_count), rng);
        inst.participants = std::move(from_nw);
        inst.participants.insert(inst.participants.end(), from_out.begin(), from_out.end());
    }
    return inst;
}

}  // namespace netrobust
