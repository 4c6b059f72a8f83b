#pragma once

#include <cstdint>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/rng.hpp"

namespace netrobust {

struct BaSpec {
    NodeId n = 0;          // total nodes
    NodeId m_attach = 1;   // edges per arriving node
    NodeId seed_size = 2;  // initial clique size, >= m_attach
};

// Preferential attachment: clique on seed_size nodes, then each arrival
// attaches m_attach edges to distinct nodes drawn degree-proportionally
// (repeated-endpoint list; duplicates resampled). Deterministic per seed.
Graph generate_ba(const BaSpec& spec, Rng& rng);

// Synthetic instance of the fat-set / neighborhood / outside partition:
//   fat set W          : ceil(C ln n) hubs, degrees in [a*n/ln n, b*n/ln n]
//   fat neighborhood   : every member adjacent to >= 1 fat node; no other edges
//   outsiders          : alpha*n nodes with no initial edges at all
// gamma and beta are the participation fractions within the neighborhood
// and the outsiders respectively (beta = gamma = 1 selects every node).
struct TheoremInstanceSpec {
    NodeId n = 0;
    double C = 1.0;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 1.0;

    void validate() const;  // throws std::invalid_argument on infeasibility
    NodeId fat_count() const;
    NodeId outsider_count() const;
    NodeId neighborhood_count() const;
    NodeId degree_lo() const;
    NodeId degree_hi() const;
};

struct TheoremInstance {
    Graph graph;
    std::vector<NodeId> fat_nodes;     // W, ids [0, |W|)
    std::vector<NodeId> neighborhood;  // N_W, ids [|W|, |W|+|N_W|)
    std::vector<NodeId> outsiders;     // V_alpha, remaining ids
    std::vector<NodeId> participants;  // sorted
};

TheoremInstance build_theorem_instance(const TheoremInstanceSpec& spec, Rng& rng);

// Shared rounding rule for k = fraction * n: round half up.
std::int64_t round_count(double fraction, std::int64_t n);

}  // namespace netrobust
