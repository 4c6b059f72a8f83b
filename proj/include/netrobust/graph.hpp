#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netrobust {

using NodeId = std::int32_t;

// Undirected simple graph over dense ids [0, n). Adjacency lists are kept
// sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n) : adjacency_(static_cast<std::size_t>(n)) {}

    // Bulk construction: self-loops and duplicate pairs are dropped.
    static Graph from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    // Inserts {u,v} into both lists. Returns false (no change) for
    // self-loops and existing edges. Throws std::out_of_range on bad ids.
    bool add_edge(NodeId u, NodeId v);

    bool has_edge(NodeId u, NodeId v) const;
    NodeId degree(NodeId v) const;
    const std::vector<NodeId>& neighbors(NodeId v) const;

    void check_node(NodeId v) const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::int64_t edge_count_ = 0;
};

// Component labels are canonical: the smallest member id of the component.
struct ComponentLabeling {
    std::vector<NodeId> label;                // per node, canonical label
    std::vector<std::int64_t> component_sizes;  // ascending canonical-label order
    std::int64_t largest_size = 0;
    // Largest component; ties broken toward the component containing the
    // smallest node id (i.e. the smallest canonical label).
    NodeId largest_label = -1;
};

ComponentLabeling connected_components(const Graph& g);

// Induced subgraph on the surviving nodes, with the id remapping kept
// explicit so metrics can refer back to original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> kept;    // new id -> original id, ascending
    std::vector<NodeId> new_id;  // original id -> new id, -1 if removed
};

InducedSubgraph remove_nodes(const Graph& g, std::span<const NodeId> removed);

// Per-node degrees in id order (callers sort as needed).
std::vector<std::pair<NodeId, NodeId>> degrees(const Graph& g);

// |largest component ∩ over| / |over|. The largest component is global,
// not relative to `over`; `over` defaults to all nodes.
double largest_component_fraction(const Graph& g,
                                  std::optional<std::span<const NodeId>> over = std::nullopt);

}  // namespace netrobust
