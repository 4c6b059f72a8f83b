#include "netrobust/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netrobust {

void Graph::check_node(NodeId v) const {
    if (v < 0 || v >= node_count())
        throw std::out_of_range("invalid node id " + std::to_string(v) +
                                " (graph has " + std::to_string(node_count()) + " nodes)");
}

Graph Graph::from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.check_node(u);
        g.check_node(v);
        if (u == v) continue;
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += static_cast<std::int64_t>(nbrs.size());
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

NodeId Graph::degree(NodeId v) const {
    check_node(v);
    return static_cast<NodeId>(adjacency_[v].size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    check_node(v);
    return adjacency_[v];
}

namespace {

// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(NodeId n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), NodeId{0});
    }

    NodeId find(NodeId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<NodeId> parent_;
    std::vector<std::int64_t> size_;
};

}  // namespace

ComponentLabeling connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    DisjointSets ds(n);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : g.neighbors(v))
            if (u > v) ds.unite(v, u);

    ComponentLabeling out;
    out.label.assign(static_cast<std::size_t>(n), -1);
    // Canonical label = smallest member id. Ids ascend, so the first node
    // seen per root names the component.
    std::vector<NodeId> canon(static_cast<std::size_t>(n), -1);
    for (NodeId v = 0; v < n; ++v) {
        const NodeId root = ds.find(v);
        if (canon[root] < 0) canon[root] = v;
        out.label[v] = canon[root];
    }
    std::vector<std::int64_t> size_at(static_cast<std::size_t>(n), 0);
    for (NodeId v = 0; v < n; ++v) ++size_at[out.label[v]];
    for (NodeId v = 0; v < n; ++v) {
        if (size_at[v] == 0) continue;
        out.component_sizes.push_back(size_at[v]);
        if (size_at[v] > out.largest_size) {
            out.largest_size = size_at[v];
            out.largest_label = v;  // ascending scan keeps the smallest label on ties
        }
    }
    return out;
}

InducedSubgraph remove_nodes(const Graph& g, std::span<const NodeId> removed) {
    const NodeId n = g.node_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (NodeId v : removed) {
        g.check_node(v);
        gone[v] = 1;
    }

    InducedSubgraph out;
    out.new_id.assign(static_cast<std::size_t>(n), -1);
    for (NodeId v = 0; v < n; ++v) {
        if (gone[v]) continue;
        out.new_id[v] = static_cast<NodeId>(out.kept.size());
        out.kept.push_back(v);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v : out.kept)
        for (NodeId u : g.neighbors(v))
            if (u > v && !gone[u]) edges.emplace_back(out.new_id[v], out.new_id[u]);
    out.graph = Graph::from_edges(static_cast<NodeId>(out.kept.size()), edges);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> degrees(const Graph& g) {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) out.emplace_back(v, g.degree(v));
    return out;
}

double largest_component_fraction(const Graph& g,
                                  std::optional<std::span<const NodeId>> over) {
    const auto labeling = connected_components(g);
    if (!over.has_value()) {
        if (g.node_count() == 0) throw std::invalid_argument("empty graph");
        return static_cast<double>(labeling.largest_size) /
               static_cast<double>(g.node_count());
    }
    if (over->empty()) throw std::invalid_argument("empty `over` set");
    std::int64_t hits = 0;
    for (NodeId v : *over) {
        g.check_node(v);
        if (labeling.label[v] == labeling.largest_label) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(over->size());
}

}  // namespace netrobust
