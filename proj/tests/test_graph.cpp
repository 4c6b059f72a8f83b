#include "netrobust/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "netrobust/rng.hpp"
#include "test_util.hpp"

using namespace netrobust;
using netrobust::testing::bfs_components;
using netrobust::testing::gen_gnm;

TEST_CASE("add_edge inserts symmetric sorted entries") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK(g.neighbors(0) == std::vector<NodeId>{1});
    CHECK(g.neighbors(1) == std::vector<NodeId>{0});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("add_edge rejects duplicates and self-loops") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.add_edge(2, 2));
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("add_edge validates ids") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
}

TEST_CASE("remove_nodes severs a path through the removed node") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const NodeId removed[] = {1};
    const auto sub = remove_nodes(g, removed);
    CHECK(sub.graph.node_count() == 2);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.kept == std::vector<NodeId>{0, 2});
    CHECK(sub.new_id[0] == 0);
    CHECK(sub.new_id[1] == -1);
    CHECK(sub.new_id[2] == 1);
}

TEST_CASE("remove_nodes with empty set is the identity") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    const auto sub = remove_nodes(g, {});
    CHECK(sub.graph.node_count() == 3);
    CHECK(sub.graph.edge_count() == 3);
    for (NodeId v = 0; v < 3; ++v) CHECK(sub.new_id[v] == v);
}

TEST_CASE("remove_nodes on a 5-cycle") {
    // 0-1-2-3-4-0; dropping {0,2} leaves 1 isolated and the edge 3-4.
    Graph g(5);
    for (NodeId v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
    const NodeId removed[] = {0, 2};
    const auto sub = remove_nodes(g, removed);
    CHECK(sub.graph.node_count() == 3);
    CHECK(sub.graph.edge_count() == 1);
    const auto labeling = connected_components(sub.graph);
    CHECK(labeling.largest_size == 2);
    CHECK(sub.graph.degree(sub.new_id[1]) == 0);
    CHECK(sub.graph.has_edge(sub.new_id[3], sub.new_id[4]));
}

TEST_CASE("connected_components on a triangle") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    const auto labeling = connected_components(g);
    CHECK(labeling.component_sizes == std::vector<std::int64_t>{3});
    CHECK(labeling.largest_size == 3);
    CHECK(labeling.largest_label == 0);
}

TEST_CASE("connected_components sizes {2,2,1}") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    const auto labeling = connected_components(g);
    auto sizes = labeling.component_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{1, 2, 2});
    CHECK(labeling.largest_size == 2);
    // tie broken toward the component holding node 0
    CHECK(labeling.largest_label == 0);
}

TEST_CASE("degrees of a star and of an empty graph") {
    Graph star(5);
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    const auto ds = degrees(star);
    CHECK(ds[0] == std::pair<NodeId, NodeId>{0, 4});
    for (NodeId leaf = 1; leaf < 5; ++leaf) CHECK(ds[leaf].second == 1);

    Graph empty(7);
    for (const auto& [v, d] : degrees(empty)) CHECK(d == 0);
}

TEST_CASE("largest_component_fraction basics") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(largest_component_fraction(g) == doctest::Approx(1.0));

    // components {0,1,2} and {3,4}: the small one contributes nothing
    Graph h(5);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    const NodeId small[] = {3, 4};
    CHECK(largest_component_fraction(h, std::span<const NodeId>(small)) ==
          doctest::Approx(0.0));

    // sizes {2,2,1}: deterministic tie-break makes {0,1} "the" largest
    Graph t(5);
    t.add_edge(0, 1);
    t.add_edge(2, 3);
    CHECK(largest_component_fraction(t) == doctest::Approx(0.4));

    const std::vector<NodeId> empty_over;
    CHECK_THROWS_AS(largest_component_fraction(t, std::span<const NodeId>(empty_over)),
                    std::invalid_argument);
}

TEST_CASE("union-find labeling equals the BFS oracle on random graphs") {
    Rng rng(20240801);
    for (int it = 0; it < 60; ++it) {
        const NodeId n = 1 + static_cast<NodeId>(rng.below(1000));
        const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(std::min<std::int64_t>(3 * n, max_edges)) + 1));
        const Graph g = gen_gnm(n, m, rng);
        const auto uf = connected_components(g);
        const auto bfs = bfs_components(g);
        CHECK(uf.label == bfs.label);
        CHECK(uf.component_sizes == bfs.component_sizes);
        CHECK(uf.largest_size == bfs.largest_size);
        CHECK(uf.largest_label == bfs.largest_label);
    }
}

TEST_CASE("remove_nodes composes over unions of removal sets") {
    Rng rng(77);
    for (int it = 0; it < 20; ++it) {
        const NodeId n = 20 + static_cast<NodeId>(rng.below(180));
        const Graph g = gen_gnm(n, 2 * n, rng);
        std::vector<NodeId> a, b, both;
        for (NodeId v = 0; v < n; ++v) {
            const auto roll = rng.below(5);
            if (roll == 0) a.push_back(v);
            if (roll == 1) b.push_back(v);
        }
        both = a;
        both.insert(both.end(), b.begin(), b.end());

        const auto direct = remove_nodes(g, both);
        const auto first = remove_nodes(g, a);
        std::vector<NodeId> b_mapped;
        for (NodeId v : b) b_mapped.push_back(first.new_id[v]);
        const auto second = remove_nodes(first.graph, b_mapped);

        CHECK(direct.graph.node_count() == second.graph.node_count());
        CHECK(direct.graph.edge_count() == second.graph.edge_count());
        // same surviving original ids
        std::vector<NodeId> survivors;
        for (NodeId v : second.kept) survivors.push_back(first.kept[v]);
        CHECK(direct.kept == survivors);
        for (NodeId v = 0; v < direct.graph.node_count(); ++v)
            CHECK(direct.graph.neighbors(v) == second.graph.neighbors(v));
    }
}

TEST_CASE("add_edge merges at most two components") {
    Rng rng(12345);
    for (int it = 0; it < 20; ++it) {
        const NodeId n = 10 + static_cast<NodeId>(rng.below(100));
        Graph g = gen_gnm(n, n / 2, rng);
        for (int step = 0; step < 30; ++step) {
            const auto before = connected_components(g);
            const NodeId u = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
            const NodeId v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
            const bool added = g.add_edge(u, v);
            const auto after = connected_components(g);

            std::int64_t total = 0;
            for (auto s : after.component_sizes) total += s;
            CHECK(total == n);

            if (!added || before.label[u] == before.label[v]) {
                CHECK(after.component_sizes.size() == before.component_sizes.size());
            } else {
                CHECK(after.component_sizes.size() + 1 == before.component_sizes.size());
            }
        }
    }
}
