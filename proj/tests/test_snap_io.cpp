#include "netrobust/snap_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "netrobust/game.hpp"
#include "netrobust/generate.hpp"
#include "netrobust/protocols.hpp"
#include "test_util.hpp"

using namespace netrobust;

TEST_CASE("reciprocal pairs collapse to one undirected edge") {
    std::istringstream in("# c\n0 1\n1 0\n1 2\n");
    const auto res = load_snap_edgelist(in);
    CHECK(res.graph.node_count() == 3);
    CHECK(res.graph.edge_count() == 2);
    CHECK(res.data_lines == 3);
    CHECK(res.comment_lines == 1);
}

TEST_CASE("self-loop lines are dropped, not errors") {
    std::istringstream in("0 0\n0 1\n");
    const auto res = load_snap_edgelist(in);
    CHECK(res.graph.node_count() == 2);
    CHECK(res.graph.edge_count() == 1);
    CHECK(res.self_loop_lines == 1);
}

TEST_CASE("malformed lines report the line number") {
    std::istringstream in("0 1\n2 x\n");
    CHECK_THROWS_WITH_AS(load_snap_edgelist(in), doctest::Contains("line 2"),
                         std::runtime_error);

    std::istringstream three("0 1 2\n");
    CHECK_THROWS_AS(load_snap_edgelist(three), std::runtime_error);

    std::istringstream one("0\n");
    CHECK_THROWS_AS(load_snap_edgelist(one), std::runtime_error);
}

TEST_CASE("input with no data lines is an error") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_snap_edgelist(empty), std::runtime_error);
    std::istringstream comments("# only\n# comments\n");
    CHECK_THROWS_AS(load_snap_edgelist(comments), std::runtime_error);
}

TEST_CASE("CRLF and tab separators are accepted") {
    std::istringstream in("# h\r\n0\t1\r\n1\t2\r\n");
    const auto res = load_snap_edgelist(in);
    CHECK(res.graph.node_count() == 3);
    CHECK(res.graph.edge_count() == 2);
}

TEST_CASE("ids are compacted in ascending original order") {
    std::istringstream in("100 5\n7 100\n");
    const auto res = load_snap_edgelist(in);
    CHECK(res.original_ids == std::vector<std::int64_t>{5, 7, 100});
    // dense 2 = original 100, adjacent to both others
    CHECK(res.graph.degree(2) == 2);
}

TEST_CASE("write + reload reproduces the graph with identical dense ids") {
    Rng rng(555);
    for (int it = 0; it < 8; ++it) {
        BaSpec spec;
        spec.n = 50 + static_cast<NodeId>(rng.below(200));
        spec.m_attach = 2;
        spec.seed_size = 3;
        const Graph g = generate_ba(spec, rng);

        std::ostringstream out;
        write_snap_edgelist(g, out);
        std::istringstream in(out.str());
        const auto reloaded = load_snap_edgelist(in);

        REQUIRE(reloaded.graph.node_count() == g.node_count());
        CHECK(reloaded.graph.edge_count() == g.edge_count());
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(reloaded.graph.neighbors(v) == g.neighbors(v));
    }
}

TEST_CASE("epinions ingest matches the published counts" *
          doctest::skip(!netrobust::testing::epinions_path().has_value())) {
    const auto path = netrobust::testing::epinions_path();
    REQUIRE(path.has_value());
    const auto res = load_snap_file(*path);
    CHECK(res.graph.node_count() == 75879);
    CHECK(res.data_lines == 508837);

    // independent recount of the maximum degree from the raw file
    const auto ds = degrees(res.graph);
    NodeId max_deg = 0;
    for (const auto& [v, d] : ds) max_deg = std::max(max_deg, d);
    std::vector<std::int64_t> recount(res.original_ids.size(), 0);
    {
        std::ifstream raw(*path);
        std::string line;
        std::vector<std::pair<std::int64_t, std::int64_t>> seen;
        while (std::getline(raw, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::int64_t a, b;
            ls >> a >> b;
            if (a == b) continue;
            seen.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        auto dense = [&](std::int64_t orig) {
            return std::lower_bound(res.original_ids.begin(), res.original_ids.end(), orig) -
                   res.original_ids.begin();
        };
        for (const auto& [a, b] : seen) {
            ++recount[dense(a)];
            ++recount[dense(b)];
        }
    }
    std::int64_t max_recount = 0;
    for (auto d : recount) max_recount = std::max(max_recount, d);
    CHECK(max_deg == max_recount);

    // BFS oracle agrees on the giant-component fraction
    const auto uf = connected_components(res.graph);
    const auto bfs = netrobust::testing::bfs_components(res.graph);
    CHECK(uf.largest_size == bfs.largest_size);

    // the adversary corrupting k = 16 top-degree nodes picks exactly the
    // default fat list
    const auto fat = select_fat_nodes(res.graph, default_fat_count(res.graph.node_count()));
    auto plan = plan_targeted(res.graph, 16.0 / 75879.0);
    std::vector<NodeId> fat_sorted(fat.begin(), fat.end());
    std::sort(fat_sorted.begin(), fat_sorted.end());
    CHECK(plan.corrupted == fat_sorted);
}
