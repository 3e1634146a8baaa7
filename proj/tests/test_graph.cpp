#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/graph_io.hpp"
#include "oracles.hpp"

using namespace dpcolor;

TEST_CASE("build_graph basics") {
    Graph k1 = build_graph({}, 1);
    CHECK(k1.n == 1);
    CHECK(k1.edge_count() == 0);

    Graph k3 = build_graph({{0, 1}, {1, 2}, {2, 0}}, 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    CHECK_THROWS_AS(build_graph({{0, 0}}, 1), InvalidGraph);
    CHECK_THROWS_AS(build_graph({{0, 3}}, 3), InvalidGraph);
    CHECK_THROWS_AS(build_graph({{-1, 0}}, 2), InvalidGraph);

    Graph dup = build_graph({{0, 1}, {1, 0}, {0, 1}}, 2);
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("block decomposition on named graphs") {
    Graph p3 = path_graph(3);
    auto d = block_decomposition(p3);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0] == std::vector<int>{0, 1});
    CHECK(d.blocks[1] == std::vector<int>{1, 2});
    CHECK(d.cut_vertices == std::vector<int>{1});

    Graph c4 = cycle_graph(4);
    auto dc = block_decomposition(c4);
    REQUIRE(dc.blocks.size() == 1);
    CHECK(dc.blocks[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(dc.cut_vertices.empty());

    // Two triangles sharing vertex 0; cut set checked against the
    // vertex-removal connectivity oracle.
    Graph bt = bowtie_graph();
    auto db = block_decomposition(bt);
    REQUIRE(db.blocks.size() == 2);
    CHECK(db.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(db.blocks[1] == std::vector<int>{0, 3, 4});
    CHECK(db.cut_vertices == oracles::brute_cut_vertices(bt));
    CHECK(db.cut_vertices == std::vector<int>{0});
}

TEST_CASE("blocks partition edges; cut vertices match the removal oracle") {
    std::mt19937 rng(20250811);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(rng, n, 0.4);
        auto d = block_decomposition(g);

        CHECK(d.cut_vertices == oracles::brute_cut_vertices(g));

        int edge_total = 0;
        std::set<std::pair<int, int>> seen;
        for (const auto& b : d.blocks) {
            Graph sub = induced_subgraph(g, b).graph;
            edge_total += sub.edge_count();
            for (auto [u, v] : sub.edges())
                CHECK(seen.insert({b[u], b[v]}).second);  // no edge in two blocks
        }
        CHECK(edge_total == g.edge_count());

        // A vertex lies in >= 2 blocks iff it separates.
        std::vector<int> appearances(g.n, 0);
        for (const auto& b : d.blocks)
            for (int v : b) ++appearances[v];
        for (int v = 0; v < g.n; ++v)
            CHECK((appearances[v] >= 2) == d.is_cut(v));
    }
}

TEST_CASE("classify_block") {
    for (int m = 1; m <= 6; ++m) {
        Graph g = complete_graph(m);
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        CHECK(classify_block(g, all).kind == BlockKind::Complete);
    }
    for (int m = 3; m <= 8; ++m) {
        Graph g = cycle_graph(m);
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        auto cls = classify_block(g, all);
        if (m == 3)
            CHECK(cls.kind == BlockKind::Complete);  // K_3 reports Complete first
        else
            CHECK(cls.kind == BlockKind::Cycle);
    }
    // K_4 minus one edge: Other, max degree 3, not regular.
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4);
    auto cls = classify_block(g, {0, 1, 2, 3});
    CHECK(cls.kind == BlockKind::Other);
    CHECK(cls.max_degree == 3);
    CHECK_FALSE(cls.regular_degree.has_value());
}

TEST_CASE("induced subgraph remap") {
    Graph g = build_graph({{0, 2}, {2, 4}, {1, 4}}, 5);
    auto sub = induced_subgraph(g, {4, 2, 0});
    CHECK(sub.graph.n == 3);
    CHECK(sub.to_parent == std::vector<int>{0, 2, 4});
    CHECK(sub.graph.has_edge(0, 1));  // 0-2
    CHECK(sub.graph.has_edge(1, 2));  // 2-4
    CHECK_FALSE(sub.graph.has_edge(0, 2));
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(build_graph({}, 1)) == "@");
    Graph c5 = from_graph6(to_graph6(cycle_graph(5)));
    CHECK(c5.n == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(from_graph6(">>graph6<<C~").is_complete());
}

TEST_CASE("graph6 roundtrip on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 12);
        Graph g = oracles::random_graph(rng, n, 0.5);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back.n == g.n);
        CHECK(back.edges() == g.edges());
    }
    // multi-byte size header
    Graph big = oracles::random_graph(rng, 70, 0.05);
    Graph back = from_graph6(to_graph6(big));
    CHECK(back.edges() == big.edges());
}

TEST_CASE("graph6 parse errors") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("C"), ParseError);      // truncated payload
    CHECK_THROWS_AS(from_graph6("C~~"), ParseError);    // trailing bytes
    CHECK_THROWS_AS(from_graph6("C\x01\x01\x01"), ParseError);
}

TEST_CASE("edge list format") {
    Graph g = cycle_graph(4);
    Graph back = from_edge_list(to_edge_list(g));
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(from_edge_list("not a number\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("2\n0\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("2\n0 1 7\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("1\n0 0\n"), ParseError);  // loop

    // format sniffing
    CHECK(parse_graph("C~").is_complete());
    CHECK(parse_graph("3\n0 1\n1 2\n").edge_count() == 2);
}

TEST_CASE("disconnected graphs decompose per component") {
    Graph g = build_graph({{0, 1}, {1, 2}, {3, 4}}, 6);  // path, edge, isolated vertex
    auto d = block_decomposition(g);
    CHECK(d.blocks.size() == 4);  // {0,1},{1,2},{3,4},{5}
    CHECK(d.cut_vertices == std::vector<int>{1});
    CHECK(component_count(g) == 3);
}
