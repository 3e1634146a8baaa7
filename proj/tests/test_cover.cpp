#include "doctest.h"

#include <random>

#include "dpcolor/corpus.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/errors.hpp"
#include "oracles.hpp"

using namespace dpcolor;

TEST_CASE("cover validation") {
    Graph k2 = complete_graph(2);
    Cover ok;
    ok.base = k2;
    ok.fiber_sizes = {2, 2};
    ok.matchings[{0, 1}] = {{0, 0}, {1, 1}};
    CHECK(validate(ok).ok);

    Cover repeated = ok;
    repeated.matchings[{0, 1}] = {{0, 0}, {0, 1}};  // first coordinate twice
    auto res = validate(repeated);
    CHECK_FALSE(res.ok);
    CHECK(res.bad_edge == std::pair<int, int>{0, 1});

    Cover c3;
    c3.base = cycle_graph(3);
    c3.fiber_sizes = {1, 1, 1};
    for (auto e : c3.base.edges()) c3.matchings[e] = {{0, 0}};
    CHECK(validate(c3).ok);

    Cover out_of_range = ok;
    out_of_range.matchings[{0, 1}] = {{0, 2}};
    CHECK_FALSE(validate(out_of_range).ok);

    Cover not_an_edge;
    not_an_edge.base = path_graph(3);
    not_an_edge.fiber_sizes = {1, 1, 1};
    not_an_edge.matchings[{0, 2}] = {{0, 0}};
    CHECK_FALSE(validate(not_an_edge).ok);
    CHECK_THROWS_AS(make_cover(path_graph(3), {1, 1, 1}, {{{0, 2}, {{0, 0}}}}), InvalidCover);
}

TEST_CASE("cover_from_lists") {
    Graph k2 = complete_graph(2);
    Cover identical = cover_from_lists(k2, {{1, 2}, {1, 2}});
    CHECK(identical.matchings.at({0, 1}) == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

    Cover disjoint = cover_from_lists(k2, {{1, 2}, {3, 4}});
    CHECK(disjoint.matchings.count({0, 1}) == 0);

    // Constant 2-lists on the triangle: every transversal induces an edge.
    Cover c3 = cover_from_lists(cycle_graph(3), {{1, 2}, {1, 2}, {1, 2}});
    PropertyOracle o = edgeless_property();
    CHECK_FALSE(oracles::brute_has_P_transversal(c3, o));
    CHECK_FALSE(find_P_transversal(c3, o).has_value());
}

TEST_CASE("find_P_transversal") {
    PropertyOracle o = edgeless_property();
    Cover c3 = identity_cover(cycle_graph(3), 2);
    CHECK_FALSE(find_P_transversal(c3, o).has_value());

    Cover c4 = identity_cover(cycle_graph(4), 2);
    auto t = find_P_transversal(c4, o);
    REQUIRE(t.has_value());
    // Witness re-validates: the chosen H-vertices induce an edgeless graph.
    auto flats = transversal_flats(c4, *t);
    CHECK(o.is_member(induced_subgraph(flat_h(c4), flats).graph));

    // (P,v)-transversals on the odd cycle exist for every forbidden vertex.
    for (int v = 0; v < 3; ++v) {
        auto pt = find_P_transversal(c3, o, v);
        REQUIRE(pt.has_value());
        CHECK((*pt)[v] == -1);
        int assigned = 0;
        for (int u = 0; u < 3; ++u)
            if ((*pt)[u] >= 0) ++assigned;
        CHECK(assigned == 2);
    }
}

TEST_CASE("is_P_critical_cover") {
    PropertyOracle o = edgeless_property();
    Cover matched = make_cover(complete_graph(2), {1, 1}, {{{0, 1}, {{0, 0}}}});
    CHECK(is_P_critical_cover(matched, o));

    Cover unmatched = make_cover(complete_graph(2), {1, 1}, {});
    CHECK_FALSE(is_P_critical_cover(unmatched, o));  // has a transversal

    Cover c5 = identity_cover(cycle_graph(5), 2);
    CHECK(is_P_critical_cover(c5, o));
    CHECK_FALSE(oracles::brute_has_P_transversal(c5, o));
}

TEST_CASE("low vertex subgraph and exact contact degrees") {
    PropertyOracle o = edgeless_property();

    Cover k2 = make_cover(complete_graph(2), {1, 1}, {{{0, 1}, {{0, 0}}}});
    auto low = low_vertex_subgraph(k2, o);
    CHECK(low.low_set == std::vector<int>{0, 1});
    CHECK(low.f.graph.is_complete());

    Cover c5 = identity_cover(cycle_graph(5), 2);
    auto low5 = low_vertex_subgraph(c5, o);
    CHECK(low5.low_set.size() == 5);
    CHECK(low5.f.graph.is_cycle());

    Cover k4 = identity_cover(complete_graph(4), 3);
    auto low4 = low_vertex_subgraph(k4, o);
    CHECK(low4.low_set.size() == 4);
    CHECK(low4.f.graph.is_complete());

    // Exact-degree fact: for each low vertex v and each (P,v)-transversal T,
    // d_{x,v} = r for every x in X_v and their sum is d_G(v).
    for (const Cover* cover : {&k2, &c5, &k4}) {
        REQUIRE(is_P_critical_cover(*cover, o));
        auto l = low_vertex_subgraph(*cover, o);
        for (int v : l.low_set) {
            auto t = find_P_transversal(*cover, o, v);
            REQUIRE(t.has_value());
            auto degs = fiber_degrees_into(*cover, *t, v);
            int sum = 0;
            for (int d : degs) {
                CHECK(d == 1);  // r = d(O) = 1
                sum += d;
            }
            CHECK(sum == cover->base.degree(v));
        }
    }
}

TEST_CASE("cover transversals agree with direct list coloring") {
    std::mt19937 rng(424242);
    PropertyOracle o = edgeless_property();
    PropertyOracle d1 = degenerate_property(1);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_graph(rng, n, 0.5);
        std::vector<std::vector<int>> lists(n);
        for (auto& l : lists) {
            int size = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < size; ++i) l.push_back(static_cast<int>(rng() % 6));
        }
        Cover cover = cover_from_lists(g, lists);
        CHECK(validate(cover).ok);
        // Deduplicate exactly as the cover construction does.
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
        for (const auto& p : {o, d1})
            CHECK(find_P_transversal(cover, p).has_value() ==
                  oracles::brute_list_colorable(g, p, lists));
    }
}

TEST_CASE("restriction keeps solvability") {
    // A transversal of a cover restricts to a transversal of the cover
    // induced on any vertex subset.
    std::mt19937 rng(99);
    PropertyOracle o = edgeless_property();
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = oracles::random_graph(rng, n, 0.5);
        Cover cover = oracles::random_cover(rng, g, 2);
        if (!find_P_transversal(cover, o)) continue;

        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
        std::vector<int> inv(g.n, -1);
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i) inv[sub.to_parent[i]] = static_cast<int>(i);
        for (const auto& [e, pairs] : cover.matchings) {
            auto [u, v] = e;
            if (inv[u] >= 0 && inv[v] >= 0) matchings[{inv[u], inv[v]}] = pairs;
        }
        Cover restricted = make_cover(sub.graph, std::vector<int>(sub.graph.n, 2), std::move(matchings));
        CHECK(find_P_transversal(restricted, o).has_value());
    }
}

TEST_CASE("flat export matches the matchings") {
    Cover c = identity_cover(cycle_graph(3), 2);
    Graph h = flat_h(c);
    CHECK(h.n == 6);
    CHECK(h.edge_count() == 6);  // two disjoint triangles
    CHECK(h.has_edge(c.flat(0, 0), c.flat(1, 0)));
    CHECK_FALSE(h.has_edge(c.flat(0, 0), c.flat(1, 1)));
}
