#include "doctest.h"

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/property.hpp"
#include "oracles.hpp"

using namespace dpcolor;

namespace {

PropertyOracle triangle_free() {
    return custom_property(
        "triangle-free",
        [](const Graph& g) {
            for (int a = 0; a < g.n; ++a)
                for (int b = a + 1; b < g.n; ++b)
                    for (int c = b + 1; c < g.n; ++c)
                        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) return false;
            return true;
        },
        /*hereditary=*/true, /*additive=*/true, /*monotone=*/true);
}

}  // namespace

TEST_CASE("membership of the built-ins") {
    PropertyOracle o = edgeless_property();
    PropertyOracle d1 = degenerate_property(1);
    CHECK(o.is_member(build_graph({}, 1)));        // K_1
    CHECK_FALSE(o.is_member(complete_graph(2)));
    CHECK_FALSE(d1.is_member(cycle_graph(4)));
    CHECK(d1.is_member(path_graph(4)));

    // D_k membership agrees with the definition (every nonempty induced
    // subgraph has a vertex of degree <= k) on all graphs of order <= 5.
    for (int n = 0; n <= 5; ++n) {
        for (const Graph& g : all_labeled_graphs(n)) {
            for (int k = 0; k <= 2; ++k) {
                std::vector<int> f(g.n, k + 1);
                std::uint64_t full = g.n == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.n));
                bool brute = oracles::brute_strictly_f_degenerate(g.bits, f, full);
                CHECK(degenerate_property(k).is_member(g) == brute);
            }
        }
    }
}

TEST_CASE("is_cr examples") {
    PropertyOracle o = edgeless_property();
    CHECK(is_cr(o, complete_graph(2)));
    CHECK_FALSE(is_cr(o, complete_graph(3)));
    CHECK(is_cr(degenerate_property(1), cycle_graph(5)));

    // CR(D_1) is exactly the connected 2-regular graphs, order <= 5.
    PropertyOracle d1 = degenerate_property(1);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_labeled_graphs(n)) {
            bool expected = is_connected(g) && g.regular_degree() == 2;
            CHECK(is_cr(d1, g) == expected);
        }
}

TEST_CASE("d_of") {
    CHECK(d_of(edgeless_property()).value == 1);
    CHECK(d_of(edgeless_property()).exact);
    for (int k = 0; k <= 3; ++k) CHECK(d_of(degenerate_property(k)).value == k + 1);

    auto tf = triangle_free();
    DValue d = d_of(tf, 4);
    CHECK(d.value == 2);  // CR member K_3 has minimum degree 2
    CHECK_FALSE(d.exact);

    // No CR member within reach: order <= 10 is hereditary with CR members
    // of order 11.
    auto small = custom_property("order<=10", [](const Graph& g) { return g.n <= 10; },
                                 true, false, false);
    CHECK_THROWS_AS(d_of(small, 4), SearchExhausted);
}

TEST_CASE("validate_coloring") {
    PropertyOracle o = edgeless_property();
    Graph k2 = complete_graph(2);
    CHECK_FALSE(validate_coloring(o, k2, {5, 5}));
    CHECK(validate_coloring(o, k2, {5, 7}));

    // K_4 split into two K_2 classes is fine for D_1.
    CHECK(validate_coloring(degenerate_property(1), complete_graph(4), {0, 0, 1, 1}));
    CHECK_FALSE(validate_coloring(o, k2, {1}));  // not total
}

TEST_CASE("declared flags survive the spot-check") {
    CHECK(verify_flags(edgeless_property(), 4));
    CHECK(verify_flags(degenerate_property(1), 4));
    CHECK(verify_flags(degenerate_property(2), 4));
    CHECK(verify_flags(triangle_free(), 4));

    // A wrong hereditary flag is caught: "has at least one edge" is not
    // induced-closed.
    auto bogus = custom_property("has-edge", [](const Graph& g) { return g.edge_count() > 0; },
                                 true, false, false);
    CHECK_FALSE(verify_flags(bogus, 3));
}

TEST_CASE("CR minimal-obstruction facts at order <= 5") {
    for (const PropertyOracle& p :
         {edgeless_property(), degenerate_property(1), degenerate_property(2)}) {
        // (a) K_0 and K_1 belong to P.
        CHECK(p.is_member(build_graph({}, 0)));
        CHECK(p.is_member(build_graph({}, 1)));

        int r = d_of(p).value;
        for (int n = 0; n <= 5; ++n) {
            for (const Graph& g : all_labeled_graphs(n)) {
                bool member = p.is_member(g);

                // (b) CR iff not a member while every proper induced subgraph is.
                bool proper_all_in = true;
                for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
                    if (sub == (std::uint64_t{1} << n) - 1) continue;
                    std::vector<int> verts;
                    for (int v = 0; v < n; ++v)
                        if ((sub >> v) & 1) verts.push_back(v);
                    if (!p.is_member(induced_subgraph(g, verts).graph)) {
                        proper_all_in = false;
                        break;
                    }
                }
                CHECK(is_cr(p, g) == (!member && proper_all_in));

                // (c) non-membership iff some induced subgraph is CR.
                bool has_cr_sub = false;
                for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n) && !has_cr_sub; ++sub) {
                    std::vector<int> verts;
                    for (int v = 0; v < n; ++v)
                        if ((sub >> v) & 1) verts.push_back(v);
                    if (is_cr(p, induced_subgraph(g, verts).graph)) has_cr_sub = true;
                }
                CHECK(!member == has_cr_sub);

                // (e) a vertex whose removal restores membership has degree >= d(P).
                if (!member) {
                    for (int v = 0; v < n; ++v)
                        if (p.is_member(delete_vertex(g, v))) CHECK(g.degree(v) >= r);
                }
            }
        }
    }
}

TEST_CASE("property tokens") {
    CHECK(property_from_token("O").name == "O");
    CHECK(property_from_token("D1").degeneracy_k == 1);
    CHECK(property_from_token("D10").d_value == 11);
    CHECK_THROWS_AS(property_from_token("X"), ParseError);
    CHECK_THROWS_AS(property_from_token("D"), ParseError);
    CHECK_THROWS_AS(property_from_token("D-1"), ParseError);
}
