#include "doctest.h"

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/sweeps.hpp"
#include "dpcolor/theorems.hpp"

using namespace dpcolor;

namespace {
const PropertyOracle O = edgeless_property();
const PropertyOracle D1 = degenerate_property(1);

Cover twisted_c4() {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> m;
    m[{0, 1}] = {{0, 0}, {1, 1}};
    m[{1, 2}] = {{0, 0}, {1, 1}};
    m[{2, 3}] = {{0, 0}, {1, 1}};
    m[{0, 3}] = {{0, 1}, {1, 0}};
    return make_cover(cycle_graph(4), {2, 2, 2, 2}, std::move(m));
}
}  // namespace

TEST_CASE("verify_low_vertex_blocks") {
    auto rep = verify_low_vertex_blocks(identity_cover(cycle_graph(5), 2), O);
    CHECK(rep.holds);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].cls == "Cycle");

    auto rep2 = verify_low_vertex_blocks(
        make_cover(complete_graph(2), {1, 1}, {{{0, 1}, {{0, 0}}}}), O);
    CHECK(rep2.holds);
    CHECK(rep2.blocks[0].cls == "Complete");

    // C_5 identity 2-cover is not D_1-critical (mixed slots break the
    // cycles), so the check refuses to classify.
    CHECK_THROWS_AS(verify_low_vertex_blocks(identity_cover(cycle_graph(5), 2), D1), NotCritical);
}

TEST_CASE("verify_brooks exceptions") {
    auto c5 = verify_brooks(cycle_graph(5), O);
    CHECK(c5.holds);
    CHECK(c5.exception_class == "Cycle");

    auto k4 = verify_brooks(complete_graph(4), O);
    CHECK(k4.holds);
    CHECK(k4.exception_class == "CompleteGraph");

    auto c5d1 = verify_brooks(cycle_graph(5), D1);
    CHECK(c5d1.holds);
    CHECK(c5d1.exception_class == "RRegularCR");

    auto p3 = verify_brooks(path_graph(3), O);
    CHECK(p3.holds);
    CHECK(p3.exception_class.empty());

    CHECK_THROWS_AS(verify_brooks(build_graph({}, 2), O), PreconditionFailed);
}

TEST_CASE("verify_ert") {
    auto c3 = verify_ert(cycle_graph(3), identity_cover(cycle_graph(3), 2), O);
    CHECK(c3.holds);
    REQUIRE(c3.blocks.size() == 1);
    CHECK(c3.blocks[0].cls == "Complete");  // K_3 classifies as complete first

    Cover tw = twisted_c4();
    auto c4 = verify_ert(cycle_graph(4), tw, O);
    CHECK(c4.holds);
    CHECK(c4.blocks[0].cls == "Cycle");

    CHECK_THROWS_AS(verify_ert(complete_graph(4), identity_cover(complete_graph(4), 2), O),
                    PreconditionFailed);
    CHECK_THROWS_AS(verify_ert(cycle_graph(4), identity_cover(cycle_graph(5), 2), O),
                    PreconditionFailed);  // cover over a different graph

    // Colorable cover: vacuous.
    auto vac = verify_ert(cycle_graph(4), identity_cover(cycle_graph(4), 2), O);
    CHECK(vac.holds);
    CHECK(vac.blocks.empty());
}

TEST_CASE("Gallai bound with exact rationals") {
    Graph dir3 = gen_dirac(3, {1, 2}).graph;
    Cover cover = identity_cover(dir3, 3);
    auto rep = check_edge_bounds(dir3, O, 3, EdgeBoundMode::Gallai, &cover);
    CHECK(rep.holds);
    bool equality_note = false;
    for (const auto& n : rep.notes)
        if (n == "equality") equality_note = true;
    CHECK(equality_note);  // 2|E| = 22 = 286/13 exactly
    for (const auto& [label, val] : rep.numbers) {
        if (label == "bound") CHECK(val == "22");
        if (label == "2|E|") CHECK(val == "22");
    }

    // K_4 with its identity 3-cover is exempt as K_{kr+1}.
    Cover k4cover = identity_cover(complete_graph(4), 3);
    auto k4 = check_edge_bounds(complete_graph(4), O, 3, EdgeBoundMode::Gallai, &k4cover);
    CHECK(k4.holds);
    CHECK(k4.exception_class == "CompleteGraph");

    // A non-critical context is refused.
    Cover c5cover = identity_cover(cycle_graph(5), 3);
    CHECK_THROWS_AS(check_edge_bounds(cycle_graph(5), O, 3, EdgeBoundMode::Gallai, &c5cover),
                    PreconditionFailed);
}

TEST_CASE("Dirac bound") {
    Graph dir3 = gen_dirac(3, {1, 2}).graph;
    Cover cover = identity_cover(dir3, 3);
    auto rep = check_edge_bounds(dir3, O, 3, EdgeBoundMode::Dirac, &cover);
    CHECK(rep.holds);
    bool in_family = false, equality = false;
    for (const auto& [label, val] : rep.numbers)
        if (label == "in_dirac_family" && val == "true") in_family = true;
    for (const auto& n : rep.notes)
        if (n == "equality") equality = true;
    CHECK(in_family);
    CHECK(equality);  // 2*11 = 3*7 + 1 = 22

    // The two-K_4 fixture: contains K_4 (exempt), yet the bound holds
    // strictly: 26 > 25.
    Graph g = two_cliques_joined(3);
    std::vector<std::vector<int>> lists(g.n, {1, 2, 3});
    lists[0] = {2, 3, 4};
    lists[4] = {2, 3, 4};
    Cover lc = cover_from_lists(g, lists);
    REQUIRE(is_P_critical_cover(lc, O));
    auto rep2 = check_edge_bounds(g, O, 3, EdgeBoundMode::Dirac, &lc);
    CHECK(rep2.holds);
    CHECK(rep2.exception_class == "CompleteGraph");
    CHECK(2 * g.edge_count() == 26);
    CHECK(3 * g.n + 3 - 2 == 25);
}

TEST_CASE("Mihok bound") {
    auto rep = check_edge_bounds(path_graph(3), O, 2, EdgeBoundMode::Mihok);
    CHECK(rep.holds);
    for (const auto& [label, val] : rep.numbers)
        if (label == "lhs") CHECK(val == "2");

    // Delta(B) < p fails on C_4 with p = 2.
    CHECK_THROWS_AS(check_edge_bounds(cycle_graph(4), O, 2, EdgeBoundMode::Mihok),
                    PreconditionFailed);
    CHECK_THROWS_AS(check_edge_bounds(build_graph({}, 0), O, 2, EdgeBoundMode::Mihok),
                    PreconditionFailed);
}

TEST_CASE("gen_dirac and recognition") {
    DiracGraph d = gen_dirac(3, {1, 2});
    CHECK(d.graph.n == 7);
    CHECK(d.graph.edge_count() == 11);

    auto rec = recognize_dirac(d.graph, 3);
    CHECK(rec.has_value());
    CHECK_FALSE(recognize_dirac(cycle_graph(7), 3).has_value());
    CHECK_FALSE(recognize_dirac(complete_graph(7), 3).has_value());

    CHECK_THROWS_AS(gen_dirac(3, {0, 3}), BadSplit);
    CHECK_THROWS_AS(gen_dirac(2, {1, 1}), BadSplit);
    CHECK_THROWS_AS(gen_dirac(3, {2, 2}), BadSplit);

    DiracGraph d4 = gen_dirac(4, {2, 2});
    CHECK(d4.graph.n == 9);
    CHECK(d4.graph.edge_count() == 4 * 4 + 4 - 1);
    CHECK(recognize_dirac(d4.graph, 4).has_value());
}

TEST_CASE("dirac cover scan runs") {
    DiracScan scan = dirac_cover_scan(3, {1, 2});
    CHECK(scan.covers == 7776);  // (3!)^5 free-edge assignments
    CHECK(scan.uncolorable >= 1);  // the constant-list cover is among them
    CHECK(scan.uncolorable == scan.list_associated_uncolorable + scan.non_list_uncolorable);
}

TEST_CASE("is_list_associated") {
    CHECK(is_list_associated(identity_cover(cycle_graph(4), 2)));
    Cover tw = twisted_c4();
    CHECK_FALSE(is_list_associated(tw));
}
