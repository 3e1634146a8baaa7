// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/configuration.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/corpus.hpp"
#include "dpcolor/sweeps.hpp"
#include "dpcolor/theorems.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "dpcolor/mask_ops.hpp"

using namespace dpcolor;

namespace {

struct Criterion {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

Criterion make_criterion(int id, std::string label) {
    Criterion c;
    c.id = id;
    c.label = std::move(label);
    return c;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

Limits accept_limits() {
    Limits lim;
    lim.workers = 2;
    lim.budget = 50'000'000;
    return lim;
}

// 1. chi_dp(C_n, O) = 3 for n in {4, 5, 6}, under 10 s each.
Criterion criterion1() {
    Criterion c = make_criterion(1, "chi_dp(C_n, O) = 3 for n in {4,5,6}, <10s each");
    PropertyOracle o = edgeless_property();
    c.pass = true;
    std::ostringstream detail;
    for (int n : {4, 5, 6}) {
        auto t0 = now_seconds();
        int value = chi_dp(cycle_graph(n), o, accept_limits()).value;
        double dt = now_seconds() - t0;
        detail << "C" << n << "=" << value << " (" << dt << "s) ";
        if (value != 3 || dt >= 10.0) c.pass = false;
    }
    c.detail = detail.str();
    return c;
}

// 2. The chain inequality for all connected graphs of order <= 5, O and D1.
Criterion criterion2() {
    Criterion c = make_criterion(2, "chain chi <= chi_l <= chi_dp on all connected graphs of order <= 5 (O, D1)");
    auto sweep = sweep_chain(5, {edgeless_property(), degenerate_property(1)}, accept_limits());
    c.pass = sweep.all_ok();
    std::ostringstream detail;
    detail << sweep.checked << " (graph, property) pairs, " << sweep.failures << " violations";
    c.detail = detail.str();
    return c;
}

// 3 + 5. Constructibility equivalence and fiber-sum exactness over the sweep.
Theorem5Sweep run_theorem5_once() {
    static Theorem5Sweep sweep = sweep_theorem5(accept_limits(), 2);
    return sweep;
}

Criterion criterion3() {
    Criterion c = make_criterion(3, "solve none <=> constructible over the fixed small-graph corpus");
    auto sweep = run_theorem5_once();
    c.pass = sweep.outcome.failures == 0;
    std::ostringstream detail;
    detail << sweep.configurations << " configurations, " << sweep.uncolorable
           << " uncolorable, " << sweep.constructible << " constructible, "
           << sweep.outcome.failures << " discrepancies";
    c.detail = detail.str();
    return c;
}

Criterion criterion5() {
    Criterion c = make_criterion(5, "uncolorable degree-feasible => exact fiber sums");
    auto sweep = run_theorem5_once();
    c.pass = sweep.tightness_failures == 0;
    std::ostringstream detail;
    detail << sweep.uncolorable << " uncolorable configurations, " << sweep.tightness_failures
           << " tightness violations";
    c.detail = detail.str();
    return c;
}

// 4. 1000 builder/merge outputs and 1000 reductions stay uncolorable and
// degree-feasible.
Criterion criterion4() {
    Criterion c = make_criterion(4, "builder/merge and reduction property suite, 1000 + 1000 random instances");
    std::mt19937 rng(777001);
    int built_failures = 0, reduce_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Configuration cfg = fixtures::random_constructible(rng);
        if (solve(cfg).has_value() || !is_degree_feasible(cfg)) ++built_failures;
    }
    int reductions = 0;
    while (reductions < 1000) {
        Configuration cfg = fixtures::random_constructible(rng);
        auto decomp = block_decomposition(cfg.cover.base);
        std::vector<std::pair<int, int>> pivots;
        for (int v = 0; v < cfg.cover.base.n; ++v) {
            if (decomp.is_cut(v)) continue;
            for (int i = 0; i < cfg.cover.fiber_sizes[v]; ++i)
                if (cfg.f_at(v, i) > 0) pivots.emplace_back(v, i);
        }
        if (pivots.empty()) continue;
        auto [v, i] = pivots[rng() % pivots.size()];
        Configuration red = reduce(cfg, v, i);
        if (solve(red).has_value() || !is_degree_feasible(red)) ++reduce_failures;
        ++reductions;
    }
    c.pass = built_failures == 0 && reduce_failures == 0;
    std::ostringstream detail;
    detail << "builder/merge failures " << built_failures << "/1000, reduction failures "
           << reduce_failures << "/1000";
    c.detail = detail.str();
    return c;
}

// 6. Brooks-type sweep over all connected graphs of order <= 6 for O and D1.
std::vector<DiscoveredCover> g_discovered;

Criterion criterion6() {
    Criterion c = make_criterion(6, "Brooks-type sweep on all connected graphs of order <= 6 (O, D1)");
    std::uint64_t checked = 0, failures = 0;
    for (const PropertyOracle& p : {edgeless_property(), degenerate_property(1)}) {
        BrooksSweep sweep = sweep_brooks(6, p, accept_limits());
        checked += sweep.outcome.checked;
        failures += sweep.outcome.failures;
        for (auto& dc : sweep.critical_covers) g_discovered.push_back(std::move(dc));
    }
    c.pass = failures == 0;
    std::ostringstream detail;
    detail << checked << " graphs checked, " << failures << " unexplained violations, "
           << g_discovered.size() << " critical covers harvested";
    c.detail = detail.str();
    return c;
}

// 7. Dirac extremality for k = 3 plus the two-K_4 list fixture.
Criterion criterion7() {
    Criterion c = make_criterion(7, "Dirac extremality at k = 3 and the two-K_4 fixture");
    PropertyOracle o = edgeless_property();
    Limits lim = accept_limits();
    std::ostringstream detail;
    bool ok = true;

    DiracGraph d = gen_dirac(3, {1, 2});
    ok &= d.graph.n == 7;
    ok &= d.graph.edge_count() == 11;
    ok &= chi(d.graph, o, lim).value == 4;
    for (int v = 0; v < d.graph.n; ++v)
        ok &= chi(delete_vertex(d.graph, v), o, lim).value == 3;
    ok &= 2 * d.graph.edge_count() == 3 * d.graph.n + 3 - 2;
    detail << "Dir(3): n=" << d.graph.n << " m=" << d.graph.edge_count()
           << " chi=" << chi(d.graph, o, lim).value << " equality="
           << (2 * d.graph.edge_count() == 3 * d.graph.n + 1) << "; ";

    Graph g = two_cliques_joined(3);
    std::vector<std::vector<int>> lists(g.n, {1, 2, 3});
    lists[0] = {2, 3, 4};
    lists[4] = {2, 3, 4};
    Cover lc = cover_from_lists(g, lists);
    bool critical = is_P_critical_cover(lc, o);
    bool strict = 2 * g.edge_count() > 3 * g.n + 3 - 2;
    ok &= critical && strict;
    detail << "two-K4: critical=" << critical << " 2|E|=" << 2 * g.edge_count()
           << " bound=" << 3 * g.n + 1 << " strict=" << strict;

    c.pass = ok;
    c.detail = detail.str();
    return c;
}

// 8. Gallai bound over the fixture corpus plus everything harvested in 6.
Criterion criterion8() {
    Criterion c = make_criterion(8, "Gallai exact-rational bound on the critical k-cover corpus");
    auto outcome = sweep_gallai(builtin_cover_corpus(), g_discovered, accept_limits());
    bool k4_exempt = false;
    for (const auto& item : outcome.items)
        if (item.id == "K4_identity_3cover_O" && item.detail.find("exempt") != std::string::npos)
            k4_exempt = true;
    c.pass = outcome.failures == 0 && k4_exempt;
    std::ostringstream detail;
    detail << outcome.checked << " critical k-covers checked, " << outcome.failures
           << " violations, K4 exempted=" << k4_exempt;
    c.detail = detail.str();
    return c;
}

// 9. Block classification over the corpus.
Criterion criterion9() {
    Criterion c = make_criterion(9, "low-vertex / whole-graph block classification over the corpus");
    auto corpus = builtin_cover_corpus();
    PropertyOracle o = edgeless_property();
    for (const auto& dc : g_discovered) corpus.push_back({dc.id, dc.cover, o, dc.k});
    auto outcome = sweep_classification(corpus, accept_limits());
    c.pass = outcome.failures == 0;
    std::ostringstream detail;
    detail << outcome.checked << " classification checks, " << outcome.failures
           << " unclassified blocks";
    c.detail = detail.str();
    return c;
}

// 10. Oracle equivalences: peeling vs brute force, reduced vs raw covers.
Criterion criterion10() {
    Criterion c = make_criterion(10, "Oracle equivalences (peeling 10^4 trials; covers at order <= 4, k = 2)");
    std::mt19937 rng(424243);
    int peel_disagreements = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph h = oracles::random_graph(rng, n, 0.5);
        std::vector<int> f(n);
        for (int& x : f) x = static_cast<int>(rng() % 4);
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (oracles::brute_strictly_f_degenerate(h.bits, f, mask) !=
            strictly_f_degenerate_mask(h.bits, f, mask))
            ++peel_disagreements;
    }
    int cover_disagreements = 0;
    int cover_checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            for (const PropertyOracle& p : {edgeless_property(), degenerate_property(1)}) {
                bool raw = oracles::raw_all_k_covers_colorable(g, p, 2);
                bool reduced = chi_dp_decide(g, p, 2, accept_limits()).all_coverable;
                ++cover_checked;
                if (raw != reduced) ++cover_disagreements;
            }
        }
    }
    c.pass = peel_disagreements == 0 && cover_disagreements == 0;
    std::ostringstream detail;
    detail << "peeling disagreements " << peel_disagreements << "/10000, cover disagreements "
           << cover_disagreements << "/" << cover_checked;
    c.detail = detail.str();
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion (*)()> runners{criterion1, criterion2, criterion3, criterion4,
                                         criterion5, criterion6, criterion7, criterion8,
                                         criterion9, criterion10};
    bool all = true;
    for (auto runner : runners) {
        double t0 = now_seconds();
        Criterion c = runner();
        c.seconds = now_seconds() - t0;
        all &= c.pass;
        std::printf("%s  criterion %d: %s  [%s]  (%.1fs)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), c.detail.c_str(), c.seconds);
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
