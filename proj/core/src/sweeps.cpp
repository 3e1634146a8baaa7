#include "dpcolor/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

// Runs fn(i) for i in [0, count) across workers; callers write results into
// index-addressed slots so aggregation order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(body);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string graph_id(const Graph& g, int index) {
    std::ostringstream os;
    os << "n" << g.n << "#" << index << "(m=" << g.edge_count() << ")";
    return os.str();
}

}  // namespace

SweepOutcome sweep_chain(int max_order, const std::vector<PropertyOracle>& props,
                         const Limits& lim) {
    SweepOutcome out;
    out.name = "chain";
    std::vector<Graph> graphs;
    for (int n = 1; n <= max_order; ++n)
        for (auto& g : connected_graphs_up_to_iso(n)) graphs.push_back(g);

    std::vector<std::vector<SweepItem>> slots(graphs.size());
    parallel_for(graphs.size(), lim.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        for (const auto& p : props) {
            SweepItem item;
            item.id = graph_id(g, static_cast<int>(i)) + "/" + p.name;
            int c = chi(g, p, lim).value;
            int cl = chi_list(g, p, lim).value;
            int cdp = chi_dp(g, p, lim).value;
            item.ok = c <= cl && cl <= cdp;
            std::ostringstream os;
            os << "chi=" << c << " chi_l=" << cl << " chi_dp=" << cdp;
            item.detail = os.str();
            slots[i].push_back(std::move(item));
        }
    });
    for (auto& vec : slots)
        for (auto& item : vec) {
            ++out.checked;
            if (!item.ok) {
                ++out.failures;
                out.items.push_back(item);
            }
        }
    return out;
}

BrooksSweep sweep_brooks(int max_order, const PropertyOracle& p, const Limits& lim) {
    BrooksSweep sweep;
    sweep.outcome.name = "brooks/" + p.name;
    std::vector<Graph> graphs;
    for (int n = 1; n <= max_order; ++n)
        for (auto& g : connected_graphs_up_to_iso(n)) graphs.push_back(g);

    struct Slot {
        SweepItem item;
        std::vector<DiscoveredCover> covers;
    };
    std::vector<Slot> slots(graphs.size());
    parallel_for(graphs.size(), lim.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        Slot& slot = slots[i];
        slot.item.id = graph_id(g, static_cast<int>(i)) + "/" + p.name;
        ChromaticResult dp = chi_dp(g, p, lim);
        VerdictReport rep = verify_brooks(g, p, lim, &dp);
        slot.item.ok = rep.holds;
        std::ostringstream os;
        os << "chi_dp=" << dp.value;
        if (!rep.exception_class.empty()) os << " exception=" << rep.exception_class;
        slot.item.detail = os.str();
        if (dp.bad_cover && dp.bad_witness_k >= 1 && is_P_critical_cover(*dp.bad_cover, p)) {
            DiscoveredCover dc;
            dc.id = slot.item.id + "@k" + std::to_string(dp.bad_witness_k);
            dc.cover = *dp.bad_cover;
            dc.k = dp.bad_witness_k;
            slot.covers.push_back(std::move(dc));
        }
    });
    for (auto& slot : slots) {
        ++sweep.outcome.checked;
        if (!slot.item.ok) {
            ++sweep.outcome.failures;
            sweep.outcome.items.push_back(slot.item);
        }
        for (auto& dc : slot.covers) sweep.critical_covers.push_back(std::move(dc));
    }
    return sweep;
}

// ---------------------------------------------------------------------------
// Constructibility-equivalence sweep

namespace {

std::vector<std::vector<std::pair<int, int>>> matching_options(int s) {
    // All partial matchings on s x s fibers; s <= 2 at sweep scale.
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(s, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == s) {
            out.push_back(cur);
            return;
        }
        rec(i + 1);
        for (int j = 0; j < s; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.emplace_back(i, j);
            rec(i + 1);
            cur.pop_back();
            used[j] = false;
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> fiber_f_options(int degree, int s, int fmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s, 0);
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == s) {
            if (sum >= degree) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= fmax; ++v) {
            cur[i] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

Theorem5Sweep sweep_theorem5(const Limits& lim, int workers) {
    (void)lim;
    Theorem5Sweep sweep;
    sweep.outcome.name = "theorem5";

    struct Unit {
        std::string name;
        Graph g;
        int s;
    };
    std::vector<Unit> units;
    auto add = [&](const std::string& name, const Graph& g) {
        units.push_back({name + "/s1", g, 1});
        units.push_back({name + "/s2", g, 2});
    };
    add("P2", path_graph(2));
    add("P3", path_graph(3));
    add("C3", cycle_graph(3));
    add("C4", cycle_graph(4));
    add("C5", cycle_graph(5));
    add("K4", complete_graph(4));
    add("bowtie", bowtie_graph());

    struct UnitResult {
        std::uint64_t configurations = 0, uncolorable = 0, constructible = 0;
        std::uint64_t discrepancies = 0, tightness_failures = 0;
        std::vector<SweepItem> failures;
    };
    std::vector<UnitResult> results(units.size());

    parallel_for(units.size(), workers, [&](std::size_t ui) {
        const Unit& unit = units[ui];
        UnitResult& res = results[ui];
        const Graph& g = unit.g;
        const int s = unit.s;
        auto edges = g.edges();
        auto moptions = matching_options(s);
        std::vector<std::vector<std::vector<int>>> foptions(g.n);
        for (int v = 0; v < g.n; ++v) foptions[v] = fiber_f_options(g.degree(v), s, 2);
        for (int v = 0; v < g.n; ++v)
            if (foptions[v].empty()) return;  // no degree-feasible f at this fiber size

        std::vector<std::size_t> midx(edges.size(), 0);
        while (true) {
            std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (!moptions[midx[e]].empty()) matchings[edges[e]] = moptions[midx[e]];
            Cover cover = make_cover(g, std::vector<int>(g.n, s), std::move(matchings));

            std::vector<std::size_t> fidx(g.n, 0);
            Configuration cfg{cover, std::vector<int>(cover.h_order, 0)};
            while (true) {
                for (int v = 0; v < g.n; ++v)
                    for (int i = 0; i < s; ++i)
                        cfg.f[cover.flat(v, i)] = foptions[v][fidx[v]][i];

                ++res.configurations;
                bool colorable = solve(cfg).has_value();
                bool constructible = is_constructible(cfg).has_value();
                if (!colorable) {
                    ++res.uncolorable;
                    if (!is_degree_tight(cfg)) ++res.tightness_failures;
                }
                if (constructible) ++res.constructible;
                if (colorable == constructible) {
                    ++res.discrepancies;
                    if (res.failures.size() < 16) {
                        std::ostringstream os;
                        os << unit.name << " matchings=[";
                        for (std::size_t e = 0; e < edges.size(); ++e) os << midx[e] << ",";
                        os << "] f=[";
                        for (int v = 0; v < g.n; ++v) os << fidx[v] << ",";
                        os << "] colorable=" << colorable << " constructible=" << constructible;
                        res.failures.push_back({unit.name, false, os.str()});
                    }
                }

                int pos = g.n - 1;
                while (pos >= 0 && ++fidx[pos] == foptions[pos].size()) fidx[pos--] = 0;
                if (pos < 0) break;
            }

            int epos = static_cast<int>(edges.size()) - 1;
            while (epos >= 0 && ++midx[epos] == moptions.size()) midx[epos--] = 0;
            if (epos < 0) break;
        }
    });

    for (const auto& res : results) {
        sweep.configurations += res.configurations;
        sweep.uncolorable += res.uncolorable;
        sweep.constructible += res.constructible;
        sweep.outcome.failures += res.discrepancies;
        sweep.tightness_failures += res.tightness_failures;
        for (const auto& f : res.failures) sweep.outcome.items.push_back(f);
    }
    sweep.outcome.checked = sweep.configurations;
    return sweep;
}

// ---------------------------------------------------------------------------
// Fixture corpus

std::vector<CoverFixture> builtin_cover_corpus() {
    std::vector<CoverFixture> out;
    PropertyOracle o = edgeless_property();
    PropertyOracle d1 = degenerate_property(1);

    out.push_back({"K2_matched_1cover_O",
                   make_cover(complete_graph(2), {1, 1}, {{{0, 1}, {{0, 0}}}}), o, 1});
    out.push_back({"C3_identity_2cover_O", identity_cover(cycle_graph(3), 2), o, 2});
    out.push_back({"C5_identity_2cover_O", identity_cover(cycle_graph(5), 2), o, 2});
    {
        Graph c4 = cycle_graph(4);
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> m;
        m[{0, 1}] = {{0, 0}, {1, 1}};
        m[{1, 2}] = {{0, 0}, {1, 1}};
        m[{2, 3}] = {{0, 0}, {1, 1}};
        m[{0, 3}] = {{0, 1}, {1, 0}};  // the twist
        out.push_back({"C4_twisted_2cover_O", make_cover(c4, {2, 2, 2, 2}, std::move(m)), o, 2});
    }
    out.push_back({"K4_identity_3cover_O", identity_cover(complete_graph(4), 3), o, 3});
    out.push_back({"C5_identity_3cover_O", identity_cover(cycle_graph(5), 3), o, 3});
    out.push_back({"C7_identity_3cover_O", identity_cover(cycle_graph(7), 3), o, 3});
    out.push_back({"Dir3_identity_3cover_O", identity_cover(gen_dirac(3, {1, 2}).graph, 3), o, 3});
    {
        // Two disjoint K_4 joined by the edge u-u'; L(u) = L(u') = [2,4],
        // everything else [1,3].
        Graph g = two_cliques_joined(3);
        std::vector<std::vector<int>> lists(g.n, {1, 2, 3});
        lists[0] = {2, 3, 4};
        lists[4] = {2, 3, 4};
        out.push_back({"TwoK4_list_3cover_O", cover_from_lists(g, lists), o, 3});
    }
    out.push_back({"K5_identity_2cover_D1", identity_cover(complete_graph(5), 2), d1, 2});
    return out;
}

SweepOutcome sweep_classification(const std::vector<CoverFixture>& corpus, const Limits& lim) {
    (void)lim;
    SweepOutcome out;
    out.name = "classification";
    for (const auto& fx : corpus) {
        bool critical = is_P_critical_cover(fx.cover, fx.property);
        if (critical) {
            ++out.checked;
            VerdictReport rep = verify_low_vertex_blocks(fx.cover, fx.property);
            if (!rep.holds) {
                ++out.failures;
                out.items.push_back({fx.name + "/theorem1", false, "unclassified low-vertex block"});
            }
        }
        // The whole-graph block classification applies to uncolorable covers
        // meeting the degree bound.
        int r = fx.property.d_value.value_or(0);
        bool precondition = r > 0;
        for (int v = 0; v < fx.cover.base.n && precondition; ++v)
            if (r * fx.cover.fiber_sizes[v] < fx.cover.base.degree(v)) precondition = false;
        if (precondition && is_connected(fx.cover.base) &&
            !find_P_transversal(fx.cover, fx.property)) {
            ++out.checked;
            VerdictReport rep = verify_ert(fx.cover.base, fx.cover, fx.property);
            if (!rep.holds) {
                ++out.failures;
                out.items.push_back({fx.name + "/ert", false, "unclassified block"});
            }
        }
    }
    return out;
}

SweepOutcome sweep_gallai(const std::vector<CoverFixture>& corpus,
                          const std::vector<DiscoveredCover>& discovered, const Limits& lim) {
    SweepOutcome out;
    out.name = "gallai";
    auto run = [&](const std::string& name, const Cover& cover, const PropertyOracle& p, int k) {
        if (k < 3) return;
        if (!is_P_critical_cover(cover, p)) {
            out.items.push_back({name, true, "not a P-critical cover; excluded from the bound"});
            return;
        }
        ++out.checked;
        VerdictReport rep =
            check_edge_bounds(cover.base, p, k, EdgeBoundMode::Gallai, &cover, lim);
        if (!rep.holds) {
            ++out.failures;
            std::string bound;
            for (auto& [label, val] : rep.numbers)
                if (label == "bound") bound = val;
            out.items.push_back({name, false, "Gallai bound violated: bound=" + bound});
        } else if (!rep.exception_class.empty()) {
            out.items.push_back({name, true, "exempt: K_{kr+1}"});
        }
    };
    for (const auto& fx : corpus) run(fx.name, fx.cover, fx.property, fx.k);
    PropertyOracle o = edgeless_property();
    for (const auto& dc : discovered) run(dc.id, dc.cover, o, dc.k);
    return out;
}

bool is_list_associated(const Cover& c) {
    std::vector<int> parent(c.h_order);
    for (int x = 0; x < c.h_order; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < c.h_order; ++x)
        for (int y : c.h_adj[x])
            if (x < y) parent[find(x)] = find(y);
    // Two same-fiber vertices in one color class defeat any global labeling.
    std::map<std::pair<int, int>, bool> seen;
    for (int x = 0; x < c.h_order; ++x) {
        auto key = std::make_pair(find(x), c.h_vertex[x]);
        if (seen.count(key)) return false;
        seen[key] = true;
    }
    return true;
}

DiracScan dirac_cover_scan(int k, std::pair<int, int> split, const Limits& lim) {
    DiracScan scan;
    scan.k = k;
    scan.split = split;
    Graph g = gen_dirac(k, split).graph;
    PropertyOracle o = edgeless_property();

    // Spanning tree by BFS; identities there, full matchings elsewhere.
    std::vector<bool> visited(g.n, false);
    std::vector<int> queue{0};
    visited[0] = true;
    std::set<std::pair<int, int>> tree;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.adj[u])
            if (!visited[w]) {
                visited[w] = true;
                queue.push_back(w);
                tree.insert({std::min(u, w), std::max(u, w)});
            }
    }
    std::vector<std::pair<int, int>> free_edges;
    for (auto e : g.edges())
        if (!tree.count(e)) free_edges.push_back(e);

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> idx(free_edges.size(), 0);
    std::uint64_t budget = lim.budget;
    while (true) {
        if (scan.covers >= budget) throw TooLarge("dirac-cover-scan budget exhausted");
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
        for (auto e : tree) {
            std::vector<std::pair<int, int>> m;
            for (int i = 0; i < k; ++i) m.emplace_back(i, i);
            matchings[e] = std::move(m);
        }
        for (std::size_t e = 0; e < free_edges.size(); ++e) {
            std::vector<std::pair<int, int>> m;
            for (int i = 0; i < k; ++i) m.emplace_back(i, perms[idx[e]][i]);
            matchings[free_edges[e]] = std::move(m);
        }
        Cover cover = make_cover(g, std::vector<int>(g.n, k), std::move(matchings));
        ++scan.covers;
        if (!find_P_transversal(cover, o)) {
            ++scan.uncolorable;
            if (is_list_associated(cover))
                ++scan.list_associated_uncolorable;
            else
                ++scan.non_list_uncolorable;
        }
        int pos = static_cast<int>(free_edges.size()) - 1;
        while (pos >= 0 && ++idx[pos] == perms.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return scan;
}

}  // namespace dpcolor
