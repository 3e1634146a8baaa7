#include "dpcolor/chromatic.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/mask_ops.hpp"

namespace dpcolor {

namespace {

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

// Incremental class-membership check for P-colorings of the base graph.
struct ClassChecker {
    const Graph& g;
    const PropertyOracle& p;
    std::vector<std::uint64_t> class_masks;

    ClassChecker(const Graph& graph, const PropertyOracle& prop) : g(graph), p(prop) {}

    bool can_join(int cls, int v) const {
        std::uint64_t next = class_masks[cls] | (std::uint64_t{1} << v);
        switch (p.builtin) {
            case BuiltinKind::Edgeless:
                return (g.bits[v] & class_masks[cls]) == 0;
            case BuiltinKind::Degenerate:
                return mask_k_degenerate(g.bits, next, p.degeneracy_k);
            case BuiltinKind::None:
                if (!p.hereditary) return true;
                return p.is_member(mask_induced(next));
        }
        return true;
    }

    Graph mask_induced(std::uint64_t mask) const {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        return induced_subgraph(g, verts).graph;
    }

    bool final_check(const std::vector<int>& coloring, int used) const {
        if (p.hereditary || p.builtin != BuiltinKind::None) return true;
        for (int c = 0; c < used; ++c) {
            std::vector<int> cls;
            for (int v = 0; v < g.n; ++v)
                if (coloring[v] == c) cls.push_back(v);
            if (!p.is_member(induced_subgraph(g, cls).graph)) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<int>> chi_decide(const Graph& g, const PropertyOracle& p, int k,
                                           const Limits& lim) {
    if (g.n > lim.max_order) throw TooLarge("chi restricted to order <= max_order");
    if (g.n == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    auto order = degree_order(g);
    std::vector<int> coloring(g.n, -1);
    ClassChecker checker(g, p);
    checker.class_masks.assign(k, 0);

    std::function<bool(int, int)> dfs = [&](int depth, int used) -> bool {
        if (depth == g.n) return checker.final_check(coloring, used);
        int v = order[depth];
        int limit = std::min(used + 1, k);  // first use of color c only after c-1
        for (int c = 0; c < limit; ++c) {
            if (!checker.can_join(c, v)) continue;
            coloring[v] = c;
            checker.class_masks[c] |= std::uint64_t{1} << v;
            if (dfs(depth + 1, std::max(used, c + 1))) return true;
            checker.class_masks[c] &= ~(std::uint64_t{1} << v);
            coloring[v] = -1;
        }
        return false;
    };
    if (dfs(0, 0)) return coloring;
    return std::nullopt;
}

ChromaticResult chi(const Graph& g, const PropertyOracle& p, const Limits& lim) {
    ChromaticResult res;
    res.method = "class_backtracking";
    if (g.n == 0) return res;
    for (int k = 1; k <= g.n; ++k) {
        auto col = chi_decide(g, p, k, lim);
        if (col) {
            res.value = k;
            res.coloring = *col;
            return res;
        }
    }
    throw SearchExhausted("no P-coloring with at most n colors; property lacks K_1?");
}

// ---------------------------------------------------------------------------
// Choosability

namespace {

bool list_colorable(const Graph& g, const PropertyOracle& p,
                    const std::vector<std::vector<int>>& lists) {
    if (g.n == 0) return true;
    // Dense color ids.
    std::map<int, int> dense;
    for (const auto& l : lists)
        for (int c : l) dense.emplace(c, 0);
    int nc = 0;
    for (auto& [c, id] : dense) id = nc++;

    auto order = degree_order(g);
    ClassChecker checker(g, p);
    checker.class_masks.assign(nc, 0);
    std::vector<int> coloring(g.n, -1);

    std::function<bool(int)> dfs = [&](int depth) -> bool {
        if (depth == g.n) return checker.final_check(coloring, nc);
        int v = order[depth];
        for (int c : lists[v]) {
            int id = dense[c];
            if (!checker.can_join(id, v)) continue;
            coloring[v] = id;
            checker.class_masks[id] |= std::uint64_t{1} << v;
            if (dfs(depth + 1)) return true;
            checker.class_masks[id] &= ~(std::uint64_t{1} << v);
            coloring[v] = -1;
        }
        return false;
    };
    return dfs(0);
}

struct ListDecider {
    const PropertyOracle& p;
    const Limits& lim;
    std::map<std::pair<std::uint64_t, int>, bool> known_choosable;
    std::uint64_t checked = 0;

    ListDecision decide(const Graph& g, int k) {
        ListDecision out;
        if (g.n == 0) {
            out.choosable = true;
            return out;
        }
        if (k <= 0) {
            out.choosable = false;
            out.bad_lists.assign(g.n, {});
            return out;
        }
        std::uint64_t code = canonical_code(g);
        if (known_choosable.count({code, k})) {
            out.choosable = true;
            return out;
        }

        // A color private to one vertex always extends: the vertex takes it
        // as a singleton class. So a bad assignment with such a color
        // restricts to a bad assignment of the vertex-deleted subgraph, and
        // conversely a bad assignment there lifts with fresh colors.
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> keep;
            for (int u = 0; u < g.n; ++u)
                if (u != v) keep.push_back(u);
            auto sub = induced_subgraph(g, keep);
            ListDecision rec = decide(sub.graph, k);
            if (!rec.choosable) {
                out.choosable = false;
                out.bad_lists.assign(g.n, {});
                int fresh = 0;
                for (const auto& l : rec.bad_lists)
                    for (int c : l) fresh = std::max(fresh, c + 1);
                for (int i = 0; i < sub.graph.n; ++i) out.bad_lists[sub.to_parent[i]] = rec.bad_lists[i];
                for (int c = 0; c < k; ++c) out.bad_lists[v].push_back(fresh + c);
                return out;
            }
        }

        // All remaining assignments have every color on >= 2 lists:
        // enumerate support multisets with per-vertex degree exactly k.
        std::vector<std::uint32_t> supports;
        for (std::uint32_t s = 0; s < (1u << g.n); ++s)
            if (std::popcount(s) >= 2) supports.push_back(s);
        std::sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
            if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
            return a < b;
        });
        std::vector<std::uint32_t> suffix_cover(supports.size() + 1, 0);
        for (int i = static_cast<int>(supports.size()) - 1; i >= 0; --i)
            suffix_cover[i] = suffix_cover[i + 1] | supports[i];

        std::vector<int> residual(g.n, k);
        std::vector<std::pair<std::uint32_t, int>> chosen;  // (support, multiplicity)
        std::optional<std::vector<std::vector<int>>> bad;

        std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
            std::uint32_t need = 0;
            for (int v = 0; v < g.n; ++v)
                if (residual[v] > 0) need |= 1u << v;
            if (idx == supports.size()) {
                if (need) return false;
                if (++checked > lim.budget) throw TooLarge("list-assignment enumeration budget exhausted");
                std::vector<std::vector<int>> lists(g.n);
                int color = 0;
                for (auto [s, mult] : chosen)
                    for (int m = 0; m < mult; ++m, ++color)
                        for (int v = 0; v < g.n; ++v)
                            if ((s >> v) & 1) lists[v].push_back(color);
                if (!list_colorable(g, p, lists)) {
                    bad = lists;
                    return true;
                }
                return false;
            }
            if ((need & ~suffix_cover[idx]) != 0) return false;  // some deficit unreachable
            std::uint32_t s = supports[idx];
            int maxmult = k;
            for (int v = 0; v < g.n; ++v)
                if ((s >> v) & 1) maxmult = std::min(maxmult, residual[v]);
            for (int mult = maxmult; mult >= 0; --mult) {
                if (mult > 0) {
                    for (int v = 0; v < g.n; ++v)
                        if ((s >> v) & 1) residual[v] -= mult;
                    chosen.emplace_back(s, mult);
                }
                bool found = dfs(idx + 1);
                if (mult > 0) {
                    chosen.pop_back();
                    for (int v = 0; v < g.n; ++v)
                        if ((s >> v) & 1) residual[v] += mult;
                }
                if (found) return true;
            }
            return false;
        };

        if (dfs(0)) {
            out.choosable = false;
            out.bad_lists = *bad;
            return out;
        }
        known_choosable[{code, k}] = true;
        out.choosable = true;
        return out;
    }
};

}  // namespace

ListDecision chi_list_decide(const Graph& g, const PropertyOracle& p, int k, const Limits& lim) {
    if (g.n > lim.max_order) throw TooLarge("choosability restricted to order <= max_order");
    if (g.n > 16) throw TooLarge("support enumeration restricted to order <= 16");
    ListDecider d{p, lim, {}, 0};
    ListDecision out = d.decide(g, k);
    out.assignments_checked = d.checked;
    return out;
}

ChromaticResult chi_list(const Graph& g, const PropertyOracle& p, const Limits& lim) {
    ChromaticResult res;
    res.method = "support_multiset_enumeration";
    if (g.n == 0) return res;
    for (int k = 1; k <= g.max_degree() + 2; ++k) {
        ListDecision d = chi_list_decide(g, p, k, lim);
        res.nodes += d.assignments_checked;
        if (d.choosable) {
            res.value = k;
            return res;
        }
        res.bad_lists = d.bad_lists;
        res.bad_witness_k = k;
    }
    throw SearchExhausted("not choosable with max-degree-plus-one lists; unexpected property");
}

// ---------------------------------------------------------------------------
// Cover enumeration

namespace {

using Matching = std::vector<std::pair<int, int>>;

std::vector<Matching> full_matchings(int k) {
    std::vector<Matching> out;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Matching m;
        for (int i = 0; i < k; ++i) m.emplace_back(i, perm[i]);
        out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<int> lens;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

// One full matching per conjugacy class of S_k (identity first). A single
// fiber relabeling applied everywhere conjugates each non-tree matching, so
// the first free edge only needs class representatives.
std::vector<Matching> conjugacy_representatives(int k) {
    std::vector<Matching> out;
    std::set<std::vector<int>> seen;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (seen.insert(cycle_type(perm)).second) {
            Matching m;
            for (int i = 0; i < k; ++i) m.emplace_back(i, perm[i]);
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Matching> all_partial_matchings(int k) {
    // All partial injections [k] -> [k], enumerated by DFS over sources.
    std::vector<Matching> out;
    Matching cur;
    std::vector<bool> used(k, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        rec(i + 1);  // source i unmatched
        for (int j = 0; j < k; ++j) {
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

std::vector<Matching> sub_identities(int k) {
    std::vector<Matching> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Matching m;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) m.emplace_back(i, i);
        out.push_back(std::move(m));
    }
    return out;
}

struct Tab {
    std::array<std::array<std::uint32_t, 8>, 8> v{};
};

struct CoverSearch {
    const Graph& g;
    const PropertyOracle& p;
    int k;
    const Limits& lim;

    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::pair<int, int>> free_edges;  // branching edges, in order
    std::vector<std::vector<Matching>> candidates;

    std::vector<std::uint64_t> hbits;
    std::vector<int> assigned;  // candidate index per free edge, -1 = not yet
    std::vector<int> vorder;
    std::atomic<std::uint64_t> nodes{0};

    std::optional<Cover> bad;

    CoverSearch(const Graph& graph, const PropertyOracle& prop, int kk, const Limits& limits)
        : g(graph), p(prop), k(kk), lim(limits) {
        // Spanning forest by BFS; tree matchings are normalized to
        // (sub-)identities by fiber relabeling along the tree.
        std::vector<bool> visited(g.n, false);
        std::vector<int> queue;
        std::set<std::pair<int, int>> tree;
        for (int s = 0; s < g.n; ++s) {
            if (visited[s]) continue;
            visited[s] = true;
            queue.push_back(s);
            for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
                int u = queue[head];
                for (int w : g.adj[u])
                    if (!visited[w]) {
                        visited[w] = true;
                        queue.push_back(w);
                        tree.insert({std::min(u, w), std::max(u, w)});
                    }
            }
        }
        for (auto e : g.edges())
            (tree.count(e) ? tree_edges : free_edges).push_back(e);

        if (p.monotone) {
            // Worst covers have full matchings; identity on the forest.
            auto reps = conjugacy_representatives(k);
            auto all = full_matchings(k);
            for (std::size_t i = 0; i < free_edges.size(); ++i)
                candidates.push_back(i == 0 ? reps : all);
        } else {
            // Hereditary-only (or unflagged) properties get the general
            // family: sub-identities on the forest, all partial matchings
            // elsewhere.
            auto subs = sub_identities(k);
            auto partials = all_partial_matchings(k);
            std::vector<std::pair<int, int>> branching;
            std::vector<std::vector<Matching>> cand;
            for (auto e : tree_edges) {
                branching.push_back(e);
                cand.push_back(subs);
            }
            for (auto e : free_edges) {
                branching.push_back(e);
                cand.push_back(partials);
            }
            tree_edges.clear();
            free_edges = std::move(branching);
            candidates = std::move(cand);
        }
        assigned.assign(free_edges.size(), -1);
        hbits.assign(static_cast<std::size_t>(g.n) * k, 0);
        for (auto [u, v] : tree_edges)
            for (int i = 0; i < k; ++i) set_edge(u, i, v, i, true);
        vorder = degree_order(g);
    }

    int flat(int v, int i) const { return v * k + i; }

    void set_edge(int u, int i, int v, int j, bool on) {
        if (on) {
            hbits[flat(u, i)] |= std::uint64_t{1} << flat(v, j);
            hbits[flat(v, j)] |= std::uint64_t{1} << flat(u, i);
        } else {
            hbits[flat(u, i)] &= ~(std::uint64_t{1} << flat(v, j));
            hbits[flat(v, j)] &= ~(std::uint64_t{1} << flat(u, i));
        }
    }

    void apply(std::size_t edge_idx, int cand_idx, bool on) {
        auto [u, v] = free_edges[edge_idx];
        for (auto [i, j] : candidates[edge_idx][cand_idx]) set_edge(u, i, v, j, on);
        assigned[edge_idx] = on ? cand_idx : -1;
    }

    bool partial_ok(std::uint64_t chosen, int x) const {
        std::uint64_t next = chosen | (std::uint64_t{1} << x);
        switch (p.builtin) {
            case BuiltinKind::Edgeless:
                return (hbits[x] & chosen) == 0;
            case BuiltinKind::Degenerate:
                return mask_k_degenerate(hbits, next, p.degeneracy_k);
            case BuiltinKind::None:
                if (!p.hereditary) return true;
                return p.is_member(h_induced(next));
        }
        return true;
    }

    Graph h_induced(std::uint64_t mask) const {
        std::vector<int> ids;
        for (int x = 0; x < g.n * k; ++x)
            if ((mask >> x) & 1) ids.push_back(x);
        std::vector<int> local(static_cast<std::size_t>(g.n) * k, -1);
        for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int x : ids) {
            std::uint64_t m = hbits[x] & mask;
            while (m) {
                int y = std::countr_zero(m);
                m &= m - 1;
                if (x < y) edges.emplace_back(local[x], local[y]);
            }
        }
        return build_graph(edges, static_cast<int>(ids.size()));
    }

    // Counts P-transversals of the current H and fills the pair tables for
    // the remaining edges. Returns the count.
    std::uint64_t count_alive(std::size_t next_edge, std::vector<Tab>& tabs) {
        std::uint64_t count = 0;
        std::vector<int> choice(g.n, -1);
        std::function<void(int, std::uint64_t)> rec = [&](int depth, std::uint64_t chosen) {
            if (depth == g.n) {
                if (p.builtin == BuiltinKind::None && !p.hereditary &&
                    !p.is_member(h_induced(chosen)))
                    return;
                ++count;
                for (std::size_t e = next_edge; e < free_edges.size(); ++e) {
                    auto [u, v] = free_edges[e];
                    ++tabs[e - next_edge].v[choice[u]][choice[v]];
                }
                return;
            }
            int v = vorder[depth];
            for (int i = 0; i < k; ++i) {
                int x = flat(v, i);
                if (!partial_ok(chosen, x)) continue;
                choice[v] = i;
                rec(depth + 1, chosen | (std::uint64_t{1} << x));
                choice[v] = -1;
            }
        };
        std::uint64_t n_before = nodes.fetch_add(1) + 1;
        if (n_before > lim.budget) throw TooLarge("cover enumeration budget exhausted (raise DPCOLOR_MAX_WORK)");
        rec(0, 0);
        return count;
    }

    Cover current_cover() const {
        std::map<std::pair<int, int>, Matching> matchings;
        for (auto [u, v] : tree_edges) {
            Matching m;
            for (int i = 0; i < k; ++i) m.emplace_back(i, i);
            matchings[{u, v}] = std::move(m);
        }
        for (std::size_t e = 0; e < free_edges.size(); ++e)
            if (assigned[e] >= 0 && !candidates[e][assigned[e]].empty())
                matchings[free_edges[e]] = candidates[e][assigned[e]];
        return make_cover(g, std::vector<int>(g.n, k), std::move(matchings));
    }

    // True when the subtree below is entirely coverable; records a bad
    // cover and returns false otherwise.
    bool dfs(std::size_t edge_idx) {
        std::vector<Tab> tabs(free_edges.size() - edge_idx);
        std::uint64_t alive = count_alive(edge_idx, tabs);
        if (alive == 0) {
            if (!bad) bad = current_cover();
            return false;
        }
        if (edge_idx == free_edges.size()) return true;
        if (p.builtin == BuiltinKind::Edgeless) {
            // Union bound: a completion kills at most max-weight-matching
            // many survivors per remaining edge.
            std::uint64_t kill = 0;
            std::vector<int> perm(k);
            for (std::size_t e = 0; e + edge_idx < free_edges.size(); ++e) {
                std::iota(perm.begin(), perm.end(), 0);
                std::uint64_t best = 0;
                do {
                    std::uint64_t s = 0;
                    for (int i = 0; i < k; ++i) s += tabs[e].v[i][perm[i]];
                    best = std::max(best, s);
                } while (std::next_permutation(perm.begin(), perm.end()));
                kill += best;
            }
            if (kill < alive) return true;
        }
        for (std::size_t c = 0; c < candidates[edge_idx].size(); ++c) {
            apply(edge_idx, static_cast<int>(c), true);
            bool ok = dfs(edge_idx + 1);
            apply(edge_idx, static_cast<int>(c), false);
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

CoverDecision chi_dp_decide(const Graph& g, const PropertyOracle& p, int k, const Limits& lim) {
    CoverDecision out;
    out.method = "normalized_enumeration";
    if (g.n == 0) {
        out.all_coverable = true;
        return out;
    }
    if (g.n > lim.max_cover_order)
        throw TooLarge("cover enumeration restricted to order <= " + std::to_string(lim.max_cover_order));
    if (k > lim.max_fiber) throw TooLarge("cover enumeration restricted to k <= max_fiber");
    if (k <= 0) {
        out.all_coverable = false;
        out.bad_cover = make_cover(g, std::vector<int>(g.n, 0), {});
        return out;
    }
    if (g.n * k > 64) throw TooLarge("cover enumeration restricted to n*k <= 64");

    CoverSearch search(g, p, k, lim);
    out.all_coverable = search.dfs(0);
    out.bad_cover = search.bad;
    out.nodes = search.nodes.load();
    return out;
}

bool is_d_degenerate_graph(const Graph& g, int d) { return is_k_degenerate(g, d); }

std::optional<Transversal> greedy_transversal(const Cover& c, const PropertyOracle& p) {
    const Graph& g = c.base;
    for (int v = 0; v < g.n; ++v)
        if (c.fiber_sizes[v] == 0) return std::nullopt;
    // Degeneracy order: repeatedly remove a minimum-degree vertex, then
    // process in reverse removal order.
    std::vector<int> deg(g.n), removal;
    std::vector<bool> removed(g.n, false);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        removed[pick] = true;
        removal.push_back(pick);
        for (int w : g.adj[pick])
            if (!removed[w]) --deg[w];
    }
    Transversal t(g.n, -1);
    std::vector<bool> placed(g.n, false);
    for (int idx = g.n - 1; idx >= 0; --idx) {
        int v = removal[idx];
        std::vector<int> conflicts(c.fiber_sizes[v], 0);
        for (int u : g.adj[v]) {
            if (!placed[u]) continue;
            auto partner = c.matched_partner(c.flat(u, t[u]), v);
            if (partner) ++conflicts[c.h_index[*partner]];
        }
        int best = 0;
        for (int i = 1; i < c.fiber_sizes[v]; ++i)
            if (conflicts[i] < conflicts[best]) best = i;
        t[v] = best;
        placed[v] = true;
    }
    // Honest final check; the degeneracy precondition guarantees membership.
    std::vector<int> flats = transversal_flats(c, t);
    Graph h = induced_subgraph(flat_h(c), flats).graph;
    if (!p.is_member(h)) return std::nullopt;
    return t;
}

ChromaticResult chi_dp(const Graph& g, const PropertyOracle& p, const Limits& lim) {
    ChromaticResult res;
    if (g.n == 0) {
        res.method = "empty";
        return res;
    }
    int r = p.d_value.value_or(0);
    for (int k = 1; k <= g.max_degree() + 2; ++k) {
        if (r >= 1 && is_d_degenerate_graph(g, r * k - 1)) {
            res.value = k;
            res.method = "degeneracy_bound";
            return res;
        }
        CoverDecision d = chi_dp_decide(g, p, k, lim);
        res.nodes += d.nodes;
        if (d.all_coverable) {
            res.value = k;
            res.method = "enumeration";
            return res;
        }
        res.bad_cover = d.bad_cover;
        res.bad_witness_k = k;
    }
    throw SearchExhausted("chi_dp exceeded max degree + 2; unexpected property");
}

bool is_dp_critical(const Graph& g, const PropertyOracle& p, const Limits& lim) {
    if (g.n == 0) return true;  // vacuous
    int value = chi_dp(g, p, lim).value;
    for (int v = 0; v < g.n; ++v)
        if (chi_dp(delete_vertex(g, v), p, lim).value != value - 1) return false;
    return true;
}

Graph critical_core(const Graph& g, const PropertyOracle& p, const Limits& lim) {
    int target = chi_dp(g, p, lim).value;
    std::map<std::uint64_t, int> memo;
    auto chi_dp_memo = [&](const Graph& h) {
        std::uint64_t code = h.n <= 8 ? canonical_code(h) : 0;
        if (h.n <= 8) {
            auto it = memo.find((static_cast<std::uint64_t>(h.n) << 56) ^ code);
            if (it != memo.end()) return it->second;
        }
        int val = chi_dp(h, p, lim).value;
        if (h.n <= 8) memo[(static_cast<std::uint64_t>(h.n) << 56) ^ code] = val;
        return val;
    };
    for (int size = 0; size <= g.n; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<int> verts(comb.begin(), comb.end());
            Graph sub = induced_subgraph(g, verts).graph;
            if (chi_dp_memo(sub) == target) return sub;
            // next combination
            int i = size - 1;
            while (i >= 0 && comb[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return g;
}

}  // namespace dpcolor
