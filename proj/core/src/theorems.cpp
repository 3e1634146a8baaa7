#include "dpcolor/theorems.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

std::string digest_graph(const Graph& g, const PropertyOracle& p) {
    std::ostringstream os;
    os << "n=" << g.n << ",m=" << g.edge_count() << ",property=" << p.name;
    return os.str();
}

int require_r(const PropertyOracle& p) {
    if (!p.d_value) throw PreconditionFailed("d(P) must be known exactly for this check");
    return *p.d_value;
}

}  // namespace

std::string classify_four_way(const Graph& host, const std::vector<int>& block,
                              const PropertyOracle& p, int r) {
    Graph sub = induced_subgraph(host, block).graph;
    if (sub.is_complete()) return "Complete";
    if (sub.is_cycle()) return "Cycle";
    if (sub.regular_degree() == r && is_cr(p, sub)) return "RRegularCR";
    if (sub.max_degree() <= r && p.is_member(sub)) return "SmallInP";
    return "Unclassified";
}

VerdictReport verify_low_vertex_blocks(const Cover& c, const PropertyOracle& p) {
    VerdictReport rep;
    rep.theorem_id = "low-vertex";
    rep.inputs_digest = digest_graph(c.base, p);
    int r = require_r(p);
    if (!is_P_critical_cover(c, p))
        throw NotCritical("cover is not P-critical; low-vertex classification does not apply");
    auto low = low_vertex_subgraph(c, p);
    rep.numbers.emplace_back("low_vertices", std::to_string(low.low_set.size()));
    if (low.low_set.empty()) {
        rep.holds = true;
        rep.notes.push_back("low-vertex subgraph empty; classification vacuous");
        return rep;
    }
    rep.holds = true;
    for (const auto& block : block_decomposition(low.f.graph).blocks) {
        BlockVerdict bv;
        for (int lv : block) bv.vertices.push_back(low.f.to_parent[lv]);
        bv.cls = classify_four_way(low.f.graph, block, p, r);
        bv.ok = bv.cls != "Unclassified";
        if (!bv.ok) rep.holds = false;
        rep.blocks.push_back(std::move(bv));
    }
    return rep;
}

VerdictReport verify_brooks(const Graph& g, const PropertyOracle& p, const Limits& lim,
                            const ChromaticResult* precomputed_dp) {
    if (!is_connected(g) || g.n == 0)
        throw PreconditionFailed("Brooks check requires a nonempty connected graph");
    VerdictReport rep;
    rep.theorem_id = "brooks";
    rep.inputs_digest = digest_graph(g, p);
    int r = require_r(p);
    int delta = g.max_degree();
    int bound = (delta + r - 1) / r;
    rep.numbers.emplace_back("delta", std::to_string(delta));
    rep.numbers.emplace_back("r", std::to_string(r));
    rep.numbers.emplace_back("bound", std::to_string(bound));

    if (g.is_complete() && (g.n - 1) % r == 0)
        rep.exception_class = "CompleteGraph";
    else if (g.regular_degree() == r && is_cr(p, g))
        rep.exception_class = "RRegularCR";
    else if (p.builtin == BuiltinKind::Edgeless && g.is_cycle())
        rep.exception_class = "Cycle";

    try {
        ChromaticResult dp = precomputed_dp ? *precomputed_dp : chi_dp(g, p, lim);
        rep.numbers.emplace_back("chi_dp", std::to_string(dp.value));
        rep.holds = dp.value <= bound || !rep.exception_class.empty();
        if (dp.value <= bound && !rep.exception_class.empty())
            rep.notes.push_back("exception class present but bound holds anyway");
    } catch (const TooLarge&) {
        if (rep.exception_class.empty()) throw;
        rep.notes.push_back("chi_dp skipped (TooLarge); exception class decides");
        rep.holds = true;
    }
    return rep;
}

VerdictReport verify_ert(const Graph& g, const Cover& c, const PropertyOracle& p) {
    if (g.n != c.base.n || g.edges() != c.base.edges())
        throw PreconditionFailed("cover does not cover the given graph");
    if (!is_connected(g) || g.n == 0)
        throw PreconditionFailed("ERT check requires a nonempty connected graph");
    VerdictReport rep;
    rep.theorem_id = "ert";
    rep.inputs_digest = digest_graph(g, p);
    int r = require_r(p);
    for (int v = 0; v < g.n; ++v)
        if (r * c.fiber_sizes[v] < g.degree(v))
            throw PreconditionFailed("ERT requires r|X_v| >= d_G(v) for all v (fails at vertex " +
                                     std::to_string(v) + ")");
    auto t = find_P_transversal(c, p);
    if (t) {
        rep.holds = true;
        rep.notes.push_back("cover is colorable; block condition vacuous");
        return rep;
    }
    rep.holds = true;
    for (const auto& block : block_decomposition(g).blocks) {
        BlockVerdict bv;
        bv.vertices = block;
        bv.cls = classify_four_way(g, block, p, r);
        bv.ok = bv.cls != "Unclassified";
        if (!bv.ok) rep.holds = false;
        rep.blocks.push_back(std::move(bv));
    }
    return rep;
}

bool contains_clique(const Graph& g, int size) {
    std::vector<int> clique;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(clique.size()) == size) return true;
        for (int v = start; v < g.n; ++v) {
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(v);
            if (rec(v + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    return rec(0);
}

namespace {

void verify_gallai_context(const Graph& g, const PropertyOracle& p, int k,
                           const Cover* cover, const Limits& lim, VerdictReport& rep) {
    if (cover) {
        for (int v = 0; v < g.n; ++v)
            if (cover->fiber_sizes[v] < k)
                throw PreconditionFailed("context cover is not a k-cover");
        if (!is_P_critical_cover(*cover, p))
            throw PreconditionFailed("context cover is not P-critical");
        rep.notes.push_back("context: certified P-critical k-cover");
    } else {
        ChromaticResult dp = chi_dp(g, p, lim);
        if (dp.value != k + 1 || !is_dp_critical(g, p, lim))
            throw PreconditionFailed("graph is not (P,chi_dp)-critical with chi_dp = k+1");
        rep.notes.push_back("context: (P,chi_dp)-critical graph, chi_dp = k+1");
    }
}

}  // namespace

VerdictReport check_edge_bounds(const Graph& g, const PropertyOracle& p, int k,
                                EdgeBoundMode mode, const Cover* context_cover,
                                const Limits& lim) {
    VerdictReport rep;
    rep.inputs_digest = digest_graph(g, p) + ",k=" + std::to_string(k);
    const std::int64_t n = g.n;
    const std::int64_t twice_edges = 2 * g.edge_count();
    rep.numbers.emplace_back("2|E|", std::to_string(twice_edges));

    switch (mode) {
        case EdgeBoundMode::Gallai: {
            rep.theorem_id = "gallai";
            int r = require_r(p);
            if (k < 3) throw PreconditionFailed("Gallai bound requires k >= 3");
            verify_gallai_context(g, p, k, context_cover, lim, rep);
            if (g.is_complete() && n == static_cast<std::int64_t>(k) * r + 1) {
                rep.exception_class = "CompleteGraph";
                rep.holds = true;
                rep.notes.push_back("exempt: G = K_{kr+1}");
                return rep;
            }
            std::int64_t kr = static_cast<std::int64_t>(k) * r;
            Rat denom(static_cast<std::int64_t>((kr + 1) * (kr + 1) - 3));
            Rat bound = (Rat(kr) + Rat(kr - 2) / denom) * Rat(n) + Rat(2 * kr) / denom;
            rep.numbers.emplace_back("bound", bound.str());
            rep.holds = Rat(twice_edges) >= bound;
            if (Rat(twice_edges) == bound) rep.notes.push_back("equality");
            return rep;
        }
        case EdgeBoundMode::Dirac: {
            rep.theorem_id = "dirac";
            if (k < 3) throw PreconditionFailed("Dirac bound requires k >= 3");
            if (context_cover) {
                PropertyOracle o = edgeless_property();
                for (int v = 0; v < g.n; ++v)
                    if (context_cover->fiber_sizes[v] < k)
                        throw PreconditionFailed("context cover is not a k-cover");
                if (!is_P_critical_cover(*context_cover, o))
                    throw PreconditionFailed("context cover is not O-critical");
                rep.notes.push_back("context: certified O-critical k-cover");
            } else {
                ChromaticResult ch = chi(g, edgeless_property(), lim);
                if (ch.value != k + 1)
                    throw PreconditionFailed("graph is not (k+1,chi)-critical");
                for (int v = 0; v < g.n; ++v)
                    if (chi(delete_vertex(g, v), edgeless_property(), lim).value != k)
                        throw PreconditionFailed("graph is not (k+1,chi)-critical");
                rep.notes.push_back("context: (k+1,chi)-critical graph");
            }
            bool exempt = contains_clique(g, k + 1);
            if (exempt) {
                rep.exception_class = "CompleteGraph";
                rep.notes.push_back("contains K_{k+1}; Dirac bound not asserted");
            }
            std::int64_t bound = static_cast<std::int64_t>(k) * n + k - 2;
            rep.numbers.emplace_back("bound", std::to_string(bound));
            bool numeric = twice_edges >= bound;
            rep.holds = numeric || exempt;
            if (twice_edges == bound) {
                rep.notes.push_back("equality");
                auto dir = recognize_dirac(g, k);
                rep.numbers.emplace_back("in_dirac_family", dir ? "true" : "false");
            } else {
                rep.numbers.emplace_back("in_dirac_family", recognize_dirac(g, k) ? "true" : "false");
            }
            return rep;
        }
        case EdgeBoundMode::Mihok: {
            rep.theorem_id = "mihok";
            int pp = k;
            if (pp < 1) throw PreconditionFailed("Mihok bound requires p >= 1");
            if (g.n == 0) throw PreconditionFailed("Mihok bound requires a nonempty graph");
            if (g.max_degree() > pp)
                throw PreconditionFailed("Mihok bound requires Delta(F) <= p");
            for (const auto& block : block_decomposition(g).blocks) {
                Graph sub = induced_subgraph(g, block).graph;
                if (sub.max_degree() >= pp)
                    throw PreconditionFailed("Mihok bound requires Delta(B) < p on every block");
            }
            Rat lhs = (Rat(pp - 1) + Rat(2, pp)) * Rat(n) - Rat(twice_edges);
            rep.numbers.emplace_back("lhs", lhs.str());
            rep.numbers.emplace_back("bound", "2");
            rep.holds = lhs >= Rat(2);
            return rep;
        }
    }
    throw PreconditionFailed("unknown edge-bound mode");
}

DiracGraph gen_dirac(int k, std::pair<int, int> split) {
    auto [b1, b2] = split;
    if (k < 3 || b1 < 1 || b2 < 1 || b1 + b2 != k)
        throw BadSplit("gen_dirac needs k >= 3 and a split of k into two positive parts");
    DiracGraph d;
    for (int i = 0; i < k - 1; ++i) d.a.push_back(i);
    for (int i = 0; i < b1; ++i) d.b1.push_back(k - 1 + i);
    for (int i = 0; i < b2; ++i) d.b2.push_back(k - 1 + b1 + i);
    d.v1 = 2 * k - 1;
    d.v2 = 2 * k;
    std::vector<std::pair<int, int>> edges;
    auto clique = [&edges](const std::vector<int>& verts) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                edges.emplace_back(verts[i], verts[j]);
    };
    clique(d.a);
    std::vector<int> b_all(d.b1);
    b_all.insert(b_all.end(), d.b2.begin(), d.b2.end());
    clique(b_all);
    for (int u : d.a) {
        edges.emplace_back(u, d.v1);
        edges.emplace_back(u, d.v2);
    }
    for (int u : d.b1) edges.emplace_back(u, d.v1);
    for (int u : d.b2) edges.emplace_back(u, d.v2);
    d.graph = build_graph(edges, 2 * k + 1);
    return d;
}

std::optional<DiracGraph> recognize_dirac(const Graph& g, int k) {
    if (k < 3 || g.n != 2 * k + 1) return std::nullopt;
    for (int v1 = 0; v1 < g.n; ++v1) {
        for (int v2 = 0; v2 < g.n; ++v2) {
            if (v1 == v2 || g.has_edge(v1, v2)) continue;
            std::vector<int> a, b1, b2;
            for (int u : g.adj[v1])
                if (g.has_edge(u, v2)) a.push_back(u);
            for (int u : g.adj[v1])
                if (!g.has_edge(u, v2)) b1.push_back(u);
            for (int u : g.adj[v2])
                if (!g.has_edge(u, v1)) b2.push_back(u);
            if (static_cast<int>(a.size()) != k - 1) continue;
            if (b1.empty() || b2.empty()) continue;
            if (static_cast<int>(b1.size() + b2.size()) != k) continue;
            if (static_cast<int>(a.size() + b1.size() + b2.size()) + 2 != g.n) continue;
            bool ok = true;
            auto all_adjacent = [&](const std::vector<int>& verts) {
                for (std::size_t i = 0; i < verts.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
                        if (!g.has_edge(verts[i], verts[j])) ok = false;
            };
            all_adjacent(a);
            std::vector<int> b_all(b1);
            b_all.insert(b_all.end(), b2.begin(), b2.end());
            all_adjacent(b_all);
            for (int u : a)
                for (int w : b_all)
                    if (g.has_edge(u, w)) ok = false;
            // b2 must avoid v1 and b1 must avoid v2 (already by construction),
            // and a u b1 u b2 u {v1,v2} must be everything (size check above).
            if (!ok) continue;
            DiracGraph d;
            d.graph = g;
            d.a = a;
            d.b1 = b1;
            d.b2 = b2;
            d.v1 = v1;
            d.v2 = v2;
            return d;
        }
    }
    return std::nullopt;
}

}  // namespace dpcolor
