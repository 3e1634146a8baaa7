#include "dpcolor/cover.hpp"

#include <algorithm>
#include <numeric>

#include "dpcolor/errors.hpp"
#include "dpcolor/mask_ops.hpp"

namespace dpcolor {

namespace {

std::string edge_name(std::pair<int, int> e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

}  // namespace

CoverValidation validate(const Cover& c) {
    if (static_cast<int>(c.fiber_sizes.size()) != c.base.n)
        return {false, std::nullopt, "fiber count differs from vertex count"};
    for (int v = 0; v < c.base.n; ++v)
        if (c.fiber_sizes[v] < 0) return {false, std::nullopt, "negative fiber size"};
    for (const auto& [e, pairs] : c.matchings) {
        auto [u, v] = e;
        if (u >= v || u < 0 || v >= c.base.n || !c.base.has_edge(u, v))
            return {false, e, "matching key " + edge_name(e) + " is not a base edge"};
        std::vector<int> first, second;
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= c.fiber_sizes[u] || j < 0 || j >= c.fiber_sizes[v])
                return {false, e, "matching " + edge_name(e) + " index out of fiber range"};
            first.push_back(i);
            second.push_back(j);
        }
        std::sort(first.begin(), first.end());
        std::sort(second.begin(), second.end());
        if (std::adjacent_find(first.begin(), first.end()) != first.end() ||
            std::adjacent_find(second.begin(), second.end()) != second.end())
            return {false, e, "matching " + edge_name(e) + " repeats a coordinate"};
    }
    return {};
}

void Cover::build() {
    auto res = validate(*this);
    if (!res.ok) throw InvalidCover(res.reason);
    for (auto& [e, pairs] : matchings) {
        (void)e;
        std::sort(pairs.begin(), pairs.end());
    }
    offset.assign(base.n + 1, 0);
    for (int v = 0; v < base.n; ++v) offset[v + 1] = offset[v] + fiber_sizes[v];
    h_order = offset[base.n];
    h_vertex.assign(h_order, 0);
    h_index.assign(h_order, 0);
    for (int v = 0; v < base.n; ++v)
        for (int i = 0; i < fiber_sizes[v]; ++i) {
            h_vertex[offset[v] + i] = v;
            h_index[offset[v] + i] = i;
        }
    h_adj.assign(h_order, {});
    for (const auto& [e, pairs] : matchings) {
        auto [u, v] = e;
        for (auto [i, j] : pairs) {
            h_adj[flat(u, i)].push_back(flat(v, j));
            h_adj[flat(v, j)].push_back(flat(u, i));
        }
    }
    for (auto& a : h_adj) std::sort(a.begin(), a.end());
    h_bits.clear();
    if (h_order <= 64) {
        h_bits.assign(h_order, 0);
        for (int x = 0; x < h_order; ++x)
            for (int y : h_adj[x]) h_bits[x] |= std::uint64_t{1} << y;
    }
    built = true;
}

bool Cover::h_has_edge(int x, int y) const {
    if (!h_bits.empty()) return (h_bits[x] >> y) & 1u;
    return std::binary_search(h_adj[x].begin(), h_adj[x].end(), y);
}

std::optional<int> Cover::matched_partner(int x, int u) const {
    for (int y : h_adj[x])
        if (h_vertex[y] == u) return y;
    return std::nullopt;
}

Cover make_cover(Graph base, std::vector<int> fiber_sizes,
                 std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings) {
    Cover c;
    c.base = std::move(base);
    c.fiber_sizes = std::move(fiber_sizes);
    c.matchings = std::move(matchings);
    c.build();
    return c;
}

Cover identity_cover(const Graph& g, int k) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (auto e : g.edges()) {
        auto& pairs = matchings[e];
        for (int i = 0; i < k; ++i) pairs.emplace_back(i, i);
    }
    return make_cover(g, std::vector<int>(g.n, k), std::move(matchings));
}

Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.n) throw InvalidCover("one list per vertex required");
    std::vector<std::vector<int>> canon(lists);
    for (auto& l : canon) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    std::vector<int> sizes;
    sizes.reserve(canon.size());
    for (const auto& l : canon) sizes.push_back(static_cast<int>(l.size()));
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (auto [u, v] : g.edges()) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < sizes[u]; ++i)
            for (int j = 0; j < sizes[v]; ++j)
                if (canon[u][i] == canon[v][j]) pairs.emplace_back(i, j);
        if (!pairs.empty()) matchings[{u, v}] = std::move(pairs);
    }
    return make_cover(g, std::move(sizes), std::move(matchings));
}

std::vector<int> transversal_flats(const Cover& c, const Transversal& t) {
    std::vector<int> out;
    for (int v = 0; v < c.base.n; ++v)
        if (t[v] >= 0) out.push_back(c.flat(v, t[v]));
    return out;
}

std::uint64_t transversal_mask(const Cover& c, const Transversal& t) {
    if (c.h_order > 64) throw TooLarge("transversal mask restricted to |V(H)| <= 64");
    std::uint64_t m = 0;
    for (int x : transversal_flats(c, t)) m |= std::uint64_t{1} << x;
    return m;
}

namespace {

struct TransversalSearch {
    const Cover& c;
    const PropertyOracle& p;
    std::vector<int> order;      // base vertices in search order
    Transversal choice;
    std::uint64_t chosen = 0;    // flat mask

    TransversalSearch(const Cover& cover, const PropertyOracle& prop, int forbidden)
        : c(cover), p(prop), choice(cover.base.n, -1) {
        for (int v = 0; v < c.base.n; ++v)
            if (v != forbidden) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (c.base.degree(a) != c.base.degree(b)) return c.base.degree(a) > c.base.degree(b);
            return a < b;
        });
    }

    bool partial_ok(int x) const {
        std::uint64_t next = chosen | (std::uint64_t{1} << x);
        switch (p.builtin) {
            case BuiltinKind::Edgeless:
                return (c.h_bits[x] & chosen) == 0;
            case BuiltinKind::Degenerate:
                return mask_k_degenerate(c.h_bits, next, p.degeneracy_k);
            case BuiltinKind::None: {
                if (!p.hereditary) return true;  // no pruning without hereditarity
                return p.is_member(mask_graph(next));
            }
        }
        return true;
    }

    Graph mask_graph(std::uint64_t mask) const {
        std::vector<int> ids;
        for (int x = 0; x < c.h_order; ++x)
            if ((mask >> x) & 1) ids.push_back(x);
        std::vector<int> local(c.h_order, -1);
        for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int x : ids)
            for (int y : c.h_adj[x])
                if (x < y && local[y] >= 0) edges.emplace_back(local[x], local[y]);
        return build_graph(edges, static_cast<int>(ids.size()));
    }

    bool dfs(std::size_t depth) {
        if (depth == order.size()) {
            if (p.builtin == BuiltinKind::None && !p.hereditary)
                return p.is_member(mask_graph(chosen));
            return true;
        }
        int v = order[depth];
        for (int i = 0; i < c.fiber_sizes[v]; ++i) {
            int x = c.flat(v, i);
            if (!partial_ok(x)) continue;
            choice[v] = i;
            chosen |= std::uint64_t{1} << x;
            if (dfs(depth + 1)) return true;
            chosen &= ~(std::uint64_t{1} << x);
            choice[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Transversal> find_P_transversal(const Cover& c, const PropertyOracle& p,
                                              int forbidden) {
    if (!c.built) throw InvalidCover("cover not built");
    if (c.h_order > 64) throw TooLarge("transversal search restricted to |V(H)| <= 64");
    TransversalSearch s(c, p, forbidden);
    if (s.dfs(0)) return s.choice;
    return std::nullopt;
}

bool is_P_critical_cover(const Cover& c, const PropertyOracle& p) {
    if (find_P_transversal(c, p)) return false;
    for (int v = 0; v < c.base.n; ++v)
        if (!find_P_transversal(c, p, v)) return false;
    return true;
}

LowVertexSubgraph low_vertex_subgraph(const Cover& c, const PropertyOracle& p) {
    if (!p.d_value)
        throw PreconditionFailed("low-vertex analysis needs d(P) known exactly");
    int r = *p.d_value;
    LowVertexSubgraph out;
    for (int v = 0; v < c.base.n; ++v)
        if (c.base.degree(v) == r * c.fiber_sizes[v]) out.low_set.push_back(v);
    out.f = induced_subgraph(c.base, out.low_set);
    return out;
}

std::vector<int> fiber_degrees_into(const Cover& c, const Transversal& t, int v) {
    std::uint64_t mask = transversal_mask(c, t);
    std::vector<int> out;
    for (int i = 0; i < c.fiber_sizes[v]; ++i) {
        int x = c.flat(v, i);
        int d = 0;
        for (int y : c.h_adj[x])
            if ((mask >> y) & 1) ++d;
        out.push_back(d);
    }
    return out;
}

Graph flat_h(const Cover& c) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < c.h_order; ++x)
        for (int y : c.h_adj[x])
            if (x < y) edges.emplace_back(x, y);
    return build_graph(edges, c.h_order);
}

}  // namespace dpcolor
