#include "dpcolor/property.hpp"

#include <algorithm>
#include <limits>

#include "dpcolor/corpus.hpp"
#include "dpcolor/errors.hpp"

namespace dpcolor {

bool is_k_degenerate(const Graph& g, int k) {
    std::vector<int> deg(g.n);
    std::vector<bool> removed(g.n, false);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (removed[v]) continue;
            if (pick == -1 || deg[v] < deg[pick]) pick = v;  // lowest index wins ties
        }
        if (deg[pick] > k) return false;
        removed[pick] = true;
        --remaining;
        for (int w : g.adj[pick])
            if (!removed[w]) --deg[w];
    }
    return true;
}

PropertyOracle edgeless_property() {
    PropertyOracle p;
    p.name = "O";
    p.member_fn = [](const Graph& g) { return g.edge_count() == 0; };
    p.hereditary = p.additive = p.monotone = true;
    p.d_value = 1;
    p.builtin = BuiltinKind::Edgeless;
    return p;
}

PropertyOracle degenerate_property(int k) {
    PropertyOracle p;
    p.name = "D" + std::to_string(k);
    p.member_fn = [k](const Graph& g) { return is_k_degenerate(g, k); };
    p.hereditary = p.additive = p.monotone = true;
    p.d_value = k + 1;
    p.builtin = BuiltinKind::Degenerate;
    p.degeneracy_k = k;
    return p;
}

PropertyOracle custom_property(std::string name, std::function<bool(const Graph&)> member,
                               bool hereditary, bool additive, bool monotone,
                               std::optional<int> d_value) {
    PropertyOracle p;
    p.name = std::move(name);
    p.member_fn = std::move(member);
    p.hereditary = hereditary;
    p.additive = additive;
    p.monotone = monotone;
    p.d_value = d_value;
    return p;
}

PropertyOracle property_from_token(const std::string& token) {
    if (token == "O") return edgeless_property();
    if (token.size() >= 2 && token[0] == 'D') {
        try {
            std::size_t used = 0;
            int k = std::stoi(token.substr(1), &used);
            if (used == token.size() - 1 && k >= 0) return degenerate_property(k);
        } catch (...) {
        }
    }
    throw ParseError("unknown property token '" + token + "' (expected O or Dk)");
}

bool is_cr(const PropertyOracle& p, const Graph& g) {
    if (p.is_member(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (!p.is_member(delete_vertex(g, v))) return false;
    return true;
}

DValue d_of(const PropertyOracle& p, int search_order_limit) {
    if (p.d_value) return {*p.d_value, true};
    int best = std::numeric_limits<int>::max();
    for (int n = 1; n <= search_order_limit; ++n) {
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            if (is_cr(p, g)) best = std::min(best, g.min_degree());
        }
    }
    if (best == std::numeric_limits<int>::max())
        throw SearchExhausted("no CR member among connected graphs of order <= " +
                              std::to_string(search_order_limit));
    return {best, false};
}

bool validate_coloring(const PropertyOracle& p, const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.n) return false;
    std::vector<int> colors(coloring);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (int c : colors) {
        std::vector<int> cls;
        for (int v = 0; v < g.n; ++v)
            if (coloring[v] == c) cls.push_back(v);
        if (!p.is_member(induced_subgraph(g, cls).graph)) return false;
    }
    return true;
}

bool verify_flags(const PropertyOracle& p, int max_order) {
    for (int n = 0; n <= max_order; ++n) {
        for (const Graph& g : all_labeled_graphs(n)) {
            if (!p.hereditary || !p.is_member(g)) continue;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if ((sub >> v) & 1) verts.push_back(v);
                if (!p.is_member(induced_subgraph(g, verts).graph)) return false;
            }
        }
    }
    if (p.additive) {
        for (int n1 = 0; n1 <= max_order; ++n1) {
            for (int n2 = 0; n1 + n2 <= max_order; ++n2) {
                for (const Graph& a : all_labeled_graphs(n1)) {
                    if (!p.is_member(a)) continue;
                    for (const Graph& b : all_labeled_graphs(n2)) {
                        if (!p.is_member(b)) continue;
                        if (!p.is_member(disjoint_union(a, b))) return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace dpcolor
