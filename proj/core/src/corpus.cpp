#include "dpcolor/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "dpcolor/errors.hpp"

namespace dpcolor {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(edges, n);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidGraph("cycle needs order >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build_graph(edges, n);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(edges, n);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return build_graph(edges, leaves + 1);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return build_graph(edges, a + b);
}

Graph bowtie_graph() {
    return build_graph({{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}, 5);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(a.n + u, a.n + v);
    return build_graph(edges, a.n + b.n);
}

Graph two_cliques_joined(int k) {
    Graph g = disjoint_union(complete_graph(k + 1), complete_graph(k + 1));
    auto edges = g.edges();
    edges.emplace_back(0, k + 1);
    return build_graph(edges, g.n);
}

std::uint64_t edge_code(const Graph& g) {
    if (g.n > 8) throw TooLarge("edge_code restricted to n <= 8");
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << bit;
    return code;
}

Graph graph_from_code(std::uint64_t code, int n) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((code >> bit) & 1) edges.emplace_back(i, j);
    return build_graph(edges, n);
}

std::uint64_t canonical_code(const Graph& g) {
    if (g.n > 8) throw TooLarge("canonical_code restricted to n <= 8");
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + g.n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int bit = 0;
        bool hopeless = false;
        for (int j = 1; j < g.n && !hopeless; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                if (g.has_edge(perm[i], perm[j])) {
                    code |= std::uint64_t{1} << bit;
                    if (code > best) { hopeless = true; break; }
                }
            }
        }
        if (!hopeless && code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
    return best;
}

std::vector<Graph> all_labeled_graphs(int n) {
    if (n > 6) throw TooLarge("all_labeled_graphs restricted to n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code)
        out.push_back(graph_from_code(code, n));
    return out;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n > 7) throw TooLarge("connected_graphs_up_to_iso restricted to n <= 7");
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(code, n);
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace dpcolor
