#include "dpcolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dpcolor/errors.hpp"

namespace dpcolor {

bool Graph::has_edge(int u, int v) const {
    if (n <= 64) return (bits[u] >> v) & 1u;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj) twice += static_cast<int>(a.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n == 0) return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

bool Graph::is_complete() const {
    return edge_count() == n * (n - 1) / 2;
}

bool Graph::is_cycle() const {
    return n >= 3 && regular_degree() == 2 && is_connected(*this);
}

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InvalidGraph("loop edge at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    if (n <= 64) {
        g.bits.assign(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[u]) g.bits[u] |= std::uint64_t{1} << v;
    }
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> verts(vertices);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.adj[u])
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    return {build_graph(edges, static_cast<int>(verts.size())), std::move(verts)};
}

Graph delete_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.n - 1);
    for (int u = 0; u < g.n; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep).graph;
}

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(g.n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

int component_count(const Graph& g) {
    auto labels = component_labels(g);
    return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool BlockDecomposition::is_cut(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<bool> cut(g.n, false);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.adj[u]) {
            if (v == parent) continue;  // simple graph: the tree edge occurs once
            if (disc[v] < 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // u closes a block; pop it off the edge stack.
                    if (parent != -1 || children > 1) cut[u] = true;
                    std::vector<int> verts;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(a);
                        verts.push_back(b);
                        if (a == u && b == v) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    out.blocks.push_back(std::move(verts));
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };

    for (int s = 0; s < g.n; ++s) {
        if (disc[s] >= 0) continue;
        dfs(s, -1);
        if (g.adj[s].empty()) out.blocks.push_back({s});  // isolated vertex
    }
    for (int v = 0; v < g.n; ++v)
        if (cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

BlockClass classify_block(const Graph& g, const std::vector<int>& block) {
    auto sub = induced_subgraph(g, block).graph;
    BlockClass cls{BlockKind::Other, sub.max_degree(), sub.regular_degree()};
    if (sub.is_complete())
        cls.kind = BlockKind::Complete;
    else if (sub.is_cycle())
        cls.kind = BlockKind::Cycle;
    return cls;
}

}  // namespace dpcolor
