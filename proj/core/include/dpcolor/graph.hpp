#ifndef DPCOLOR_GRAPH_HPP
#define DPCOLOR_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dpcolor {

// Simple undirected graph on dense vertex indices 0..n-1. Immutable after
// construction; safe to share across concurrent searches.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;   // sorted neighbor lists, loop-free
    std::vector<std::uint64_t> bits;     // adjacency bitmasks, usable while n <= 64

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    int max_degree() const;
    int min_degree() const;
    // Regular degree if the graph is regular (n >= 1), otherwise nullopt.
    std::optional<int> regular_degree() const;
    bool is_complete() const;
    bool is_cycle() const;  // connected 2-regular of order >= 3
};

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n);

// Induced subgraph with the index remap back to the parent graph:
// vertex i of `graph` corresponds to to_parent[i].
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph delete_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
// Component label per vertex, labels are 0-based in order of first vertex.
std::vector<int> component_labels(const Graph& g);

// Blocks (maximal subgraphs without separating vertices) and the set
// S(G) of separating vertices. Isolated vertices form singleton blocks;
// K_1 and K_2 count as blocks. Disconnected input decomposes per component.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted; every edge in exactly one
    std::vector<int> cut_vertices;         // sorted
    bool is_cut(int v) const;
};
BlockDecomposition block_decomposition(const Graph& g);

enum class BlockKind { Complete, Cycle, Other };

struct BlockClass {
    BlockKind kind;
    int max_degree;                     // within the induced block
    std::optional<int> regular_degree;  // set iff the block is regular
};
// Classification order: Complete before Cycle (K_3 reports Complete).
BlockClass classify_block(const Graph& g, const std::vector<int>& block);

}  // namespace dpcolor

#endif
