#ifndef DPCOLOR_CORPUS_HPP
#define DPCOLOR_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph bowtie_graph();  // two triangles sharing vertex 0
Graph disjoint_union(const Graph& a, const Graph& b);
// Two disjoint K_{k+1} joined by a single edge between vertex 0 of each copy.
Graph two_cliques_joined(int k);

// Upper-triangle edge bitmask, column-major as in graph6. Requires n <= 8.
std::uint64_t edge_code(const Graph& g);
Graph graph_from_code(std::uint64_t code, int n);
// Minimum edge_code over all vertex relabelings. Requires n <= 8.
std::uint64_t canonical_code(const Graph& g);

// All labeled graphs on exactly n vertices (2^C(n,2) of them). n <= 6 guarded.
std::vector<Graph> all_labeled_graphs(int n);
// One representative per isomorphism class of connected graphs of order n.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace dpcolor

#endif
