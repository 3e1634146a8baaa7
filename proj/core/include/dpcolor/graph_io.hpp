#ifndef DPCOLOR_GRAPH_IO_HPP
#define DPCOLOR_GRAPH_IO_HPP

#include <string>

#include "dpcolor/graph.hpp"

namespace dpcolor {

// graph6 byte format (de-facto standard): N(n) followed by the upper
// triangle packed column-wise into 6-bit groups, each group + 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);  // accepts an optional >>graph6<< header

// Plain edge-list text format:
//   n
//   u v
//   ...
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

// Sniffs the format: a first line that parses as a bare integer is taken
// as edge-list text, anything else as graph6.
Graph parse_graph(const std::string& text);

}  // namespace dpcolor

#endif
