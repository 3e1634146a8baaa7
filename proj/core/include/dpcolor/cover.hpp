#ifndef DPCOLOR_COVER_HPP
#define DPCOLOR_COVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/property.hpp"

namespace dpcolor {

// Cover (X,H) of a base graph G. H is never stored flat: fibers are index
// ranges and E(H) is exactly the union of the per-edge matchings, which
// makes (C1)/(C2) structural. H-vertices are addressed as (v, i) and flat
// ids are offset[v] + i. Immutable after build(); searches may share it.
struct Cover {
    Graph base;
    std::vector<int> fiber_sizes;
    // Key (u, v) with u < v; pair (i, j) joins the i-th vertex of X_u with
    // the j-th vertex of X_v. Absent key = empty matching.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;

    // Derived by build():
    std::vector<int> offset;
    std::vector<int> h_vertex;  // flat id -> base vertex
    std::vector<int> h_index;   // flat id -> fiber index
    int h_order = 0;
    std::vector<std::vector<int>> h_adj;       // sorted, flat ids
    std::vector<std::uint64_t> h_bits;         // valid when h_order <= 64
    bool built = false;

    int flat(int v, int i) const { return offset[v] + i; }
    // Validates and computes the derived structures; throws InvalidCover.
    void build();
    bool h_has_edge(int x, int y) const;
    // H-neighbor of flat id x inside fiber X_u, if matched.
    std::optional<int> matched_partner(int x, int u) const;
};

Cover make_cover(Graph base, std::vector<int> fiber_sizes,
                 std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings);

// Uniform k-cover whose matchings all pair equal fiber indices (the cover
// associated with a constant list assignment).
Cover identity_cover(const Graph& g, int k);

struct CoverValidation {
    bool ok = true;
    std::optional<std::pair<int, int>> bad_edge;
    std::string reason;
};
// (C2) check on the raw fields: matching coordinates duplicate-free and
// in range, keys actual base edges. Does not require build().
CoverValidation validate(const Cover& c);

// Cover associated with a list assignment: fiber of v indexes the sorted
// deduplicated L(v); edge uv matches (i, j) iff L(u)[i] == L(v)[j].
Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists);

// Total transversal: fiber index per vertex. Partial transversals use -1
// for vertices outside the domain.
using Transversal = std::vector<int>;

std::vector<int> transversal_flats(const Cover& c, const Transversal& t);
std::uint64_t transversal_mask(const Cover& c, const Transversal& t);

// Exhaustive backtracking for a transversal T with H[T] in P, omitting
// exactly `forbidden` when given (a (P,v)-transversal). Vertex order:
// descending G-degree, lowest index first; fiber indices ascending; the
// first hit in that order is returned, so results are deterministic.
// Pruning uses hereditary P only; otherwise the search is pure enumeration.
std::optional<Transversal> find_P_transversal(const Cover& c, const PropertyOracle& p,
                                              int forbidden = -1);

// No P-transversal, but a (P,v)-transversal for every vertex v.
bool is_P_critical_cover(const Cover& c, const PropertyOracle& p);

struct LowVertexSubgraph {
    std::vector<int> low_set;  // vertices with d_G(v) == r * |X_v|
    InducedSubgraph f;
};
// Requires d(P) known exactly (built-ins); caller guarantees criticality.
LowVertexSubgraph low_vertex_subgraph(const Cover& c, const PropertyOracle& p);

// Contact degrees d_{x,v} = |N_H(x) ∩ T| for each x in X_v; in a critical
// cover these are exactly r at every low vertex.
std::vector<int> fiber_degrees_into(const Cover& c, const Transversal& t, int v);

// Flat debugging export of H; vertex i of the result is flat id i.
Graph flat_h(const Cover& c);

}  // namespace dpcolor

#endif
