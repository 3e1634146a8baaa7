#ifndef DPCOLOR_CHROMATIC_HPP
#define DPCOLOR_CHROMATIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpcolor {

// Desk-scale guards. Enumerations beyond these throw TooLarge rather than
// run away; raise them explicitly (CLI --max-order / DPCOLOR_MAX_WORK).
struct Limits {
    int max_order = 10;         // chi / choosability search
    int max_cover_order = 6;    // cover enumeration base-graph order
    int max_fiber = 6;
    std::uint64_t budget = 5'000'000;  // enumeration nodes before TooLarge
    int workers = 1;
};

struct ChromaticResult {
    int value = 0;
    std::vector<int> coloring;                  // chi witness
    std::vector<std::vector<int>> bad_lists;    // chi_list witness at value-1
    std::optional<Cover> bad_cover;             // chi_dp witness at value-1
    int bad_witness_k = -1;                     // the k the bad witness defeats
    std::string method;
    std::uint64_t nodes = 0;
};

// Least k admitting a P-coloring; backtracking over color classes with
// first-use symmetry reduction (color c only after c-1 appears).
ChromaticResult chi(const Graph& g, const PropertyOracle& p, const Limits& lim = {});

// Decision with k colors; witness coloring on success.
std::optional<std::vector<int>> chi_decide(const Graph& g, const PropertyOracle& p, int k,
                                           const Limits& lim = {});

struct ListDecision {
    bool choosable = false;
    std::vector<std::vector<int>> bad_lists;  // witness when not choosable
    std::uint64_t assignments_checked = 0;
};
// Every k-list assignment admits a (P,L)-coloring? Enumerates assignments
// up to color renaming as support multisets (each color contributes its
// support set {v : c in L(v)}); colors private to one vertex reduce to the
// vertex-deleted subgraph, so supports of size >= 2 suffice once all
// one-vertex-deleted subgraphs are known choosable.
ListDecision chi_list_decide(const Graph& g, const PropertyOracle& p, int k,
                             const Limits& lim = {});

ChromaticResult chi_list(const Graph& g, const PropertyOracle& p, const Limits& lim = {});

struct CoverDecision {
    bool all_coverable = false;
    std::optional<Cover> bad_cover;
    std::uint64_t nodes = 0;
    std::string method;
};
// Every k-cover admits a P-transversal? Enumerates covers up to
// fiber-permutation equivalence: matchings on a spanning forest normalized
// to (sub-)identities; monotone properties restrict to full matchings
// (extra matching edges only shrink the transversal set); the first
// non-tree edge ranges over conjugacy-class representatives only (one
// global fiber relabeling conjugates every non-tree matching at once).
// The search over the remaining matchings prunes a subtree as all-coverable
// when the surviving transversals outnumber everything the remaining edges
// could still kill, and reports a bad cover as soon as no transversal
// survives the already-fixed matchings.
CoverDecision chi_dp_decide(const Graph& g, const PropertyOracle& p, int k,
                            const Limits& lim = {});

// Least k with chi_dp_decide all-coverable. Skips the enumeration whenever
// G is (rk-1)-degenerate: a greedy along the degeneracy order then finds a
// transversal of any k-cover whose conflicts leave every fiber a vertex
// with fewer than r back-edges, and (r-1)-degenerate graphs lie in P by
// minimality of d(P). That bound is exercised directly by
// greedy_transversal and cross-checked against enumeration in the tests.
ChromaticResult chi_dp(const Graph& g, const PropertyOracle& p, const Limits& lim = {});

// Degeneracy-order greedy: picks per fiber a vertex with at most
// ceil(back_degree/k) - 1 ... < r conflicts into the chosen set; succeeds
// whenever the base graph is (rk-1)-degenerate with |X_v| >= k.
std::optional<Transversal> greedy_transversal(const Cover& c, const PropertyOracle& p);

// Every subgraph has a vertex of degree <= d (greedy peeling).
bool is_d_degenerate_graph(const Graph& g, int d);

// chi_dp(G - v) == chi_dp(G) - 1 for every v (the one-vertex-deletion form
// of criticality).
bool is_dp_critical(const Graph& g, const PropertyOracle& p, const Limits& lim = {});

// Minimum-order induced subgraph with the same chi_dp; critical and
// connected (or a single vertex / empty).
Graph critical_core(const Graph& g, const PropertyOracle& p, const Limits& lim = {});

}  // namespace dpcolor

#endif
