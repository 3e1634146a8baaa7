#ifndef DPCOLOR_THEOREMS_HPP
#define DPCOLOR_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/rational.hpp"

namespace dpcolor {

struct BlockVerdict {
    std::vector<int> vertices;
    std::string cls;  // Complete | Cycle | RRegularCR | SmallInP | Unclassified
    bool ok = false;
};

struct VerdictReport {
    std::string theorem_id;
    std::string inputs_digest;
    bool holds = false;
    std::string exception_class;  // "" | CompleteGraph | RRegularCR | Cycle
    std::vector<std::pair<std::string, std::string>> numbers;  // label -> exact value
    std::vector<std::string> notes;
    std::vector<BlockVerdict> blocks;
};

// Four-way classification of Theorems 1 and 3: complete, cycle, r-regular
// member of CR(P), or a member of P with max degree <= r.
std::string classify_four_way(const Graph& host, const std::vector<int>& block,
                              const PropertyOracle& p, int r);

// Low-vertex block classification: blocks of the low-vertex subgraph of a
// P-critical cover fall into the four classes.
// Throws NotCritical when the cover is not P-critical.
VerdictReport verify_low_vertex_blocks(const Cover& c, const PropertyOracle& p);

// Brooks-type bound: chi_dp <= ceil(Delta/r) unless K_{kr+1},
// r-regular CR member, or an O-cycle. Exceptions detected in that order.
// A precomputed chi_dp result may be passed to avoid recomputation.
VerdictReport verify_brooks(const Graph& g, const PropertyOracle& p, const Limits& lim = {},
                            const ChromaticResult* precomputed_dp = nullptr);

// Degree-feasible covers (Erdos-Rubin-Taylor type): an uncolorable cover
// with r|X_v| >= d_G(v)
// everywhere forces every block of G into the four-way classification.
VerdictReport verify_ert(const Graph& g, const Cover& c, const PropertyOracle& p);

enum class EdgeBoundMode { Gallai, Dirac, Mihok };

// Exact-rational edge bounds.
//   Gallai:  2|E| >= (kr + (kr-2)/((kr+1)^2-3))|G| + 2kr/((kr+1)^2-3),
//     exempting K_{kr+1}; context: a P-critical k-cover (pass it) or a
//     (P,chi_dp)-critical graph with chi_dp = k+1 (verified when no cover given).
//   Dirac:   2|E| >= k|G| + k - 2 for O-critical k-covers without
//     K_{k+1}; reports equality and Dir(k) membership.
//   Mihok:   (p-1+2/p)|F| - 2|E(F)| >= 2 with p = k, requiring
//     Delta(F) <= p and Delta(B) < p on every block.
VerdictReport check_edge_bounds(const Graph& g, const PropertyOracle& p, int k,
                                EdgeBoundMode mode, const Cover* context_cover = nullptr,
                                const Limits& lim = {});

struct DiracGraph {
    Graph graph;
    std::vector<int> a, b1, b2;
    int v1 = -1, v2 = -1;
};
// Dirac's extremal family: |B1|+|B2| = |A|+1 = k, A and B1 u B2 cliques
// with no edges between, N(v_i) = A u B_i. Order 2k+1, k^2+k-1 edges.
DiracGraph gen_dirac(int k, std::pair<int, int> split);

// Certificate search for membership in Dir(k): picks v1, v2 and derives
// the parts from their neighborhoods.
std::optional<DiracGraph> recognize_dirac(const Graph& g, int k);

bool contains_clique(const Graph& g, int size);

}  // namespace dpcolor

#endif
