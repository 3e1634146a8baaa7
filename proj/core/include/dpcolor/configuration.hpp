#ifndef DPCOLOR_CONFIGURATION_HPP
#define DPCOLOR_CONFIGURATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpcolor {

// Configuration (G, X, H, f): a cover plus a vertex function on H, stored
// flat (f[x] for flat id x). Immutable in all engines.
struct Configuration {
    Cover cover;
    std::vector<int> f;

    int f_at(int v, int i) const { return f[cover.flat(v, i)]; }
};

Configuration make_configuration(Cover c, std::vector<int> f);

// Peeling decision for H[T] strictly f-degenerate; T as flat ids.
bool is_strictly_f_degenerate(const Configuration& c, const std::vector<int>& t_flat);
bool is_strictly_f_degenerate_mask(const Configuration& c, std::uint64_t mask);

// Fiber f-sums dominate G-degrees everywhere.
bool is_degree_feasible(const Configuration& c);

// True iff the fiber f-sum equals the G-degree at every vertex.
bool is_degree_tight(const Configuration& c);

// Pads every fiber to the maximum fiber size with isolated virtual
// H-vertices carrying f = 0. Idempotent; solver verdicts unchanged.
Configuration normalize(const Configuration& c);
bool is_normalized(const Configuration& c);

// (G', X', H', f') = (G, X, H, f)/(v, x): delete v and its fiber, then
// f'(y) = max(0, f(y) - 1) on H-neighbors of x. Requires v non-separating
// and f(x) > 0.
Configuration reduce(const Configuration& c, int v, int fiber_index);

// Exhaustive backtracking for a transversal T with H[T] strictly
// f-degenerate. A branch is pruned as soon as the chosen set already fails
// the peeling test: extending a set never removes edges among chosen
// vertices, so the obstruction persists. Vertex order: descending
// G-degree, lowest index; fiber indices ascending; first hit returned.
std::optional<Transversal> solve(const Configuration& c);

struct GuidedSolveResult {
    std::optional<Transversal> transversal;
    bool used_fallback = false;    // exhausted pivots and re-ran the full search
    int reductions_applied = 0;
};
// Reduction-guided engine: repeatedly pivots at a non-separating vertex of
// maximum degree (positive-f H-vertex of lowest index first) and lifts the
// reduced solution. Falls back to the exhaustive search when no pivot
// yields one. Intended as a cross-check of solve(), not a replacement.
GuidedSolveResult solve_reduction_guided(const Configuration& c);

}  // namespace dpcolor

#endif
