#ifndef DPCOLOR_MASK_OPS_HPP
#define DPCOLOR_MASK_OPS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace dpcolor {

// Peeling on an adjacency-bitmask graph restricted to `mask`: repeatedly
// delete any vertex whose current degree is below f; true iff everything
// peels away. Equivalent to "every nonempty subgraph has a vertex of
// degree < f" and independent of peel order.
inline bool strictly_f_degenerate_mask(const std::vector<std::uint64_t>& adj,
                                       const std::vector<int>& f, std::uint64_t mask) {
    bool changed = true;
    while (mask && changed) {
        changed = false;
        std::uint64_t m = mask;
        while (m) {
            int x = std::countr_zero(m);
            m &= m - 1;
            if (std::popcount(adj[x] & mask) < f[x]) {
                mask &= ~(std::uint64_t{1} << x);
                changed = true;
            }
        }
    }
    return mask == 0;
}

// k-degeneracy of the induced sub(bit)graph: strict (k+1)-degeneracy with
// a constant vertex function.
inline bool mask_k_degenerate(const std::vector<std::uint64_t>& adj, std::uint64_t mask, int k) {
    bool changed = true;
    while (mask && changed) {
        changed = false;
        std::uint64_t m = mask;
        while (m) {
            int x = std::countr_zero(m);
            m &= m - 1;
            if (std::popcount(adj[x] & mask) <= k) {
                mask &= ~(std::uint64_t{1} << x);
                changed = true;
            }
        }
    }
    return mask == 0;
}

}  // namespace dpcolor

#endif
