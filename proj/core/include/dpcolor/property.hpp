#ifndef DPCOLOR_PROPERTY_HPP
#define DPCOLOR_PROPERTY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

enum class BuiltinKind { None, Edgeless, Degenerate };

// Graph-property oracle P: a membership predicate plus self-declared
// structural flags. Flags on custom oracles are only spot-checked
// (verify_flags), full verification being undecidable. Oracles are pure
// predicates, safe for concurrent evaluation.
struct PropertyOracle {
    std::string name;
    std::function<bool(const Graph&)> member_fn;
    bool hereditary = false;
    bool additive = false;
    bool monotone = false;
    std::optional<int> d_value;  // r = d(P) when known exactly

    BuiltinKind builtin = BuiltinKind::None;
    int degeneracy_k = 0;  // for BuiltinKind::Degenerate

    bool is_member(const Graph& g) const { return member_fn(g); }
};

// O: edgeless graphs. d(O) = 1.
PropertyOracle edgeless_property();
// D_k: k-degenerate graphs (every subgraph has a vertex of degree <= k).
// d(D_k) = k + 1.
PropertyOracle degenerate_property(int k);
PropertyOracle custom_property(std::string name, std::function<bool(const Graph&)> member,
                               bool hereditary, bool additive, bool monotone,
                               std::optional<int> d_value = std::nullopt);
// CLI token: "O", "D0", "D1", ..., "Dk".
PropertyOracle property_from_token(const std::string& token);

// Greedy min-degree peeling with lowest-index tie-break; true iff peeling
// vertices of degree <= k empties g.
bool is_k_degenerate(const Graph& g, int k);

// G in CR(P): G not in P but G - v in P for every v.
bool is_cr(const PropertyOracle& p, const Graph& g);

struct DValue {
    int value;
    bool exact;  // false: bounded-search upper bound on d(P), possibly not tight
};
// Declared value when present; otherwise min delta(G) over CR members among
// connected graphs of order <= search_order_limit (flagged non-exact).
DValue d_of(const PropertyOracle& p, int search_order_limit = 0);

// True iff every color class induces a member of P. Coloring must be total.
bool validate_coloring(const PropertyOracle& p, const Graph& g, const std::vector<int>& coloring);

// Bounded spot-check of the declared hereditary/additive flags on all
// graphs of order <= max_order; returns false on the first counterexample.
bool verify_flags(const PropertyOracle& p, int max_order = 5);

}  // namespace dpcolor

#endif
