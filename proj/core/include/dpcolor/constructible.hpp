#ifndef DPCOLOR_CONSTRUCTIBLE_HPP
#define DPCOLOR_CONSTRUCTIBLE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dpcolor/configuration.hpp"

namespace dpcolor {

enum class BlockTag { M, K, C };
enum class CycleTwist { Odd, Even };

// (M)-configuration on a block: one positive H-vertex per fiber carrying
// f = d_G(v), the positives inducing a copy of the block in H.
Configuration build_m(const Graph& block, int s, const std::vector<int>& embedding);

// (K)-configuration on K_n: slot i carries f = t[i] with sum(t) = n - 1,
// realized by full slot-preserving matchings (H_i complete for every slot).
Configuration build_k(int n, const std::vector<int>& t, int s);

// (C)-configuration on C_n: two f=1 vertices per fiber; odd n gives two
// disjoint n-cycles in the positive part, even n one 2n-cycle.
Configuration build_c(int n, int s, CycleTwist twist);

// Identify v1 of c1 with v2 of c2; the merged fiber adds f-values through
// the given fiber bijection (index i of X_{v1} pairs with bijection[i] of
// X_{v2}). Vertices of c2 are appended after those of c1.
Configuration merge(const Configuration& c1, int v1, const Configuration& c2, int v2,
                    const std::vector<int>& bijection);

struct KColumn {
    int t = 0;
    std::map<int, int> slot;  // block vertex -> fiber index
};

struct BlockCert {
    std::vector<int> vertices;               // sorted, parent ids
    std::vector<std::pair<int, int>> edges;  // block edges, parent ids, u < v
    BlockTag tag = BlockTag::M;
    std::map<int, int> m_embedding;                   // M: vertex -> positive index
    std::vector<KColumn> k_columns;                   // K
    std::map<int, std::pair<int, int>> c_pairs;       // C: vertex -> the two positive indices
    std::map<std::pair<int, int>, int> f_block;       // (vertex, index) -> f^B
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
};

struct MergeStep {
    int block_index;
    int at_vertex;  // parent id of the shared cut vertex; -1 for the root block
};

// Block-decomposition witness: per-block (M)/(K)/(C) patterns whose
// f^B values sum to f at every H-vertex, plus the merge order that replays
// the configuration along the block-cut tree.
struct ConstructibleCert {
    int base_n = 0;
    int fiber_size = 1;
    std::vector<BlockCert> blocks;
    std::vector<MergeStep> merge_tree;
};

// Structural recognizer. Requires G connected and the configuration
// normalized. Searches per-block tags and cut-vertex f-splittings over the
// block-cut tree; returns a certificate or nullopt.
std::optional<ConstructibleCert> is_constructible(const Configuration& c);

// Rebuilds the configuration by merging the certified blocks in merge_tree
// order; the result matches the recognized input exactly.
Configuration replay(const ConstructibleCert& cert);

bool configurations_equal(const Configuration& a, const Configuration& b);

}  // namespace dpcolor

#endif
