#ifndef DPCOLOR_SWEEPS_HPP
#define DPCOLOR_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/theorems.hpp"

namespace dpcolor {

struct SweepItem {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct SweepOutcome {
    std::string name;
    std::vector<SweepItem> items;  // failures always included; passes summarized
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    bool all_ok() const { return failures == 0; }
};

// The chain chi <= chi_l <= chi_dp over all connected graphs of order
// <= max_order (one representative per isomorphism class).
SweepOutcome sweep_chain(int max_order, const std::vector<PropertyOracle>& props,
                         const Limits& lim = {});

struct DiscoveredCover {
    std::string id;
    Cover cover;
    int k = 0;
};

struct BrooksSweep {
    SweepOutcome outcome;
    // P-critical bad covers harvested from the chi_dp runs (witness k-covers
    // at chi_dp - 1 that turn out P-critical).
    std::vector<DiscoveredCover> critical_covers;
};
BrooksSweep sweep_brooks(int max_order, const PropertyOracle& p, const Limits& lim = {});

struct Theorem5Sweep {
    SweepOutcome outcome;
    std::uint64_t configurations = 0;
    std::uint64_t uncolorable = 0;
    std::uint64_t constructible = 0;
    std::uint64_t tightness_failures = 0;  // uncolorables with a slack fiber sum
};
// solve == none  <=>  is_constructible == some, over every normalized
// degree-feasible configuration with f <= 2 on the fixed small-graph list
// (P2, P3, C3, C4, C5, K4, bowtie) and fiber sizes s <= 2.
Theorem5Sweep sweep_theorem5(const Limits& lim = {}, int workers = 1);

struct CoverFixture {
    std::string name;
    Cover cover;
    PropertyOracle property;
    int k = 0;
};
// Named covers used by the classification and edge-bound criteria.
std::vector<CoverFixture> builtin_cover_corpus();

// Low-vertex classification on every P-critical fixture, the whole-graph
// block classification on every uncolorable
// fixture meeting the degree precondition.
SweepOutcome sweep_classification(const std::vector<CoverFixture>& corpus, const Limits& lim = {});

// Gallai bound on every P-critical k-cover (k >= 3) in the fixture corpus plus
// any discovered covers; non-critical fixtures are reported and skipped.
SweepOutcome sweep_gallai(const std::vector<CoverFixture>& corpus,
                          const std::vector<DiscoveredCover>& discovered, const Limits& lim = {});

struct DiracScan {
    int k = 0;
    std::pair<int, int> split;
    std::uint64_t covers = 0;
    std::uint64_t uncolorable = 0;
    std::uint64_t list_associated_uncolorable = 0;
    std::uint64_t non_list_uncolorable = 0;
};
// Experiment: scan the full-matching k-covers of a Dir(k) graph (up to
// fiber permutation, identities on a spanning tree) for O-uncolorable ones
// and report which of those are associated with a list assignment. No
// expected outcome is asserted.
DiracScan dirac_cover_scan(int k, std::pair<int, int> split, const Limits& lim = {});

// A cover is associated with a list assignment iff identifying matched
// H-vertices never merges two vertices of one fiber.
bool is_list_associated(const Cover& c);

}  // namespace dpcolor

#endif
