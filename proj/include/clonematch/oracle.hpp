#pragma once

#include <cstdint>
#include <vector>

#include "clonematch/hr.hpp"
#include "clonematch/matching.hpp"

namespace clonematch {

// Brute-force references used to cross-check the production algorithms.
// They enumerate every candidate matching, so hard size guards apply.

struct StableSet {
    std::vector<Matching> matchings; // canonical order: lexicographic by pair list
    std::uint64_t instance_fingerprint = 0;
};

struct HrStableSet {
    std::vector<HrMatching> matchings;
    std::uint64_t instance_fingerprint = 0;
};

std::uint64_t fingerprint(const PreferenceTable& t);
std::uint64_t fingerprint(const HrInstance& inst);

// All perfect matchings of a square instance with no blocking pair.
// Throws instance_too_large when size exceeds 8.
StableSet enumerate_stable_sm(const PreferenceTable& t);

// All capacity-respecting assignments with no blocking pair. Throws
// instance_too_large when the assignment space exceeds 1e6.
HrStableSet enumerate_stable_hr(const HrInstance& inst);

// The matching in which every agent of `side` does at least as well as in
// any other matching of the set. Such a matching exists for stable marriage;
// the function verifies pointwise minimality of ranks and throws
// no_pointwise_optimum if no element of the set achieves it.
Matching optimal_of(const StableSet& s, const PreferenceTable& t, Side side);

} // namespace clonematch
