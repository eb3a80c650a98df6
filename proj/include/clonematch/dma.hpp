#pragma once

#include <vector>

#include "clonematch/matching.hpp"

namespace clonematch {

// Result of running deferred acceptance from both sides of one instance.
struct DualMatching {
    Matching m1; // A-oriented pass
    Matching m2; // B-oriented pass
};

struct ScoredPair {
    int a;
    int b;
    double love;     // average of the two desirabilities, in [0,1]
    double contrast; // absolute difference of the two desirabilities, in [0,1]

    bool operator==(const ScoredPair& o) const {
        return a == o.a && b == o.b && love == o.love && contrast == o.contrast;
    }
};

DualMatching dual_multi_allocate(const PreferenceTable& t);

// Desirability of a candidate is a linear rescaling of its rank onto [0,1]:
// first choice 1, last choice 0, and 1 when the list has a single entry.
// Love averages the two directions, contrast measures their disagreement.
// Both throw pair_not_ranked unless a and b list each other.
double love_degree(const PreferenceTable& t, int a, int b);
double contrast_degree(const PreferenceTable& t, int a, int b);

// Union of the two matchings (duplicates reported once), scored, pairs with
// love below the threshold dropped (the threshold itself is kept), ordered
// by love descending, then contrast ascending, then (a, b).
std::vector<ScoredPair> choosy_filter(const PreferenceTable& t, const DualMatching& dm,
                                      double love_threshold);

} // namespace clonematch
