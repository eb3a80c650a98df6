#pragma once

#include <cstdint>
#include <random>

#include "clonematch/hr.hpp"
#include "clonematch/matching.hpp"

namespace clonematch {

// Seeded instance generator for property tests and the acceptance suite.
// Sampling and shuffling are spelled out by hand so that a seed produces the
// same instance on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    int below(int n); // uniform in [0, n)

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(below(i + 1))]);
    }

private:
    std::mt19937_64 eng_;
};

// Complete square instance: both sides rank the whole opposite side.
PreferenceTable random_complete_sm(int n, Rng& rng);

// Random mutual acceptability, capacities in [1, max_capacity].
HrInstance random_hr(int n_residents, int n_hospitals, int max_capacity, Rng& rng);

} // namespace clonematch
