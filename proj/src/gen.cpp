#include "clonematch/gen.hpp"

#include <numeric>

namespace clonematch {

int Rng::below(int n) {
    // Rejection sampling keeps the distribution uniform without relying on
    // library-specific distribution internals.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return static_cast<int>(v % bound);
}

PreferenceTable random_complete_sm(int n, Rng& rng) {
    auto side = [&]() {
        std::vector<std::vector<int>> prefs(static_cast<size_t>(n));
        for (auto& list : prefs) {
            list.resize(static_cast<size_t>(n));
            std::iota(list.begin(), list.end(), 0);
            rng.shuffle(list);
        }
        return prefs;
    };
    auto a = side();
    auto b = side();
    return PreferenceTable::from_prefs(std::move(a), std::move(b));
}

HrInstance random_hr(int n_residents, int n_hospitals, int max_capacity, Rng& rng) {
    std::vector<int> caps(static_cast<size_t>(n_hospitals));
    for (auto& c : caps) c = 1 + rng.below(max_capacity);

    std::vector<std::vector<int>> rprefs(static_cast<size_t>(n_residents));
    std::vector<std::vector<int>> hprefs(static_cast<size_t>(n_hospitals));
    for (int r = 0; r < n_residents; ++r)
        for (int h = 0; h < n_hospitals; ++h)
            if (rng.below(2) == 0) {
                rprefs[static_cast<size_t>(r)].push_back(h);
                hprefs[static_cast<size_t>(h)].push_back(r);
            }
    for (auto& list : rprefs) rng.shuffle(list);
    for (auto& list : hprefs) rng.shuffle(list);
    return HrInstance::from_prefs(std::move(caps), std::move(rprefs), std::move(hprefs));
}

} // namespace clonematch
