#include "clonematch/dma.hpp"

#include <algorithm>
#include <set>

namespace clonematch {

DualMatching dual_multi_allocate(const PreferenceTable& t) {
    DualMatching dm;
    dm.m1 = extended_gs(t, Side::A).matching;
    dm.m2 = extended_gs(t, Side::B).matching;
    return dm;
}

namespace {

// (desirability for a, desirability for b): rank mapped linearly onto [0,1],
// best = 1, worst = 0; a single-entry list pins its only candidate at 1.
std::pair<double, double> desirabilities(const PreferenceTable& t, int a, int b) {
    if (a < 0 || a >= t.size_a() || b < 0 || b >= t.size_b())
        fail(Errc::index_out_of_range, "scored pair outside the instance");
    const auto& la = t.prefs_a[static_cast<size_t>(a)];
    const auto& lb = t.prefs_b[static_cast<size_t>(b)];
    auto pa = std::find(la.begin(), la.end(), b);
    if (pa == la.end())
        fail(Errc::pair_not_ranked, "agent " + t.labels_a[static_cast<size_t>(a)] +
                                        " does not rank " + t.labels_b[static_cast<size_t>(b)]);
    auto pb = std::find(lb.begin(), lb.end(), a);
    if (pb == lb.end())
        fail(Errc::pair_not_ranked, "agent " + t.labels_b[static_cast<size_t>(b)] +
                                        " does not rank " + t.labels_a[static_cast<size_t>(a)]);
    auto scale = [](std::ptrdiff_t rank0, size_t len) {
        if (len <= 1) return 1.0;
        return static_cast<double>(static_cast<std::ptrdiff_t>(len) - 1 - rank0) /
               static_cast<double>(len - 1);
    };
    return {scale(pa - la.begin(), la.size()), scale(pb - lb.begin(), lb.size())};
}

} // namespace

double love_degree(const PreferenceTable& t, int a, int b) {
    auto [da, db] = desirabilities(t, a, b);
    return (da + db) / 2.0;
}

double contrast_degree(const PreferenceTable& t, int a, int b) {
    auto [da, db] = desirabilities(t, a, b);
    return da > db ? da - db : db - da;
}

std::vector<ScoredPair> choosy_filter(const PreferenceTable& t, const DualMatching& dm,
                                      double love_threshold) {
    std::set<std::pair<int, int>> seen;
    std::vector<ScoredPair> out;
    for (const Matching* m : {&dm.m1, &dm.m2})
        for (const auto& [a, b] : m->pairs) {
            if (!seen.insert({a, b}).second) continue;
            auto [da, db] = desirabilities(t, a, b);
            double love = (da + db) / 2.0;
            if (love < love_threshold) continue;
            out.push_back({a, b, love, da > db ? da - db : db - da});
        }
    std::sort(out.begin(), out.end(), [](const ScoredPair& x, const ScoredPair& y) {
        if (x.love != y.love) return x.love > y.love;
        if (x.contrast != y.contrast) return x.contrast < y.contrast;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

} // namespace clonematch
