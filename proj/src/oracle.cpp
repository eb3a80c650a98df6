#include "clonematch/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace clonematch {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void mix(std::uint64_t& h, std::uint64_t v) {
    h ^= v;
    h *= kFnvPrime;
}

void mix_lists(std::uint64_t& h, const std::vector<std::vector<int>>& lists) {
    mix(h, lists.size());
    for (const auto& list : lists) {
        mix(h, list.size());
        for (int v : list) mix(h, static_cast<std::uint64_t>(v) + 1);
    }
}

} // namespace

std::uint64_t fingerprint(const PreferenceTable& t) {
    std::uint64_t h = kFnvOffset;
    mix_lists(h, t.prefs_a);
    mix_lists(h, t.prefs_b);
    return h;
}

std::uint64_t fingerprint(const HrInstance& inst) {
    std::uint64_t h = kFnvOffset;
    for (int c : inst.capacity) mix(h, static_cast<std::uint64_t>(c));
    mix_lists(h, inst.resident_prefs);
    mix_lists(h, inst.hospital_prefs);
    return h;
}

StableSet enumerate_stable_sm(const PreferenceTable& t) {
    validate_instance(t);
    const int n = t.size_a();
    if (n != t.size_b())
        fail(Errc::ragged_lists, "enumeration needs equally sized sides");
    if (n > 8)
        fail(Errc::instance_too_large,
             "will not enumerate " + std::to_string(n) + "! matchings");

    StableSet out;
    out.instance_fingerprint = fingerprint(t);
    if (n == 0) {
        out.matchings.push_back({});
        return out;
    }

    RankMatrix ranks(t);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    // perm[a] = partner of A agent a; inverse gives each B agent's partner.
    std::vector<int> inv(static_cast<size_t>(n));
    do {
        for (int a = 0; a < n; ++a) inv[static_cast<size_t>(perm[static_cast<size_t>(a)])] = a;
        bool stable = true;
        for (int a = 0; a < n && stable; ++a) {
            int held = ranks.rank_a(a, perm[static_cast<size_t>(a)]);
            if (held == 0) held = 1 << 30;
            for (int b = 0; b < n; ++b) {
                if (b == perm[static_cast<size_t>(a)]) continue;
                int ra = ranks.rank_a(a, b);
                if (ra == 0 || ra >= held) continue;
                int rb = ranks.rank_b(b, a);
                if (rb == 0) continue;
                int b_held = ranks.rank_b(b, inv[static_cast<size_t>(b)]);
                if (b_held == 0) b_held = 1 << 30;
                if (rb < b_held) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) {
            Matching m;
            for (int a = 0; a < n; ++a) m.insert(a, perm[static_cast<size_t>(a)]);
            out.matchings.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(out.matchings.begin(), out.matchings.end(),
              [](const Matching& x, const Matching& y) { return x.pairs < y.pairs; });
    return out;
}

HrStableSet enumerate_stable_hr(const HrInstance& inst) {
    validate_instance(inst);
    double space = 1;
    for (const auto& list : inst.resident_prefs) space *= static_cast<double>(list.size() + 1);
    if (space > 1e6)
        fail(Errc::instance_too_large, "assignment space exceeds 1e6");

    HrStableSet out;
    out.instance_fingerprint = fingerprint(inst);

    const int nr = inst.residents();
    std::vector<int> choice(static_cast<size_t>(nr), -1);
    std::vector<int> load(static_cast<size_t>(inst.hospitals()), 0);

    auto emit = [&]() {
        HrMatching m;
        for (int r = 0; r < nr; ++r)
            if (choice[static_cast<size_t>(r)] != -1) m.insert(r, choice[static_cast<size_t>(r)]);
        if (hr_blocking_pairs(inst, m).empty()) out.matchings.push_back(std::move(m));
    };

    auto rec = [&](auto&& self, int r) -> void {
        if (r == nr) {
            emit();
            return;
        }
        choice[static_cast<size_t>(r)] = -1;
        self(self, r + 1);
        for (int h : inst.resident_prefs[static_cast<size_t>(r)]) {
            if (load[static_cast<size_t>(h)] >= inst.capacity[static_cast<size_t>(h)]) continue;
            choice[static_cast<size_t>(r)] = h;
            ++load[static_cast<size_t>(h)];
            self(self, r + 1);
            --load[static_cast<size_t>(h)];
            choice[static_cast<size_t>(r)] = -1;
        }
    };
    rec(rec, 0);

    std::sort(out.matchings.begin(), out.matchings.end(),
              [](const HrMatching& x, const HrMatching& y) {
                  return x.assignments < y.assignments;
              });
    return out;
}

Matching optimal_of(const StableSet& s, const PreferenceTable& t, Side side) {
    if (s.matchings.empty())
        fail(Errc::no_pointwise_optimum, "empty stable set");
    RankMatrix ranks(t);
    const int n = side == Side::A ? t.size_a() : t.size_b();
    constexpr int kUnmatched = 1 << 30;

    auto rank_in = [&](const Matching& m, int agent) {
        std::optional<int> p = side == Side::A ? m.partner_of_a(agent) : m.partner_of_b(agent);
        if (!p) return kUnmatched;
        int r = side == Side::A ? ranks.rank_a(agent, *p) : ranks.rank_b(agent, *p);
        return r == 0 ? kUnmatched : r;
    };

    std::vector<int> best(static_cast<size_t>(n), kUnmatched);
    for (const Matching& m : s.matchings)
        for (int i = 0; i < n; ++i)
            best[static_cast<size_t>(i)] = std::min(best[static_cast<size_t>(i)], rank_in(m, i));

    for (const Matching& m : s.matchings) {
        bool all_best = true;
        for (int i = 0; i < n && all_best; ++i)
            all_best = rank_in(m, i) == best[static_cast<size_t>(i)];
        if (all_best) return m;
    }
    fail(Errc::no_pointwise_optimum,
         std::string("no matching in the set is ") + side_name(side) + "-optimal");
}

} // namespace clonematch
