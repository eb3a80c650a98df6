#include "clonematch/matching.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace clonematch {

Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

bool PreferenceTable::complete() const {
    for (const auto& list : prefs_a)
        if (static_cast<int>(list.size()) != size_b()) return false;
    for (const auto& list : prefs_b)
        if (static_cast<int>(list.size()) != size_a()) return false;
    return true;
}

AgentId PreferenceTable::agent(Side s, int index) const {
    const auto& labels = s == Side::A ? labels_a : labels_b;
    return AgentId{s, index, labels[static_cast<size_t>(index)]};
}

PreferenceTable PreferenceTable::from_prefs(std::vector<std::vector<int>> a,
                                            std::vector<std::vector<int>> b) {
    PreferenceTable t;
    t.prefs_a = std::move(a);
    t.prefs_b = std::move(b);
    for (size_t i = 0; i < t.prefs_a.size(); ++i)
        t.labels_a.push_back("m" + std::to_string(i + 1));
    for (size_t i = 0; i < t.prefs_b.size(); ++i)
        t.labels_b.push_back("w" + std::to_string(i + 1));
    return t;
}

void Matching::insert(int a, int b) {
    auto pos = std::lower_bound(pairs.begin(), pairs.end(), std::pair{a, -1});
    if (pos != pairs.end() && pos->first == a)
        throw std::logic_error("agent matched twice: A" + std::to_string(a));
    for (const auto& [pa, pb] : pairs)
        if (pb == b) throw std::logic_error("agent matched twice: B" + std::to_string(b));
    pairs.insert(pos, {a, b});
}

bool Matching::contains(int a, int b) const {
    auto p = partner_of_a(a);
    return p && *p == b;
}

std::optional<int> Matching::partner_of_a(int a) const {
    auto pos = std::lower_bound(pairs.begin(), pairs.end(), std::pair{a, -1});
    if (pos != pairs.end() && pos->first == a) return pos->second;
    return std::nullopt;
}

std::optional<int> Matching::partner_of_b(int b) const {
    for (const auto& [pa, pb] : pairs)
        if (pb == b) return pa;
    return std::nullopt;
}

RankMatrix::RankMatrix(const PreferenceTable& t)
    : a_ranks(t.prefs_a.size(), std::vector<int>(t.prefs_b.size(), 0)),
      b_ranks(t.prefs_b.size(), std::vector<int>(t.prefs_a.size(), 0)) {
    for (size_t i = 0; i < t.prefs_a.size(); ++i)
        for (size_t r = 0; r < t.prefs_a[i].size(); ++r)
            a_ranks[i][static_cast<size_t>(t.prefs_a[i][r])] = static_cast<int>(r) + 1;
    for (size_t j = 0; j < t.prefs_b.size(); ++j)
        for (size_t r = 0; r < t.prefs_b[j].size(); ++r)
            b_ranks[j][static_cast<size_t>(t.prefs_b[j][r])] = static_cast<int>(r) + 1;
}

namespace {

void validate_side(const std::vector<std::vector<int>>& prefs, int opposite_size,
                   const std::vector<std::string>& labels, const char* side) {
    std::vector<char> seen(static_cast<size_t>(opposite_size));
    for (size_t i = 0; i < prefs.size(); ++i) {
        const std::string who = std::string(side) + std::to_string(i + 1) +
                                (i < labels.size() && !labels[i].empty() ? " (" + labels[i] + ")" : "");
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : prefs[i]) {
            if (v < 0 || v >= opposite_size)
                fail(Errc::index_out_of_range,
                     "preference list of " + who + " names index " + std::to_string(v));
            if (seen[static_cast<size_t>(v)])
                fail(Errc::duplicate_entry,
                     "preference list of " + who + " repeats index " + std::to_string(v));
            seen[static_cast<size_t>(v)] = 1;
        }
    }
}

void validate_labels(const std::vector<std::string>& labels, const char* side) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].empty())
            fail(Errc::duplicate_label, std::string("empty label on side ") + side);
        if (i > 0 && sorted[i] == sorted[i - 1])
            fail(Errc::duplicate_label,
                 "label \"" + sorted[i] + "\" used twice on side " + side);
    }
}

} // namespace

const PreferenceTable& validate_instance(const PreferenceTable& t) {
    if (t.labels_a.size() != t.prefs_a.size() || t.labels_b.size() != t.prefs_b.size())
        fail(Errc::ragged_lists, "label count does not match preference list count");
    validate_side(t.prefs_a, t.size_b(), t.labels_a, "A");
    validate_side(t.prefs_b, t.size_a(), t.labels_b, "B");
    validate_labels(t.labels_a, "A");
    validate_labels(t.labels_b, "B");
    return t;
}

namespace {

// Proposer-agnostic deferred acceptance. `give` are the proposers' lists,
// `take_rank[j][i]` the 1-based rank responder j assigns to proposer i
// (0 = unlisted, which means rejection).
std::vector<int> propose(const std::vector<std::vector<int>>& give,
                         const std::vector<std::vector<int>>& take_rank) {
    const int np = static_cast<int>(give.size());
    std::vector<int> next(static_cast<size_t>(np), 0);
    std::vector<int> fiance(take_rank.size(), -1); // responder -> proposer
    std::vector<int> stack;
    for (int p = np - 1; p >= 0; --p) stack.push_back(p);

    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        while (next[static_cast<size_t>(p)] < static_cast<int>(give[static_cast<size_t>(p)].size())) {
            int r = give[static_cast<size_t>(p)][static_cast<size_t>(next[static_cast<size_t>(p)]++)];
            int my_rank = take_rank[static_cast<size_t>(r)][static_cast<size_t>(p)];
            if (my_rank == 0) continue; // r does not list p
            int current = fiance[static_cast<size_t>(r)];
            if (current == -1) {
                fiance[static_cast<size_t>(r)] = p;
                break;
            }
            if (my_rank < take_rank[static_cast<size_t>(r)][static_cast<size_t>(current)]) {
                fiance[static_cast<size_t>(r)] = p;
                stack.push_back(current);
                break;
            }
        }
    }
    return fiance;
}

} // namespace

Matching gs_propose(const PreferenceTable& t, Side proposer) {
    validate_instance(t);
    RankMatrix ranks(t);
    Matching m;
    if (proposer == Side::A) {
        std::vector<int> fiance = propose(t.prefs_a, ranks.b_ranks);
        for (int b = 0; b < t.size_b(); ++b)
            if (fiance[static_cast<size_t>(b)] != -1) m.insert(fiance[static_cast<size_t>(b)], b);
    } else {
        std::vector<int> fiance = propose(t.prefs_b, ranks.a_ranks);
        for (int a = 0; a < t.size_a(); ++a)
            if (fiance[static_cast<size_t>(a)] != -1) m.insert(a, fiance[static_cast<size_t>(a)]);
    }
    return m;
}

namespace {

struct EgsOutcome {
    std::vector<int> fiance;                  // responder -> proposer, -1 free
    std::vector<std::vector<char>> deleted;   // [proposer][responder]
};

// Deferred acceptance where an engagement deletes every strictly worse
// proposer from the responder's list (and the responder from theirs). A
// proposal to a responder that never listed the proposer is a deletion too.
EgsOutcome extended_propose(const std::vector<std::vector<int>>& give,
                            const std::vector<std::vector<int>>& take,
                            const std::vector<std::vector<int>>& take_rank) {
    const int np = static_cast<int>(give.size());
    const int nr = static_cast<int>(take.size());
    EgsOutcome out;
    out.fiance.assign(static_cast<size_t>(nr), -1);
    out.deleted.assign(static_cast<size_t>(np),
                       std::vector<char>(static_cast<size_t>(nr), 0));
    std::vector<int> next(static_cast<size_t>(np), 0);
    std::vector<int> stack;
    for (int p = np - 1; p >= 0; --p) stack.push_back(p);

    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        bool engaged = false;
        while (next[static_cast<size_t>(p)] < static_cast<int>(give[static_cast<size_t>(p)].size())) {
            int r = give[static_cast<size_t>(p)][static_cast<size_t>(next[static_cast<size_t>(p)])];
            if (out.deleted[static_cast<size_t>(p)][static_cast<size_t>(r)]) {
                ++next[static_cast<size_t>(p)];
                continue;
            }
            if (take_rank[static_cast<size_t>(r)][static_cast<size_t>(p)] == 0) {
                out.deleted[static_cast<size_t>(p)][static_cast<size_t>(r)] = 1;
                ++next[static_cast<size_t>(p)];
                continue;
            }
            int prior = out.fiance[static_cast<size_t>(r)];
            if (prior != -1) stack.push_back(prior);
            out.fiance[static_cast<size_t>(r)] = p;
            int rank_p = take_rank[static_cast<size_t>(r)][static_cast<size_t>(p)];
            for (size_t pos = static_cast<size_t>(rank_p); pos < take[static_cast<size_t>(r)].size(); ++pos) {
                int worse = take[static_cast<size_t>(r)][pos];
                out.deleted[static_cast<size_t>(worse)][static_cast<size_t>(r)] = 1;
            }
            engaged = true;
            break;
        }
        (void)engaged; // a proposer with an exhausted list simply stays free
    }
    return out;
}

std::vector<std::vector<int>> strip_deleted(const std::vector<std::vector<int>>& lists,
                                            const std::vector<std::vector<char>>& deleted,
                                            bool row_is_proposer) {
    std::vector<std::vector<int>> reduced(lists.size());
    for (size_t i = 0; i < lists.size(); ++i)
        for (int v : lists[i]) {
            bool gone = row_is_proposer ? deleted[i][static_cast<size_t>(v)]
                                        : deleted[static_cast<size_t>(v)][i];
            if (!gone) reduced[i].push_back(v);
        }
    return reduced;
}

} // namespace

ExtendedGsResult extended_gs(const PreferenceTable& t, Side proposer) {
    validate_instance(t);
    RankMatrix ranks(t);
    ExtendedGsResult result;
    result.reduced = t;

    if (proposer == Side::A) {
        EgsOutcome out = extended_propose(t.prefs_a, t.prefs_b, ranks.b_ranks);
        for (int b = 0; b < t.size_b(); ++b)
            if (out.fiance[static_cast<size_t>(b)] != -1)
                result.matching.insert(out.fiance[static_cast<size_t>(b)], b);
        result.reduced.prefs_a = strip_deleted(t.prefs_a, out.deleted, true);
        result.reduced.prefs_b = strip_deleted(t.prefs_b, out.deleted, false);
    } else {
        EgsOutcome out = extended_propose(t.prefs_b, t.prefs_a, ranks.a_ranks);
        for (int a = 0; a < t.size_a(); ++a)
            if (out.fiance[static_cast<size_t>(a)] != -1)
                result.matching.insert(a, out.fiance[static_cast<size_t>(a)]);
        // deletion flags are [B agent][A agent] here
        result.reduced.prefs_b = strip_deleted(t.prefs_b, out.deleted, true);
        result.reduced.prefs_a = strip_deleted(t.prefs_a, out.deleted, false);
    }
    return result;
}

std::vector<BlockingPair> blocking_pairs(const PreferenceTable& t, const Matching& m) {
    RankMatrix ranks(t);
    std::vector<int> partner_a(static_cast<size_t>(t.size_a()), -1);
    std::vector<int> partner_b(static_cast<size_t>(t.size_b()), -1);
    for (const auto& [a, b] : m.pairs) {
        if (a < 0 || a >= t.size_a() || b < 0 || b >= t.size_b())
            fail(Errc::index_out_of_range, "matching references agents outside the instance");
        partner_a[static_cast<size_t>(a)] = b;
        partner_b[static_cast<size_t>(b)] = a;
    }

    // Rank of the current partner, with "worse than anything listed" for
    // unmatched agents and for partners outside the agent's list.
    constexpr int kNoPartner = 1 << 30;
    auto held_a = [&](int a) {
        int p = partner_a[static_cast<size_t>(a)];
        if (p == -1) return kNoPartner;
        int r = ranks.rank_a(a, p);
        return r == 0 ? kNoPartner : r;
    };
    auto held_b = [&](int b) {
        int p = partner_b[static_cast<size_t>(b)];
        if (p == -1) return kNoPartner;
        int r = ranks.rank_b(b, p);
        return r == 0 ? kNoPartner : r;
    };

    std::vector<BlockingPair> blocks;
    for (int a = 0; a < t.size_a(); ++a) {
        int held = held_a(a);
        for (int b : t.prefs_a[static_cast<size_t>(a)]) {
            if (partner_a[static_cast<size_t>(a)] == b) continue;
            if (ranks.rank_a(a, b) >= held) continue;
            int rb = ranks.rank_b(b, a);
            if (rb == 0 || rb >= held_b(b)) continue;
            blocks.push_back({a, b});
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const BlockingPair& x, const BlockingPair& y) {
                  return std::pair{x.a, x.b} < std::pair{y.a, y.b};
              });
    return blocks;
}

std::string format_matching(const PreferenceTable& t, const Matching& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : m.pairs) {
        if (!first) out += ",";
        first = false;
        out += "(" + t.labels_a[static_cast<size_t>(a)] + "," +
               t.labels_b[static_cast<size_t>(b)] + ")";
    }
    out += "}";
    return out;
}

} // namespace clonematch
