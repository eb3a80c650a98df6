#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clonematch/error.hpp"

namespace clonematch {

enum class Side { A, B };

Side opposite(Side s);
const char* side_name(Side s);

struct AgentId {
    Side side;
    int index;
    std::string label;
};

// Two agent sets, each agent holding a strict ranking over (a subset of) the
// opposite set. Position encodes rank: prefs_a[i][0] is agent i's first
// choice. A "complete" table ranks the entire opposite side.
struct PreferenceTable {
    std::vector<std::string> labels_a;
    std::vector<std::string> labels_b;
    std::vector<std::vector<int>> prefs_a; // values are B indices
    std::vector<std::vector<int>> prefs_b; // values are A indices

    int size_a() const { return static_cast<int>(prefs_a.size()); }
    int size_b() const { return static_cast<int>(prefs_b.size()); }
    bool complete() const;
    AgentId agent(Side s, int index) const;

    // Default labels m1..mn / w1..wn.
    static PreferenceTable from_prefs(std::vector<std::vector<int>> a,
                                      std::vector<std::vector<int>> b);
};

// One-to-one partial matching between the sides. Pairs are kept sorted by
// A index; each agent appears at most once.
struct Matching {
    std::vector<std::pair<int, int>> pairs; // (A index, B index)

    void insert(int a, int b);
    bool contains(int a, int b) const;
    std::optional<int> partner_of_a(int a) const;
    std::optional<int> partner_of_b(int b) const;
    int size() const { return static_cast<int>(pairs.size()); }

    bool operator==(const Matching& other) const { return pairs == other.pairs; }
};

struct BlockingPair {
    int a;
    int b;
    bool operator==(const BlockingPair& o) const { return a == o.a && b == o.b; }
};

// O(1) rank lookups; ranks are 1-based, 0 means "not listed".
struct RankMatrix {
    explicit RankMatrix(const PreferenceTable& t);

    int rank_a(int a, int b) const { return a_ranks[a][b]; } // rank of B agent b in a's list
    int rank_b(int b, int a) const { return b_ranks[b][a]; } // rank of A agent a in b's list

    std::vector<std::vector<int>> a_ranks;
    std::vector<std::vector<int>> b_ranks;
};

// Checks structural invariants (matching label/list counts, indices in range,
// no duplicate entries, labels unique and non-empty) and returns the table
// unchanged. Throws Error with code ragged_lists, index_out_of_range,
// duplicate_entry or duplicate_label.
const PreferenceTable& validate_instance(const PreferenceTable& t);

// Classic deferred acceptance from the given side. Handles incomplete lists
// and unequal sides by leaving agents with exhausted lists unmatched.
Matching gs_propose(const PreferenceTable& t, Side proposer);

struct ExtendedGsResult {
    Matching matching;
    PreferenceTable reduced; // input lists minus every pair deleted during execution
};

// Deferred acceptance with explicit pair deletion: whenever an agent gets
// engaged, every strictly worse suitor is deleted from both sides' lists.
ExtendedGsResult extended_gs(const PreferenceTable& t, Side proposer);

// All pairs (a, b) not in m where both agents list each other and each
// prefers the other to their current situation. An unmatched agent, or one
// whose partner it does not list, prefers every listed candidate. Sorted by
// (a, b).
std::vector<BlockingPair> blocking_pairs(const PreferenceTable& t, const Matching& m);

// "{(m1,w2),(m2,w1)}" using the table's labels, pairs ordered by A index.
std::string format_matching(const PreferenceTable& t, const Matching& m);

} // namespace clonematch
