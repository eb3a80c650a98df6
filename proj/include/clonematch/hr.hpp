#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clonematch/error.hpp"

namespace clonematch {

// Residents seeking places at hospitals with fixed capacities. Acceptability
// must be mutual: r appears on h's list exactly when h appears on r's list
// (enforced by validate_instance).
struct HrInstance {
    std::vector<std::string> resident_labels;
    std::vector<std::string> hospital_labels;
    std::vector<int> capacity;                    // per hospital, >= 1
    std::vector<std::vector<int>> resident_prefs; // acceptable hospitals, best first
    std::vector<std::vector<int>> hospital_prefs; // acceptable residents, best first

    int residents() const { return static_cast<int>(resident_prefs.size()); }
    int hospitals() const { return static_cast<int>(hospital_prefs.size()); }

    // Default labels r1../h1..
    static HrInstance from_prefs(std::vector<int> caps,
                                 std::vector<std::vector<int>> rprefs,
                                 std::vector<std::vector<int>> hprefs);
};

struct HrMatching {
    std::vector<std::pair<int, int>> assignments; // (resident, hospital), sorted

    void insert(int r, int h);
    bool contains(int r, int h) const;
    std::optional<int> hospital_of(int r) const;
    std::vector<int> assigned_to(int h) const;
    int size() const { return static_cast<int>(assignments.size()); }

    bool operator==(const HrMatching& o) const { return assignments == o.assignments; }
};

const HrInstance& validate_instance(const HrInstance& inst);

// Hospital-proposing deferred acceptance with pair deletion. Hospitals end
// with their best achievable sets, residents with their worst.
HrMatching hospital_oriented_match(const HrInstance& inst);

// Pairs (r, h) not in m where r is unmatched or prefers h to its assignment,
// and h has a free place or prefers r to one of its assigned residents.
// Sorted by (r, h).
std::vector<std::pair<int, int>> hr_blocking_pairs(const HrInstance& inst,
                                                   const HrMatching& m);

std::string format_hr_matching(const HrInstance& inst, const HrMatching& m);

} // namespace clonematch
