#pragma once

#include <string>

#include "clonematch/hr.hpp"
#include "clonematch/matching.hpp"

namespace clonematch {

// Matching instances arrive as JSON. Marriage instances:
//   {"sideA": [{"label": "m1", "prefs": ["w2","w1"]}, ...], "sideB": [...]}
// Hospitals/residents instances:
//   {"residents": [{"label": "r1", "prefs": ["h1"]}, ...],
//    "hospitals": [{"label": "h1", "capacity": 2, "prefs": ["r1","r2"]}, ...]}
// Preferences reference labels; unknown or duplicate labels are errors.

struct MatchingInstance {
    enum class Kind { sm, hr };
    Kind kind = Kind::sm;
    PreferenceTable sm;
    HrInstance hr;
};

MatchingInstance parse_instance(const std::string& json_text);

std::string sm_instance_to_json(const PreferenceTable& t);
std::string hr_instance_to_json(const HrInstance& inst);

} // namespace clonematch
