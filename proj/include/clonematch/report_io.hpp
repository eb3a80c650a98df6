#pragma once

#include <string>
#include <vector>

#include "clonematch/detect.hpp"

namespace clonematch {

// Serialized forms of a report. All of them are deterministic: the same
// report always produces the same bytes. `extra_config` entries are appended
// to the config block in the order given (the CLI echoes its remaining flags
// this way).
std::string report_to_json(
    const CloneReport& report,
    const std::vector<std::pair<std::string, std::string>>& extra_config = {});
std::string report_to_csv(const CloneReport& report);
std::string report_to_text(const CloneReport& report);

// Per-fragment metric records (file, name, startLine, loc, nbp, nbv, mca,
// mce, cc, nbd) as a JSON array or CSV with exactly that column order.
std::string metrics_to_json(const std::vector<FragmentRecord>& records);
std::string metrics_to_csv(const std::vector<FragmentRecord>& records);
std::string metrics_to_text(const std::vector<FragmentRecord>& records);

} // namespace clonematch
