#include "clonematch/hr.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace clonematch {

HrInstance HrInstance::from_prefs(std::vector<int> caps,
                                  std::vector<std::vector<int>> rprefs,
                                  std::vector<std::vector<int>> hprefs) {
    HrInstance inst;
    inst.capacity = std::move(caps);
    inst.resident_prefs = std::move(rprefs);
    inst.hospital_prefs = std::move(hprefs);
    for (size_t i = 0; i < inst.resident_prefs.size(); ++i)
        inst.resident_labels.push_back("r" + std::to_string(i + 1));
    for (size_t i = 0; i < inst.hospital_prefs.size(); ++i)
        inst.hospital_labels.push_back("h" + std::to_string(i + 1));
    return inst;
}

void HrMatching::insert(int r, int h) {
    auto pos = std::lower_bound(assignments.begin(), assignments.end(), std::pair{r, -1});
    if (pos != assignments.end() && pos->first == r)
        throw std::logic_error("resident assigned twice: r" + std::to_string(r));
    assignments.insert(pos, {r, h});
}

bool HrMatching::contains(int r, int h) const {
    auto hh = hospital_of(r);
    return hh && *hh == h;
}

std::optional<int> HrMatching::hospital_of(int r) const {
    auto pos = std::lower_bound(assignments.begin(), assignments.end(), std::pair{r, -1});
    if (pos != assignments.end() && pos->first == r) return pos->second;
    return std::nullopt;
}

std::vector<int> HrMatching::assigned_to(int h) const {
    std::vector<int> out;
    for (const auto& [r, hh] : assignments)
        if (hh == h) out.push_back(r);
    return out;
}

namespace {

void check_lists(const std::vector<std::vector<int>>& prefs, int opposite_size,
                 const std::vector<std::string>& labels, const char* kind) {
    for (size_t i = 0; i < prefs.size(); ++i) {
        std::set<int> seen;
        for (int v : prefs[i]) {
            if (v < 0 || v >= opposite_size)
                fail(Errc::index_out_of_range, std::string(kind) + " " + labels[i] +
                                                   " names index " + std::to_string(v));
            if (!seen.insert(v).second)
                fail(Errc::duplicate_entry, std::string(kind) + " " + labels[i] +
                                                " repeats index " + std::to_string(v));
        }
    }
}

} // namespace

const HrInstance& validate_instance(const HrInstance& inst) {
    if (inst.resident_labels.size() != inst.resident_prefs.size() ||
        inst.hospital_labels.size() != inst.hospital_prefs.size() ||
        inst.capacity.size() != inst.hospital_prefs.size())
        fail(Errc::ragged_lists, "instance field sizes disagree");
    for (size_t h = 0; h < inst.capacity.size(); ++h)
        if (inst.capacity[h] < 1)
            fail(Errc::bad_capacity, "hospital " + inst.hospital_labels[h] +
                                         " has capacity " + std::to_string(inst.capacity[h]));
    check_lists(inst.resident_prefs, inst.hospitals(), inst.resident_labels, "resident");
    check_lists(inst.hospital_prefs, inst.residents(), inst.hospital_labels, "hospital");

    for (int r = 0; r < inst.residents(); ++r)
        for (int h : inst.resident_prefs[static_cast<size_t>(r)]) {
            const auto& hl = inst.hospital_prefs[static_cast<size_t>(h)];
            if (std::find(hl.begin(), hl.end(), r) == hl.end())
                fail(Errc::asymmetric_acceptability,
                     "resident " + inst.resident_labels[static_cast<size_t>(r)] + " lists " +
                         inst.hospital_labels[static_cast<size_t>(h)] + " but not vice versa");
        }
    for (int h = 0; h < inst.hospitals(); ++h)
        for (int r : inst.hospital_prefs[static_cast<size_t>(h)]) {
            const auto& rl = inst.resident_prefs[static_cast<size_t>(r)];
            if (std::find(rl.begin(), rl.end(), h) == rl.end())
                fail(Errc::asymmetric_acceptability,
                     "hospital " + inst.hospital_labels[static_cast<size_t>(h)] + " lists " +
                         inst.resident_labels[static_cast<size_t>(r)] + " but not vice versa");
        }
    return inst;
}

HrMatching hospital_oriented_match(const HrInstance& inst) {
    validate_instance(inst);
    const int nr = inst.residents();
    const int nh = inst.hospitals();

    // Working copies; deletions strike pairs from both sides.
    std::vector<std::vector<int>> rlist = inst.resident_prefs;
    std::vector<std::vector<int>> hlist = inst.hospital_prefs;
    std::vector<int> assigned_hospital(static_cast<size_t>(nr), -1);
    std::vector<int> load(static_cast<size_t>(nh), 0);

    auto erase_value = [](std::vector<int>& v, int value) {
        v.erase(std::remove(v.begin(), v.end(), value), v.end());
    };

    while (true) {
        int hospital = -1, resident = -1;
        for (int h = 0; h < nh && hospital == -1; ++h) {
            if (load[static_cast<size_t>(h)] >= inst.capacity[static_cast<size_t>(h)]) continue;
            for (int r : hlist[static_cast<size_t>(h)])
                if (assigned_hospital[static_cast<size_t>(r)] != h) {
                    hospital = h;
                    resident = r;
                    break;
                }
        }
        if (hospital == -1) break;

        int prior = assigned_hospital[static_cast<size_t>(resident)];
        if (prior != -1) --load[static_cast<size_t>(prior)];
        assigned_hospital[static_cast<size_t>(resident)] = hospital;
        ++load[static_cast<size_t>(hospital)];

        // Strike every hospital the resident likes less than its new place.
        auto& rl = rlist[static_cast<size_t>(resident)];
        auto pos = std::find(rl.begin(), rl.end(), hospital);
        for (auto it = pos + 1; it != rl.end(); ++it)
            erase_value(hlist[static_cast<size_t>(*it)], resident);
        rl.erase(pos + 1, rl.end());
    }

    HrMatching m;
    for (int r = 0; r < nr; ++r)
        if (assigned_hospital[static_cast<size_t>(r)] != -1)
            m.insert(r, assigned_hospital[static_cast<size_t>(r)]);
    return m;
}

std::vector<std::pair<int, int>> hr_blocking_pairs(const HrInstance& inst,
                                                   const HrMatching& m) {
    const int nr = inst.residents();
    const int nh = inst.hospitals();
    std::vector<std::vector<int>> rrank(static_cast<size_t>(nr),
                                        std::vector<int>(static_cast<size_t>(nh), 0));
    std::vector<std::vector<int>> hrank(static_cast<size_t>(nh),
                                        std::vector<int>(static_cast<size_t>(nr), 0));
    for (int r = 0; r < nr; ++r)
        for (size_t i = 0; i < inst.resident_prefs[static_cast<size_t>(r)].size(); ++i)
            rrank[static_cast<size_t>(r)]
                 [static_cast<size_t>(inst.resident_prefs[static_cast<size_t>(r)][i])] =
                     static_cast<int>(i) + 1;
    for (int h = 0; h < nh; ++h)
        for (size_t i = 0; i < inst.hospital_prefs[static_cast<size_t>(h)].size(); ++i)
            hrank[static_cast<size_t>(h)]
                 [static_cast<size_t>(inst.hospital_prefs[static_cast<size_t>(h)][i])] =
                     static_cast<int>(i) + 1;

    std::vector<int> assigned(static_cast<size_t>(nr), -1);
    std::vector<std::vector<int>> members(static_cast<size_t>(nh));
    for (const auto& [r, h] : m.assignments) {
        if (r < 0 || r >= nr || h < 0 || h >= nh)
            fail(Errc::index_out_of_range, "matching references agents outside the instance");
        assigned[static_cast<size_t>(r)] = h;
        members[static_cast<size_t>(h)].push_back(r);
    }

    std::vector<std::pair<int, int>> blocks;
    for (int r = 0; r < nr; ++r) {
        int cur = assigned[static_cast<size_t>(r)];
        int cur_rank = cur == -1 ? 1 << 30 : rrank[static_cast<size_t>(r)][static_cast<size_t>(cur)];
        if (cur != -1 && cur_rank == 0) cur_rank = 1 << 30;
        for (int h : inst.resident_prefs[static_cast<size_t>(r)]) {
            if (cur == h) continue;
            if (rrank[static_cast<size_t>(r)][static_cast<size_t>(h)] >= cur_rank) continue;
            int my_rank = hrank[static_cast<size_t>(h)][static_cast<size_t>(r)];
            if (my_rank == 0) continue;
            bool room = static_cast<int>(members[static_cast<size_t>(h)].size()) <
                        inst.capacity[static_cast<size_t>(h)];
            bool outranks = false;
            for (int other : members[static_cast<size_t>(h)]) {
                int other_rank = hrank[static_cast<size_t>(h)][static_cast<size_t>(other)];
                if (other_rank == 0) other_rank = 1 << 30;
                if (my_rank < other_rank) {
                    outranks = true;
                    break;
                }
            }
            if (room || outranks) blocks.push_back({r, h});
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::string format_hr_matching(const HrInstance& inst, const HrMatching& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [r, h] : m.assignments) {
        if (!first) out += ",";
        first = false;
        out += "(" + inst.resident_labels[static_cast<size_t>(r)] + "," +
               inst.hospital_labels[static_cast<size_t>(h)] + ")";
    }
    out += "}";
    return out;
}

} // namespace clonematch
