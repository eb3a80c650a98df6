#include "clonematch/instance_io.hpp"

#include <map>

#include "json.hpp"

namespace clonematch {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::map<std::string, int> index_labels(const std::vector<std::string>& labels,
                                        const char* what) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            fail(Errc::bad_instance_file, std::string(what) + " with empty label");
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            fail(Errc::duplicate_label,
                 std::string(what) + " label \"" + labels[i] + "\" appears twice");
    }
    return index;
}

std::vector<int> resolve_prefs(const json& prefs, const std::map<std::string, int>& index,
                               const std::string& owner) {
    if (!prefs.is_array())
        fail(Errc::bad_instance_file, "prefs of \"" + owner + "\" must be an array");
    std::vector<int> out;
    for (const auto& p : prefs) {
        if (!p.is_string())
            fail(Errc::bad_instance_file, "prefs of \"" + owner + "\" must hold labels");
        auto hit = index.find(p.get<std::string>());
        if (hit == index.end())
            fail(Errc::unknown_label, "\"" + owner + "\" ranks unknown label \"" +
                                          p.get<std::string>() + "\"");
        out.push_back(hit->second);
    }
    return out;
}

void read_agents(const json& arr, const char* what, std::vector<std::string>& labels) {
    if (!arr.is_array() || arr.empty())
        fail(Errc::bad_instance_file, std::string(what) + " must be a non-empty array");
    for (const auto& agent : arr) {
        if (!agent.is_object() || !agent.contains("label") || !agent["label"].is_string())
            fail(Errc::bad_instance_file, std::string(what) + " entries need a label");
        labels.push_back(agent["label"].get<std::string>());
    }
}

MatchingInstance parse_sm(const json& j) {
    MatchingInstance inst;
    inst.kind = MatchingInstance::Kind::sm;
    PreferenceTable& t = inst.sm;
    read_agents(j["sideA"], "sideA", t.labels_a);
    read_agents(j["sideB"], "sideB", t.labels_b);
    auto index_a = index_labels(t.labels_a, "sideA");
    auto index_b = index_labels(t.labels_b, "sideB");
    for (size_t i = 0; i < t.labels_a.size(); ++i)
        t.prefs_a.push_back(resolve_prefs(j["sideA"][i].value("prefs", json::array()),
                                          index_b, t.labels_a[i]));
    for (size_t i = 0; i < t.labels_b.size(); ++i)
        t.prefs_b.push_back(resolve_prefs(j["sideB"][i].value("prefs", json::array()),
                                          index_a, t.labels_b[i]));
    validate_instance(t);
    return inst;
}

MatchingInstance parse_hr(const json& j) {
    MatchingInstance inst;
    inst.kind = MatchingInstance::Kind::hr;
    HrInstance& h = inst.hr;
    read_agents(j["residents"], "residents", h.resident_labels);
    read_agents(j["hospitals"], "hospitals", h.hospital_labels);
    auto index_r = index_labels(h.resident_labels, "resident");
    auto index_h = index_labels(h.hospital_labels, "hospital");
    for (size_t i = 0; i < h.resident_labels.size(); ++i)
        h.resident_prefs.push_back(resolve_prefs(j["residents"][i].value("prefs", json::array()),
                                                 index_h, h.resident_labels[i]));
    for (size_t i = 0; i < h.hospital_labels.size(); ++i) {
        const auto& agent = j["hospitals"][i];
        if (!agent.contains("capacity") || !agent["capacity"].is_number_integer())
            fail(Errc::bad_instance_file,
                 "hospital \"" + h.hospital_labels[i] + "\" needs an integer capacity");
        h.capacity.push_back(agent["capacity"].get<int>());
        h.hospital_prefs.push_back(resolve_prefs(agent.value("prefs", json::array()),
                                                 index_r, h.hospital_labels[i]));
    }
    validate_instance(h);
    return inst;
}

} // namespace

MatchingInstance parse_instance(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded())
        fail(Errc::bad_instance_file, "instance file is not valid JSON");
    if (!j.is_object())
        fail(Errc::bad_instance_file, "instance file must hold a JSON object");
    if (j.contains("sideA") && j.contains("sideB")) return parse_sm(j);
    if (j.contains("residents") && j.contains("hospitals")) return parse_hr(j);
    fail(Errc::bad_instance_file,
         "expected sideA/sideB (marriage) or residents/hospitals keys");
}

std::string sm_instance_to_json(const PreferenceTable& t) {
    ordered j;
    auto side = [&](const std::vector<std::string>& own,
                    const std::vector<std::string>& opp,
                    const std::vector<std::vector<int>>& prefs) {
        ordered arr = ordered::array();
        for (size_t i = 0; i < own.size(); ++i) {
            ordered agent;
            agent["label"] = own[i];
            ordered names = ordered::array();
            for (int v : prefs[i]) names.push_back(opp[static_cast<size_t>(v)]);
            agent["prefs"] = names;
            arr.push_back(agent);
        }
        return arr;
    };
    j["sideA"] = side(t.labels_a, t.labels_b, t.prefs_a);
    j["sideB"] = side(t.labels_b, t.labels_a, t.prefs_b);
    return j.dump(2) + "\n";
}

std::string hr_instance_to_json(const HrInstance& inst) {
    ordered j;
    ordered residents = ordered::array();
    for (size_t i = 0; i < inst.resident_labels.size(); ++i) {
        ordered agent;
        agent["label"] = inst.resident_labels[i];
        ordered names = ordered::array();
        for (int v : inst.resident_prefs[i]) names.push_back(inst.hospital_labels[static_cast<size_t>(v)]);
        agent["prefs"] = names;
        residents.push_back(agent);
    }
    ordered hospitals = ordered::array();
    for (size_t i = 0; i < inst.hospital_labels.size(); ++i) {
        ordered agent;
        agent["label"] = inst.hospital_labels[i];
        agent["capacity"] = inst.capacity[i];
        ordered names = ordered::array();
        for (int v : inst.hospital_prefs[i]) names.push_back(inst.resident_labels[static_cast<size_t>(v)]);
        agent["prefs"] = names;
        hospitals.push_back(agent);
    }
    j["residents"] = residents;
    j["hospitals"] = hospitals;
    return j.dump(2) + "\n";
}

} // namespace clonematch
