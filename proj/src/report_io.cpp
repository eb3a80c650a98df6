#include "clonematch/report_io.hpp"

#include <cstdio>
#include <map>

#include "json.hpp"

namespace clonematch {

namespace {

using ordered = nlohmann::ordered_json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

ordered fragment_json(const FragmentRecord& r) {
    ordered j;
    j["id"] = r.fragment.id;
    j["file"] = r.fragment.file;
    j["name"] = r.fragment.name;
    j["startLine"] = r.fragment.start_line;
    j["loc"] = r.metrics.loc;
    j["nbp"] = r.metrics.nbp;
    j["nbv"] = r.metrics.nbv;
    j["mca"] = r.metrics.mca;
    j["mce"] = r.metrics.mce;
    j["cc"] = r.metrics.cc;
    j["nbd"] = r.metrics.nbd;
    return j;
}

ordered config_json(const DetectorConfig& cfg) {
    ordered weights;
    for (int d = 0; d < kMetricDims; ++d)
        weights[kMetricNames[static_cast<size_t>(d)]] = cfg.weights[d];
    ordered j;
    j["weights"] = weights;
    j["loveThreshold"] = cfg.love_threshold;
    j["similarityThreshold"] = cfg.similarity_threshold;
    j["profile"] = cfg.profile.name;
    j["algorithm"] = algorithm_name(cfg.algorithm);
    return j;
}

const FragmentRecord* find_record(const CloneReport& report, const std::string& id) {
    for (const auto& r : report.side_a)
        if (r.fragment.id == id) return &r;
    for (const auto& r : report.side_b)
        if (r.fragment.id == id) return &r;
    return nullptr;
}

} // namespace

std::string report_to_json(
    const CloneReport& report,
    const std::vector<std::pair<std::string, std::string>>& extra_config) {
    ordered j;
    j["toolVersion"] = report.tool_version;
    ordered cfg = config_json(report.config);
    for (const auto& [key, value] : extra_config) cfg[key] = value;
    j["config"] = cfg;

    ordered frags;
    ordered arr_a = ordered::array();
    for (const auto& r : report.side_a) arr_a.push_back(fragment_json(r));
    ordered arr_b = ordered::array();
    for (const auto& r : report.side_b) arr_b.push_back(fragment_json(r));
    frags["sideA"] = arr_a;
    frags["sideB"] = arr_b;
    j["fragments"] = frags;

    ordered pairs = ordered::array();
    for (const auto& p : report.pairs) {
        ordered pj;
        pj["fragA"] = p.frag_a;
        pj["fragB"] = p.frag_b;
        pj["distance"] = p.distance;
        pj["similarity"] = p.similarity;
        pj["love"] = p.love;
        pj["contrast"] = p.contrast;
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;

    ordered classes = ordered::array();
    for (const auto& c : report.classes) {
        ordered cj;
        cj["members"] = c.members;
        classes.push_back(cj);
    }
    j["classes"] = classes;

    ordered diags = ordered::array();
    for (const auto& d : report.diagnostics) {
        ordered dj;
        dj["file"] = d.file;
        dj["message"] = d.message;
        diags.push_back(dj);
    }
    j["diagnostics"] = diags;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const CloneReport& report) {
    std::string out = "fragA_file,fragA_name,fragB_file,fragB_name,distance,similarity,love,contrast\n";
    for (const auto& p : report.pairs) {
        const FragmentRecord* a = find_record(report, p.frag_a);
        const FragmentRecord* b = find_record(report, p.frag_b);
        out += (a ? a->fragment.file : "") + "," + (a ? a->fragment.name : "") + ",";
        out += (b ? b->fragment.file : "") + "," + (b ? b->fragment.name : "") + ",";
        out += fixed6(p.distance) + "," + fixed6(p.similarity) + "," + fixed6(p.love) + "," +
               fixed6(p.contrast) + "\n";
    }
    return out;
}

std::string report_to_text(const CloneReport& report) {
    std::string out = report.tool_version;
    out += ": " + std::to_string(report.side_a.size()) + " fragments on side A, " +
           std::to_string(report.side_b.size()) + " on side B\n";
    out += std::to_string(report.pairs.size()) + " clone pairs, " +
           std::to_string(report.classes.size()) + " clone classes\n";
    for (const auto& p : report.pairs)
        out += p.frag_a + " ~ " + p.frag_b + "  similarity=" + fixed6(p.similarity) +
               " love=" + fixed6(p.love) + " contrast=" + fixed6(p.contrast) +
               " distance=" + fixed6(p.distance) + "\n";
    int n = 0;
    for (const auto& c : report.classes) {
        out += "class " + std::to_string(++n) + ":";
        for (const auto& m : c.members) out += " " + m;
        out += "\n";
    }
    for (const auto& d : report.diagnostics)
        out += "skipped " + d.file + ": " + d.message + "\n";
    return out;
}

std::string metrics_to_json(const std::vector<FragmentRecord>& records) {
    ordered arr = ordered::array();
    for (const auto& r : records) {
        ordered j;
        j["file"] = r.fragment.file;
        j["name"] = r.fragment.name;
        j["startLine"] = r.fragment.start_line;
        j["loc"] = r.metrics.loc;
        j["nbp"] = r.metrics.nbp;
        j["nbv"] = r.metrics.nbv;
        j["mca"] = r.metrics.mca;
        j["mce"] = r.metrics.mce;
        j["cc"] = r.metrics.cc;
        j["nbd"] = r.metrics.nbd;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string metrics_to_csv(const std::vector<FragmentRecord>& records) {
    std::string out = "file,name,startLine,loc,nbp,nbv,mca,mce,cc,nbd\n";
    for (const auto& r : records) {
        out += r.fragment.file + "," + r.fragment.name + "," +
               std::to_string(r.fragment.start_line) + "," + std::to_string(r.metrics.loc) +
               "," + std::to_string(r.metrics.nbp) + "," + std::to_string(r.metrics.nbv) +
               "," + std::to_string(r.metrics.mca) + "," + std::to_string(r.metrics.mce) +
               "," + std::to_string(r.metrics.cc) + "," + std::to_string(r.metrics.nbd) + "\n";
    }
    return out;
}

std::string metrics_to_text(const std::vector<FragmentRecord>& records) {
    return metrics_to_csv(records);
}

} // namespace clonematch
