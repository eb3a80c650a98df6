#include "clonematch/detect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace clonematch {

const char* const kToolVersion = "clonematch 0.1.0";

const char* algorithm_name(MatchAlgorithm a) {
    switch (a) {
    case MatchAlgorithm::dma: return "dma";
    case MatchAlgorithm::gs_a: return "gs-a";
    case MatchAlgorithm::gs_b: return "gs-b";
    }
    return "?";
}

double similarity(double distance, const WeightVector& w) {
    double d_max = std::sqrt(w.sum());
    double s = 1.0 - distance / d_max;
    return std::clamp(s, 0.0, 1.0);
}

std::vector<CloneClass> clone_classes(const std::vector<ClonePair>& pairs) {
    std::map<std::string, std::string> parent;
    auto find = [&](std::string x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto join = [&](const std::string& x, const std::string& y) {
        if (!parent.count(x)) parent[x] = x;
        if (!parent.count(y)) parent[y] = y;
        std::string rx = find(x), ry = find(y);
        if (rx != ry) parent[std::min(rx, ry)] = std::max(rx, ry);
    };
    for (const auto& p : pairs) join(p.frag_a, p.frag_b);

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [node, _] : parent) groups[find(node)].push_back(node);

    std::vector<CloneClass> classes;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        classes.push_back({std::move(members)});
    }
    std::sort(classes.begin(), classes.end(), [](const CloneClass& x, const CloneClass& y) {
        return x.members.front() < y.members.front();
    });
    return classes;
}

std::vector<FragmentRecord> measure_corpus(const std::vector<SourceFile>& files,
                                           const LanguageProfile& profile,
                                           std::vector<Diagnostic>& diagnostics) {
    std::vector<SourceFile> ordered = files;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const SourceFile& x, const SourceFile& y) { return x.path < y.path; });

    std::vector<MethodFragment> corpus;
    for (const auto& f : ordered) {
        try {
            auto frags = extract_methods(f.contents, profile, f.path);
            corpus.insert(corpus.end(), frags.begin(), frags.end());
        } catch (const Error& e) {
            if (e.code() != Errc::unbalanced_braces) throw;
            diagnostics.push_back({f.path, e.what()});
        }
    }

    std::set<std::string> ids;
    for (auto& frag : corpus) {
        int copy = 1;
        std::string id = frag.id;
        while (!ids.insert(id).second) id = frag.id + "#" + std::to_string(++copy);
        frag.id = id;
    }

    CallGraph graph = build_call_graph(corpus);
    std::vector<FragmentRecord> records;
    records.reserve(corpus.size());
    for (auto& frag : corpus) {
        MetricVector m = compute_metrics(frag, graph, profile);
        records.push_back({std::move(frag), m});
    }
    return records;
}

CloneReport detect(const std::vector<SourceFile>& side_a,
                   const std::vector<SourceFile>& side_b,
                   const DetectorConfig& cfg) {
    std::vector<Diagnostic> diagnostics;
    auto records_a = measure_corpus(side_a, cfg.profile, diagnostics);
    if (records_a.empty()) fail(Errc::no_methods_found, "no methods found on side A");
    auto records_b = measure_corpus(side_b, cfg.profile, diagnostics);
    if (records_b.empty()) fail(Errc::no_methods_found, "no methods found on side B");
    return detect_measured(std::move(records_a), std::move(records_b), cfg,
                           std::move(diagnostics));
}

CloneReport detect_measured(std::vector<FragmentRecord> side_a,
                            std::vector<FragmentRecord> side_b,
                            const DetectorConfig& cfg,
                            std::vector<Diagnostic> diagnostics) {
    validate_weights(cfg.weights);

    CloneReport report;
    report.tool_version = kToolVersion;
    report.config = cfg;
    report.diagnostics = std::move(diagnostics);
    report.side_a = std::move(side_a);
    report.side_b = std::move(side_b);

    std::vector<MetricVector> metrics_a, metrics_b;
    for (const auto& r : report.side_a) metrics_a.push_back(r.metrics);
    for (const auto& r : report.side_b) metrics_b.push_back(r.metrics);
    NormalizedCorpora norm = normalize(metrics_a, metrics_b);

    std::vector<FragmentMetrics> fm_a, fm_b;
    for (size_t i = 0; i < report.side_a.size(); ++i)
        fm_a.push_back({report.side_a[i].fragment.id, norm.a[i]});
    for (size_t i = 0; i < report.side_b.size(); ++i)
        fm_b.push_back({report.side_b[i].fragment.id, norm.b[i]});

    PreferenceTable table = build_preferences(fm_a, fm_b, cfg.weights);

    DualMatching dm;
    switch (cfg.algorithm) {
    case MatchAlgorithm::dma:
        dm = dual_multi_allocate(table);
        break;
    case MatchAlgorithm::gs_a:
        dm.m1 = gs_propose(table, Side::A);
        dm.m2 = dm.m1;
        break;
    case MatchAlgorithm::gs_b:
        dm.m1 = gs_propose(table, Side::B);
        dm.m2 = dm.m1;
        break;
    }

    for (const ScoredPair& sp : choosy_filter(table, dm, cfg.love_threshold)) {
        const auto& fa = report.side_a[static_cast<size_t>(sp.a)];
        const auto& fb = report.side_b[static_cast<size_t>(sp.b)];
        if (fa.fragment.id == fb.fragment.id) continue; // self comparison run
        double dist = metric_distance(norm.a[static_cast<size_t>(sp.a)],
                                      norm.b[static_cast<size_t>(sp.b)], cfg.weights);
        double sim = similarity(dist, cfg.weights);
        if (sim < cfg.similarity_threshold) continue;
        report.pairs.push_back({fa.fragment.id, fb.fragment.id, dist, sim, sp.love, sp.contrast});
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const ClonePair& x, const ClonePair& y) {
                  if (x.similarity != y.similarity) return x.similarity > y.similarity;
                  if (x.love != y.love) return x.love > y.love;
                  if (x.frag_a != y.frag_a) return x.frag_a < y.frag_a;
                  return x.frag_b < y.frag_b;
              });
    report.classes = clone_classes(report.pairs);
    return report;
}

} // namespace clonematch
