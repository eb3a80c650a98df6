#pragma once

#include <string>
#include <vector>

#include "clonematch/dma.hpp"
#include "clonematch/metrics.hpp"
#include "clonematch/preference.hpp"

namespace clonematch {

enum class MatchAlgorithm { dma, gs_a, gs_b };

const char* algorithm_name(MatchAlgorithm a);

struct DetectorConfig {
    WeightVector weights;
    double love_threshold = 0.5;
    double similarity_threshold = 0.9;
    LanguageProfile profile = LanguageProfile::java();
    MatchAlgorithm algorithm = MatchAlgorithm::dma;
};

struct SourceFile {
    std::string path;
    std::string contents;
};

struct FragmentRecord {
    MethodFragment fragment;
    MetricVector metrics;
};

struct ClonePair {
    std::string frag_a;
    std::string frag_b;
    double distance = 0;
    double similarity = 0;
    double love = 0;
    double contrast = 0;
};

struct CloneClass {
    std::vector<std::string> members; // sorted ascending
};

struct Diagnostic {
    std::string file;
    std::string message;
};

struct CloneReport {
    std::string tool_version;
    DetectorConfig config;
    std::vector<FragmentRecord> side_a;
    std::vector<FragmentRecord> side_b;
    std::vector<ClonePair> pairs;     // similarity desc, love desc, frag_a, frag_b
    std::vector<CloneClass> classes;  // ordered by smallest member id
    std::vector<Diagnostic> diagnostics;
};

extern const char* const kToolVersion;

// 1 - distance / dMax where dMax = sqrt(sum of weights) is the largest
// distance two normalized vectors can reach; clamped to [0,1].
double similarity(double distance, const WeightVector& w);

// Connected components over the fragments that occur in at least one pair;
// a component is never a singleton. Classes ordered by smallest member.
std::vector<CloneClass> clone_classes(const std::vector<ClonePair>& pairs);

// Extraction, call graph and metrics over one corpus. Files are processed in
// path order; a file whose braces do not balance is skipped and recorded in
// `diagnostics`. Fragment ids are made unique across the corpus.
std::vector<FragmentRecord> measure_corpus(const std::vector<SourceFile>& files,
                                           const LanguageProfile& profile,
                                           std::vector<Diagnostic>& diagnostics);

// Full pipeline from source text: extraction, per-side call graphs, metrics,
// union normalization, preference lists, matching, scoring, thresholds,
// classes. Files that fail extraction are skipped with a diagnostic. A pair
// of identical fragment ids (self comparison runs) is never reported.
CloneReport detect(const std::vector<SourceFile>& side_a,
                   const std::vector<SourceFile>& side_b,
                   const DetectorConfig& cfg);

// Same pipeline entered after metric computation; used when the vectors come
// from somewhere other than the extractor.
CloneReport detect_measured(std::vector<FragmentRecord> side_a,
                            std::vector<FragmentRecord> side_b,
                            const DetectorConfig& cfg,
                            std::vector<Diagnostic> diagnostics = {});

} // namespace clonematch
