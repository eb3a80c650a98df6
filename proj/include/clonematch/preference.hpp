#pragma once

#include <array>
#include <string>
#include <vector>

#include "clonematch/matching.hpp"
#include "clonematch/metrics.hpp"

namespace clonematch {

inline constexpr int kMetricDims = 7;

// Dimension order used everywhere metric vectors become plain arrays.
extern const std::array<const char*, kMetricDims> kMetricNames; // loc nbp nbv mca mce cc nbd

struct WeightVector {
    std::array<double, kMetricDims> values{1, 1, 1, 1, 1, 1, 1};

    double operator[](int d) const { return values[static_cast<size_t>(d)]; }
    double& operator[](int d) { return values[static_cast<size_t>(d)]; }
    double sum() const;

    bool operator==(const WeightVector& o) const = default;
};

// "loc=1,cc=2" style. Missing dimensions keep weight 1.0; unknown keys,
// malformed numbers and negative weights throw (usage / bad_weights).
WeightVector parse_weights(const std::string& spec);

// Weights must be non-negative with at least one positive entry.
void validate_weights(const WeightVector& w);

std::array<double, kMetricDims> to_array(const MetricVector& m);

struct NormalizationStats {
    std::array<double, kMetricDims> min{};
    std::array<double, kMetricDims> max{};
};

struct NormalizedCorpora {
    std::vector<std::array<double, kMetricDims>> a;
    std::vector<std::array<double, kMetricDims>> b;
    NormalizationStats stats;
};

// Min-max rescaling per dimension over the union of both sides; a dimension
// that is constant across the union maps to 0. Throws empty_corpus when both
// sides are empty.
NormalizedCorpora normalize(const std::vector<MetricVector>& a,
                            const std::vector<MetricVector>& b);

double metric_distance(const std::array<double, kMetricDims>& u,
                       const std::array<double, kMetricDims>& v,
                       const WeightVector& w);

struct FragmentMetrics {
    std::string id;
    std::array<double, kMetricDims> values{};
};

// Complete preference table over the two corpora: each fragment ranks the
// whole opposite side by ascending distance, ties broken by ascending id.
// Table labels are the fragment ids.
PreferenceTable build_preferences(const std::vector<FragmentMetrics>& a,
                                  const std::vector<FragmentMetrics>& b,
                                  const WeightVector& w);

} // namespace clonematch
