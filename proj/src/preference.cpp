#include "clonematch/preference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace clonematch {

const std::array<const char*, kMetricDims> kMetricNames = {
    "loc", "nbp", "nbv", "mca", "mce", "cc", "nbd",
};

double WeightVector::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

WeightVector parse_weights(const std::string& spec) {
    WeightVector w;
    if (spec.empty()) return w;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string item = spec.substr(pos, comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            fail(Errc::usage, "weight \"" + item + "\" is not key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        int dim = -1;
        for (int d = 0; d < kMetricDims; ++d)
            if (key == kMetricNames[static_cast<size_t>(d)]) dim = d;
        if (dim == -1)
            fail(Errc::usage, "unknown weight key \"" + key + "\"");
        try {
            size_t used = 0;
            double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            w[dim] = v;
        } catch (const std::exception&) {
            fail(Errc::usage, "weight value \"" + value + "\" is not a number");
        }
        pos = comma + 1;
    }
    validate_weights(w);
    return w;
}

void validate_weights(const WeightVector& w) {
    bool any_positive = false;
    for (int d = 0; d < kMetricDims; ++d) {
        if (!(w[d] >= 0.0))
            fail(Errc::bad_weights, std::string("weight ") + kMetricNames[static_cast<size_t>(d)] +
                                        " must be non-negative");
        if (w[d] > 0.0) any_positive = true;
    }
    if (!any_positive)
        fail(Errc::bad_weights, "at least one weight must be positive");
}

std::array<double, kMetricDims> to_array(const MetricVector& m) {
    return {static_cast<double>(m.loc), static_cast<double>(m.nbp),
            static_cast<double>(m.nbv), static_cast<double>(m.mca),
            static_cast<double>(m.mce), static_cast<double>(m.cc),
            static_cast<double>(m.nbd)};
}

NormalizedCorpora normalize(const std::vector<MetricVector>& a,
                            const std::vector<MetricVector>& b) {
    if (a.empty() && b.empty())
        fail(Errc::empty_corpus, "nothing to normalize");

    NormalizedCorpora out;
    bool first = true;
    auto absorb = [&](const MetricVector& m) {
        auto v = to_array(m);
        for (int d = 0; d < kMetricDims; ++d) {
            size_t dd = static_cast<size_t>(d);
            if (first || v[dd] < out.stats.min[dd]) out.stats.min[dd] = v[dd];
            if (first || v[dd] > out.stats.max[dd]) out.stats.max[dd] = v[dd];
        }
        first = false;
    };
    for (const auto& m : a) absorb(m);
    for (const auto& m : b) absorb(m);

    auto rescale = [&](const MetricVector& m) {
        auto v = to_array(m);
        for (int d = 0; d < kMetricDims; ++d) {
            size_t dd = static_cast<size_t>(d);
            double range = out.stats.max[dd] - out.stats.min[dd];
            v[dd] = range == 0.0 ? 0.0 : (v[dd] - out.stats.min[dd]) / range;
        }
        return v;
    };
    out.a.reserve(a.size());
    out.b.reserve(b.size());
    for (const auto& m : a) out.a.push_back(rescale(m));
    for (const auto& m : b) out.b.push_back(rescale(m));
    return out;
}

double metric_distance(const std::array<double, kMetricDims>& u,
                       const std::array<double, kMetricDims>& v,
                       const WeightVector& w) {
    double sum = 0;
    for (int d = 0; d < kMetricDims; ++d) {
        size_t dd = static_cast<size_t>(d);
        double diff = u[dd] - v[dd];
        sum += w[d] * diff * diff;
    }
    return std::sqrt(sum);
}

PreferenceTable build_preferences(const std::vector<FragmentMetrics>& a,
                                  const std::vector<FragmentMetrics>& b,
                                  const WeightVector& w) {
    validate_weights(w);
    if (a.empty() || b.empty())
        fail(Errc::empty_corpus, "both sides need at least one fragment");

    PreferenceTable t;
    for (const auto& f : a) t.labels_a.push_back(f.id);
    for (const auto& f : b) t.labels_b.push_back(f.id);

    auto rank_side = [&](const std::vector<FragmentMetrics>& own,
                         const std::vector<FragmentMetrics>& opp) {
        std::vector<std::vector<int>> prefs(own.size());
        std::vector<std::pair<double, int>> order(opp.size());
        for (size_t i = 0; i < own.size(); ++i) {
            for (size_t j = 0; j < opp.size(); ++j)
                order[j] = {metric_distance(own[i].values, opp[j].values, w),
                            static_cast<int>(j)};
            std::sort(order.begin(), order.end(),
                      [&](const std::pair<double, int>& x, const std::pair<double, int>& y) {
                          if (x.first != y.first) return x.first < y.first;
                          return opp[static_cast<size_t>(x.second)].id <
                                 opp[static_cast<size_t>(y.second)].id;
                      });
            prefs[i].reserve(order.size());
            for (const auto& [dist, j] : order) prefs[i].push_back(j);
        }
        return prefs;
    };
    t.prefs_a = rank_side(a, b);
    t.prefs_b = rank_side(b, a);
    validate_instance(t);
    return t;
}

} // namespace clonematch
