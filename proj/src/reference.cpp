#include "mrmr/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mrmr {

namespace {

void check_limits(const Dataset& d, const ReferenceLimits& limits) {
    if (d.n_objects * d.n_features > limits.max_cells)
        throw std::invalid_argument("reference path refuses " + std::to_string(d.n_objects) + "x" +
                                    std::to_string(d.n_features) + " dataset (cap " +
                                    std::to_string(limits.max_cells) + " cells)");
}

std::vector<std::vector<Code>> extract_columns(const Dataset& d) {
    std::vector<std::vector<Code>> columns;
    columns.reserve(d.n_features);
    for (std::size_t j = 0; j < d.n_features; ++j) columns.push_back(d.column(j));
    return columns;
}

}  // namespace

double reference_mi(std::span<const Code> a, std::span<const Code> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("reference_mi: columns must be non-empty and equally long");

    Code max_a = 0, max_b = 0;
    for (Code v : a) max_a = std::max(max_a, v);
    for (Code v : b) max_b = std::max(max_b, v);
    const std::size_t dom_a = static_cast<std::size_t>(max_a) + 1;
    const std::size_t dom_b = static_cast<std::size_t>(max_b) + 1;

    std::vector<std::size_t> joint(dom_a * dom_b, 0);
    std::vector<std::size_t> marg_a(dom_a, 0), marg_b(dom_b, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++joint[static_cast<std::size_t>(a[i]) * dom_b + static_cast<std::size_t>(b[i])];
        ++marg_a[a[i]];
        ++marg_b[b[i]];
    }

    const double n = static_cast<double>(a.size());
    double mi = 0.0;
    for (std::size_t x = 0; x < dom_a; ++x) {
        for (std::size_t y = 0; y < dom_b; ++y) {
            const std::size_t c = joint[x * dom_b + y];
            if (c == 0) continue;  // zero-count pairs contribute 0
            const double p_xy = static_cast<double>(c) / n;
            const double p_x = static_cast<double>(marg_a[x]) / n;
            const double p_y = static_cast<double>(marg_b[y]) / n;
            mi += p_xy * std::log2(p_xy / (p_x * p_y));
        }
    }
    return mi;
}

MIMatrix reference_mi_matrix(const Dataset& d, const ReferenceLimits& limits) {
    check_limits(d, limits);
    const auto columns = extract_columns(d);

    MIMatrix m;
    m.n = d.n_features;
    m.values.assign(m.n * m.n, 0.0);
    m.relevance.resize(m.n);
    for (std::size_t i = 0; i < m.n; ++i) {
        m.relevance[i] = reference_mi(columns[i], d.decision);
        for (std::size_t j = i; j < m.n; ++j) {
            const double mi = reference_mi(columns[i], columns[j]);
            m.values[i * m.n + j] = mi;
            m.values[j * m.n + i] = mi;
        }
    }
    return m;
}

double reference_set_score(const Dataset& d, std::span<const FeatureId> subset,
                           const ReferenceLimits& limits) {
    if (subset.empty()) throw std::invalid_argument("reference_set_score: empty subset");
    check_limits(d, limits);
    const auto columns = extract_columns(d);

    const double size = static_cast<double>(subset.size());
    double relevance = 0.0;
    for (FeatureId f : subset) relevance += reference_mi(columns[f], d.decision);
    relevance /= size;

    double redundancy = 0.0;
    for (FeatureId f : subset)
        for (FeatureId g : subset) redundancy += reference_mi(columns[f], columns[g]);
    redundancy /= size * size;

    return relevance - redundancy;
}

std::vector<SelectedFeature> reference_mrmr(const Dataset& d, std::size_t count,
                                            const ReferenceLimits& limits) {
    if (count < 1 || count > d.n_features)
        throw std::invalid_argument("selection count " + std::to_string(count) + " out of range [1, " +
                                    std::to_string(d.n_features) + "]");
    check_limits(d, limits);
    const auto columns = extract_columns(d);

    std::vector<SelectedFeature> selected;
    selected.reserve(count);
    std::vector<bool> taken(d.n_features, false);

    for (std::size_t iter = 0; iter < count; ++iter) {
        bool have_best = false;
        SelectedFeature best;
        for (FeatureId f = 0; f < d.n_features; ++f) {
            if (taken[f]) continue;
            double score = reference_mi(columns[f], d.decision);
            if (iter > 0) {
                double redundancy = 0.0;
                for (const SelectedFeature& k : selected) redundancy += reference_mi(columns[f], columns[k.fid]);
                score -= redundancy / static_cast<double>(iter);
            }
            if (!have_best || score_beats(score, f, best.score, best.fid)) {
                best = {f, score};
                have_best = true;
            }
        }
        taken[best.fid] = true;
        selected.push_back(best);
    }
    return selected;
}

}  // namespace mrmr
