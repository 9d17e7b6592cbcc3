#pragma once

#include <span>
#include <vector>

#include "mrmr/dataset.hpp"
#include "mrmr/types.hpp"

namespace mrmr {

// Brute-force ground truth for the engine. Dense probability tables, direct
// double-sum mutual information, and naive forward selection that recomputes
// every score each iteration. Deliberately shares no computation path with
// the engine's sparse entropy decomposition; only the argmax tie rule
// (score_beats) is common, so both selectors rank identically under ties.

struct MIMatrix {
    std::size_t n = 0;
    std::vector<double> values;     // n x n, symmetric; diagonal = H(f_i)
    std::vector<double> relevance;  // MI(f_i, decision)

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct ReferenceLimits {
    std::size_t max_cells = 10'000'000;  // refuse larger inputs; this path is O(n^2) on purpose
};

// MI in bits by iterating the full value-pair cross product; zero-count pairs
// contribute nothing.
double reference_mi(std::span<const Code> a, std::span<const Code> b);

MIMatrix reference_mi_matrix(const Dataset& d, const ReferenceLimits& limits = {});

// Mean relevance over the subset minus mean pairwise MI over the subset
// (ordered pairs, diagonal included).
double reference_set_score(const Dataset& d, std::span<const FeatureId> subset,
                           const ReferenceLimits& limits = {});

// Forward selection: iteration 1 maximizes MI(f, decision); iteration i+1
// maximizes MI(f, decision) - (1/i) * sum of MI(f, k) over selected k. No
// caching: every MI is recomputed from the raw columns each iteration.
std::vector<SelectedFeature> reference_mrmr(const Dataset& d, std::size_t count,
                                            const ReferenceLimits& limits = {});

}  // namespace mrmr
