#pragma once

#include <cstdint>
#include <limits>

namespace mrmr {

using Code = std::int32_t;  // categorical value code; >= 0 in valid data
using FeatureId = std::uint32_t;

// Broadcast-source marker for the decision column (never a candidate).
inline constexpr FeatureId kDecisionColumn = std::numeric_limits<FeatureId>::max();

// Scores this close are treated as equal by every argmax in the project, so
// floating-point noise cannot reorder mathematically tied candidates. All
// selectors (engine, reference, contingency baseline) share this rule; ties
// resolve to the smaller feature id.
inline constexpr double kScoreTieEps = 1e-9;

inline bool score_beats(double challenger, FeatureId challenger_fid,
                        double incumbent, FeatureId incumbent_fid) {
    if (challenger > incumbent + kScoreTieEps) return true;
    if (incumbent > challenger + kScoreTieEps) return false;
    return challenger_fid < incumbent_fid;
}

struct SelectedFeature {
    FeatureId fid = 0;
    double score = 0.0;  // score at the moment of selection
};

}  // namespace mrmr
