#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrmr/dataset.hpp"
#include "mrmr/types.hpp"

namespace mrmr {

// Per-feature selection state, carried alongside the feature vector. Fields
// stay unset until the pass that defines them has run; redundancy_sum
// accumulates one mutual-information term per applied winner.
struct ScoreState {
    std::optional<double> relevance;  // MI(f, decision); fixed after the first pass
    double redundancy_sum = 0.0;      // sum of MI(f, winner) over broadcast winners
    std::optional<double> score;      // relevance - redundancy_sum / selections
};

struct FeatureVector {
    FeatureId fid = 0;
    std::vector<Code> values;  // immutable after transposition
    ScoreState state;
};

// Contiguous fid ranges, sizes as equal as possible (difference <= 1).
struct PartitionPlan {
    std::vector<std::uint32_t> assignment;                        // fid -> partition index
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;  // [begin, end) fids
    std::size_t partition_count = 0;
};

PartitionPlan make_balanced_plan(std::size_t n_features, std::size_t partition_count);

// Feature-major store. Every feature's whole column lives in exactly one
// partition; the decision column sits outside the plan and is shared
// read-only. Deactivated features keep their values so they can still be
// broadcast after selection.
struct ColumnStore {
    std::vector<FeatureVector> features;  // indexed by fid
    std::vector<Code> decision;
    PartitionPlan plan;
    std::vector<std::uint8_t> active;  // parallel to features
    std::size_t n_objects = 0;

    std::size_t n_features() const { return features.size(); }
    bool is_active(FeatureId fid) const { return active[fid] != 0; }
    std::size_t active_count() const;
    std::size_t selected_count() const { return n_features() - active_count(); }
};

// Feature j of the result is column j of the dataset; score states start in
// the empty-selection state. Throws when partition_count is not in
// [1, n_features].
ColumnStore transpose(const Dataset& d, std::size_t partition_count);

// Columnar text format: one `fid,v1,...,vN` line per feature, then a final
// `dt,v1,...,vN` line for the decision column.
void write_columnar(std::ostream& out, const ColumnStore& store);
Dataset read_columnar(std::istream& in);
Dataset read_columnar_file(const std::string& path);

}  // namespace mrmr
