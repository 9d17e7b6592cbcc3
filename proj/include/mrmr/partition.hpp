#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mrmr/column_store.hpp"
#include "mrmr/info_metrics.hpp"
#include "mrmr/types.hpp"

namespace mrmr {

// Read-only replica of one column, distributed to every partition for a pass.
struct BroadcastColumn {
    std::vector<Code> column;
    FeatureId source_fid = kDecisionColumn;  // kDecisionColumn marks the decision column
    double entropy_bits = 0.0;               // memoized, never recomputed here
};

// Wraps a copy of the requested column plus its entropy from the table.
// Selected features keep their values, so any past winner can be broadcast.
BroadcastColumn broadcast(const ColumnStore& store, FeatureId source, const EntropyTable& table);

// Worker count: explicit request, else MRMR_WORKERS, else hardware threads.
std::size_t resolve_workers(std::size_t requested);

// Applies `work` exactly once to every active feature. Partitions run in
// parallel; within a partition features are visited in fid order, and each
// feature's state is touched only by the worker owning its partition, so the
// outcome is identical to a sequential pass. If `work` throws, the pass fails
// and the error raised at the smallest fid is rethrown.
void map_partitions(ColumnStore& store, const std::function<void(FeatureVector&)>& work,
                    std::size_t workers = 0);
void map_partitions(ColumnStore& store, const BroadcastColumn& bc,
                    const std::function<void(FeatureVector&, const BroadcastColumn&)>& work,
                    std::size_t workers = 0);

struct Candidate {
    FeatureId fid = 0;
    double score = 0.0;
};

// Associative, commutative combiner: higher score wins, near-ties (within
// kScoreTieEps) go to the smaller fid.
Candidate combine_candidates(const Candidate& a, const Candidate& b);

Candidate reduce_argmax(std::span<const Candidate> candidates);
Candidate reduce_argmax(const ColumnStore& store);  // over active features' scores

// Removes the feature from future passes and reduces; its values remain
// available for broadcasting. Throws if already inactive.
void deactivate(ColumnStore& store, FeatureId fid);

}  // namespace mrmr
