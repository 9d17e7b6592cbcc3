#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "mrmr/column_store.hpp"
#include "mrmr/info_metrics.hpp"
#include "mrmr/partition.hpp"
#include "mrmr/types.hpp"

namespace mrmr {

struct IterationRecord {
    std::size_t index = 0;                       // 1-based
    FeatureId broadcast_source = kDecisionColumn;  // kDecisionColumn on the first iteration
    FeatureId winner = 0;
    double score = 0.0;
    double wall_seconds = 0.0;
};

struct SelectionResult {
    std::vector<SelectedFeature> selected;  // in selection order
    std::vector<IterationRecord> iterations;
    std::size_t requested = 0;

    std::vector<FeatureId> selected_fids() const;
};

struct SelectorOptions {
    std::size_t workers = 0;  // 0: resolve from MRMR_WORKERS / hardware
    // Called after each iteration's reduce + deactivate; used by tests to
    // snapshot full transcripts.
    std::function<void(const IterationRecord&, const ColumnStore&)> on_iteration;
};

// One map pass computing H(f) for every feature, plus H(decision); each
// entropy is evaluated exactly once per run.
EntropyTable precompute_entropies(ColumnStore& store, std::size_t workers = 0);

// First iteration: relevance = MI(f, decision) via the entropy decomposition
// with sparse pair counts against the broadcast decision column; the score
// equals the relevance while nothing is selected. Throws if any feature has
// already been selected.
void relevance_pass(ColumnStore& store, const EntropyTable& table, std::size_t workers = 0);

// Later iterations: each active feature adds MI(f, last winner) to its
// redundancy sum — the only new term the selected set gained — and rescores
// as relevance - redundancy_sum / selections. `selections` counts the already
// selected features and must be >= 1.
void redundancy_pass(ColumnStore& store, const EntropyTable& table, const BroadcastColumn& last_selected,
                     std::size_t selections, std::size_t workers = 0);

// Full forward selection: entropy precompute, one relevance pass, then
// redundancy passes broadcasting the previous winner, each iteration ending
// with an argmax reduce and deactivation of the winner.
SelectionResult select_features(ColumnStore& store, std::size_t count, const SelectorOptions& options = {});

// Line-oriented report; `score_scale` rescales scores for a different log
// base. Timing fields sit last on each line so diffs can mask them.
void write_selection_report(std::ostream& out, const SelectionResult& result, const ColumnStore& store,
                            double score_scale = 1.0);

}  // namespace mrmr
