#include "mrmr/selector.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mrmr {

std::vector<FeatureId> SelectionResult::selected_fids() const {
    std::vector<FeatureId> fids;
    fids.reserve(selected.size());
    for (const SelectedFeature& s : selected) fids.push_back(s.fid);
    return fids;
}

EntropyTable precompute_entropies(ColumnStore& store, std::size_t workers) {
    std::vector<double> per_feature(store.n_features(), 0.0);
    map_partitions(
        store, [&per_feature](FeatureVector& fv) { per_feature[fv.fid] = entropy(fv.values); }, workers);

    EntropyTable table;
    table.entries.reserve(store.n_features());
    for (FeatureId fid = 0; fid < store.n_features(); ++fid) table.entries.emplace(fid, per_feature[fid]);
    table.decision_entropy = entropy(store.decision);
    return table;
}

void relevance_pass(ColumnStore& store, const EntropyTable& table, std::size_t workers) {
    if (store.selected_count() != 0)
        throw std::invalid_argument("relevance_pass: selection already started (" +
                                    std::to_string(store.selected_count()) + " features selected)");

    const BroadcastColumn decision = broadcast(store, kDecisionColumn, table);
    map_partitions(
        store, decision,
        [&table](FeatureVector& fv, const BroadcastColumn& bc) {
            const PairCounts pc = pair_counts(fv.values, bc.column);
            const double mi = mutual_information(table.at(fv.fid), bc.entropy_bits, joint_entropy(pc));
            fv.state.relevance = mi;
            fv.state.score = mi;  // no selected set yet, nothing to discount
        },
        workers);
}

void redundancy_pass(ColumnStore& store, const EntropyTable& table, const BroadcastColumn& last_selected,
                     std::size_t selections, std::size_t workers) {
    if (selections == 0)
        throw std::invalid_argument("redundancy_pass: requires at least one selected feature");

    map_partitions(
        store, last_selected,
        [&table, selections](FeatureVector& fv, const BroadcastColumn& bc) {
            if (!fv.state.relevance)
                throw std::invalid_argument("redundancy_pass: relevance unset for feature " +
                                            std::to_string(fv.fid));
            const PairCounts pc = pair_counts(fv.values, bc.column);
            fv.state.redundancy_sum +=
                mutual_information(table.at(fv.fid), bc.entropy_bits, joint_entropy(pc));
            fv.state.score = *fv.state.relevance - fv.state.redundancy_sum / static_cast<double>(selections);
        },
        workers);
}

SelectionResult select_features(ColumnStore& store, std::size_t count, const SelectorOptions& options) {
    if (count < 1 || count > store.n_features())
        throw std::invalid_argument("selection count " + std::to_string(count) + " out of range [1, " +
                                    std::to_string(store.n_features()) + "]");

    const EntropyTable table = precompute_entropies(store, options.workers);

    SelectionResult result;
    result.requested = count;
    result.selected.reserve(count);
    result.iterations.reserve(count);

    using clock = std::chrono::steady_clock;
    for (std::size_t iter = 0; iter < count; ++iter) {
        const auto start = clock::now();

        FeatureId source = kDecisionColumn;
        if (iter == 0) {
            relevance_pass(store, table, options.workers);
        } else {
            source = result.selected.back().fid;
            const BroadcastColumn bc = broadcast(store, source, table);
            redundancy_pass(store, table, bc, iter, options.workers);
        }

        const Candidate winner = reduce_argmax(store);
        deactivate(store, winner.fid);

        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        result.selected.push_back({winner.fid, winner.score});
        result.iterations.push_back({iter + 1, source, winner.fid, winner.score, seconds});
        if (options.on_iteration) options.on_iteration(result.iterations.back(), store);
    }
    return result;
}

namespace {

std::string fmt_double(double value, const char* format = "%.12g") {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

}  // namespace

void write_selection_report(std::ostream& out, const SelectionResult& result, const ColumnStore& store,
                            double score_scale) {
    out << "n_objects=" << store.n_objects << " n_features=" << store.n_features()
        << " L=" << result.requested << " partitions=" << store.plan.partition_count << '\n';
    for (const IterationRecord& rec : result.iterations) {
        out << "iteration index=" << rec.index << " broadcast=";
        if (rec.broadcast_source == kDecisionColumn)
            out << "dt";
        else
            out << rec.broadcast_source;
        out << " winner=" << rec.winner << " score=" << fmt_double(rec.score * score_scale)
            << " time_s=" << fmt_double(rec.wall_seconds, "%.6f") << '\n';
    }
    out << "selected ";
    for (std::size_t i = 0; i < result.selected.size(); ++i) {
        if (i) out << ',';
        out << result.selected[i].fid;
    }
    out << '\n';
}

}  // namespace mrmr
