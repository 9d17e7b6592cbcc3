#include "mrmr/partition.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace mrmr {

BroadcastColumn broadcast(const ColumnStore& store, FeatureId source, const EntropyTable& table) {
    BroadcastColumn bc;
    bc.source_fid = source;
    if (source == kDecisionColumn) {
        bc.column = store.decision;
        bc.entropy_bits = table.decision_entropy;
    } else {
        if (source >= store.n_features())
            throw std::invalid_argument("broadcast: unknown feature id " + std::to_string(source));
        bc.column = store.features[source].values;
        bc.entropy_bits = table.at(source);
    }
    return bc;
}

std::size_t resolve_workers(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MRMR_WORKERS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

struct PassError {
    FeatureId fid = kDecisionColumn;
    std::exception_ptr error;
};

// Runs one partition to its first error; later partitions' errors lose to
// earlier fids, so the surfaced error is deterministic.
void run_partition(ColumnStore& store, std::size_t partition,
                   const std::function<void(FeatureVector&)>& work, PassError& slot) {
    const auto [begin, end] = store.plan.ranges[partition];
    for (std::uint32_t fid = begin; fid < end; ++fid) {
        if (!store.is_active(fid)) continue;
        try {
            work(store.features[fid]);
        } catch (...) {
            slot.fid = fid;
            slot.error = std::current_exception();
            return;
        }
    }
}

}  // namespace

void map_partitions(ColumnStore& store, const std::function<void(FeatureVector&)>& work,
                    std::size_t workers) {
    const std::size_t n_partitions = store.plan.partition_count;
    if (n_partitions == 0) throw std::invalid_argument("map_partitions: store has no partition plan");

    std::vector<PassError> errors(n_partitions);
    const std::size_t pool = std::min(resolve_workers(workers), n_partitions);

    if (pool <= 1) {
        for (std::size_t p = 0; p < n_partitions; ++p) run_partition(store, p, work, errors[p]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> threads;
        threads.reserve(pool);
        for (std::size_t w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t p = next.fetch_add(1); p < n_partitions; p = next.fetch_add(1))
                    run_partition(store, p, work, errors[p]);
            });
        }
    }

    const PassError* first = nullptr;
    for (const PassError& e : errors)
        if (e.error && (!first || e.fid < first->fid)) first = &e;
    if (first) std::rethrow_exception(first->error);
}

void map_partitions(ColumnStore& store, const BroadcastColumn& bc,
                    const std::function<void(FeatureVector&, const BroadcastColumn&)>& work,
                    std::size_t workers) {
    if (bc.column.size() != store.n_objects)
        throw std::invalid_argument("map_partitions: broadcast column length " +
                                    std::to_string(bc.column.size()) + " does not match object count " +
                                    std::to_string(store.n_objects));
    map_partitions(
        store, [&](FeatureVector& fv) { work(fv, bc); }, workers);
}

Candidate combine_candidates(const Candidate& a, const Candidate& b) {
    return score_beats(b.score, b.fid, a.score, a.fid) ? b : a;
}

Candidate reduce_argmax(std::span<const Candidate> candidates) {
    if (candidates.empty()) throw std::invalid_argument("reduce_argmax: no active features");
    Candidate best = candidates.front();
    if (!std::isfinite(best.score))
        throw std::invalid_argument("reduce_argmax: non-finite score for feature " + std::to_string(best.fid));
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (!std::isfinite(candidates[i].score))
            throw std::invalid_argument("reduce_argmax: non-finite score for feature " +
                                        std::to_string(candidates[i].fid));
        best = combine_candidates(best, candidates[i]);
    }
    return best;
}

Candidate reduce_argmax(const ColumnStore& store) {
    std::vector<Candidate> candidates;
    candidates.reserve(store.n_features());
    for (const FeatureVector& fv : store.features) {
        if (!store.is_active(fv.fid)) continue;
        if (!fv.state.score)
            throw std::invalid_argument("reduce_argmax: score unset for active feature " +
                                        std::to_string(fv.fid));
        candidates.push_back({fv.fid, *fv.state.score});
    }
    return reduce_argmax(candidates);
}

void deactivate(ColumnStore& store, FeatureId fid) {
    if (fid >= store.n_features())
        throw std::invalid_argument("deactivate: unknown feature id " + std::to_string(fid));
    if (!store.is_active(fid))
        throw std::invalid_argument("deactivate: feature " + std::to_string(fid) + " already inactive");
    store.active[fid] = 0;
}

}  // namespace mrmr
