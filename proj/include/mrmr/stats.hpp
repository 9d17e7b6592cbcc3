#pragma once

#include <atomic>
#include <cstdint>

namespace mrmr {

// Process-wide work counters. Tests reset them around a measured run to
// verify the memoization and work-bound contracts; the counted operations
// only pay one relaxed atomic increment each.
struct WorkCounters {
    std::atomic<std::uint64_t> entropy_evals{0};
    std::atomic<std::uint64_t> pair_count_builds{0};
    std::atomic<std::uint64_t> contingency_builds{0};

    void reset() {
        entropy_evals.store(0, std::memory_order_relaxed);
        pair_count_builds.store(0, std::memory_order_relaxed);
        contingency_builds.store(0, std::memory_order_relaxed);
    }
};

WorkCounters& work_counters();

}  // namespace mrmr
