#include "mrmr/stats.hpp"

namespace mrmr {

WorkCounters& work_counters() {
    static WorkCounters counters;
    return counters;
}

}  // namespace mrmr
