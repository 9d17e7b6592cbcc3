#include "mrmr/info_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mrmr/stats.hpp"

namespace mrmr {

std::uint32_t PairCounts::frequency(Code a, Code b) const {
    const std::uint64_t key = pack(a, b);
    auto it = std::lower_bound(counts.begin(), counts.end(), key,
                               [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    if (it == counts.end() || it->first != key) return 0;
    return it->second;
}

double entropy(std::span<const Code> column) {
    if (column.empty()) throw std::invalid_argument("entropy: empty column");
    work_counters().entropy_evals.fetch_add(1, std::memory_order_relaxed);

    std::vector<Code> sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    double h = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double p = static_cast<double>(j - i) / n;
        h -= p * std::log2(p);
        i = j;
    }
    return h < 0.0 ? 0.0 : h;  // -0.0 from a constant column
}

std::unordered_map<Code, std::size_t> value_counts(std::span<const Code> column) {
    std::unordered_map<Code, std::size_t> counts;
    counts.reserve(std::min<std::size_t>(column.size(), 1024));
    for (Code v : column) ++counts[v];
    return counts;
}

PairCounts pair_counts(std::span<const Code> a, std::span<const Code> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("pair_counts: column length mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    if (a.empty()) throw std::invalid_argument("pair_counts: empty columns");
    work_counters().pair_count_builds.fetch_add(1, std::memory_order_relaxed);

    std::vector<std::uint64_t> keys(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) keys[i] = PairCounts::pack(a[i], b[i]);
    std::sort(keys.begin(), keys.end());

    PairCounts pc;
    pc.total = a.size();
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        pc.counts.emplace_back(keys[i], static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return pc;
}

PairCounts merge_pair_counts(const PairCounts& p, const PairCounts& q) {
    PairCounts out;
    out.total = p.total + q.total;
    out.counts.reserve(p.counts.size() + q.counts.size());

    auto pi = p.counts.begin();
    auto qi = q.counts.begin();
    while (pi != p.counts.end() && qi != q.counts.end()) {
        if (pi->first < qi->first) {
            out.counts.push_back(*pi++);
        } else if (qi->first < pi->first) {
            out.counts.push_back(*qi++);
        } else {
            out.counts.emplace_back(pi->first, pi->second + qi->second);
            ++pi;
            ++qi;
        }
    }
    out.counts.insert(out.counts.end(), pi, p.counts.end());
    out.counts.insert(out.counts.end(), qi, q.counts.end());
    return out;
}

double joint_entropy(const PairCounts& pc) {
    if (pc.total == 0) throw std::invalid_argument("joint_entropy: empty pair counts");
    const double n = static_cast<double>(pc.total);
    double h = 0.0;
    for (const auto& [key, count] : pc.counts) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;
}

double conditional_entropy(const PairCounts& pc,
                           const std::unordered_map<Code, std::size_t>& cond_marginal) {
    if (pc.total == 0) throw std::invalid_argument("conditional_entropy: empty pair counts");

    // The marginal must be exactly the histogram of the conditioning column:
    // per-value sums over the pairs must match, and the grand totals agree.
    std::unordered_map<Code, std::size_t> from_pairs;
    for (const auto& [key, count] : pc.counts) from_pairs[PairCounts::unpack(key).second] += count;
    std::size_t marginal_total = 0;
    for (const auto& [value, count] : cond_marginal) marginal_total += count;
    if (marginal_total != pc.total || from_pairs.size() != cond_marginal.size())
        throw std::invalid_argument("conditional_entropy: marginal inconsistent with pair counts");
    for (const auto& [value, count] : from_pairs) {
        auto it = cond_marginal.find(value);
        if (it == cond_marginal.end() || it->second != count)
            throw std::invalid_argument("conditional_entropy: marginal inconsistent with pair counts");
    }

    const double n = static_cast<double>(pc.total);
    double h = 0.0;
    for (const auto& [key, count] : pc.counts) {
        const double p_ab = static_cast<double>(count) / n;
        const double p_b = static_cast<double>(cond_marginal.at(PairCounts::unpack(key).second)) / n;
        h -= p_ab * std::log2(p_ab / p_b);
    }
    return h < 0.0 ? 0.0 : h;
}

double mutual_information(double h_a, double h_b, double h_joint) {
    const double mi = h_a + h_b - h_joint;
    if (mi < 0.0 && mi >= -kMiClampEps) return 0.0;
    return mi;
}

double EntropyTable::at(FeatureId fid) const {
    auto it = entries.find(fid);
    if (it == entries.end())
        throw std::invalid_argument("EntropyTable: no entry for feature " + std::to_string(fid));
    return it->second;
}

}  // namespace mrmr
