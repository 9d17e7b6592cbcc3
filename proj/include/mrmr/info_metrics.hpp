#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mrmr/types.hpp"

namespace mrmr {

// Sparse co-occurrence histogram of two equal-length code columns. Only value
// pairs that actually occur are stored; entries are kept sorted by packed key,
// which makes lookups O(log n), merges linear, and every entropy sum follow a
// canonical order independent of partitioning.
struct PairCounts {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> counts;
    std::size_t total = 0;

    static std::uint64_t pack(Code a, Code b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    static std::pair<Code, Code> unpack(std::uint64_t key) {
        return {static_cast<Code>(static_cast<std::uint32_t>(key >> 32)),
                static_cast<Code>(static_cast<std::uint32_t>(key))};
    }

    std::size_t distinct_pairs() const { return counts.size(); }
    std::uint32_t frequency(Code a, Code b) const;  // 0 when the pair is absent
};

// Shannon entropy in bits over the observed values; throws on an empty column.
double entropy(std::span<const Code> column);

std::unordered_map<Code, std::size_t> value_counts(std::span<const Code> column);

// Counts co-occurring value pairs (a[i], b[i]); pairs that never occur are not
// stored. Throws on length mismatch or empty input.
PairCounts pair_counts(std::span<const Code> a, std::span<const Code> b);

// Pointwise sum; associative and commutative, identity = default PairCounts.
PairCounts merge_pair_counts(const PairCounts& p, const PairCounts& q);

double joint_entropy(const PairCounts& pc);  // bits; throws when total == 0

// H(A|B) where B is the second pair coordinate; cond_marginal must be the
// value histogram of the conditioning column (verified, throws if not).
double conditional_entropy(const PairCounts& pc,
                           const std::unordered_map<Code, std::size_t>& cond_marginal);

// MI through the entropy decomposition H(A) + H(B) - H(A,B); rounding noise
// within kMiClampEps below zero is clamped to exactly 0.
inline constexpr double kMiClampEps = 1e-12;
double mutual_information(double h_a, double h_b, double h_joint);

// Per-feature entropies, computed once per run and read-only afterwards.
struct EntropyTable {
    std::unordered_map<FeatureId, double> entries;
    double decision_entropy = 0.0;

    double at(FeatureId fid) const;  // throws on unknown fid
};

}  // namespace mrmr
