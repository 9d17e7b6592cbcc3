#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mrmr/info_metrics.hpp"
#include "mrmr/reference.hpp"
#include "testutil.hpp"

using namespace mrmr;

namespace {
const std::vector<Code> kConstant{7, 7, 7, 7};
const std::vector<Code> kUniformBinary{0, 0, 1, 1};
const std::vector<Code> kSkewed{0, 0, 1, 2};            // p = {1/2, 1/4, 1/4}
const std::vector<Code> kAlternating{0, 1, 0, 1};
}  // namespace

TEST_CASE("entropy of hand-checked columns") {
    CHECK(entropy(kConstant) == 0.0);
    CHECK(entropy(kUniformBinary) == doctest::Approx(1.0).epsilon(1e-15));
    // direct evaluation: 0.5*1 + 2 * 0.25*2 = 1.5 bits
    CHECK(entropy(kSkewed) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("entropy rejects empty columns") {
    CHECK_THROWS_AS(entropy(std::vector<Code>{}), std::invalid_argument);
}

TEST_CASE("entropy bounds: 0 <= H <= log2(distinct), tight at the extremes") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const std::size_t domain = 1 + rng() % 12;
        const auto column = testutil::random_column(rng, n, domain);
        const double h = entropy(column);
        const std::size_t distinct = value_counts(column).size();
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(static_cast<double>(distinct)) + 1e-12);
        if (distinct == 1) CHECK(h == 0.0);
    }
    // uniform column hits the upper bound
    std::vector<Code> uniform;
    for (Code v = 0; v < 8; ++v) uniform.insert(uniform.end(), 5, v);
    CHECK(entropy(uniform) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("pair_counts stores only occurring pairs") {
    const std::vector<Code> a{0, 0, 1};
    const std::vector<Code> b{1, 1, 0};
    const PairCounts pc = pair_counts(a, b);
    CHECK(pc.total == 3);
    CHECK(pc.distinct_pairs() == 2);
    CHECK(pc.frequency(0, 1) == 2);
    CHECK(pc.frequency(1, 0) == 1);
    CHECK(pc.frequency(0, 0) == 0);
    CHECK(pc.frequency(1, 1) == 0);
}

TEST_CASE("pair_counts of identical columns is diagonal") {
    const std::vector<Code> a{0, 1};
    const PairCounts pc = pair_counts(a, a);
    CHECK(pc.distinct_pairs() == 2);
    CHECK(pc.frequency(0, 0) == 1);
    CHECK(pc.frequency(1, 1) == 1);
    CHECK(pc.frequency(0, 1) == 0);
}

TEST_CASE("pair_counts sparsity bound: entries <= n even for huge domains") {
    std::mt19937_64 rng(7);
    const auto a = testutil::random_column(rng, 10, 100);
    const auto b = testutil::random_column(rng, 10, 100);
    const PairCounts pc = pair_counts(a, b);
    CHECK(pc.distinct_pairs() <= 10);
    CHECK(pc.total == 10);
}

TEST_CASE("pair_counts input validation") {
    CHECK_THROWS_AS(pair_counts(std::vector<Code>{0, 1}, std::vector<Code>{0}), std::invalid_argument);
    CHECK_THROWS_AS(pair_counts(std::vector<Code>{}, std::vector<Code>{}), std::invalid_argument);
}

TEST_CASE("pair_counts frequencies sum to the object count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 300;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 8);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 8);
        const PairCounts pc = pair_counts(a, b);
        std::size_t sum = 0;
        for (const auto& [key, count] : pc.counts) {
            CHECK(count >= 1);
            sum += count;
        }
        CHECK(sum == n);
    }
}

TEST_CASE("merge_pair_counts identity and pointwise sum") {
    const PairCounts empty;
    const PairCounts x = pair_counts(std::vector<Code>{0, 1}, std::vector<Code>{1, 1});
    const PairCounts merged_with_empty = merge_pair_counts(x, empty);
    CHECK(merged_with_empty.counts == x.counts);
    CHECK(merged_with_empty.total == x.total);

    PairCounts p, q;
    p.counts = {{PairCounts::pack(0, 0), 1}};
    p.total = 1;
    q.counts = {{PairCounts::pack(0, 0), 2}};
    q.total = 2;
    const PairCounts m = merge_pair_counts(p, q);
    CHECK(m.frequency(0, 0) == 3);
    CHECK(m.total == 3);
}

TEST_CASE("merging chunked counts equals whole-column counting") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 200;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 6);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 6);
        const PairCounts whole = pair_counts(a, b);

        // split at 1..3 random points and merge the chunk counts back
        std::vector<std::size_t> cuts{0, n};
        for (int c = 0; c < 3; ++c) cuts.push_back(rng() % n);
        std::sort(cuts.begin(), cuts.end());
        PairCounts merged;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i] == cuts[i + 1]) continue;
            const auto chunk_a = std::span<const Code>(a).subspan(cuts[i], cuts[i + 1] - cuts[i]);
            const auto chunk_b = std::span<const Code>(b).subspan(cuts[i], cuts[i + 1] - cuts[i]);
            merged = merge_pair_counts(merged, pair_counts(chunk_a, chunk_b));
        }
        CHECK(merged.counts == whole.counts);
        CHECK(merged.total == whole.total);
    }
}

TEST_CASE("merge is commutative and associative") {
    std::mt19937_64 rng(17);
    const auto a1 = testutil::random_column(rng, 40, 4);
    const auto b1 = testutil::random_column(rng, 40, 4);
    const auto a2 = testutil::random_column(rng, 25, 4);
    const auto b2 = testutil::random_column(rng, 25, 4);
    const auto a3 = testutil::random_column(rng, 33, 4);
    const auto b3 = testutil::random_column(rng, 33, 4);
    const PairCounts x = pair_counts(a1, b1), y = pair_counts(a2, b2), z = pair_counts(a3, b3);

    CHECK(merge_pair_counts(x, y).counts == merge_pair_counts(y, x).counts);
    CHECK(merge_pair_counts(merge_pair_counts(x, y), z).counts ==
          merge_pair_counts(x, merge_pair_counts(y, z)).counts);
}

TEST_CASE("joint entropy of hand-checked tables") {
    CHECK(joint_entropy(pair_counts(kConstant, kConstant)) == 0.0);
    // four equiprobable pairs
    CHECK(joint_entropy(pair_counts(kUniformBinary, kAlternating)) == doctest::Approx(2.0).epsilon(1e-15));
    // diagonal distribution equals the column's own entropy
    CHECK(joint_entropy(pair_counts(kSkewed, kSkewed)) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS(joint_entropy(PairCounts{}), std::invalid_argument);
}

TEST_CASE("conditional entropy of hand-checked tables") {
    // A constant: nothing left to predict
    CHECK(conditional_entropy(pair_counts(kConstant, kAlternating), value_counts(kAlternating)) == 0.0);
    // A == B: perfectly determined
    CHECK(conditional_entropy(pair_counts(kSkewed, kSkewed), value_counts(kSkewed)) == 0.0);
    // chain rule: H(A,B) - H(B) = 2.0 - 1.0
    CHECK(conditional_entropy(pair_counts(kUniformBinary, kAlternating), value_counts(kAlternating)) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("conditional entropy rejects inconsistent marginals") {
    const PairCounts pc = pair_counts(kUniformBinary, kAlternating);
    auto marginal = value_counts(kAlternating);
    marginal[0] += 1;
    CHECK_THROWS_AS(conditional_entropy(pc, marginal), std::invalid_argument);
    marginal[0] -= 2;  // totals rebalanced, per-value counts wrong
    marginal[1] += 1;
    CHECK_THROWS_AS(conditional_entropy(pc, marginal), std::invalid_argument);
}

TEST_CASE("chain rule holds on random columns") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 250;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 9);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 9);
        const PairCounts pc = pair_counts(a, b);
        const double joint = joint_entropy(pc);
        const double chained = entropy(b) + conditional_entropy(pc, value_counts(b));
        CHECK(std::abs(joint - chained) < 1e-10);
    }
}

TEST_CASE("mutual information via the entropy decomposition") {
    // identical columns: MI = H
    CHECK(mutual_information(entropy(kSkewed), entropy(kSkewed),
                             joint_entropy(pair_counts(kSkewed, kSkewed))) ==
          doctest::Approx(1.5).epsilon(1e-15));
    // independent uniform binary pair: 1 + 1 - 2 = 0 exactly
    CHECK(mutual_information(entropy(kUniformBinary), entropy(kAlternating),
                             joint_entropy(pair_counts(kUniformBinary, kAlternating))) == 0.0);
    // brute-force via the double sum: 1.5 + 1.0 - 1.5 = 1.0
    const std::vector<Code> b{0, 0, 1, 1};
    const double via_decomposition =
        mutual_information(entropy(kSkewed), entropy(b), joint_entropy(pair_counts(kSkewed, b)));
    CHECK(via_decomposition == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(via_decomposition == doctest::Approx(reference_mi(kSkewed, b)).epsilon(1e-12));
}

TEST_CASE("mutual information clamps sub-epsilon negatives to zero") {
    CHECK(mutual_information(0.5, 0.5, 1.0 + 5e-13) == 0.0);
    CHECK(mutual_information(0.5, 0.5, 1.0 - 5e-13) > 0.0);
    // a genuinely negative input is passed through, not hidden
    CHECK(mutual_information(0.5, 0.5, 1.5) < 0.0);
}

TEST_CASE("MI symmetry under pair transposition") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 8);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 8);
        const double ab = mutual_information(entropy(a), entropy(b), joint_entropy(pair_counts(a, b)));
        const double ba = mutual_information(entropy(b), entropy(a), joint_entropy(pair_counts(b, a)));
        CHECK(std::abs(ab - ba) < 1e-12);
        CHECK(ab >= 0.0);
    }
}

TEST_CASE("decomposition MI agrees with the direct double sum") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 300;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 8);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 8);
        const double decomposed =
            mutual_information(entropy(a), entropy(b), joint_entropy(pair_counts(a, b)));
        CHECK(std::abs(decomposed - reference_mi(a, b)) < 1e-10);
    }
}

TEST_CASE("EntropyTable lookup") {
    EntropyTable table;
    table.entries[3] = 1.25;
    CHECK(table.at(3) == 1.25);
    CHECK_THROWS_AS(table.at(4), std::invalid_argument);
}
