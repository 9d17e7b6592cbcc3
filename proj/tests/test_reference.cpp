#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mrmr/info_metrics.hpp"
#include "mrmr/reference.hpp"
#include "testutil.hpp"

using namespace mrmr;

TEST_CASE("MI matrix diagonal equals each feature's entropy") {
    const Dataset d = testutil::random_dataset(41, 60, 8, 5);
    const MIMatrix m = reference_mi_matrix(d);
    for (std::size_t f = 0; f < d.n_features; ++f) {
        const double h = entropy(d.column(f));
        CHECK(std::abs(m.at(f, f) - h) < 1e-12);
    }
}

TEST_CASE("MI matrix is symmetric with non-negative entries") {
    const Dataset d = testutil::random_dataset(43, 50, 7, 4);
    const MIMatrix m = reference_mi_matrix(d);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            CHECK(m.at(i, j) == m.at(j, i));
            CHECK(m.at(i, j) >= -1e-12);
        }
}

TEST_CASE("independent uniform binary pair has zero MI") {
    const std::vector<Code> a{0, 0, 1, 1};
    const std::vector<Code> b{0, 1, 0, 1};
    CHECK(std::abs(reference_mi(a, b)) < 1e-12);
}

TEST_CASE("double-sum MI matches the engine decomposition on random pairs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 250;
        const auto a = testutil::random_column(rng, n, 1 + rng() % 8);
        const auto b = testutil::random_column(rng, n, 1 + rng() % 8);
        const double direct = reference_mi(a, b);
        const double decomposed =
            mutual_information(entropy(a), entropy(b), joint_entropy(pair_counts(a, b)));
        CHECK(std::abs(direct - decomposed) < 1e-10);
    }
}

TEST_CASE("set score of a singleton is MI(f,dt) minus H(f)") {
    const Dataset d = testutil::random_dataset(53, 80, 6, 4);
    const MIMatrix m = reference_mi_matrix(d);
    for (FeatureId f = 0; f < d.n_features; ++f) {
        const std::vector<FeatureId> subset{f};
        const double expected = m.relevance[f] - entropy(d.column(f));
        CHECK(std::abs(reference_set_score(d, subset) - expected) < 1e-10);
    }
}

TEST_CASE("set score of two copies of the decision column on four objects") {
    // relevance mean = H(dt) = 1; redundancy = (1/4) * 4 * 1 = 1; score = 0
    const Dataset d = testutil::dataset_from_columns({{0, 1, 0, 1}, {0, 1, 0, 1}}, {0, 1, 0, 1});
    const std::vector<FeatureId> subset{0, 1};
    CHECK(std::abs(reference_set_score(d, subset) - 0.0) < 1e-12);
}

TEST_CASE("set score is invariant under subset permutation") {
    const Dataset d = testutil::random_dataset(59, 40, 7, 3);
    const std::vector<FeatureId> subset{1, 4, 6};
    const std::vector<FeatureId> permuted{6, 1, 4};
    CHECK(reference_set_score(d, subset) == doctest::Approx(reference_set_score(d, permuted)).epsilon(1e-12));
    CHECK_THROWS_AS(reference_set_score(d, std::vector<FeatureId>{}), std::invalid_argument);
}

TEST_CASE("first pick maximizes relevance") {
    const Dataset d = testutil::random_dataset(61, 70, 9, 4);
    const MIMatrix m = reference_mi_matrix(d);
    const auto selected = reference_mrmr(d, 1);

    FeatureId best = 0;
    for (FeatureId f = 1; f < d.n_features; ++f)
        if (score_beats(m.relevance[f], f, m.relevance[best], best)) best = f;
    REQUIRE(selected.size() == 1);
    CHECK(selected[0].fid == best);
    CHECK(selected[0].score == doctest::Approx(m.relevance[best]).epsilon(1e-12));
}

TEST_CASE("duplicated features are deferred behind informative independent ones") {
    // f0 = f1 = f2 near-copies of dt; f3 weaker but non-redundant
    const std::vector<Code> near_dt{0, 0, 0, 1, 1, 1, 1, 1};
    const std::vector<Code> partial{0, 0, 1, 1, 1, 1, 1, 1};
    const Dataset d =
        testutil::dataset_from_columns({near_dt, near_dt, near_dt, partial}, {0, 0, 0, 0, 1, 1, 1, 1});
    const auto selected = reference_mrmr(d, 4);
    const std::vector<FeatureId> fids = [&] {
        std::vector<FeatureId> out;
        for (const auto& s : selected) out.push_back(s.fid);
        return out;
    }();
    CHECK(fids == std::vector<FeatureId>{0, 3, 1, 2});
}

TEST_CASE("selecting all features yields a permutation") {
    const Dataset d = testutil::random_dataset(67, 45, 6, 4);
    const auto selected = reference_mrmr(d, 6);
    std::vector<FeatureId> fids;
    for (const auto& s : selected) fids.push_back(s.fid);
    std::sort(fids.begin(), fids.end());
    CHECK(fids == std::vector<FeatureId>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("incremental argmax agrees with direct per-candidate evaluation") {
    // the two formulations differ per iteration only by candidate-independent
    // terms, so the chosen feature must match at every step
    const Dataset d = testutil::random_dataset(71, 90, 10, 5);
    const MIMatrix m = reference_mi_matrix(d);
    const auto selected = reference_mrmr(d, 10);

    std::vector<FeatureId> chosen;
    std::vector<bool> taken(d.n_features, false);
    for (std::size_t iter = 0; iter < 10; ++iter) {
        bool have_best = false;
        FeatureId best = 0;
        double best_score = 0.0;
        for (FeatureId f = 0; f < d.n_features; ++f) {
            if (taken[f]) continue;
            double score = m.relevance[f];
            if (iter > 0) {
                double red = 0.0;
                for (FeatureId k : chosen) red += m.at(f, k);
                score -= red / static_cast<double>(iter);
            }
            if (!have_best || score_beats(score, f, best_score, best)) {
                best = f;
                best_score = score;
                have_best = true;
            }
        }
        chosen.push_back(best);
        taken[best] = true;
        CHECK(selected[iter].fid == best);
    }
}

TEST_CASE("reference paths refuse oversized inputs and bad counts") {
    Dataset d = testutil::random_dataset(73, 10, 4, 3);
    CHECK_THROWS_AS(reference_mrmr(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(reference_mrmr(d, 5), std::invalid_argument);

    ReferenceLimits tight;
    tight.max_cells = 10;
    CHECK_THROWS_WITH_AS(reference_mi_matrix(d, tight), doctest::Contains("refuses"),
                         std::invalid_argument);
}
