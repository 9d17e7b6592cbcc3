#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrmr/dataset.hpp"
#include "mrmr/selector.hpp"
#include "mrmr/types.hpp"

namespace mrmr {

// Dense co-occurrence table over the full observed domains of two columns.
// Zero cells are stored and scanned; that cost is what the sparse engine
// avoids, so this structure exists only for the comparison baseline.
struct ContingencyTable {
    std::vector<Code> row_values;  // sorted distinct codes of the first column
    std::vector<Code> col_values;  // sorted distinct codes of the second column
    std::vector<std::uint32_t> cells;  // rows() x cols(), dense
    std::size_t total = 0;

    std::size_t rows() const { return row_values.size(); }
    std::size_t cols() const { return col_values.size(); }
    std::uint32_t cell(std::size_t r, std::size_t c) const { return cells[r * cols() + c]; }
};

ContingencyTable build_contingency(std::span<const Code> a, std::span<const Code> b);
double contingency_mi(const ContingencyTable& table);  // bits, direct double sum

// Stateless forward selection in the style the engine replaces: every
// iteration rebuilds dense tables for each active feature against the
// decision column and against every selected feature, recomputing relevance
// and the full redundancy sum from scratch. Same scoring criterion and tie
// rule as the engine, so the selected sequence matches; only the work
// differs. partition_count 0 means one partition per available worker.
SelectionResult contingency_select(const Dataset& d, std::size_t count, std::size_t partition_count = 0,
                                   std::size_t workers = 0);

// Fresh transpose plus the engine's full selection; the benchmark's
// incremental method.
SelectionResult incremental_select(const Dataset& d, std::size_t count, std::size_t partition_count = 0,
                                   std::size_t workers = 0);

// Relative speedup of the candidate over the baseline, in percent; negative
// when the candidate is slower. Throws when baseline_seconds <= 0.
double computational_gain(double baseline_seconds, double candidate_seconds);

// Deterministic pseudo-random dataset: a relevant_fraction of features are
// noisy per-feature recodings of a planted decision column, the rest uniform
// noise. Identical seeds produce identical datasets.
Dataset synth_dataset(std::size_t n_objects, std::size_t n_features, std::size_t domain_size,
                      double relevant_fraction, std::uint64_t seed);

struct SynthSpec {
    std::size_t objects = 1000;
    std::size_t features = 50;
    std::size_t domain = 8;
    double relevant_fraction = 0.2;
    std::uint64_t seed = 0;

    std::string describe() const;
    Dataset build() const { return synth_dataset(objects, features, domain, relevant_fraction, seed); }
};

struct BenchConfig {
    std::optional<std::string> dataset_path;  // exactly one of path / synthetic
    ParseOptions parse;
    std::string format = "row";  // row | col
    std::optional<SynthSpec> synthetic;
    std::size_t count = 10;  // selections per run (L)
    std::vector<std::size_t> partition_counts{0};  // 0 = auto
    std::vector<std::string> methods{"contingency", "incremental"};
    std::size_t repetitions = 5;
    std::size_t workers = 0;
};

// JSON config file; throws with the offending key on malformed input.
BenchConfig load_bench_config(const std::string& path);

struct BenchRun {
    std::string method;
    std::size_t partitions = 0;  // resolved value
    std::vector<FeatureId> selected;
    double total_seconds = 0.0;             // median over repetitions
    std::vector<double> iteration_seconds;  // per-index medians
};

struct GainEntry {
    std::string baseline;
    std::string candidate;
    std::size_t partitions = 0;
    double percent = 0.0;
};

struct BenchReport {
    std::string dataset_desc;
    std::size_t count = 0;
    std::size_t repetitions = 0;
    std::vector<BenchRun> runs;  // |methods| x |partition_counts|
    std::vector<GainEntry> gains;
    bool sequences_agree = true;  // hard gate: timings are meaningless without it
};

// Every method must select the same sequence; disagreement flags the whole
// report invalid instead of producing a bogus comparison.
bool check_sequences_agree(const std::vector<BenchRun>& runs);

BenchReport run_benchmark(const BenchConfig& config);
void write_bench_report(std::ostream& out, const BenchReport& report);

double median(std::vector<double> values);

}  // namespace mrmr
