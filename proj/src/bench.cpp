#include "mrmr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "mrmr/column_store.hpp"
#include "mrmr/partition.hpp"
#include "mrmr/stats.hpp"

namespace mrmr {

namespace {

std::vector<Code> distinct_sorted(std::span<const Code> column) {
    std::vector<Code> values(column.begin(), column.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

ContingencyTable build_contingency(std::span<const Code> a, std::span<const Code> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("build_contingency: columns must be non-empty and equally long");
    work_counters().contingency_builds.fetch_add(1, std::memory_order_relaxed);

    ContingencyTable table;
    table.total = a.size();
    table.row_values = distinct_sorted(a);
    table.col_values = distinct_sorted(b);

    // code -> dense index lookups sized by the max code
    std::vector<std::uint32_t> row_index(static_cast<std::size_t>(table.row_values.back()) + 1, 0);
    std::vector<std::uint32_t> col_index(static_cast<std::size_t>(table.col_values.back()) + 1, 0);
    for (std::size_t i = 0; i < table.row_values.size(); ++i) row_index[table.row_values[i]] = i;
    for (std::size_t i = 0; i < table.col_values.size(); ++i) col_index[table.col_values[i]] = i;

    table.cells.assign(table.rows() * table.cols(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        ++table.cells[static_cast<std::size_t>(row_index[a[i]]) * table.cols() + col_index[b[i]]];
    return table;
}

double contingency_mi(const ContingencyTable& table) {
    const std::size_t rows = table.rows(), cols = table.cols();
    std::vector<std::size_t> row_sum(rows, 0), col_sum(cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            row_sum[r] += table.cell(r, c);
            col_sum[c] += table.cell(r, c);
        }

    const double n = static_cast<double>(table.total);
    double mi = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::uint32_t count = table.cell(r, c);
            if (count == 0) continue;
            const double p_xy = static_cast<double>(count) / n;
            const double p_x = static_cast<double>(row_sum[r]) / n;
            const double p_y = static_cast<double>(col_sum[c]) / n;
            mi += p_xy * std::log2(p_xy / (p_x * p_y));
        }
    }
    return mi;
}

SelectionResult contingency_select(const Dataset& d, std::size_t count, std::size_t partition_count,
                                   std::size_t workers) {
    if (count < 1 || count > d.n_features)
        throw std::invalid_argument("selection count " + std::to_string(count) + " out of range [1, " +
                                    std::to_string(d.n_features) + "]");
    if (partition_count == 0) partition_count = std::min(d.n_features, resolve_workers(workers));

    ColumnStore store = transpose(d, partition_count);
    SelectionResult result;
    result.requested = count;

    using clock = std::chrono::steady_clock;
    for (std::size_t iter = 0; iter < count; ++iter) {
        const auto start = clock::now();

        // No state survives between iterations: relevance and the whole
        // redundancy sum are rebuilt from dense tables every time.
        map_partitions(
            store,
            [&store, &result, iter](FeatureVector& fv) {
                double score = contingency_mi(build_contingency(fv.values, store.decision));
                if (iter > 0) {
                    double redundancy = 0.0;
                    for (const SelectedFeature& k : result.selected)
                        redundancy += contingency_mi(
                            build_contingency(fv.values, store.features[k.fid].values));
                    score -= redundancy / static_cast<double>(iter);
                }
                fv.state.score = score;
            },
            workers);

        const Candidate winner = reduce_argmax(store);
        deactivate(store, winner.fid);

        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        result.selected.push_back({winner.fid, winner.score});
        result.iterations.push_back({iter + 1,
                                     iter == 0 ? kDecisionColumn : result.selected[iter - 1].fid,
                                     winner.fid, winner.score, seconds});
    }
    return result;
}

SelectionResult incremental_select(const Dataset& d, std::size_t count, std::size_t partition_count,
                                   std::size_t workers) {
    if (partition_count == 0) partition_count = std::min(d.n_features, resolve_workers(workers));
    ColumnStore store = transpose(d, partition_count);
    SelectorOptions options;
    options.workers = workers;
    return select_features(store, count, options);
}

double computational_gain(double baseline_seconds, double candidate_seconds) {
    if (baseline_seconds <= 0.0)
        throw std::invalid_argument("computational_gain: baseline time must be positive");
    return (baseline_seconds - candidate_seconds) / baseline_seconds * 100.0;
}

Dataset synth_dataset(std::size_t n_objects, std::size_t n_features, std::size_t domain_size,
                      double relevant_fraction, std::uint64_t seed) {
    if (n_objects < 1 || n_features < 1 || domain_size < 1)
        throw std::invalid_argument("synth_dataset: counts must be >= 1");
    if (!(relevant_fraction >= 0.0 && relevant_fraction <= 1.0))
        throw std::invalid_argument("synth_dataset: relevant_fraction must be in [0, 1]");

    std::mt19937_64 rng(seed);
    const auto draw = [&rng](std::size_t bound) {
        return static_cast<Code>(rng() % bound);  // bias is irrelevant for benchmark data
    };

    Dataset d;
    d.n_objects = n_objects;
    d.n_features = n_features;
    d.decision.resize(n_objects);
    for (Code& v : d.decision) v = draw(domain_size);

    const std::size_t n_relevant =
        std::min(n_features, static_cast<std::size_t>(std::llround(relevant_fraction * n_features)));

    d.cells.resize(n_objects * n_features);
    std::vector<Code> recode(domain_size);
    for (std::size_t f = 0; f < n_features; ++f) {
        if (f < n_relevant) {
            // noisy recoding of the decision column: a per-feature shuffle of
            // the code alphabet, with one object in four replaced by noise
            for (std::size_t v = 0; v < domain_size; ++v) recode[v] = static_cast<Code>(v);
            for (std::size_t v = domain_size; v > 1; --v) std::swap(recode[v - 1], recode[rng() % v]);
            for (std::size_t row = 0; row < n_objects; ++row) {
                const bool noise = rng() % 4 == 0;
                d.cells[row * n_features + f] = noise ? draw(domain_size) : recode[d.decision[row]];
            }
        } else {
            for (std::size_t row = 0; row < n_objects; ++row) d.cells[row * n_features + f] = draw(domain_size);
        }
    }
    return d;
}

std::string SynthSpec::describe() const {
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "synth:o=%zu,f=%zu,dom=%zu,rel=%.3f,seed=%llu", objects, features,
                  domain, relevant_fraction, static_cast<unsigned long long>(seed));
    return buffer;
}

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open benchmark config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed benchmark config " + path + ": " + e.what());
    }

    BenchConfig config;
    if (!j.contains("dataset")) throw std::runtime_error("benchmark config: missing 'dataset'");
    const auto& ds = j.at("dataset");
    if (ds.contains("path")) {
        config.dataset_path = ds.at("path").get<std::string>();
        config.format = ds.value("format", "row");
        config.parse.header = ds.value("header", false);
        if (ds.contains("decision") && ds.at("decision").is_number_unsigned())
            config.parse.decision_column = ds.at("decision").get<std::size_t>();
    } else if (ds.contains("synthetic")) {
        const auto& s = ds.at("synthetic");
        SynthSpec spec;
        spec.objects = s.value("objects", spec.objects);
        spec.features = s.value("features", spec.features);
        spec.domain = s.value("domain", spec.domain);
        spec.relevant_fraction = s.value("relevant_fraction", spec.relevant_fraction);
        spec.seed = s.value("seed", spec.seed);
        config.synthetic = spec;
    } else {
        throw std::runtime_error("benchmark config: 'dataset' needs 'path' or 'synthetic'");
    }

    config.count = j.value("L", config.count);
    if (j.contains("partitions")) config.partition_counts = j.at("partitions").get<std::vector<std::size_t>>();
    if (j.contains("methods")) config.methods = j.at("methods").get<std::vector<std::string>>();
    config.repetitions = j.value("repetitions", config.repetitions);
    config.workers = j.value("workers", config.workers);

    if (config.count < 1) throw std::runtime_error("benchmark config: L must be >= 1");
    if (config.repetitions < 1) throw std::runtime_error("benchmark config: repetitions must be >= 1");
    if (config.methods.empty()) throw std::runtime_error("benchmark config: methods must not be empty");
    if (config.partition_counts.empty()) config.partition_counts = {0};
    return config;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty set");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

bool check_sequences_agree(const std::vector<BenchRun>& runs) {
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i].selected != runs[0].selected) return false;
    return true;
}

BenchReport run_benchmark(const BenchConfig& config) {
    for (const std::string& method : config.methods)
        if (method != "incremental" && method != "contingency")
            throw std::invalid_argument("unknown method '" + method +
                                        "' (valid methods: incremental, contingency)");

    Dataset dataset;
    std::string desc;
    if (config.dataset_path) {
        dataset = config.format == "col" ? read_columnar_file(*config.dataset_path)
                                         : parse_row_major_file(*config.dataset_path, config.parse);
        desc = *config.dataset_path;
    } else if (config.synthetic) {
        dataset = config.synthetic->build();
        desc = config.synthetic->describe();
    } else {
        throw std::invalid_argument("benchmark config has no dataset");
    }
    if (config.count > dataset.n_features)
        throw std::invalid_argument("L=" + std::to_string(config.count) + " exceeds feature count " +
                                    std::to_string(dataset.n_features));

    BenchReport report;
    report.dataset_desc = desc;
    report.count = config.count;
    report.repetitions = config.repetitions;

    for (std::size_t partitions : config.partition_counts) {
        const std::size_t resolved =
            partitions == 0 ? std::min(dataset.n_features, resolve_workers(config.workers)) : partitions;
        for (const std::string& method : config.methods) {
            BenchRun run;
            run.method = method;
            run.partitions = resolved;

            std::vector<double> totals;
            std::vector<std::vector<double>> iteration_times(config.count);
            for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
                const SelectionResult result =
                    method == "incremental"
                        ? incremental_select(dataset, config.count, resolved, config.workers)
                        : contingency_select(dataset, config.count, resolved, config.workers);
                double total = 0.0;
                for (std::size_t i = 0; i < result.iterations.size(); ++i) {
                    total += result.iterations[i].wall_seconds;
                    iteration_times[i].push_back(result.iterations[i].wall_seconds);
                }
                totals.push_back(total);
                if (rep == 0) run.selected = result.selected_fids();
            }

            run.total_seconds = median(totals);
            run.iteration_seconds.reserve(config.count);
            for (auto& times : iteration_times) run.iteration_seconds.push_back(median(std::move(times)));
            report.runs.push_back(std::move(run));
        }
    }

    report.sequences_agree = check_sequences_agree(report.runs);
    if (report.sequences_agree) {
        for (std::size_t partitions_idx = 0; partitions_idx < config.partition_counts.size(); ++partitions_idx) {
            const std::size_t base_index = partitions_idx * config.methods.size();
            for (std::size_t i = 0; i < config.methods.size(); ++i) {
                for (std::size_t j = i + 1; j < config.methods.size(); ++j) {
                    const BenchRun& baseline = report.runs[base_index + i];
                    const BenchRun& candidate = report.runs[base_index + j];
                    report.gains.push_back({baseline.method, candidate.method, baseline.partitions,
                                            computational_gain(baseline.total_seconds,
                                                               candidate.total_seconds)});
                }
            }
        }
    }
    return report;
}

namespace {

std::string fmt_double(double value, const char* format = "%.6f") {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

}  // namespace

void write_bench_report(std::ostream& out, const BenchReport& report) {
    out << "benchmark dataset=" << report.dataset_desc << " L=" << report.count
        << " repetitions=" << report.repetitions << '\n';
    for (const BenchRun& run : report.runs) {
        out << "run method=" << run.method << " partitions=" << run.partitions << " selected=";
        for (std::size_t i = 0; i < run.selected.size(); ++i) {
            if (i) out << ',';
            out << run.selected[i];
        }
        out << " total_s=" << fmt_double(run.total_seconds) << " iterations_s=";
        for (std::size_t i = 0; i < run.iteration_seconds.size(); ++i) {
            if (i) out << ',';
            out << fmt_double(run.iteration_seconds[i]);
        }
        out << '\n';
    }
    for (const GainEntry& gain : report.gains)
        out << "cg partitions=" << gain.partitions << " baseline=" << gain.baseline
            << " candidate=" << gain.candidate << " gain_pct=" << fmt_double(gain.percent, "%.3f") << '\n';
    out << "sequences_agree=" << (report.sequences_agree ? "true" : "false") << '\n';
}

}  // namespace mrmr
