#include "mrmr/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mrmr/bench.hpp"
#include "mrmr/column_store.hpp"
#include "mrmr/dataset.hpp"
#include "mrmr/partition.hpp"
#include "mrmr/selector.hpp"

namespace mrmr {

namespace {

ParseOptions parse_options_from(const RunConfig& config) {
    ParseOptions options;
    options.delimiter = config.delimiter;
    options.header = config.header;
    options.encode_strings = config.encode_strings;
    if (config.decision != "last") {
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(config.decision.data(),
                                         config.decision.data() + config.decision.size(), index);
        if (ec != std::errc() || ptr != config.decision.data() + config.decision.size())
            throw std::invalid_argument("--decision expects 'last' or a column index, got '" +
                                        config.decision + "'");
        options.decision_column = index;
    }
    return options;
}

Dataset load_dataset(const RunConfig& config) {
    if (config.input.empty()) throw std::invalid_argument("--input is required");
    if (config.format == "col") return read_columnar_file(config.input);
    if (config.format != "row")
        throw std::invalid_argument("--format expects 'row' or 'col', got '" + config.format + "'");
    return parse_row_major_file(config.input, parse_options_from(config));
}

// Writes through a stringstream so a failed run never leaves a partial file.
void deliver(const RunConfig& config, const std::string& text) {
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output);
    if (!out) throw std::runtime_error("cannot open output file: " + config.output);
    out << text;
    if (!out.flush()) throw std::runtime_error("failed writing output file: " + config.output);
}

double score_scale_for(double log_base) {
    if (!(log_base > 0.0) || log_base == 1.0)
        throw std::invalid_argument("--log-base must be positive and not 1");
    return 1.0 / std::log2(log_base);  // scores are computed in bits
}

int cmd_select(const RunConfig& config) {
    const double scale = score_scale_for(config.log_base);
    const Dataset d = load_dataset(config);
    const std::size_t partitions =
        config.partitions == 0 ? std::min(d.n_features, resolve_workers(0)) : config.partitions;

    ColumnStore store = transpose(d, partitions);
    const SelectionResult result = select_features(store, std::min(config.count, d.n_features));

    std::ostringstream report;
    write_selection_report(report, result, store, scale);
    deliver(config, report.str());
    return 0;
}

int cmd_transpose(const RunConfig& config) {
    if (config.format != "row")
        throw std::invalid_argument("transpose expects row-major input (--format row)");
    const Dataset d = load_dataset(config);
    const ColumnStore store = transpose(d, 1);  // partitioning is irrelevant for the file format

    std::ostringstream out;
    write_columnar(out, store);
    deliver(config, out.str());
    return 0;
}

int cmd_validate(const RunConfig& config) {
    const Dataset d = load_dataset(config);
    const ValidationReport report = validate(d);

    std::ostringstream out;
    if (report.ok) {
        out << "ok\n";
    } else {
        for (const ValidationIssue& issue : report.issues) {
            out << "issue";
            if (issue.row != kNoPosition) out << " row=" << issue.row;
            if (issue.column != kNoPosition) out << " column=" << issue.column;
            out << " " << issue.description << '\n';
        }
        out << "invalid: " << report.issues.size() << " issue(s)\n";
    }
    deliver(config, out.str());
    return report.ok ? 0 : 1;
}

int cmd_bench(const RunConfig& config) {
    if (config.bench_config.empty()) throw std::invalid_argument("--config is required for bench");
    BenchConfig bench = load_bench_config(config.bench_config);
    if (config.seed_set && bench.synthetic) bench.synthetic->seed = config.seed;
    if (config.partitions != 0) bench.partition_counts = {config.partitions};

    const BenchReport report = run_benchmark(bench);
    std::ostringstream out;
    write_bench_report(out, report);
    deliver(config, out.str());

    if (!report.sequences_agree) {
        std::cerr << "error: methods disagree on the selected sequence; comparison invalid\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_command(const RunConfig& config) {
    try {
        switch (config.command) {
            case RunConfig::Command::select: return cmd_select(config);
            case RunConfig::Command::transpose: return cmd_transpose(config);
            case RunConfig::Command::validate: return cmd_validate(config);
            case RunConfig::Command::bench: return cmd_bench(config);
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mrmr
