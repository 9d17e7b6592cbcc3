// Command-line front end: categorical mRMR feature selection over a
// partition-parallel column store, plus transposition, validation, and a
// benchmark mode comparing the incremental engine against a stateless
// contingency-table baseline.

#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "mrmr/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"mRMR feature selection over a partition-parallel column store"};
    app.require_subcommand(1);

    mrmr::RunConfig config;
    std::string delimiter = ",";

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", config.input, "input dataset path")->required();
        cmd->add_option("--format", config.format, "input orientation: row|col (default row)");
        cmd->add_option("--decision", config.decision, "decision column: 'last' or 0-based index");
        cmd->add_flag("--header", config.header, "first input line is a header");
        cmd->add_option("--delimiter", delimiter, "field delimiter (default ',')");
        cmd->add_flag("--encode", config.encode_strings, "encode non-integer tokens as categories");
        cmd->add_option("--output", config.output, "output path (default stdout)");
    };

    CLI::App* select = app.add_subcommand("select", "run feature selection and write a report");
    add_input_flags(select);
    select->add_option("--L", config.count, "number of features to select (default 10)")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    select->add_option("--partitions", config.partitions, "partition count (default: processors)");
    select->add_option("--log-base", config.log_base, "log base for reported scores (default 2)");

    CLI::App* transpose = app.add_subcommand("transpose", "write the dataset in columnar form");
    add_input_flags(transpose);

    CLI::App* validate = app.add_subcommand("validate", "check dataset invariants");
    add_input_flags(validate);

    CLI::App* bench = app.add_subcommand("bench", "run the benchmark harness");
    bench->add_option("--config", config.bench_config, "benchmark config (JSON)")->required();
    bench->add_option("--output", config.output, "report path (default stdout)");
    bench->add_option("--partitions", config.partitions, "override the config's partition counts");
    bench->add_option("--seed", config.seed, "override a synthetic dataset's seed")
        ->each([&](const std::string&) { config.seed_set = true; });

    CLI11_PARSE(app, argc, argv);

    if (delimiter.size() != 1) {
        std::cerr << "error: --delimiter expects a single character\n";
        return 1;
    }
    config.delimiter = delimiter[0];

    if (select->parsed()) config.command = mrmr::RunConfig::Command::select;
    if (transpose->parsed()) config.command = mrmr::RunConfig::Command::transpose;
    if (validate->parsed()) config.command = mrmr::RunConfig::Command::validate;
    if (bench->parsed()) config.command = mrmr::RunConfig::Command::bench;

    return mrmr::run_command(config);
}
