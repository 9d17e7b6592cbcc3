#pragma once

#include <cstdint>
#include <string>

namespace mrmr {

struct RunConfig {
    enum class Command { select, transpose, validate, bench };

    Command command = Command::select;
    std::string input;            // dataset path (select / transpose / validate)
    std::string format = "row";   // row | col
    std::string decision = "last";  // "last" or a 0-based column index
    bool header = false;
    char delimiter = ',';
    bool encode_strings = false;
    std::size_t count = 10;      // selections to make
    std::size_t partitions = 0;  // 0: available processors
    std::string output;          // empty: stdout
    std::uint64_t seed = 0;      // overrides a synthetic benchmark dataset's seed
    bool seed_set = false;
    double log_base = 2.0;       // rescales reported scores only
    std::string bench_config;    // bench config path
};

// Executes the configured command; returns the process exit code and writes
// diagnostics to stderr. Exit 0 means the requested artifact was produced
// (for validate: the input is clean).
int run_command(const RunConfig& config);

}  // namespace mrmr
