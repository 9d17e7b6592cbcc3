#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrmr/types.hpp"

namespace mrmr {

// Row-major categorical dataset; the decision column is held separately and
// is never a selection candidate.
struct Dataset {
    std::size_t n_objects = 0;
    std::size_t n_features = 0;
    std::vector<Code> cells;                 // n_objects x n_features, row-major
    std::vector<Code> decision;              // length n_objects
    std::vector<std::string> feature_names;  // optional; empty or n_features long

    Code cell(std::size_t row, std::size_t col) const { return cells[row * n_features + col]; }
    std::vector<Code> column(std::size_t col) const;
};

struct ParseOptions {
    char delimiter = ',';
    bool header = false;
    std::optional<std::size_t> decision_column;  // 0-based input column; default: last
    bool encode_strings = false;                 // assign codes to non-integer tokens
};

// Delimiter-separated values, one object per line. Throws std::runtime_error
// with the offending line number on ragged rows, bad tokens, or empty input.
Dataset parse_row_major(std::istream& in, const ParseOptions& options = {});
Dataset parse_row_major_file(const std::string& path, const ParseOptions& options = {});

struct ColumnEncoding {
    std::vector<Code> codes;        // one per token
    std::vector<std::string> book;  // book[code] = original token
};

// Codes assigned by first occurrence within the column, starting at 0.
// Columns are encoded independently of each other.
ColumnEncoding encode_categories(std::span<const std::string> column_tokens);

inline constexpr std::size_t kNoPosition = std::numeric_limits<std::size_t>::max();

struct ValidationIssue {
    std::size_t row = kNoPosition;  // kNoPosition for dataset-level issues
    std::size_t column = kNoPosition;
    std::string description;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate(const Dataset& d);

}  // namespace mrmr
