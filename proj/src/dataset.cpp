#include "mrmr/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mrmr {

std::vector<Code> Dataset::column(std::size_t col) const {
    std::vector<Code> out(n_objects);
    for (std::size_t row = 0; row < n_objects; ++row) out[row] = cell(row, col);
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

void split_line(const std::string& line, char delimiter, std::vector<std::string>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            out.emplace_back(trim(std::string_view(line).substr(start)));
            return;
        }
        out.emplace_back(trim(std::string_view(line).substr(start, pos - start)));
        start = pos + 1;
    }
}

bool parse_code(std::string_view token, Code& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Dataset parse_row_major(std::istream& in, const ParseOptions& options) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header_tokens;
    std::vector<std::string> fields;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        split_line(line, options.delimiter, fields);
        if (options.header && header_tokens.empty() && rows.empty()) {
            header_tokens = fields;
            width = header_tokens.size();
            continue;
        }
        if (width == 0) width = fields.size();
        if (fields.size() != width)
            throw std::runtime_error("ragged row at line " + std::to_string(line_no) + " (expected " +
                                     std::to_string(width) + " fields, got " +
                                     std::to_string(fields.size()) + ")");
        rows.push_back(fields);
        rows.back().shrink_to_fit();
    }

    if (rows.empty()) throw std::runtime_error("empty input: no data rows");
    if (width < 2) throw std::runtime_error("need at least one feature column plus the decision column");

    const std::size_t decision_col = options.decision_column.value_or(width - 1);
    if (decision_col >= width)
        throw std::runtime_error("decision column " + std::to_string(decision_col) +
                                 " out of range for " + std::to_string(width) + " columns");

    Dataset d;
    d.n_objects = rows.size();
    d.n_features = width - 1;
    d.cells.resize(d.n_objects * d.n_features);
    d.decision.resize(d.n_objects);

    // Integer tokens are taken verbatim; with encode_strings, any column
    // containing a non-integer token is re-coded by first occurrence.
    const std::size_t header_offset = options.header ? 1 : 0;
    for (std::size_t col = 0; col < width; ++col) {
        bool all_integer = true;
        for (std::size_t row = 0; row < rows.size(); ++row) {
            Code value;
            if (!parse_code(rows[row][col], value)) {
                if (!options.encode_strings)
                    throw std::runtime_error("non-integer token '" + rows[row][col] + "' at line " +
                                             std::to_string(row + 1 + header_offset) + ", column " +
                                             std::to_string(col) + " (enable category encoding to accept it)");
                all_integer = false;
                break;
            }
        }

        std::vector<Code> column_codes(rows.size());
        if (all_integer) {
            for (std::size_t row = 0; row < rows.size(); ++row) parse_code(rows[row][col], column_codes[row]);
        } else {
            std::vector<std::string> tokens(rows.size());
            for (std::size_t row = 0; row < rows.size(); ++row) tokens[row] = rows[row][col];
            column_codes = encode_categories(tokens).codes;
        }

        if (col == decision_col) {
            d.decision = std::move(column_codes);
        } else {
            const std::size_t out_col = col < decision_col ? col : col - 1;
            for (std::size_t row = 0; row < rows.size(); ++row)
                d.cells[row * d.n_features + out_col] = column_codes[row];
        }
    }

    if (!header_tokens.empty()) {
        d.feature_names.reserve(d.n_features);
        for (std::size_t col = 0; col < width; ++col)
            if (col != decision_col) d.feature_names.push_back(header_tokens[col]);
    }
    return d;
}

Dataset parse_row_major_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_row_major(in, options);
}

ColumnEncoding encode_categories(std::span<const std::string> column_tokens) {
    ColumnEncoding enc;
    enc.codes.reserve(column_tokens.size());
    std::unordered_map<std::string, Code> seen;
    for (const auto& token : column_tokens) {
        auto [it, inserted] = seen.emplace(token, static_cast<Code>(enc.book.size()));
        if (inserted) enc.book.push_back(token);
        enc.codes.push_back(it->second);
    }
    return enc;
}

ValidationReport validate(const Dataset& d) {
    ValidationReport report;
    auto add = [&report](std::size_t row, std::size_t col, std::string description) {
        report.issues.push_back({row, col, std::move(description)});
    };

    if (d.n_objects < 1) add(kNoPosition, kNoPosition, "dataset has no objects");
    if (d.n_features < 1) add(kNoPosition, kNoPosition, "dataset has no features");
    if (d.cells.size() != d.n_objects * d.n_features)
        add(kNoPosition, kNoPosition,
            "cell count " + std::to_string(d.cells.size()) + " does not match " +
                std::to_string(d.n_objects) + "x" + std::to_string(d.n_features));
    if (d.decision.size() != d.n_objects)
        add(kNoPosition, kNoPosition,
            "decision length " + std::to_string(d.decision.size()) + " does not match object count " +
                std::to_string(d.n_objects));
    if (!d.feature_names.empty() && d.feature_names.size() != d.n_features)
        add(kNoPosition, kNoPosition, "feature name count does not match feature count");

    if (d.cells.size() == d.n_objects * d.n_features) {
        for (std::size_t row = 0; row < d.n_objects; ++row)
            for (std::size_t col = 0; col < d.n_features; ++col)
                if (d.cell(row, col) < 0)
                    add(row, col, "negative code " + std::to_string(d.cell(row, col)));
    }
    for (std::size_t row = 0; row < d.decision.size(); ++row)
        if (d.decision[row] < 0)
            add(row, kNoPosition, "negative code " + std::to_string(d.decision[row]) + " in decision column");

    report.ok = report.issues.empty();
    return report;
}

}  // namespace mrmr
