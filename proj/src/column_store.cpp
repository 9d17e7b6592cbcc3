#include "mrmr/column_store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mrmr {

std::size_t ColumnStore::active_count() const {
    return static_cast<std::size_t>(std::count(active.begin(), active.end(), std::uint8_t{1}));
}

PartitionPlan make_balanced_plan(std::size_t n_features, std::size_t partition_count) {
    if (partition_count < 1 || partition_count > n_features)
        throw std::invalid_argument("partition count " + std::to_string(partition_count) +
                                    " out of range [1, " + std::to_string(n_features) + "]");

    PartitionPlan plan;
    plan.partition_count = partition_count;
    plan.assignment.resize(n_features);
    plan.ranges.reserve(partition_count);

    const std::size_t base = n_features / partition_count;
    const std::size_t extra = n_features % partition_count;  // first `extra` partitions get one more
    std::uint32_t begin = 0;
    for (std::size_t p = 0; p < partition_count; ++p) {
        const std::uint32_t end = begin + static_cast<std::uint32_t>(base + (p < extra ? 1 : 0));
        plan.ranges.emplace_back(begin, end);
        for (std::uint32_t fid = begin; fid < end; ++fid)
            plan.assignment[fid] = static_cast<std::uint32_t>(p);
        begin = end;
    }
    return plan;
}

ColumnStore transpose(const Dataset& d, std::size_t partition_count) {
    if (d.n_objects < 1 || d.n_features < 1)
        throw std::invalid_argument("transpose: dataset is empty");
    if (d.cells.size() != d.n_objects * d.n_features)
        throw std::invalid_argument("transpose: cell count does not match dataset shape");
    if (d.decision.size() != d.n_objects)
        throw std::invalid_argument("transpose: decision column length mismatch");

    ColumnStore store;
    store.n_objects = d.n_objects;
    store.decision = d.decision;
    store.plan = make_balanced_plan(d.n_features, partition_count);
    store.features.resize(d.n_features);
    store.active.assign(d.n_features, 1);

    for (std::size_t fid = 0; fid < d.n_features; ++fid) {
        FeatureVector& fv = store.features[fid];
        fv.fid = static_cast<FeatureId>(fid);
        fv.values.resize(d.n_objects);
        for (std::size_t row = 0; row < d.n_objects; ++row) fv.values[row] = d.cell(row, fid);
    }
    return store;
}

namespace {

void write_column(std::ostream& out, const std::string& label, const std::vector<Code>& values) {
    out << label;
    for (Code v : values) out << ',' << v;
    out << '\n';
}

}  // namespace

void write_columnar(std::ostream& out, const ColumnStore& store) {
    for (const FeatureVector& fv : store.features) write_column(out, std::to_string(fv.fid), fv.values);
    write_column(out, "dt", store.decision);
}

Dataset read_columnar(std::istream& in) {
    std::vector<std::vector<Code>> columns;  // indexed by fid
    std::vector<bool> seen;
    std::vector<Code> decision;
    bool have_decision = false;
    std::size_t n_objects = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        const std::string label = line.substr(0, comma);
        std::vector<Code> values;
        std::size_t start = comma == std::string::npos ? line.size() : comma + 1;
        while (start <= line.size() && start > 0) {
            const std::size_t pos = line.find(',', start);
            const std::string_view token =
                std::string_view(line).substr(start, pos == std::string::npos ? line.size() - start : pos - start);
            Code v;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw std::runtime_error("bad value '" + std::string(token) + "' at line " +
                                         std::to_string(line_no));
            values.push_back(v);
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (values.empty())
            throw std::runtime_error("no values at line " + std::to_string(line_no));
        if (n_objects == 0) n_objects = values.size();
        if (values.size() != n_objects)
            throw std::runtime_error("ragged column at line " + std::to_string(line_no) + " (expected " +
                                     std::to_string(n_objects) + " values, got " +
                                     std::to_string(values.size()) + ")");

        if (label == "dt") {
            if (have_decision) throw std::runtime_error("duplicate dt line at line " + std::to_string(line_no));
            decision = std::move(values);
            have_decision = true;
        } else {
            std::size_t fid;
            auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), fid);
            if (ec != std::errc() || ptr != label.data() + label.size())
                throw std::runtime_error("bad feature id '" + label + "' at line " + std::to_string(line_no));
            if (fid >= columns.size()) {
                columns.resize(fid + 1);
                seen.resize(fid + 1, false);
            }
            if (seen[fid])
                throw std::runtime_error("duplicate feature id " + std::to_string(fid) + " at line " +
                                         std::to_string(line_no));
            columns[fid] = std::move(values);
            seen[fid] = true;
        }
    }

    if (!have_decision) throw std::runtime_error("missing dt line");
    if (columns.empty()) throw std::runtime_error("no feature columns");
    for (std::size_t fid = 0; fid < columns.size(); ++fid)
        if (!seen[fid]) throw std::runtime_error("missing feature id " + std::to_string(fid));

    Dataset d;
    d.n_objects = n_objects;
    d.n_features = columns.size();
    d.decision = std::move(decision);
    d.cells.resize(d.n_objects * d.n_features);
    for (std::size_t fid = 0; fid < columns.size(); ++fid)
        for (std::size_t row = 0; row < n_objects; ++row)
            d.cells[row * d.n_features + fid] = columns[fid][row];
    return d;
}

Dataset read_columnar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_columnar(in);
}

}  // namespace mrmr
