#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp/parse_error.hpp"

namespace decomp {

// Rectangular table of categorical observations. Cell values are category
// indices in [0, arity) for their column; a constant column has arity 1.
class Dataset {
public:
    Dataset(std::vector<std::string> names, std::vector<std::vector<int>> rows)
        : names_(std::move(names)), rows_(std::move(rows)) {
        if (names_.empty()) throw std::invalid_argument("Dataset: needs at least one variable");
        arities_.assign(names_.size(), 1);
        for (const auto& row : rows_) {
            if (row.size() != names_.size())
                throw std::invalid_argument("Dataset: rows must match the header width");
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < 0) throw std::invalid_argument("Dataset: negative category index");
                if (row[c] + 1 > arities_[c]) arities_[c] = row[c] + 1;
            }
        }
    }

    int variable_count() const { return static_cast<int>(names_.size()); }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    int arity(int v) const { return arities_.at(v); }
    const std::vector<int>& row(std::size_t r) const { return rows_.at(r); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

private:
    std::vector<std::string> names_;
    std::vector<int> arities_;
    std::vector<std::vector<int>> rows_;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(field);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

// CSV with a header of variable names followed by rows of category indices.
inline Dataset read_dataset_csv(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::string> names;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) {
            if (names.empty()) continue;
            throw ParseError(lineno, 1, "blank line inside data");
        }
        auto fields = detail::split_csv_line(line);
        if (names.empty()) {
            for (auto& f : fields) {
                std::string t = detail::trim(f);
                if (t.empty()) throw ParseError(lineno, 1, "empty variable name");
                names.push_back(t);
            }
            continue;
        }
        if (fields.size() != names.size())
            throw ParseError(lineno, 1,
                             "expected " + std::to_string(names.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        std::vector<int> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            std::string t = detail::trim(fields[c]);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(t, &used);
            } catch (const std::exception&) {
                throw ParseError(lineno, static_cast<int>(c) + 1, "not an integer: '" + t + "'");
            }
            if (used != t.size() || value < 0)
                throw ParseError(lineno, static_cast<int>(c) + 1,
                                 "expected a nonnegative integer, got '" + t + "'");
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (names.empty()) throw ParseError(1, 1, "missing header row");
    return Dataset(std::move(names), std::move(rows));
}

inline Dataset read_dataset_csv(const std::string& text) {
    std::istringstream in(text);
    return read_dataset_csv(in);
}

inline void write_dataset_csv(std::ostream& out, const Dataset& d) {
    for (int v = 0; v < d.variable_count(); ++v) out << (v ? "," : "") << d.name(v);
    out << '\n';
    for (const auto& row : d.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
    }
}

}  // namespace decomp
