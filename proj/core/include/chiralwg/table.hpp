// table.hpp — deterministic tabular result emission (CSV and JSON)
//
// CSV files carry the metadata block in '#'-prefixed header lines followed by
// an RFC-4180-style body (comma separated, header row, '.' decimal, doubles
// printed with 17 significant digits). JSON files are a single object
// {metadata, columns, rows}. Identical inputs produce byte-identical files;
// complex values are always split into paired _re/_im columns by the callers.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace chiralwg::io {

struct Column {
    std::string name;
    std::string unit; // "" for dimensionless/text
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::json metadata; // full run configuration echo, version, thresholds, exclusions

    void append_row(std::vector<Cell> row);
};

enum class TableFormat { csv, json };

TableFormat parse_format(const std::string& text); // "csv" | "json"

void write_table(const ResultTable& table, const std::filesystem::path& path, TableFormat format);
ResultTable read_table(const std::filesystem::path& path, TableFormat format);

// full-precision double formatting used across all emitters ("%.17g")
std::string format_double(double v);

} // namespace chiralwg::io
