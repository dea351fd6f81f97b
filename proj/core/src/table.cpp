// table.cpp — CSV/JSON table serialization

#include "chiralwg/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chiralwg::io {

namespace {

char type_tag(const Cell& c) {
    if (std::holds_alternative<double>(c)) return 'f';
    if (std::holds_alternative<std::int64_t>(c)) return 'i';
    return 's';
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_string(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return csv_escape(std::get<std::string>(c));
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

Cell cell_from_string(const std::string& text, char tag) {
    switch (tag) {
        case 'f': return std::stod(text);
        case 'i': return static_cast<std::int64_t>(std::stoll(text));
        default: return text;
    }
}

nlohmann::json cell_to_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) return *d;
        return std::string(std::isnan(*d) ? "nan" : (*d > 0 ? "inf" : "-inf"));
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return std::get<std::string>(c);
}

std::vector<char> column_tags(const ResultTable& table) {
    std::vector<char> tags;
    if (table.rows.empty()) {
        tags.assign(table.columns.size(), 'f');
        return tags;
    }
    for (const Cell& c : table.rows.front()) tags.push_back(type_tag(c));
    for (size_t r = 1; r < table.rows.size(); ++r) {
        for (size_t c = 0; c < table.rows[r].size(); ++c) {
            if (type_tag(table.rows[r][c]) != tags[c]) {
                throw std::invalid_argument("write_table: column " + std::to_string(c) +
                                            " mixes cell types across rows");
            }
        }
    }
    return tags;
}

void check_rows(const ResultTable& table) {
    for (size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.columns.size()) {
            throw std::invalid_argument("write_table: row " + std::to_string(r) +
                                        " has " + std::to_string(table.rows[r].size()) +
                                        " cells, expected " + std::to_string(table.columns.size()));
        }
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ResultTable::append_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("ResultTable::append_row: cell count mismatch");
    }
    rows.push_back(std::move(row));
}

TableFormat parse_format(const std::string& text) {
    if (text == "csv") return TableFormat::csv;
    if (text == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + text + "' (expected csv or json)");
}

void write_table(const ResultTable& table, const std::filesystem::path& path, TableFormat format) {
    check_rows(table);
    const std::vector<char> tags = column_tags(table);

    nlohmann::json header;
    header["metadata"] = table.metadata;
    nlohmann::json cols = nlohmann::json::array();
    for (size_t c = 0; c < table.columns.size(); ++c) {
        cols.push_back({{"name", table.columns[c].name},
                        {"unit", table.columns[c].unit},
                        {"type", std::string(1, tags[c])}});
    }
    header["columns"] = cols;

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_table: cannot open '" + path.string() + "' for writing");
    }

    if (format == TableFormat::json) {
        nlohmann::json doc = header;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const Cell& c : row) jrow.push_back(cell_to_json(c));
            rows.push_back(std::move(jrow));
        }
        doc["rows"] = rows;
        out << doc.dump(1) << '\n';
    } else {
        out << "# chiralwg-table " << header.dump() << '\n';
        for (size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << csv_escape(table.columns[c].name);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << cell_to_string(row[c]);
            }
            out << '\n';
        }
    }
    if (!out) {
        throw std::runtime_error("write_table: I/O failure while writing '" + path.string() + "'");
    }
}

ResultTable read_table(const std::filesystem::path& path, TableFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_table: cannot open '" + path.string() + "'");
    }

    ResultTable table;
    if (format == TableFormat::json) {
        nlohmann::json doc = nlohmann::json::parse(in);
        table.metadata = doc.at("metadata");
        std::vector<char> tags;
        for (const auto& col : doc.at("columns")) {
            table.columns.push_back({col.at("name").get<std::string>(),
                                     col.at("unit").get<std::string>()});
            tags.push_back(col.at("type").get<std::string>().at(0));
        }
        for (const auto& jrow : doc.at("rows")) {
            std::vector<Cell> row;
            for (size_t c = 0; c < jrow.size(); ++c) {
                switch (tags[c]) {
                    case 'f':
                        row.emplace_back(jrow[c].is_string() ? std::nan("") : jrow[c].get<double>());
                        break;
                    case 'i': row.emplace_back(jrow[c].get<std::int64_t>()); break;
                    default: row.emplace_back(jrow[c].get<std::string>()); break;
                }
            }
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    std::string line;
    if (!std::getline(in, line) || line.rfind("# chiralwg-table ", 0) != 0) {
        throw std::runtime_error("read_table: '" + path.string() + "' is not a chiralwg CSV table");
    }
    nlohmann::json header = nlohmann::json::parse(line.substr(17));
    table.metadata = header.at("metadata");
    std::vector<char> tags;
    for (const auto& col : header.at("columns")) {
        table.columns.push_back({col.at("name").get<std::string>(),
                                 col.at("unit").get<std::string>()});
        tags.push_back(col.at("type").get<std::string>().at(0));
    }
    if (!std::getline(in, line)) {
        throw std::runtime_error("read_table: missing CSV header row");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != table.columns.size()) {
            throw std::runtime_error("read_table: row with wrong field count in '" + path.string() + "'");
        }
        std::vector<Cell> row;
        for (size_t c = 0; c < fields.size(); ++c) row.push_back(cell_from_string(fields[c], tags[c]));
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace chiralwg::io
