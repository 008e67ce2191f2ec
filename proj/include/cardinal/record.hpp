#pragma once

// Tabular command output with two serializations:
//
//   json-lines  line 1: {"schema_version":..,"command":..,"parameters":{..},"columns":[..]}
//               then one JSON array per row, then {"summary":{..}}
//   csv         "# key=value" comment lines for metadata, a header line, data lines
//
// Floating values are written with 17 significant digits and always carry a
// decimal point or exponent, so integer and floating cells stay distinct.

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cardinal {

inline constexpr const char* schema_version = "1";

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;
using Fields = std::vector<std::pair<std::string, Cell>>;

struct OutputRecord {
    std::string schema_version = cardinal::schema_version;
    std::string command;
    Fields parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Fields summary;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

    [[nodiscard]] std::size_t column(const std::string& name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == name) {
                return i;
            }
        }
        throw std::out_of_range("OutputRecord: no column '" + name + "'");
    }

    [[nodiscard]] const Cell& at(std::size_t row, const std::string& name) const { return rows.at(row).at(column(name)); }

    [[nodiscard]] const Cell* find_summary(const std::string& key) const
    {
        for (const auto& [k, v] : summary) {
            if (k == key) {
                return &v;
            }
        }
        return nullptr;
    }
};

enum class Format { json_lines, csv };

inline Format parse_format(const std::string& name)
{
    if (name == "json-lines") {
        return Format::json_lines;
    }
    if (name == "csv") {
        return Format::csv;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected csv or json-lines)");
}

namespace detail {

inline std::string format_double(double v)
{
    if (!std::isfinite(v)) {
        throw std::domain_error("OutputRecord: non-finite value cannot be serialized");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string json_cell(const Cell& cell)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string& s) const { return json_string(s); }
    };
    return std::visit(Visitor{}, cell);
}

inline std::string json_object(const Fields& fields)
{
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += json_string(fields[i].first) + ':' + json_cell(fields[i].second);
    }
    return out + '}';
}

template <class Json>
Cell cell_from_json(const Json& j)
{
    switch (j.type()) {
    case Json::value_t::null: return std::monostate{};
    case Json::value_t::boolean: return j.template get<bool>();
    case Json::value_t::number_integer: return j.template get<std::int64_t>();
    case Json::value_t::number_unsigned: return static_cast<std::int64_t>(j.template get<std::uint64_t>());
    case Json::value_t::number_float: return j.template get<double>();
    case Json::value_t::string: return j.template get<std::string>();
    default: throw std::invalid_argument("OutputRecord: unsupported JSON value " + j.dump());
    }
}

inline std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

inline std::string csv_cell(const Cell& cell)
{
    if (std::holds_alternative<std::monostate>(cell)) {
        return "";
    }
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return csv_quote(*s);
    }
    return json_cell(cell);
}

// Splits one CSV line; quoted fields keep a marker so they decode as strings.
inline std::vector<std::pair<std::string, bool>> csv_split(const std::string& line)
{
    std::vector<std::pair<std::string, bool>> out;
    std::string field;
    bool quoted = false;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
            quoted = true;
        } else if (c == ',') {
            out.emplace_back(std::move(field), quoted);
            field.clear();
            quoted = false;
        } else {
            field += c;
        }
    }
    if (in_quotes) {
        throw std::invalid_argument("csv: unterminated quoted field");
    }
    out.emplace_back(std::move(field), quoted);
    return out;
}

inline Cell csv_decode(const std::string& text, bool quoted)
{
    if (quoted) {
        return text;
    }
    if (text.empty()) {
        return std::monostate{};
    }
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    std::size_t used = 0;
    if (text.find_first_of(".eE") == std::string::npos) {
        const long long i = std::stoll(text, &used);
        if (used == text.size()) {
            return static_cast<std::int64_t>(i);
        }
    } else {
        const double d = std::stod(text, &used);
        if (used == text.size()) {
            return d;
        }
    }
    throw std::invalid_argument("csv: cannot decode cell '" + text + "'");
}

} // namespace detail

inline void write_record(std::ostream& os, const OutputRecord& record, Format format)
{
    if (format == Format::json_lines) {
        os << "{\"schema_version\":" << detail::json_string(record.schema_version)
           << ",\"command\":" << detail::json_string(record.command)
           << ",\"parameters\":" << detail::json_object(record.parameters) << ",\"columns\":[";
        for (std::size_t i = 0; i < record.columns.size(); ++i) {
            os << (i ? "," : "") << detail::json_string(record.columns[i]);
        }
        os << "]}\n";
        for (const auto& row : record.rows) {
            os << '[';
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << detail::json_cell(row[i]);
            }
            os << "]\n";
        }
        os << "{\"summary\":" << detail::json_object(record.summary) << "}\n";
        return;
    }

    os << "# schema_version=" << detail::csv_quote(record.schema_version) << '\n';
    os << "# command=" << detail::csv_quote(record.command) << '\n';
    for (const auto& [k, v] : record.parameters) {
        os << "# parameter." << k << '=' << detail::csv_cell(v) << '\n';
    }
    for (const auto& [k, v] : record.summary) {
        os << "# summary." << k << '=' << detail::csv_cell(v) << '\n';
    }
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
        os << (i ? "," : "") << record.columns[i];
    }
    os << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << detail::csv_cell(row[i]);
        }
        os << '\n';
    }
}

inline std::string to_string(const OutputRecord& record, Format format)
{
    std::ostringstream os;
    write_record(os, record, format);
    return os.str();
}

inline OutputRecord read_record(std::istream& is, Format format)
{
    OutputRecord record;
    std::string line;
    if (format == Format::json_lines) {
        using ordered = nlohmann::ordered_json;
        if (!std::getline(is, line)) {
            throw std::invalid_argument("json-lines: missing header line");
        }
        const auto header = ordered::parse(line);
        record.schema_version = header.at("schema_version").get<std::string>();
        record.command = header.at("command").get<std::string>();
        for (const auto& [k, v] : header.at("parameters").items()) {
            record.parameters.emplace_back(k, detail::cell_from_json(v));
        }
        record.columns = header.at("columns").get<std::vector<std::string>>();
        while (std::getline(is, line)) {
            if (line.empty()) {
                continue;
            }
            const auto j = ordered::parse(line);
            if (j.is_array()) {
                std::vector<Cell> row;
                for (const auto& v : j) {
                    row.push_back(detail::cell_from_json(v));
                }
                record.rows.push_back(std::move(row));
            } else {
                for (const auto& [k, v] : j.at("summary").items()) {
                    record.summary.emplace_back(k, detail::cell_from_json(v));
                }
            }
        }
        return record;
    }

    bool have_header = false;
    auto decode_meta = [](const std::string& text) {
        const auto parts = detail::csv_split(text);
        if (parts.size() != 1) {
            throw std::invalid_argument("csv: malformed metadata value");
        }
        return detail::csv_decode(parts[0].first, parts[0].second);
    };
    while (std::getline(is, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("csv: malformed comment line");
            }
            const std::string key = line.substr(2, eq - 2);
            const Cell value = decode_meta(line.substr(eq + 1));
            if (key == "schema_version") {
                record.schema_version = std::get<std::string>(value);
            } else if (key == "command") {
                record.command = std::get<std::string>(value);
            } else if (key.rfind("parameter.", 0) == 0) {
                record.parameters.emplace_back(key.substr(10), value);
            } else if (key.rfind("summary.", 0) == 0) {
                record.summary.emplace_back(key.substr(8), value);
            }
            continue;
        }
        const auto parts = detail::csv_split(line);
        if (!have_header) {
            for (const auto& [name, quoted] : parts) {
                record.columns.push_back(name);
            }
            have_header = true;
            continue;
        }
        std::vector<Cell> row;
        for (const auto& [text, quoted] : parts) {
            row.push_back(detail::csv_decode(text, quoted));
        }
        record.rows.push_back(std::move(row));
    }
    return record;
}

inline OutputRecord parse_record(const std::string& text, Format format)
{
    std::istringstream is(text);
    return read_record(is, format);
}

} // namespace cardinal
