#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace polyeff {

using Record = nlohmann::ordered_json;  // field order is the output column order

enum class OutputFormat { kCsv, kJson, kTable };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    if (name == "table") return OutputFormat::kTable;
    throw std::domain_error("unknown format '" + name + "' (expected csv, json or table)");
}

// Shortest decimal string that parses back to exactly the same double.
// Locale-free by construction.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::logic_error("double formatting failed");
    return std::string(buf, ptr);
}

namespace detail {

inline std::string cell_text(const Record& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    if (value.is_number_float()) return format_double(value.get<double>());
    return value.dump();
}

inline void require_csv_safe(const std::string& field) {
    if (field.find_first_of(",\"\n") != std::string::npos) {
        throw std::logic_error("field not CSV-safe: " + field);
    }
}

// Display width, counting code points rather than bytes so section signs
// don't skew table alignment.
inline std::size_t display_width(const std::string& text) {
    std::size_t w = 0;
    for (unsigned char c : text) {
        if ((c & 0xc0) != 0x80) ++w;
    }
    return w;
}

}  // namespace detail

inline std::string to_csv(const std::vector<Record>& records) {
    if (records.empty()) return "";
    std::string out;
    bool first = true;
    for (const auto& [key, value] : records.front().items()) {
        (void)value;
        detail::require_csv_safe(key);
        if (!first) out += ',';
        out += key;
        first = false;
    }
    out += '\n';
    for (const Record& record : records) {
        first = true;
        for (const auto& [key, value] : record.items()) {
            (void)key;
            const std::string cell = detail::cell_text(value);
            detail::require_csv_safe(cell);
            if (!first) out += ',';
            out += cell;
            first = false;
        }
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<Record>& records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const Record& record : records) array.push_back(record);
    return array.dump(2) + "\n";
}

inline std::string to_table(const std::vector<Record>& records) {
    if (records.empty()) return "";
    std::vector<std::string> headers;
    std::vector<std::size_t> widths;
    for (const auto& [key, value] : records.front().items()) {
        (void)value;
        headers.push_back(key);
        widths.push_back(detail::display_width(key));
    }
    std::vector<std::vector<std::string>> cells;
    for (const Record& record : records) {
        std::vector<std::string> row;
        std::size_t i = 0;
        for (const auto& [key, value] : record.items()) {
            (void)key;
            row.push_back(detail::cell_text(value));
            widths[i] = std::max(widths[i], detail::display_width(row.back()));
            ++i;
        }
        cells.push_back(std::move(row));
    }

    std::string out;
    const auto append_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) {
                out.append(widths[i] - detail::display_width(row[i]) + 2, ' ');
            }
        }
        out += '\n';
    };
    append_row(headers);
    for (std::size_t i = 0; i < headers.size(); ++i) {
        out.append(widths[i], '-');
        if (i + 1 < headers.size()) out.append(2, ' ');
    }
    out += '\n';
    for (const auto& row : cells) append_row(row);
    return out;
}

inline std::string render(const std::vector<Record>& records, OutputFormat format) {
    switch (format) {
        case OutputFormat::kCsv: return to_csv(records);
        case OutputFormat::kJson: return to_json(records);
        default: return to_table(records);
    }
}

}  // namespace polyeff
