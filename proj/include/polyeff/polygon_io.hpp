#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyeff/math_util.hpp"

namespace polyeff {

// File could not be opened or read at all (as opposed to being malformed).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed polygon file; message carries the line (CSV) or byte offset
// (JSON) of the first problem.
class PolygonParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class PolygonFileFormat { kCsv, kJson };

inline PolygonFileFormat detect_polygon_format(const std::string& path) {
    const auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == "csv") return PolygonFileFormat::kCsv;
    if (ext == "json") return PolygonFileFormat::kJson;
    throw PolygonParseError("cannot infer polygon format from '" + path +
                            "' (expected .csv or .json, or an explicit format)");
}

namespace detail {

inline double parse_coordinate(const std::string& text, std::size_t line_no, const char* which) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw PolygonParseError("line " + std::to_string(line_no) + ": bad " + which +
                                " coordinate '" + text + "'");
    }
    return value;
}

// One "x,y" pair per line; blank lines and #-comments are allowed.
inline std::vector<Point> parse_polygon_csv(std::istream& in) {
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw PolygonParseError("line " + std::to_string(line_no) +
                                    ": expected exactly one comma in '" + line + "'");
        }
        points.push_back(Point{parse_coordinate(line.substr(0, comma), line_no, "x"),
                               parse_coordinate(line.substr(comma + 1), line_no, "y")});
    }
    return points;
}

// A JSON array of [x, y] number pairs.
inline std::vector<Point> parse_polygon_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw PolygonParseError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_array()) {
        throw PolygonParseError("top-level value must be an array of [x, y] pairs");
    }
    std::vector<Point> points;
    points.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw PolygonParseError("element " + std::to_string(i) +
                                    " is not a two-number [x, y] pair");
        }
        points.push_back(Point{entry[0].get<double>(), entry[1].get<double>()});
    }
    return points;
}

}  // namespace detail

inline std::vector<Point> read_polygon_file(const std::string& path,
                                            PolygonFileFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return format == PolygonFileFormat::kCsv ? detail::parse_polygon_csv(in)
                                             : detail::parse_polygon_json(in);
}

inline std::vector<Point> read_polygon_file(const std::string& path) {
    return read_polygon_file(path, detect_polygon_format(path));
}

}  // namespace polyeff
