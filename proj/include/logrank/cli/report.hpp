#pragma once

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/boolmatrix/bool_matrix.hpp"
#include "logrank/core/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace logrank {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Json, Csv };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw InvalidArgument("unknown format '" + s + "' (json, csv)");
}

inline ordered_json to_json(const F2Set& s) {
    ordered_json j = ordered_json::array();
    for (Word w : s) j.push_back(F2Vector(s.dimension(), w).str());
    return j;
}

inline ordered_json to_json(const DualPair& p) {
    return {{"a", to_json(p.a())},
            {"b", to_json(p.b())},
            {"constant_bit", p.constant_bit()},
            {"a_size", p.a().size()},
            {"b_size", p.b().size()},
            {"area", p.area()}};
}

inline ordered_json to_json(const SubmatrixView& v) {
    return {{"rows", v.rows}, {"cols", v.cols}, {"area", v.area()}};
}

inline ordered_json json_rational(const Rational& q) { return to_string(q); }

// A report carries a flat `table` (one object per row; rendered as CSV) and
// any nested detail alongside it in the JSON form.
inline ordered_json make_report(const std::string& command, std::uint64_t seed, ordered_json config) {
    ordered_json r;
    r["schema_version"] = kReportSchemaVersion;
    r["command"] = command;
    r["seed"] = seed;
    r["config"] = std::move(config);
    return r;
}

namespace detail {

inline std::string csv_cell(const ordered_json& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_null())
        s = "";
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace detail

// Header is the union of the table's keys in first-seen order.
inline std::string format_csv(const ordered_json& table) {
    std::vector<std::string> cols;
    for (const auto& row : table)
        for (const auto& [key, _] : row.items())
            if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    std::ostringstream out;
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
    out << "\n";
    for (const auto& row : table) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) out << ",";
            if (row.contains(cols[c])) out << detail::csv_cell(row.at(cols[c]));
        }
        out << "\n";
    }
    return out.str();
}

// RFC 4180-style reader for the subset format_csv writes.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
            any = true;
        } else if (c == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else {
            cell += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("csv: unterminated quote");
    if (any) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string format_report(const ordered_json& report, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) return report.dump(2) + "\n";
    if (report.contains("table")) return format_csv(report.at("table"));
    // single-record reports: flatten the top level scalars
    ordered_json row = ordered_json::object();
    for (const auto& [key, v] : report.items())
        if (v.is_primitive()) row[key] = v;
    return format_csv(ordered_json::array({row}));
}

}  // namespace logrank
