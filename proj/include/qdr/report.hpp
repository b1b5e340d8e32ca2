#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qdr {

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format: " + s);
}

/// A command report: metadata, a rectangular row section with a fixed column
/// order, and named verdicts.  All emitters preserve field order.
struct Report {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    bool ok = true;
};

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string cell_to_string(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

inline std::string emit_json(const Report& r) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["meta"] = r.meta;
    if (!r.columns.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (auto& row : r.rows) rows.push_back(row);
        doc["rows"] = rows;
    }
    doc["verdicts"] = r.verdicts;
    doc["ok"] = r.ok;
    return doc.dump(2) + "\n";
}

inline std::string emit_csv(const Report& r) {
    std::string out;
    for (size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out += ",";
        out += csv_quote(r.columns[i]);
    }
    out += "\n";
    for (auto& row : r.rows) {
        for (size_t i = 0; i < r.columns.size(); ++i) {
            if (i) out += ",";
            if (row.contains(r.columns[i])) out += csv_quote(cell_to_string(row.at(r.columns[i])));
        }
        out += "\n";
    }
    return out;
}

inline std::string emit_text(const Report& r) {
    std::string out;
    for (auto& [k, v] : r.meta.items()) out += "# " + k + ": " + cell_to_string(v) + "\n";
    if (!r.columns.empty()) {
        std::vector<size_t> widths(r.columns.size());
        for (size_t i = 0; i < r.columns.size(); ++i) widths[i] = r.columns[i].size();
        std::vector<std::vector<std::string>> cells;
        for (auto& row : r.rows) {
            std::vector<std::string> line;
            for (size_t i = 0; i < r.columns.size(); ++i) {
                std::string s = row.contains(r.columns[i]) ? cell_to_string(row.at(r.columns[i])) : "";
                widths[i] = std::max(widths[i], s.size());
                line.push_back(std::move(s));
            }
            cells.push_back(std::move(line));
        }
        auto pad = [](const std::string& s, size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        for (size_t i = 0; i < r.columns.size(); ++i)
            out += pad(r.columns[i], widths[i]) + (i + 1 < r.columns.size() ? "  " : "\n");
        for (auto& line : cells)
            for (size_t i = 0; i < line.size(); ++i)
                out += pad(line[i], widths[i]) + (i + 1 < line.size() ? "  " : "\n");
    }
    for (auto& [k, v] : r.verdicts.items()) out += k + ": " + cell_to_string(v) + "\n";
    out += std::string("ok: ") + (r.ok ? "true" : "false") + "\n";
    return out;
}

inline std::string emit(const Report& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return emit_json(r);
        case OutputFormat::Csv: return emit_csv(r);
        case OutputFormat::Text: return emit_text(r);
    }
    return {};
}

} // namespace qdr
