#pragma once

/**
 * @file certificate.hpp
 * @brief Machine-readable verdict records and their serialization.
 *
 * Statuses: "pass" (exact zero residual / exact equality), "fail" (exact
 * nonzero residual on an asserted comparison), "inconclusive" (a membership
 * did not reduce within the degree bound), "experiment" (reported verdict,
 * never asserted). JSON output is schema-stable; identical configurations
 * produce identical payloads up to the timing field.
 */

#include "qscalar.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cpqr {

struct Certificate {
    std::string id;         ///< stable slug, e.g. "curvature/einstein-condition"
    std::string statement;  ///< what was checked, in mathematical terms
    std::string status;     ///< pass | fail | inconclusive | experiment
    bool imported = false;  ///< identity taken from cited background theory
    int degree_used = 0;
    size_t span_rows = 0;
    size_t span_pivots = 0;
    size_t span_cols = 0;
    double elapsed_ms = 0.0;
    std::map<std::string, std::string> payload;  ///< exact scalars and notes

    bool asserted_ok() const { return status == "pass" || status == "experiment"; }
};

inline nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["status"] = c.status;
    if (c.imported) j["imported"] = true;
    j["degree_used"] = c.degree_used;
    j["span"] = {{"rows", c.span_rows}, {"pivots", c.span_pivots}, {"columns", c.span_cols}};
    j["elapsed_ms"] = c.elapsed_ms;
    if (!c.payload.empty()) j["payload"] = c.payload;
    return j;
}

inline std::string to_csv_row(const Certificate& c) {
    std::ostringstream os;
    auto esc = [](const std::string& s) {
        std::string o = "\"";
        for (char ch : s) {
            if (ch == '"') o += '"';
            o += ch;
        }
        return o + "\"";
    };
    std::string extra;
    for (const auto& [k, v] : c.payload) {
        if (!extra.empty()) extra += "; ";
        extra += k + "=" + v;
    }
    os << esc(c.id) << "," << esc(c.statement) << "," << c.status << "," << (c.imported ? 1 : 0)
       << "," << c.degree_used << "," << c.span_rows << "," << c.span_pivots << "," << c.span_cols
       << "," << c.elapsed_ms << "," << esc(extra);
    return os.str();
}

inline constexpr const char* csv_header =
    "id,statement,status,imported,degree_used,span_rows,span_pivots,span_columns,elapsed_ms,"
    "payload";

inline std::string to_text_line(const Certificate& c) {
    std::ostringstream os;
    os << (c.status == "pass"          ? "PASS "
           : c.status == "fail"        ? "FAIL "
           : c.status == "experiment"  ? "EXPR "
                                       : "INC  ");
    os << c.id;
    if (c.imported) os << " [imported]";
    os << "  (" << c.statement << ")";
    if (!c.payload.empty()) {
        os << "  {";
        bool first = true;
        for (const auto& [k, v] : c.payload) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

}  // namespace cpqr
