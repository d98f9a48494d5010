#pragma once

// Canonical serialization. Keys are emitted in a fixed insertion order,
// integers as decimal strings and rationals as "p/q".

#include "omega/bose_mesner.hpp"
#include "omega/certificate.hpp"
#include "omega/errors.hpp"
#include "omega/exact.hpp"
#include "omega/hypercube.hpp"
#include "omega/set_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace omega {

using ordered_json = nlohmann::ordered_json;

inline ordered_json fractions(const std::vector<Rational>& values) {
    auto out = ordered_json::array();
    for (const auto& v : values)
        out.push_back(to_fraction(v));
    return out;
}

inline ordered_json to_json(const IndependenceVerdict& verdict) {
    ordered_json out;
    out["independent"] = verdict.independent;
    out["pairs_checked"] = std::to_string(verdict.pairs_checked);
    if (verdict.violation)
        out["violation"] = {format_vertex(verdict.violation->first), format_vertex(verdict.violation->second)};
    else
        out["violation"] = nullptr;
    return out;
}

inline ordered_json to_json(const SpectralReport& report) {
    ordered_json out;
    out["m"] = std::to_string(report.m);
    out["checks"] = std::to_string(report.checks.size());
    auto failures = ordered_json::array();
    for (const auto& f : report.failures())
        failures.push_back({{"identity", f.identity}, {"indices", f.indices}});
    out["failures"] = failures;
    out["all_passed"] = report.all_passed();
    return out;
}

inline ordered_json to_json(const CertificateReport& report) {
    ordered_json out;
    out["k"] = std::to_string(report.k);
    out["n"] = std::to_string(1 << report.k);
    out["m"] = std::to_string(report.m);
    out["trivial"] = report.trivial;
    out["phi_values"] = fractions(report.phi_values);
    out["coefficients"] = fractions(report.coefficients);
    out["mod2_ok"] = report.mod2_ok;
    auto failing = ordered_json::array();
    for (auto s : report.mod2_failures)
        failing.push_back(std::to_string(s));
    out["mod2_failures"] = failing;
    out["degree_ok"] = report.degree_ok;
    out["family_rank_bound"] = to_decimal(report.family_rank_bound);
    out["total_bound"] = to_decimal(report.total_bound);
    out["matches_a_n"] = report.matches_a_n;
    if (report.witness) {
        const auto& w = *report.witness;
        ordered_json witness;
        witness["size"] = std::to_string(w.size);
        witness["independent"] = w.independent ? ordered_json(*w.independent) : ordered_json(nullptr);
        auto families = ordered_json::array();
        for (const auto& f : w.families) {
            ordered_json fj;
            fj["family"] = f.label;
            fj["size"] = std::to_string(f.size);
            fj["congruent_to_identity_mod2"] = f.congruent_to_identity;
            fj["gf2_rank"] = std::to_string(f.gf2_rank);
            fj["full_rank"] = f.full_rank;
            families.push_back(fj);
        }
        witness["families"] = families;
        witness["within_bound"] = w.within_bound;
        witness["equality"] = w.equality;
        out["witness"] = witness;
    } else {
        out["witness"] = nullptr;
    }
    out["valid"] = report.valid;
    out["reasons"] = report.reasons;
    return out;
}

/// Result of one CLI command.
struct RunReport {
    std::string command;
    ordered_json parameters = ordered_json::object();
    ordered_json results = ordered_json::object();
    ordered_json validity = ordered_json::object();
    double elapsed_seconds = 0.0;

    bool ok() const {
        for (const auto& [key, value] : validity.items())
            if (value.is_boolean() && !value.get<bool>())
                return false;
        return true;
    }
};

inline std::string format_seconds(double seconds) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6f", seconds);
    return buffer;
}

inline ordered_json to_json(const RunReport& report, bool include_timing = true) {
    ordered_json out;
    out["command"] = report.command;
    out["parameters"] = report.parameters;
    out["results"] = report.results;
    out["validity"] = report.validity;
    out["ok"] = report.ok();
    if (include_timing)
        out["timing"] = {{"elapsed_seconds", format_seconds(report.elapsed_seconds)}};
    return out;
}

enum class output_format { text, json, csv };

namespace detail {

inline std::string scalar_text(const ordered_json& value) {
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_null())
        return "null";
    return value.dump();
}

inline void flatten(const ordered_json& value, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
    if (value.is_object() && !value.empty()) {
        for (const auto& [key, child] : value.items())
            flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
        for (std::size_t i = 0; i < value.size(); ++i)
            flatten(value[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (value.is_array()) {
        std::string joined;
        for (const auto& item : value)
            joined += (joined.empty() ? "" : " ") + scalar_text(item);
        out.emplace_back(prefix, "[" + joined + "]");
    } else {
        out.emplace_back(prefix, scalar_text(value));
    }
}

inline std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace detail

/// Renders a report. With a "rows" array of flat objects in results, CSV is
/// a table with one line per row; otherwise CSV is key,value pairs.
inline std::string render(const RunReport& report, output_format format, bool include_timing = true) {
    const auto doc = to_json(report, include_timing);
    if (format == output_format::json)
        return doc.dump(2) + "\n";

    if (format == output_format::csv && report.results.contains("rows") && report.results["rows"].is_array() &&
        !report.results["rows"].empty()) {
        const auto& rows = report.results["rows"];
        std::string out;
        bool first = true;
        for (const auto& [key, value] : rows.front().items()) {
            out += (first ? "" : ",") + detail::csv_field(key);
            first = false;
        }
        out += "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                out += (first ? "" : ",") + detail::csv_field(detail::scalar_text(value));
                first = false;
            }
            out += "\n";
        }
        return out;
    }

    std::vector<std::pair<std::string, std::string>> lines;
    detail::flatten(doc, "", lines);
    std::string out = format == output_format::csv ? "key,value\n" : "";
    for (const auto& [key, value] : lines) {
        if (format == output_format::csv)
            out += detail::csv_field(key) + "," + detail::csv_field(value) + "\n";
        else
            out += key + ": " + value + "\n";
    }
    return out;
}

inline ordered_json error_object(const error& e) {
    return {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

} // namespace omega
