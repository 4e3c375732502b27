#pragma once

// Tabular command output rendered as text, CSV or JSON.
//
// Cells are JSON values: strings for real numbers (decimal at the requested
// digits), {"re","im"} objects for complex numbers, integers, booleans,
// null, or arrays of strings. The JSON document has the fixed top-level
// fields {command, inputs, results, errors, version}; keys are sorted, so
// parsing and re-dumping reproduces the same bytes.

#include "hurwitz/mp.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hurwitz::cli {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

/// Real and complex cells at `digits` significant digits, round-half-even.
nlohmann::json real_cell(const MpReal& x, int digits);
nlohmann::json complex_cell(const MpComplex& z, int digits);

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<std::string> columns;  // column order for text and CSV
    std::vector<nlohmann::json> rows;  // objects keyed by column
    std::vector<std::string> errors;

    nlohmann::json to_json(const std::string& version) const;
    std::string render(Format f, const std::string& version) const;
};

/// Canonical JSON text: two-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace hurwitz::cli
