#include "hurwitz/report.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz::cli {

namespace {

using nlohmann::json;

bool is_complex(const json& v) { return v.is_object() && v.contains("re") && v.contains("im"); }

std::string text_of(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (is_complex(v)) {
        const std::string re = v["re"].get<std::string>();
        const std::string im = v["im"].get<std::string>();
        if (im == "0") return re;
        return re + (im.front() == '-' ? "" : "+") + im + "i";
    }
    if (v.is_array()) {
        std::string out;
        for (const json& e : v) out += (out.empty() ? "" : "; ") + text_of(e);
        return out.empty() ? "-" : out;
    }
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// A column is split into _re/_im in CSV when any row holds a complex cell.
bool complex_column(const std::vector<json>& rows, const std::string& col) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const json& r) { return r.contains(col) && is_complex(r[col]); });
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    if (r.rows.size() == 1) {
        size_t width = 0;
        for (const auto& c : r.columns) width = std::max(width, c.size());
        for (const auto& c : r.columns) {
            const json& row = r.rows.front();
            out << c << std::string(width - c.size(), ' ') << "  " << text_of(row.contains(c) ? row[c] : json())
                << "\n";
        }
    } else if (!r.rows.empty()) {
        std::vector<std::vector<std::string>> cells;
        std::vector<size_t> width;
        for (const auto& c : r.columns) width.push_back(c.size());
        for (const json& row : r.rows) {
            std::vector<std::string> line;
            for (size_t i = 0; i < r.columns.size(); ++i) {
                const std::string& c = r.columns[i];
                line.push_back(text_of(row.contains(c) ? row[c] : json()));
                width[i] = std::max(width[i], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        const auto emit = [&](const std::vector<std::string>& line) {
            for (size_t i = 0; i < line.size(); ++i) {
                out << line[i];
                if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
            }
            out << "\n";
        };
        emit(r.columns);
        for (const auto& line : cells) emit(line);
    }
    return out.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    std::vector<bool> split;
    std::vector<std::string> header;
    for (const auto& c : r.columns) {
        split.push_back(complex_column(r.rows, c));
        if (split.back()) {
            header.push_back(c + "_re");
            header.push_back(c + "_im");
        } else {
            header.push_back(c);
        }
    }
    const auto emit = [&](const std::vector<std::string>& line) {
        for (size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_field(line[i]);
        out << "\n";
    };
    emit(header);
    for (const json& row : r.rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < r.columns.size(); ++i) {
            const json v = row.contains(r.columns[i]) ? row[r.columns[i]] : json();
            if (split[i]) {
                line.push_back(is_complex(v) ? v["re"].get<std::string>() : "");
                line.push_back(is_complex(v) ? v["im"].get<std::string>() : "");
            } else {
                line.push_back(v.is_null() || (v.is_array() && v.empty()) ? "" : text_of(v));
            }
        }
        emit(line);
    }
    return out.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw DomainError("unknown format '" + name + "' (text|csv|json)");
}

json real_cell(const MpReal& x, int digits) { return x.to_string(digits); }

json complex_cell(const MpComplex& z, int digits) {
    return json{{"im", z.im().to_string(digits)}, {"re", z.re().to_string(digits)}};
}

json Report::to_json(const std::string& version) const {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = json::array();
    for (const json& row : rows) doc["results"].push_back(row);
    doc["errors"] = errors;
    doc["version"] = version;
    return doc;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

std::string Report::render(Format f, const std::string& version) const {
    switch (f) {
        case Format::Text: return render_text(*this);
        case Format::Csv: return render_csv(*this);
        case Format::Json: return dump_json(to_json(version));
    }
    return {};
}

}  // namespace hurwitz::cli
