#include "weylk/report.hpp"

#include <numeric>
#include <sstream>

#include "weylk/error.hpp"

namespace weylk::report {

namespace {

using exact_linalg::Int;
using exact_linalg::IntMatrix;
using exact_linalg::Rat;
using exact_linalg::RatVector;

// One scalar JSON value as plain cell text (no JSON string quoting).
std::string cell_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump(); // numbers, arrays, objects: compact deterministic dump
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

void md_row(std::ostringstream& os, const std::vector<std::string>& cells) {
    os << '|';
    for (const auto& c : cells) os << ' ' << c << " |";
    os << '\n';
}

void md_table(std::ostringstream& os, const std::vector<std::string>& headers,
              const Json& rows, const std::vector<std::string>& keys) {
    md_row(os, headers);
    std::vector<std::string> rule(headers.size(), "---");
    md_row(os, rule);
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        cells.reserve(keys.size());
        for (const auto& k : keys)
            cells.push_back(r.contains(k) ? cell_text(r.at(k)) : std::string());
        md_row(os, cells);
    }
}

std::string md_classes(const Json& doc) {
    std::ostringstream os;
    os << "# Conjugacy class representatives and the elementary part of their centralisers\n\n";
    os << "Group order: " << cell_text(doc.at("group_order"))
       << ", conjugacy classes: " << cell_text(doc.at("class_count")) << "\n\n";
    md_table(os,
             {"Carter type", "Representative", "Eigenvalues", "Class size", "Centraliser order",
              "Elementary generators", "Structure", "Index", "Status"},
             doc.at("rows"),
             {"carter_type", "word", "eigenvalues", "class_size", "centraliser_order",
              "elementary_generators", "structure", "elementary_index", "status"});
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_fixed_sets(const Json& doc) {
    std::ostringstream os;
    os << "# Centralisers, fixed sets and quotients\n\n";
    md_table(os,
             {"Type", "Representative", "Side", "Fixed set", "Components", "Orbit count",
              "Ramified", "Status"},
             doc.at("rows"),
             {"carter_type", "word", "side", "fixed_set", "components", "orbit_count", "ramified",
              "status"});
    if (doc.contains("ramified_classes")) {
        os << "\nRamified classes (centre meets a non-identity component on the root side): ";
        bool first = true;
        for (const auto& label : doc.at("ramified_classes")) {
            if (!first) os << ", ";
            os << label.get<std::string>();
            first = false;
        }
        os << '\n';
    }
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_duality(const Json& doc) {
    std::ostringstream os;
    os << "# Component group duality and the twisted pairing\n\n";
    md_table(os,
             {"Type", "mu", "Component group", "Pairing", "Well-defined", "Perfect", "Equivariant",
              "Status"},
             doc.at("rows"),
             {"carter_type", "mu", "component_group", "pairing", "well_defined", "nondegenerate",
              "equivariant", "status"});
    if (doc.contains("notices"))
        for (const auto& n : doc.at("notices")) os << '\n' << n.get<std::string>() << '\n';
    if (doc.contains("sweep")) {
        const Json& sw = doc.at("sweep");
        os << "\nMinor-gcd sweep (" << cell_text(sw.at("mode")) << "): checked "
           << cell_text(sw.at("checked")) << " elements on both sides - "
           << cell_text(sw.at("status")) << '\n';
    }
    if (doc.contains("example_minor_gcd"))
        os << "Example matrix 4x4 minor gcd: " << cell_text(doc.at("example_minor_gcd")) << '\n';
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_sectors(const Json& doc) {
    std::ostringstream os;
    os << "# Sector cohomology\n\n";
    md_table(os, {"Type", "Side", "Betti", "Euler", "Components", "Orbits", "Status"},
             doc.at("rows"),
             {"carter_type", "side", "betti", "euler", "components", "orbit_count", "status"});
    if (doc.contains("note")) os << '\n' << doc.at("note").get<std::string>() << '\n';
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_ktheory(const Json& doc) {
    std::ostringstream os;
    os << "# K-theory of the extended quotient\n\n";
    for (auto it = doc.at("totals").begin(); it != doc.at("totals").end(); ++it)
        os << it.key() << " side: K0 = Z^" << cell_text(it.value().at("k0")) << ", K1 = Z^"
           << cell_text(it.value().at("k1")) << '\n';
    os << "Sides agree: " << cell_text(doc.at("agree")) << "\n\n";
    md_table(os, {"Type", "Side", "Betti", "Euler", "Components", "Orbits", "Status"},
             doc.at("rows"),
             {"carter_type", "side", "betti", "euler", "components", "orbit_count", "status"});
    if (doc.contains("note")) os << '\n' << doc.at("note").get<std::string>() << '\n';
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_power_map(const Json& doc) {
    std::ostringstream os;
    os << "# Prime-power map on conjugacy classes\n\n";
    md_table(os, {"Type", "k", "Power class", "Centraliser inclusion", "Status"}, doc.at("rows"),
             {"carter_type", "k", "power_type", "centraliser_inclusion", "status"});
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_verify_all(const Json& doc) {
    std::ostringstream os;
    os << "# Verification summary\n\n";
    md_table(os, {"Suite", "Exit code", "Status"}, doc.at("rows"),
             {"name", "exit_code", "status"});
    if (doc.contains("first_failure") && !doc.at("first_failure").get<std::string>().empty())
        os << "\nFirst failure: " << doc.at("first_failure").get<std::string>() << '\n';
    os << "\nOverall: " << cell_text(doc.at("status")) << '\n';
    return os.str();
}

std::string md_dump(const Json& doc) {
    std::ostringstream os;
    os << "# Root system dump\n\n```json\n" << doc.dump(2) << "\n```\n";
    return os.str();
}

} // namespace

std::string spectrum_display(const std::vector<std::pair<int, int>>& cyclotomic) {
    // Each (d, mult) contributes the primitive d-th roots of unity mult times;
    // display follows the e(k/n) = exp(k pi i / n) shorthand with 1, -1, i, -i
    // spelled out.
    std::vector<std::string> parts;
    for (const auto& [d, mult] : cyclotomic) {
        std::vector<std::string> cycle;
        for (int k = 0; k < d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            // primitive d-th root exp(2 pi i k / d) = e(2k / d)
            int num = 2 * k, den = d;
            const int g = std::gcd(num, den);
            if (g > 0) {
                num /= g;
                den /= g;
            }
            if (num == 0) cycle.push_back("1");
            else if (num == den) cycle.push_back("-1");
            else if (den == 2 && num == 1) cycle.push_back("i");
            else if (den == 2 && num == 3) cycle.push_back("-i");
            else cycle.push_back("e(" + std::to_string(num) + "/" + std::to_string(den) + ")");
        }
        for (int m = 0; m < mult; ++m)
            for (const auto& s : cycle) parts.push_back(s);
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

std::string fixed_set_display(int torus_dim, const std::vector<Int>& factors) {
    std::vector<std::string> parts;
    if (torus_dim > 0) parts.push_back("T^" + std::to_string(torus_dim));
    for (const Int& f : factors) parts.push_back("C_" + f.get_str());
    if (parts.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        out += parts[i];
    }
    return out;
}

Json rational_json(const Rat& q) { return exact_linalg::rat_str(q); }

Json rational_vector_json(const RatVector& v) {
    Json arr = Json::array();
    for (const Rat& q : v) arr.push_back(rational_json(q));
    return arr;
}

Json int_matrix_json(const IntMatrix& m) {
    Json arr = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string to_json_text(const Json& doc) { return doc.dump(2) + "\n"; }

std::string to_csv_text(const Json& doc) {
    if (!doc.contains("rows") || !doc.at("rows").is_array() || doc.at("rows").empty())
        return "";
    const Json& rows = doc.at("rows");
    // Header = sorted union of keys (sorted by the json object ordering).
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
        keys.push_back(it.key());
    std::ostringstream os;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(keys[i]);
    }
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(r.contains(keys[i]) ? cell_text(r.at(keys[i])) : std::string());
        }
        os << '\n';
    }
    return os.str();
}

std::string to_markdown_text(const Json& doc) {
    const std::string cmd = doc.value("command", "");
    if (cmd == "classes") return md_classes(doc);
    if (cmd == "fixed-sets") return md_fixed_sets(doc);
    if (cmd == "duality") return md_duality(doc);
    if (cmd == "sectors") return md_sectors(doc);
    if (cmd == "ktheory") return md_ktheory(doc);
    if (cmd == "power-map") return md_power_map(doc);
    if (cmd == "verify-all") return md_verify_all(doc);
    if (cmd == "dump") return md_dump(doc);
    throw Error("no markdown emitter for command '" + cmd + "'");
}

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return to_json_text(doc);
    if (format == "csv") return to_csv_text(doc);
    if (format == "md") return to_markdown_text(doc);
    throw Error("unknown format '" + format + "'");
}

} // namespace weylk::report
