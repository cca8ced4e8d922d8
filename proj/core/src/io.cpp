/*
Copyright 2026 The galois-lines Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "galois/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace galois {

using json = nlohmann::ordered_json;

namespace {

json scalar_to_json(const CycloNum& v) {
    json c = json::array();
    for (const auto& r : v.coords()) {
        c.push_back(r.str());
    }
    return json{{"c", std::move(c)}};
}

CycloNum scalar_from_json(const json& j, const FieldPtr& field) {
    if (!j.is_object() || !j.contains("c") || !j["c"].is_array()) {
        throw parse_error("scalar must be an object with a 'c' array");
    }
    const auto& arr = j["c"];
    if (arr.size() != field->degree()) {
        throw parse_error("scalar has " + std::to_string(arr.size()) + " coordinates, expected " +
                          std::to_string(field->degree()));
    }
    std::vector<Rational> coords;
    coords.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_string()) {
            throw parse_error("scalar coordinates must be rational strings");
        }
        coords.push_back(Rational::parse(e.get<std::string>()));
    }
    return CycloNum(field, std::move(coords));
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < m.cols(); ++j) {
            row.push_back(scalar_to_json(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j, const FieldPtr& field, unsigned rows, unsigned cols) {
    if (!j.is_array() || j.size() != rows) {
        throw parse_error("matrix must have " + std::to_string(rows) + " rows");
    }
    Mat m(field, rows, cols);
    for (unsigned i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw parse_error("matrix row must have " + std::to_string(cols) + " entries");
        }
        for (unsigned k = 0; k < cols; ++k) {
            m.at(i, k) = scalar_from_json(j[i][k], field);
        }
    }
    return m;
}

json form_to_json(const HomForm& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(json::array(
            {scalar_to_json(c), json::array({e.e[0], e.e[1], e.e[2], e.e[3]})}));
    }
    return terms;
}

HomForm form_from_json(const json& j, const FieldPtr& field, unsigned degree) {
    if (!j.is_array()) {
        throw parse_error("form must be an array of [coefficient, exponents] pairs");
    }
    std::vector<std::pair<CycloNum, Exponents>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != 4) {
            throw parse_error("form term must be [coefficient, [eX,eY,eZ,eW]]");
        }
        Exponents e;
        for (unsigned i = 0; i < 4; ++i) {
            if (!t[1][i].is_number_unsigned()) {
                throw parse_error("exponents must be non-negative integers");
            }
            e.e[i] = t[1][i].get<unsigned>();
        }
        if (e.total() != degree) {
            throw parse_error("form term has the wrong degree");
        }
        terms.emplace_back(scalar_from_json(t[0], field), e);
    }
    return HomForm::from_terms(field, degree, terms);
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw parse_error("malformed JSON");
    }
    return j;
}

FieldPtr field_from(const json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j["conductor"].is_number_unsigned()) {
        throw parse_error("file must carry a positive integer 'conductor'");
    }
    const unsigned n = j["conductor"].get<unsigned>();
    if (n == 0) {
        throw parse_error("conductor must be positive");
    }
    return CyclotomicField::create(n);
}

} // namespace

CurveFile parse_curve(const std::string& text) {
    const json j = parse_text(text);
    FieldPtr field = field_from(j);
    if (!j.contains("Q") || !j.contains("F")) {
        throw parse_error("curve file needs 'Q' and 'F'");
    }
    HomForm q = form_from_json(j["Q"], field, 2);
    HomForm f = form_from_json(j["F"], field, 3);
    return CurveFile{std::move(field), std::move(q), std::move(f)};
}

GroupFile parse_group(const std::string& text) {
    const json j = parse_text(text);
    FieldPtr field = field_from(j);
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
        throw parse_error("group file needs a nonempty 'generators' array");
    }
    std::vector<Mat> gens;
    for (const auto& g : j["generators"]) {
        gens.push_back(matrix_from_json(g, field, 4, 4));
    }
    return GroupFile{std::move(field), std::move(gens)};
}

LinesFile parse_lines(const std::string& text) {
    const json j = parse_text(text);
    FieldPtr field = field_from(j);
    const char* key = j.contains("lines") ? "lines" : (j.contains("records") ? "records" : nullptr);
    if (key == nullptr || !j[key].is_array()) {
        throw parse_error("line file needs a 'lines' or 'records' array");
    }
    std::vector<Mat> duals;
    for (const auto& e : j[key]) {
        if (!e.is_object() || !e.contains("dual")) {
            throw parse_error("each line entry needs a 'dual' 2x4 matrix");
        }
        duals.push_back(matrix_from_json(e["dual"], field, 2, 4));
    }
    return LinesFile{std::move(field), std::move(duals)};
}

ReportFile parse_report(const std::string& text) {
    const json j = parse_text(text);
    ReportFile out;
    out.field = field_from(j);
    if (!j.contains("records") || !j["records"].is_array()) {
        throw parse_error("report file needs a 'records' array");
    }
    if (j.contains("types")) {
        for (const auto& t : j["types"]) {
            out.types.push_back(t.get<std::string>());
        }
    }
    const auto type_of = [](const std::string& s) {
        for (const LineType t : {LineType::S3, LineType::K4, LineType::C4, LineType::C5,
                                 LineType::C6}) {
            if (to_string(t) == s) {
                return t;
            }
        }
        throw parse_error("unknown line type '" + s + "'");
    };
    if (j.contains("counts")) {
        for (const auto& [key, value] : j["counts"].items()) {
            out.counts[type_of(key)] = value.get<unsigned>();
        }
    }
    for (const auto& r : j["records"]) {
        if (!r.contains("dual") || !r.contains("type") || !r.contains("degree")) {
            throw parse_error("report record needs 'type', 'degree' and 'dual'");
        }
        GaloisLineRecord rec{
            ProjLine::from_dual_rows(matrix_from_json(r["dual"], out.field, 2, 4)),
            {},
            r["degree"].get<unsigned>(),
            type_of(r["type"].get<std::string>()),
            {}};
        if (r.contains("stabilizer")) {
            for (const auto& i : r["stabilizer"]) {
                rec.stabilizer.push_back(i.get<unsigned>());
            }
        }
        if (r.contains("provenance")) {
            for (const auto& p : r["provenance"]) {
                rec.provenance.push_back(p.get<std::string>());
            }
        }
        out.records.push_back(std::move(rec));
    }
    const auto strings = [&j](const char* key, std::vector<std::string>& dst) {
        if (j.contains(key)) {
            for (const auto& s : j[key]) {
                dst.push_back(s.get<std::string>());
            }
        }
    };
    strings("violations", out.violations);
    strings("skipped", out.skipped);
    strings("unresolved_families", out.unresolved_families);
    return out;
}

std::string curve_to_json(const HomForm& quadric, const HomForm& cubic) {
    json j;
    j["conductor"] = quadric.field()->conductor();
    j["Q"] = form_to_json(quadric);
    j["F"] = form_to_json(cubic);
    return j.dump(2) + "\n";
}

std::string group_to_json(const FieldPtr& field, const std::vector<Mat>& generators) {
    json j;
    j["conductor"] = field->conductor();
    json gens = json::array();
    for (const auto& g : generators) {
        gens.push_back(matrix_to_json(g));
    }
    j["generators"] = std::move(gens);
    return j.dump(2) + "\n";
}

std::string lines_to_json(const FieldPtr& field, const std::vector<ProjLine>& lines) {
    json j;
    j["conductor"] = field->conductor();
    json arr = json::array();
    for (const auto& l : lines) {
        arr.push_back(json{{"dual", matrix_to_json(l.dual().basis())}});
    }
    j["lines"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string elements_to_json(const FiniteMatrixGroup& g) {
    json j;
    j["conductor"] = g.field()->conductor();
    j["order"] = g.order();
    json arr = json::array();
    for (const auto& e : g.elements()) {
        arr.push_back(matrix_to_json(e.matrix()));
    }
    j["elements"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_to_json(const ScanReport& report, const FieldPtr& field) {
    json j;
    j["conductor"] = field->conductor();
    json types = json::array();
    if (report.options.s3) types.push_back("s3");
    if (report.options.k4) types.push_back("k4");
    if (report.options.cyclic) types.push_back("cyclic");
    j["types"] = std::move(types);
    json counts;
    for (const LineType t : {LineType::S3, LineType::K4, LineType::C4, LineType::C5,
                             LineType::C6}) {
        counts[to_string(t)] = report.count(t);
    }
    j["counts"] = std::move(counts);
    json records = json::array();
    for (const auto& rec : report.records) {
        json r;
        r["type"] = to_string(rec.type);
        r["degree"] = rec.degree;
        r["dual"] = matrix_to_json(rec.line.dual().basis());
        r["stabilizer"] = rec.stabilizer;
        r["provenance"] = rec.provenance;
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    j["violations"] = report.violations;
    j["skipped"] = report.skipped;
    j["unresolved_families"] = report.unresolved_families;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw error("cannot write " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw error("short write to " + path);
    }
}

} // namespace galois
