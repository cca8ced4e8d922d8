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

#pragma once

#include <string>

#include "galois/scan.hpp"

namespace galois {

// JSON text formats. Scalars are {"c": ["p/q", ...]} with phi(n) rational
// strings in power-basis order (integers may omit "/1"); matrices are
// nested arrays of scalars; forms are [coefficient, [eX,eY,eZ,eW]] pairs.
// Every file carries its conductor. Serialization is deterministic:
// identical inputs produce byte-identical text.

struct CurveFile {
    FieldPtr field;
    HomForm quadric;
    HomForm cubic;
};

struct GroupFile {
    FieldPtr field;
    std::vector<Mat> generators;
};

struct LinesFile {
    FieldPtr field;
    std::vector<Mat> duals; // one 2x4 matrix per line
};

/// A scan report read back from disk. Line data is canonical on write, so
/// records rebuild into the same ProjLine values.
struct ReportFile {
    FieldPtr field;
    std::vector<std::string> types;
    std::map<LineType, unsigned> counts;
    std::vector<GaloisLineRecord> records;
    std::vector<std::string> violations;
    std::vector<std::string> skipped;
    std::vector<std::string> unresolved_families;
};

CurveFile parse_curve(const std::string& json_text);
GroupFile parse_group(const std::string& json_text);
/// Accepts both plain line files ({"lines": [{"dual": ...}]}) and scan
/// reports ({"records": [{"dual": ...}]}).
LinesFile parse_lines(const std::string& json_text);
ReportFile parse_report(const std::string& json_text);

std::string curve_to_json(const HomForm& quadric, const HomForm& cubic);
std::string group_to_json(const FieldPtr& field, const std::vector<Mat>& generators);
std::string lines_to_json(const FieldPtr& field, const std::vector<ProjLine>& lines);
std::string elements_to_json(const FiniteMatrixGroup& g);
std::string report_to_json(const ScanReport& report, const FieldPtr& field);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace galois
