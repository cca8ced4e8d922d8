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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/io.hpp"
#include "test_support.hpp"

using namespace galois;
namespace ds = galois::datasets;
namespace gt = galois::testing;

TEST_CASE("curve files round-trip") {
    const auto f15 = ds::bring_field();
    const CurveModel curve = ds::bring_curve(f15);
    const std::string text = curve_to_json(curve.quadric(), curve.cubic());
    const CurveFile parsed = parse_curve(text);
    CHECK(parsed.field->conductor() == 15);
    CHECK(parsed.quadric == curve.quadric());
    CHECK(parsed.cubic == curve.cubic());
    // determinism: serialize -> parse -> serialize is byte identical
    CHECK(curve_to_json(parsed.quadric, parsed.cubic) == text);
}

TEST_CASE("group files round-trip") {
    const auto f15 = ds::bring_field();
    const auto gens = ds::bring_generators(f15);
    const std::string text = group_to_json(f15, gens);
    const GroupFile parsed = parse_group(text);
    REQUIRE(parsed.generators.size() == gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(parsed.generators[i] == gens[i]);
    }
    CHECK(group_to_json(parsed.field, parsed.generators) == text);
}

TEST_CASE("line files round-trip and reports can be read back as lines") {
    const auto f15 = ds::bring_field();
    const auto lines = ds::bring_s3_lines(f15);
    const std::string text = lines_to_json(f15, lines);
    const LinesFile parsed = parse_lines(text);
    REQUIRE(parsed.duals.size() == lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(ProjLine::from_dual_rows(parsed.duals[i]) == lines[i]);
    }

    // a report is accepted wherever a line file is
    ScanReport rep;
    rep.options.s3 = true;
    for (const auto& l : lines) {
        rep.records.push_back(GaloisLineRecord{l, {0}, 6, LineType::S3, {"test"}});
    }
    rep.counts[LineType::S3] = static_cast<unsigned>(lines.size());
    const LinesFile from_report = parse_lines(report_to_json(rep, f15));
    CHECK(from_report.duals.size() == lines.size());
}

TEST_CASE("scalar coordinates accept integers with and without /1") {
    const std::string text = R"({
      "conductor": 3,
      "generators": [[
        [{"c": ["1", "0"]}, {"c": ["0", "0"]}, {"c": ["0", "0"]}, {"c": ["0", "0"]}],
        [{"c": ["0", "0"]}, {"c": ["2/1", "0"]}, {"c": ["0", "0"]}, {"c": ["0", "0"]}],
        [{"c": ["0", "0"]}, {"c": ["0", "0"]}, {"c": ["1", "-2/3"]}, {"c": ["0", "0"]}],
        [{"c": ["0", "0"]}, {"c": ["0", "0"]}, {"c": ["0", "0"]}, {"c": ["1", "0"]}]
      ]]
    })";
    const GroupFile parsed = parse_group(text);
    const auto field = parsed.field;
    CHECK(parsed.generators[0].at(1, 1) == CycloNum(field, Rational(2)));
    CHECK(parsed.generators[0].at(2, 2) ==
          CycloNum(field, std::vector<Rational>{Rational(1), Rational(-2, 3)}));
}

TEST_CASE("malformed input is rejected with parse_error") {
    CHECK_THROWS_AS(parse_curve("{"), parse_error);
    CHECK_THROWS_AS(parse_curve(R"({"Q": [], "F": []})"), parse_error);
    CHECK_THROWS_AS(parse_curve(R"({"conductor": 0, "Q": [], "F": []})"), parse_error);
    CHECK_THROWS_AS(parse_group(R"({"conductor": 3, "generators": []})"), parse_error);
    // wrong coordinate count for the conductor
    CHECK_THROWS_AS(parse_group(R"({"conductor": 3, "generators": [[
        [{"c": ["1"]}, {"c": ["0"]}, {"c": ["0"]}, {"c": ["0"]}],
        [{"c": ["0"]}, {"c": ["1"]}, {"c": ["0"]}, {"c": ["0"]}],
        [{"c": ["0"]}, {"c": ["0"]}, {"c": ["1"]}, {"c": ["0"]}],
        [{"c": ["0"]}, {"c": ["0"]}, {"c": ["0"]}, {"c": ["1"]}]
      ]]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_lines(R"({"conductor": 3})"), parse_error);
    CHECK_THROWS_AS(Rational::parse("1e5"), parse_error);
}

TEST_CASE("reports serialize deterministically with sorted records") {
    const auto f3 = ds::trigonal_field();
    const auto group = FiniteMatrixGroup::close(
        {ProjTransform(gt::s3_rotation(f3)), ProjTransform(gt::s3_flip(f3))});
    const CurveModel curve = gt::s3_micro_curve(f3);
    ScanOptions opt;
    opt.s3 = true;
    const ScanReport a = find_galois_lines(curve, group, opt);
    const ScanReport b = find_galois_lines(curve, group, opt);
    CHECK(report_to_json(a, f3) == report_to_json(b, f3));
}

TEST_CASE("reports round-trip through parse_report") {
    const auto f3 = ds::trigonal_field();
    const auto group = FiniteMatrixGroup::close(
        {ProjTransform(gt::s3_rotation(f3)), ProjTransform(gt::s3_flip(f3))});
    ScanOptions opt;
    opt.s3 = true;
    const ScanReport rep = find_galois_lines(gt::s3_micro_curve(f3), group, opt);
    const std::string text = report_to_json(rep, f3);
    const ReportFile parsed = parse_report(text);
    REQUIRE(parsed.records.size() == rep.records.size());
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(parsed.records[i].line == rep.records[i].line);
        CHECK(parsed.records[i].type == rep.records[i].type);
        CHECK(parsed.records[i].degree == rep.records[i].degree);
        CHECK(parsed.records[i].stabilizer == rep.records[i].stabilizer);
    }
    CHECK(parsed.counts == rep.counts);
    CHECK(parsed.violations == rep.violations);
    CHECK(parsed.skipped == rep.skipped);
    // print(parse(print(x))) is byte-identical to print(x)
    ScanReport rebuilt;
    rebuilt.options = rep.options;
    rebuilt.records = parsed.records;
    rebuilt.counts = parsed.counts;
    rebuilt.violations = parsed.violations;
    rebuilt.skipped = parsed.skipped;
    rebuilt.unresolved_families = parsed.unresolved_families;
    CHECK(report_to_json(rebuilt, f3) == text);
}
