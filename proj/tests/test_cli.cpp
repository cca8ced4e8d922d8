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

// Exit-code contract of the command line tool, driven end to end against
// the shipped data. 0 = success, 1 = failed validation / mismatch,
// 2 = parse error, 4 = incomplete scan.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "galois/io.hpp"
#include "test_support.hpp"

using namespace galois;
namespace ds = galois::datasets;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GALOIS_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe) != nullptr) {
        r.out += buf;
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& rel) {
    return std::string(GALOIS_DATA_DIR) + "/" + rel;
}

fs::path tmp_dir() {
    const fs::path p = fs::temp_directory_path() / "galois-cli-test";
    fs::create_directories(p);
    return p;
}

std::string write_tmp(const std::string& name, const std::string& content) {
    const fs::path p = tmp_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

} // namespace

TEST_CASE("check: valid dataset passes and prints the quadric rank") {
    const auto r = run_cli("check --curve " + data("bring-s5/curve.json") + " --group " +
                           data("bring-s5/group.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rank Q = 4") != std::string::npos);
}

TEST_CASE("check: a non-automorphism generator exits 1 with the failing solve shown") {
    // diag(1,1,1,2) scales XW and YZ differently.
    const auto f15 = ds::bring_field();
    Mat bad = Mat::identity(f15, 4);
    bad.at(3, 3) = CycloNum(f15, Rational(2));
    const std::string path = write_tmp("bad-gen.json", group_to_json(f15, {bad}));
    const auto r = run_cli("check --curve " + data("bring-s5/curve.json") + " --group " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("NOT an automorphism") != std::string::npos);
    CHECK(r.out.find("g*Q") != std::string::npos);
}

TEST_CASE("check: malformed JSON exits 2") {
    const std::string path = write_tmp("malformed.json", "{ not json");
    const auto r = run_cli("check --curve " + path + " --group " +
                           data("bring-s5/group.json"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("close: orders of the shipped generator sets") {
    CHECK(run_cli("close --group " + data("standard-forms/s3-group.json")).out ==
          "order 6\n");
    CHECK(run_cli("close --group " + data("standard-forms/k4-group.json")).out ==
          "order 4\n");
    const auto big = run_cli("close --group " + data("bring-s5/group.json"));
    CHECK(big.exit_code == 0);
    CHECK(big.out == "order 120\n");
}

TEST_CASE("close: cap overrun exits 1, dump writes the element list") {
    const auto capped = run_cli("close --group " + data("bring-s5/group.json") +
                                " --group-cap 50");
    CHECK(capped.exit_code == 1);

    const std::string dump = (tmp_dir() / "elements.json").string();
    const auto r = run_cli("close --group " + data("standard-forms/s3-group.json") +
                           " --dump " + dump);
    CHECK(r.exit_code == 0);
    const std::string text = read_file(dump);
    CHECK(text.find("\"order\": 6") != std::string::npos);
}

TEST_CASE("find: refuses unverified generators before scanning") {
    const auto f15 = ds::bring_field();
    Mat bad = Mat::identity(f15, 4);
    bad.at(3, 3) = CycloNum(f15, Rational(2));
    const std::string path = write_tmp("bad-gen2.json", group_to_json(f15, {bad}));
    const auto r = run_cli("find --curve " + data("bring-s5/curve.json") + " --group " + path +
                           " --types s3");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("refusing to scan") != std::string::npos);
}

TEST_CASE("find: micro dataset scan is clean") {
    const auto r = run_cli("find --curve " + data("standard-forms/s3-curve.json") + " --group " +
                           data("standard-forms/s3-group.json") + " --types s3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "S3: 1\n");
}

TEST_CASE("find: a session conductor missing needed roots yields an incomplete scan") {
    // A rational S3 (the permutation matrices of (Y Z W) and (Z W)) acting
    // on a symmetric rational curve. Over Q there is no cube root of unity,
    // so the signature filter cannot decompose the 3-cycle and the subgroup
    // is skipped (exit 4); over Q(zeta_3) the same scan completes.
    const auto f1 = CyclotomicField::create(1);
    const CycloNum one = CycloNum::one(f1);
    Mat cyc(f1, 4, 4);
    cyc.at(0, 0) = one;
    cyc.at(1, 3) = one; // Y <- W
    cyc.at(2, 1) = one; // Z <- Y
    cyc.at(3, 2) = one; // W <- Z
    Mat swap(f1, 4, 4);
    swap.at(0, 0) = one;
    swap.at(1, 1) = one;
    swap.at(2, 3) = one;
    swap.at(3, 2) = one;
    const HomForm qs = HomForm::from_terms(
        f1, 2, {{one, Exponents{{2, 0, 0, 0}}},
                {-one, Exponents{{0, 1, 1, 0}}},
                {-one, Exponents{{0, 1, 0, 1}}},
                {-one, Exponents{{0, 0, 1, 1}}}});
    const HomForm fs = HomForm::from_terms(
        f1, 3, {{one, Exponents{{0, 3, 0, 0}}},
                {one, Exponents{{0, 0, 3, 0}}},
                {one, Exponents{{0, 0, 0, 3}}}});
    const std::string sym_curve = write_tmp("sym-curve.json", curve_to_json(qs, fs));
    const std::string sym_group =
        write_tmp("sym-group.json", group_to_json(f1, {cyc, swap}));
    const auto r = run_cli("find --curve " + sym_curve + " --group " + sym_group +
                           " --types s3");
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("skipped") != std::string::npos);
    const auto ok = run_cli("find --curve " + sym_curve + " --group " + sym_group +
                            " --types s3 --conductor 3");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("diff: scaling a line's forms does not change the comparison") {
    // Hand-serialize the table with the first line's rows rescaled by
    // zeta_5 powers; the parser canonicalizes, so diff still matches.
    const auto f15 = ds::bring_field();
    const auto lines = ds::bring_s3_lines(f15);
    const CycloNum z = ds::zeta5(f15);
    nlohmann::ordered_json j;
    j["conductor"] = 15;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Mat dual = lines[i].dual().basis();
        if (i == 0) {
            for (unsigned col = 0; col < 4; ++col) {
                dual.at(0, col) *= z;
                dual.at(1, col) *= z * z;
            }
        }
        auto rows = nlohmann::ordered_json::array();
        for (unsigned r = 0; r < 2; ++r) {
            auto row = nlohmann::ordered_json::array();
            for (unsigned col = 0; col < 4; ++col) {
                auto coords = nlohmann::ordered_json::array();
                for (const auto& q : dual.at(r, col).coords()) {
                    coords.push_back(q.str());
                }
                row.push_back(nlohmann::ordered_json{{"c", coords}});
            }
            rows.push_back(row);
        }
        arr.push_back(nlohmann::ordered_json{{"dual", rows}});
    }
    j["lines"] = arr;
    const std::string scaled_path = write_tmp("scaled-lines.json", j.dump(2));
    const auto r = run_cli("diff --found " + scaled_path + " --expected " +
                           data("bring-s5/expected-s3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("line sets match") != std::string::npos);
}

TEST_CASE("diff: a missing line is reported with exit 1") {
    const auto f15 = ds::bring_field();
    auto lines = ds::bring_s3_lines(f15);
    lines.pop_back(); // drop the last table row
    const std::string path = write_tmp("missing-line.json", lines_to_json(f15, lines));
    const auto r = run_cli("diff --found " + path + " --expected " +
                           data("bring-s5/expected-s3.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("only in") != std::string::npos);
}

TEST_CASE("rho: count and reusable output") {
    const std::string out = (tmp_dir() / "rho.json").string();
    const auto r = run_cli("rho --c 0 --output " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rho candidates: 9\n");
    const auto closed = run_cli("close --group " + out);
    CHECK(closed.exit_code == 0);

    // irrational cubic: reported, not guessed
    const auto bad = run_cli("rho --c 1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("non-rational") != std::string::npos);

    // supplied roots route
    const auto supplied = run_cli("rho --c 0 --roots 3,-3,0");
    CHECK(supplied.exit_code == 0);
    CHECK(supplied.out == "rho candidates: 9\n");
}
