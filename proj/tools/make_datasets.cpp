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

// Regenerates the shipped example data under a target directory (default:
// ./data). The builders in datasets.cpp are the source of truth; the
// committed JSON must match their output byte for byte, which is enforced
// by a test. Generation re-verifies the headline facts before writing.

#include <filesystem>
#include <iostream>

#include "datasets.hpp"
#include "galois/group.hpp"
#include "galois/io.hpp"
#include "galois/scan.hpp"

using namespace galois;
namespace ds = galois::datasets;
namespace fs = std::filesystem;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) {
        throw error("dataset sanity check failed: " + what);
    }
}

} // namespace

int main(int argc, char** argv) {
    const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("data");
    fs::create_directories(root / "bring-s5");
    fs::create_directories(root / "two-trigonal-c0");
    fs::create_directories(root / "standard-forms");

    try {
        // ---- bring-s5 ----
        const FieldPtr f15 = ds::bring_field();
        const CurveModel curve = ds::bring_curve(f15);
        const std::vector<Mat> gens = ds::bring_generators(f15);
        std::vector<ProjTransform> pgens;
        for (const auto& m : gens) {
            const ProjTransform g(m);
            require(check_automorphism(g, curve).ok, "bring-s5 generator is an automorphism");
            pgens.push_back(g);
        }
        require(FiniteMatrixGroup::close(pgens, 1000).order() == 120,
                "bring-s5 closure has order 120");
        write_file((root / "bring-s5" / "curve.json").string(),
                   curve_to_json(curve.quadric(), curve.cubic()));
        write_file((root / "bring-s5" / "group.json").string(), group_to_json(f15, gens));
        write_file((root / "bring-s5" / "expected-s3.json").string(),
                   lines_to_json(f15, ds::bring_s3_lines(f15)));
        write_file((root / "bring-s5" / "expected-k4.json").string(),
                   lines_to_json(f15, ds::bring_k4_lines(f15)));

        // ---- two-trigonal-c0 ----
        const FieldPtr f3 = ds::trigonal_field();
        const CurveModel tri = ds::two_trigonal_curve(f3, Rational(0));
        std::vector<Mat> tri_gens{ds::eta_g(f3), ds::eta_h(f3)};
        const auto rhos = two_trigonal_rho_candidates(CycloNum::zero(f3));
        require(rhos.size() == 9, "nine rho candidates at c = 0");
        for (const auto& r : rhos) {
            require(check_automorphism(r, tri).ok, "rho candidate is an automorphism");
            require(is_trace_zero_involution(r), "rho candidate is a trace-zero involution");
            tri_gens.push_back(r.witness());
        }
        write_file((root / "two-trigonal-c0" / "curve.json").string(),
                   curve_to_json(tri.quadric(), tri.cubic()));
        write_file((root / "two-trigonal-c0" / "group.json").string(),
                   group_to_json(f3, tri_gens));

        // ---- standard-forms ----
        const CurveModel s3c = ds::standard_s3_curve(f3);
        write_file((root / "standard-forms" / "s3-curve.json").string(),
                   curve_to_json(s3c.quadric(), s3c.cubic()));
        write_file((root / "standard-forms" / "s3-group.json").string(),
                   group_to_json(f3, {ds::standard_s3_rotation(f3), ds::standard_s3_flip(f3)}));
        const FieldPtr f1 = CyclotomicField::create(1);
        const CurveModel k4c = ds::standard_k4_curve(f1);
        write_file((root / "standard-forms" / "k4-curve.json").string(),
                   curve_to_json(k4c.quadric(), k4c.cubic()));
        write_file((root / "standard-forms" / "k4-group.json").string(),
                   group_to_json(f1, {ds::standard_k4_tau1(f1), ds::standard_k4_tau2(f1),
                                      ds::standard_k4_rho(f1)}));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "datasets written under " << root.string() << "\n";
    return 0;
}
