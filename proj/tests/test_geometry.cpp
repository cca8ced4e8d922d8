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

#include "galois/line.hpp"
#include "test_support.hpp"

using namespace galois;
namespace ds = galois::datasets;
namespace gt = galois::testing;

namespace {

ProjLine line_x_eq_y_eq_0(const FieldPtr& field) {
    return ProjLine::from_forms(HomForm::variable(field, 0), HomForm::variable(field, 1));
}

} // namespace

TEST_CASE("pullback substitutes the matrix rows") {
    const auto f15 = ds::bring_field();
    const CurveModel curve = ds::bring_curve(f15);

    SUBCASE("identity is neutral") {
        const ProjTransform id(Mat::identity(f15, 4));
        CHECK(pullback(id, curve.cubic()) == curve.cubic());
    }
    SUBCASE("diagonal weights on Q = XW + YZ") {
        const CycloNum z = ds::zeta5(f15);
        const CycloNum one = CycloNum::one(f15);
        const ProjTransform d(gt::diag(f15, one, z, z * z, z * z * z));
        CHECK(pullback(d, curve.quadric()) == (z * z * z) * curve.quadric());
    }
    SUBCASE("coordinate reversal fixes the cubic") {
        Mat rev(f15, 4, 4);
        const CycloNum one = CycloNum::one(f15);
        rev.at(0, 3) = one;
        rev.at(1, 2) = one;
        rev.at(2, 1) = one;
        rev.at(3, 0) = one;
        CHECK(pullback(ProjTransform(rev), curve.cubic()) == curve.cubic());
    }
}

TEST_CASE("pullback is contravariant on random input") {
    const auto field = CyclotomicField::create(3);
    for (int trial = 0; trial < 40; ++trial) {
        const ProjTransform g(gt::random_invertible(field));
        const ProjTransform h(gt::random_invertible(field));
        const HomForm p = gt::random_form(field, 2 + trial % 2);
        CHECK(pullback(g * h, p) == pullback(h, pullback(g, p)));
    }
}

TEST_CASE("automorphism certificates") {
    const auto f15 = ds::bring_field();
    const CurveModel curve = ds::bring_curve(f15);

    SUBCASE("a diagonal non-symmetry is rejected") {
        const CycloNum one = CycloNum::one(f15);
        const ProjTransform bad(gt::diag(f15, one, one, one, CycloNum(f15, Rational(2))));
        CHECK(!check_automorphism(bad, curve).ok);
    }
    SUBCASE("eta_g preserves the two-trigonal curve") {
        const auto f3 = ds::trigonal_field();
        const CurveModel tri = ds::two_trigonal_curve(f3, Rational(0));
        const auto cert = check_automorphism(ProjTransform(ds::eta_g(f3)), tri);
        CHECK(cert.ok);
        CHECK(cert.q_scale == *primitive_root_of_unity(f3, 3));
    }
    SUBCASE("certificates are closed under product and inverse") {
        std::vector<ProjTransform> gens;
        for (const auto& m : ds::bring_generators(f15)) {
            gens.emplace_back(m);
        }
        const ProjTransform prod = gens[2] * gens[3];
        CHECK(check_automorphism(prod, curve).ok);
        CHECK(check_automorphism(gens[2].inverse(), curve).ok);
        // the certificate reproduces the pullback exactly
        const auto cert = check_automorphism(prod, curve);
        const HomForm lhs = pullback(prod, curve.cubic());
        const HomForm rhs = cert.linear * curve.quadric() + cert.f_scale * curve.cubic();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadric rank and vertex") {
    const auto f3 = ds::trigonal_field();
    SUBCASE("rank 3 cone: X^2 - ZW") {
        const CurveModel c = ds::standard_s3_curve(f3);
        const QuadricShape shape = quadric_rank_vertex(c);
        CHECK(shape.rank == 3);
        REQUIRE(shape.vertex.has_value());
        const auto& v = *shape.vertex;
        CHECK(v[0].is_zero());
        CHECK(!v[1].is_zero());
        CHECK(v[2].is_zero());
        CHECK(v[3].is_zero());
    }
    SUBCASE("rank 4: XW + YZ and XW - YZ") {
        CHECK(quadric_rank_vertex(ds::bring_curve(ds::bring_field())).rank == 4);
        CHECK(quadric_rank_vertex(ds::two_trigonal_curve(f3, Rational(0))).rank == 4);
    }
    SUBCASE("rank <= 2 is rejected at construction") {
        const CycloNum one = CycloNum::one(f3);
        const HomForm q = HomForm::from_terms(f3, 2, {{one, Exponents{{1, 1, 0, 0}}}});
        const HomForm f = HomForm::from_terms(f3, 3, {{one, Exponents{{0, 0, 3, 0}}}});
        CHECK_THROWS_AS(CurveModel(q, f), invalid_curve);
    }
    SUBCASE("a cubic inside (Q) is rejected") {
        const CurveModel good = ds::standard_s3_curve(f3);
        const HomForm bad_f = HomForm::variable(f3, 0) * good.quadric();
        CHECK_THROWS_AS(CurveModel(good.quadric(), bad_f), invalid_curve);
    }
}

TEST_CASE("line constructors agree and are canonical") {
    const auto f15 = ds::bring_field();
    const CycloNum one = CycloNum::one(f15);
    const CycloNum zero = CycloNum::zero(f15);

    SUBCASE("join of two coordinate points") {
        const ProjLine l = ProjLine::from_points({zero, zero, one, zero},
                                                 {zero, zero, zero, one});
        CHECK(l == line_x_eq_y_eq_0(f15));
        CHECK(l.dual().basis() ==
              Mat::from_rationals(f15, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
    }
    SUBCASE("from forms round-trips through points") {
        const HomForm l1 = HomForm::linear(f15, {zero, one, one, zero});  // Y + Z
        const HomForm l2 = HomForm::linear(f15, {one, zero, zero, one});  // X + W
        const ProjLine a = ProjLine::from_forms(l1, l2);
        const ProjLine b = ProjLine::from_points(a.span().basis_row(0), a.span().basis_row(1));
        CHECK(a == b);
    }
    SUBCASE("scaling the forms does not change the line") {
        const CycloNum z = ds::zeta5(f15);
        const HomForm l1 = HomForm::linear(f15, {zero, one, one, zero});
        const HomForm l2 = HomForm::linear(f15, {one, zero, zero, one});
        CHECK(ProjLine::from_forms(z * l1, (z * z) * l2) == ProjLine::from_forms(l1, l2));
    }
    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(ProjLine::from_points({zero, zero, one, zero}, {zero, zero, one, zero}),
                        degenerate_span);
        const HomForm l1 = HomForm::linear(f15, {zero, one, one, zero});
        CHECK_THROWS_AS(ProjLine::from_forms(l1, CycloNum(f15, Rational(2)) * l1),
                        degenerate_span);
    }
}

TEST_CASE("intersection lengths against the curve") {
    const auto f15 = ds::bring_field();
    const CurveModel curve = ds::bring_curve(f15);
    const CycloNum one = CycloNum::one(f15);
    const CycloNum zero = CycloNum::zero(f15);

    SUBCASE("the trigonal projection line X = Y = 0 has length 3") {
        CHECK(intersection_length(line_x_eq_y_eq_0(f15), curve) == 3);
    }
    SUBCASE("the last K4 table line has length 2") {
        const HomForm l1 = HomForm::linear(f15, {zero, one, one, zero});  // Y + Z
        const HomForm l2 = HomForm::linear(f15, {one, zero, zero, one});  // X + W
        CHECK(intersection_length(ProjLine::from_forms(l1, l2), curve) == 2);
    }
    SUBCASE("two-trigonal curve meets X = Y = 0 in length 3") {
        const auto f3 = ds::trigonal_field();
        const CurveModel tri = ds::two_trigonal_curve(f3, Rational(0));
        CHECK(intersection_length(line_x_eq_y_eq_0(f3), tri) == 3);
        // and Z = W = 0 likewise (the other trigonal line)
        const ProjLine zw = ProjLine::from_forms(HomForm::variable(f3, 2),
                                                 HomForm::variable(f3, 3));
        CHECK(intersection_length(zw, tri) == 3);
    }
    SUBCASE("a line on the curve is invalid input") {
        // Both forms vanish on X = Y = 0: Q = X^2 + XY + Y^2 + XZ (rank 3),
        // F = XZ^2 + YW^2.
        const auto f3 = ds::trigonal_field();
        const CycloNum o = CycloNum::one(f3);
        const HomForm q = HomForm::from_terms(
            f3, 2, {{o, Exponents{{2, 0, 0, 0}}}, {o, Exponents{{1, 1, 0, 0}}},
                    {o, Exponents{{0, 2, 0, 0}}}, {o, Exponents{{1, 0, 1, 0}}}});
        const HomForm f = HomForm::from_terms(
            f3, 3, {{o, Exponents{{1, 0, 2, 0}}}, {o, Exponents{{0, 1, 0, 2}}}});
        const CurveModel degenerate(q, f);
        CHECK_THROWS_AS(intersection_length(line_x_eq_y_eq_0(f3), degenerate), line_on_curve);
    }
}

TEST_CASE("length is bounded by 3 on random lines") {
    const auto f3 = ds::trigonal_field();
    const CurveModel tri = ds::two_trigonal_curve(f3, Rational(0));
    int produced = 0;
    while (produced < 40) {
        std::vector<CycloNum> p1, p2;
        for (int i = 0; i < 4; ++i) {
            p1.push_back(gt::random_cyclo(f3));
            p2.push_back(gt::random_cyclo(f3));
        }
        try {
            const ProjLine l = ProjLine::from_points(p1, p2);
            const unsigned len = intersection_length(l, tri);
            CHECK(len <= 3);
            ++produced;
        } catch (const degenerate_span&) {
            continue;
        }
    }
}

TEST_CASE("fixed loci of the standard transformations") {
    const auto f3 = ds::trigonal_field();
    const CycloNum one = CycloNum::one(f3);
    const CycloNum zero = CycloNum::zero(f3);

    SUBCASE("diag(1,1,-1,-1): two lines") {
        const FixedLocus fl = fixed_locus(ProjTransform(gt::k4_rho(f3)));
        REQUIRE(fl.components.size() == 2);
        CHECK(fl.components[0].dim() == 2); // Z = W = 0 (eigenvalue 1)
        CHECK(fl.components[1].dim() == 2); // X = Y = 0 (eigenvalue -1)
        CHECK(fl.components[0] == Subspace::from_rows(
                                      Mat::from_rationals(f3, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0})));
        CHECK(fl.components[1] == Subspace::from_rows(
                                      Mat::from_rationals(f3, 2, 4, {0, 0, 1, 0, 0, 0, 0, 1})));
    }
    SUBCASE("the S3 flip: plane Z - W = 0 and point (0:0:-1:1)") {
        const FixedLocus fl = fixed_locus(ProjTransform(gt::s3_flip(f3)));
        REQUIRE(fl.components.size() == 2);
        const Subspace* plane = &fl.components[0];
        const Subspace* point = &fl.components[1];
        if (plane->dim() != 3) {
            std::swap(plane, point);
        }
        CHECK(plane->dim() == 3);
        CHECK(point->dim() == 1);
        CHECK(plane->contains({one, zero, zero, zero}));
        CHECK(plane->contains({zero, one, zero, zero}));
        CHECK(plane->contains({zero, zero, one, one}));
        CHECK(point->contains({zero, zero, -one, one}));
    }
    SUBCASE("the S3 rotation: line Z = W = 0 and two points") {
        const FixedLocus fl = fixed_locus(ProjTransform(gt::s3_rotation(f3)));
        REQUIRE(fl.components.size() == 3);
        CHECK(fl.components[0].dim() == 2);
        CHECK(fl.components[1].dim() == 1);
        CHECK(fl.components[2].dim() == 1);
        CHECK(fl.components[1].contains({zero, zero, one, zero}));
        CHECK(fl.components[2].contains({zero, zero, zero, one}));
    }
    SUBCASE("components are pointwise fixed") {
        for (const Mat& m : {gt::s3_rotation(f3), gt::s3_flip(f3), gt::k4_tau1(f3)}) {
            const ProjTransform g(m);
            const FixedLocus fl = fixed_locus(g);
            for (const auto& comp : fl.components) {
                for (unsigned r = 0; r < comp.dim(); ++r) {
                    const auto v = comp.basis_row(r);
                    const auto w = g.matrix().apply(v);
                    for (unsigned a = 0; a < 4; ++a) {
                        for (unsigned b = a + 1; b < 4; ++b) {
                            CHECK((w[a] * v[b] - w[b] * v[a]).is_zero());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("restriction to a line matches direct evaluation") {
    const auto f3 = ds::trigonal_field();
    const CurveModel tri = ds::two_trigonal_curve(f3, Rational(2));
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<CycloNum> p1, p2;
        for (int i = 0; i < 4; ++i) {
            p1.push_back(gt::random_cyclo(f3));
            p2.push_back(gt::random_cyclo(f3));
        }
        Mat span(f3, 2, 4);
        for (unsigned j = 0; j < 4; ++j) {
            span.at(0, j) = p1[j];
            span.at(1, j) = p2[j];
        }
        const auto bin = restrict_to_line(tri.cubic(), span);
        const CycloNum s = gt::random_cyclo(f3);
        const CycloNum t = gt::random_cyclo(f3);
        std::vector<CycloNum> pt;
        for (unsigned j = 0; j < 4; ++j) {
            pt.push_back(s * p1[j] + t * p2[j]);
        }
        CycloNum expect = CycloNum::zero(f3);
        for (unsigned k = 0; k <= 3; ++k) {
            CycloNum term = bin[k]; // multiplies s^(3-k) t^k
            for (unsigned j = 0; j < 3 - k; ++j) term *= s;
            for (unsigned j = 0; j < k; ++j) term *= t;
            expect += term;
        }
        CHECK(expect == tri.cubic().evaluate(pt));
    }
}
