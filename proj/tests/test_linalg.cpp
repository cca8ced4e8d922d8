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

#include "galois/projective.hpp"
#include "test_support.hpp"

using namespace galois;
namespace gt = galois::testing;

TEST_CASE("rref and kernel of simple matrices") {
    const auto field = CyclotomicField::create(1);
    Mat m = Mat::from_rationals(field, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0});
    const auto rr = rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<unsigned>{0, 1});

    const Mat k = kernel_basis(m);
    REQUIRE(k.rows() == 2);
    CHECK(k == Mat::from_rationals(field, 2, 4, {0, 0, 1, 0, 0, 0, 0, 1}));
}

TEST_CASE("kernel rows solve the system exactly on random input") {
    const auto field = CyclotomicField::create(15);
    for (int trial = 0; trial < 60; ++trial) {
        const Mat m = gt::random_matrix(field, 3, 5);
        const Mat k = kernel_basis(m);
        CHECK(rref(m).rank + k.rows() == 5);
        for (unsigned r = 0; r < k.rows(); ++r) {
            std::vector<CycloNum> v;
            for (unsigned j = 0; j < 5; ++j) {
                v.push_back(k.at(r, j));
            }
            for (const auto& c : m.apply(v)) {
                CHECK(c.is_zero());
            }
        }
    }
}

TEST_CASE("characteristic polynomials of the standard matrices") {
    const auto field = CyclotomicField::create(3);
    const CycloNum one = CycloNum::one(field);
    const CycloNum w = *primitive_root_of_unity(field, 3);

    SUBCASE("identity") {
        const auto cp = char_poly(Mat::identity(field, 4));
        // (t-1)^4
        CHECK(cp[0] == one);
        CHECK(cp[1] == CycloNum(field, Rational(-4)));
        CHECK(cp[2] == CycloNum(field, Rational(6)));
        CHECK(cp[3] == CycloNum(field, Rational(-4)));
        CHECK(cp[4] == one);
    }
    SUBCASE("diag(1,1,w,w^2)") {
        const auto cp = char_poly(gt::s3_rotation(field));
        // (t-1)^2 (t-w)(t-w^2) = (t^2-2t+1)(t^2+t+1)
        CHECK(cp[4] == one);
        CHECK(cp[3] == CycloNum(field, Rational(-1)));
        CHECK(cp[2] == CycloNum(field, Rational(0)));
        CHECK(cp[1] == CycloNum(field, Rational(-1)));
        CHECK(cp[0] == one);
    }
    SUBCASE("block swap has eigenvalues 1,1,1,-1") {
        const auto cp = char_poly(gt::s3_flip(field));
        // (t-1)^3 (t+1) = t^4 - 2t^3 + 2t - 1
        CHECK(cp[4] == one);
        CHECK(cp[3] == CycloNum(field, Rational(-2)));
        CHECK(cp[2] == CycloNum(field, Rational(0)));
        CHECK(cp[1] == CycloNum(field, Rational(2)));
        CHECK(cp[0] == CycloNum(field, Rational(-1)));
    }
}

TEST_CASE("char_poly is conjugation invariant") {
    const auto field = CyclotomicField::create(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Mat m = gt::random_matrix(field, 4, 4);
        const Mat p = gt::random_invertible(field);
        const Mat conj = inverse(p) * m * p;
        CHECK(char_poly(conj) == char_poly(m));
    }
}

TEST_CASE("canonical projective form: scaling invariance and idempotence") {
    const auto field = CyclotomicField::create(15);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat m = gt::random_invertible(field);
        const CycloNum scale = gt::random_nonzero_cyclo(field);
        const ProjTransform a(m);
        const ProjTransform b(scale * m);
        CHECK(a == b);
        CHECK(ProjTransform(a.matrix()).matrix() == a.matrix());
    }
}

TEST_CASE("projective orders") {
    const auto f15 = CyclotomicField::create(15);
    const CycloNum z5 = CycloNum::zeta(f15, 3);
    const CycloNum one = CycloNum::one(f15);

    const ProjTransform a(gt::diag(f15, one, z5, z5 * z5, z5 * z5 * z5));
    const auto pa = projective_order(a);
    CHECK(pa.order == 5);
    CHECK(pa.scalar.is_one());

    const ProjTransform b(gt::diag(f15, one, one, -one, -one));
    const auto pb = projective_order(b);
    CHECK(pb.order == 2);
    CHECK(pb.scalar.is_one());

    // An already scalar matrix has order 1; the canonical representative is
    // the identity, so the reported scalar is 1.
    const ProjTransform c(gt::diag(f15, CycloNum(f15, Rational(2)), CycloNum(f15, Rational(2)),
                                   CycloNum(f15, Rational(2)), CycloNum(f15, Rational(2))));
    const auto pc = projective_order(c);
    CHECK(pc.order == 1);
    CHECK(pc.scalar.is_one());

    CHECK_THROWS_AS(projective_order(a, 3), order_exceeds_cap);
}

TEST_CASE("projective order matches the order of the inverse") {
    const auto field = CyclotomicField::create(3);
    const std::vector<Mat> samples = {gt::s3_rotation(field), gt::s3_flip(field),
                                      gt::k4_rho(field), gt::k4_tau1(field)};
    for (const auto& m : samples) {
        const ProjTransform g(m);
        CHECK(projective_order(g).order == projective_order(g.inverse()).order);
    }
}

TEST_CASE("eigen structure of diagonal standard forms") {
    const auto field = CyclotomicField::create(3);
    const CycloNum one = CycloNum::one(field);
    const CycloNum w = *primitive_root_of_unity(field, 3);

    SUBCASE("diag(1,1,w,w^2): multiplicities (2,1,1)") {
        const EigenStructure es = eigen_structure(ProjTransform(gt::s3_rotation(field)));
        REQUIRE(es.pairs.size() == 3);
        CHECK(es.pairs[0].value == one);
        CHECK(es.pairs[0].space.dim() == 2);
        CHECK(es.pairs[1].value == w);
        CHECK(es.pairs[1].space.dim() == 1);
        CHECK(es.pairs[2].value == w * w);
        CHECK(es.pairs[2].space.dim() == 1);
    }
    SUBCASE("diag(1,1,-1,1): multiplicities (3,1)") {
        const EigenStructure es = eigen_structure(ProjTransform(gt::k4_tau1(field)));
        REQUIRE(es.pairs.size() == 2);
        CHECK(es.pairs[0].value == one);
        CHECK(es.pairs[0].space.dim() == 3);
        CHECK(es.pairs[1].value == -one);
        CHECK(es.pairs[1].space.dim() == 1);
    }
    SUBCASE("projective scaling changes nothing") {
        const Mat scaled = CycloNum(field, Rational(2)) * gt::s3_rotation(field);
        const EigenStructure es = eigen_structure(ProjTransform(scaled));
        const EigenStructure ref = eigen_structure(ProjTransform(gt::s3_rotation(field)));
        REQUIRE(es.pairs.size() == ref.pairs.size());
        for (std::size_t i = 0; i < es.pairs.size(); ++i) {
            CHECK(es.pairs[i].value == ref.pairs[i].value);
            CHECK(es.pairs[i].space == ref.pairs[i].space);
        }
    }
}

TEST_CASE("eigen pairs verify M v = e v exactly") {
    const auto field = CyclotomicField::create(15);
    const CycloNum one = CycloNum::one(field);
    const CycloNum z5 = CycloNum::zeta(field, 3);
    const std::vector<Mat> samples = {
        gt::s3_rotation(field), gt::s3_flip(field), gt::k4_tau1(field), gt::k4_rho(field),
        gt::diag(field, one, z5, z5 * z5, z5 * z5 * z5)};
    for (const auto& m : samples) {
        const ProjTransform g(m);
        const EigenStructure es = eigen_structure(g);
        unsigned total = 0;
        for (const auto& [value, space] : es.pairs) {
            total += space.dim();
            for (unsigned r = 0; r < space.dim(); ++r) {
                const auto v = space.basis_row(r);
                const auto mv = es.representative.apply(v);
                for (unsigned i = 0; i < 4; ++i) {
                    CHECK(mv[i] == value * v[i]);
                }
            }
        }
        CHECK(total == 4);
    }
}

TEST_CASE("eigen structure falls back to ratio enumeration for hostile scalings") {
    // Forget the witness on purpose: rebuild from a canonical matrix whose
    // scalar square has no square root of the searchable shape.
    const auto field = CyclotomicField::create(15);
    const CycloNum z = CycloNum::zeta(field);
    const CycloNum one = CycloNum::one(field);
    // (1 + z + 3 z^2) * diag(1,1,-1,1): an involution scaled by a unit that
    // is not rational-times-root-of-unity.
    const CycloNum ugly = one + z + Rational(3) * (z * z);
    const Mat scaled = ugly * gt::k4_tau1(field);
    const ProjTransform g(ProjTransform(scaled).matrix()); // witness = canonical
    const EigenStructure es = eigen_structure(g);
    REQUIRE(es.pairs.size() == 2);
    unsigned dims[2] = {es.pairs[0].space.dim(), es.pairs[1].space.dim()};
    CHECK(((dims[0] == 3 && dims[1] == 1) || (dims[0] == 1 && dims[1] == 3)));
}

TEST_CASE("trace-zero involution test") {
    const auto field = CyclotomicField::create(3);
    CHECK(is_trace_zero_involution(ProjTransform(gt::k4_rho(field))));
    CHECK(!is_trace_zero_involution(ProjTransform(gt::k4_tau1(field))));
    CHECK(!is_trace_zero_involution(ProjTransform(gt::s3_flip(field))));
    CHECK_THROWS_AS(is_trace_zero_involution(ProjTransform(gt::s3_rotation(field))),
                    not_an_involution);
}

TEST_CASE("subspace intersection") {
    const auto field = CyclotomicField::create(1);
    const Subspace plane1 = Subspace::from_rows(
        Mat::from_rationals(field, 3, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
    const Subspace plane2 = Subspace::from_rows(
        Mat::from_rationals(field, 3, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0}));
    const Subspace line = intersect(plane1, plane2);
    CHECK(line.dim() == 2);
    CHECK(line == Subspace::from_rows(
                      Mat::from_rationals(field, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0})));
}
