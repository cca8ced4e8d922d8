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

#include "datasets.hpp"

#include <array>

namespace galois::datasets {

namespace {

// a0 + a1 z5 + a2 z5^2 + a3 z5^3 + a4 z5^4, z5 = zeta_15^3.
CycloNum z5_combo(const FieldPtr& field, std::array<long, 5> a) {
    CycloNum out(field, Rational(a[0]));
    for (unsigned k = 1; k <= 4; ++k) {
        if (a[k] != 0) {
            out += Rational(a[k]) * CycloNum::zeta(field, 3 * k);
        }
    }
    return out;
}

Mat z5_matrix(const FieldPtr& field, const std::array<std::array<std::array<long, 5>, 4>, 4>& rows,
              const Rational& scale) {
    Mat m(field, 4, 4);
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) {
            m.at(i, j) = scale * z5_combo(field, rows[i][j]);
        }
    }
    return m;
}

ProjLine table_line(const FieldPtr& field, std::array<long, 5> l1x, std::array<long, 5> l1y,
                    std::array<long, 5> l2x, std::array<long, 5> l2y) {
    const CycloNum zero = CycloNum::zero(field);
    const CycloNum one = CycloNum::one(field);
    const HomForm l1 =
        HomForm::linear(field, {z5_combo(field, l1x), z5_combo(field, l1y), one, zero});
    const HomForm l2 =
        HomForm::linear(field, {z5_combo(field, l2x), z5_combo(field, l2y), zero, one});
    return ProjLine::from_forms(l1, l2);
}

} // namespace

FieldPtr bring_field() { return CyclotomicField::create(15); }

CycloNum zeta5(const FieldPtr& field, unsigned k) {
    return CycloNum::zeta(field, (3 * k) % 15);
}

CurveModel bring_curve(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const HomForm q = HomForm::from_terms(field, 2,
                                          {{one, Exponents{{1, 0, 0, 1}}},
                                           {one, Exponents{{0, 1, 1, 0}}}});
    const HomForm f = HomForm::from_terms(field, 3,
                                          {{one, Exponents{{2, 0, 1, 0}}},
                                           {-one, Exponents{{1, 2, 0, 0}}},
                                           {-one, Exponents{{0, 0, 2, 1}}},
                                           {one, Exponents{{0, 1, 0, 2}}}});
    return CurveModel(q, f);
}

Mat bring_sigma1(const FieldPtr& field) {
    // Symmetric, order 3; stabilizes the first S3-line of the table.
    const std::array<std::array<std::array<long, 5>, 4>, 4> rows = {{
        {{{0, -2, -1, -2, 0}, {0, 0, -1, -3, -1}, {0, -1, -1, 0, -3}, {0, 1, -1, -1, 1}}},
        {{{0, 0, -1, -3, -1}, {0, -2, -2, 0, -1}, {0, -1, 1, 1, -1}, {0, -3, 0, -1, -1}}},
        {{{0, -1, -1, 0, -3}, {0, -1, 1, 1, -1}, {0, -1, 0, -2, -2}, {0, -1, -3, -1, 0}}},
        {{{0, 1, -1, -1, 1}, {0, -3, 0, -1, -1}, {0, -1, -3, -1, 0}, {0, 0, -2, -1, -2}}},
    }};
    return z5_matrix(field, rows, Rational(1, 5));
}

Mat bring_tau1(const FieldPtr& field) {
    const std::array<std::array<std::array<long, 5>, 4>, 4> rows = {{
        {{{0, 2, 3, 3, 2}, {0, 2, 1, 2, 0}, {0, 2, 2, 0, 1}, {0, -3, 0, -1, -1}}},
        {{{0, 0, 2, 1, 2}, {0, 3, 2, 2, 3}, {0, -1, -3, -1, 0}, {0, 2, 2, 0, 1}}},
        {{{0, 1, 0, 2, 2}, {0, 0, -1, -3, -1}, {0, 3, 2, 2, 3}, {0, 2, 1, 2, 0}}},
        {{{0, -1, -1, 0, -3}, {0, 1, 0, 2, 2}, {0, 0, 2, 1, 2}, {0, 2, 3, 3, 2}}},
    }};
    return z5_matrix(field, rows, Rational(1, 5));
}

std::vector<Mat> bring_generators(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const CycloNum z = zeta5(field);
    Mat d(field, 4, 4);
    d.at(0, 0) = one;
    d.at(1, 1) = z;
    d.at(2, 2) = z * z;
    d.at(3, 3) = z * z * z;
    Mat rev(field, 4, 4);
    rev.at(0, 3) = one;
    rev.at(1, 2) = one;
    rev.at(2, 1) = one;
    rev.at(3, 0) = one;
    return {d, rev, bring_sigma1(field), bring_tau1(field)};
}

std::vector<ProjLine> bring_s3_lines(const FieldPtr& f) {
    return {
        table_line(f, {0, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, -1, -1, 0}, {1, 0, 0, 0, 0}),
        table_line(f, {0, -1, -1, -1, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 1, 0, 0}),
        table_line(f, {0, -1, 0, -1, -1}, {0, 0, 1, 0, 1}, {0, 1, 1, 0, 1}, {0, 1, 0, 0, 0}),
        table_line(f, {0, -1, -1, 0, -1}, {0, 1, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 0, 0, 1}),
        table_line(f, {0, 0, -1, -1, -1}, {0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 0}),
        table_line(f, {0, 1, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, -1, 0, 0, -1}, {1, 0, 0, 0, 0}),
        table_line(f, {0, 0, 1, 0, 1}, {0, -1, -1, 0, -1}, {0, -1, 0, -1, 0}, {0, 0, 0, 1, 0}),
        table_line(f, {0, 1, 0, 1, 0}, {0, -1, 0, -1, -1}, {0, 0, -1, 0, -1}, {0, 0, 1, 0, 0}),
        table_line(f, {0, 1, 1, 0, 0}, {0, -1, -1, -1, 0}, {0, 0, 0, -1, -1}, {0, 0, 0, 0, 1}),
        table_line(f, {0, 0, 0, 1, 1}, {0, 0, -1, -1, -1}, {0, -1, -1, 0, 0}, {0, 1, 0, 0, 0}),
    };
}

std::vector<ProjLine> bring_k4_lines(const FieldPtr& f) {
    return {
        table_line(f, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}),
        table_line(f, {0, 0, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 1, 1, 0, 1}, {0, -2, 0, -1, -1}),
        table_line(f, {0, -1, 0, -1, -1}, {0, 0, -1, -1, -1}, {0, -1, -1, 0, 0},
                   {0, -1, 0, 1, 1}),
        table_line(f, {0, 0, -1, -1, -1}, {0, -1, -1, 0, -1}, {0, -1, 0, -1, 0},
                   {0, 0, 1, -1, 1}),
        table_line(f, {0, 0, 1, 0, 1}, {0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, -1, -2, -1}),
        table_line(f, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}),
        table_line(f, {0, -1, -1, -1, 0}, {0, -1, 0, -1, -1}, {0, 0, -1, 0, -1},
                   {0, 1, -1, 1, 0}),
        table_line(f, {0, 1, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, -1, -2, -1, 0}),
        table_line(f, {0, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}),
        table_line(f, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, -1, -1, 0, -2}),
        table_line(f, {0, -1, -1, 0, -1}, {0, -1, -1, -1, 0}, {0, 0, 0, -1, -1},
                   {0, 1, 1, 0, -1}),
        table_line(f, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}),
        table_line(f, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}, {0, -1, 0, 0, -1}, {0, 2, 1, 1, 2}),
        table_line(f, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 0}, {0, 0, -1, -1, 0}, {0, 1, 2, 2, 1}),
        table_line(f, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}),
    };
}

FieldPtr trigonal_field() { return CyclotomicField::create(3); }

CurveModel two_trigonal_curve(const FieldPtr& field, const Rational& c) {
    const CycloNum one = CycloNum::one(field);
    const CycloNum cc(field, c);
    const HomForm q = HomForm::from_terms(field, 2,
                                          {{one, Exponents{{1, 0, 0, 1}}},
                                           {-one, Exponents{{0, 1, 1, 0}}}});
    const HomForm f = HomForm::from_terms(
        field, 3,
        {{one, Exponents{{0, 0, 1, 2}}},
         {-one, Exponents{{0, 0, 3, 0}}},
         {-one, Exponents{{0, 3, 0, 0}}},
         {-cc, Exponents{{1, 2, 0, 0}}},
         {CycloNum(field, Rational(9)), Exponents{{2, 1, 0, 0}}},
         {cc, Exponents{{3, 0, 0, 0}}}});
    return CurveModel(q, f);
}

Mat eta_g(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const CycloNum w = *primitive_root_of_unity(field, 3);
    Mat m(field, 4, 4);
    m.at(0, 0) = one;
    m.at(1, 1) = one;
    m.at(2, 2) = w;
    m.at(3, 3) = w;
    return m;
}

Mat eta_h(const FieldPtr& field) {
    return Mat::from_rationals(field, 4, 4,
                               {1, 1, 0, 0, -3, 1, 0, 0, 0, 0, 1, 1, 0, 0, -3, 1});
}

Mat standard_s3_rotation(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const CycloNum w = *primitive_root_of_unity(field, 3);
    Mat m(field, 4, 4);
    m.at(0, 0) = one;
    m.at(1, 1) = one;
    m.at(2, 2) = w;
    m.at(3, 3) = w * w;
    return m;
}

Mat standard_s3_flip(const FieldPtr& field) {
    return Mat::from_rationals(field, 4, 4,
                               {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

Mat standard_k4_tau1(const FieldPtr& field) {
    return Mat::from_rationals(field, 4, 4,
                               {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
}

Mat standard_k4_tau2(const FieldPtr& field) {
    return Mat::from_rationals(field, 4, 4,
                               {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

Mat standard_k4_rho(const FieldPtr& field) {
    return Mat::from_rationals(field, 4, 4,
                               {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
}

CurveModel standard_s3_curve(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const HomForm q = HomForm::from_terms(field, 2,
                                          {{one, Exponents{{2, 0, 0, 0}}},
                                           {-one, Exponents{{0, 0, 1, 1}}}});
    const HomForm f = HomForm::from_terms(field, 3,
                                          {{one, Exponents{{0, 3, 0, 0}}},
                                           {-one, Exponents{{0, 0, 3, 0}}},
                                           {-one, Exponents{{0, 0, 0, 3}}}});
    return CurveModel(q, f);
}

CurveModel standard_k4_curve(const FieldPtr& field) {
    const CycloNum one = CycloNum::one(field);
    const HomForm q = HomForm::from_terms(field, 2,
                                          {{one, Exponents{{1, 1, 0, 0}}},
                                           {-one, Exponents{{0, 0, 2, 0}}},
                                           {one, Exponents{{0, 0, 0, 2}}}});
    const HomForm f = HomForm::from_terms(field, 3,
                                          {{one, Exponents{{3, 0, 0, 0}}},
                                           {one, Exponents{{0, 3, 0, 0}}},
                                           {one, Exponents{{1, 0, 2, 0}}},
                                           {one, Exponents{{0, 1, 0, 2}}}});
    return CurveModel(q, f);
}

} // namespace galois::datasets
