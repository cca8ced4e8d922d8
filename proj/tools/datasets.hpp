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

#include "galois/curve.hpp"
#include "galois/line.hpp"

namespace galois::datasets {

// The shipped example data. Everything below is defined over Q(zeta_15)
// (with zeta_5 fixed as zeta_15^3) or over Q(zeta_3) / Q, and is written
// out as JSON by the make_datasets tool; the committed files under data/
// must match these builders byte for byte.

// ---- order-120 example: Q = XW + YZ, F = X^2 Z - Y^2 X - Z^2 W + W^2 Y ----

FieldPtr bring_field(); // Q(zeta_15)

/// zeta_5^k inside Q(zeta_15).
CycloNum zeta5(const FieldPtr& field, unsigned k = 1);

CurveModel bring_curve(const FieldPtr& field);

/// The four generators: diag(1, z5, z5^2, z5^3), the coordinate reversal,
/// and the two order-3/order-2 stabilizer generators of the first listed
/// S3-line. Their closure has order 120.
std::vector<Mat> bring_generators(const FieldPtr& field);

Mat bring_sigma1(const FieldPtr& field);
Mat bring_tau1(const FieldPtr& field);

/// The ten S3-lines and fifteen K4-lines, as canonical lines.
std::vector<ProjLine> bring_s3_lines(const FieldPtr& field);
std::vector<ProjLine> bring_k4_lines(const FieldPtr& field);

// ---- two-trigonal family: Q = XW - YZ,
//      F = Z(W-Z)(W+Z) - (Y^3 + c X Y^2 - 9 X^2 Y - c X^3) ----

FieldPtr trigonal_field(); // Q(zeta_3)

CurveModel two_trigonal_curve(const FieldPtr& field, const Rational& c);

/// diag(1,1,w,w) and the rational order-3 generator of the second trigonal
/// projection's deck group.
Mat eta_g(const FieldPtr& field);
Mat eta_h(const FieldPtr& field);

// ---- standard forms used by the unit tests ----

/// diag(1,1,w,w^2) and blockdiag(I2, antidiag(1,1)): the S3 normal form.
Mat standard_s3_rotation(const FieldPtr& field);
Mat standard_s3_flip(const FieldPtr& field);

/// diag(1,1,-1,1), diag(1,1,1,-1), diag(1,1,-1,-1): the K4 normal form.
Mat standard_k4_tau1(const FieldPtr& field);
Mat standard_k4_tau2(const FieldPtr& field);
Mat standard_k4_rho(const FieldPtr& field);

/// Q = X^2 - ZW, F = Y^3 - Z^3 - W^3: smooth, preserved by the S3 normal
/// form, with {X = Y = 0} as its S3-line.
CurveModel standard_s3_curve(const FieldPtr& field);

/// Q = XY - Z^2 + W^2, F = X^3 + Y^3 + X Z^2 + Y W^2: preserved by the K4
/// normal form, with {X = Y = 0} as its K4-line.
CurveModel standard_k4_curve(const FieldPtr& field);

} // namespace galois::datasets
