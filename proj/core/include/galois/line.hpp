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

namespace galois {

/// A line in P^3 in canonical dual form: two independent linear forms in
/// reduced row echelon form cutting the line out, together with the derived
/// span (the kernel of the dual, also in RREF). Canonical duals make line
/// equality entry-wise.
class ProjLine {
public:
    static ProjLine from_points(const std::vector<CycloNum>& p1, const std::vector<CycloNum>& p2);
    static ProjLine from_forms(const HomForm& l1, const HomForm& l2);
    static ProjLine from_dual_rows(const Mat& dual_rows);
    static ProjLine from_span(const Subspace& span);

    /// 2x4 RREF matrix; rows are coefficient vectors of the cutting forms.
    const Subspace& dual() const { return dual_; }
    /// 2x4 RREF matrix; rows span the line.
    const Subspace& span() const { return span_; }
    std::pair<HomForm, HomForm> cutting_forms() const;
    const FieldPtr& field() const { return dual_.basis().field(); }

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.dual_ == b.dual_; }
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

private:
    ProjLine(Subspace dual, Subspace span) : dual_(std::move(dual)), span_(std::move(span)) {}

    Subspace dual_;
    Subspace span_;
};

bool lex_less(const ProjLine& a, const ProjLine& b);

/// Scheme length of the intersection of the line with the curve: the degree
/// of gcd(Q|_l, F|_l) as binary forms, with gcd(q, 0) = q and gcd(0, f) = f.
/// Throws line_on_curve when both restrictions vanish.
unsigned intersection_length(const ProjLine& l, const CurveModel& c);

/// Fixed locus of a finite-order projective transformation: one component
/// per eigenspace (projective points, lines, planes).
struct FixedLocus {
    Mat representative;
    std::vector<Subspace> components;
};

FixedLocus fixed_locus(const ProjTransform& g, unsigned order_cap = 120);

ProjLine embed(const ProjLine& l, const FieldPtr& target);

/// Monic gcd of univariate polynomials over the field (ascending
/// coefficients, zero polynomial = empty vector).
std::vector<CycloNum> poly_gcd(std::vector<CycloNum> a, std::vector<CycloNum> b);

/// Roots in the session field of a univariate polynomial of degree <= 2
/// (constant coefficient first). Quadratics are solved through the partial
/// square-root search; nullopt means the roots exist only in an extension
/// or could not be exhibited.
std::optional<std::vector<CycloNum>> small_poly_roots(const std::vector<CycloNum>& p);

} // namespace galois
