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

#include <array>
#include <map>
#include <vector>

#include "galois/projective.hpp"

namespace galois {

/// Exponent vector (e_X, e_Y, e_Z, e_W) of a monomial in the coordinates
/// of P^3. Ordered lexicographically DESCENDING so that map iteration over
/// terms matches the canonical printing order.
struct Exponents {
    std::array<unsigned, 4> e{};

    unsigned total() const { return e[0] + e[1] + e[2] + e[3]; }
    friend bool operator==(const Exponents& a, const Exponents& b) { return a.e == b.e; }
};

struct ExponentsDescending {
    bool operator()(const Exponents& a, const Exponents& b) const { return a.e > b.e; }
};

/// A homogeneous form on P^3 of fixed degree with cyclotomic coefficients.
/// Only nonzero terms are stored.
class HomForm {
public:
    HomForm(FieldPtr field, unsigned degree);

    static HomForm variable(const FieldPtr& field, unsigned index); // X,Y,Z,W
    /// Builds from (coefficient, exponents) pairs; zero coefficients are
    /// dropped, repeated exponents accumulate.
    static HomForm from_terms(const FieldPtr& field, unsigned degree,
                              const std::vector<std::pair<CycloNum, Exponents>>& terms);
    static HomForm linear(const FieldPtr& field, const std::vector<CycloNum>& coeffs);

    unsigned degree() const { return degree_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Exponents, CycloNum, ExponentsDescending>& terms() const { return terms_; }
    CycloNum coefficient(const Exponents& e) const;
    /// Coefficients of a degree-1 form as a length-4 vector.
    std::vector<CycloNum> linear_coeffs() const;

    HomForm operator-() const;
    HomForm& operator+=(const HomForm& o);
    HomForm& operator-=(const HomForm& o);
    friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
    friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }
    friend HomForm operator*(const HomForm& a, const HomForm& b);
    friend HomForm operator*(const CycloNum& s, HomForm a);

    friend bool operator==(const HomForm& a, const HomForm& b);
    friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }

    CycloNum evaluate(const std::vector<CycloNum>& point) const;

    /// Dense coefficient vector over the full monomial basis of the degree,
    /// in canonical monomial order.
    std::vector<CycloNum> dense() const;
    static std::vector<Exponents> monomial_basis(unsigned degree);

    std::string str() const;

private:
    void set(const Exponents& e, const CycloNum& c);

    FieldPtr field_;
    unsigned degree_ = 0;
    std::map<Exponents, CycloNum, ExponentsDescending> terms_;
};

/// Substitution P(g x): the pullback of the form along the transformation,
/// computed from the witness representative (so results compose exactly;
/// a different representative only rescales the result, which none of the
/// membership tests downstream can see).
HomForm pullback(const ProjTransform& g, const HomForm& p);

/// Restriction of the form to the line spanned by the rows A, B of a 2x4
/// matrix: the binary form P(sA + tB), returned as coefficients of
/// s^(d-i) t^i for i = 0..d.
std::vector<CycloNum> restrict_to_line(const HomForm& p, const Mat& span);

/// True iff a = c*b for some scalar c (b nonzero); c is reported.
bool proportional(const HomForm& a, const HomForm& b, CycloNum& factor);

HomForm embed(const HomForm& p, const FieldPtr& target);

} // namespace galois
