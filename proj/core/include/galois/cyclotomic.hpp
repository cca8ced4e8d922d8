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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/rational.hpp"

namespace galois {

class CycloNum;

/// The cyclotomic field Q(zeta_n) for a fixed conductor n >= 1, with
/// elements represented in the power basis 1, zeta, ..., zeta^(phi(n)-1)
/// modulo the n-th cyclotomic polynomial. Field objects are immutable
/// after creation and shared by the values living in them.
///
/// Phi_n is computed by iterated exact division of x^n - 1 by Phi_d over
/// all proper divisors d of n; n = 1 yields the rationals (Phi_1 = x - 1).
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> create(unsigned conductor);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return phi_; }

    /// Coefficients of Phi_n, ascending, size degree()+1, monic.
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    /// Power-basis coordinates of zeta^k for 0 <= k < conductor.
    const std::vector<Rational>& zeta_power(unsigned k) const { return zeta_pow_.at(k); }

    /// Power-basis coordinates of x^(degree()+k) mod Phi_n, 0 <= k < degree()-1.
    const std::vector<Rational>& overflow_row(unsigned k) const { return overflow_.at(k); }

private:
    explicit CyclotomicField(unsigned conductor);

    unsigned n_ = 1;
    unsigned phi_ = 1;
    std::vector<Rational> min_poly_;
    std::vector<std::vector<Rational>> zeta_pow_;
    std::vector<std::vector<Rational>> overflow_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of a fixed cyclotomic field: phi(n) rational coordinates in
/// the power basis. The representation is unique, so equality is
/// coordinate-wise. Values are immutable and safe to share across threads.
class CycloNum {
public:
    CycloNum() = default;
    explicit CycloNum(FieldPtr field); // zero
    CycloNum(FieldPtr field, Rational rational_value);
    CycloNum(FieldPtr field, std::vector<Rational> coords);

    static CycloNum zero(const FieldPtr& field) { return CycloNum(field); }
    static CycloNum one(const FieldPtr& field) { return CycloNum(field, Rational(1)); }
    /// zeta_n^k reduced into the power basis.
    static CycloNum zeta(const FieldPtr& field, unsigned k = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when all coordinates beyond the constant one vanish.
    bool is_rational() const;
    /// The constant coordinate, meaningful together with is_rational().
    const Rational& rational_part() const { return c_.at(0); }

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(const Rational& s, CycloNum a);

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Phi_n. Throws division_by_zero on zero.
    CycloNum inverse() const;
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Human-readable form such as "1 - 2*z^3"; z denotes zeta_n.
    std::string str() const;

private:
    void check_same_field(const CycloNum& o) const;

    FieldPtr field_;
    std::vector<Rational> c_;
};

/// Deterministic total order (conductor, then lexicographic coordinates);
/// used for canonical sorting and map keys, no algebraic meaning.
bool lex_less(const CycloNum& a, const CycloNum& b);

/// Ring embedding Q(zeta_m) -> Q(zeta_n) sending zeta_m to zeta_n^(n/m).
/// Throws not_a_subfield when m does not divide n.
CycloNum embed(const CycloNum& a, const FieldPtr& target);

/// All m-th roots of lambda of the shape r * zeta_n^k with r rational:
/// for each k the product lambda * zeta_n^(-k m) is tested for being a
/// rational m-th power. This is a deliberately partial root search; an
/// empty result does not prove that no root exists in the field.
std::vector<CycloNum> nth_root_candidates(const CycloNum& lambda, unsigned m);

/// A primitive m-th root of unity in the field when one exists: zeta_n^(n/m)
/// for m | n, and -zeta_(m/2)^((m/2+1)/2) when m = 2 mod 4 with m/2 | n.
std::optional<CycloNum> primitive_root_of_unity(const FieldPtr& field, unsigned m);

} // namespace galois
