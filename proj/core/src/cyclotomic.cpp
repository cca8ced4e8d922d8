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

#include "galois/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galois/detail/ratpoly.hpp"

namespace galois {

using detail::RatPoly;

namespace {

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) {
                out.push_back(n / d);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatPoly x_pow_minus_one(unsigned n) {
    RatPoly p(n + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    return p;
}

RatPoly cyclotomic_poly(unsigned n, std::map<unsigned, RatPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) {
        return it->second;
    }
    RatPoly num = x_pow_minus_one(n);
    for (unsigned d : divisors_of(n)) {
        if (d == n) {
            continue;
        }
        const RatPoly phi_d = cyclotomic_poly(d, memo);
        auto [quot, rem] = detail::rp_divmod(num, phi_d);
        if (!rem.empty()) {
            throw error("cyclotomic polynomial division left a remainder");
        }
        num = std::move(quot);
    }
    memo.emplace(n, num);
    return num;
}

} // namespace

CyclotomicField::CyclotomicField(unsigned conductor) : n_(conductor) {
    if (conductor == 0) {
        throw error("conductor must be positive");
    }
    std::map<unsigned, RatPoly> memo;
    min_poly_ = cyclotomic_poly(conductor, memo);
    phi_ = static_cast<unsigned>(min_poly_.size()) - 1;

    // x^phi mod Phi = -(a_0 + a_1 x + ... + a_{phi-1} x^{phi-1}), Phi monic.
    std::vector<Rational> x_phi(phi_, Rational(0));
    for (unsigned i = 0; i < phi_; ++i) {
        x_phi[i] = -min_poly_[i];
    }

    const auto shift_reduce = [&](const std::vector<Rational>& v) {
        // v * x reduced mod Phi, with v already reduced.
        std::vector<Rational> out(phi_, Rational(0));
        for (unsigned i = 0; i + 1 < phi_; ++i) {
            out[i + 1] = v[i];
        }
        const Rational top = v[phi_ - 1];
        if (!top.is_zero()) {
            for (unsigned i = 0; i < phi_; ++i) {
                out[i] += top * x_phi[i];
            }
        }
        return out;
    };

    overflow_.reserve(phi_ > 0 ? phi_ - 1 : 0);
    overflow_.push_back(x_phi);
    for (unsigned k = 1; k + 1 < phi_; ++k) {
        overflow_.push_back(shift_reduce(overflow_.back()));
    }

    zeta_pow_.reserve(n_);
    std::vector<Rational> cur(phi_, Rational(0));
    cur[0] = Rational(1);
    zeta_pow_.push_back(cur);
    for (unsigned k = 1; k < n_; ++k) {
        cur = shift_reduce(cur);
        zeta_pow_.push_back(cur);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::create(unsigned conductor) {
    return std::shared_ptr<const CyclotomicField>(new CyclotomicField(conductor));
}

CycloNum::CycloNum(FieldPtr field) : field_(std::move(field)), c_(field_->degree(), Rational(0)) {}

CycloNum::CycloNum(FieldPtr field, Rational rational_value) : CycloNum(std::move(field)) {
    c_[0] = std::move(rational_value);
}

CycloNum::CycloNum(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    if (c_.size() != field_->degree()) {
        throw error("coordinate vector has wrong length for the field");
    }
}

CycloNum CycloNum::zeta(const FieldPtr& field, unsigned k) {
    return CycloNum(field, field->zeta_power(k % field->conductor()));
}

bool CycloNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycloNum::is_one() const {
    if (c_[0] != Rational(1)) {
        return false;
    }
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return false;
    }
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return false;
    }
    return true;
}

void CycloNum::check_same_field(const CycloNum& o) const {
    if (!field_ || !o.field_ || field_->conductor() != o.field_->conductor()) {
        throw field_mismatch("values from different cyclotomic fields");
    }
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    check_same_field(o);
    const unsigned phi = field_->degree();
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& row = field_->overflow_row(k - phi);
        for (unsigned i = 0; i < phi; ++i) {
            out[i] += prod[k] * row[i];
        }
    }
    c_ = std::move(out);
    return *this;
}

CycloNum operator*(const Rational& s, CycloNum a) {
    for (auto& c : a.c_) {
        c *= s;
    }
    return a;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) {
        throw division_by_zero("inverse of zero field element");
    }
    if (is_rational()) {
        return CycloNum(field_, c_[0].inverse());
    }
    // Extended Euclid on (a, Phi): maintain r = s*a mod Phi; the t-cofactor
    // of Phi is irrelevant.
    RatPoly r0 = field_->min_poly();
    RatPoly r1(c_.begin(), c_.end());
    detail::rp_trim(r1);
    RatPoly s0 = {};
    RatPoly s1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = detail::rp_divmod(r0, r1);
        RatPoly s2 = detail::rp_sub(s0, detail::rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd(a, Phi); it is a nonzero constant since Phi is irreducible
    // and a is nonzero of lower degree.
    if (detail::rp_degree(r0) != 0) {
        throw error("element not invertible: gcd with the minimal polynomial is nonconstant");
    }
    const Rational scale = r0[0].inverse();
    std::vector<Rational> inv(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) {
        inv[i] = s0[i] * scale;
    }
    return CycloNum(field_, std::move(inv));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check_same_field(b);
    return a.c_ == b.c_;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (i == 0) {
            os << v.str();
        } else {
            if (v != Rational(1)) {
                os << v.str() << "*";
            }
            os << "z";
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

bool lex_less(const CycloNum& a, const CycloNum& b) {
    if (a.field()->conductor() != b.field()->conductor()) {
        return a.field()->conductor() < b.field()->conductor();
    }
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) {
            return ca[i] < cb[i];
        }
    }
    return false;
}

CycloNum embed(const CycloNum& a, const FieldPtr& target) {
    const unsigned m = a.field()->conductor();
    const unsigned n = target->conductor();
    if (m == n) {
        return CycloNum(target, a.coords());
    }
    if (n % m != 0) {
        throw not_a_subfield("no embedding: conductor " + std::to_string(m) +
                             " does not divide " + std::to_string(n));
    }
    const unsigned step = n / m;
    CycloNum out(target);
    for (unsigned i = 0; i < a.coords().size(); ++i) {
        const Rational& c = a.coords()[i];
        if (c.is_zero()) continue;
        out += c * CycloNum(target, target->zeta_power((i * step) % n));
    }
    return out;
}

std::vector<CycloNum> nth_root_candidates(const CycloNum& lambda, unsigned m) {
    if (lambda.is_zero()) {
        throw error("nth_root_candidates: zero has no unit root");
    }
    if (m == 0) {
        throw error("nth_root_candidates: m must be positive");
    }
    const FieldPtr& field = lambda.field();
    const unsigned n = field->conductor();
    std::vector<CycloNum> out;
    const auto push_unique = [&](const CycloNum& v) {
        for (const auto& w : out) {
            if (w == v) return;
        }
        out.push_back(v);
    };
    for (unsigned k = 0; k < n; ++k) {
        // mu = r * zeta^k needs r^m = lambda * zeta^(-k m).
        const unsigned back = (n - (static_cast<unsigned long>(k) * m) % n) % n;
        const CycloNum t = lambda * CycloNum::zeta(field, back);
        if (!t.is_rational()) {
            continue;
        }
        const auto root = rational_mth_root(t.rational_part(), m);
        if (!root) {
            continue;
        }
        const CycloNum zk = CycloNum::zeta(field, k);
        push_unique(*root * zk);
        if (m % 2 == 0) {
            push_unique(-(*root) * zk);
        }
    }
    return out;
}

std::optional<CycloNum> primitive_root_of_unity(const FieldPtr& field, unsigned m) {
    if (m == 0) {
        return std::nullopt;
    }
    const unsigned n = field->conductor();
    if (m == 1) {
        return CycloNum::one(field);
    }
    if (n % m == 0) {
        return CycloNum::zeta(field, n / m);
    }
    if (m % 2 == 0) {
        const unsigned half = m / 2;
        if (half % 2 == 1 && n % half == 0) {
            // -w^((half+1)/2) squares to w = zeta_half and has order 2*half.
            const unsigned e = ((half + 1) / 2) * (n / half);
            return -CycloNum::zeta(field, e % n);
        }
    }
    return std::nullopt;
}

} // namespace galois
