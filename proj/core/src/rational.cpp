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

#include "galois/rational.hpp"

#include <cctype>
#include <ostream>

namespace galois {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw division_by_zero("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw division_by_zero("inverse of zero");
    }
    return Rational(mpq_class(1 / v_));
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    const auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) {
            ++j;
        }
        return j;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    std::size_t num_end = digits(i);
    if (num_end == i) {
        throw parse_error("bad rational literal: '" + text + "'");
    }
    if (num_end != text.size()) {
        if (text[num_end] != '/') {
            throw parse_error("bad rational literal: '" + text + "'");
        }
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) {
            throw parse_error("bad rational literal: '" + text + "'");
        }
    }
    mpq_class v;
    const std::string body = (text[0] == '+') ? text.substr(1) : text;
    if (v.set_str(body, 10) != 0) {
        throw parse_error("bad rational literal: '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw parse_error("zero denominator in '" + text + "'");
    }
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

std::string Rational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<Rational> rational_mth_root(const Rational& q, unsigned m) {
    if (m == 0) {
        return std::nullopt;
    }
    if (m == 1) {
        return q;
    }
    if (q.is_zero()) {
        return Rational(0);
    }
    if (q.sign() < 0 && m % 2 == 0) {
        return std::nullopt;
    }
    mpz_class num = abs(q.num());
    mpz_class den = q.den();
    mpz_class rn, rd;
    const bool num_exact = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m) != 0;
    const bool den_exact = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), m) != 0;
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    if (q.sign() < 0) {
        rn = -rn;
    }
    return Rational(rn, rd);
}

} // namespace galois
