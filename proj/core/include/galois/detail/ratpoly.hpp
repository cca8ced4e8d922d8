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

#include <utility>
#include <vector>

#include "galois/rational.hpp"

namespace galois::detail {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// The zero polynomial is the empty vector; everything below keeps
// representations trimmed.
using RatPoly = std::vector<Rational>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

inline int rp_degree(const RatPoly& p) {
    return static_cast<int>(p.size()) - 1; // -1 for the zero polynomial
}

inline RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    rp_trim(r);
    return r;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    rp_trim(r);
    return r;
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    rp_trim(r);
    return r;
}

// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
inline std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) {
        throw division_by_zero("polynomial division by zero");
    }
    RatPoly rem = a;
    rp_trim(rem);
    if (rem.size() < b.size()) {
        return {{}, rem};
    }
    const std::size_t db = b.size() - 1;
    RatPoly quot(rem.size() - db, Rational(0));
    const Rational lead_inv = b.back().inverse();
    for (std::size_t k = rem.size() - 1; k + 1 > db; --k) {
        if (!rem[k].is_zero()) {
            const Rational c = rem[k] * lead_inv;
            quot[k - db] = c;
            for (std::size_t j = 0; j < b.size(); ++j) {
                rem[k - db + j] -= c * b[j];
            }
        }
        if (k == db) break;
    }
    rp_trim(rem);
    rp_trim(quot);
    return {quot, rem};
}

inline Rational rp_eval(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
        if (i == 0) break;
    }
    return acc;
}

} // namespace galois::detail
