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

#include <random>

#include "datasets.hpp"
#include "galois/curve.hpp"
#include "galois/form.hpp"
#include "galois/projective.hpp"

namespace galois::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline Rational random_rational(int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng()), den(rng()));
}

inline CycloNum random_cyclo(const FieldPtr& field) {
    std::vector<Rational> c;
    c.reserve(field->degree());
    for (unsigned i = 0; i < field->degree(); ++i) {
        c.push_back(random_rational());
    }
    return CycloNum(field, std::move(c));
}

inline CycloNum random_nonzero_cyclo(const FieldPtr& field) {
    for (;;) {
        CycloNum v = random_cyclo(field);
        if (!v.is_zero()) {
            return v;
        }
    }
}

inline Mat random_matrix(const FieldPtr& field, unsigned rows, unsigned cols) {
    Mat m(field, rows, cols);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) {
            m.at(i, j) = random_cyclo(field);
        }
    }
    return m;
}

inline Mat random_invertible(const FieldPtr& field, unsigned n = 4) {
    for (;;) {
        Mat m = random_matrix(field, n, n);
        if (!det(m).is_zero()) {
            return m;
        }
    }
}

inline HomForm random_form(const FieldPtr& field, unsigned degree, unsigned n_terms = 6) {
    const auto basis = HomForm::monomial_basis(degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::vector<std::pair<CycloNum, Exponents>> terms;
    for (unsigned t = 0; t < n_terms; ++t) {
        terms.emplace_back(random_cyclo(field), basis[pick(rng())]);
    }
    return HomForm::from_terms(field, degree, terms);
}

// The standard matrices and micro-curves live in the datasets library;
// short aliases keep the test bodies readable.

inline Mat diag(const FieldPtr& field, const CycloNum& a, const CycloNum& b, const CycloNum& c,
                const CycloNum& d) {
    Mat m(field, 4, 4);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
}

inline Mat s3_rotation(const FieldPtr& field) { return datasets::standard_s3_rotation(field); }
inline Mat s3_flip(const FieldPtr& field) { return datasets::standard_s3_flip(field); }
inline Mat k4_tau1(const FieldPtr& field) { return datasets::standard_k4_tau1(field); }
inline Mat k4_tau2(const FieldPtr& field) { return datasets::standard_k4_tau2(field); }
inline Mat k4_rho(const FieldPtr& field) { return datasets::standard_k4_rho(field); }
inline CurveModel s3_micro_curve(const FieldPtr& field) {
    return datasets::standard_s3_curve(field);
}
inline CurveModel k4_micro_curve(const FieldPtr& field) {
    return datasets::standard_k4_curve(field);
}

} // namespace galois::testing
