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

#include <initializer_list>
#include <optional>
#include <vector>

#include "galois/cyclotomic.hpp"

namespace galois {

/// Dense matrix over the session field. Everything is exact; there is no
/// pivot-size heuristic anywhere, elimination always takes the first
/// nonzero candidate.
class Mat {
public:
    Mat(FieldPtr field, unsigned rows, unsigned cols);
    Mat(FieldPtr field, unsigned rows, unsigned cols, std::vector<CycloNum> entries);

    static Mat identity(const FieldPtr& field, unsigned n);
    /// 4x4 from 16 rational entries, row-major; test and dataset helper.
    static Mat from_rationals(const FieldPtr& field, unsigned rows, unsigned cols,
                              std::initializer_list<long> entries);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    CycloNum& at(unsigned i, unsigned j) { return a_[i * cols_ + j]; }
    const CycloNum& at(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    friend Mat operator*(const CycloNum& s, const Mat& m);

    Mat transpose() const;
    CycloNum trace() const;
    bool is_zero() const;
    /// Nonzero scalar multiple of the identity.
    bool is_scalar() const;

    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const; // M*v

    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    FieldPtr field_;
    unsigned rows_ = 0;
    unsigned cols_ = 0;
    std::vector<CycloNum> a_;
};

bool lex_less(const Mat& a, const Mat& b);

struct RrefResult {
    Mat reduced;
    unsigned rank;
    std::vector<unsigned> pivots;
};

/// Exact Gauss-Jordan; pivots are the first nonzero entries per column.
RrefResult rref(const Mat& m);

/// Row basis of the right kernel {x : M x = 0}, itself in reduced row
/// echelon form. The zero kernel yields a 0 x cols matrix.
Mat kernel_basis(const Mat& m);

/// det of a square matrix (Faddeev-LeVerrier via char_poly for n <= 4,
/// elimination otherwise would be overkill here; all uses are 4x4 or 2x2).
CycloNum det(const Mat& m);

/// Inverse of a square matrix; throws singular_matrix.
Mat inverse(const Mat& m);

/// Monic characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
/// recurrence; index k holds the coefficient of t^k.
std::vector<CycloNum> char_poly(const Mat& m);

/// Particular solution of A x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<CycloNum>> solve_linear(const Mat& a, const std::vector<CycloNum>& b);

/// Vertically stacks two matrices with equal column counts.
Mat vstack(const Mat& top, const Mat& bottom);

Mat embed(const Mat& m, const FieldPtr& target);

} // namespace galois
