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

#include "galois/matrix.hpp"

#include <algorithm>

namespace galois {

Mat::Mat(FieldPtr field, unsigned rows, unsigned cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, CycloNum::zero(field_)) {}

Mat::Mat(FieldPtr field, unsigned rows, unsigned cols, std::vector<CycloNum> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows_) * cols_) {
        throw error("matrix entry count does not match its shape");
    }
}

Mat Mat::identity(const FieldPtr& field, unsigned n) {
    Mat m(field, n, n);
    for (unsigned i = 0; i < n; ++i) {
        m.at(i, i) = CycloNum::one(field);
    }
    return m;
}

Mat Mat::from_rationals(const FieldPtr& field, unsigned rows, unsigned cols,
                        std::initializer_list<long> entries) {
    if (entries.size() != static_cast<std::size_t>(rows) * cols) {
        throw error("entry count does not match shape");
    }
    Mat m(field, rows, cols);
    auto it = entries.begin();
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) {
            m.at(i, j) = CycloNum(field, Rational(*it++));
        }
    }
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) {
        throw error("matrix product shape mismatch");
    }
    Mat r(field_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned k = 0; k < cols_; ++k) {
            const CycloNum& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        r.a_[i] += o.a_[i];
    }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        r.a_[i] -= o.a_[i];
    }
    return r;
}

Mat operator*(const CycloNum& s, const Mat& m) {
    Mat r = m;
    for (auto& e : r.a_) {
        e *= s;
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            r.at(j, i) = at(i, j);
        }
    }
    return r;
}

CycloNum Mat::trace() const {
    CycloNum t = CycloNum::zero(field_);
    for (unsigned i = 0; i < std::min(rows_, cols_); ++i) {
        t += at(i, i);
    }
    return t;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

bool Mat::is_scalar() const {
    if (rows_ != cols_ || rows_ == 0 || at(0, 0).is_zero()) {
        return false;
    }
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            if (i == j) {
                if (at(i, j) != at(0, 0)) return false;
            } else if (!at(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<CycloNum> Mat::apply(const std::vector<CycloNum>& v) const {
    if (v.size() != cols_) {
        throw error("matrix-vector shape mismatch");
    }
    std::vector<CycloNum> out(rows_, CycloNum::zero(field_));
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool lex_less(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) != b.at(i, j)) {
                return lex_less(a.at(i, j), b.at(i, j));
            }
        }
    }
    return false;
}

RrefResult rref(const Mat& m) {
    Mat r = m;
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < r.cols() && row < r.rows(); ++col) {
        unsigned pivot_row = row;
        while (pivot_row < r.rows() && r.at(pivot_row, col).is_zero()) {
            ++pivot_row;
        }
        if (pivot_row == r.rows()) {
            continue;
        }
        if (pivot_row != row) {
            for (unsigned j = 0; j < r.cols(); ++j) {
                std::swap(r.at(pivot_row, j), r.at(row, j));
            }
        }
        const CycloNum inv = r.at(row, col).inverse();
        for (unsigned j = col; j < r.cols(); ++j) {
            r.at(row, j) *= inv;
        }
        for (unsigned i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            const CycloNum f = r.at(i, col);
            for (unsigned j = col; j < r.cols(); ++j) {
                r.at(i, j) -= f * r.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), row, std::move(pivots)};
}

Mat kernel_basis(const Mat& m) {
    const RrefResult rr = rref(m);
    const unsigned n = m.cols();
    std::vector<unsigned> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (unsigned p : rr.pivots) {
            is_pivot[p] = true;
        }
        for (unsigned c = 0; c < n; ++c) {
            if (!is_pivot[c]) free_cols.push_back(c);
        }
    }
    Mat basis(m.field(), static_cast<unsigned>(free_cols.size()), n);
    for (unsigned b = 0; b < free_cols.size(); ++b) {
        const unsigned fc = free_cols[b];
        basis.at(b, fc) = CycloNum::one(m.field());
        for (unsigned r = 0; r < rr.pivots.size(); ++r) {
            basis.at(b, rr.pivots[r]) = -rr.reduced.at(r, fc);
        }
    }
    // Canonicalize: the constructed basis has full row rank already, one
    // more rref pass puts it in echelon form.
    return rref(basis).reduced;
}

std::vector<CycloNum> char_poly(const Mat& m) {
    if (m.rows() != m.cols()) {
        throw error("characteristic polynomial of a non-square matrix");
    }
    const unsigned n = m.rows();
    const FieldPtr& field = m.field();
    // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
    std::vector<CycloNum> coeff(n + 1, CycloNum::zero(field));
    coeff[n] = CycloNum::one(field);
    Mat mk = m;
    for (unsigned k = 1; k <= n; ++k) {
        CycloNum ck = Rational(-1, static_cast<long>(k)) * mk.trace();
        coeff[n - k] = ck;
        if (k < n) {
            Mat adj = mk;
            for (unsigned i = 0; i < n; ++i) {
                adj.at(i, i) += ck;
            }
            mk = m * adj;
        }
    }
    return coeff;
}

CycloNum det(const Mat& m) {
    if (m.rows() != m.cols()) {
        throw error("determinant of a non-square matrix");
    }
    const auto cp = char_poly(m);
    // char(0) = det(-M) = (-1)^n det(M).
    CycloNum d = cp[0];
    if (m.rows() % 2 == 1) {
        d = -d;
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) {
        throw error("inverse of a non-square matrix");
    }
    const unsigned n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            aug.at(i, j) = m.at(i, j);
        }
        aug.at(i, n + i) = CycloNum::one(m.field());
    }
    const RrefResult rr = rref(aug);
    for (unsigned i = 0; i < n; ++i) {
        if (rr.pivots.size() <= i || rr.pivots[i] != i) {
            throw singular_matrix("matrix is not invertible");
        }
    }
    Mat inv(m.field(), n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            inv.at(i, j) = rr.reduced.at(i, n + j);
        }
    }
    return inv;
}

std::optional<std::vector<CycloNum>> solve_linear(const Mat& a, const std::vector<CycloNum>& b) {
    if (b.size() != a.rows()) {
        throw error("solve_linear shape mismatch");
    }
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) {
            aug.at(i, j) = a.at(i, j);
        }
        aug.at(i, a.cols()) = b[i];
    }
    const RrefResult rr = rref(aug);
    for (unsigned p : rr.pivots) {
        if (p == a.cols()) {
            return std::nullopt;
        }
    }
    std::vector<CycloNum> x(a.cols(), CycloNum::zero(a.field()));
    for (unsigned r = 0; r < rr.pivots.size(); ++r) {
        x[rr.pivots[r]] = rr.reduced.at(r, a.cols());
    }
    return x;
}

Mat vstack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols()) {
        throw error("vstack column mismatch");
    }
    Mat r(top.field(), top.rows() + bottom.rows(), top.cols());
    for (unsigned i = 0; i < top.rows(); ++i) {
        for (unsigned j = 0; j < top.cols(); ++j) {
            r.at(i, j) = top.at(i, j);
        }
    }
    for (unsigned i = 0; i < bottom.rows(); ++i) {
        for (unsigned j = 0; j < bottom.cols(); ++j) {
            r.at(top.rows() + i, j) = bottom.at(i, j);
        }
    }
    return r;
}

Mat embed(const Mat& m, const FieldPtr& target) {
    Mat r(target, m.rows(), m.cols());
    for (unsigned i = 0; i < m.rows(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) {
            r.at(i, j) = embed(m.at(i, j), target);
        }
    }
    return r;
}

} // namespace galois
