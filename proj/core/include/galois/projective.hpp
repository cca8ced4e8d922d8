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

#include "galois/matrix.hpp"

namespace galois {

/// A linear subspace of k^4 given by a reduced-row-echelon row basis with
/// strictly increasing pivot columns. The representation is canonical, so
/// equality is entry-wise. Projective dimension is dim()-1: dim 1 rows a
/// point, 2 a line, 3 a plane.
class Subspace {
public:
    /// Row space of the given matrix; zero rows are dropped.
    static Subspace from_rows(const Mat& rows);

    unsigned dim() const { return basis_.rows(); }
    unsigned ambient() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }
    std::vector<CycloNum> basis_row(unsigned i) const;

    bool contains(const std::vector<CycloNum>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
    Mat basis_;
};

bool lex_less(const Subspace& a, const Subspace& b);

/// {x : x in a and x in b}.
Subspace intersect(const Subspace& a, const Subspace& b);

/// An element of PGL_4 over the session field.
///
/// The canonical representative scales the first nonzero entry in row-major
/// order to 1; two matrices represent the same projective transformation
/// exactly when their canonical forms are entry-wise equal. Alongside it the
/// value keeps the representative it was constructed from (for products, the
/// actual matrix product of those representatives). The witness plays no role
/// in identity or ordering; eigenvalue normalization prefers it because
/// inputs coming from a genuine linear representation have scalar powers that
/// are roots of unity, which the partial radical search can always handle.
class ProjTransform {
public:
    explicit ProjTransform(const Mat& m);

    const Mat& matrix() const { return canon_; }
    const Mat& witness() const { return witness_; }
    const FieldPtr& field() const { return canon_.field(); }

    ProjTransform operator*(const ProjTransform& o) const;
    ProjTransform inverse() const;
    ProjTransform transposed() const;

    friend bool operator==(const ProjTransform& a, const ProjTransform& b) {
        return a.canon_ == b.canon_;
    }
    friend bool operator!=(const ProjTransform& a, const ProjTransform& b) { return !(a == b); }

private:
    ProjTransform(Mat canon, Mat witness)
        : canon_(std::move(canon)), witness_(std::move(witness)) {}

    Mat canon_;
    Mat witness_;
};

bool lex_less(const ProjTransform& a, const ProjTransform& b);

struct CanonLess {
    bool operator()(const ProjTransform& a, const ProjTransform& b) const {
        return lex_less(a, b);
    }
};

struct ProjOrder {
    unsigned order;  // least m >= 1 with canonical^m scalar
    CycloNum scalar; // the scalar value of canonical^m
};

/// Throws order_exceeds_cap when no power up to cap is scalar.
ProjOrder projective_order(const ProjTransform& g, unsigned cap = 120);

struct EigenPair {
    CycloNum value;
    Subspace space;
};

/// Eigen data of a finite-order projective transformation, relative to the
/// stated representative: representative is a scalar multiple of the
/// canonical matrix, each value satisfies representative * v = value * v on
/// the space, and value^m equals the scalar of representative^m.
struct EigenStructure {
    Mat representative;
    std::vector<EigenPair> pairs;
};

/// Two-stage eigen decomposition over the session field.
///
/// Stage one rescales a representative to have m-th power exactly the
/// identity, taking the scaling factor from the partial m-th-root search
/// (witness first, canonical second); eigenvalues are then powers of a fixed
/// primitive m-th root of unity. When no such factor is found, stage two
/// posits the eigenvalue multiset e * zeta_m^{k_1..k_4} over all exponent
/// multisets in lexicographic order, solves for e through the first usable
/// elementary-symmetric coefficient of the characteristic polynomial, and
/// accepts the first multiset whose factorization verifies exactly.
///
/// Throws field_too_small when neither stage yields a verified
/// factorization.
EigenStructure eigen_structure(const ProjTransform& g, unsigned order_cap = 120);

/// True when the projective involution has trace zero, equivalently
/// normalized eigenvalue multiplicities (2,2); scaling-invariant. Throws
/// not_an_involution when the projective order is not 2.
bool is_trace_zero_involution(const ProjTransform& g, unsigned order_cap = 120);

ProjTransform embed(const ProjTransform& g, const FieldPtr& target);

} // namespace galois
