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

#include <optional>

#include "galois/form.hpp"

namespace galois {

/// The (2,3)-complete-intersection model of a genus-4 canonical curve:
/// a quadric Q and a cubic F. Construction enforces rank(Q) >= 3 and that
/// F does not lie in the span of X*Q, Y*Q, Z*Q, W*Q; smoothness is not
/// checked, the input is assumed to be a canonical curve.
class CurveModel {
public:
    CurveModel(HomForm quadric, HomForm cubic);

    const HomForm& quadric() const { return q_; }
    const HomForm& cubic() const { return f_; }
    unsigned gram_rank() const { return gram_rank_; }
    const FieldPtr& field() const { return q_.field(); }

private:
    HomForm q_;
    HomForm f_;
    unsigned gram_rank_;
};

/// Symmetric Gram matrix of a quadratic form (off-diagonal entries are half
/// the mixed coefficients; characteristic zero).
Mat gram_matrix(const HomForm& quadratic);

struct QuadricShape {
    unsigned rank;                               // 3 or 4
    std::optional<std::vector<CycloNum>> vertex; // rank 3 only: the cone vertex
};

/// Throws invalid_curve when the rank is at most 2.
QuadricShape quadric_rank_vertex(const CurveModel& c);

/// Ideal-membership certificate for g being an automorphism of the curve:
/// pullback(g, Q) = q_scale * Q and pullback(g, F) = linear * Q + f_scale * F.
/// Membership at degrees 2 and 3 is a finite linear solve against the
/// explicit spanning sets {Q} and {F, XQ, YQ, ZQ, WQ}.
struct AutomorphismCertificate {
    bool ok = false;
    CycloNum q_scale;
    CycloNum f_scale;
    HomForm linear;
};

AutomorphismCertificate check_automorphism(const ProjTransform& g, const CurveModel& c);

CurveModel embed(const CurveModel& c, const FieldPtr& target);

} // namespace galois
