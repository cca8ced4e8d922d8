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

#include "galois/curve.hpp"

namespace galois {

namespace {

// Columns are the degree-3 dense vectors of X*Q, Y*Q, Z*Q, W*Q (and
// optionally F); used for the cubic membership solves.
Mat membership_columns(const HomForm& q, const HomForm* f) {
    const FieldPtr& field = q.field();
    std::vector<std::vector<CycloNum>> cols;
    for (unsigned i = 0; i < 4; ++i) {
        cols.push_back((HomForm::variable(field, i) * q).dense());
    }
    if (f != nullptr) {
        cols.push_back(f->dense());
    }
    Mat a(field, static_cast<unsigned>(cols[0].size()), static_cast<unsigned>(cols.size()));
    for (unsigned j = 0; j < cols.size(); ++j) {
        for (unsigned i = 0; i < cols[j].size(); ++i) {
            a.at(i, j) = cols[j][i];
        }
    }
    return a;
}

} // namespace

CurveModel::CurveModel(HomForm quadric, HomForm cubic)
    : q_(std::move(quadric)), f_(std::move(cubic)), gram_rank_(0) {
    if (q_.degree() != 2 || f_.degree() != 3) {
        throw invalid_curve("curve model needs a quadric and a cubic");
    }
    if (q_.field()->conductor() != f_.field()->conductor()) {
        throw field_mismatch("quadric and cubic live in different fields");
    }
    gram_rank_ = rref(gram_matrix(q_)).rank;
    if (gram_rank_ < 3) {
        throw invalid_curve("quadric has rank <= 2");
    }
    // F must not be a linear form times Q.
    const Mat a = membership_columns(q_, nullptr);
    if (solve_linear(a, f_.dense()).has_value()) {
        throw invalid_curve("cubic lies in the degree-3 part of (Q)");
    }
}

Mat gram_matrix(const HomForm& quadratic) {
    if (quadratic.degree() != 2) {
        throw error("gram matrix of a non-quadratic form");
    }
    const FieldPtr& field = quadratic.field();
    const Rational half(1, 2);
    Mat g(field, 4, 4);
    for (const auto& [e, c] : quadratic.terms()) {
        int i = -1, j = -1;
        for (unsigned k = 0; k < 4; ++k) {
            if (e.e[k] == 2) {
                i = j = static_cast<int>(k);
            } else if (e.e[k] == 1) {
                (i < 0 ? i : j) = static_cast<int>(k);
            }
        }
        if (i == j) {
            g.at(i, i) = c;
        } else {
            g.at(i, j) = half * c;
            g.at(j, i) = half * c;
        }
    }
    return g;
}

QuadricShape quadric_rank_vertex(const CurveModel& c) {
    const Mat g = gram_matrix(c.quadric());
    const unsigned rank = rref(g).rank;
    if (rank <= 2) {
        throw invalid_curve("quadric rank <= 2");
    }
    QuadricShape shape{rank, std::nullopt};
    if (rank == 3) {
        const Mat kern = kernel_basis(g);
        std::vector<CycloNum> vertex;
        for (unsigned j = 0; j < 4; ++j) {
            vertex.push_back(kern.at(0, j));
        }
        shape.vertex = std::move(vertex);
    }
    return shape;
}

AutomorphismCertificate check_automorphism(const ProjTransform& g, const CurveModel& c) {
    const FieldPtr& field = c.field();
    AutomorphismCertificate cert{false, CycloNum::zero(field), CycloNum::zero(field),
                                 HomForm(field, 1)};
    const HomForm gq = pullback(g, c.quadric());
    CycloNum q_scale = CycloNum::zero(field);
    if (!proportional(gq, c.quadric(), q_scale) || q_scale.is_zero()) {
        return cert;
    }
    const Mat a = membership_columns(c.quadric(), &c.cubic());
    const HomForm gf = pullback(g, c.cubic());
    const auto sol = solve_linear(a, gf.dense());
    if (!sol) {
        return cert;
    }
    cert.ok = true;
    cert.q_scale = q_scale;
    cert.f_scale = (*sol)[4];
    cert.linear = HomForm::linear(field, {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]});
    return cert;
}

CurveModel embed(const CurveModel& c, const FieldPtr& target) {
    return CurveModel(embed(c.quadric(), target), embed(c.cubic(), target));
}

} // namespace galois
