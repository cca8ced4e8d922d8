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

#include "galois/projective.hpp"

#include <algorithm>
#include <array>

namespace galois {

Subspace Subspace::from_rows(const Mat& rows) {
    const RrefResult rr = rref(rows);
    Mat basis(rows.field(), rr.rank, rows.cols());
    for (unsigned i = 0; i < rr.rank; ++i) {
        for (unsigned j = 0; j < rows.cols(); ++j) {
            basis.at(i, j) = rr.reduced.at(i, j);
        }
    }
    return Subspace(std::move(basis));
}

std::vector<CycloNum> Subspace::basis_row(unsigned i) const {
    std::vector<CycloNum> v;
    v.reserve(basis_.cols());
    for (unsigned j = 0; j < basis_.cols(); ++j) {
        v.push_back(basis_.at(i, j));
    }
    return v;
}

bool Subspace::contains(const std::vector<CycloNum>& v) const {
    // v lies in the row space iff appending it does not raise the rank.
    Mat probe(basis_.field(), dim() + 1, ambient());
    for (unsigned i = 0; i < dim(); ++i) {
        for (unsigned j = 0; j < ambient(); ++j) {
            probe.at(i, j) = basis_.at(i, j);
        }
    }
    for (unsigned j = 0; j < ambient(); ++j) {
        probe.at(dim(), j) = v[j];
    }
    return rref(probe).rank == dim();
}

bool lex_less(const Subspace& a, const Subspace& b) {
    return lex_less(a.basis(), b.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // rowspace(B) = {x : K x = 0} for K a kernel basis of B, so the
    // intersection is the kernel of the stacked constraints.
    const Mat ka = kernel_basis(a.basis());
    const Mat kb = kernel_basis(b.basis());
    return Subspace::from_rows(kernel_basis(vstack(ka, kb)));
}

namespace {

Mat canonicalize(const Mat& m) {
    for (unsigned i = 0; i < m.rows(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) {
                return m.at(i, j).inverse() * m;
            }
        }
    }
    throw singular_matrix("zero matrix is not a projective transformation");
}

} // namespace

ProjTransform::ProjTransform(const Mat& m) : canon_(canonicalize(m)), witness_(m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw error("projective transformations are 4x4 here");
    }
    if (det(canon_).is_zero()) {
        throw singular_matrix("projective transformation must be invertible");
    }
}

ProjTransform ProjTransform::operator*(const ProjTransform& o) const {
    const Mat w = witness_ * o.witness_;
    return ProjTransform(canonicalize(w), w);
}

ProjTransform ProjTransform::inverse() const {
    const Mat w = galois::inverse(witness_);
    return ProjTransform(canonicalize(w), w);
}

ProjTransform ProjTransform::transposed() const {
    const Mat w = witness_.transpose();
    return ProjTransform(canonicalize(w), w);
}

bool lex_less(const ProjTransform& a, const ProjTransform& b) {
    return lex_less(a.matrix(), b.matrix());
}

ProjOrder projective_order(const ProjTransform& g, unsigned cap) {
    Mat acc = g.matrix();
    for (unsigned m = 1; m <= cap; ++m) {
        if (acc.is_scalar()) {
            return ProjOrder{m, acc.at(0, 0)};
        }
        acc = acc * g.matrix();
    }
    throw order_exceeds_cap("no scalar power up to cap " + std::to_string(cap));
}

namespace {

// Scalar of rep^m, or nullopt if rep^m is not scalar (wrong representative
// hypothesis, never expected once the order is known).
std::optional<CycloNum> power_scalar(const Mat& rep, unsigned m) {
    Mat acc = rep;
    for (unsigned i = 1; i < m; ++i) {
        acc = acc * rep;
    }
    if (!acc.is_scalar()) {
        return std::nullopt;
    }
    return acc.at(0, 0);
}

std::optional<EigenStructure> eigen_from_normalized(const Mat& normalized, unsigned m,
                                                    const CycloNum& zm) {
    const FieldPtr& field = normalized.field();
    std::vector<EigenPair> pairs;
    unsigned total = 0;
    CycloNum value = CycloNum::one(field);
    for (unsigned k = 0; k < m; ++k) {
        Mat shifted = normalized;
        for (unsigned i = 0; i < 4; ++i) {
            shifted.at(i, i) -= value;
        }
        const Mat kern = kernel_basis(shifted);
        if (kern.rows() > 0) {
            pairs.push_back(EigenPair{value, Subspace::from_rows(kern)});
            total += kern.rows();
        }
        value *= zm;
    }
    if (total != 4) {
        return std::nullopt;
    }
    return EigenStructure{normalized, std::move(pairs)};
}

// Elementary symmetric polynomials of four values.
std::array<CycloNum, 5> elementary_symmetric(const std::array<CycloNum, 4>& u,
                                             const FieldPtr& field) {
    std::array<CycloNum, 5> e{CycloNum::one(field), CycloNum::zero(field),
                              CycloNum::zero(field), CycloNum::zero(field),
                              CycloNum::zero(field)};
    for (const CycloNum& v : u) {
        for (unsigned i = 4; i >= 1; --i) {
            e[i] = e[i] + v * e[i - 1];
        }
    }
    return e;
}

std::optional<EigenStructure> eigen_by_ratio_enumeration(const Mat& canon, unsigned m,
                                                         const CycloNum& zm) {
    const FieldPtr& field = canon.field();
    const auto cp = char_poly(canon); // index k: coefficient of t^k
    std::vector<CycloNum> zm_pow(m, CycloNum::one(field));
    for (unsigned k = 1; k < m; ++k) {
        zm_pow[k] = zm_pow[k - 1] * zm;
    }
    std::array<unsigned, 4> ks{};
    for (ks[0] = 0; ks[0] < m; ++ks[0])
    for (ks[1] = ks[0]; ks[1] < m; ++ks[1])
    for (ks[2] = ks[1]; ks[2] < m; ++ks[2])
    for (ks[3] = ks[2]; ks[3] < m; ++ks[3]) {
        const std::array<CycloNum, 4> u{zm_pow[ks[0]], zm_pow[ks[1]], zm_pow[ks[2]],
                                        zm_pow[ks[3]]};
        const auto sym = elementary_symmetric(u, field);
        // char coefficients: cp[4-i] = (-1)^i e0^i sym_i.
        std::vector<CycloNum> scale_candidates;
        for (unsigned i = 1; i <= 4; ++i) {
            if (sym[i].is_zero()) continue;
            CycloNum target = cp[4 - i] / sym[i];
            if (i % 2 == 1) {
                target = -target;
            }
            if (target.is_zero()) break; // eigenvalues are units, e0 != 0
            if (i == 1) {
                scale_candidates.push_back(target);
            } else {
                scale_candidates = nth_root_candidates(target, i);
            }
            break;
        }
        for (const CycloNum& e0 : scale_candidates) {
            // Verify the factorization char(t) = prod (t - e0 u_j) exactly.
            const std::array<CycloNum, 4> ev{e0 * u[0], e0 * u[1], e0 * u[2], e0 * u[3]};
            const auto esym = elementary_symmetric(ev, field);
            bool match = true;
            for (unsigned i = 1; i <= 4 && match; ++i) {
                CycloNum expect = esym[i];
                if (i % 2 == 1) {
                    expect = -expect;
                }
                match = (cp[4 - i] == expect);
            }
            if (!match) continue;
            std::vector<EigenPair> pairs;
            unsigned total = 0;
            for (unsigned j = 0; j < 4; ++j) {
                bool seen = false;
                for (unsigned p = 0; p < j; ++p) {
                    if (ev[p] == ev[j]) {
                        seen = true;
                        break;
                    }
                }
                if (seen) continue;
                Mat shifted = canon;
                for (unsigned i = 0; i < 4; ++i) {
                    shifted.at(i, i) -= ev[j];
                }
                const Mat kern = kernel_basis(shifted);
                if (kern.rows() > 0) {
                    pairs.push_back(EigenPair{ev[j], Subspace::from_rows(kern)});
                    total += kern.rows();
                }
            }
            if (total == 4) {
                return EigenStructure{canon, std::move(pairs)};
            }
        }
    }
    return std::nullopt;
}

} // namespace

EigenStructure eigen_structure(const ProjTransform& g, unsigned order_cap) {
    const ProjOrder po = projective_order(g, order_cap);
    const unsigned m = po.order;
    const FieldPtr& field = g.field();
    const auto zm = primitive_root_of_unity(field, m);
    if (!zm) {
        throw field_too_small("no primitive root of unity of order " + std::to_string(m) +
                              " in Q(zeta_" + std::to_string(field->conductor()) + ")");
    }

    // Stage one, preferred representative first.
    for (const Mat* rep : {&g.witness(), &g.matrix()}) {
        const auto lambda = power_scalar(*rep, m);
        if (!lambda) {
            continue;
        }
        for (const CycloNum& mu : nth_root_candidates(*lambda, m)) {
            const Mat normalized = mu.inverse() * (*rep);
            if (auto es = eigen_from_normalized(normalized, m, *zm)) {
                return *std::move(es);
            }
        }
    }

    // Stage two on the canonical representative.
    if (auto es = eigen_by_ratio_enumeration(g.matrix(), m, *zm)) {
        return *std::move(es);
    }
    throw field_too_small("eigenvalues not expressible over Q(zeta_" +
                          std::to_string(field->conductor()) + ")");
}

bool is_trace_zero_involution(const ProjTransform& g, unsigned order_cap) {
    if (projective_order(g, order_cap).order != 2) {
        throw not_an_involution("projective order is not 2");
    }
    return g.matrix().trace().is_zero();
}

ProjTransform embed(const ProjTransform& g, const FieldPtr& target) {
    return ProjTransform(embed(g.witness(), target));
}

} // namespace galois
