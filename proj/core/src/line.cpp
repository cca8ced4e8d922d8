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

#include "galois/line.hpp"

#include <algorithm>

namespace galois {

ProjLine ProjLine::from_dual_rows(const Mat& dual_rows) {
    const Subspace dual = Subspace::from_rows(dual_rows);
    if (dual.dim() != 2) {
        throw degenerate_span("dual of a line must have dimension 2");
    }
    Subspace span = Subspace::from_rows(kernel_basis(dual.basis()));
    return ProjLine(dual, std::move(span));
}

ProjLine ProjLine::from_points(const std::vector<CycloNum>& p1, const std::vector<CycloNum>& p2) {
    if (p1.size() != 4 || p2.size() != 4) {
        throw error("points in P^3 have 4 coordinates");
    }
    const FieldPtr& field = p1[0].field();
    Mat rows(field, 2, 4);
    for (unsigned j = 0; j < 4; ++j) {
        rows.at(0, j) = p1[j];
        rows.at(1, j) = p2[j];
    }
    const Subspace span = Subspace::from_rows(rows);
    if (span.dim() != 2) {
        throw degenerate_span("the two points coincide projectively");
    }
    return from_dual_rows(kernel_basis(span.basis()));
}

ProjLine ProjLine::from_forms(const HomForm& l1, const HomForm& l2) {
    if (l1.degree() != 1 || l2.degree() != 1) {
        throw error("cutting forms must be linear");
    }
    const FieldPtr& field = l1.field();
    Mat rows(field, 2, 4);
    const auto c1 = l1.linear_coeffs();
    const auto c2 = l2.linear_coeffs();
    for (unsigned j = 0; j < 4; ++j) {
        rows.at(0, j) = c1[j];
        rows.at(1, j) = c2[j];
    }
    return from_dual_rows(rows);
}

ProjLine ProjLine::from_span(const Subspace& span) {
    if (span.dim() != 2) {
        throw degenerate_span("line span must have dimension 2");
    }
    return from_dual_rows(kernel_basis(span.basis()));
}

std::pair<HomForm, HomForm> ProjLine::cutting_forms() const {
    return {HomForm::linear(field(), dual_.basis_row(0)),
            HomForm::linear(field(), dual_.basis_row(1))};
}

bool lex_less(const ProjLine& a, const ProjLine& b) {
    return lex_less(a.dual(), b.dual());
}

std::vector<CycloNum> poly_gcd(std::vector<CycloNum> a, std::vector<CycloNum> b) {
    const auto trim = [](std::vector<CycloNum>& p) {
        while (!p.empty() && p.back().is_zero()) {
            p.pop_back();
        }
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const CycloNum lead_inv = b.back().inverse();
        while (a.size() >= b.size()) {
            const CycloNum c = a.back() * lead_inv;
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[off + j] -= c * b[j];
            }
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const CycloNum inv = a.back().inverse();
        for (auto& c : a) {
            c *= inv;
        }
    }
    return a;
}

unsigned intersection_length(const ProjLine& l, const CurveModel& c) {
    const auto q = restrict_to_line(c.quadric(), l.span().basis());
    const auto f = restrict_to_line(c.cubic(), l.span().basis());
    const auto all_zero = [](const std::vector<CycloNum>& v) {
        return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
    };
    const bool qz = all_zero(q);
    const bool fz = all_zero(f);
    if (qz && fz) {
        throw line_on_curve("both defining forms vanish on the line");
    }
    if (qz) {
        return 3; // gcd(0, f) = f, a binary cubic
    }
    if (fz) {
        return 2; // gcd(q, 0) = q
    }
    // Points (1:t) come from the dehomogenized gcd; the point (0:1)
    // contributes the shared multiplicity of the s factor.
    const auto deg_in_t = [](const std::vector<CycloNum>& v) {
        int d = -1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) {
                d = static_cast<int>(i);
            }
        }
        return d;
    };
    const int qt = deg_in_t(q);
    const int ft = deg_in_t(f);
    const unsigned s_mult = std::min(2u - static_cast<unsigned>(qt), 3u - static_cast<unsigned>(ft));
    const auto g = poly_gcd(q, f);
    const unsigned g_deg = g.empty() ? 0 : static_cast<unsigned>(g.size()) - 1;
    return g_deg + s_mult;
}

FixedLocus fixed_locus(const ProjTransform& g, unsigned order_cap) {
    const EigenStructure es = eigen_structure(g, order_cap);
    FixedLocus out{es.representative, {}};
    out.components.reserve(es.pairs.size());
    for (const auto& p : es.pairs) {
        out.components.push_back(p.space);
    }
    return out;
}

ProjLine embed(const ProjLine& l, const FieldPtr& target) {
    return ProjLine::from_dual_rows(embed(l.dual().basis(), target));
}

std::optional<std::vector<CycloNum>> small_poly_roots(const std::vector<CycloNum>& p) {
    std::vector<CycloNum> q = p;
    while (!q.empty() && q.back().is_zero()) {
        q.pop_back();
    }
    if (q.empty() || q.size() > 3) {
        throw error("small_poly_roots expects degree <= 2");
    }
    if (q.size() == 1) {
        return std::vector<CycloNum>{}; // nonzero constant
    }
    if (q.size() == 2) {
        return std::vector<CycloNum>{-q[0] / q[1]};
    }
    // a t^2 + b t + c: roots (-b +- sqrt(b^2 - 4ac)) / 2a when the
    // discriminant has an expressible square root.
    const CycloNum a = q[2], b = q[1], c0 = q[0];
    const CycloNum disc = b * b - Rational(4) * (a * c0);
    const CycloNum two_a_inv = (Rational(2) * a).inverse();
    if (disc.is_zero()) {
        return std::vector<CycloNum>{-b * two_a_inv};
    }
    const auto roots = nth_root_candidates(disc, 2);
    if (roots.empty()) {
        return std::nullopt;
    }
    const CycloNum s = roots.front();
    return std::vector<CycloNum>{(-b + s) * two_a_inv, (-b - s) * two_a_inv};
}

} // namespace galois
