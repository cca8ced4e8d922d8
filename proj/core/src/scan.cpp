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

#include "galois/scan.hpp"

#include <algorithm>

#include "galois/detail/ratpoly.hpp"

namespace galois {

std::string to_string(LineType t) {
    switch (t) {
        case LineType::S3: return "S3";
        case LineType::K4: return "K4";
        case LineType::C4: return "C4";
        case LineType::C5: return "C5";
        case LineType::C6: return "C6";
    }
    return "?";
}

unsigned ScanReport::count(LineType t) const {
    auto it = counts.find(t);
    return it == counts.end() ? 0 : it->second;
}

unsigned ScanReport::cyclic_count() const {
    return count(LineType::C4) + count(LineType::C5) + count(LineType::C6);
}

bool projection_invariant(const ProjLine& l, const ProjTransform& g, const CurveModel& c) {
    const auto [l1, l2] = l.cutting_forms();
    const HomForm d = pullback(g, l1) * l2 - pullback(g, l2) * l1;
    if (d.is_zero()) {
        return true;
    }
    CycloNum mu = CycloNum::zero(c.field());
    return proportional(d, c.quadric(), mu);
}

std::vector<unsigned> line_stabilizer(const ProjLine& l, const FiniteMatrixGroup& g,
                                      const CurveModel& c) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < g.order(); ++i) {
        if (projection_invariant(l, g.element(i), c)) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

LineType line_type_of(const IsoType& t) {
    switch (t.tag) {
        case GroupTag::S3: return LineType::S3;
        case GroupTag::K4: return LineType::K4;
        case GroupTag::C4: return LineType::C4;
        case GroupTag::C5: return LineType::C5;
        case GroupTag::C6: return LineType::C6;
        default:
            throw error("stabilizer of a certified line has an impossible type " +
                        to_string(t.tag) + " of order " + std::to_string(t.order));
    }
}

} // namespace

std::optional<GaloisLineRecord> certify_line(const ProjLine& l, const FiniteMatrixGroup& g,
                                             const CurveModel& c, unsigned order_cap) {
    const unsigned length = intersection_length(l, c);
    if (length > 2) {
        return std::nullopt; // degree 6 - length < 4
    }
    const unsigned degree = 6 - length;
    const std::vector<unsigned> stab = line_stabilizer(l, g, c);
    if (stab.size() != degree) {
        return std::nullopt;
    }
    std::vector<ProjTransform> elems;
    elems.reserve(stab.size());
    for (unsigned i : stab) {
        elems.push_back(g.element(i));
    }
    const IsoType type = classify_small_group(elems, order_cap);
    return GaloisLineRecord{l, stab, degree, line_type_of(type), {}};
}

std::optional<unsigned> first_non_automorphism(const FiniteMatrixGroup& g, const CurveModel& c) {
    for (unsigned i = 0; i < g.order(); ++i) {
        if (!check_automorphism(g.element(i), c).ok) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::string> count_bound_violations(const std::map<LineType, unsigned>& counts) {
    std::vector<std::string> out;
    const auto get = [&](LineType t) {
        auto it = counts.find(t);
        return it == counts.end() ? 0u : it->second;
    };
    if (get(LineType::S3) > 10) {
        out.push_back("bound violated: " + std::to_string(get(LineType::S3)) +
                      " S3-lines certified, at most 10 are possible");
    }
    if (get(LineType::K4) > 15) {
        out.push_back("bound violated: " + std::to_string(get(LineType::K4)) +
                      " K4-lines certified, at most 15 are possible");
    }
    return out;
}

namespace {

struct RecordMerge {
    std::map<ProjLine, GaloisLineRecord, bool (*)(const ProjLine&, const ProjLine&)> by_line{
        [](const ProjLine& a, const ProjLine& b) { return lex_less(a, b); }};

    void add(GaloisLineRecord rec, std::string provenance) {
        auto it = by_line.find(rec.line);
        if (it == by_line.end()) {
            rec.provenance.push_back(std::move(provenance));
            by_line.emplace(rec.line, std::move(rec));
        } else {
            it->second.provenance.push_back(std::move(provenance));
        }
    }
};

std::vector<CycloNum> canonical_point(const std::vector<CycloNum>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const CycloNum inv = x.inverse();
            std::vector<CycloNum> out;
            out.reserve(v.size());
            for (const auto& y : v) {
                out.push_back(inv * y);
            }
            return out;
        }
    }
    throw degenerate_span("zero vector is not a projective point");
}

bool projectively_equal(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    return canonical_point(a) == canonical_point(b);
}

// Distinct points of C cap l as field-rational points, when expressible:
// the roots of the binary gcd of the two restrictions. nullopt = not
// expressible over the session field.
std::optional<std::vector<std::vector<CycloNum>>> rational_intersection_points(
    const ProjLine& l, const CurveModel& c) {
    const Mat& span = l.span().basis();
    auto q = restrict_to_line(c.quadric(), span);
    auto f = restrict_to_line(c.cubic(), span);
    const auto all_zero = [](const std::vector<CycloNum>& v) {
        return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
    };
    std::vector<CycloNum> gcd;
    unsigned s_mult = 0;
    if (all_zero(q) && all_zero(f)) {
        throw line_on_curve("line lies on the curve");
    }
    const auto trim_deg = [](const std::vector<CycloNum>& v) {
        int d = -1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) d = static_cast<int>(i);
        }
        return d;
    };
    if (all_zero(f)) {
        gcd = q;
        s_mult = 2 - static_cast<unsigned>(trim_deg(q));
        gcd.resize(trim_deg(q) + 1);
    } else if (all_zero(q)) {
        gcd = f;
        s_mult = 3 - static_cast<unsigned>(trim_deg(f));
        gcd.resize(trim_deg(f) + 1);
    } else {
        s_mult = std::min(2u - static_cast<unsigned>(trim_deg(q)),
                          3u - static_cast<unsigned>(trim_deg(f)));
        gcd = poly_gcd(q, f);
    }
    const FieldPtr& field = c.field();
    std::vector<std::vector<CycloNum>> points;
    const auto point_at = [&](const CycloNum& s, const CycloNum& t) {
        std::vector<CycloNum> p(4, CycloNum::zero(field));
        for (unsigned j = 0; j < 4; ++j) {
            p[j] = s * span.at(0, j) + t * span.at(1, j);
        }
        return p;
    };
    if (s_mult > 0) {
        points.push_back(point_at(CycloNum::zero(field), CycloNum::one(field)));
    }
    if (!gcd.empty() && gcd.size() > 1) {
        const auto roots = small_poly_roots(gcd);
        if (!roots) {
            return std::nullopt;
        }
        for (const auto& t : *roots) {
            points.push_back(point_at(CycloNum::one(field), t));
        }
    }
    // Dedupe projectively (double roots appear once from small_poly_roots
    // already; an s-point cannot coincide with a (1:t) point).
    return points;
}

// Fix(rho) for the trace-zero involution via the commuting-involution
// decomposition of the K4 stabilizer: the join of the two isolated fixed
// points and the intersection of the two fixed planes. Used when the
// direct eigen decomposition of rho is blocked by the partial root search.
std::optional<std::vector<Subspace>> k4_structural_fixed_lines(
    const std::vector<ProjTransform>& stab_elems, const ProjTransform& rho, unsigned order_cap) {
    std::vector<const ProjTransform*> taus;
    for (const auto& e : stab_elems) {
        if (e == rho) continue;
        if (projective_order(e, order_cap).order == 2 && !e.matrix().trace().is_zero()) {
            taus.push_back(&e);
        }
    }
    if (taus.size() != 2) {
        return std::nullopt;
    }
    std::vector<std::vector<CycloNum>> points;
    std::vector<Subspace> planes;
    for (const ProjTransform* t : taus) {
        const EigenStructure es = eigen_structure(*t, order_cap);
        const Subspace* point = nullptr;
        const Subspace* plane = nullptr;
        for (const auto& p : es.pairs) {
            if (p.space.dim() == 1) point = &p.space;
            if (p.space.dim() == 3) plane = &p.space;
        }
        if (point == nullptr || plane == nullptr) {
            return std::nullopt;
        }
        points.push_back(point->basis_row(0));
        planes.push_back(*plane);
    }
    Mat join(rho.field(), 2, 4);
    for (unsigned j = 0; j < 4; ++j) {
        join.at(0, j) = points[0][j];
        join.at(1, j) = points[1][j];
    }
    const Subspace line_a = Subspace::from_rows(join);
    const Subspace line_b = intersect(planes[0], planes[1]);
    if (line_a.dim() != 2 || line_b.dim() != 2) {
        return std::nullopt;
    }
    // Both lines must be pointwise fixed by rho.
    for (const Subspace* s : {&line_a, &line_b}) {
        for (unsigned i = 0; i < 2; ++i) {
            const auto v = s->basis_row(i);
            const auto w = rho.matrix().apply(v);
            // w || v: cross-ratios of all coordinate pairs vanish.
            for (unsigned a = 0; a < 4; ++a) {
                for (unsigned b = a + 1; b < 4; ++b) {
                    if (!(w[a] * v[b] - w[b] * v[a]).is_zero()) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    return std::vector<Subspace>{line_a, line_b};
}

} // namespace

bool k4_fixed_lines_check(const GaloisLineRecord& rec, const FiniteMatrixGroup& g,
                          const CurveModel& c, unsigned order_cap) {
    std::vector<ProjTransform> stab_elems;
    stab_elems.reserve(rec.stabilizer.size());
    for (unsigned i : rec.stabilizer) {
        stab_elems.push_back(g.element(i));
    }
    const ProjTransform* rho = nullptr;
    for (const auto& e : stab_elems) {
        if (projective_order(e, order_cap).order == 2 && e.matrix().trace().is_zero()) {
            if (rho != nullptr) {
                return false; // two trace-zero involutions cannot match the standard form
            }
            rho = &e;
        }
    }
    if (rho == nullptr) {
        throw missing_trace_zero("K4 stabilizer without a trace-zero involution");
    }

    std::vector<Subspace> lines;
    bool have_components = false;
    try {
        const FixedLocus fl = fixed_locus(*rho, order_cap);
        if (fl.components.size() != 2) {
            return false;
        }
        lines = fl.components;
        have_components = true;
    } catch (const field_too_small&) {
        // fall through to the structural route
    }
    if (!have_components) {
        const auto structural = k4_structural_fixed_lines(stab_elems, *rho, order_cap);
        if (!structural) {
            return false;
        }
        lines = *structural;
    }
    if (lines.size() != 2 || lines[0].dim() != 2 || lines[1].dim() != 2) {
        return false;
    }
    const ProjLine line0 = ProjLine::from_span(lines[0]);
    const ProjLine line1 = ProjLine::from_span(lines[1]);
    const ProjLine* own = nullptr;
    const ProjLine* other = nullptr;
    if (line0 == rec.line) {
        own = &line0;
        other = &line1;
    } else if (line1 == rec.line) {
        own = &line1;
        other = &line0;
    } else {
        return false;
    }
    if (intersection_length(*own, c) != 2 || intersection_length(*other, c) != 0) {
        return false;
    }
    // Point-level witness when the two intersection points are
    // field-rational: rho fixes exactly those two points of C.
    const auto points = rational_intersection_points(rec.line, c);
    if (points) {
        if (points->size() != 2 || projectively_equal((*points)[0], (*points)[1])) {
            return false;
        }
        for (const auto& p : *points) {
            if (!c.quadric().evaluate(p).is_zero() || !c.cubic().evaluate(p).is_zero()) {
                return false;
            }
            const auto image = rho->matrix().apply(p);
            if (!projectively_equal(image, p)) {
                return false;
            }
        }
    }
    return true;
}

ScanReport find_galois_lines(const CurveModel& c, const FiniteMatrixGroup& g,
                             const ScanOptions& options) {
    if (const auto bad = first_non_automorphism(g, c)) {
        throw error("group element " + std::to_string(*bad) +
                    " is not an automorphism of the curve");
    }
    ScanReport report;
    report.options = options;
    RecordMerge merge;
    const unsigned cap = options.order_cap;

    if (options.s3) {
        const auto subs = enumerate_s3_subgroups(g, cap);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            const std::string tag = "s3-subgroup " + std::to_string(i);
            try {
                const auto sig = s3_signature(subs[i], cap);
                if (!sig) {
                    continue; // eigenvalue pattern rules this subgroup out
                }
                if (projectively_equal(sig->p1, sig->p2)) {
                    report.violations.push_back(tag + ": the two fixed points coincide");
                    continue;
                }
                const ProjLine line = ProjLine::from_points(sig->p1, sig->p2);
                if (auto rec = certify_line(line, g, c, cap)) {
                    merge.add(*std::move(rec), tag);
                }
            } catch (const field_too_small& e) {
                report.skipped.push_back(tag + ": " + e.what());
            }
        }
    }

    if (options.k4) {
        const auto subs = enumerate_k4_subgroups(g, cap);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            const std::string tag = "k4-subgroup " + std::to_string(i);
            try {
                const auto sig = k4_signature(subs[i], cap);
                if (!sig) {
                    continue;
                }
                if (projectively_equal(sig->p1, sig->p2)) {
                    report.violations.push_back(tag + ": the two fixed points coincide");
                    continue;
                }
                const ProjLine line = ProjLine::from_points(sig->p1, sig->p2);
                if (auto rec = certify_line(line, g, c, cap)) {
                    merge.add(*std::move(rec), tag);
                }
            } catch (const field_too_small& e) {
                report.skipped.push_back(tag + ": " + e.what());
            }
        }
    }

    if (options.cyclic) {
        for (unsigned i = 1; i < g.order(); ++i) {
            const unsigned m = projective_order(g.element(i), cap).order;
            if (m < 4 || m > 6) {
                continue;
            }
            const std::string tag = "element " + std::to_string(i) + " of order " +
                                    std::to_string(m);
            try {
                const EigenStructure es = eigen_structure(g.element(i).transposed(), cap);
                for (const auto& pair : es.pairs) {
                    if (pair.space.dim() == 3) {
                        report.unresolved_families.push_back(
                            tag + ": 3-dimensional form eigenspace, candidate family not finite");
                        continue;
                    }
                    if (pair.space.dim() != 2) {
                        continue;
                    }
                    const ProjLine line = ProjLine::from_dual_rows(pair.space.basis());
                    if (auto rec = certify_line(line, g, c, cap)) {
                        merge.add(*std::move(rec), tag);
                    }
                }
            } catch (const field_too_small& e) {
                report.skipped.push_back(tag + ": " + e.what());
            }
        }
    }

    for (auto& [line, rec] : merge.by_line) {
        report.records.push_back(rec);
    }
    for (const LineType t :
         {LineType::S3, LineType::K4, LineType::C4, LineType::C5, LineType::C6}) {
        report.counts[t] = 0;
    }
    for (const auto& rec : report.records) {
        ++report.counts[rec.type];
    }

    for (const auto& v : count_bound_violations(report.counts)) {
        report.violations.push_back(v);
    }

    // Distinct S3 records use distinct order-3 subgroups; distinct K4
    // records have distinct trace-zero involutions.
    {
        std::vector<std::vector<unsigned>> c3_sets;
        std::vector<unsigned> rho_indices;
        for (std::size_t r = 0; r < report.records.size(); ++r) {
            const auto& rec = report.records[r];
            if (rec.type == LineType::S3) {
                std::vector<unsigned> c3;
                for (unsigned i : rec.stabilizer) {
                    if (projective_order(g.element(i), cap).order == 3) {
                        c3.push_back(i);
                    }
                }
                std::sort(c3.begin(), c3.end());
                for (const auto& prev : c3_sets) {
                    if (prev == c3) {
                        report.violations.push_back(
                            "two S3 records share their order-3 subgroup");
                    }
                }
                c3_sets.push_back(std::move(c3));
            } else if (rec.type == LineType::K4) {
                for (unsigned i : rec.stabilizer) {
                    const auto& e = g.element(i);
                    if (projective_order(e, cap).order == 2 && e.matrix().trace().is_zero()) {
                        if (std::find(rho_indices.begin(), rho_indices.end(), i) !=
                            rho_indices.end()) {
                            report.violations.push_back(
                                "two K4 records share their trace-zero involution");
                        }
                        rho_indices.push_back(i);
                    }
                }
                try {
                    if (!k4_fixed_lines_check(rec, g, c, cap)) {
                        report.violations.push_back("record " + std::to_string(r) +
                                                    ": trace-zero fixed-line geometry failed");
                    }
                } catch (const missing_trace_zero& e) {
                    report.violations.push_back("record " + std::to_string(r) + ": " + e.what());
                } catch (const field_too_small& e) {
                    report.skipped.push_back("record " + std::to_string(r) +
                                             " geometry check: " + e.what());
                }
            }
        }
    }
    return report;
}

namespace {

// All rational roots of a cubic with rational coefficients, ascending;
// remaining_degree reports what could not be split off.
std::vector<Rational> rational_cubic_roots(const std::array<Rational, 4>& coeffs,
                                           unsigned& remaining_degree) {
    using detail::RatPoly;
    RatPoly p{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
    detail::rp_trim(p);
    std::vector<Rational> roots;
    const auto deflate = [&](const Rational& r) {
        // synthetic division by (x - r)
        RatPoly q(p.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
            if (i == 1) break;
        }
        p = q;
    };
    while (detail::rp_degree(p) > 0) {
        const int deg = detail::rp_degree(p);
        if (deg == 1) {
            roots.push_back(-p[0] / p[1]);
            p = {p[1]};
            continue;
        }
        if (deg == 2) {
            const Rational disc = p[1] * p[1] - Rational(4) * p[0] * p[2];
            const auto s = rational_mth_root(disc, 2);
            if (!s) {
                break;
            }
            const Rational two_a = Rational(2) * p[2];
            roots.push_back((-p[1] + *s) / two_a);
            roots.push_back((-p[1] - *s) / two_a);
            p = {p[2]};
            continue;
        }
        // Cubic: zero root first, then the divisor scan p/q with
        // p | constant and q | leading after clearing denominators.
        if (p[0].is_zero()) {
            roots.push_back(Rational(0));
            deflate(Rational(0));
            continue;
        }
        mpz_class lcm_den(1);
        for (const auto& c : p) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
            lcm_den = l;
        }
        std::vector<mpz_class> ip;
        for (const auto& c : p) {
            ip.push_back(c.num() * (lcm_den / c.den()));
        }
        const auto divisors = [](mpz_class v) {
            std::vector<mpz_class> out;
            v = abs(v);
            for (mpz_class d = 1; d * d <= v; ++d) {
                if (v % d == 0) {
                    out.push_back(d);
                    if (d * d != v) out.push_back(v / d);
                }
            }
            return out;
        };
        bool found = false;
        for (const auto& num : divisors(ip.front())) {
            for (const auto& den : divisors(ip.back())) {
                for (int sign : {1, -1}) {
                    const Rational cand(sign * num, den);
                    if (detail::rp_eval(p, cand).is_zero()) {
                        roots.push_back(cand);
                        deflate(cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            break;
        }
    }
    remaining_degree = static_cast<unsigned>(std::max(0, detail::rp_degree(p)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<ProjTransform> two_trigonal_rho_candidates(const CycloNum& c,
                                                       const std::vector<CycloNum>* roots_d) {
    const FieldPtr& field = c.field();
    if (!primitive_root_of_unity(field, 3)) {
        throw field_too_small("the rho family needs a primitive cube root of unity");
    }
    const CycloNum c2_27 = c * c + CycloNum(field, Rational(27));
    if (c2_27.is_zero()) {
        throw error("degenerate family: c^2 + 27 = 0 forces lambda = 0");
    }

    std::vector<CycloNum> ds;
    if (roots_d != nullptr) {
        for (const auto& d : *roots_d) {
            const CycloNum val = d * d * d + c * d * d - Rational(9) * d - c;
            if (!val.is_zero()) {
                throw error("supplied value is not a root of the parameter cubic: " + d.str());
            }
            ds.push_back(d);
        }
    } else {
        if (!c.is_rational()) {
            throw incomplete_roots("parameter c is irrational; supply the cubic roots");
        }
        const Rational cr = c.rational_part();
        unsigned remaining = 0;
        const auto roots = rational_cubic_roots({-cr, Rational(-9), cr, Rational(1)}, remaining);
        if (remaining > 0) {
            throw incomplete_roots("the parameter cubic has non-rational roots; found " +
                                   std::to_string(roots.size()) + " rational ones");
        }
        for (const auto& r : roots) {
            ds.emplace_back(field, r);
        }
    }

    const auto lambdas = nth_root_candidates(c2_27, 3);
    if (lambdas.empty()) {
        throw field_too_small("no cube root of c^2 + 27 found in the session field");
    }

    std::vector<ProjTransform> out;
    const CycloNum zero = CycloNum::zero(field);
    const CycloNum one = CycloNum::one(field);
    const CycloNum three(field, Rational(3));
    for (const auto& d : ds) {
        for (const auto& lam : lambdas) {
            Mat m(field, 4, 4);
            m.at(0, 2) = -d;
            m.at(0, 3) = one;
            m.at(1, 2) = three;
            m.at(1, 3) = d;
            m.at(2, 0) = -(lam * d);
            m.at(2, 1) = lam;
            m.at(3, 0) = three * lam;
            m.at(3, 1) = lam * d;
            out.emplace_back(m);
        }
    }
    if (out.size() > 9) {
        throw error("rho family produced more than nine candidates");
    }
    return out;
}

} // namespace galois
