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

#include "galois/form.hpp"

#include <sstream>

namespace galois {

HomForm::HomForm(FieldPtr field, unsigned degree) : field_(std::move(field)), degree_(degree) {
    if (degree == 0) {
        throw error("homogeneous forms here have degree >= 1");
    }
}

void HomForm::set(const Exponents& e, const CycloNum& c) {
    if (e.total() != degree_) {
        throw error("monomial degree does not match the form degree");
    }
    if (c.is_zero()) {
        terms_.erase(e);
    } else {
        terms_.insert_or_assign(e, c);
    }
}

HomForm HomForm::variable(const FieldPtr& field, unsigned index) {
    HomForm f(field, 1);
    Exponents e;
    e.e[index] = 1;
    f.set(e, CycloNum::one(field));
    return f;
}

HomForm HomForm::from_terms(const FieldPtr& field, unsigned degree,
                            const std::vector<std::pair<CycloNum, Exponents>>& terms) {
    HomForm f(field, degree);
    for (const auto& [c, e] : terms) {
        CycloNum cur = f.coefficient(e);
        f.set(e, cur + c);
    }
    return f;
}

HomForm HomForm::linear(const FieldPtr& field, const std::vector<CycloNum>& coeffs) {
    if (coeffs.size() != 4) {
        throw error("linear form needs 4 coefficients");
    }
    HomForm f(field, 1);
    for (unsigned i = 0; i < 4; ++i) {
        Exponents e;
        e.e[i] = 1;
        f.set(e, coeffs[i]);
    }
    return f;
}

CycloNum HomForm::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        return CycloNum::zero(field_);
    }
    return it->second;
}

std::vector<CycloNum> HomForm::linear_coeffs() const {
    if (degree_ != 1) {
        throw error("linear_coeffs on a form of degree != 1");
    }
    std::vector<CycloNum> out(4, CycloNum::zero(field_));
    for (const auto& [e, c] : terms_) {
        for (unsigned i = 0; i < 4; ++i) {
            if (e.e[i] == 1) {
                out[i] = c;
            }
        }
    }
    return out;
}

HomForm HomForm::operator-() const {
    HomForm r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

HomForm& HomForm::operator+=(const HomForm& o) {
    if (degree_ != o.degree_) {
        throw error("adding forms of different degrees");
    }
    for (const auto& [e, c] : o.terms_) {
        set(e, coefficient(e) + c);
    }
    return *this;
}

HomForm& HomForm::operator-=(const HomForm& o) {
    if (degree_ != o.degree_) {
        throw error("subtracting forms of different degrees");
    }
    for (const auto& [e, c] : o.terms_) {
        set(e, coefficient(e) - c);
    }
    return *this;
}

HomForm operator*(const HomForm& a, const HomForm& b) {
    HomForm r(a.field_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (unsigned i = 0; i < 4; ++i) {
                e.e[i] = ea.e[i] + eb.e[i];
            }
            r.set(e, r.coefficient(e) + ca * cb);
        }
    }
    return r;
}

HomForm operator*(const CycloNum& s, HomForm a) {
    if (s.is_zero()) {
        a.terms_.clear();
        return a;
    }
    for (auto& [e, c] : a.terms_) {
        c *= s;
    }
    return a;
}

bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

CycloNum HomForm::evaluate(const std::vector<CycloNum>& point) const {
    CycloNum acc = CycloNum::zero(field_);
    for (const auto& [e, c] : terms_) {
        CycloNum term = c;
        for (unsigned i = 0; i < 4; ++i) {
            for (unsigned k = 0; k < e.e[i]; ++k) {
                term *= point[i];
            }
        }
        acc += term;
    }
    return acc;
}

std::vector<Exponents> HomForm::monomial_basis(unsigned degree) {
    std::vector<Exponents> out;
    for (unsigned a = 0; a <= degree; ++a) {
        for (unsigned b = 0; a + b <= degree; ++b) {
            for (unsigned c = 0; a + b + c <= degree; ++c) {
                Exponents e;
                e.e = {a, b, c, degree - a - b - c};
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Exponents& x, const Exponents& y) { return x.e > y.e; });
    return out;
}

std::vector<CycloNum> HomForm::dense() const {
    const auto basis = monomial_basis(degree_);
    std::vector<CycloNum> out;
    out.reserve(basis.size());
    for (const auto& e : basis) {
        out.push_back(coefficient(e));
    }
    return out;
}

std::string HomForm::str() const {
    static const char* names[4] = {"X", "Y", "Z", "W"};
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        os << "(" << c.str() << ")";
        for (unsigned i = 0; i < 4; ++i) {
            if (e.e[i] == 0) continue;
            os << "*" << names[i];
            if (e.e[i] > 1) {
                os << "^" << e.e[i];
            }
        }
        first = false;
    }
    return os.str();
}

HomForm pullback(const ProjTransform& g, const HomForm& p) {
    const FieldPtr& field = p.field();
    const Mat& m = g.witness();
    // Row i of the matrix gives the linear form substituted for variable i.
    std::array<HomForm, 4> image{HomForm(field, 1), HomForm(field, 1), HomForm(field, 1),
                                 HomForm(field, 1)};
    for (unsigned i = 0; i < 4; ++i) {
        std::vector<CycloNum> row;
        row.reserve(4);
        for (unsigned j = 0; j < 4; ++j) {
            row.push_back(m.at(i, j));
        }
        image[i] = HomForm::linear(field, row);
    }
    // Cache powers of each substituted linear form up to the degree needed.
    std::array<std::vector<HomForm>, 4> powers;
    HomForm result(field, p.degree());
    for (const auto& [e, c] : p.terms()) {
        HomForm term(field, 0 + p.degree()); // placeholder, reassigned below
        bool started = false;
        for (unsigned i = 0; i < 4; ++i) {
            if (e.e[i] == 0) continue;
            while (powers[i].size() < e.e[i]) {
                if (powers[i].empty()) {
                    powers[i].push_back(image[i]);
                } else {
                    powers[i].push_back(powers[i].back() * image[i]);
                }
            }
            const HomForm& factor = powers[i][e.e[i] - 1];
            term = started ? term * factor : factor;
            started = true;
        }
        result += c * term;
    }
    return result;
}

std::vector<CycloNum> restrict_to_line(const HomForm& p, const Mat& span) {
    if (span.rows() != 2 || span.cols() != 4) {
        throw error("line span must be 2x4");
    }
    const FieldPtr& field = p.field();
    const unsigned d = p.degree();
    // Binary polynomials as coefficient vectors of s^(deg-i) t^i.
    const auto bmul = [&](const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
        std::vector<CycloNum> r(a.size() + b.size() - 1, CycloNum::zero(field));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    };
    std::vector<CycloNum> acc(d + 1, CycloNum::zero(field));
    for (const auto& [e, c] : p.terms()) {
        std::vector<CycloNum> term{c};
        for (unsigned i = 0; i < 4; ++i) {
            const std::vector<CycloNum> lin{span.at(0, i), span.at(1, i)}; // s*A_i + t*B_i
            for (unsigned k = 0; k < e.e[i]; ++k) {
                term = bmul(term, lin);
            }
        }
        for (std::size_t i = 0; i < term.size(); ++i) {
            acc[i] += term[i];
        }
    }
    return acc;
}

bool proportional(const HomForm& a, const HomForm& b, CycloNum& factor) {
    if (b.is_zero()) {
        throw error("proportionality against the zero form");
    }
    if (a.is_zero()) {
        factor = CycloNum::zero(a.field());
        return true;
    }
    const auto& [e, c] = *b.terms().begin();
    const CycloNum mu = a.coefficient(e) / c;
    if (a == mu * b) {
        factor = mu;
        return true;
    }
    return false;
}

HomForm embed(const HomForm& p, const FieldPtr& target) {
    HomForm out(target, p.degree());
    std::vector<std::pair<CycloNum, Exponents>> terms;
    for (const auto& [e, c] : p.terms()) {
        terms.emplace_back(embed(c, target), e);
    }
    return HomForm::from_terms(target, p.degree(), terms);
}

} // namespace galois
