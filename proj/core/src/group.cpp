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

#include "galois/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace galois {

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<ProjTransform>& generators,
                                           unsigned cap) {
    if (generators.empty()) {
        throw error("group closure needs at least one generator");
    }
    FiniteMatrixGroup g;
    const FieldPtr& field = generators.front().field();
    const ProjTransform id(Mat::identity(field, 4));
    g.elements_.push_back(id);
    g.index_.emplace(id, 0u);

    const auto insert = [&](const ProjTransform& e) -> bool {
        if (g.index_.count(e) != 0) {
            return false;
        }
        if (g.elements_.size() >= cap) {
            throw group_cap_exceeded("group closure exceeded cap " + std::to_string(cap));
        }
        g.index_.emplace(e, static_cast<unsigned>(g.elements_.size()));
        g.elements_.push_back(e);
        return true;
    };

    for (const auto& gen : generators) {
        insert(gen);
        auto it = g.index_.find(gen);
        g.generator_indices_.push_back(it->second);
    }
    // FIFO walk: products of known elements with the generators.
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        const ProjTransform cur = g.elements_[head];
        for (const auto& gen : generators) {
            insert(cur * gen);
        }
    }
    return g;
}

std::optional<unsigned> FiniteMatrixGroup::index_of(const ProjTransform& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::C2: return "C2";
        case GroupTag::C3: return "C3";
        case GroupTag::C4: return "C4";
        case GroupTag::C5: return "C5";
        case GroupTag::C6: return "C6";
        case GroupTag::K4: return "K4";
        case GroupTag::S3: return "S3";
        case GroupTag::Other: return "other";
    }
    return "other";
}

IsoType classify_small_group(const std::vector<ProjTransform>& elements, unsigned order_cap) {
    const unsigned n = static_cast<unsigned>(elements.size());
    IsoType t{GroupTag::Other, n};
    if (n > 6) {
        return t;
    }
    bool abelian = true;
    for (unsigned i = 0; i < n && abelian; ++i) {
        for (unsigned j = i + 1; j < n && abelian; ++j) {
            abelian = (elements[i] * elements[j] == elements[j] * elements[i]);
        }
    }
    unsigned exponent = 1;
    for (const auto& e : elements) {
        exponent = std::lcm(exponent, projective_order(e, order_cap).order);
    }
    switch (n) {
        case 2: t.tag = GroupTag::C2; break;
        case 3: t.tag = GroupTag::C3; break;
        case 4: t.tag = (exponent == 4) ? GroupTag::C4 : GroupTag::K4; break;
        case 5: t.tag = GroupTag::C5; break;
        case 6: t.tag = (abelian ? GroupTag::C6 : GroupTag::S3); break;
        default: break; // order 1 stays Other(1)
    }
    return t;
}

namespace {

SubgroupRecord make_record(std::vector<ProjTransform> elems, unsigned order_cap) {
    std::sort(elems.begin(), elems.end(), CanonLess{});
    SubgroupRecord rec{std::move(elems), {}, {}};
    rec.type = classify_small_group(rec.elements, order_cap);
    for (const auto& e : rec.elements) {
        rec.trace_signature.push_back(e.matrix().trace());
    }
    std::sort(rec.trace_signature.begin(), rec.trace_signature.end(),
              [](const CycloNum& a, const CycloNum& b) { return lex_less(a, b); });
    return rec;
}

std::vector<unsigned> elements_of_order(const FiniteMatrixGroup& g, unsigned order,
                                        unsigned order_cap) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < g.order(); ++i) {
        if (projective_order(g.element(i), order_cap).order == order) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

std::vector<SubgroupRecord> enumerate_s3_subgroups(const FiniteMatrixGroup& g,
                                                   unsigned order_cap) {
    const auto rotations = elements_of_order(g, 3, order_cap);
    const auto involutions = elements_of_order(g, 2, order_cap);
    std::vector<SubgroupRecord> out;
    std::set<std::vector<unsigned>> seen;
    for (const unsigned ri : rotations) {
        const ProjTransform& r = g.element(ri);
        const ProjTransform r2 = r * r;
        for (const unsigned ti : involutions) {
            const ProjTransform& t = g.element(ti);
            // t r t^-1 = r^-1 projectively, tested as t r = r^2 t.
            if (!(t * r == r2 * t)) {
                continue;
            }
            std::vector<ProjTransform> elems{g.element(0), r, r2, t, t * r, t * r2};
            std::vector<unsigned> key;
            for (const auto& e : elems) {
                const auto idx = g.index_of(e);
                if (!idx) {
                    throw error("subgroup element escaped the closure");
                }
                key.push_back(*idx);
            }
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) {
                continue;
            }
            out.push_back(make_record(std::move(elems), order_cap));
        }
    }
    return out;
}

std::vector<SubgroupRecord> enumerate_k4_subgroups(const FiniteMatrixGroup& g,
                                                   unsigned order_cap) {
    const auto involutions = elements_of_order(g, 2, order_cap);
    std::vector<SubgroupRecord> out;
    std::set<std::vector<unsigned>> seen;
    for (std::size_t a = 0; a < involutions.size(); ++a) {
        for (std::size_t b = a + 1; b < involutions.size(); ++b) {
            const ProjTransform& t1 = g.element(involutions[a]);
            const ProjTransform& t2 = g.element(involutions[b]);
            if (!(t1 * t2 == t2 * t1)) {
                continue;
            }
            std::vector<ProjTransform> elems{g.element(0), t1, t2, t1 * t2};
            std::vector<unsigned> key;
            for (const auto& e : elems) {
                const auto idx = g.index_of(e);
                if (!idx) {
                    throw error("subgroup element escaped the closure");
                }
                key.push_back(*idx);
            }
            std::sort(key.begin(), key.end());
            if (key[0] == key[1] || key[1] == key[2] || key[2] == key[3]) {
                continue; // t1 t2 collapsed onto a member; not a K4
            }
            if (!seen.insert(key).second) {
                continue;
            }
            out.push_back(make_record(std::move(elems), order_cap));
        }
    }
    return out;
}

std::optional<S3Signature> s3_signature(const SubgroupRecord& sub, unsigned order_cap) {
    if (!(sub.type == IsoType{GroupTag::S3, 6})) {
        throw error("s3_signature expects an S3 subgroup");
    }
    const FieldPtr& field = sub.elements.front().field();
    for (const auto& e : sub.elements) {
        if (projective_order(e, order_cap).order != 3) {
            continue;
        }
        const EigenStructure es = eigen_structure(e, order_cap);
        if (es.pairs.size() != 3) {
            continue;
        }
        // Multiplicities (2,1,1): identify the two simple eigenvalues.
        std::vector<unsigned> simple;
        unsigned doubled = 0, double_count = 0;
        for (unsigned i = 0; i < 3; ++i) {
            if (es.pairs[i].space.dim() == 1) {
                simple.push_back(i);
            } else if (es.pairs[i].space.dim() == 2) {
                doubled = i;
                ++double_count;
            }
        }
        (void)doubled;
        if (simple.size() != 2 || double_count != 1) {
            continue;
        }
        // The simple-eigenvalue ratio must be a primitive cube root of
        // unity: x^2 + x + 1 = 0.
        const CycloNum ratio = es.pairs[simple[0]].value / es.pairs[simple[1]].value;
        if (!(ratio * ratio + ratio + CycloNum::one(field)).is_zero()) {
            continue;
        }
        return S3Signature{e, es.pairs[simple[0]].space.basis_row(0),
                           es.pairs[simple[1]].space.basis_row(0)};
    }
    return std::nullopt;
}

std::optional<K4Signature> k4_signature(const SubgroupRecord& sub, unsigned order_cap) {
    if (!(sub.type == IsoType{GroupTag::K4, 4})) {
        throw error("k4_signature expects a K4 subgroup");
    }
    std::vector<ProjTransform> zero_trace;
    std::vector<ProjTransform> nonzero_trace;
    for (const auto& e : sub.elements) {
        if (projective_order(e, order_cap).order != 2) {
            continue; // identity
        }
        if (e.matrix().trace().is_zero()) {
            zero_trace.push_back(e);
        } else {
            nonzero_trace.push_back(e);
        }
    }
    if (zero_trace.size() != 1 || nonzero_trace.size() != 2) {
        return std::nullopt;
    }
    std::vector<std::vector<CycloNum>> points;
    for (const auto& t : nonzero_trace) {
        const EigenStructure es = eigen_structure(t, order_cap);
        // Nonzero trace forces multiplicities (3,1); the isolated fixed
        // point is the one-dimensional eigenspace.
        const Subspace* isolated = nullptr;
        bool has_plane = false;
        for (const auto& p : es.pairs) {
            if (p.space.dim() == 1) {
                isolated = &p.space;
            } else if (p.space.dim() == 3) {
                has_plane = true;
            }
        }
        if (isolated == nullptr || !has_plane) {
            return std::nullopt;
        }
        points.push_back(isolated->basis_row(0));
    }
    return K4Signature{nonzero_trace[0], nonzero_trace[1], zero_trace[0], points[0], points[1]};
}

} // namespace galois
