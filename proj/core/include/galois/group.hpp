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

#include <map>
#include <optional>

#include "galois/projective.hpp"

namespace galois {

/// A finite subgroup of PGL_4 stored as the full list of canonical
/// elements. Closure is a deterministic breadth-first walk, so element
/// indices are reproducible for identical generator input.
class FiniteMatrixGroup {
public:
    /// Breadth-first closure of the generators; throws group_cap_exceeded
    /// when more than cap elements appear. Element 0 is the identity.
    static FiniteMatrixGroup close(const std::vector<ProjTransform>& generators,
                                   unsigned cap = 1000);

    unsigned order() const { return static_cast<unsigned>(elements_.size()); }
    const ProjTransform& element(unsigned i) const { return elements_.at(i); }
    const std::vector<ProjTransform>& elements() const { return elements_; }
    const std::vector<unsigned>& generator_indices() const { return generator_indices_; }
    std::optional<unsigned> index_of(const ProjTransform& g) const;
    const FieldPtr& field() const { return elements_.front().field(); }

private:
    std::vector<ProjTransform> elements_;
    std::vector<unsigned> generator_indices_;
    std::map<ProjTransform, unsigned, CanonLess> index_;
};

enum class GroupTag { C2, C3, C4, C5, C6, K4, S3, Other };

struct IsoType {
    GroupTag tag = GroupTag::Other;
    unsigned order = 0;

    friend bool operator==(const IsoType& a, const IsoType& b) {
        return a.tag == b.tag && a.order == b.order;
    }
};

std::string to_string(GroupTag tag);

/// Classification by (order, abelianness, element orders); definitive for
/// order <= 6, informational Other(order) beyond.
IsoType classify_small_group(const std::vector<ProjTransform>& elements,
                             unsigned order_cap = 120);

/// A subgroup given by its sorted canonical element list, with its
/// isomorphism type and the multiset of canonical-representative traces.
struct SubgroupRecord {
    std::vector<ProjTransform> elements;
    IsoType type;
    std::vector<CycloNum> trace_signature;
};

/// All subgroups isomorphic to S3, found from pairs (r of projective
/// order 3, t of projective order 2) with t r t^-1 = r^-1 projectively.
std::vector<SubgroupRecord> enumerate_s3_subgroups(const FiniteMatrixGroup& g,
                                                   unsigned order_cap = 120);

/// All Klein four-subgroups, found from unordered pairs of distinct
/// projectively commuting involutions.
std::vector<SubgroupRecord> enumerate_k4_subgroups(const FiniteMatrixGroup& g,
                                                   unsigned order_cap = 120);

/// The order-3 element of an S3 subgroup whose normalized eigenvalues have
/// multiplicities (2,1,1) with the two simple eigenvalues in primitive
/// cube-root ratio, together with the two simple eigenvectors. The line
/// through those points is the only possible S3-line for this subgroup.
/// Returns nothing when no order-3 element matches the pattern.
struct S3Signature {
    ProjTransform rotation;
    std::vector<CycloNum> p1;
    std::vector<CycloNum> p2;
};

std::optional<S3Signature> s3_signature(const SubgroupRecord& sub, unsigned order_cap = 120);

/// The standard-form pattern of a K4 line stabilizer: exactly one
/// involution of trace zero and two of nonzero trace, each of the latter
/// fixing a plane and an isolated point. Returns those two involutions,
/// the trace-zero one, and the isolated fixed points.
struct K4Signature {
    ProjTransform tau1;
    ProjTransform tau2;
    ProjTransform rho;
    std::vector<CycloNum> p1;
    std::vector<CycloNum> p2;
};

std::optional<K4Signature> k4_signature(const SubgroupRecord& sub, unsigned order_cap = 120);

} // namespace galois
