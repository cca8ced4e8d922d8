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

#include "galois/group.hpp"
#include "galois/line.hpp"

namespace galois {

enum class LineType { S3, K4, C4, C5, C6 };

std::string to_string(LineType t);

/// A certified Galois line: the stabilizer within the supplied group has
/// order equal to the projection degree 6 - length(C cap l), that degree is
/// at least 4, and every stabilizer element satisfies the exact
/// projection-invariance condition. Certification never consumes eigen
/// data; candidate generation does.
struct GaloisLineRecord {
    ProjLine line;
    std::vector<unsigned> stabilizer; // element indices into the scanned group
    unsigned degree = 0;
    LineType type = LineType::S3;
    std::vector<std::string> provenance;
};

struct ScanOptions {
    bool s3 = false;
    bool k4 = false;
    bool cyclic = false;
    unsigned order_cap = 120;
};

/// Outcome of a scan. A scan is complete when nothing was skipped and no
/// unresolved candidate families remain; violations must always be empty,
/// anything listed there contradicts a proven bound or fact and is
/// reported as a hard error by the CLI.
struct ScanReport {
    ScanOptions options;
    std::vector<GaloisLineRecord> records; // sorted by canonical dual form
    std::map<LineType, unsigned> counts;
    std::vector<std::string> violations;
    std::vector<std::string> skipped;
    std::vector<std::string> unresolved_families;

    unsigned count(LineType t) const;
    unsigned cyclic_count() const;
    bool complete() const { return skipped.empty() && unresolved_families.empty(); }
};

/// pi_l . g = pi_l on C, tested as exact ideal membership: with l cut out by
/// L1, L2, the degree-2 form pullback(g,L1)*L2 - pullback(g,L2)*L1 must lie
/// in the span of Q.
bool projection_invariant(const ProjLine& l, const ProjTransform& g, const CurveModel& c);

/// Indices of the group elements satisfying projection_invariant; always a
/// subgroup.
std::vector<unsigned> line_stabilizer(const ProjLine& l, const FiniteMatrixGroup& g,
                                      const CurveModel& c);

/// Certification: degree = 6 - intersection length must be >= 4 and equal
/// to the stabilizer order. Returns nothing otherwise.
std::optional<GaloisLineRecord> certify_line(const ProjLine& l, const FiniteMatrixGroup& g,
                                             const CurveModel& c, unsigned order_cap = 120);

/// Index of the first group element failing check_automorphism, if any.
std::optional<unsigned> first_non_automorphism(const FiniteMatrixGroup& g, const CurveModel& c);

/// Candidate generation + certification for the requested line types.
///
/// S3 pipeline: S3 subgroups -> eigen signature -> join of the two simple
/// fixed points -> certify. K4 pipeline: K4 subgroups -> trace signature ->
/// join of the two isolated fixed points -> certify. Cyclic pipeline:
/// elements of projective order 4, 5, 6; every 2-dimensional eigenspace of
/// the transpose action cuts out a candidate line; 3-dimensional ones are
/// reported as unresolved families, not scanned.
///
/// Skipped work items (field_too_small) are listed, never silently
/// dropped. Completed scans are checked against the global bounds (at most
/// 10 S3-lines, at most 15 K4-lines), the per-type stabilizer
/// disjointness facts, and the trace-zero fixed-line geometry of every K4
/// record; failures land in violations.
ScanReport find_galois_lines(const CurveModel& c, const FiniteMatrixGroup& g,
                             const ScanOptions& options);

/// Bound assertions on per-type counts; returns one message per violated
/// bound. Exposed separately so the assertion itself is testable.
std::vector<std::string> count_bound_violations(const std::map<LineType, unsigned>& counts);

/// Fixed-line geometry of the trace-zero involution rho of a K4 record:
/// Fix(rho) must be two lines, the record's line meeting C with length
/// exactly 2 and the other line with length 0. When the two intersection
/// points are expressible over the field, rho is additionally checked to
/// fix exactly those two points of C; otherwise the point-level check is
/// skipped and the length-level facts stand. Throws missing_trace_zero if
/// the stabilizer has no trace-zero involution.
bool k4_fixed_lines_check(const GaloisLineRecord& rec, const FiniteMatrixGroup& g,
                          const CurveModel& c, unsigned order_cap = 120);

/// The involution family rho(d, lambda) for the curve family with two
/// cyclic trigonal projections (Q = XW - YZ): d runs over the roots of
/// d^3 + c d^2 - 9 d - c and lambda over the cube roots of c^2 + 27, at
/// most nine matrices
///   [    0       0   -d   1 ]
///   [    0       0    3   d ]
///   [ -l*d       l    0   0 ]
///   [  3*l     l*d    0   0 ].
/// Roots of the cubic are taken from roots_d when supplied (each is
/// verified); otherwise c must be rational and a rational-root search runs,
/// throwing incomplete_roots when irrational roots remain.
std::vector<ProjTransform> two_trigonal_rho_candidates(
    const CycloNum& c, const std::vector<CycloNum>* roots_d = nullptr);

} // namespace galois
