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

#include <stdexcept>
#include <string>

namespace galois {

/// Base class for all engine errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    using error::error;
};

/// Two values from fields with different conductors were combined.
struct field_mismatch : error {
    using error::error;
};

/// Requested an embedding Q(zeta_m) -> Q(zeta_n) with m not dividing n.
struct not_a_subfield : error {
    using error::error;
};

/// A root or eigenvalue needed for the computation does not exist in the
/// session field (or the partial root search cannot exhibit it).
struct field_too_small : error {
    using error::error;
};

struct singular_matrix : error {
    using error::error;
};

struct order_exceeds_cap : error {
    using error::error;
};

struct not_an_involution : error {
    using error::error;
};

struct invalid_curve : error {
    using error::error;
};

struct degenerate_span : error {
    using error::error;
};

/// Both defining forms restrict to zero on a line; the line lies on the
/// curve, which cannot happen for valid input.
struct line_on_curve : error {
    using error::error;
};

struct group_cap_exceeded : error {
    using error::error;
};

/// A K4 stabilizer without a trace-zero involution; contradicts the
/// standard form of such groups.
struct missing_trace_zero : error {
    using error::error;
};

/// The cubic in the rho-family parameter has roots outside the rationals
/// and none were supplied.
struct incomplete_roots : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace galois
