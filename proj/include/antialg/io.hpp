#pragma once

// Text formats.
//
// Algebra files (.alg):
//   # comment
//   algebra k3 profile antialgebra
//   window 8 4                      (optional: bound, guard)
//   even eps
//   odd a b
//   eps * eps = eps
//   eps * a = 1/2 a
//   a * b = 1/2 eps
//   e[4] * e[4] = ?                 (out of window)
// Basis order is declaration order. An omitted y * x is filled from x * y by
// the profile: supercommutative for antialgebra and jordan-super, skew for
// lie-super; other omitted products are zero. A line `explicit` turns the
// completion off, so every nonzero product must be listed.
//
// Representation files (.rep):
//   dims 2 1
//   image a
//   0 0 0
//   0 0 0
//   1 0 0
//   end
// Each image is the full row-major matrix on V0 (+) V1; unlisted symbols map
// to zero.

#include "antialg/reps.hpp"
#include "antialg/superalg.hpp"

#include <string>
#include <string_view>

namespace antialg {

/// Throws InputError (with line number) on undeclared symbols, malformed
/// rationals, duplicate or conflicting products and parity mismatches.
AlgebraDef parse_algebra_file(std::string_view text);
/// Deterministic: basis in declaration order, products in basis order. Mirror
/// products are left to the completion, or all listed under `explicit` when
/// the table breaks the profile symmetry.
std::string emit_algebra_file(const AlgebraDef& alg);

RepDef parse_rep_file(std::string_view text, const AlgebraDef& alg);
std::string emit_rep_file(const RepDef& rep);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace antialg
