#pragma once

// Axiom verification for graded algebras given by structure constants.
//
// Conventions (homogeneous x, y, z, w; |x| is the parity):
//   supercomm          xy = (-1)^{|x||y|} yx
//   anti-supercomm     xy = -(-1)^{|x||y|} yx
//   even-assoc         (x1 x2) x3 = x1 (x2 x3)                  all even
//   odd-deriv          (ab) y = (ay) b + (-1)^{|a|} a (by)      y odd
//   half-action        x1 (x2 y) = 1/2 (x1 x2) y                x even, y odd
//   commutative-action x1 (x2 y) = x2 (x1 y)                    x even, y odd
//   graded-jacobi      (-1)^{|x||z|} x(yz) + (-1)^{|y||x|} y(zx) + (-1)^{|z||y|} z(xy) = 0
//   jordan-super       ((xy)z)w + ((yw)z)x + ((wx)z)y = (xy)(zw) + (yw)(zx) + (wx)(zy),
//                      each monomial carrying the Koszul sign of reordering
//                      (x, y, z, w) into its variable order.
//
// odd-deriv says the right multiplication R_y : a -> ay is an odd derivation
// D(ab) = D(a) b + (-1)^{|a|} a D(b); this is the sign for which K3 passes.
// jordan-super is the full linearization of (x^2 z) x = x^2 (z x).
//
// A tuple containing a symbol outside the guard band, or whose evaluation
// needs an out-of-window product, is counted as skipped and never decides
// the verdict.

#include "antialg/report.hpp"
#include "antialg/superalg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antialg {

enum class AxiomId {
  supercomm,
  anti_supercomm,
  even_assoc,
  odd_deriv,
  half_action,
  commutative_action,
  graded_jacobi,
  jordan_super,
};

std::string_view to_string(AxiomId a);
/// Throws InputError on an unknown id.
AxiomId parse_axiom(std::string_view text);
std::size_t arity(AxiomId a);

/// antialgebra = {supercomm, even-assoc, odd-deriv, commutative-action, half-action}
/// lie-super   = {anti-supercomm, graded-jacobi}
/// jordan-super= {supercomm, jordan-super}
std::vector<AxiomId> profile_members(Profile p);

struct Witness {
  AxiomId axiom;
  std::vector<std::size_t> tuple;
  Element lhs;
  Element rhs;
};

struct AxiomTally {
  AxiomId axiom;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;

  Verdict verdict() const;
};

struct Report {
  std::vector<AxiomTally> tallies;
  std::vector<Witness> witnesses;  ///< at most kMaxWitnesses per axiom

  static constexpr std::size_t kMaxWitnesses = 16;

  Verdict verdict() const;
  std::size_t checked() const;
  std::size_t skipped() const;
  std::size_t failed() const;
  bool passed() const { return verdict() == Verdict::pass; }
};

enum class Execution { serial, parallel };

/// Both sides of the identity for one basis tuple, or nullopt when the tuple
/// is outside the guard band or touches an out-of-window product.
std::optional<std::pair<Element, Element>> evaluate_axiom(const AlgebraDef& alg, AxiomId ax,
                                                          std::span<const std::size_t> tuple);

Report check_axiom(const AlgebraDef& alg, AxiomId ax, Execution exec = Execution::parallel);
Report check_profile(const AlgebraDef& alg, Profile p, Execution exec = Execution::parallel);

std::string describe(const Witness& w, const AlgebraDef& alg);

/// One NamedCheck per axiom tally, ids prefixed with `prefix.`.
CheckList to_checks(const Report& r, const AlgebraDef& alg, std::string_view prefix);

struct GenerationStep {
  Element value;
  std::string expression;
};

struct GenerationTrace {
  bool generated = false;
  /// Odd basis vectors followed by the products that enlarged the span.
  std::vector<GenerationStep> spanning;
  /// One line per even basis vector, e.g. `eps = 2*(a*b)`; "not reached" when absent.
  std::vector<std::string> even_expressions;
};

/// Closes the odd basis under multiplication (skipping out-of-window
/// products) and reports whether the even part is spanned.
GenerationTrace check_generated_by_odd(const AlgebraDef& alg);

}  // namespace antialg
