#pragma once

// The adjoint Lie superalgebra g(a) = S^2_{a0} a1 (+) a1 of a Lie antialgebra,
// the derivation superalgebra Der(a), and the embedding g(a) -> Der(a).
//
// Bracket on g(a), with u = y1.y2 the class of y1 (.) y2:
//   [y1, y2]       = y1.y2
//   [y1.y2, y3]    = y1(y2 y3) + y2(y1 y3)
//   [y1.y2, y3.y4] = [y1.y2, y3].y4 + [y1.y2, y4].y3
//
// Operators on a act on the right, v -> vX, as the multiplications R_y do.
// Matrices act on coordinate columns, so "X then Y" is the matrix Y*X and
// the super commutator of operators is
//   [X, Y] = Y*X - (-1)^{|X||Y|} X*Y.
// With this convention iota(y) = R_y, iota(y1.y2) = R_y1 R_y2 + R_y2 R_y1 is a
// homomorphism; with left composition it is an anti-homomorphism.

#include "antialg/axioms.hpp"
#include "antialg/report.hpp"
#include "antialg/superalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antialg {

/// S^2_{a0} a1: symmetric tensors y_i (.) y_j (i <= j over the odd basis)
/// modulo y1 x (.) y2 - y1 (.) y2 x for even x.
class SymSpace {
 public:
  SymSpace() = default;
  explicit SymSpace(const AlgebraDef& alg);

  /// Odd basis positions of the source algebra, in basis order.
  const std::vector<std::size_t>& odd() const noexcept { return odd_; }
  /// Ambient symbols as pairs of source basis positions (first <= second).
  const std::vector<std::pair<std::size_t, std::size_t>>& ambient() const noexcept { return ambient_; }
  std::size_t ambient_dim() const noexcept { return ambient_.size(); }
  /// Relation vectors in ambient coordinates, one per (y1, x, y2) whose
  /// products are in-window and which is nonzero.
  const std::vector<Vector>& relations() const noexcept { return relations_; }
  std::size_t relation_rank() const noexcept { return reduced_.rank(); }
  /// Ambient positions that serve as quotient representatives.
  const std::vector<std::size_t>& quotient_basis() const noexcept { return quotient_; }
  std::size_t dim() const noexcept { return quotient_.size(); }

  /// Ambient coordinate vector of y_i (.) y_j for source positions i, j.
  Vector sym(std::size_t i, std::size_t j) const;
  /// y (.) z for odd source elements, bilinearly.
  Vector sym(const Element& y, const Element& z) const;
  /// Quotient coordinates of an ambient vector.
  Vector reduce(const Vector& ambient) const;
  /// `y1.y2` for quotient basis element k.
  std::string symbol_name(std::size_t k, const AlgebraDef& alg) const;
  std::size_t ambient_index(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::size_t> odd_;
  std::vector<long> odd_slot_;  ///< source position -> index into odd_, or -1
  std::vector<std::pair<std::size_t, std::size_t>> ambient_;
  std::vector<Vector> relations_;
  RrefResult reduced_;
  std::vector<std::size_t> quotient_;
};

/// Throws PreconditionError when `alg` does not pass the antialgebra profile.
SymSpace sym2_quotient(const AlgebraDef& alg);

struct LieSuperDef {
  AlgebraDef algebra;  ///< hint lie-super
  std::string source;  ///< name of the algebra it was built from
};

struct Adjoint {
  LieSuperDef lie;
  SymSpace sym;
};

/// g(a). The even basis is the SymSpace quotient basis (named `y1.y2`),
/// followed by the odd basis of a. Throws PreconditionError for
/// non-antialgebra input.
Adjoint adjoint_algebra(const AlgebraDef& alg);

/// [w, y3] for an ambient vector w, as an element of a1; nullopt when a
/// product leaves the window.
std::optional<Element> ambient_bracket(const SymSpace& s, const Vector& w, std::size_t y3, const AlgebraDef& alg);

/// [y1 (.) y2 x, y3] = [y1 x (.) y2, y3] over all basis x, y1, y2, y3, and
/// reduce([u, r]) = 0 for every quotient basis u and relation r.
CheckList check_well_defined(const Adjoint& adj, const AlgebraDef& alg);

/// Right-action super commutator, see the header comment.
Matrix operator_bracket(const Matrix& x, Parity px, const Matrix& y, Parity py);

/// Matrix of R_y on a (column j holds the coordinates of e_j y).
Matrix right_multiplication(const Element& y, const AlgebraDef& alg);

struct Derivations {
  LieSuperDef lie;
  std::vector<Matrix> even;
  std::vector<Matrix> odd;
};

/// Der(a): homogeneous D with D(xy) = D(x)y + (-1)^{|D||x|} x D(y), as a Lie
/// superalgebra under the operator bracket. Requires a table without
/// out-of-window entries.
Derivations derivations(const AlgebraDef& alg);

/// True when D satisfies the derivation identity on every basis pair.
bool is_derivation(const Matrix& d, Parity pd, const AlgebraDef& alg);

struct EmbeddingReport {
  CheckList checks;  ///< well-defined, lands-in-der, homomorphism, injective
  std::size_t g_even = 0, g_odd = 0;
  std::size_t der_even = 0, der_odd = 0;
  bool surjective = false;
};

EmbeddingReport embedding_check(const AlgebraDef& alg);

}  // namespace antialg
