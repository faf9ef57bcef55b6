#pragma once

// Representations of Lie antialgebras on graded spaces V = V0 (+) V1 and
// their induction to the adjoint Lie superalgebra.
//
// A representation assigns to each basis symbol a homogeneous operator with
//   (1) rho(ab)    = [rho(a), rho(b)]_+ = 1/2 (rho(a)rho(b) + (-1)^{|a||b|} rho(b)rho(a))
//   (2) rho(x1 x2) = rho(x1) rho(x2)          for even x1, x2.
// Operators act on the left and compose as matrices.
//
// The induced representation of g(a) is
//   rho~(y) = 1/2 rho(y),   rho~(y1.y2) = [rho~(y1), rho~(y2)] = 1/4 (rho(y1)rho(y2) + rho(y2)rho(y1)),
// the normalization under which it respects the bracket of g(a). Its odd
// image is rho(a1) and its even image is spanned by the anticommutators
// rho(y1)rho(y2) + rho(y2)rho(y1).

#include "antialg/adjoint.hpp"
#include "antialg/exactla.hpp"
#include "antialg/report.hpp"
#include "antialg/superalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antialg {

/// Homogeneous operator on V0 (+) V1, coordinates ordered V0 then V1.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Throws std::invalid_argument when `m` is not (d0+d1) square or has
  /// entries outside the blocks allowed by `parity`.
  GradedMatrix(std::size_t d0, std::size_t d1, Parity parity, Matrix m);
  static GradedMatrix zero(std::size_t d0, std::size_t d1, Parity parity);
  static GradedMatrix identity(std::size_t d0, std::size_t d1);

  std::size_t d0() const noexcept { return d0_; }
  std::size_t d1() const noexcept { return d1_; }
  std::size_t dim() const noexcept { return d0_ + d1_; }
  Parity parity() const noexcept { return parity_; }
  const Matrix& matrix() const noexcept { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  GradedMatrix& operator+=(const GradedMatrix& o);
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a += b * Rational(-1); }
  friend GradedMatrix operator*(GradedMatrix a, const Rational& s);
  friend GradedMatrix operator*(const Rational& s, GradedMatrix a) { return std::move(a) * s; }
  /// Zero operators compare equal regardless of parity.
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  std::size_t d0_ = 0, d1_ = 0;
  Parity parity_ = Parity::even;
  Matrix m_;
};

/// True when the entries of `m` respect the block pattern of `parity`.
bool fits_parity(const Matrix& m, std::size_t d0, Parity parity);

/// XY. Throws std::invalid_argument on a dimension mismatch.
GradedMatrix compose(const GradedMatrix& x, const GradedMatrix& y);
/// 1/2 (XY + (-1)^{|X||Y|} YX)
GradedMatrix jordan_product(const GradedMatrix& x, const GradedMatrix& y);
/// XY - (-1)^{|X||Y|} YX
GradedMatrix super_commutator(const GradedMatrix& x, const GradedMatrix& y);

std::string to_string(const GradedMatrix& m);

class RepDef {
 public:
  RepDef() = default;
  /// One image per basis position of `algebra`. Throws InputError when an
  /// image has the wrong parity or dimensions.
  RepDef(AlgebraDef algebra, std::size_t d0, std::size_t d1, std::vector<GradedMatrix> images);
  static RepDef zero(AlgebraDef algebra, std::size_t d0, std::size_t d1);

  const AlgebraDef& algebra() const noexcept { return algebra_; }
  std::size_t d0() const noexcept { return d0_; }
  std::size_t d1() const noexcept { return d1_; }
  const std::vector<GradedMatrix>& images() const noexcept { return images_; }
  const GradedMatrix& image(std::size_t i) const { return images_.at(i); }
  /// Linear extension to a homogeneous element.
  GradedMatrix image(const Element& e) const;
  bool is_zero() const;

 private:
  AlgebraDef algebra_;
  std::size_t d0_ = 0, d1_ = 0;
  std::vector<GradedMatrix> images_;
};

/// Block-diagonal sum on (V0 (+) V0') (+) (V1 (+) V1'). Both must represent
/// the same algebra.
RepDef direct_sum(const RepDef& a, const RepDef& b);

/// Checks `rep.condition1` on all basis pairs and `rep.condition2` on even
/// pairs; pairs with an out-of-window product are skipped.
CheckList check_rep(const RepDef& rep);

struct InducedRep {
  Adjoint adjoint;
  RepDef rep;        ///< representation of adjoint.lie.algebra
  CheckList checks;  ///< induce.well-defined, induce.bracket-compatible, induce.even-from-odd
};

/// Throws PreconditionError when check_rep fails or the algebra is not a
/// Lie antialgebra.
InducedRep induce_superrep(const RepDef& rep);

struct OspRelationReport {
  bool is_k3_rep = false;  ///< phase 1 passed
  CheckList phase1;
  CheckList phase2;  ///< empty when phase 1 failed
  GradedMatrix h, e, f;
};

/// The osp(1|2) relations for odd A, B with H = -(AB+BA), E' = A^2,
/// F = -B^2 and the super commutator: [H,E'] = 2E', [H,F] = -2F,
/// [E',F] = H, [H,A] = A, [H,B] = -B, [E',A] = 0, [E',B] = A, [F,A] = B,
/// [F,B] = 0, [A,A] = 2E', [B,B] = -2F, [A,B] = -H.
CheckList osp_relations(const GradedMatrix& a, const GradedMatrix& b);

/// Phase 1: AB - BA = E, AE + EA = A, BE + EB = B, E^2 = E.
/// Phase 2, run only after phase 1 passes, is osp_relations(A, B).
/// Throws std::invalid_argument on wrong parities or mismatched dimensions.
OspRelationReport k3_osp_relations(const GradedMatrix& a, const GradedMatrix& b, const GradedMatrix& e);

/// Whether rho~ vanishes on the ideal generated by the Casimir element of
/// U(g(a)). The Casimir in the needed normalization is not available, so this
/// always returns nullopt.
std::optional<bool> annihilates_casimir_ideal(const RepDef& rep);

}  // namespace antialg
