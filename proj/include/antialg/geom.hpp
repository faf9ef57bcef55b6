#pragma once

// Superfunctions on R^{2|1} with even coordinates p, q and odd coordinate t
// (tau), the brackets defined by the bivectors
//   P      = dp^dq + 1/2 dt^dt
//   Lambda = dt^E + t dp^dq,        E = p dp + q dq + t dt (Euler field),
// the invariant-bivector solve, and the extraction of K3, AK(1) and
// osp(1,2) tables from spaces of functions.
//
// Coordinates:
//   {F,G} = dpF dqG - dqF dpG + sigma_P (-1)^{|F|} dtF dtG
//   ]F,G[ = -(-1)^{|F|}/2 ( s1 dtF E(G) + s2(|F|) E(F) dtG + s3 t (dpF dqG - dqF dpG) )
// The signs sigma_P, s1, s2(even), s2(odd), s3 are fixed by calibrate_signs()
// and frozen in kBracketSigns. ]F,G[ is supercommutative for the shifted
// parities: ]F,G[ = (-1)^{(|F|+1)(|G|+1)} ]G,F[.

#include "antialg/report.hpp"
#include "antialg/superalg.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antialg {

/// Laurent polynomial in p, q: exponent pair -> coefficient, no zeros stored.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(const Rational& c, int ep, int eq);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(Key k, const Rational& c);

  LaurentPoly2 dp() const;
  LaurentPoly2 dq() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Rational& s);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a += b * Rational(-1); }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Rational& s) { return a *= s; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// F = body + t * soul.
class SuperFunction {
 public:
  SuperFunction() = default;
  SuperFunction(LaurentPoly2 body, LaurentPoly2 soul) : body_(std::move(body)), soul_(std::move(soul)) {}
  /// c p^ep q^eq t^et with et in {0, 1}.
  static SuperFunction monomial(const Rational& c, int ep, int eq, int et);
  static SuperFunction constant(const Rational& c) { return monomial(c, 0, 0, 0); }

  const LaurentPoly2& body() const noexcept { return body_; }
  const LaurentPoly2& soul() const noexcept { return soul_; }
  bool is_zero() const noexcept { return body_.is_zero() && soul_.is_zero(); }
  /// Even iff soul = 0, odd iff body = 0; zero reports even.
  ParityClass parity() const;
  /// Throws std::invalid_argument for a mixed function.
  Parity homogeneous_parity() const;

  SuperFunction dp() const;
  SuperFunction dq() const;
  SuperFunction dt() const;  ///< the soul, with parity flipped
  SuperFunction euler() const;

  SuperFunction& operator+=(const SuperFunction& o);
  SuperFunction& operator*=(const Rational& s);
  friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
  friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a += b * Rational(-1); }
  friend SuperFunction operator*(SuperFunction a, const Rational& s) { return a *= s; }
  friend SuperFunction operator*(const Rational& s, SuperFunction a) { return a *= s; }
  friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
  friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

 private:
  LaurentPoly2 body_, soul_;
};

std::string to_string(const SuperFunction& f);
/// Terms like `3/2 p^2 q^-1 t`, joined by + and -. Throws InputError.
SuperFunction parse_superfunction(std::string_view text);

struct BracketSigns {
  int sigma_p = 1;
  int s1 = 1;
  int s2_even = 1;
  int s2_odd = 1;
  int s3 = 1;

  auto operator<=>(const BracketSigns&) const = default;
};

std::string to_string(const BracketSigns& s);

/// The calibrated signs.
inline constexpr BracketSigns kBracketSigns{-1, 1, -1, 1, 1};

/// Every sign choice for which extract_table(linear) is K3, the quadratic
/// space passes lie-super and P-brackets act by derivations of ],[ on the
/// degree <= 2 monomials. Calibration is unique when this has one element.
std::vector<BracketSigns> calibrate_signs();

/// Both throw std::invalid_argument for mixed-parity input.
SuperFunction pbracket(const SuperFunction& f, const SuperFunction& g, const BracketSigns& s = kBracketSigns);
SuperFunction abracket(const SuperFunction& f, const SuperFunction& g, const BracketSigns& s = kBracketSigns);
/// Bilinear extensions splitting each argument into its even and odd parts.
SuperFunction pbracket_linear(const SuperFunction& f, const SuperFunction& g);
SuperFunction abracket_linear(const SuperFunction& f, const SuperFunction& g);

/// lambda with E(F) = lambda F; throws std::invalid_argument when F is zero or
/// not homogeneous.
Rational euler_degree(const SuperFunction& f);

// ---------------------------------------------------------------------------
// Bivectors

enum class BivectorSlot { pq, pt, qt, pp, qq, tt };
inline constexpr std::array kBivectorSlots = {BivectorSlot::pq, BivectorSlot::pt, BivectorSlot::qt,
                                              BivectorSlot::pp, BivectorSlot::qq, BivectorSlot::tt};
std::string_view to_string(BivectorSlot s);

/// Coefficient functions on the six coordinate bivectors. Pairings with
/// dF^dG:
///   pq: dpF dqG - dqF dpG
///   pt: dtF dpG - (-1)^{|F|} dpF dtG        qt: likewise with q
///   tt: (1 - (-1)^{|F|}) dtF dtG
///   pp, qq: 0 (dp^dp = dq^dq = 0 for even coordinates)
struct BivectorAnsatz {
  std::map<BivectorSlot, SuperFunction> coeff;

  const SuperFunction& at(BivectorSlot s) const;
  bool operator==(const BivectorAnsatz& o) const;
};

std::string to_string(const BivectorAnsatz& b);

BivectorAnsatz poisson_bivector();  ///< P
BivectorAnsatz lambda_bivector();   ///< Lambda

/// <B, dF^dG> for homogeneous F, G.
SuperFunction contract(const BivectorAnsatz& b, const SuperFunction& f, const SuperFunction& g);

struct BivectorSpace {
  std::vector<BivectorAnsatz> basis;
  std::vector<Parity> parity;

  bool contains(const BivectorAnsatz& b) const;
};

/// Bivectors with polynomial coefficients of total degree <= max_deg
/// (t counts 1) invariant under the Hamiltonian fields X_H = {H, .} for
/// H in {p^2, pq, q^2, pt, qt}:
///   X_H <B, dF^dG> = (-1)^{|H||B|} <B, d(X_H F)^dG> + (-1)^{|H|(|B|+|F|)} <B, dF^d(X_H G)>
/// on all pairs F, G of {1, p, q, t, p^2, pq, q^2, pt, qt}.
BivectorSpace invariant_bivectors(int max_deg);

// ---------------------------------------------------------------------------
// Table extraction

enum class FunctionSpace { linear, quadratic, deg1_window, deg2_window };
std::string_view to_string(FunctionSpace s);
/// `linear`, `quadratic`, `deg1-window`, `deg2-window`. Throws InputError.
FunctionSpace parse_function_space(std::string_view text);

/// linear:   ]F,G[ on {t, q, p} read as eps, a, b after parity inversion
/// quadratic:{F,G} on {p^2, pq, q^2 | pt, qt} named p2, pq, q2, pt, qt
/// deg1:     ]F,G[ on e[n] = P(t (q/p)^n), a[i] = P(p (q/p)^{i+1/2}), |label| <= window
/// deg2:     {F,G} on L[n] = p^2 (q/p)^{n+1}, G[i] = t p (q/p)^{i+1/2}, |label| <= window
/// Throws InputError when a window space has no window.
AlgebraDef extract_table(FunctionSpace space, std::optional<int> window = std::nullopt,
                         const BracketSigns& signs = kBracketSigns);

/// The function attached to a basis symbol of an extracted space.
SuperFunction function_of(const BasisSymbol& s, FunctionSpace space);

/// {H, ]F,G[} = ]{H,F}, G[ + (-1)^{|H|(|F|+1)} ]F, {H,G}[ for quadratic H and
/// all monomials F, G of degree <= max_deg. The sign uses the shifted parity
/// of F, the parity for which ],[ is supercommutative.
NamedCheck check_equivariance(int max_deg, const BracketSigns& signs = kBracketSigns);

}  // namespace antialg
