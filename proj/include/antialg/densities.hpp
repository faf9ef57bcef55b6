#pragma once

// Tensor densities f(z) dz^lambda on the sphere with two marked points
// (Laurent polynomials in z), the natural product, the bracket
//   {f dz^mu, g dz^lambda} = (-mu f g' + lambda f' g) dz^{lambda+mu+1},
// the Lie antialgebra F_0 (+) F_{-1/2} and its adjoint F_{-1} (+) F_{-1/2}.
//
// Window dictionaries:
//   antialgebra  e[n] -> z^{-n},        a[i] -> z^{1/2-i} dz^{-1/2}
//   lie-super    L[n] -> z^{1-n} dz^{-1}, G[i] -> z^{1/2-i} dz^{-1/2}
// giving e_n e_m = e_{n+m}, e_n a_i = 1/2 a_{n+i}, a_i a_j = 1/2 (i-j) e_{i+j}
// and [L_n, L_m] = (n-m) L_{n+m}, [L_n, G_i] = (n/2 - i) G_{n+i},
// [G_i, G_j] = 1/2 L_{i+j}.

#include "antialg/axioms.hpp"
#include "antialg/exactla.hpp"
#include "antialg/report.hpp"
#include "antialg/superalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace antialg {

class Density {
 public:
  Density() = default;
  /// Weight is given doubled: weight2 = 2 lambda.
  Density(std::map<int, Rational> poly, int weight2);
  static Density monomial(const Rational& c, int exponent, int weight2);

  const std::map<int, Rational>& poly() const noexcept { return poly_; }
  int weight2() const noexcept { return weight2_; }
  Rational weight() const { return make_rational(weight2_, 2); }
  bool is_zero() const noexcept { return poly_.empty(); }
  /// Densities of weight -1/2 are odd, integer weights even.
  Parity parity() const;

  Density derivative() const;  ///< f' dz^lambda

  Density& operator+=(const Density& o);
  Density& operator*=(const Rational& s);
  friend Density operator+(Density a, const Density& b) { return a += b; }
  friend Density operator-(Density a, const Density& b) { return a += b * Rational(-1); }
  friend Density operator*(Density a, const Rational& s) { return a *= s; }
  friend Density operator*(const Rational& s, Density a) { return a *= s; }
  /// Zero densities compare equal regardless of weight.
  friend bool operator==(const Density& a, const Density& b);

 private:
  std::map<int, Rational> poly_;
  int weight2_ = 0;
};

std::string to_string(const Density& d);
/// `3/2 z^-2 @ -1/2`, or a sum such as `z^2 - 1/2 z @ 1`. Throws InputError.
Density parse_density(std::string_view text);

Density dmul(const Density& a, const Density& b);
Density dbracket(const Density& a, const Density& b);

/// The Lie antialgebra product on F_0 (+) F_{-1/2}: f.g = fg, f.gamma =
/// gamma.f = 1/2 f gamma, phi.gamma = {phi, gamma}. Throws
/// std::invalid_argument for other weights.
Density antiproduct(const Density& a, const Density& b);
/// The Lie superbracket on F_{-1} (+) F_{-1/2}: dbracket except
/// [phi, gamma] = 1/2 phi gamma dz^{-1} on two odd arguments.
Density superbracket(const Density& a, const Density& b);

enum class DensitySpace { antialgebra, liesuper };
std::string_view to_string(DensitySpace s);
/// Throws InputError on an unknown name.
DensitySpace parse_density_space(std::string_view text);

/// Density image of a window basis symbol under the dictionary above.
Density density_of(const BasisSymbol& s, DensitySpace space);

/// Window table computed from antiproduct / superbracket.
AlgebraDef realize_window(DensitySpace space, const WindowSpec& w);

/// {a, b.c} = {a,b}.c + b.{a,c} on random monomial triples with weights in
/// 1/2 Z within [-3, 3], plus weight bookkeeping for dbracket and dmul and the
/// vector-field specialization {f dz^{-1}, g dz^lambda} = (f g' + lambda f' g) dz^lambda.
CheckList check_poisson_leibniz(std::size_t samples, std::uint64_t seed = 0x5eed);

/// [y1.y2, y3] = y1(y2 y3) + y2(y1 y3) with y1.y2 := [y1, y2], for all
/// guarded triples of odd window monomials a[i].
NamedCheck check_compatibility(const WindowSpec& w);

}  // namespace antialg
