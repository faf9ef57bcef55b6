#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"
#include "antialg/densities.hpp"
#include "antialg/errors.hpp"

#include <doctest.h>

using namespace antialg;

namespace {

/// c z^k dz^{w2/2}
Density d(const Rational& c, int k, int w2) { return Density::monomial(c, k, w2); }

/// Closed form on monomials: {z^n dz^mu, z^m dz^lambda} = (-mu m + lambda n) z^{n+m-1} dz^{lambda+mu+1}.
Density dbracket_oracle(int n, int mu2, int m, int lambda2) {
  const Rational c = make_rational(-mu2, 2) * m + make_rational(lambda2, 2) * n;
  return d(c, n + m - 1, mu2 + lambda2 + 2);
}

}  // namespace

TEST_CASE("density literals") {
  const Density x = parse_density("3/2 z^-2 @ -1/2");
  CHECK(x == d(make_rational(3, 2), -2, -1));
  CHECK(x.parity() == Parity::odd);
  CHECK(d(1, 0, -2).parity() == Parity::even);
  CHECK(parse_density(to_string(x)) == x);
  CHECK(parse_density("z^2 - 1/2 z @ 1") == d(1, 2, 2) - d(make_rational(1, 2), 1, 2));
  CHECK_THROWS_AS(parse_density("z^2 @ 1/3"), InputError);
  CHECK_THROWS_AS(parse_density("z^2"), InputError);
}

TEST_CASE("dmul examples") {
  CHECK(dmul(d(1, 1, 2), d(1, 1, 2)) == d(1, 2, 4));
  CHECK(dmul(d(1, -1, 0), d(1, 1, 0)) == d(1, 0, 0));
}

TEST_CASE("dbracket examples against the closed form") {
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      CHECK(dbracket(d(1, n + 1, -2), d(1, m + 1, -2)) == d(m - n, n + m + 1, -2));
      for (int mu2 = -6; mu2 <= 6; ++mu2)
        for (int la2 : {-3, -2, -1, 0, 1, 2}) {
          CHECK(dbracket(d(1, n, mu2), d(1, m, la2)) == dbracket_oracle(n, mu2, m, la2));
          CHECK(dbracket(d(1, n, mu2), d(1, m, la2)) == dbracket(d(1, m, la2), d(1, n, mu2)) * Rational(-1));
        }
    }
  // {1 dz^-1, g dz^lambda} = g' dz^lambda
  const Density g = d(5, 3, 3) + d(2, -1, 3);
  CHECK(dbracket(d(1, 0, -2), g) == g.derivative());
}

TEST_CASE("antiproduct realizes the ak1 table") {
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) CHECK(antiproduct(d(1, -n, 0), d(1, -m, 0)) == d(1, -n - m, 0));
  const Density f = d(3, 2, 0), gamma = d(1, -1, -1);
  CHECK(antiproduct(f, gamma) == d(make_rational(3, 2), 1, -1));
  CHECK(antiproduct(gamma, f) == antiproduct(f, gamma));
  // a_i a_j = 1/2 (i - j) e_{i+j}, with a_i = z^{1/2 - i} dz^{-1/2} and 2i odd.
  for (int i2 = -5; i2 <= 5; i2 += 2)
    for (int j2 = -5; j2 <= 5; j2 += 2) {
      const int ki = (1 - i2) / 2, kj = (1 - j2) / 2;
      CHECK(antiproduct(d(1, ki, -1), d(1, kj, -1)) == d(make_rational(i2 - j2, 4), -(i2 + j2) / 2, 0));
    }
  CHECK_THROWS_AS(antiproduct(d(1, 0, -2), f), std::invalid_argument);
}

TEST_CASE("superbracket") {
  CHECK(superbracket(d(2, 1, -1), d(3, -2, -1)) == d(3, -1, -2));
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m)
      CHECK(superbracket(d(1, n + 1, -2), d(1, m + 1, -2)) == d(m - n, n + m + 1, -2));
  CHECK_THROWS_AS(superbracket(d(1, 0, 0), d(1, 0, -2)), std::invalid_argument);

  // [[phi, gamma], psi] = 1/2 phi gamma psi' - 1/4 (phi gamma)' psi, all weight -1/2
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        const Density phi = d(1, a, -1), gam = d(1, b, -1), psi = d(1, c, -1);
        const Density lhs = superbracket(superbracket(phi, gam), psi);
        const Density expect = d(make_rational(c, 2) - make_rational(a + b, 4), a + b + c - 1, -1);
        CHECK(lhs == expect);
        const Density rhs = antiproduct(phi, antiproduct(gam, psi)) + antiproduct(gam, antiproduct(phi, psi));
        CHECK(rhs == expect);
      }
}

TEST_CASE("realized windows") {
  for (long b : {0L, 1L, 4L, 8L})
    CHECK(table_diff(realize_window(DensitySpace::antialgebra, WindowSpec::of(b)),
                     builtin(BuiltinName::ak1, WindowSpec::of(b)))
              .empty());
  const AlgebraDef empty = realize_window(DensitySpace::antialgebra, WindowSpec::of(0));
  CHECK(empty.size() == 1);
  CHECK(multiply(empty.element("e[0]"), empty.element("e[0]"), empty) == empty.element("e[0]"));

  for (long b = 1; b <= 10; ++b)
    CHECK(check_profile(realize_window(DensitySpace::antialgebra, WindowSpec::of(b, b / 2)), Profile::antialgebra)
              .passed());
  const AlgebraDef k1 = realize_window(DensitySpace::liesuper, WindowSpec::of(4, 2));
  CHECK(k1.name() == "k1");
  CHECK(check_profile(k1, Profile::lie_super).passed());
  CHECK(density_of(BasisSymbol{"L", Parity::even, 2}, DensitySpace::liesuper) == d(1, 0, -2));
  CHECK(density_of(BasisSymbol{"G", Parity::odd, 1}, DensitySpace::liesuper) == d(1, 0, -1));
  CHECK(parse_density_space("lie-super") == DensitySpace::liesuper);
  CHECK_THROWS_AS(parse_density_space("jordan"), InputError);
}

TEST_CASE("compatibility identity and Poisson-Leibniz") {
  for (long b : {2L, 4L, 8L}) {
    const NamedCheck c = check_compatibility(WindowSpec::of(b, b / 2));
    CHECK(c.verdict == Verdict::pass);
    CHECK(c.checked > 0);
  }
  const CheckList pl = check_poisson_leibniz(100);
  CHECK(pl.size() == 4);
  CHECK(all_passed(pl));
  for (const auto& c : pl) CHECK(c.checked > 0);
  CHECK(all_passed(check_poisson_leibniz(500, 12345)));
}

TEST_CASE("Leibniz expansion on monomials") {
  // {a, b.c} = -mu f g' h - mu f g h' + (beta + gamma) f' g h for a = f dz^mu etc.
  for (int mu2 : {-2, -1, 0, 3})
    for (int be2 : {-1, 0, 2})
      for (int ga2 : {-3, 1})
        for (int x = -2; x <= 2; ++x) {
          const Density a = d(1, x, mu2), b = d(1, 1 - x, be2), c = d(1, x + 2, ga2);
          const Density lhs = dbracket(a, dmul(b, c));
          const Rational coeff = make_rational(-mu2, 2) * (1 - x) + make_rational(-mu2, 2) * (x + 2) +
                                 make_rational(be2 + ga2, 2) * x;
          CHECK(lhs == d(coeff, x + (1 - x) + (x + 2) - 1, mu2 + be2 + ga2 + 2));
          CHECK(lhs == dmul(dbracket(a, b), c) + dmul(b, dbracket(a, c)));
        }
}
