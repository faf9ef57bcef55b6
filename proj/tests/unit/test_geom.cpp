#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"
#include "antialg/errors.hpp"
#include "antialg/geom.hpp"

#include <doctest.h>

using namespace antialg;

namespace {

SuperFunction m(long c, int ep, int eq, int et) { return SuperFunction::monomial(c, ep, eq, et); }
SuperFunction m(const Rational& c, int ep, int eq, int et) { return SuperFunction::monomial(c, ep, eq, et); }

std::vector<SuperFunction> monomials(int lo, int hi) {
  std::vector<SuperFunction> out;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int k = 0; k <= 1; ++k) out.push_back(m(1, i, j, k));
  return out;
}

int parity_sign(const SuperFunction& f) { return sign_of(f.homogeneous_parity()); }

}  // namespace

TEST_CASE("superfunction literals") {
  const SuperFunction f = parse_superfunction("3/2 p^2 q^-1 t - q + 2");
  CHECK(f == m(make_rational(3, 2), 2, -1, 1) - m(1, 0, 1, 0) + m(2, 0, 0, 0));
  CHECK(parse_superfunction(to_string(f)) == f);
  CHECK(f.parity() == ParityClass::mixed);
  CHECK(parse_superfunction("0").is_zero());
  CHECK_THROWS_AS(parse_superfunction("t^2"), InputError);
  CHECK_THROWS_AS(parse_superfunction("x"), InputError);
  CHECK((m(1, 0, 0, 1) * m(1, 1, 0, 1)).is_zero());
}

TEST_CASE("Poisson bracket examples") {
  CHECK(pbracket(m(1, 1, 0, 0), m(1, 0, 1, 0)) == m(1, 0, 0, 0));
  CHECK(pbracket(m(1, 2, 0, 0), m(1, 0, 1, 0)) == m(2, 1, 0, 0));
  CHECK_THROWS_AS(pbracket(m(1, 1, 0, 0) + m(1, 0, 0, 1), m(1, 0, 1, 0)), std::invalid_argument);
}

TEST_CASE("antibracket examples follow the k3 table") {
  const SuperFunction t = m(1, 0, 0, 1), q = m(1, 0, 1, 0), p = m(1, 1, 0, 0);
  CHECK(abracket(t, t) == t);
  CHECK(abracket(t, q) == q * make_rational(1, 2));
  CHECK(abracket(q, p) == t * make_rational(1, 2));
  CHECK(abracket(p, q) == t * make_rational(-1, 2));
}

TEST_CASE("euler degree") {
  CHECK(euler_degree(m(1, 2, 0, 0)) == 2);
  for (int n = -3; n <= 3; ++n) CHECK(euler_degree(m(1, -n, n, 1)) == 1);
  CHECK_THROWS_AS(euler_degree(m(1, 1, 0, 0) + m(1, 2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(euler_degree(SuperFunction{}), std::invalid_argument);
  for (const auto& f : monomials(-1, 2))
    for (const auto& g : monomials(-1, 2)) {
      const SuperFunction fg = f * g;
      if (!fg.is_zero()) CHECK(euler_degree(fg) == euler_degree(f) + euler_degree(g));
    }
}

TEST_CASE("sign calibration is unique") {
  const auto found = calibrate_signs();
  REQUIRE(found.size() == 1);
  CHECK(found[0] == kBracketSigns);
}

TEST_CASE("bracket symmetry and degree on monomials") {
  const auto mons = monomials(-1, 3);
  for (const auto& f : mons)
    for (const auto& g : mons) {
      const int sf = parity_sign(f), sg = parity_sign(g);
      const SuperFunction pb = pbracket(f, g), ab = abracket(f, g);
      // {F,G} = -(-1)^{|F||G|} {G,F}
      const int kfg = (sf < 0 && sg < 0) ? -1 : 1;
      CHECK(pb == pbracket(g, f) * Rational(-kfg));
      // ]F,G[ = (-1)^{(|F|+1)(|G|+1)} ]G,F[
      const int shifted = (sf > 0 && sg > 0) ? -1 : 1;
      CHECK(ab == abracket(g, f) * Rational(shifted));
      if (!pb.is_zero()) CHECK(euler_degree(pb) == euler_degree(f) + euler_degree(g) - 2);
      if (!ab.is_zero()) CHECK(euler_degree(ab) == euler_degree(f) + euler_degree(g) - 1);
    }
}

TEST_CASE("equivariance of the antibracket") {
  const NamedCheck c = check_equivariance(4);
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.checked > 0);
}

TEST_CASE("invariant bivectors") {
  const BivectorSpace s0 = invariant_bivectors(0);
  CHECK(s0.basis.size() == 1);
  CHECK(s0.contains(poisson_bivector()));
  for (int d : {1, 2}) {
    const BivectorSpace s = invariant_bivectors(d);
    CHECK(s.basis.size() == 2);
    CHECK(s.contains(poisson_bivector()));
    CHECK(s.contains(lambda_bivector()));
  }
  CHECK_FALSE(invariant_bivectors(1).contains(BivectorAnsatz{{{BivectorSlot::pt, m(1, 0, 0, 0)}}}));
}

TEST_CASE("contractions reproduce the brackets") {
  const auto mons = monomials(0, 2);
  for (const auto& f : mons)
    for (const auto& g : mons) {
      // {F,G} = <P, dF^dG> and ]F,G[ = -(-1)^{|F|}/2 <Lambda, dF^dG>
      CHECK(contract(poisson_bivector(), f, g) == pbracket(f, g));
      CHECK(contract(lambda_bivector(), f, g) * make_rational(-parity_sign(f), 2) == abracket(f, g));
    }
}

TEST_CASE("table extraction") {
  CHECK(table_diff(extract_table(FunctionSpace::linear), k3()).empty());
  for (int w : {2, 4, 6})
    CHECK(table_diff(extract_table(FunctionSpace::deg1_window, w), builtin(BuiltinName::ak1, WindowSpec::of(w)))
              .empty());
  const AlgebraDef quad = extract_table(FunctionSpace::quadratic);
  CHECK(quad.dim(Parity::even) == 3);
  CHECK(quad.dim(Parity::odd) == 2);
  CHECK(check_profile(quad, Profile::lie_super).passed());
  const AlgebraDef deg2 = extract_table(FunctionSpace::deg2_window, 3);
  CHECK(check_profile(deg2, Profile::lie_super).passed());
  CHECK_THROWS_AS(extract_table(FunctionSpace::deg1_window), InputError);
  CHECK_THROWS_AS(parse_function_space("cubic"), InputError);
  CHECK(parse_function_space("deg2-window") == FunctionSpace::deg2_window);
}

TEST_CASE("extracted symbols map to the documented functions") {
  CHECK(function_of(BasisSymbol{"eps", Parity::even, std::nullopt}, FunctionSpace::linear) == m(1, 0, 0, 1));
  CHECK(function_of(BasisSymbol{"e", Parity::even, 4}, FunctionSpace::deg1_window) == m(1, -2, 2, 1));
  CHECK(function_of(BasisSymbol{"a", Parity::odd, 1}, FunctionSpace::deg1_window) == m(1, 0, 1, 0));
}
