#include "antialg/builtins.hpp"
#include "antialg/errors.hpp"
#include "antialg/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace antialg;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_algebra_file(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

const char* const kHeader = "algebra t profile antialgebra\neven eps\nodd a b\n";

/// Arbitrary parity-respecting table, with no mirror symmetry imposed.
AlgebraDef arbitrary_table(std::mt19937_64& rng, std::size_t ne, std::size_t no, Profile hint) {
  std::vector<BasisSymbol> basis;
  for (std::size_t i = 0; i < ne; ++i) basis.push_back({"x" + std::to_string(i), Parity::even, std::nullopt});
  for (std::size_t i = 0; i < no; ++i) basis.push_back({"y" + std::to_string(i), Parity::odd, std::nullopt});
  const std::size_t n = basis.size();
  std::vector<TableEntry> table(n * n);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v;
      for (std::size_t k = 0; k < n; ++k)
        if (basis[k].parity == basis[i].parity + basis[j].parity && coin(rng) == 0)
          v.add_term(k, support::small_rational(rng));
      table[i * n + j] = TableEntry{false, v};
    }
  return AlgebraDef("arb", basis, table, hint);
}

void check_fixpoint(const AlgebraDef& alg) {
  const std::string once = emit_algebra_file(alg);
  const AlgebraDef back = parse_algebra_file(once);
  CHECK(table_diff(back, alg).empty());
  CHECK(emit_algebra_file(back) == once);
}

}  // namespace

TEST_CASE("the k3 file parses to the built-in") {
  const AlgebraDef k = parse_algebra_file(read_file(support::data("k3.alg")));
  CHECK(table_diff(k, k3()).empty());
  CHECK(k.name() == "k3");
  CHECK(k.hint() == Profile::antialgebra);
  CHECK(emit_algebra_file(k3()) == read_file(support::data("k3.alg")));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of(std::string(kHeader) + "a * c = eps\n").starts_with("line 4: "));
  CHECK(error_of(std::string(kHeader) + "eps * eps = eps\neps*eps = 1/0 eps\n").starts_with("line 5: "));
  CHECK(error_of(std::string(kHeader) + "eps*eps = 1/0 eps\n").find("malformed rational") != std::string::npos);
  CHECK(error_of(std::string(kHeader) + "eps * eps = 0.5 eps\n").find("malformed rational") != std::string::npos);
  CHECK(error_of(std::string(kHeader) + "eps * eps = eps\neps * eps = eps\n").starts_with("line 5: "));
  CHECK(error_of(std::string(kHeader) + "eps * a = eps\n").starts_with("line 4: "));
  CHECK(error_of(std::string(kHeader) + "a * b = eps\nb * a = eps\n").starts_with("line 5: "));
  CHECK(error_of(std::string(kHeader) + "a * b = eps\nb * a = -eps\n").empty());
  CHECK(error_of("even x\n").starts_with("line 1: "));
  CHECK(error_of("algebra t\neven x\nodd x\n").starts_with("line 3: "));
  CHECK(error_of("algebra t profile jordan\n").starts_with("line 1: "));
  CHECK_THROWS_AS(read_file(support::data("missing.alg")), InputError);
}

TEST_CASE("mirror completion follows the profile hint") {
  const AlgebraDef anti = parse_algebra_file(std::string(kHeader) + "a * b = eps\n");
  CHECK(multiply(anti.element("b"), anti.element("a"), anti) == anti.element("eps") * Rational(-1));
  const AlgebraDef lie = parse_algebra_file("algebra t profile lie-super\neven x\nodd y\nx * y = y\ny * y = x\n");
  CHECK(multiply(lie.element("y"), lie.element("x"), lie) == lie.element("y") * Rational(-1));
  const AlgebraDef none = parse_algebra_file("algebra t\neven x\nodd y\nx * y = y\n");
  CHECK(multiply(none.element("y"), none.element("x"), none).is_zero());
  const AlgebraDef expl = parse_algebra_file(std::string(kHeader) + "explicit\na * b = eps\n");
  CHECK(multiply(expl.element("b"), expl.element("a"), expl).is_zero());
}

TEST_CASE("round trip on the built-ins") {
  for (BuiltinName b : all_builtins()) {
    if (needs_window(b)) {
      for (long bound : {0L, 1L, 3L, 6L}) {
        check_fixpoint(builtin(b, WindowSpec::of(bound)));
        check_fixpoint(builtin(b, WindowSpec::of(bound, bound / 2)));
      }
    } else {
      check_fixpoint(builtin(b));
    }
  }
  CHECK(emit_algebra_file(builtin(BuiltinName::ak1, WindowSpec::of(2, 1))).find("e[2] * e[2] = ?") !=
        std::string::npos);
}

TEST_CASE("round trip on tables without profile symmetry") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const AlgebraDef alg = arbitrary_table(rng, t % 3 + 1, t % 2 + 1, t % 4 == 0 ? Profile::antialgebra : Profile::none);
    check_fixpoint(alg);
  }
  const AlgebraDef skew = parse_algebra_file(std::string(kHeader) + "explicit\na * b = eps\nb * a = eps\n");
  CHECK(emit_algebra_file(skew).find("explicit") != std::string::npos);
  check_fixpoint(skew);
}

TEST_CASE("representation files") {
  const AlgebraDef h = parse_algebra_file(read_file(support::data("heis.alg")));
  const RepDef rep = parse_rep_file(read_file(support::data("heis.rep")), h);
  CHECK(rep.d0() == 2);
  CHECK(rep.d1() == 1);
  CHECK_FALSE(rep.is_zero());
  const RepDef back = parse_rep_file(emit_rep_file(rep), h);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(back.image(i) == rep.image(i));
  CHECK(emit_rep_file(back) == emit_rep_file(rep));

  CHECK_THROWS_AS(parse_rep_file("dims 1 1\nimage a\n1 0\n0 0\nend\n", h), InputError);
  CHECK_THROWS_AS(parse_rep_file("dims 1 1\nimage c\n0 0\n0 0\nend\n", h), InputError);
  CHECK_THROWS_AS(parse_rep_file("dims 1 1\nimage a\n0 1\nend\n", h), InputError);
  CHECK(parse_rep_file("dims 1 1\n", h).is_zero());
}
