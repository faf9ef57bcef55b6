#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"
#include "antialg/errors.hpp"
#include "antialg/io.hpp"
#include "antialg/reps.hpp"
#include "oracle/rep_search.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace antialg;

namespace {

GradedMatrix graded(std::size_t d0, std::size_t d1, Parity p, const oracle::Mat& m) {
  return GradedMatrix(d0, d1, p, Matrix::from_rows(m));
}

RepDef to_rep(const AlgebraDef& alg, const oracle::Candidate& c) {
  std::vector<GradedMatrix> images;
  for (std::size_t i = 0; i < alg.size(); ++i) images.push_back(graded(c.d0, c.d1, alg.parity(i), c.images[i]));
  return RepDef(alg, c.d0, c.d1, std::move(images));
}

GradedMatrix random_graded(std::mt19937_64& rng, std::size_t d0, std::size_t d1, Parity p) {
  Matrix m(d0 + d1, d0 + d1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (((r < d0) != (c < d0)) == is_odd(p)) m(r, c) = support::small_rational(rng);
  return GradedMatrix(d0, d1, p, m);
}

AlgebraDef heis() { return parse_algebra_file(read_file(support::data("heis.alg"))); }

/// Induction and its checks for one representation.
void check_induction(const RepDef& rep) {
  const InducedRep ind = induce_superrep(rep);
  CHECK(all_passed(ind.checks));
  CHECK(all_passed(check_rep(rep)));
  CHECK(ind.rep.algebra().name() == "g(" + rep.algebra().name() + ")");
  if (rep.is_zero()) CHECK(ind.rep.is_zero());
  // Odd images are 1/2 rho(y); even images are determined by them.
  for (std::size_t y : rep.algebra().indices_of(Parity::odd)) {
    const auto k = *ind.rep.algebra().find(rep.algebra().symbol(y).label());
    CHECK(ind.rep.image(k) == rep.image(y) * make_rational(1, 2));
  }
}

}  // namespace

TEST_CASE("jordan product and super commutator examples") {
  std::mt19937_64 rng(1);
  const GradedMatrix y = random_graded(rng, 2, 1, Parity::odd);
  CHECK(jordan_product(GradedMatrix::identity(2, 1), y) == y);
  const GradedMatrix x = random_graded(rng, 2, 1, Parity::odd);
  CHECK(jordan_product(x, x).is_zero());
  CHECK(jordan_product(x, y) == (compose(x, y) - compose(y, x)) * make_rational(1, 2));
  CHECK(super_commutator(x, y) == compose(x, y) + compose(y, x));
  const GradedMatrix e = random_graded(rng, 2, 1, Parity::even);
  CHECK(super_commutator(e, e).is_zero());

  for (int t = 0; t < 50; ++t) {
    const Parity p = t % 2 ? Parity::odd : Parity::even, q = t % 3 ? Parity::odd : Parity::even;
    const GradedMatrix u = random_graded(rng, 1, 2, p), v = random_graded(rng, 1, 2, q);
    CHECK(super_commutator(u, v) == super_commutator(v, u) * Rational(-koszul(p, q)));
    CHECK(compose(u, v).parity() == p + q);
  }
  CHECK_THROWS_AS(compose(GradedMatrix::zero(1, 1, Parity::odd), GradedMatrix::zero(2, 1, Parity::odd)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GradedMatrix(1, 1, Parity::odd, Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("check_rep examples") {
  CHECK(all_passed(check_rep(RepDef::zero(k3(), 2, 1))));
  std::vector<GradedMatrix> images{GradedMatrix::identity(1, 1) * make_rational(1, 2),
                                   GradedMatrix::zero(1, 1, Parity::odd), GradedMatrix::zero(1, 1, Parity::odd)};
  const CheckList c = check_rep(RepDef(k3(), 1, 1, images));
  REQUIRE(c.size() == 2);
  CHECK(c[1].id == "rep.condition2");
  CHECK(c[1].verdict == Verdict::fail);
  CHECK(c[1].witness == "(eps, eps): rho(x1 x2) != rho(x1) rho(x2)");

  std::vector<GradedMatrix> wrong{GradedMatrix::zero(1, 1, Parity::even), GradedMatrix::identity(1, 1),
                                  GradedMatrix::zero(1, 1, Parity::odd)};
  CHECK_THROWS_AS(RepDef(k3(), 1, 1, wrong), InputError);
}

TEST_CASE("search oracle and library agree on every candidate") {
  for (const AlgebraDef& alg : {k3(), heis()})
    for (auto [d0, d1] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}})
      oracle::enumerate(alg, d0, d1, [&](const oracle::Candidate& c) {
        CHECK(all_passed(check_rep(to_rep(alg, c))) == c.is_rep);
      });
}

TEST_CASE("k3 has no nonzero representation in small dimensions") {
  const auto found = oracle::find_reps(k3(), 3);
  REQUIRE(found.size() == 3);
  for (const auto& c : found) CHECK(to_rep(k3(), c).is_zero());
}

TEST_CASE("induction over zero, oracle-found and direct-sum representations") {
  check_induction(RepDef::zero(k3(), 1, 1));
  check_induction(RepDef::zero(k3(), 2, 1));

  const AlgebraDef h = heis();
  const auto found = oracle::find_reps(h, 3);
  CHECK(found.size() == 33 + 609 + 609);
  std::vector<RepDef> reps;
  for (std::size_t k = 0; k < found.size(); k += 25) reps.push_back(to_rep(h, found[k]));
  const RepDef file_rep = parse_rep_file(read_file(support::data("heis.rep")), h);
  reps.push_back(file_rep);
  std::size_t nonzero = 0;
  for (const auto& r : reps) {
    check_induction(r);
    if (!r.is_zero()) ++nonzero;
  }
  CHECK(nonzero > 10);

  for (std::size_t k = 0; k + 1 < reps.size(); k += 7) {
    const RepDef sum = direct_sum(reps[k], reps[k + 1]);
    CHECK(sum.d0() == reps[k].d0() + reps[k + 1].d0());
    CHECK(all_passed(check_rep(sum)));
    check_induction(sum);
  }
  check_induction(direct_sum(file_rep, file_rep));
}

TEST_CASE("induced image of y1 (.) y2 is a quarter of the anticommutator") {
  const AlgebraDef h = heis();
  const RepDef rep = parse_rep_file(read_file(support::data("heis.rep")), h);
  const InducedRep ind = induce_superrep(rep);
  const GradedMatrix& A = rep.image(*h.find("a"));
  const GradedMatrix& B = rep.image(*h.find("b"));
  CHECK(ind.rep.image(*ind.rep.algebra().find("a.b")) == super_commutator(A, B) * make_rational(1, 4));
  CHECK(check_profile(ind.rep.algebra(), Profile::lie_super).passed());
}

TEST_CASE("induction rejects non-representations") {
  std::vector<GradedMatrix> images{GradedMatrix::identity(1, 1) * make_rational(1, 2),
                                   GradedMatrix::zero(1, 1, Parity::odd), GradedMatrix::zero(1, 1, Parity::odd)};
  CHECK_THROWS_AS(induce_superrep(RepDef(k3(), 1, 1, images)), PreconditionError);
}

TEST_CASE("k3 to osp(1|2) relation cascade") {
  SUBCASE("zero matrices pass both phases") {
    const auto r = k3_osp_relations(GradedMatrix::zero(2, 1, Parity::odd), GradedMatrix::zero(2, 1, Parity::odd),
                                    GradedMatrix::zero(2, 1, Parity::even));
    CHECK(r.is_k3_rep);
    CHECK(all_passed(r.phase1));
    CHECK(r.phase2.size() == 12);
    CHECK(all_passed(r.phase2));
  }
  SUBCASE("phase 1 failure stops the cascade") {
    std::mt19937_64 rng(4);
    const auto r = k3_osp_relations(random_graded(rng, 2, 1, Parity::odd), random_graded(rng, 2, 1, Parity::odd),
                                    GradedMatrix::zero(2, 1, Parity::even));
    CHECK_FALSE(r.is_k3_rep);
    CHECK(r.phase1[0].id == "k3.AB-BA=E");
    CHECK(r.phase1[0].verdict == Verdict::fail);
    CHECK(r.phase2.empty());
  }
  SUBCASE("phase 2 passes whenever phase 1 passes, over the searched triples") {
    std::size_t phase1 = 0;
    for (auto [d0, d1] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}})
      oracle::enumerate(k3(), d0, d1, [&](const oracle::Candidate& c) {
        const RepDef rep = to_rep(k3(), c);
        const auto r = k3_osp_relations(rep.image(1), rep.image(2), rep.image(0));
        CHECK(r.is_k3_rep == c.is_rep);
        if (!r.is_k3_rep) return;
        ++phase1;
        CHECK(all_passed(r.phase2));
      });
    CHECK(phase1 == 3);
  }
}

TEST_CASE("phase 1 forces zero: the trace obstruction") {
  // E = AB - BA has tr(E|V0) = -tr(E|V1); a projector with trace 0 is 0.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const GradedMatrix A = random_graded(rng, 2, 2, Parity::odd), B = random_graded(rng, 2, 2, Parity::odd);
    const Matrix E = (compose(A, B) - compose(B, A)).matrix();
    Rational t0 = 0, t1 = 0;
    for (std::size_t k = 0; k < 2; ++k) t0 += E(k, k);
    for (std::size_t k = 2; k < 4; ++k) t1 += E(k, k);
    CHECK(t0 == -t1);
  }
}

TEST_CASE("the osp relations have nonzero solutions") {
  // Exhaustive 2|1 search with entries in {-1, 0, 1}.
  const std::vector<std::pair<std::size_t, std::size_t>> slots{{0, 2}, {1, 2}, {2, 0}, {2, 1}};
  std::size_t solutions = 0;
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    Matrix a(3, 3), b(3, 3);
    for (const auto& [r, col] : slots) {
      a(r, col) = c % 3 - 1;
      c /= 3;
    }
    for (const auto& [r, col] : slots) {
      b(r, col) = c % 3 - 1;
      c /= 3;
    }
    if (a.is_zero() && b.is_zero()) continue;
    if (all_passed(osp_relations(GradedMatrix(2, 1, Parity::odd, a), GradedMatrix(2, 1, Parity::odd, b))))
      ++solutions;
  }
  CHECK(solutions > 0);
}

TEST_CASE("Casimir ideal predicate is not constructible") {
  CHECK_FALSE(annihilates_casimir_ideal(RepDef::zero(k3(), 1, 1)).has_value());
}
