#include "antialg/reps.hpp"

#include "antialg/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace antialg {

// ---------------------------------------------------------------------------
// GradedMatrix

bool fits_parity(const Matrix& m, std::size_t d0, Parity parity) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const bool diag = (r < d0) == (c < d0);
      if (m(r, c) != 0 && diag == is_odd(parity)) return false;
    }
  return true;
}

GradedMatrix::GradedMatrix(std::size_t d0, std::size_t d1, Parity parity, Matrix m)
    : d0_(d0), d1_(d1), parity_(parity), m_(std::move(m)) {
  if (m_.rows() != d0 + d1 || m_.cols() != d0 + d1)
    throw std::invalid_argument("GradedMatrix: matrix is not " + std::to_string(d0 + d1) + " square");
  if (!fits_parity(m_, d0, parity))
    throw std::invalid_argument(std::string("GradedMatrix: entries outside the ") + std::string(to_string(parity)) +
                                " blocks");
}

GradedMatrix GradedMatrix::zero(std::size_t d0, std::size_t d1, Parity parity) {
  return GradedMatrix(d0, d1, parity, Matrix(d0 + d1, d0 + d1));
}

GradedMatrix GradedMatrix::identity(std::size_t d0, std::size_t d1) {
  return GradedMatrix(d0, d1, Parity::even, Matrix::identity(d0 + d1));
}

namespace {

void require_same_space(const GradedMatrix& x, const GradedMatrix& y, const char* what) {
  if (x.d0() != y.d0() || x.d1() != y.d1())
    throw std::invalid_argument(std::string(what) + ": operators on spaces of different dimensions");
}

}  // namespace

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  require_same_space(*this, o, "GradedMatrix +");
  if (o.is_zero()) return *this;
  if (is_zero()) parity_ = o.parity_;
  if (parity_ != o.parity_) throw std::invalid_argument("GradedMatrix +: mixed parities");
  m_ += o.m_;
  return *this;
}

GradedMatrix operator*(GradedMatrix a, const Rational& s) {
  a.m_ *= s;
  return a;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.parity_ == b.parity_ && a.m_ == b.m_;
}

GradedMatrix compose(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_space(x, y, "compose");
  return GradedMatrix(x.d0(), x.d1(), x.parity() + y.parity(), x.matrix() * y.matrix());
}

GradedMatrix jordan_product(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_space(x, y, "jordan_product");
  Matrix m = x.matrix() * y.matrix() + Rational(koszul(x.parity(), y.parity())) * (y.matrix() * x.matrix());
  return GradedMatrix(x.d0(), x.d1(), x.parity() + y.parity(), m * make_rational(1, 2));
}

GradedMatrix super_commutator(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_space(x, y, "super_commutator");
  Matrix m = x.matrix() * y.matrix() - Rational(koszul(x.parity(), y.parity())) * (y.matrix() * x.matrix());
  return GradedMatrix(x.d0(), x.d1(), x.parity() + y.parity(), std::move(m));
}

std::string to_string(const GradedMatrix& m) {
  return std::string(to_string(m.parity())) + " " + std::to_string(m.d0()) + "|" + std::to_string(m.d1()) + " " +
         m.matrix().to_string();
}

// ---------------------------------------------------------------------------
// RepDef

RepDef::RepDef(AlgebraDef algebra, std::size_t d0, std::size_t d1, std::vector<GradedMatrix> images)
    : algebra_(std::move(algebra)), d0_(d0), d1_(d1), images_(std::move(images)) {
  if (images_.size() != algebra_.size())
    throw InputError("representation of '" + algebra_.name() + "' needs " + std::to_string(algebra_.size()) +
                     " images, got " + std::to_string(images_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const GradedMatrix& g = images_[i];
    if (g.d0() != d0 || g.d1() != d1)
      throw InputError("image of " + algebra_.symbol(i).label() + " acts on the wrong space");
    if (!g.is_zero() && g.parity() != algebra_.parity(i))
      throw InputError("image of " + algebra_.symbol(i).label() + " has parity " + std::string(to_string(g.parity())));
    if (g.is_zero() && g.parity() != algebra_.parity(i)) images_[i] = GradedMatrix::zero(d0, d1, algebra_.parity(i));
  }
}

RepDef RepDef::zero(AlgebraDef algebra, std::size_t d0, std::size_t d1) {
  std::vector<GradedMatrix> images;
  for (std::size_t i = 0; i < algebra.size(); ++i) images.push_back(GradedMatrix::zero(d0, d1, algebra.parity(i)));
  return RepDef(std::move(algebra), d0, d1, std::move(images));
}

GradedMatrix RepDef::image(const Element& e) const {
  GradedMatrix out = GradedMatrix::zero(d0_, d1_, Parity::even);
  for (const auto& [i, c] : e.terms()) out += images_.at(i) * c;
  return out;
}

bool RepDef::is_zero() const {
  for (const auto& g : images_)
    if (!g.is_zero()) return false;
  return true;
}

RepDef direct_sum(const RepDef& a, const RepDef& b) {
  if (table_diff(a.algebra(), b.algebra()).size() != 0)
    throw std::invalid_argument("direct_sum: representations of different algebras");
  const std::size_t d0 = a.d0() + b.d0(), d1 = a.d1() + b.d1(), n = d0 + d1;
  // Coordinate k of the summand goes to position place(k) of the sum.
  auto place_a = [&](std::size_t k) { return k < a.d0() ? k : d0 + (k - a.d0()); };
  auto place_b = [&](std::size_t k) { return k < b.d0() ? a.d0() + k : d0 + a.d1() + (k - b.d0()); };
  std::vector<GradedMatrix> images;
  for (std::size_t i = 0; i < a.images().size(); ++i) {
    Matrix m(n, n);
    const Matrix& ma = a.image(i).matrix();
    const Matrix& mb = b.image(i).matrix();
    for (std::size_t r = 0; r < a.d0() + a.d1(); ++r)
      for (std::size_t c = 0; c < a.d0() + a.d1(); ++c) m(place_a(r), place_a(c)) = ma(r, c);
    for (std::size_t r = 0; r < b.d0() + b.d1(); ++r)
      for (std::size_t c = 0; c < b.d0() + b.d1(); ++c) m(place_b(r), place_b(c)) = mb(r, c);
    images.emplace_back(d0, d1, a.algebra().parity(i), std::move(m));
  }
  return RepDef(a.algebra(), d0, d1, std::move(images));
}

CheckList check_rep(const RepDef& rep) {
  const AlgebraDef& alg = rep.algebra();
  NamedCheck c1{"rep.condition1", Verdict::pass, 0, 0, {}};
  NamedCheck c2{"rep.condition2", Verdict::pass, 0, 0, {}};
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = 0; j < alg.size(); ++j) {
      const TableEntry& cell = alg.entry(i, j);
      const bool even_pair = !is_odd(alg.parity(i)) && !is_odd(alg.parity(j));
      if (cell.out_of_window || !alg.guarded(i) || !alg.guarded(j)) {
        ++c1.skipped;
        if (even_pair) ++c2.skipped;
        continue;
      }
      const GradedMatrix lhs = rep.image(cell.value);
      const std::string pair = "(" + alg.symbol(i).label() + ", " + alg.symbol(j).label() + ")";
      ++c1.checked;
      if (lhs != jordan_product(rep.image(i), rep.image(j)) && c1.verdict == Verdict::pass) {
        c1.verdict = Verdict::fail;
        c1.witness = pair + ": rho(xy) != [rho(x), rho(y)]_+";
      }
      if (!even_pair) continue;
      ++c2.checked;
      if (lhs != compose(rep.image(i), rep.image(j)) && c2.verdict == Verdict::pass) {
        c2.verdict = Verdict::fail;
        c2.witness = pair + ": rho(x1 x2) != rho(x1) rho(x2)";
      }
    }
  return {c1, c2};
}

InducedRep induce_superrep(const RepDef& rep) {
  CheckList pre = check_rep(rep);
  if (!all_passed(pre)) {
    for (const auto& c : pre)
      if (c.verdict == Verdict::fail) throw PreconditionError("induce_superrep: not a representation, " + c.witness);
  }
  Adjoint adj = adjoint_algebra(rep.algebra());
  const SymSpace& s = adj.sym;
  const AlgebraDef& g = adj.lie.algebra;
  const std::size_t d0 = rep.d0(), d1 = rep.d1();
  const Rational half = make_rational(1, 2);

  auto odd_image = [&](std::size_t source) { return rep.image(source) * half; };
  auto ambient_image = [&](const Vector& w) {
    GradedMatrix m = GradedMatrix::zero(d0, d1, Parity::even);
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] == 0) continue;
      auto [i, j] = s.ambient()[c];
      m += super_commutator(odd_image(i), odd_image(j)) * w[c];
    }
    return m;
  };

  const std::size_t ne = s.dim();
  std::vector<GradedMatrix> images;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k < ne) {
      Vector w(s.ambient_dim());
      w[s.quotient_basis()[k]] = 1;
      images.push_back(ambient_image(w));
    } else {
      images.push_back(odd_image(s.odd()[k - ne]));
    }
  }
  InducedRep out{adj, RepDef(g, d0, d1, std::move(images)), {}};

  {
    std::size_t bad = s.relations().size();
    for (std::size_t r = 0; r < s.relations().size() && bad == s.relations().size(); ++r)
      if (!ambient_image(s.relations()[r]).is_zero()) bad = r;
    out.checks.push_back(make_check("induce.well-defined", bad == s.relations().size(), s.relations().size(),
                                    "relation " + std::to_string(bad) + " has a nonzero image"));
  }
  {
    NamedCheck c{"induce.bracket-compatible", Verdict::pass, 0, 0, {}};
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (g.entry(a, b).out_of_window) {
          ++c.skipped;
          continue;
        }
        ++c.checked;
        const GradedMatrix lhs = out.rep.image(g.entry(a, b).value);
        const GradedMatrix rhs = super_commutator(out.rep.image(a), out.rep.image(b));
        if (lhs != rhs && c.verdict == Verdict::pass) {
          c.verdict = Verdict::fail;
          c.witness = "[" + g.symbol(a).label() + ", " + g.symbol(b).label() + "]";
        }
      }
    out.checks.push_back(std::move(c));
  }
  {
    // Each even image is the anticommutator of the odd images of its representative.
    std::string witness;
    for (std::size_t k = 0; k < ne && witness.empty(); ++k) {
      auto [i, j] = s.ambient()[s.quotient_basis()[k]];
      GradedMatrix expect = (compose(rep.image(i), rep.image(j)) + compose(rep.image(j), rep.image(i))) *
                            make_rational(1, 4);
      if (expect != out.rep.image(k)) witness = g.symbol(k).label();
    }
    out.checks.push_back(make_check("induce.even-from-odd", witness.empty(), ne, witness));
  }
  return out;
}

// ---------------------------------------------------------------------------
// K3 relations

namespace {

void relation(CheckList& list, const char* id, const GradedMatrix& lhs, const GradedMatrix& rhs) {
  list.push_back(make_check(id, lhs == rhs, 1, std::string(id) + " violated"));
}

GradedMatrix as_parity(const GradedMatrix& m, Parity p) { return GradedMatrix(m.d0(), m.d1(), p, m.matrix()); }

}  // namespace

CheckList osp_relations(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(is_odd(a.parity()) || a.is_zero()) || !(is_odd(b.parity()) || b.is_zero()))
    throw std::invalid_argument("osp_relations: expected odd A, B");
  require_same_space(a, b, "osp_relations");
  const GradedMatrix A = as_parity(a, Parity::odd), B = as_parity(b, Parity::odd);
  const GradedMatrix H = (compose(A, B) + compose(B, A)) * Rational(-1);
  const GradedMatrix Ep = compose(A, A);
  const GradedMatrix F = compose(B, B) * Rational(-1);
  auto br = [](const GradedMatrix& x, const GradedMatrix& y) { return super_commutator(x, y); };
  const GradedMatrix zero_odd = GradedMatrix::zero(A.d0(), A.d1(), Parity::odd);
  CheckList out;
  relation(out, "osp.[H,E]=2E", br(H, Ep), Ep * Rational(2));
  relation(out, "osp.[H,F]=-2F", br(H, F), F * Rational(-2));
  relation(out, "osp.[E,F]=H", br(Ep, F), H);
  relation(out, "osp.[H,A]=A", br(H, A), A);
  relation(out, "osp.[H,B]=-B", br(H, B), B * Rational(-1));
  relation(out, "osp.[E,A]=0", br(Ep, A), zero_odd);
  relation(out, "osp.[E,B]=A", br(Ep, B), A);
  relation(out, "osp.[F,A]=B", br(F, A), B);
  relation(out, "osp.[F,B]=0", br(F, B), zero_odd);
  relation(out, "osp.[A,A]=2E", br(A, A), Ep * Rational(2));
  relation(out, "osp.[B,B]=-2F", br(B, B), F * Rational(-2));
  relation(out, "osp.[A,B]=-H", br(A, B), H * Rational(-1));
  return out;
}

OspRelationReport k3_osp_relations(const GradedMatrix& a, const GradedMatrix& b, const GradedMatrix& e) {
  if (!(is_odd(a.parity()) || a.is_zero()) || !(is_odd(b.parity()) || b.is_zero()) ||
      !(!is_odd(e.parity()) || e.is_zero()))
    throw std::invalid_argument("k3_osp_relations: expected odd A, B and even E");
  require_same_space(a, b, "k3_osp_relations");
  require_same_space(a, e, "k3_osp_relations");
  const GradedMatrix A = as_parity(a, Parity::odd), B = as_parity(b, Parity::odd);
  const GradedMatrix E = as_parity(e, Parity::even);

  OspRelationReport out;
  relation(out.phase1, "k3.AB-BA=E", compose(A, B) - compose(B, A), E);
  relation(out.phase1, "k3.AE+EA=A", compose(A, E) + compose(E, A), A);
  relation(out.phase1, "k3.BE+EB=B", compose(B, E) + compose(E, B), B);
  relation(out.phase1, "k3.E^2=E", compose(E, E), E);
  out.is_k3_rep = all_passed(out.phase1);
  if (!out.is_k3_rep) return out;

  out.h = (compose(A, B) + compose(B, A)) * Rational(-1);
  out.e = compose(A, A);
  out.f = compose(B, B) * Rational(-1);
  out.phase2 = osp_relations(A, B);
  return out;
}

std::optional<bool> annihilates_casimir_ideal(const RepDef&) { return std::nullopt; }

}  // namespace antialg
