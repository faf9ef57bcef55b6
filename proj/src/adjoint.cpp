#include "antialg/adjoint.hpp"

#include "antialg/errors.hpp"

#include <sstream>

namespace antialg {

namespace {

void require_antialgebra(const AlgebraDef& alg, const char* what) {
  Report r = check_profile(alg, Profile::antialgebra);
  if (r.passed()) return;
  std::ostringstream msg;
  msg << what << ": '" << alg.name() << "' does not pass the antialgebra profile";
  if (!r.witnesses.empty()) msg << " (" << describe(r.witnesses.front(), alg) << ")";
  throw PreconditionError(msg.str());
}

Vector unit(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = 1;
  return v;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

// Even element of g(a) from quotient coordinates.
Element even_part(const Vector& coords) { return Element::from_vector(coords); }

}  // namespace

// ---------------------------------------------------------------------------
// SymSpace

SymSpace::SymSpace(const AlgebraDef& alg) : odd_(alg.indices_of(Parity::odd)), odd_slot_(alg.size(), -1) {
  for (std::size_t k = 0; k < odd_.size(); ++k) odd_slot_[odd_[k]] = static_cast<long>(k);
  for (std::size_t a = 0; a < odd_.size(); ++a)
    for (std::size_t b = a; b < odd_.size(); ++b) ambient_.emplace_back(odd_[a], odd_[b]);

  for (std::size_t y1 : odd_)
    for (std::size_t x : alg.indices_of(Parity::even))
      for (std::size_t y2 : odd_) {
        auto y1x = try_multiply(Element::basis(y1), Element::basis(x), alg);
        auto y2x = try_multiply(Element::basis(y2), Element::basis(x), alg);
        if (!y1x || !y2x) continue;
        Vector r = sym(*y1x, Element::basis(y2));
        axpy(r, -1, sym(Element::basis(y1), *y2x));
        if (!is_zero(r)) relations_.push_back(std::move(r));
      }

  Matrix m(relations_.size(), ambient_.size());
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (std::size_t c = 0; c < ambient_.size(); ++c) m(r, c) = relations_[r][c];
  reduced_ = rref(std::move(m));

  std::vector<bool> pivot(ambient_.size(), false);
  for (auto p : reduced_.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < ambient_.size(); ++c)
    if (!pivot[c]) quotient_.push_back(c);
}

std::size_t SymSpace::ambient_index(std::size_t i, std::size_t j) const {
  long a = odd_slot_.at(i), b = odd_slot_.at(j);
  if (a < 0 || b < 0) throw std::invalid_argument("SymSpace: symmetric product of a non-odd basis vector");
  if (a > b) std::swap(a, b);
  // Rows of the upper triangle over n odd symbols: row a starts at a*n - a(a-1)/2.
  const long n = static_cast<long>(odd_.size());
  return static_cast<std::size_t>(a * n - a * (a - 1) / 2 + (b - a));
}

Vector SymSpace::sym(std::size_t i, std::size_t j) const { return unit(ambient_.size(), ambient_index(i, j)); }

Vector SymSpace::sym(const Element& y, const Element& z) const {
  Vector v(ambient_.size());
  for (const auto& [i, ci] : y.terms())
    for (const auto& [j, cj] : z.terms()) v[ambient_index(i, j)] += ci * cj;
  return v;
}

Vector SymSpace::reduce(const Vector& w) const {
  Vector v = w;
  const Matrix& r = reduced_.reduced;
  for (std::size_t k = 0; k < reduced_.pivots.size(); ++k) {
    Rational c = v[reduced_.pivots[k]];
    if (c == 0) continue;
    for (std::size_t col = 0; col < v.size(); ++col)
      if (r(k, col) != 0) v[col] -= c * r(k, col);
  }
  Vector out(quotient_.size());
  for (std::size_t k = 0; k < quotient_.size(); ++k) out[k] = v[quotient_[k]];
  return out;
}

std::string SymSpace::symbol_name(std::size_t k, const AlgebraDef& alg) const {
  auto [i, j] = ambient_.at(quotient_.at(k));
  return alg.symbol(i).label() + "." + alg.symbol(j).label();
}

SymSpace sym2_quotient(const AlgebraDef& alg) {
  require_antialgebra(alg, "sym2_quotient");
  return SymSpace(alg);
}

// ---------------------------------------------------------------------------
// Adjoint superalgebra

std::optional<Element> ambient_bracket(const SymSpace& s, const Vector& w, std::size_t y3, const AlgebraDef& alg) {
  Element out;
  const Element e3 = Element::basis(y3);
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c] == 0) continue;
    auto [i, j] = s.ambient()[c];
    const Element yi = Element::basis(i), yj = Element::basis(j);
    auto yj3 = try_multiply(yj, e3, alg);
    auto yi3 = try_multiply(yi, e3, alg);
    if (!yj3 || !yi3) return std::nullopt;
    auto t1 = try_multiply(yi, *yj3, alg);
    auto t2 = try_multiply(yj, *yi3, alg);
    if (!t1 || !t2) return std::nullopt;
    out += (*t1 + *t2) * w[c];
  }
  return out;
}

namespace {

// [w, v] for ambient w and ambient v, in ambient coordinates (unreduced).
std::optional<Vector> ambient_even_bracket(const SymSpace& s, const Vector& w, const Vector& v,
                                           const AlgebraDef& alg) {
  Vector out(s.ambient_dim());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    auto [k, l] = s.ambient()[c];
    auto wk = ambient_bracket(s, w, k, alg);
    auto wl = ambient_bracket(s, w, l, alg);
    if (!wk || !wl) return std::nullopt;
    Vector t = s.sym(*wk, Element::basis(l));
    axpy(t, 1, s.sym(*wl, Element::basis(k)));
    axpy(out, v[c], t);
  }
  return out;
}

}  // namespace

Adjoint adjoint_algebra(const AlgebraDef& alg) {
  require_antialgebra(alg, "adjoint_algebra");
  SymSpace s(alg);
  const std::size_t ne = s.dim(), no = s.odd().size(), n = ne + no;

  std::vector<BasisSymbol> basis;
  for (std::size_t k = 0; k < ne; ++k) basis.push_back({s.symbol_name(k, alg), Parity::even, std::nullopt});
  for (std::size_t y : s.odd()) basis.push_back(alg.symbol(y));

  std::vector<long> odd_slot(alg.size(), -1);
  for (std::size_t k = 0; k < no; ++k) odd_slot[s.odd()[k]] = static_cast<long>(k);
  auto lift_odd = [&](const Element& e) {
    Element out;
    for (const auto& [i, c] : e.terms()) out.add_term(ne + static_cast<std::size_t>(odd_slot.at(i)), c);
    return out;
  };
  auto rep = [&](std::size_t k) { return unit(s.ambient_dim(), s.quotient_basis()[k]); };

  std::vector<TableEntry> table(n * n);
  for (std::size_t u = 0; u < ne; ++u) {
    const Vector wu = rep(u);
    for (std::size_t v = 0; v < ne; ++v) {
      auto b = ambient_even_bracket(s, wu, rep(v), alg);
      table[u * n + v] = b ? TableEntry{false, even_part(s.reduce(*b))} : TableEntry::outside();
    }
    for (std::size_t q = 0; q < no; ++q) {
      auto b = ambient_bracket(s, wu, s.odd()[q], alg);
      if (b) {
        table[u * n + ne + q] = TableEntry{false, lift_odd(*b)};
        table[(ne + q) * n + u] = TableEntry{false, -lift_odd(*b)};
      } else {
        table[u * n + ne + q] = TableEntry::outside();
        table[(ne + q) * n + u] = TableEntry::outside();
      }
    }
  }
  for (std::size_t p = 0; p < no; ++p)
    for (std::size_t q = 0; q < no; ++q)
      table[(ne + p) * n + ne + q] = TableEntry{false, even_part(s.reduce(s.sym(s.odd()[p], s.odd()[q])))};

  AlgebraDef g("g(" + alg.name() + ")", std::move(basis), std::move(table), Profile::lie_super);
  return Adjoint{LieSuperDef{std::move(g), alg.name()}, std::move(s)};
}

CheckList check_well_defined(const Adjoint& adj, const AlgebraDef& alg) {
  const SymSpace& s = adj.sym;
  NamedCheck odd{"adjoint.well-defined.odd", Verdict::pass, 0, 0, {}};
  for (std::size_t x : alg.indices_of(Parity::even))
    for (std::size_t y1 : s.odd())
      for (std::size_t y2 : s.odd())
        for (std::size_t y3 : s.odd()) {
          if (!alg.guarded(x) || !alg.guarded(y1) || !alg.guarded(y2) || !alg.guarded(y3)) {
            ++odd.skipped;
            continue;
          }
          auto y1x = try_multiply(Element::basis(y1), Element::basis(x), alg);
          auto y2x = try_multiply(Element::basis(y2), Element::basis(x), alg);
          if (!y1x || !y2x) {
            ++odd.skipped;
            continue;
          }
          auto lhs = ambient_bracket(s, s.sym(Element::basis(y1), *y2x), y3, alg);
          auto rhs = ambient_bracket(s, s.sym(*y1x, Element::basis(y2)), y3, alg);
          if (!lhs || !rhs) {
            ++odd.skipped;
            continue;
          }
          ++odd.checked;
          if (*lhs != *rhs && odd.verdict == Verdict::pass) {
            odd.verdict = Verdict::fail;
            odd.witness = "[" + alg.symbol(y1).label() + " (.) " + alg.symbol(y2).label() + alg.symbol(x).label() +
                          ", " + alg.symbol(y3).label() + "]: " + to_string(*lhs, alg) + " != " + to_string(*rhs, alg);
          }
        }

  NamedCheck even{"adjoint.well-defined.even", Verdict::pass, 0, 0, {}};
  for (std::size_t u = 0; u < s.dim(); ++u) {
    const Vector wu = unit(s.ambient_dim(), s.quotient_basis()[u]);
    for (std::size_t r = 0; r < s.relations().size(); ++r) {
      auto b = ambient_even_bracket(s, wu, s.relations()[r], alg);
      if (!b) {
        ++even.skipped;
        continue;
      }
      ++even.checked;
      if (!is_zero(s.reduce(*b)) && even.verdict == Verdict::pass) {
        even.verdict = Verdict::fail;
        even.witness = "[" + s.symbol_name(u, alg) + ", relation " + std::to_string(r) + "] does not reduce to 0";
      }
    }
  }
  return {odd, even};
}

// ---------------------------------------------------------------------------
// Operators, derivations, embedding

Matrix operator_bracket(const Matrix& x, Parity px, const Matrix& y, Parity py) {
  return y * x - Rational(koszul(px, py)) * (x * y);
}

Matrix right_multiplication(const Element& y, const AlgebraDef& alg) {
  const std::size_t n = alg.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = multiply(Element::basis(j), y, alg);
    for (const auto& [i, c] : col.terms()) m(i, j) = c;
  }
  return m;
}

namespace {

Element apply(const Matrix& d, const Element& v) {
  Element out;
  for (const auto& [j, c] : v.terms())
    for (std::size_t i = 0; i < d.rows(); ++i)
      if (d(i, j) != 0) out.add_term(i, c * d(i, j));
  return out;
}

void require_finite(const AlgebraDef& alg, const char* what) {
  if (alg.has_out_of_window())
    throw PreconditionError(std::string(what) + ": '" + alg.name() + "' has out-of-window products");
}

}  // namespace

bool is_derivation(const Matrix& d, Parity pd, const AlgebraDef& alg) {
  const std::size_t n = alg.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Element ej = Element::basis(j), ek = Element::basis(k);
      Element lhs = apply(d, multiply(ej, ek, alg));
      Element rhs = multiply(apply(d, ej), ek, alg) +
                    Rational(koszul(pd, alg.parity(j))) * multiply(ej, apply(d, ek), alg);
      if (lhs != rhs) return false;
    }
  return true;
}

Derivations derivations(const AlgebraDef& alg) {
  require_finite(alg, "derivations");
  const std::size_t n = alg.size();
  auto coeff = [&](std::size_t a, std::size_t b, std::size_t m) { return alg.entry(a, b).value.coeff(m); };

  std::vector<Matrix> found[2];
  for (Parity pd : {Parity::even, Parity::odd}) {
    // Unknown D(i, j) is allowed when |e_i| = |e_j| + |D|.
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<long> slot(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (alg.parity(i) == alg.parity(j) + pd) {
          slot[i * n + j] = static_cast<long>(unknowns.size());
          unknowns.emplace_back(i, j);
        }

    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational s = koszul(pd, alg.parity(j));
        for (std::size_t m = 0; m < n; ++m) {
          Vector row(unknowns.size());
          auto add = [&](std::size_t i, std::size_t c, const Rational& v) {
            long u = slot[i * n + c];
            if (u >= 0 && v != 0) row[static_cast<std::size_t>(u)] += v;
          };
          for (std::size_t l = 0; l < n; ++l) add(m, l, coeff(j, k, l));   // D(e_j e_k)
          for (std::size_t i = 0; i < n; ++i) add(i, j, -coeff(i, k, m));  // D(e_j) e_k
          for (std::size_t i = 0; i < n; ++i) add(i, k, -s * coeff(j, i, m));  // e_j D(e_k)
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
    Matrix sys(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns.size(); ++c) sys(r, c) = rows[r][c];

    for (const Vector& v : nullspace(sys)) {
      Matrix d(n, n);
      for (std::size_t u = 0; u < unknowns.size(); ++u) d(unknowns[u].first, unknowns[u].second) = v[u];
      found[is_odd(pd)].push_back(std::move(d));
    }
  }

  std::vector<BasisSymbol> basis;
  std::vector<std::pair<const Matrix*, Parity>> ops;
  for (std::size_t k = 0; k < found[0].size(); ++k) {
    basis.push_back({"der_e" + std::to_string(k + 1), Parity::even, std::nullopt});
    ops.emplace_back(&found[0][k], Parity::even);
  }
  for (std::size_t k = 0; k < found[1].size(); ++k) {
    basis.push_back({"der_o" + std::to_string(k + 1), Parity::odd, std::nullopt});
    ops.emplace_back(&found[1][k], Parity::odd);
  }

  std::vector<Vector> flats[2];
  for (int p = 0; p < 2; ++p)
    for (const Matrix& m : found[p]) flats[p].push_back(m.flat());

  const std::size_t dim = ops.size(), ne = found[0].size();
  std::vector<TableEntry> table(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Parity pr = ops[a].second + ops[b].second;
      Matrix br = operator_bracket(*ops[a].first, ops[a].second, *ops[b].first, ops[b].second);
      auto c = coords_in_span(br.flat(), flats[is_odd(pr)]);
      if (!c) throw ConsistencyError("derivations: bracket of derivations is not a derivation");
      Element e;
      const std::size_t off = is_odd(pr) ? ne : 0;
      for (std::size_t k = 0; k < c->size(); ++k) e.add_term(off + k, (*c)[k]);
      table[a * dim + b] = TableEntry{false, std::move(e)};
    }

  AlgebraDef der("Der(" + alg.name() + ")", std::move(basis), std::move(table), Profile::lie_super);
  return Derivations{LieSuperDef{std::move(der), alg.name()}, std::move(found[0]), std::move(found[1])};
}

EmbeddingReport embedding_check(const AlgebraDef& alg) {
  require_antialgebra(alg, "embedding_check");
  require_finite(alg, "embedding_check");
  Adjoint adj = adjoint_algebra(alg);
  const SymSpace& s = adj.sym;
  const AlgebraDef& g = adj.lie.algebra;
  const std::size_t n = alg.size();

  std::vector<Matrix> right(n);
  for (std::size_t y : s.odd()) right[y] = right_multiplication(Element::basis(y), alg);

  auto iota_ambient = [&](const Vector& w) {
    Matrix m(n, n);
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] == 0) continue;
      auto [i, j] = s.ambient()[c];
      m += (right[i] * right[j] + right[j] * right[i]) * w[c];
    }
    return m;
  };

  const std::size_t ne = s.dim();
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k < ne) {
      Vector w(s.ambient_dim());
      w[s.quotient_basis()[k]] = 1;
      images.push_back(iota_ambient(w));
    } else {
      images.push_back(right[s.odd()[k - ne]]);
    }
  }
  auto iota = [&](const Element& e) {
    Matrix m(n, n);
    for (const auto& [k, c] : e.terms()) m += images[k] * c;
    return m;
  };

  EmbeddingReport out;
  out.g_even = ne;
  out.g_odd = g.size() - ne;

  {
    std::size_t bad = s.relations().size();
    for (std::size_t r = 0; r < s.relations().size(); ++r)
      if (!iota_ambient(s.relations()[r]).is_zero()) {
        bad = r;
        break;
      }
    out.checks.push_back(make_check("embed.well-defined", bad == s.relations().size(), s.relations().size(),
                                    "iota kills no relation " + std::to_string(bad)));
  }
  {
    std::string witness;
    for (std::size_t k = 0; k < g.size() && witness.empty(); ++k)
      if (!is_derivation(images[k], g.parity(k), alg)) witness = "iota(" + g.symbol(k).label() + ") is not a derivation";
    out.checks.push_back(make_check("embed.lands-in-der", witness.empty(), g.size(), witness));
  }
  {
    std::string witness;
    std::size_t checked = 0;
    for (std::size_t a = 0; a < g.size() && witness.empty(); ++a)
      for (std::size_t b = 0; b < g.size() && witness.empty(); ++b) {
        ++checked;
        Matrix lhs = iota(g.entry(a, b).value);
        Matrix rhs = operator_bracket(images[a], g.parity(a), images[b], g.parity(b));
        if (lhs != rhs) witness = "iota([" + g.symbol(a).label() + ", " + g.symbol(b).label() + "]) differs";
      }
    out.checks.push_back(make_check("embed.homomorphism", witness.empty(), checked, witness));
  }
  std::vector<Vector> flats;
  for (const Matrix& m : images) flats.push_back(m.flat());
  const std::size_t r = rank(Matrix::from_columns(flats, n * n));
  const bool injective = r == g.size();
  out.checks.push_back(make_check("embed.injective", injective, 1,
                                  "rank " + std::to_string(r) + " < dim " + std::to_string(g.size())));

  Derivations der = derivations(alg);
  out.der_even = der.even.size();
  out.der_odd = der.odd.size();
  out.surjective = injective && all_passed(out.checks) && out.der_even == out.g_even && out.der_odd == out.g_odd;
  return out;
}

}  // namespace antialg
