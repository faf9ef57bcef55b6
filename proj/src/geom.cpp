#include "antialg/geom.hpp"

#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"
#include "antialg/errors.hpp"
#include "literal.hpp"

#include <sstream>
#include <stdexcept>

namespace antialg {

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(const Rational& c, int ep, int eq) {
  LaurentPoly2 out;
  out.add_term({ep, eq}, c);
  return out;
}

void LaurentPoly2::add_term(Key k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

LaurentPoly2 LaurentPoly2::dp() const {
  LaurentPoly2 out;
  for (const auto& [k, c] : terms_)
    if (k.first != 0) out.add_term({k.first - 1, k.second}, c * k.first);
  return out;
}

LaurentPoly2 LaurentPoly2::dq() const {
  LaurentPoly2 out;
  for (const auto& [k, c] : terms_)
    if (k.second != 0) out.add_term({k.first, k.second - 1}, c * k.second);
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// SuperFunction

SuperFunction SuperFunction::monomial(const Rational& c, int ep, int eq, int et) {
  if (et != 0 && et != 1) throw std::invalid_argument("SuperFunction: exponent of t must be 0 or 1");
  auto m = LaurentPoly2::monomial(c, ep, eq);
  return et == 0 ? SuperFunction(std::move(m), {}) : SuperFunction({}, std::move(m));
}

ParityClass SuperFunction::parity() const {
  if (soul_.is_zero()) return ParityClass::even;
  if (body_.is_zero()) return ParityClass::odd;
  return ParityClass::mixed;
}

Parity SuperFunction::homogeneous_parity() const {
  switch (parity()) {
    case ParityClass::even: return Parity::even;
    case ParityClass::odd: return Parity::odd;
    case ParityClass::mixed: break;
  }
  throw std::invalid_argument("mixed-parity superfunction " + to_string(*this));
}

SuperFunction SuperFunction::dp() const { return {body_.dp(), soul_.dp()}; }
SuperFunction SuperFunction::dq() const { return {body_.dq(), soul_.dq()}; }
SuperFunction SuperFunction::dt() const { return {soul_, {}}; }

SuperFunction SuperFunction::euler() const {
  auto scale = [](const LaurentPoly2& f, int shift) {
    LaurentPoly2 out;
    for (const auto& [k, c] : f.terms()) out.add_term(k, c * (k.first + k.second + shift));
    return out;
  };
  return {scale(body_, 0), scale(soul_, 1)};
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& o) {
  body_ += o.body_;
  soul_ += o.soul_;
  return *this;
}

SuperFunction& SuperFunction::operator*=(const Rational& s) {
  body_ *= s;
  soul_ *= s;
  return *this;
}

// (b1 + t s1)(b2 + t s2) = b1 b2 + t (s1 b2 + b1 s2); t^2 = 0.
SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
  return {a.body_ * b.body_, a.soul_ * b.body_ + a.body_ * b.soul_};
}

std::string to_string(const SuperFunction& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const LaurentPoly2& poly, bool tau) {
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
      const auto& [k, c] = *it;
      out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const Rational mag = abs(c);
      std::vector<std::string> factors;
      auto power = [&](const char* v, int e) {
        if (e == 0) return;
        factors.push_back(e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
      };
      power("p", k.first);
      power("q", k.second);
      if (tau) factors.emplace_back("t");
      if (mag != 1 || factors.empty()) out << to_string(mag) << (factors.empty() ? "" : " ");
      for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? " " : "") << factors[i];
    }
  };
  emit(f.body(), false);
  emit(f.soul(), true);
  return out.str();
}

SuperFunction parse_superfunction(std::string_view text) {
  SuperFunction out;
  for (const auto& t : detail::parse_monomial_sum(text, "pqt")) {
    auto get = [&](char v) {
      auto it = t.exponents.find(v);
      return it == t.exponents.end() ? 0 : it->second;
    };
    const int et = get('t');
    if (et != 0 && et != 1) throw InputError("exponent of t must be 0 or 1 in '" + std::string(text) + "'");
    out += SuperFunction::monomial(t.coeff, get('p'), get('q'), et);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brackets

std::string to_string(const BracketSigns& s) {
  std::ostringstream out;
  out << "sigma_P=" << s.sigma_p << " s1=" << s.s1 << " s2(even)=" << s.s2_even << " s2(odd)=" << s.s2_odd
      << " s3=" << s.s3;
  return out.str();
}

namespace {

SuperFunction poisson_part(const SuperFunction& f, const SuperFunction& g) {
  return f.dp() * g.dq() - f.dq() * g.dp();
}

const SuperFunction& tau() {
  static const SuperFunction t = SuperFunction::monomial(1, 0, 0, 1);
  return t;
}

}  // namespace

SuperFunction pbracket(const SuperFunction& f, const SuperFunction& g, const BracketSigns& s) {
  const Parity pf = f.homogeneous_parity();
  g.homogeneous_parity();
  return poisson_part(f, g) + (f.dt() * g.dt()) * Rational(s.sigma_p * sign_of(pf));
}

SuperFunction abracket(const SuperFunction& f, const SuperFunction& g, const BracketSigns& s) {
  const Parity pf = f.homogeneous_parity();
  g.homogeneous_parity();
  const int s2 = is_odd(pf) ? s.s2_odd : s.s2_even;
  SuperFunction inner = (f.dt() * g.euler()) * Rational(s.s1) + (f.euler() * g.dt()) * Rational(s2) +
                        (tau() * poisson_part(f, g)) * Rational(s.s3);
  return inner * make_rational(-sign_of(pf), 2);
}

namespace {

std::pair<SuperFunction, SuperFunction> split(const SuperFunction& f) {
  return {SuperFunction(f.body(), {}), SuperFunction({}, f.soul())};
}

template <typename Bracket>
SuperFunction bilinear(const SuperFunction& f, const SuperFunction& g, Bracket br) {
  auto [f0, f1] = split(f);
  auto [g0, g1] = split(g);
  SuperFunction out;
  for (const SuperFunction* x : {&f0, &f1})
    for (const SuperFunction* y : {&g0, &g1})
      if (!x->is_zero() && !y->is_zero()) out += br(*x, *y);
  return out;
}

}  // namespace

SuperFunction pbracket_linear(const SuperFunction& f, const SuperFunction& g) {
  return bilinear(f, g, [](const SuperFunction& x, const SuperFunction& y) { return pbracket(x, y); });
}

SuperFunction abracket_linear(const SuperFunction& f, const SuperFunction& g) {
  return bilinear(f, g, [](const SuperFunction& x, const SuperFunction& y) { return abracket(x, y); });
}

Rational euler_degree(const SuperFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("euler_degree: zero function");
  std::optional<int> deg;
  auto visit = [&](const LaurentPoly2& poly, int shift) {
    for (const auto& [k, c] : poly.terms()) {
      const int d = k.first + k.second + shift;
      if (deg && *deg != d) throw std::invalid_argument("euler_degree: " + to_string(f) + " is not homogeneous");
      deg = d;
    }
  };
  visit(f.body(), 0);
  visit(f.soul(), 1);
  return *deg;
}

// ---------------------------------------------------------------------------
// Bivectors

std::string_view to_string(BivectorSlot s) {
  switch (s) {
    case BivectorSlot::pq: return "dp^dq";
    case BivectorSlot::pt: return "dp^dt";
    case BivectorSlot::qt: return "dq^dt";
    case BivectorSlot::pp: return "dp^dp";
    case BivectorSlot::qq: return "dq^dq";
    case BivectorSlot::tt: return "dt^dt";
  }
  return "?";
}

const SuperFunction& BivectorAnsatz::at(BivectorSlot s) const {
  static const SuperFunction zero;
  auto it = coeff.find(s);
  return it == coeff.end() ? zero : it->second;
}

bool BivectorAnsatz::operator==(const BivectorAnsatz& o) const {
  for (BivectorSlot s : kBivectorSlots)
    if (!(at(s) == o.at(s))) return false;
  return true;
}

std::string to_string(const BivectorAnsatz& b) {
  std::ostringstream out;
  bool first = true;
  for (BivectorSlot s : kBivectorSlots) {
    if (b.at(s).is_zero()) continue;
    out << (first ? "" : " + ") << "(" << to_string(b.at(s)) << ") " << to_string(s);
    first = false;
  }
  return first ? "0" : out.str();
}

BivectorAnsatz poisson_bivector() {
  BivectorAnsatz b;
  b.coeff[BivectorSlot::pq] = SuperFunction::constant(1);
  b.coeff[BivectorSlot::tt] = SuperFunction::constant(make_rational(1, 2));
  return b;
}

BivectorAnsatz lambda_bivector() {
  BivectorAnsatz b;
  b.coeff[BivectorSlot::pq] = SuperFunction::monomial(1, 0, 0, 1);
  b.coeff[BivectorSlot::pt] = SuperFunction::monomial(1, 1, 0, 0);
  b.coeff[BivectorSlot::qt] = SuperFunction::monomial(1, 0, 1, 0);
  b.coeff[BivectorSlot::tt] = SuperFunction::monomial(1, 0, 0, 1);
  return b;
}

namespace {

SuperFunction pairing(BivectorSlot s, const SuperFunction& f, const SuperFunction& g) {
  const Parity pf = f.homogeneous_parity();
  switch (s) {
    case BivectorSlot::pq: return poisson_part(f, g);
    case BivectorSlot::pt: return f.dt() * g.dp() - (f.dp() * g.dt()) * Rational(sign_of(pf));
    case BivectorSlot::qt: return f.dt() * g.dq() - (f.dq() * g.dt()) * Rational(sign_of(pf));
    case BivectorSlot::tt: return (f.dt() * g.dt()) * Rational(1 - sign_of(pf));
    case BivectorSlot::pp:
    case BivectorSlot::qq: return {};
  }
  return {};
}

// Monomials p^a q^b t^c with a, b >= 0 and a + b + c <= max_deg.
std::vector<SuperFunction> polynomial_monomials(int max_deg, std::optional<int> tau_exp = std::nullopt) {
  std::vector<SuperFunction> out;
  for (int c = 0; c <= 1; ++c) {
    if (tau_exp && *tau_exp != c) continue;
    for (int d = 0; d + c <= max_deg; ++d)
      for (int a = d; a >= 0; --a) out.push_back(SuperFunction::monomial(1, a, d - a, c));
  }
  return out;
}

std::vector<SuperFunction> hamiltonians() {
  return {parse_superfunction("p^2"), parse_superfunction("p q"), parse_superfunction("q^2"),
          parse_superfunction("p t"), parse_superfunction("q t")};
}

// Flattened coefficients of a superfunction over a shared monomial index.
struct MonomialIndex {
  std::map<std::tuple<int, int, int>, std::size_t> slot;

  void add(const SuperFunction& f, std::vector<std::pair<std::size_t, Rational>>& out) {
    auto put = [&](const LaurentPoly2& poly, int t) {
      for (const auto& [k, c] : poly.terms()) {
        auto key = std::make_tuple(k.first, k.second, t);
        auto it = slot.try_emplace(key, slot.size()).first;
        out.emplace_back(it->second, c);
      }
    };
    put(f.body(), 0);
    put(f.soul(), 1);
  }
};

}  // namespace

SuperFunction contract(const BivectorAnsatz& b, const SuperFunction& f, const SuperFunction& g) {
  SuperFunction out;
  for (BivectorSlot s : kBivectorSlots)
    if (!b.at(s).is_zero()) out += b.at(s) * pairing(s, f, g);
  return out;
}

bool BivectorSpace::contains(const BivectorAnsatz& b) const {
  std::vector<Vector> cols;
  MonomialIndex idx;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse;
  auto flatten = [&](const BivectorAnsatz& x) {
    std::vector<std::pair<std::size_t, Rational>> v;
    for (std::size_t k = 0; k < kBivectorSlots.size(); ++k) {
      std::vector<std::pair<std::size_t, Rational>> part;
      idx.add(x.at(kBivectorSlots[k]), part);
      for (auto& [i, c] : part) v.emplace_back(i * kBivectorSlots.size() + k, c);
    }
    return v;
  };
  for (const auto& x : basis) sparse.push_back(flatten(x));
  auto target = flatten(b);
  const std::size_t n = idx.slot.size() * kBivectorSlots.size();
  auto dense = [&](const std::vector<std::pair<std::size_t, Rational>>& v) {
    Vector out(n);
    for (const auto& [i, c] : v) out[i] += c;
    return out;
  };
  for (const auto& v : sparse) cols.push_back(dense(v));
  return coords_in_span(dense(target), cols).has_value();
}

BivectorSpace invariant_bivectors(int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("invariant_bivectors: negative degree");
  // Coefficient parity per slot for an even bivector; odd bivectors flip it.
  const std::vector<std::pair<BivectorSlot, Parity>> even_layout = {
      {BivectorSlot::pq, Parity::even}, {BivectorSlot::pt, Parity::odd},
      {BivectorSlot::qt, Parity::odd},  {BivectorSlot::tt, Parity::even}};
  std::vector<SuperFunction> tests;
  for (const char* t : {"1", "p", "q", "t", "p^2", "p q", "q^2", "p t", "q t"}) tests.push_back(parse_superfunction(t));
  const auto hs = hamiltonians();

  BivectorSpace out;
  for (Parity pb : {Parity::even, Parity::odd}) {
    std::vector<BivectorAnsatz> unknowns;
    for (const auto& [slot, pc] : even_layout) {
      const Parity coeff_parity = pc + pb;
      for (const SuperFunction& m : polynomial_monomials(max_deg, is_odd(coeff_parity) ? 1 : 0)) {
        BivectorAnsatz b;
        b.coeff[slot] = m;
        unknowns.push_back(std::move(b));
      }
    }

    std::map<std::pair<std::size_t, std::size_t>, Rational> entries;  // (row, unknown)
    std::size_t row_base = 0;
    for (const SuperFunction& h : hs) {
      const Parity ph = h.homogeneous_parity();
      for (const SuperFunction& f : tests)
        for (const SuperFunction& g : tests) {
          const Parity pf = f.homogeneous_parity();
          const SuperFunction xf = pbracket(h, f), xg = pbracket(h, g);
          MonomialIndex local;
          for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const BivectorAnsatz& b = unknowns[u];
            SuperFunction r = pbracket(h, contract(b, f, g));
            if (!xf.is_zero()) r = r - contract(b, xf, g) * Rational(koszul(ph, pb));
            if (!xg.is_zero()) r = r - contract(b, f, xg) * Rational(koszul(ph, pb + pf));
            std::vector<std::pair<std::size_t, Rational>> coords;
            local.add(r, coords);
            for (auto& [m, c] : coords) entries[{row_base + m, u}] += c;
          }
          row_base += local.slot.size();
        }
    }
    Matrix sys(row_base, unknowns.size());
    for (const auto& [rc, c] : entries) sys(rc.first, rc.second) = c;
    for (const Vector& v : nullspace(sys)) {
      BivectorAnsatz b;
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (v[u] == 0) continue;
        for (const auto& [slot, f] : unknowns[u].coeff) b.coeff[slot] += f * v[u];
      }
      out.basis.push_back(std::move(b));
      out.parity.push_back(pb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extraction

std::string_view to_string(FunctionSpace s) {
  switch (s) {
    case FunctionSpace::linear: return "linear";
    case FunctionSpace::quadratic: return "quadratic";
    case FunctionSpace::deg1_window: return "deg1-window";
    case FunctionSpace::deg2_window: return "deg2-window";
  }
  return "?";
}

FunctionSpace parse_function_space(std::string_view text) {
  for (FunctionSpace s : {FunctionSpace::linear, FunctionSpace::quadratic, FunctionSpace::deg1_window,
                          FunctionSpace::deg2_window})
    if (to_string(s) == text) return s;
  throw InputError("unknown function space '" + std::string(text) +
                   "' (expected linear, quadratic, deg1-window or deg2-window)");
}

namespace {

struct Finite {
  const char* name;
  const char* function;
  Parity parity;  ///< parity of the algebra element
};

const std::vector<Finite>& finite_space(FunctionSpace s) {
  static const std::vector<Finite> linear = {
      {"eps", "t", Parity::even}, {"a", "q", Parity::odd}, {"b", "p", Parity::odd}};
  static const std::vector<Finite> quadratic = {{"p2", "p^2", Parity::even}, {"pq", "p q", Parity::even},
                                                {"q2", "q^2", Parity::even}, {"pt", "p t", Parity::odd},
                                                {"qt", "q t", Parity::odd}};
  return s == FunctionSpace::linear ? linear : quadratic;
}

bool uses_abracket(FunctionSpace s) { return s == FunctionSpace::linear || s == FunctionSpace::deg1_window; }

// Window symbol (with doubled label) of a monomial p^a q^b t^c of an infinite
// space, or nullopt when the monomial lies outside the family.
std::optional<BasisSymbol> family_symbol(FunctionSpace s, int a, int b, int c) {
  if (s == FunctionSpace::deg1_window) {
    if (c == 1 && a + b == 0) return BasisSymbol{"e", Parity::even, 2 * b};          // t (q/p)^n
    if (c == 0 && a + b == 1) return BasisSymbol{"a", Parity::odd, 2 * b - 1};       // p (q/p)^{i+1/2}
  } else {
    if (c == 0 && a + b == 2) return BasisSymbol{"L", Parity::even, 2 * (b - 1)};    // p^2 (q/p)^{n+1}
    if (c == 1 && a + b == 1) return BasisSymbol{"G", Parity::odd, 2 * b - 1};       // t p (q/p)^{i+1/2}
  }
  return std::nullopt;
}

}  // namespace

SuperFunction function_of(const BasisSymbol& s, FunctionSpace space) {
  if (space == FunctionSpace::linear || space == FunctionSpace::quadratic) {
    for (const auto& f : finite_space(space))
      if (s.name == f.name && !s.index) return parse_superfunction(f.function);
    throw std::invalid_argument("function_of: unknown symbol " + s.label());
  }
  if (!s.index) throw std::invalid_argument("function_of: unindexed symbol " + s.name);
  const int k = *s.index;
  if (space == FunctionSpace::deg1_window) {
    if (s.name == "e") return SuperFunction::monomial(1, -k / 2, k / 2, 1);
    if (s.name == "a") return SuperFunction::monomial(1, (1 - k) / 2, (k + 1) / 2, 0);
  } else {
    if (s.name == "L") return SuperFunction::monomial(1, 1 - k / 2, k / 2 + 1, 0);
    if (s.name == "G") return SuperFunction::monomial(1, (1 - k) / 2, (k + 1) / 2, 1);
  }
  throw std::invalid_argument("function_of: unknown symbol " + s.label());
}

AlgebraDef extract_table(FunctionSpace space, std::optional<int> window, const BracketSigns& signs) {
  std::vector<BasisSymbol> basis;
  std::optional<WindowSpec> w;
  if (space == FunctionSpace::linear || space == FunctionSpace::quadratic) {
    for (const auto& f : finite_space(space)) basis.push_back({f.name, f.parity, std::nullopt});
  } else {
    if (!window) throw InputError("extract: space " + std::string(to_string(space)) + " needs --window");
    w = WindowSpec::of(*window);
    const bool d1 = space == FunctionSpace::deg1_window;
    const int top = w->max_doubled();
    for (int k = -top; k <= top; ++k)
      if (k % 2 == 0) basis.push_back({d1 ? "e" : "L", Parity::even, k});
    for (int k = -top; k <= top; ++k)
      if (k % 2 != 0) basis.push_back({d1 ? "a" : "G", Parity::odd, k});
  }

  std::vector<SuperFunction> fns;
  for (const auto& s : basis) fns.push_back(function_of(s, space));
  const std::size_t n = basis.size();

  auto locate = [&](int a, int b, int c) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i) {
      const SuperFunction& f = fns[i];
      const LaurentPoly2& poly = c == 0 ? f.body() : f.soul();
      if (poly.terms().size() == 1 && poly.terms().begin()->first == std::make_pair(a, b)) return i;
    }
    return std::nullopt;
  };

  std::vector<TableEntry> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SuperFunction r = uses_abracket(space) ? abracket(fns[i], fns[j], signs) : pbracket(fns[i], fns[j], signs);
      TableEntry& cell = table[i * n + j];
      auto visit = [&](const LaurentPoly2& poly, int c) {
        for (const auto& [k, coeff] : poly.terms()) {
          if (cell.out_of_window) return;
          auto pos = locate(k.first, k.second, c);
          if (!pos) {
            auto fam = (space == FunctionSpace::linear || space == FunctionSpace::quadratic)
                           ? std::nullopt
                           : family_symbol(space, k.first, k.second, c);
            if (!fam)
              throw ConsistencyError("extract: " + std::string(to_string(space)) + " is not closed, got " +
                                     to_string(r));
            cell = TableEntry::outside();
            return;
          }
          cell.value.add_term(*pos, coeff);
        }
      };
      visit(r.body(), 0);
      visit(r.soul(), 1);
    }

  const Profile hint = uses_abracket(space) ? Profile::antialgebra : Profile::lie_super;
  std::string name = space == FunctionSpace::linear ? "k3" : std::string(to_string(space));
  if (space == FunctionSpace::deg1_window) name = "ak1";
  return AlgebraDef(std::move(name), std::move(basis), std::move(table), hint, w);
}

NamedCheck check_equivariance(int max_deg, const BracketSigns& signs) {
  NamedCheck out{"geom.equivariance", Verdict::pass, 0, 0, {}};
  const auto monos = polynomial_monomials(max_deg);
  for (const SuperFunction& h : hamiltonians()) {
    const Parity ph = h.homogeneous_parity();
    for (const SuperFunction& f : monos)
      for (const SuperFunction& g : monos) {
        const Parity pf = f.homogeneous_parity();
        const SuperFunction lhs = pbracket(h, abracket(f, g, signs), signs);
        SuperFunction rhs;
        const SuperFunction hf = pbracket(h, f, signs), hg = pbracket(h, g, signs);
        if (!hf.is_zero()) rhs += abracket(hf, g, signs);
        if (!hg.is_zero()) rhs += abracket(f, hg, signs) * Rational(koszul(ph, pf + Parity::odd));
        ++out.checked;
        if (!(lhs == rhs) && out.verdict == Verdict::pass) {
          out.verdict = Verdict::fail;
          out.witness = "H=" + to_string(h) + ", F=" + to_string(f) + ", G=" + to_string(g) + ": " + to_string(lhs) +
                        " != " + to_string(rhs);
        }
      }
  }
  return out;
}

std::vector<BracketSigns> calibrate_signs() {
  std::vector<BracketSigns> found;
  const AlgebraDef target = k3();
  for (int mask = 0; mask < 32; ++mask) {
    auto bit = [&](int k) { return (mask >> k) & 1 ? -1 : 1; };
    const BracketSigns s{bit(0), bit(1), bit(2), bit(3), bit(4)};
    if (!table_diff(extract_table(FunctionSpace::linear, std::nullopt, s), target).empty()) continue;
    if (!check_profile(extract_table(FunctionSpace::quadratic, std::nullopt, s), Profile::lie_super, Execution::serial)
             .passed())
      continue;
    if (check_equivariance(2, s).verdict != Verdict::pass) continue;
    found.push_back(s);
  }
  return found;
}

}  // namespace antialg
