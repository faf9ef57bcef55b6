#include "antialg/axioms.hpp"

#include "antialg/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace antialg {

namespace {

constexpr std::array kAllAxioms = {
    AxiomId::supercomm,          AxiomId::anti_supercomm, AxiomId::even_assoc,    AxiomId::odd_deriv,
    AxiomId::half_action,        AxiomId::commutative_action, AxiomId::graded_jacobi, AxiomId::jordan_super,
};

enum class Slot { any, even, odd };

std::vector<Slot> slots_for(AxiomId a) {
  switch (a) {
    case AxiomId::supercomm:
    case AxiomId::anti_supercomm: return {Slot::any, Slot::any};
    case AxiomId::even_assoc: return {Slot::even, Slot::even, Slot::even};
    case AxiomId::odd_deriv: return {Slot::any, Slot::any, Slot::odd};
    case AxiomId::half_action:
    case AxiomId::commutative_action: return {Slot::even, Slot::even, Slot::odd};
    case AxiomId::graded_jacobi: return {Slot::any, Slot::any, Slot::any};
    case AxiomId::jordan_super: return {Slot::any, Slot::any, Slot::any, Slot::any};
  }
  return {};
}

std::vector<std::size_t> candidates(const AlgebraDef& alg, Slot s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (s == Slot::any || (s == Slot::odd) == is_odd(alg.parity(i))) out.push_back(i);
  }
  return out;
}

// Koszul sign of reordering variables 0..n-1 (with the given parities) into `order`.
int reorder_sign(std::span<const Parity> parities, std::span<const int> order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) sign *= koszul(parities[order[i]], parities[order[j]]);
  return sign;
}

class Evaluator {
 public:
  explicit Evaluator(const AlgebraDef& alg) : alg_(alg) {}

  std::optional<Element> mul(const Element& x, const Element& y) const { return try_multiply(x, y, alg_); }

  std::optional<std::pair<Element, Element>> operator()(AxiomId ax, std::span<const std::size_t> t) const {
    for (auto i : t)
      if (!alg_.guarded(i)) return std::nullopt;
    switch (ax) {
      case AxiomId::supercomm:
      case AxiomId::anti_supercomm: {
        auto xy = mul(e(t[0]), e(t[1]));
        auto yx = mul(e(t[1]), e(t[0]));
        if (!xy || !yx) return std::nullopt;
        int s = koszul(p(t[0]), p(t[1]));
        if (ax == AxiomId::anti_supercomm) s = -s;
        return std::make_pair(std::move(*xy), *yx * Rational(s));
      }
      case AxiomId::even_assoc: {
        auto l = chain_left(t[0], t[1], t[2]);
        auto r = chain_right(t[0], t[1], t[2]);
        if (!l || !r) return std::nullopt;
        return std::make_pair(std::move(*l), std::move(*r));
      }
      case AxiomId::odd_deriv: {
        const std::size_t a = t[0], b = t[1], y = t[2];
        auto lhs = chain_left(a, b, y);
        auto ay = mul(e(a), e(y));
        auto by = mul(e(b), e(y));
        if (!lhs || !ay || !by) return std::nullopt;
        auto first = mul(*ay, e(b));
        auto second = mul(e(a), *by);
        if (!first || !second) return std::nullopt;
        return std::make_pair(std::move(*lhs), *first + *second * Rational(sign_of(p(a))));
      }
      case AxiomId::half_action: {
        auto l = chain_right(t[0], t[1], t[2]);
        auto r = chain_left(t[0], t[1], t[2]);
        if (!l || !r) return std::nullopt;
        return std::make_pair(std::move(*l), *r * make_rational(1, 2));
      }
      case AxiomId::commutative_action: {
        auto l = chain_right(t[0], t[1], t[2]);
        auto r = chain_right(t[1], t[0], t[2]);
        if (!l || !r) return std::nullopt;
        return std::make_pair(std::move(*l), std::move(*r));
      }
      case AxiomId::graded_jacobi: {
        const std::size_t x = t[0], y = t[1], z = t[2];
        auto a = chain_right(x, y, z);
        auto b = chain_right(y, z, x);
        auto c = chain_right(z, x, y);
        if (!a || !b || !c) return std::nullopt;
        Element sum = *a * Rational(koszul(p(x), p(z))) + *b * Rational(koszul(p(y), p(x))) +
                      *c * Rational(koszul(p(z), p(y)));
        return std::make_pair(std::move(sum), Element{});
      }
      case AxiomId::jordan_super: return jordan(t);
    }
    return std::nullopt;
  }

 private:
  Element e(std::size_t i) const { return Element::basis(i); }
  Parity p(std::size_t i) const { return alg_.parity(i); }

  // (x y) z
  std::optional<Element> chain_left(std::size_t x, std::size_t y, std::size_t z) const {
    auto xy = mul(e(x), e(y));
    if (!xy) return std::nullopt;
    return mul(*xy, e(z));
  }
  // x (y z)
  std::optional<Element> chain_right(std::size_t x, std::size_t y, std::size_t z) const {
    auto yz = mul(e(y), e(z));
    if (!yz) return std::nullopt;
    return mul(e(x), *yz);
  }

  std::optional<std::pair<Element, Element>> jordan(std::span<const std::size_t> t) const {
    // Variables 0=x, 1=y, 2=z, 3=w.
    const std::array<Parity, 4> par = {p(t[0]), p(t[1]), p(t[2]), p(t[3])};
    // ((v0 v1) z) v2 and (v0 v1)(z v2) for the cyclic triples (x,y,w), (y,w,x), (w,x,y).
    constexpr std::array<std::array<int, 3>, 3> cyc = {{{0, 1, 3}, {1, 3, 0}, {3, 0, 1}}};
    Element lhs;
    Element rhs;
    for (const auto& c : cyc) {
      const std::array<int, 4> order = {c[0], c[1], 2, c[2]};
      const int s = reorder_sign(par, order);
      auto uv = mul(e(t[c[0]]), e(t[c[1]]));
      if (!uv) return std::nullopt;
      auto uvz = mul(*uv, e(t[2]));
      if (!uvz) return std::nullopt;
      auto left = mul(*uvz, e(t[c[2]]));
      auto zw = mul(e(t[2]), e(t[c[2]]));
      if (!left || !zw) return std::nullopt;
      auto right = mul(*uv, *zw);
      if (!right) return std::nullopt;
      lhs += *left * Rational(s);
      rhs += *right * Rational(s);
    }
    return std::make_pair(std::move(lhs), std::move(rhs));
  }

  const AlgebraDef& alg_;
};

struct Partial {
  AxiomTally tally;
  std::vector<Witness> witnesses;
};

// Sweeps every tuple whose first coordinate is `first`.
void sweep_from(const Evaluator& eval, AxiomId ax, const std::vector<std::vector<std::size_t>>& cand,
                std::size_t first, Partial& out) {
  const std::size_t n = cand.size();
  std::vector<std::size_t> pos(n, 0);
  std::vector<std::size_t> tuple(n);
  tuple[0] = first;
  for (std::size_t k = 1; k < n; ++k)
    if (cand[k].empty()) return;
  while (true) {
    for (std::size_t k = 1; k < n; ++k) tuple[k] = cand[k][pos[k]];
    auto sides = eval(ax, tuple);
    if (!sides) {
      ++out.tally.skipped;
    } else {
      ++out.tally.checked;
      if (!(sides->first == sides->second)) {
        ++out.tally.failed;
        if (out.witnesses.size() < Report::kMaxWitnesses) {
          out.witnesses.push_back(Witness{ax, tuple, std::move(sides->first), std::move(sides->second)});
        }
      }
    }
    if (n == 1) return;
    std::size_t k = n - 1;
    while (++pos[k] == cand[k].size()) {
      pos[k] = 0;
      if (k == 1) return;
      --k;
    }
  }
}

Report assemble(AxiomId ax, std::vector<Partial>& parts) {
  Report r;
  AxiomTally total{ax};
  for (auto& part : parts) {
    total.checked += part.tally.checked;
    total.skipped += part.tally.skipped;
    total.failed += part.tally.failed;
    for (auto& w : part.witnesses) {
      if (r.witnesses.size() < Report::kMaxWitnesses) r.witnesses.push_back(std::move(w));
    }
  }
  r.tallies.push_back(total);
  return r;
}

}  // namespace

std::string_view to_string(AxiomId a) {
  switch (a) {
    case AxiomId::supercomm: return "supercomm";
    case AxiomId::anti_supercomm: return "anti-supercomm";
    case AxiomId::even_assoc: return "even-assoc";
    case AxiomId::odd_deriv: return "odd-deriv";
    case AxiomId::half_action: return "half-action";
    case AxiomId::commutative_action: return "commutative-action";
    case AxiomId::graded_jacobi: return "graded-jacobi";
    case AxiomId::jordan_super: return "jordan-super";
  }
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  for (AxiomId a : kAllAxioms)
    if (to_string(a) == text) return a;
  throw InputError("unknown axiom id '" + std::string(text) + "'");
}

std::size_t arity(AxiomId a) { return slots_for(a).size(); }

std::vector<AxiomId> profile_members(Profile p) {
  switch (p) {
    case Profile::antialgebra:
      return {AxiomId::supercomm, AxiomId::even_assoc, AxiomId::odd_deriv, AxiomId::commutative_action,
              AxiomId::half_action};
    case Profile::lie_super: return {AxiomId::anti_supercomm, AxiomId::graded_jacobi};
    case Profile::jordan_super: return {AxiomId::supercomm, AxiomId::jordan_super};
    case Profile::none: return {};
  }
  return {};
}

Verdict AxiomTally::verdict() const {
  if (failed > 0) return Verdict::fail;
  if (checked == 0 && skipped > 0) return Verdict::skipped_out_of_window;
  return Verdict::pass;
}

Verdict Report::verdict() const {
  bool any_checked = false;
  bool any_skipped_only = false;
  for (const auto& t : tallies) {
    if (t.verdict() == Verdict::fail) return Verdict::fail;
    if (t.checked > 0) any_checked = true;
    if (t.verdict() == Verdict::skipped_out_of_window) any_skipped_only = true;
  }
  if (any_skipped_only && !any_checked) return Verdict::skipped_out_of_window;
  return Verdict::pass;
}

std::size_t Report::checked() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.checked;
  return n;
}

std::size_t Report::skipped() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.skipped;
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

std::optional<std::pair<Element, Element>> evaluate_axiom(const AlgebraDef& alg, AxiomId ax,
                                                          std::span<const std::size_t> tuple) {
  const auto slots = slots_for(ax);
  if (tuple.size() != slots.size()) throw InputError("wrong tuple length for axiom " + std::string(to_string(ax)));
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] >= alg.size()) throw InputError("tuple refers to an unknown basis index");
  }
  return Evaluator(alg)(ax, tuple);
}

Report check_axiom(const AlgebraDef& alg, AxiomId ax, Execution exec) {
  const auto slots = slots_for(ax);
  std::vector<std::vector<std::size_t>> cand;
  for (Slot s : slots) cand.push_back(candidates(alg, s));
  const Evaluator eval(alg);
  const auto& firsts = cand[0];
  std::vector<Partial> parts(firsts.size(), Partial{AxiomTally{ax}, {}});
  const auto count = static_cast<std::ptrdiff_t>(firsts.size());
  if (exec == Execution::parallel) {
    // Each iteration owns parts[i]; merging in index order keeps the report
    // identical to the serial sweep.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) sweep_from(eval, ax, cand, firsts[i], parts[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) sweep_from(eval, ax, cand, firsts[i], parts[i]);
  }
  return assemble(ax, parts);
}

Report check_profile(const AlgebraDef& alg, Profile p, Execution exec) {
  Report out;
  for (AxiomId ax : profile_members(p)) {
    Report r = check_axiom(alg, ax, exec);
    out.tallies.insert(out.tallies.end(), r.tallies.begin(), r.tallies.end());
    for (auto& w : r.witnesses) out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::string describe(const Witness& w, const AlgebraDef& alg) {
  std::ostringstream os;
  os << to_string(w.axiom) << " (";
  for (std::size_t k = 0; k < w.tuple.size(); ++k) os << (k ? "," : "") << alg.symbol(w.tuple[k]).label();
  os << "): lhs=" << to_string(w.lhs, alg) << " rhs=" << to_string(w.rhs, alg);
  return os.str();
}

CheckList to_checks(const Report& r, const AlgebraDef& alg, std::string_view prefix) {
  CheckList out;
  for (const auto& t : r.tallies) {
    NamedCheck c{std::string(prefix) + "." + std::string(to_string(t.axiom)), t.verdict(), t.checked, t.skipped, {}};
    for (const auto& w : r.witnesses) {
      if (w.axiom == t.axiom) {
        c.witness = describe(w, alg);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

GenerationTrace check_generated_by_odd(const AlgebraDef& alg) {
  GenerationTrace trace;
  const std::size_t n = alg.size();
  std::vector<Vector> span_vectors;

  auto try_add = [&](const Element& value, std::string expression) {
    if (value.is_zero()) return false;
    Vector v = value.to_vector(n);
    if (coords_in_span(v, span_vectors)) return false;
    span_vectors.push_back(std::move(v));
    trace.spanning.push_back(GenerationStep{value, std::move(expression)});
    return true;
  };

  for (std::size_t i : alg.indices_of(Parity::odd)) try_add(Element::basis(i), alg.symbol(i).label());

  // Worklist closure: every new spanning element is multiplied with all
  // earlier ones (earlier factor first, then the reverse) and itself.
  for (std::size_t cur = 0; cur < trace.spanning.size(); ++cur) {
    for (std::size_t other = 0; other <= cur; ++other) {
      const GenerationStep a = trace.spanning[cur];
      const GenerationStep b = trace.spanning[other];
      if (auto ba = try_multiply(b.value, a.value, alg)) try_add(*ba, "(" + b.expression + "*" + a.expression + ")");
      if (other != cur) {
        if (auto ab = try_multiply(a.value, b.value, alg)) try_add(*ab, "(" + a.expression + "*" + b.expression + ")");
      }
    }
  }

  trace.generated = true;
  for (std::size_t i : alg.indices_of(Parity::even)) {
    auto coords = coords_in_span(Element::basis(i).to_vector(n), span_vectors);
    if (!coords) {
      trace.generated = false;
      trace.even_expressions.push_back(alg.symbol(i).label() + " = not reached");
      continue;
    }
    std::ostringstream os;
    os << alg.symbol(i).label() << " =";
    bool first = true;
    for (std::size_t k = 0; k < coords->size(); ++k) {
      const Rational& c = (*coords)[k];
      if (sgn(c) == 0) continue;
      os << (first ? " " : " + ") << c.get_str() << "*" << trace.spanning[k].expression;
      first = false;
    }
    trace.even_expressions.push_back(os.str());
  }
  return trace;
}

}  // namespace antialg
