#include "antialg/densities.hpp"

#include "antialg/errors.hpp"
#include "literal.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace antialg {

Density::Density(std::map<int, Rational> poly, int weight2) : poly_(std::move(poly)), weight2_(weight2) {
  std::erase_if(poly_, [](const auto& kv) { return kv.second == 0; });
}

Density Density::monomial(const Rational& c, int exponent, int weight2) { return Density({{exponent, c}}, weight2); }

Parity Density::parity() const { return (weight2_ % 2 != 0) ? Parity::odd : Parity::even; }

Density Density::derivative() const {
  std::map<int, Rational> out;
  for (const auto& [k, c] : poly_)
    if (k != 0) out[k - 1] = c * k;
  return Density(std::move(out), weight2_);
}

Density& Density::operator+=(const Density& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) weight2_ = o.weight2_;
  if (o.weight2_ != weight2_) throw std::invalid_argument("Density: adding densities of different weights");
  for (const auto& [k, c] : o.poly_) {
    Rational& slot = poly_[k];
    slot += c;
    if (slot == 0) poly_.erase(k);
  }
  return *this;
}

Density& Density::operator*=(const Rational& s) {
  if (s == 0) {
    poly_.clear();
    return *this;
  }
  for (auto& kv : poly_) kv.second *= s;
  return *this;
}

bool operator==(const Density& a, const Density& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.weight2_ == b.weight2_ && a.poly_ == b.poly_;
}

std::string to_string(const Density& d) {
  std::ostringstream out;
  if (d.is_zero()) {
    out << "0";
  } else {
    bool first = true;
    for (auto it = d.poly().rbegin(); it != d.poly().rend(); ++it) {
      const auto& [k, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        out << to_string(mag);
      } else {
        if (mag != 1) out << to_string(mag) << " ";
        out << "z";
        if (k != 1) out << "^" << k;
      }
    }
  }
  out << " @ " << format_index(d.weight2());
  return out.str();
}

Density parse_density(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw InputError("density literal needs '@ weight': '" + std::string(text) + "'");
  std::string w(text.substr(at + 1));
  w.erase(0, w.find_first_not_of(" \t"));
  w.erase(w.find_last_not_of(" \t") + 1);
  const Rational weight = parse_rational(w);
  const Rational doubled = weight * 2;
  if (doubled.get_den() != 1) throw InputError("density weight must be an integer or half-integer: '" + w + "'");
  std::map<int, Rational> poly;
  for (const auto& t : detail::parse_monomial_sum(text.substr(0, at), "z")) {
    auto it = t.exponents.find('z');
    poly[it == t.exponents.end() ? 0 : it->second] += t.coeff;
  }
  return Density(std::move(poly), static_cast<int>(doubled.get_num().get_si()));
}

Density dmul(const Density& a, const Density& b) {
  std::map<int, Rational> out;
  for (const auto& [i, c] : a.poly())
    for (const auto& [j, d] : b.poly()) out[i + j] += c * d;
  return Density(std::move(out), a.weight2() + b.weight2());
}

Density dbracket(const Density& a, const Density& b) {
  const Rational mu = a.weight(), lambda = b.weight();
  Density t1 = dmul(a, b.derivative()) * (-mu);
  Density t2 = dmul(a.derivative(), b) * lambda;
  Density out = t1 + t2;
  return Density(out.poly(), a.weight2() + b.weight2() + 2);
}

namespace {

void require_weights(const Density& d, int w1, int w2, const char* what) {
  if (d.weight2() != w1 && d.weight2() != w2) {
    throw std::invalid_argument(std::string(what) + ": weight " + format_index(d.weight2()) + " is not " +
                                format_index(w1) + " or " + format_index(w2));
  }
}

}  // namespace

Density antiproduct(const Density& a, const Density& b) {
  require_weights(a, 0, -1, "antiproduct");
  require_weights(b, 0, -1, "antiproduct");
  const bool ao = a.weight2() == -1, bo = b.weight2() == -1;
  if (!ao && !bo) return dmul(a, b);
  if (ao && bo) return dbracket(a, b);
  return dmul(a, b) * make_rational(1, 2);
}

Density superbracket(const Density& a, const Density& b) {
  require_weights(a, -2, -1, "superbracket");
  require_weights(b, -2, -1, "superbracket");
  if (a.weight2() == -1 && b.weight2() == -1) return dmul(a, b) * make_rational(1, 2);
  return dbracket(a, b);
}

std::string_view to_string(DensitySpace s) { return s == DensitySpace::antialgebra ? "antialgebra" : "liesuper"; }

DensitySpace parse_density_space(std::string_view text) {
  if (text == "antialgebra") return DensitySpace::antialgebra;
  if (text == "liesuper" || text == "lie-super") return DensitySpace::liesuper;
  throw InputError("unknown density space '" + std::string(text) + "' (expected antialgebra or liesuper)");
}

// Doubled labels: e[n] / L[n] store 2n, a[i] / G[i] store 2i.
Density density_of(const BasisSymbol& s, DensitySpace space) {
  if (!s.index) throw std::invalid_argument("density_of: unindexed symbol " + s.name);
  const int k = *s.index;
  if (is_odd(s.parity)) return Density::monomial(1, (1 - k) / 2, -1);  // z^{1/2 - i}
  if (space == DensitySpace::antialgebra) return Density::monomial(1, -k / 2, 0);
  return Density::monomial(1, 1 - k / 2, -2);
}

namespace {

// Window label (doubled) of the basis monomial z^e at the given weight.
int label_of(int exponent, int weight2, DensitySpace space) {
  if (weight2 == -1) return 1 - 2 * exponent;
  if (space == DensitySpace::antialgebra) return -2 * exponent;
  return 2 * (1 - exponent);
}

struct WindowBasis {
  std::vector<BasisSymbol> basis;
  std::vector<Density> images;
};

WindowBasis window_basis(DensitySpace space, const WindowSpec& w) {
  WindowBasis out;
  const std::string even = space == DensitySpace::antialgebra ? "e" : "L";
  const std::string odd = space == DensitySpace::antialgebra ? "a" : "G";
  const int top = w.max_doubled();
  for (int k = -top; k <= top; ++k)
    if (k % 2 == 0) out.basis.push_back({even, Parity::even, k});
  for (int k = -top; k <= top; ++k)
    if (k % 2 != 0) out.basis.push_back({odd, Parity::odd, k});
  for (const auto& s : out.basis) out.images.push_back(density_of(s, space));
  return out;
}

}  // namespace

AlgebraDef realize_window(DensitySpace space, const WindowSpec& w) {
  WindowBasis wb = window_basis(space, w);
  const std::size_t n = wb.basis.size();
  auto locate = [&](Parity p, int label) -> std::optional<std::size_t> {
    if (!w.contains(label)) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      if (wb.basis[i].parity == p && wb.basis[i].index == label) return i;
    return std::nullopt;
  };

  std::vector<TableEntry> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Density d = space == DensitySpace::antialgebra ? antiproduct(wb.images[i], wb.images[j])
                                                           : superbracket(wb.images[i], wb.images[j]);
      TableEntry& cell = table[i * n + j];
      for (const auto& [e, c] : d.poly()) {
        auto k = locate(d.parity(), label_of(e, d.weight2(), space));
        if (!k) {
          cell = TableEntry::outside();
          break;
        }
        cell.value.add_term(*k, c);
      }
    }
  const bool anti = space == DensitySpace::antialgebra;
  return AlgebraDef(anti ? "ak1" : "k1", std::move(wb.basis), std::move(table),
                    anti ? Profile::antialgebra : Profile::lie_super, w);
}

CheckList check_poisson_leibniz(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-6, 6);  // doubled, so [-3, 3]
  std::uniform_int_distribution<int> expo(-4, 4);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto draw = [&] {
    int c = num(rng);
    if (c == 0) c = 1;
    return Density::monomial(make_rational(c, den(rng)), expo(rng), weight(rng));
  };

  NamedCheck leibniz{"densities.leibniz", Verdict::pass, 0, 0, {}};
  NamedCheck wbr{"densities.weight.dbracket", Verdict::pass, 0, 0, {}};
  NamedCheck wmul{"densities.weight.dmul", Verdict::pass, 0, 0, {}};
  NamedCheck action{"densities.vector-field-action", Verdict::pass, 0, 0, {}};
  auto fail = [](NamedCheck& c, std::string w) {
    if (c.verdict == Verdict::pass) {
      c.verdict = Verdict::fail;
      c.witness = std::move(w);
    }
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const Density a = draw(), b = draw(), c = draw();
    const std::string triple = "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";

    const Density bc = dmul(b, c);
    const Density lhs = dbracket(a, bc);
    const Density rhs = dmul(dbracket(a, b), c) + dmul(b, dbracket(a, c));
    ++leibniz.checked;
    if (lhs != rhs) fail(leibniz, triple + ": " + to_string(lhs) + " != " + to_string(rhs));

    ++wmul.checked;
    if (bc.weight2() != b.weight2() + c.weight2()) fail(wmul, triple);
    ++wbr.checked;
    if (lhs.weight2() != a.weight2() + b.weight2() + c.weight2() + 2 ||
        dbracket(a, b).weight2() != a.weight2() + b.weight2() + 2)
      fail(wbr, triple);

    // f dz^{-1} acting on g dz^lambda.
    const Density f(a.poly(), -2);
    const Density direct = Density(dmul(f, b.derivative()).poly(), b.weight2()) +
                           Density(dmul(f.derivative(), b).poly(), b.weight2()) * b.weight();
    ++action.checked;
    if (dbracket(f, b) != direct) fail(action, "(" + to_string(f) + ", " + to_string(b) + ")");
  }
  return {leibniz, wbr, wmul, action};
}

NamedCheck check_compatibility(const WindowSpec& w) {
  NamedCheck out{"densities.compatibility", Verdict::pass, 0, 0, {}};
  std::vector<Density> odd;
  std::vector<std::string> names;
  const int top = w.max_doubled();
  std::size_t total = 0;
  for (int k = -top; k <= top; ++k) {
    if (k % 2 == 0) continue;
    ++total;
    if (!w.guards(k)) continue;
    BasisSymbol s{"a", Parity::odd, k};
    odd.push_back(density_of(s, DensitySpace::antialgebra));
    names.push_back(s.label());
  }
  out.skipped = total * total * total - odd.size() * odd.size() * odd.size();
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      for (std::size_t k = 0; k < odd.size(); ++k) {
        const Density& y1 = odd[i];
        const Density& y2 = odd[j];
        const Density& y3 = odd[k];
        const Density lhs = superbracket(superbracket(y1, y2), y3);
        const Density rhs = antiproduct(y1, antiproduct(y2, y3)) + antiproduct(y2, antiproduct(y1, y3));
        ++out.checked;
        if (lhs != rhs && out.verdict == Verdict::pass) {
          out.verdict = Verdict::fail;
          out.witness = "(" + names[i] + ", " + names[j] + ", " + names[k] + "): " + to_string(lhs) +
                        " != " + to_string(rhs);
        }
      }
  return out;
}

}  // namespace antialg
