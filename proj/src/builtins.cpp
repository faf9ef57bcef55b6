#include "antialg/builtins.hpp"

#include "antialg/adjoint.hpp"
#include "antialg/densities.hpp"
#include "antialg/errors.hpp"

#include <string>

namespace antialg {

std::string_view to_string(BuiltinName b) {
  switch (b) {
    case BuiltinName::k3: return "k3";
    case BuiltinName::ak1: return "ak1";
    case BuiltinName::osp12: return "osp12";
    case BuiltinName::k1: return "k1";
    case BuiltinName::witt: return "witt";
  }
  return "?";
}

BuiltinName parse_builtin(std::string_view text) {
  for (BuiltinName b : all_builtins())
    if (to_string(b) == text) return b;
  throw InputError("unknown builtin '" + std::string(text) + "' (expected k3, ak1, osp12, k1 or witt)");
}

std::vector<BuiltinName> all_builtins() {
  return {BuiltinName::k3, BuiltinName::ak1, BuiltinName::osp12, BuiltinName::k1, BuiltinName::witt};
}

bool needs_window(BuiltinName b) { return b == BuiltinName::ak1 || b == BuiltinName::k1 || b == BuiltinName::witt; }

AlgebraDef k3() {
  std::vector<BasisSymbol> basis = {{"eps", Parity::even, std::nullopt},
                                    {"a", Parity::odd, std::nullopt},
                                    {"b", Parity::odd, std::nullopt}};
  const Rational half = make_rational(1, 2);
  constexpr std::size_t eps = 0, a = 1, b = 2;
  std::vector<TableEntry> table(9);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    table[i * 3 + j] = TableEntry{false, Element::basis(k, c)};
  };
  set(eps, eps, eps, 1);
  set(eps, a, a, half);
  set(a, eps, a, half);
  set(eps, b, b, half);
  set(b, eps, b, half);
  set(a, b, eps, half);
  set(b, a, eps, -half);
  return AlgebraDef("k3", std::move(basis), std::move(table), Profile::antialgebra);
}

AlgebraDef ak1(const WindowSpec& w) {
  const int top = w.max_doubled();
  std::vector<BasisSymbol> basis;
  for (int k = -top; k <= top; k += 1)
    if (k % 2 == 0) basis.push_back({"e", Parity::even, k});
  const std::size_t ne = basis.size();
  for (int k = -top; k <= top; k += 1)
    if (k % 2 != 0) basis.push_back({"a", Parity::odd, k});
  const std::size_t n = basis.size();

  // Position of a doubled label: evens at (k + top')/2, odds after them.
  const int top_even = top - (top % 2);
  const int top_odd = (top % 2 != 0) ? top : top - 1;
  auto pos = [&](bool odd, int k) -> std::size_t {
    return odd ? ne + static_cast<std::size_t>((k + top_odd) / 2) : static_cast<std::size_t>((k + top_even) / 2);
  };

  std::vector<TableEntry> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool oi = is_odd(basis[i].parity), oj = is_odd(basis[j].parity);
      const int ki = *basis[i].index, kj = *basis[j].index, k = ki + kj;
      Rational c = 1;
      if (oi && oj) {
        c = make_rational(ki - kj, 4);
      } else if (oi != oj) {
        c = make_rational(1, 2);
      }
      TableEntry& cell = table[i * n + j];
      if (c == 0) continue;
      if (!w.contains(k)) {
        cell = TableEntry::outside();
        continue;
      }
      cell.value = Element::basis(pos(oi != oj, k), c);
    }
  return AlgebraDef("ak1", std::move(basis), std::move(table), Profile::antialgebra, w);
}

AlgebraDef builtin(BuiltinName name, const std::optional<WindowSpec>& window) {
  if (needs_window(name) && !window)
    throw InputError("builtin '" + std::string(to_string(name)) + "' is infinite-dimensional and needs a window");
  switch (name) {
    case BuiltinName::k3: return k3();
    case BuiltinName::ak1: return ak1(*window);
    case BuiltinName::osp12: return adjoint_algebra(k3()).lie.algebra.renamed("osp12");
    case BuiltinName::k1: return realize_window(DensitySpace::liesuper, *window);
    case BuiltinName::witt:
      return restrict_to(realize_window(DensitySpace::liesuper, *window),
                         [](const BasisSymbol& s) { return !is_odd(s.parity); }, "witt");
  }
  throw InputError("unknown builtin");
}

}  // namespace antialg
