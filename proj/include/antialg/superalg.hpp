#pragma once

// Z2-graded algebras given by structure constants: basis symbols, elements,
// product tables, and windowed materialization of index families.

#include "antialg/exactla.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antialg {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr bool is_odd(Parity p) noexcept { return p == Parity::odd; }
/// (-1)^{|a||b|}
constexpr int koszul(Parity a, Parity b) noexcept { return is_odd(a) && is_odd(b) ? -1 : 1; }
/// (-1)^{|a|}
constexpr int sign_of(Parity a) noexcept { return is_odd(a) ? -1 : 1; }

std::string_view to_string(Parity p);

enum class ParityClass { even, odd, mixed };
std::string_view to_string(ParityClass p);

/// Formats a doubled index k as the label k/2 ("3", "-1/2").
std::string format_index(int doubled);

/// A basis vector. Indexed families (AK(1), K(1)) carry a doubled index so
/// half-integer labels stay integral: stored k means label k/2.
struct BasisSymbol {
  std::string name;
  Parity parity = Parity::even;
  std::optional<int> index;

  /// `name` or `name[label]`, e.g. `eps`, `e[-2]`, `a[3/2]`.
  std::string label() const;
  /// |label| as a rational; 0 for unindexed symbols.
  Rational magnitude() const;

  bool operator==(const BasisSymbol&) const = default;
};

/// Splits `name[label]` into (name, doubled index). Returns nullopt when the
/// token is not of that shape; throws InputError when the label is not a
/// half-integer.
std::optional<std::pair<std::string, int>> split_indexed_label(std::string_view token);

/// Linear combination of basis vectors, keyed by basis position. Zero
/// coefficients are never stored.
class Element {
 public:
  Element() = default;
  static Element basis(std::size_t i, const Rational& c = 1);
  static Element from_vector(const Vector& v);

  const std::map<std::size_t, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(std::size_t i) const;
  void add_term(std::size_t i, const Rational& c);
  Vector to_vector(std::size_t n) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<std::size_t, Rational> terms_;
};

enum class Profile { none, antialgebra, lie_super, jordan_super };
std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view text);

/// Truncation of an infinite family: symbols with |label| <= bound are
/// materialized; identity checks only consider symbols with |label| <= guard.
struct WindowSpec {
  Rational bound;
  Rational guard;

  WindowSpec(Rational bound_, Rational guard_);
  static WindowSpec of(long bound) { return WindowSpec(bound, bound); }
  static WindowSpec of(long bound, long guard) { return WindowSpec(bound, guard); }

  bool contains(int doubled_index) const;
  bool guards(int doubled_index) const;
  /// Largest doubled index inside the window.
  int max_doubled() const;

  bool operator==(const WindowSpec&) const = default;
};

/// One cell of a product table. An out-of-window cell is a product whose
/// value left the materialized window; it is not zero.
struct TableEntry {
  bool out_of_window = false;
  Element value;

  static TableEntry outside() { return TableEntry{true, {}}; }
  bool operator==(const TableEntry&) const = default;
};

class AlgebraDef {
 public:
  AlgebraDef() = default;
  /// `table` is row-major over ordered basis pairs (size n*n). Validates
  /// symbol uniqueness and that every entry has the parity of its factors.
  AlgebraDef(std::string name, std::vector<BasisSymbol> basis, std::vector<TableEntry> table,
             Profile hint = Profile::none, std::optional<WindowSpec> window = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  Profile hint() const noexcept { return hint_; }
  const std::optional<WindowSpec>& window() const noexcept { return window_; }

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisSymbol>& basis() const noexcept { return basis_; }
  const BasisSymbol& symbol(std::size_t i) const { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  std::vector<std::size_t> indices_of(Parity p) const;
  std::size_t dim(Parity p) const { return indices_of(p).size(); }

  const TableEntry& entry(std::size_t i, std::size_t j) const { return table_.at(i * basis_.size() + j); }
  const std::vector<TableEntry>& table() const noexcept { return table_; }
  bool has_out_of_window() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// The basis element with this label; throws InputError if unknown.
  Element element(std::string_view label) const;

  /// True when the symbol lies in the guard band (always true without a window).
  bool guarded(std::size_t i) const;

  AlgebraDef renamed(std::string name) const;
  AlgebraDef with_hint(Profile hint) const;

 private:
  std::string name_;
  std::vector<BasisSymbol> basis_;
  std::vector<TableEntry> table_;
  Profile hint_ = Profile::none;
  std::optional<WindowSpec> window_;
};

/// Bilinear extension of the table. nullopt when any contributing basis
/// product is out-of-window.
std::optional<Element> try_multiply(const Element& x, const Element& y, const AlgebraDef& alg);
/// As try_multiply, but throws OutOfWindow instead of returning nullopt.
Element multiply(const Element& x, const Element& y, const AlgebraDef& alg);

/// Zero reports even.
ParityClass parity_of(const Element& e, const AlgebraDef& alg);

std::string to_string(const Element& e, const AlgebraDef& alg);

/// Entry-by-entry comparison keyed by symbol labels; empty when the two
/// algebras have the same basis labels (with parities) and identical tables.
std::vector<std::string> table_diff(const AlgebraDef& a, const AlgebraDef& b);

/// Subalgebra on the basis positions selected by `keep`; throws
/// ConsistencyError when a kept product has a component outside the subset.
AlgebraDef restrict_to(const AlgebraDef& alg, const std::function<bool(const BasisSymbol&)>& keep,
                       std::string name);

// ---------------------------------------------------------------------------
// Rule-based families

struct IndexedSpecies {
  std::string name;
  Parity parity;
  bool half_integer;  ///< labels in Z + 1/2 rather than Z
};

struct FamilyTerm {
  std::size_t species;
  int doubled_index;
  Rational coeff;
};

using FamilyRule = std::function<std::vector<FamilyTerm>(std::size_t s1, int i1, std::size_t s2, int i2)>;

struct IndexedFamily {
  std::string name;
  std::vector<IndexedSpecies> species;
  FamilyRule rule;
  Profile hint = Profile::none;
};

/// The closed-form AK(1) rule: e_n e_m = e_{n+m}, e_n a_i = a_i e_n = 1/2 a_{n+i},
/// a_i a_j = 1/2 (i-j) e_{i+j}.
IndexedFamily ak1_family();

/// Basis: species in declaration order, each by ascending label with
/// |label| <= bound. Products with a nonzero term leaving the window become
/// out-of-window entries.
AlgebraDef materialize_window(const IndexedFamily& fam, const WindowSpec& w);

}  // namespace antialg
