#include "antialg/superalg.hpp"

#include "antialg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace antialg {

std::string_view to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

std::string_view to_string(ParityClass p) {
  switch (p) {
    case ParityClass::even: return "even";
    case ParityClass::odd: return "odd";
    case ParityClass::mixed: return "mixed";
  }
  return "mixed";
}

std::string format_index(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string BasisSymbol::label() const {
  if (!index) return name;
  return name + "[" + format_index(*index) + "]";
}

Rational BasisSymbol::magnitude() const {
  if (!index) return 0;
  return make_rational(std::abs(*index), 2);
}

std::optional<std::pair<std::string, int>> split_indexed_label(std::string_view token) {
  const auto open = token.find('[');
  if (open == std::string_view::npos || open == 0 || token.back() != ']') return std::nullopt;
  const std::string_view name = token.substr(0, open);
  if (!std::all_of(name.begin(), name.end(),
                   [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; })) {
    return std::nullopt;
  }
  const std::string_view inner = token.substr(open + 1, token.size() - open - 2);
  if (inner.find('[') != std::string_view::npos || inner.find(']') != std::string_view::npos) return std::nullopt;
  const Rational value = parse_rational(inner);
  const Rational doubled = 2 * value;
  if (doubled.get_den() != 1) throw InputError("index '" + std::string(inner) + "' is not a half-integer");
  return std::make_pair(std::string(name), static_cast<int>(doubled.get_num().get_si()));
}

// ---------------------------------------------------------------------------

Element Element::basis(std::size_t i, const Rational& c) {
  Element e;
  e.add_term(i, c);
  return e;
}

Element Element::from_vector(const Vector& v) {
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(i, v[i]);
  return e;
}

Rational Element::coeff(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(std::size_t i, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Vector Element::to_vector(std::size_t n) const {
  Vector v(n);
  for (const auto& [i, c] : terms_) {
    if (i >= n) throw InputError("element index out of range");
    v[i] = c;
  }
  return v;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& [i, c] : e.terms_) c = -c;
  return e;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::none: return "none";
    case Profile::antialgebra: return "antialgebra";
    case Profile::lie_super: return "lie-super";
    case Profile::jordan_super: return "jordan-super";
  }
  return "none";
}

std::optional<Profile> parse_profile(std::string_view text) {
  for (Profile p : {Profile::none, Profile::antialgebra, Profile::lie_super, Profile::jordan_super}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

WindowSpec::WindowSpec(Rational bound_, Rational guard_) : bound(std::move(bound_)), guard(std::move(guard_)) {
  if (sgn(bound) < 0) throw InputError("window bound must be nonnegative");
  if (sgn(guard) < 0) throw InputError("window guard must be nonnegative");
  if (guard > bound) throw InputError("window guard exceeds bound");
}

bool WindowSpec::contains(int doubled_index) const { return make_rational(std::abs(doubled_index), 2) <= bound; }

bool WindowSpec::guards(int doubled_index) const { return make_rational(std::abs(doubled_index), 2) <= guard; }

int WindowSpec::max_doubled() const {
  mpz_class f;
  const Rational twice = 2 * bound;
  mpz_fdiv_q(f.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  return static_cast<int>(f.get_si());
}

// ---------------------------------------------------------------------------

AlgebraDef::AlgebraDef(std::string name, std::vector<BasisSymbol> basis, std::vector<TableEntry> table,
                       Profile hint, std::optional<WindowSpec> window)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)), hint_(hint), window_(std::move(window)) {
  const std::size_t n = basis_.size();
  if (table_.size() != n * n) throw InputError("product table must cover all ordered basis pairs");
  std::set<std::string> seen;
  for (const auto& s : basis_) {
    if (s.name.empty()) throw InputError("empty basis symbol name");
    if (!seen.insert(s.label()).second) throw InputError("duplicate basis symbol '" + s.label() + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const TableEntry& e = table_[i * n + j];
      if (e.out_of_window) continue;
      const Parity want = basis_[i].parity + basis_[j].parity;
      for (const auto& [k, c] : e.value.terms()) {
        if (k >= n) throw InputError("table entry refers to unknown basis index");
        if (basis_[k].parity != want) {
          throw InputError("product " + basis_[i].label() + "*" + basis_[j].label() + " has a term " +
                           basis_[k].label() + " of the wrong parity");
        }
      }
    }
  }
}

std::vector<std::size_t> AlgebraDef::indices_of(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].parity == p) out.push_back(i);
  return out;
}

bool AlgebraDef::has_out_of_window() const {
  return std::any_of(table_.begin(), table_.end(), [](const TableEntry& e) { return e.out_of_window; });
}

std::optional<std::size_t> AlgebraDef::find(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label() == label) return i;
  return std::nullopt;
}

Element AlgebraDef::element(std::string_view label) const {
  auto i = find(label);
  if (!i) throw InputError("unknown basis symbol '" + std::string(label) + "' in algebra " + name_);
  return Element::basis(*i);
}

bool AlgebraDef::guarded(std::size_t i) const {
  const BasisSymbol& s = basis_.at(i);
  if (!window_ || !s.index) return true;
  return window_->guards(*s.index);
}

AlgebraDef AlgebraDef::renamed(std::string name) const {
  AlgebraDef copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

AlgebraDef AlgebraDef::with_hint(Profile hint) const {
  AlgebraDef copy = *this;
  copy.hint_ = hint;
  return copy;
}

std::optional<Element> try_multiply(const Element& x, const Element& y, const AlgebraDef& alg) {
  Element out;
  const std::size_t n = alg.size();
  for (const auto& [i, ci] : x.terms()) {
    if (i >= n) throw InputError("element refers to a symbol outside algebra " + alg.name());
    for (const auto& [j, cj] : y.terms()) {
      if (j >= n) throw InputError("element refers to a symbol outside algebra " + alg.name());
      const TableEntry& e = alg.entry(i, j);
      if (e.out_of_window) return std::nullopt;
      if (e.value.is_zero()) continue;
      const Rational c = ci * cj;
      for (const auto& [k, ck] : e.value.terms()) out.add_term(k, c * ck);
    }
  }
  return out;
}

Element multiply(const Element& x, const Element& y, const AlgebraDef& alg) {
  auto r = try_multiply(x, y, alg);
  if (!r) throw OutOfWindow("product leaves the window of " + alg.name());
  return std::move(*r);
}

ParityClass parity_of(const Element& e, const AlgebraDef& alg) {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [i, c] : e.terms()) {
    if (is_odd(alg.parity(i))) has_odd = true;
    else has_even = true;
  }
  if (has_even && has_odd) return ParityClass::mixed;
  return has_odd ? ParityClass::odd : ParityClass::even;
}

std::string to_string(const Element& e, const AlgebraDef& alg) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e.terms()) {
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << ' ';
    os << alg.symbol(i).label();
    first = false;
  }
  return os.str();
}

namespace {

std::string entry_string(const TableEntry& e, const AlgebraDef& alg) {
  return e.out_of_window ? std::string("?") : to_string(e.value, alg);
}

}  // namespace

std::vector<std::string> table_diff(const AlgebraDef& a, const AlgebraDef& b) {
  std::vector<std::string> diffs;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.symbol(i).label());
    if (!j) {
      diffs.push_back("symbol " + a.symbol(i).label() + " missing from " + b.name());
      continue;
    }
    if (b.parity(*j) != a.parity(i)) diffs.push_back("symbol " + a.symbol(i).label() + " has different parity");
    to_b[i] = *j;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!a.find(b.symbol(j).label())) diffs.push_back("symbol " + b.symbol(j).label() + " missing from " + a.name());
  }
  if (!diffs.empty()) return diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const TableEntry& ea = a.entry(i, j);
      const TableEntry& eb = b.entry(to_b[i], to_b[j]);
      bool same = ea.out_of_window == eb.out_of_window;
      if (same && !ea.out_of_window) {
        Element mapped;
        for (const auto& [k, c] : ea.value.terms()) mapped.add_term(to_b[k], c);
        same = mapped == eb.value;
      }
      if (!same) {
        diffs.push_back(a.symbol(i).label() + " * " + a.symbol(j).label() + ": " + entry_string(ea, a) + " vs " +
                        entry_string(eb, b));
      }
    }
  }
  return diffs;
}

AlgebraDef restrict_to(const AlgebraDef& alg, const std::function<bool(const BasisSymbol&)>& keep, std::string name) {
  std::vector<std::size_t> kept;
  std::vector<std::optional<std::size_t>> remap(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (keep(alg.symbol(i))) {
      remap[i] = kept.size();
      kept.push_back(i);
    }
  }
  std::vector<BasisSymbol> basis;
  for (auto i : kept) basis.push_back(alg.symbol(i));
  std::vector<TableEntry> table;
  table.reserve(kept.size() * kept.size());
  for (auto i : kept) {
    for (auto j : kept) {
      const TableEntry& e = alg.entry(i, j);
      if (e.out_of_window) {
        table.push_back(TableEntry::outside());
        continue;
      }
      Element v;
      for (const auto& [k, c] : e.value.terms()) {
        if (!remap[k]) throw ConsistencyError("restriction of " + alg.name() + " is not closed");
        v.add_term(*remap[k], c);
      }
      table.push_back(TableEntry{false, std::move(v)});
    }
  }
  return AlgebraDef(std::move(name), std::move(basis), std::move(table), alg.hint(), alg.window());
}

// ---------------------------------------------------------------------------

IndexedFamily ak1_family() {
  IndexedFamily fam;
  fam.name = "ak1";
  fam.species = {{"e", Parity::even, false}, {"a", Parity::odd, true}};
  fam.hint = Profile::antialgebra;
  fam.rule = [](std::size_t s1, int i1, std::size_t s2, int i2) -> std::vector<FamilyTerm> {
    if (s1 == 0 && s2 == 0) return {{0, i1 + i2, 1}};
    if (s1 != s2) return {{1, i1 + i2, make_rational(1, 2)}};
    // a_i a_j = 1/2 (i - j) e_{i+j}; doubled indices give (i2 difference)/4.
    return {{0, i1 + i2, make_rational(i1 - i2, 4)}};
  };
  return fam;
}

AlgebraDef materialize_window(const IndexedFamily& fam, const WindowSpec& w) {
  struct Slot {
    std::size_t species;
    int index;
  };
  std::vector<Slot> slots;
  std::vector<BasisSymbol> basis;
  const int top = w.max_doubled();
  for (std::size_t s = 0; s < fam.species.size(); ++s) {
    const IndexedSpecies& sp = fam.species[s];
    for (int k = -top; k <= top; ++k) {
      const bool half = (k % 2) != 0;
      if (half != sp.half_integer) continue;
      slots.push_back({s, k});
      basis.push_back(BasisSymbol{sp.name, sp.parity, k});
    }
  }
  auto locate = [&](std::size_t species, int k) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].species == species && slots[i].index == k) return i;
    return std::nullopt;
  };
  const std::size_t n = slots.size();
  std::vector<TableEntry> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TableEntry& cell = table[i * n + j];
      for (const FamilyTerm& t : fam.rule(slots[i].species, slots[i].index, slots[j].species, slots[j].index)) {
        if (sgn(t.coeff) == 0) continue;
        auto k = w.contains(t.doubled_index) ? locate(t.species, t.doubled_index) : std::nullopt;
        if (!k) {
          cell = TableEntry::outside();
          break;
        }
        cell.value.add_term(*k, t.coeff);
      }
    }
  }
  return AlgebraDef(fam.name, std::move(basis), std::move(table), fam.hint, w);
}

}  // namespace antialg
