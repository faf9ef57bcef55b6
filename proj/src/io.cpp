#include "antialg/io.hpp"

#include "antialg/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace antialg {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  int depth = 0;
  for (char c : s) {
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      if (--depth < 0) return false;
    } else if (depth == 0 && !(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) {
      return false;
    } else if (depth > 0 && !(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      return false;
    }
  }
  return depth == 0;
}

BasisSymbol make_symbol(const std::string& token, Parity p, std::size_t line) {
  if (!valid_symbol(token)) throw InputError("invalid symbol '" + token + "'", line);
  if (auto split = split_indexed_label(token)) return BasisSymbol{split->first, p, split->second};
  // Composite names such as a[1/2].a[3/2] stay unindexed.
  return BasisSymbol{token, p, std::nullopt};
}

struct ParsedEntry {
  TableEntry entry;
  std::size_t line;
};

Rational mirror_sign(Profile hint, Parity a, Parity b) {
  const int k = koszul(a, b);
  return hint == Profile::lie_super ? Rational(-k) : Rational(k);
}

bool completes_mirror(Profile hint) { return hint != Profile::none; }

TableEntry mirror_of(const AlgebraDef& alg, std::size_t i, std::size_t j) {
  TableEntry e = alg.entry(i, j);
  if (!e.out_of_window) e.value *= mirror_sign(alg.hint(), alg.parity(i), alg.parity(j));
  return e;
}

bool respects_mirror(const AlgebraDef& alg) {
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(alg.entry(i, j) == mirror_of(alg, j, i))) return false;
  return true;
}

}  // namespace

AlgebraDef parse_algebra_file(std::string_view text) {
  std::string name;
  Profile hint = Profile::none;
  std::optional<WindowSpec> window;
  std::vector<BasisSymbol> basis;
  std::map<std::string, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, ParsedEntry> given;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  bool explicit_table = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    auto tok = tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "algebra") {
      if (have_header) throw InputError("second algebra header", lineno);
      if (tok.size() != 2 && tok.size() != 4) throw InputError("expected 'algebra NAME [profile P]'", lineno);
      name = tok[1];
      if (tok.size() == 4) {
        if (tok[2] != "profile") throw InputError("expected 'profile' after the algebra name", lineno);
        auto p = parse_profile(tok[3]);
        if (!p) throw InputError("unknown profile '" + tok[3] + "'", lineno);
        hint = *p;
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("file must start with 'algebra NAME'", lineno);

    if (tok[0] == "window") {
      if (tok.size() != 3) throw InputError("expected 'window BOUND GUARD'", lineno);
      if (window) throw InputError("duplicate window line", lineno);
      try {
        window = WindowSpec(parse_rational(tok[1]), parse_rational(tok[2]));
      } catch (const InputError& e) {
        throw InputError(e.what(), lineno);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what(), lineno);
      }
      continue;
    }
    if (tok[0] == "explicit") {
      if (tok.size() != 1) throw InputError("'explicit' takes no arguments", lineno);
      explicit_table = true;
      continue;
    }
    if (tok[0] == "even" || tok[0] == "odd") {
      if (!given.empty()) throw InputError("basis declarations must precede products", lineno);
      const Parity p = tok[0] == "odd" ? Parity::odd : Parity::even;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        BasisSymbol s = make_symbol(tok[k], p, lineno);
        if (!index.emplace(s.label(), basis.size()).second) throw InputError("duplicate symbol '" + tok[k] + "'", lineno);
        basis.push_back(std::move(s));
      }
      continue;
    }

    // x * y = value
    std::string spaced;
    for (char c : line) {
      if (c == '*' || c == '=') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    tok = tokens(spaced);
    if (tok.size() < 5 || tok[1] != "*" || tok[3] != "=")
      throw InputError("expected 'x * y = value', got '" + line + "'", lineno);
    auto lookup = [&](const std::string& s) {
      auto it = index.find(s);
      if (it == index.end()) throw InputError("undeclared symbol '" + s + "'", lineno);
      return it->second;
    };
    const std::size_t x = lookup(tok[0]), y = lookup(tok[2]);
    TableEntry entry;
    if (tok.size() == 5 && tok[4] == "?") {
      entry = TableEntry::outside();
    } else if (tok.size() == 5 && tok[4] == "0") {
      entry = TableEntry{};
    } else {
      Rational sign = 1;
      std::optional<Rational> coeff;
      bool expect_term = true;
      for (std::size_t k = 4; k < tok.size(); ++k) {
        std::string t = tok[k];
        if (t == "+" || t == "-") {
          if (coeff) throw InputError("coefficient without symbol", lineno);
          if (t == "-") sign = -sign;
          expect_term = true;
          continue;
        }
        if (!expect_term) throw InputError("missing '+' or '-' before '" + t + "'", lineno);
        if (std::isdigit(static_cast<unsigned char>(t[0])) != 0 ||
            ((t[0] == '-' || t[0] == '+') && t.size() > 1 && std::isdigit(static_cast<unsigned char>(t[1])) != 0)) {
          if (coeff) throw InputError("two coefficients in a row", lineno);
          try {
            coeff = parse_rational(t);
          } catch (const InputError& e) {
            throw InputError(e.what(), lineno);
          }
          continue;
        }
        if (t[0] == '-') {
          sign = -sign;
          t.erase(0, 1);
        }
        const std::size_t s = lookup(t);
        entry.value.add_term(s, sign * coeff.value_or(Rational(1)));
        sign = 1;
        coeff.reset();
        expect_term = false;
      }
      if (coeff || expect_term) throw InputError("incomplete product value", lineno);
    }
    if (!entry.out_of_window) {
      const Parity want = basis[x].parity + basis[y].parity;
      for (const auto& [k, c] : entry.value.terms())
        if (basis[k].parity != want)
          throw InputError("product " + tok[0] + " * " + tok[2] + " must be " + std::string(to_string(want)) + " but " +
                               basis[k].label() + " is " + std::string(to_string(basis[k].parity)),
                           lineno);
    }
    if (!given.emplace(std::make_pair(x, y), ParsedEntry{entry, lineno}).second)
      throw InputError("duplicate product " + tok[0] + " * " + tok[2], lineno);
  }
  if (!have_header) throw InputError("empty algebra file");

  const std::size_t n = basis.size();
  std::vector<TableEntry> table(n * n);
  std::vector<bool> set(n * n, false);
  for (const auto& [xy, pe] : given) {
    table[xy.first * n + xy.second] = pe.entry;
    set[xy.first * n + xy.second] = true;
  }
  if (completes_mirror(hint) && !explicit_table) {
    for (const auto& [xy, pe] : given) {
      const auto [x, y] = xy;
      TableEntry mirrored = pe.entry;
      if (!mirrored.out_of_window) mirrored.value *= mirror_sign(hint, basis[x].parity, basis[y].parity);
      const std::size_t m = y * n + x;
      if (!set[m]) {
        table[m] = mirrored;
        set[m] = true;
      } else if (!(table[m] == mirrored)) {
        const std::size_t at = given.count({y, x}) ? std::max(pe.line, given.at({y, x}).line) : pe.line;
        throw InputError("product " + basis[y].label() + " * " + basis[x].label() + " conflicts with the " +
                             std::string(to_string(hint)) + " symmetry of " + basis[x].label() + " * " +
                             basis[y].label(),
                         at);
      }
    }
  }
  return AlgebraDef(name, std::move(basis), std::move(table), hint, window);
}

std::string emit_algebra_file(const AlgebraDef& alg) {
  std::ostringstream out;
  out << "algebra " << (alg.name().empty() ? "unnamed" : alg.name());
  if (alg.hint() != Profile::none) out << " profile " << to_string(alg.hint());
  out << "\n";
  if (alg.window()) out << "window " << to_string(alg.window()->bound) << " " << to_string(alg.window()->guard) << "\n";
  for (std::size_t i = 0; i < alg.size();) {
    const Parity p = alg.parity(i);
    out << to_string(p);
    for (; i < alg.size() && alg.parity(i) == p; ++i) out << " " << alg.symbol(i).label();
    out << "\n";
  }
  const bool mirrored = completes_mirror(alg.hint()) && respects_mirror(alg);
  if (completes_mirror(alg.hint()) && !mirrored) out << "explicit\n";
  const std::size_t n = alg.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TableEntry& e = alg.entry(i, j);
      if (mirrored && j < i) continue;
      if (!e.out_of_window && e.value.is_zero()) continue;
      out << alg.symbol(i).label() << " * " << alg.symbol(j).label() << " = "
          << (e.out_of_window ? std::string("?") : to_string(e.value, alg)) << "\n";
    }
  return out.str();
}

RepDef parse_rep_file(std::string_view text, const AlgebraDef& alg) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> dims;
  std::vector<std::optional<Matrix>> images(alg.size());

  std::optional<std::size_t> current;
  std::size_t current_line = 0;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tok = tokens(strip_comment(raw));
    if (tok.empty()) continue;
    if (current) {
      if (tok.size() == 1 && tok[0] == "end") {
        const std::size_t n = dims->first + dims->second;
        if (rows.size() != n)
          throw InputError("image of " + alg.symbol(*current).label() + " has " + std::to_string(rows.size()) +
                               " rows, expected " + std::to_string(n),
                           lineno);
        images[*current] = Matrix::from_rows(rows);
        if (!fits_parity(*images[*current], dims->first, alg.parity(*current)))
          throw InputError("image of " + alg.symbol(*current).label() + " is not " +
                               std::string(to_string(alg.parity(*current))),
                           current_line);
        current.reset();
        rows.clear();
        continue;
      }
      const std::size_t n = dims->first + dims->second;
      if (tok.size() != n) throw InputError("matrix row needs " + std::to_string(n) + " entries", lineno);
      std::vector<Rational> row;
      for (const auto& t : tok) {
        try {
          row.push_back(parse_rational(t));
        } catch (const InputError& e) {
          throw InputError(e.what(), lineno);
        }
      }
      rows.push_back(std::move(row));
      continue;
    }
    if (tok[0] == "rep") continue;
    if (tok[0] == "dims") {
      if (dims) throw InputError("duplicate dims line", lineno);
      if (tok.size() != 3) throw InputError("expected 'dims D0 D1'", lineno);
      try {
        dims = std::make_pair(std::stoul(tok[1]), std::stoul(tok[2]));
      } catch (const std::exception&) {
        throw InputError("malformed dimensions", lineno);
      }
      continue;
    }
    if (tok[0] == "image") {
      if (!dims) throw InputError("'dims' must precede images", lineno);
      if (tok.size() != 2) throw InputError("expected 'image SYMBOL'", lineno);
      auto k = alg.find(tok[1]);
      if (!k) throw InputError("undeclared symbol '" + tok[1] + "'", lineno);
      if (images[*k]) throw InputError("duplicate image for '" + tok[1] + "'", lineno);
      current = *k;
      current_line = lineno;
      continue;
    }
    throw InputError("unexpected line '" + raw + "'", lineno);
  }
  if (current) throw InputError("missing 'end' for image of " + alg.symbol(*current).label(), lineno);
  if (!dims) throw InputError("representation file has no 'dims' line");

  std::vector<GradedMatrix> out;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (images[i]) {
      out.emplace_back(dims->first, dims->second, alg.parity(i), *images[i]);
    } else {
      out.push_back(GradedMatrix::zero(dims->first, dims->second, alg.parity(i)));
    }
  }
  return RepDef(alg, dims->first, dims->second, std::move(out));
}

std::string emit_rep_file(const RepDef& rep) {
  std::ostringstream out;
  out << "rep " << rep.algebra().name() << "\n";
  out << "dims " << rep.d0() << " " << rep.d1() << "\n";
  for (std::size_t i = 0; i < rep.images().size(); ++i) {
    const GradedMatrix& g = rep.image(i);
    if (g.is_zero()) continue;
    out << "image " << rep.algebra().symbol(i).label() << "\n";
    for (std::size_t r = 0; r < g.dim(); ++r) {
      for (std::size_t c = 0; c < g.dim(); ++c) out << (c ? " " : "") << to_string(g.matrix()(r, c));
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace antialg
