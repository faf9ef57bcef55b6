#pragma once

// Parser for sums of monomials such as `3/2 p^2 q^-1 t - z + 1`, shared by
// the superfunction and density literal syntaxes.

#include "antialg/errors.hpp"
#include "antialg/exactla.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace antialg::detail {

struct MonomialTerm {
  Rational coeff;
  std::map<char, int> exponents;
};

inline std::vector<MonomialTerm> parse_monomial_sum(std::string_view text, std::string_view vars) {
  std::vector<std::string> pieces;
  std::vector<int> signs;
  std::string cur;
  int sign = 1;
  bool pending = false;  // an operator has been read since the last term
  char prev = '\0';
  auto blank = [](const std::string& t) { return t.find_first_not_of(" \t") == std::string::npos; };
  for (char ch : text) {
    if ((ch == '+' || ch == '-') && prev != '^') {
      if (!blank(cur)) {
        pieces.push_back(cur);
        signs.push_back(sign);
        sign = 1;
      }
      cur.clear();
      if (ch == '-') sign = -sign;
      pending = true;
    } else {
      cur += ch == '*' ? ' ' : ch;
      if (ch != ' ' && ch != '\t') pending = false;
    }
    if (ch != ' ' && ch != '\t') prev = ch;
  }
  if (!blank(cur)) {
    pieces.push_back(cur);
    signs.push_back(sign);
  } else if (pieces.empty() || pending) {
    throw InputError("empty term in '" + std::string(text) + "'");
  }

  std::vector<MonomialTerm> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::istringstream in(pieces[k]);
    std::string tok;
    MonomialTerm term{Rational(signs[k]), {}};
    bool first = true;
    while (in >> tok) {
      if (first && (std::isdigit(static_cast<unsigned char>(tok[0])) != 0)) {
        term.coeff *= parse_rational(tok);
      } else {
        const char v = tok[0];
        if (vars.find(v) == std::string_view::npos)
          throw InputError("unknown variable '" + tok + "' (expected one of " + std::string(vars) + ")");
        int e = 1;
        if (tok.size() > 1) {
          if (tok[1] != '^' || tok.size() == 2) throw InputError("malformed factor '" + tok + "'");
          std::size_t used = 0;
          try {
            e = std::stoi(tok.substr(2), &used);
          } catch (const std::exception&) {
            throw InputError("malformed exponent in '" + tok + "'");
          }
          if (used != tok.size() - 2) throw InputError("malformed exponent in '" + tok + "'");
        }
        term.exponents[v] += e;
      }
      first = false;
    }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace antialg::detail
