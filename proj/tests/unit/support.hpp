#pragma once

#include "antialg/superalg.hpp"

#include <random>
#include <string>

namespace support {

inline std::string data(const std::string& name) { return std::string(ANTIALG_TEST_DATA) + "/" + name; }

inline antialg::Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return antialg::make_rational(num(rng), den(rng));
}

/// Random element supported on basis positions of parity p (any parity when
/// `any` is set).
inline antialg::Element random_element(const antialg::AlgebraDef& alg, std::mt19937_64& rng,
                                       antialg::Parity p = antialg::Parity::even, bool any = true) {
  antialg::Element e;
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (any || alg.parity(i) == p) e.add_term(i, small_rational(rng));
  return e;
}

}  // namespace support
