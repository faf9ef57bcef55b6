#pragma once

// Brute-force representation search, written against plain nested vectors so
// it shares no arithmetic with the library's GradedMatrix.
//
// Odd images range over odd block matrices with entries in {-1, 0, 1}. An even
// basis vector x that is a multiple c x of some odd product y_i y_j gets
// rho(x) = (1/c) 1/2 (Y_i Y_j - Y_j Y_i); other even images are zero.

#include "antialg/superalg.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using antialg::Rational;
using Mat = std::vector<std::vector<Rational>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Mat lin(const Rational& s, const Mat& a, const Rational& t, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = s * a[i][j] + t * b[i][j];
  return c;
}

inline bool is_zero(const Mat& a) {
  for (const auto& r : a)
    for (const auto& x : r)
      if (x != 0) return false;
  return true;
}

struct Candidate {
  std::size_t d0 = 0, d1 = 0;
  std::vector<Mat> images;  ///< indexed like the algebra basis
  bool is_rep = false;
};

/// 1/2 (XY + s YX) with s = -1 for two odd factors, +1 otherwise.
inline Mat anti(const Mat& x, const Mat& y, bool both_odd) {
  const Rational h(1, 2);
  return lin(h, mul(x, y), both_odd ? -h : h, mul(y, x));
}

/// Both representation conditions on every basis pair, evaluated directly.
inline bool satisfies(const antialg::AlgebraDef& alg, const std::vector<Mat>& img, std::size_t n) {
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = 0; j < alg.size(); ++j) {
      const auto& cell = alg.entry(i, j);
      if (cell.out_of_window) continue;
      Mat lhs = zeros(n);
      for (const auto& [k, c] : cell.value.terms()) lhs = lin(1, lhs, c, img[k]);
      const bool oi = antialg::is_odd(alg.parity(i)), oj = antialg::is_odd(alg.parity(j));
      if (lhs != anti(img[i], img[j], oi && oj)) return false;
      if (!oi && !oj && lhs != mul(img[i], img[j])) return false;
    }
  return true;
}

/// Calls `visit` on every candidate for dimensions d0|d1.
inline void enumerate(const antialg::AlgebraDef& alg, std::size_t d0, std::size_t d1,
                      const std::function<void(const Candidate&)>& visit) {
  const std::size_t n = d0 + d1;
  std::vector<std::size_t> odd, even;
  for (std::size_t i = 0; i < alg.size(); ++i) (antialg::is_odd(alg.parity(i)) ? odd : even).push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> slots;  // odd block positions
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((r < d0) != (c < d0)) slots.emplace_back(r, c);

  // For each even x: an odd pair (i, j) and c with y_i y_j = c x.
  struct Source {
    std::size_t x, i, j;
    Rational c;
  };
  std::vector<Source> sources;
  for (std::size_t x : even) {
    bool found = false;
    for (std::size_t i : odd) {
      for (std::size_t j : odd) {
        const auto& cell = alg.entry(i, j);
        if (cell.out_of_window || cell.value.terms().size() != 1) continue;
        const auto& [k, c] = *cell.value.terms().begin();
        if (k != x) continue;
        sources.push_back({x, i, j, c});
        found = true;
        break;
      }
      if (found) break;
    }
  }

  const std::size_t free = slots.size() * odd.size();
  std::vector<int> digits(free, -1);
  for (;;) {
    Candidate cand{d0, d1, std::vector<Mat>(alg.size(), zeros(n)), false};
    for (std::size_t o = 0; o < odd.size(); ++o)
      for (std::size_t s = 0; s < slots.size(); ++s)
        cand.images[odd[o]][slots[s].first][slots[s].second] = digits[o * slots.size() + s];
    for (const auto& src : sources)
      cand.images[src.x] = lin(Rational(1) / src.c, anti(cand.images[src.i], cand.images[src.j], true), 0, zeros(n));
    cand.is_rep = satisfies(alg, cand.images, n);
    visit(cand);

    std::size_t k = 0;
    while (k < free && digits[k] == 1) digits[k++] = -1;
    if (k == free) break;
    ++digits[k];
  }
}

/// Every candidate that is a representation, over all d0 + d1 <= max_dim
/// with d0, d1 >= 1.
inline std::vector<Candidate> find_reps(const antialg::AlgebraDef& alg, std::size_t max_dim) {
  std::vector<Candidate> out;
  for (std::size_t n = 2; n <= max_dim; ++n)
    for (std::size_t d0 = 1; d0 < n; ++d0)
      enumerate(alg, d0, n - d0, [&](const Candidate& c) {
        if (c.is_rep) out.push_back(c);
      });
  return out;
}

}  // namespace oracle
