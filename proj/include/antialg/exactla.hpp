#pragma once

// Exact rational scalars and dense matrices over them, with the row-reduction
// primitives used throughout the library.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antialg {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses `p`, `-p` or `p/q` (no decimals, no whitespace inside).
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Matrix whose columns are the given vectors (all the same length).
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Row-major flattening, used to compare operators as vectors.
  const Vector& flat() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column of rref(m); the vector
/// for free column f has a 1 in position f.
std::vector<Vector> nullspace(const Matrix& m);

/// Coordinates c with sum c_i basis_i == v, or nullopt when v is not in the
/// span. When the basis is dependent the coordinates on redundant vectors are 0.
std::optional<Vector> coords_in_span(const Vector& v, std::span<const Vector> basis);

bool is_zero(const Vector& v);

}  // namespace antialg
