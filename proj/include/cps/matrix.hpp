#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cps/rational.hpp"

namespace cps {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense matrix of exact rationals, row-major. Equality is entry-wise.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Vec operator*(const Vec& v) const;  // column action Mv
  friend Matrix operator*(const Rational& c, const Matrix& m);
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Inverse via Gauss-Jordan. Throws std::invalid_argument if singular.
  Matrix inverse() const;
  bool is_invertible() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Canonical reduced row-echelon form and rank.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Solves A x = b exactly (any consistent system; returns one solution with
/// free variables set to zero). Throws std::invalid_argument if inconsistent.
Vec solve(const Matrix& a, const Vec& b);

}  // namespace cps
