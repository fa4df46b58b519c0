#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polyslice/scalar.hpp"

namespace polyslice {

/// Fixed-length vector of exact rationals. Arithmetic between vectors of
/// different length throws DimensionMismatch.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  Vec(std::initializer_list<Scalar> coords) : coords_(coords) {}
  explicit Vec(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static Vec unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  bool is_zero() const;

  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Scalar>& coords() const { return coords_; }

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Scalar& factor);
  Vec& operator/=(const Scalar& divisor);

  friend Vec operator+(Vec lhs, const Vec& rhs) { return lhs += rhs; }
  friend Vec operator-(Vec lhs, const Vec& rhs) { return lhs -= rhs; }
  friend Vec operator*(Vec lhs, const Scalar& factor) { return lhs *= factor; }
  friend Vec operator*(const Scalar& factor, Vec rhs) { return rhs *= factor; }
  friend Vec operator/(Vec lhs, const Scalar& divisor) { return lhs /= divisor; }
  Vec operator-() const;

  friend bool operator==(const Vec& lhs, const Vec& rhs) { return lhs.coords_ == rhs.coords_; }
  /// Lexicographic order; shorter vectors sort first.
  friend bool operator<(const Vec& lhs, const Vec& rhs);

 private:
  std::vector<Scalar> coords_;
};

Scalar dot(const Vec& lhs, const Vec& rhs);

/// Dense rectangular matrix stored by rows. A matrix with no rows still
/// knows its column count.
class Matrix {
 public:
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::size_t cols, std::vector<Vec> rows);
  Matrix(std::initializer_list<Vec> rows);

  static Matrix identity(std::size_t dim);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Vec>& row_list() const { return rows_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  void append_row(Vec row);

  Vec operator*(const Vec& x) const;

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;
};

/// Exact solution of a square system; throws SingularError when det(A) = 0.
Vec solve_linear_system(const Matrix& a, const Vec& b);

/// Rank via exact elimination.
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}: cols - rank vectors, one per free column of the
/// reduced row echelon form, with a 1 in that free column.
std::vector<Vec> nullspace_basis(const Matrix& a);

}  // namespace polyslice
