#include "polyslice/linalg.hpp"

#include <algorithm>
#include <string>

#include "polyslice/errors.hpp"

namespace polyslice {
namespace {

void require_same_size(const Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(lhs.size()) + " vs " +
                            std::to_string(rhs.size()));
  }
}

struct Echelon {
  std::vector<std::vector<Scalar>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;        // pivot column of rows[i]
};

// Gauss-Jordan elimination, first nonzero pivot, rows scanned in order.
Echelon reduce(std::vector<std::vector<Scalar>> m, std::size_t cols) {
  Echelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t p = lead;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[lead], m[p]);
    const Scalar inv = 1 / m[lead][c];
    for (auto& v : m[lead]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == lead || sgn(m[i][c]) == 0) continue;
      const Scalar factor = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= factor * m[lead][j];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Scalar>> to_rows(const Matrix& a) {
  std::vector<std::vector<Scalar>> m;
  m.reserve(a.rows());
  for (const auto& r : a.row_list()) m.push_back(r.coords());
  return m;
}

}  // namespace

Vec Vec::unit(std::size_t dim, std::size_t index) {
  Vec v(dim);
  v[index] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Vec& Vec::operator/=(const Scalar& divisor) {
  if (sgn(divisor) == 0) throw InvalidArgument("division of a vector by zero");
  for (auto& c : coords_) c /= divisor;
  return *this;
}

Vec Vec::operator-() const {
  Vec out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator<(const Vec& lhs, const Vec& rhs) {
  return std::lexicographical_compare(lhs.coords_.begin(), lhs.coords_.end(), rhs.coords_.begin(),
                                      rhs.coords_.end());
}

Scalar dot(const Vec& lhs, const Vec& rhs) {
  require_same_size(lhs, rhs);
  Scalar acc = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (sgn(lhs[i]) != 0 && sgn(rhs[i]) != 0) acc += lhs[i] * rhs[i];
  }
  return acc;
}

Matrix::Matrix(std::size_t cols, std::vector<Vec> rows) : cols_(cols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) append_row(std::move(r));
}

Matrix::Matrix(std::initializer_list<Vec> rows) : cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) append_row(r);
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.append_row(Vec::unit(dim, i));
  return m;
}

void Matrix::append_row(Vec row) {
  if (row.size() != cols_) {
    throw DimensionMismatch("matrix row has length " + std::to_string(row.size()) + ", expected " +
                            std::to_string(cols_));
  }
  rows_.push_back(std::move(row));
}

Vec Matrix::operator*(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], x);
  return out;
}

Vec solve_linear_system(const Matrix& a, const Vec& b) {
  const std::size_t d = a.cols();
  if (a.rows() != d) throw DimensionMismatch("solve_linear_system: matrix is not square");
  if (b.size() != d) throw DimensionMismatch("solve_linear_system: right-hand side length mismatch");
  auto m = to_rows(a);
  for (std::size_t i = 0; i < d; ++i) m[i].push_back(b[i]);
  const Echelon e = reduce(std::move(m), d);
  if (e.pivots.size() < d) throw SingularError("singular system: rank " + std::to_string(e.pivots.size()));
  Vec x(d);
  for (std::size_t i = 0; i < d; ++i) x[e.pivots[i]] = e.rows[i][d];
  return x;
}

std::size_t rank(const Matrix& a) { return reduce(to_rows(a), a.cols()).pivots.size(); }

std::vector<Vec> nullspace_basis(const Matrix& a) {
  const std::size_t d = a.cols();
  const Echelon e = reduce(to_rows(a), d);
  std::vector<bool> is_pivot(d, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace polyslice
