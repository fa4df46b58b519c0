#include "polyslice/lp.hpp"

#include <string>

#include "polyslice/errors.hpp"

namespace polyslice {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense tableau for  min sum(artificials)  s.t.  [A | I_art] z = b, z >= 0.
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b, std::size_t n)
      : n_(n), rows_(std::move(a)), rhs_(std::move(b)), basis_(rows_.size(), kNone) {
    const std::size_t m = rows_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(rhs_[i]) < 0) {
        rhs_[i] = -rhs_[i];
        for (auto& v : rows_[i]) v = -v;
      }
    }
    // Reuse any identity column as the starting basic variable for its row.
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t hit = kNone;
      bool unit = true;
      for (std::size_t i = 0; i < m && unit; ++i) {
        const int s = sgn(rows_[i][j]);
        if (s == 0) continue;
        if (hit != kNone || rows_[i][j] != 1) unit = false;
        hit = i;
      }
      if (unit && hit != kNone && basis_[hit] == kNone) basis_[hit] = j;
    }
    total_ = n_;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] != kNone) continue;
      for (auto& r : rows_) r.emplace_back(0);
      rows_[i][total_] = 1;
      basis_[i] = total_++;
    }
    for (auto& r : rows_) r.resize(total_);
    // Reduced costs of the phase-one objective, expressed in the nonbasics.
    cost_.assign(total_, Scalar(0));
    objective_ = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < total_; ++j) cost_[j] -= rows_[i][j];
      cost_[basis_[i]] += 1;
      objective_ += rhs_[i];
    }
  }

  bool run() {
    while (true) {
      // Bland: lowest-index entering column with negative reduced cost.
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < total_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) break;
      std::size_t leave = kNone;
      Scalar best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Scalar ratio = rhs_[i] / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      // The phase-one objective is bounded below by zero.
      if (leave == kNone) break;
      pivot(leave, enter);
    }
    return sgn(objective_) == 0;
  }

  std::vector<Scalar> solution() const {
    std::vector<Scalar> z(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) z[basis_[i]] = rhs_[i];
    }
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Scalar f = rows_[i][c];
      for (std::size_t j = 0; j < total_; ++j) {
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(cost_[c]) != 0) {
      const Scalar f = cost_[c];
      for (std::size_t j = 0; j < total_; ++j) {
        if (sgn(rows_[r][j]) != 0) cost_[j] -= f * rows_[r][j];
      }
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t total_ = 0;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Scalar> cost_;
  Scalar objective_;
};

}  // namespace

HalfSpace::HalfSpace(Vec normal, Scalar offset) : a(std::move(normal)), b(std::move(offset)) {
  if (a.is_zero()) throw InvalidArgument("halfspace normal must be nonzero");
}

std::optional<Vec> nonnegative_solution(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("nonnegative_solution: right-hand side length mismatch");
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(a.rows());
  for (const auto& r : a.row_list()) rows.push_back(r.coords());
  PhaseOne lp(std::move(rows), b.coords(), a.cols());
  if (!lp.run()) return std::nullopt;
  return Vec(lp.solution());
}

LpFeasibility lp_feasible(std::size_t dim, std::span<const HalfSpace> constraints,
                          std::span<const LinearEquality> equalities) {
  // Free x = u - v; each inequality gets its own slack column.
  const std::size_t m_in = constraints.size();
  const std::size_t cols = 2 * dim + m_in;
  Matrix a(cols);
  std::vector<Scalar> rhs;
  auto split_row = [&](const Vec& normal) {
    if (normal.size() != dim) {
      throw DimensionMismatch("lp_feasible: constraint of length " + std::to_string(normal.size()) +
                              ", expected " + std::to_string(dim));
    }
    Vec row(cols);
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = normal[j];
      row[dim + j] = -normal[j];
    }
    return row;
  };
  for (std::size_t i = 0; i < m_in; ++i) {
    Vec row = split_row(constraints[i].a);
    row[2 * dim + i] = 1;
    a.append_row(std::move(row));
    rhs.push_back(constraints[i].b);
  }
  for (const auto& eq : equalities) {
    a.append_row(split_row(eq.a));
    rhs.push_back(eq.b);
  }
  auto z = nonnegative_solution(a, Vec(std::move(rhs)));
  if (!z) return {};
  Vec x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = (*z)[j] - (*z)[dim + j];
  return {true, std::move(x)};
}

bool in_convex_hull(std::span<const Vec> points, const Vec& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  const std::size_t k = points.size();
  // Rows: one per coordinate, then sum(lambda) = 1.
  Matrix a(k);
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (points[j].size() != d) throw DimensionMismatch("in_convex_hull: point length mismatch");
      row[j] = points[j][i];
    }
    a.append_row(std::move(row));
  }
  Vec ones(k);
  for (std::size_t j = 0; j < k; ++j) ones[j] = 1;
  a.append_row(std::move(ones));
  Vec b(d + 1);
  for (std::size_t i = 0; i < d; ++i) b[i] = p[i];
  b[d] = 1;
  return nonnegative_solution(a, b).has_value();
}

}  // namespace polyslice
