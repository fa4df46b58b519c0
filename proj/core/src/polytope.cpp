#include "polyslice/polytope.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "polyslice/errors.hpp"

namespace polyslice {
namespace {

void sort_unique(std::vector<Vec>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// Depth-first walk over increasing index subsets. The chosen rows are kept in
// row echelon form, so a subset whose normals are already dependent is pruned
// together with all of its supersets.
class SubsetWalker {
 public:
  SubsetWalker(const std::vector<HalfSpace>& hs, std::size_t dim) : hs_(hs), d_(dim) {
    rows_.reserve(dim);
    pivots_.reserve(dim);
    chosen_.reserve(dim);
  }

  void run_from(std::size_t first) {
    if (!push(first)) return;
    descend(first + 1);
  }

  std::vector<Vec> take() { return std::move(found_); }

 private:
  bool push(std::size_t index) {
    std::vector<Scalar> row(hs_[index].a.coords());
    row.push_back(hs_[index].b);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (sgn(row[p]) == 0) continue;
      const Scalar f = row[p];
      for (std::size_t j = 0; j <= d_; ++j) {
        if (sgn(rows_[k][j]) != 0) row[j] -= f * rows_[k][j];
      }
    }
    std::size_t pivot = 0;
    while (pivot < d_ && sgn(row[pivot]) == 0) ++pivot;
    if (pivot == d_) return false;
    const Scalar inv = 1 / row[pivot];
    for (auto& v : row) {
      if (sgn(v) != 0) v *= inv;
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    chosen_.push_back(index);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
    chosen_.pop_back();
  }

  void descend(std::size_t start) {
    const std::size_t depth = rows_.size();
    if (depth == d_) {
      leaf();
      return;
    }
    const std::size_t m = hs_.size();
    for (std::size_t i = start; i + (d_ - depth) <= m; ++i) {
      if (!push(i)) continue;
      descend(i + 1);
      pop();
    }
  }

  void leaf() {
    Vec x(d_);
    for (std::size_t k = d_; k-- > 0;) {
      Scalar v = rows_[k][d_];
      for (std::size_t j = 0; j < d_; ++j) {
        if (j != pivots_[k] && sgn(rows_[k][j]) != 0) v -= rows_[k][j] * x[j];
      }
      x[pivots_[k]] = std::move(v);
    }
    std::size_t c = 0;
    for (std::size_t i = 0; i < hs_.size(); ++i) {
      if (c < chosen_.size() && chosen_[c] == i) {
        ++c;
        continue;
      }
      if (!hs_[i].satisfied_by(x)) return;
    }
    found_.push_back(std::move(x));
  }

  const std::vector<HalfSpace>& hs_;
  std::size_t d_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> chosen_;
  std::vector<Vec> found_;
};

std::size_t affine_dimension(const std::vector<Vec>& points, std::size_t dim) {
  if (points.empty()) return 0;
  Matrix diffs(dim);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.append_row(points[i] - points[0]);
  return rank(diffs);
}

}  // namespace

HPolytope::HPolytope(std::size_t dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ == 0) throw InvalidArgument("polytope dimension must be positive");
  for (const auto& h : halfspaces_) {
    if (h.a.size() != dim_) {
      throw DimensionMismatch("halfspace normal has length " + std::to_string(h.a.size()) + ", expected " +
                              std::to_string(dim_));
    }
  }
}

VPolytope::VPolytope(std::size_t dim, std::vector<Vec> vertices) : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ == 0) throw InvalidArgument("polytope dimension must be positive");
  for (const auto& v : vertices_) {
    if (v.size() != dim_) throw DimensionMismatch("vertex length does not match polytope dimension");
  }
  sort_unique(vertices_);
}

bool is_bounded(const HPolytope& p) {
  const std::size_t d = p.dim();
  std::vector<HalfSpace> cone;
  cone.reserve(p.halfspaces().size() + 1);
  for (const auto& h : p.halfspaces()) cone.emplace_back(h.a, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      // Look for a recession direction with sign * x_i >= 1.
      Vec n(d);
      n[i] = -sign;
      cone.emplace_back(std::move(n), Scalar(-1));
      const bool unbounded = lp_feasible(d, cone).feasible;
      cone.pop_back();
      if (unbounded) return false;
    }
  }
  return true;
}

VPolytope enumerate_vertices(const HPolytope& p) {
  const std::size_t d = p.dim();
  const auto& hs = p.halfspaces();
  if (!is_bounded(p)) throw UnboundedError("halfspace system is unbounded (normals do not positively span)");

  const std::size_t tasks = hs.size() >= d ? hs.size() - d + 1 : 0;
  std::vector<std::vector<Vec>> partial(tasks);
  detail::parallel_for(tasks, [&](std::size_t first) {
    SubsetWalker walker(hs, d);
    walker.run_from(first);
    partial[first] = walker.take();
  });
  std::vector<Vec> all;
  for (auto& part : partial) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  sort_unique(all);
  if (all.empty()) throw DegenerateError("polytope is empty");
  if (all.size() < d + 1 || affine_dimension(all, d) < d) {
    throw DegenerateError("polytope has empty interior (" + std::to_string(all.size()) + " vertices in dimension " +
                          std::to_string(d) + ")");
  }
  return VPolytope(d, std::move(all));
}

VPolytope extreme_points(std::span<const Vec> points) {
  if (points.empty()) throw InvalidArgument("extreme_points: empty point set");
  const std::size_t d = points.front().size();
  std::vector<Vec> unique(points.begin(), points.end());
  for (const auto& p : unique) {
    if (p.size() != d) throw DimensionMismatch("extreme_points: points of differing length");
  }
  sort_unique(unique);
  std::vector<char> keep(unique.size(), 0);
  detail::parallel_for(unique.size(), [&](std::size_t i) {
    std::vector<Vec> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j != i) others.push_back(unique[j]);
    }
    keep[i] = !in_convex_hull(others, unique[i]);
  });
  std::vector<Vec> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (keep[i]) out.push_back(std::move(unique[i]));
  }
  return VPolytope(d, std::move(out));
}

bool contains(const HPolytope& p, const Vec& x) {
  if (x.size() != p.dim()) throw DimensionMismatch("contains: point length does not match polytope dimension");
  return std::all_of(p.halfspaces().begin(), p.halfspaces().end(),
                     [&](const HalfSpace& h) { return h.satisfied_by(x); });
}

Support support(const VPolytope& v, const Vec& f) {
  if (v.vertices().empty()) throw InvalidArgument("support of an empty vertex set");
  const auto& vs = v.vertices();
  std::size_t best = 0;
  Scalar value = dot(f, vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Scalar s = dot(f, vs[i]);
    if (s > value) {
      value = std::move(s);
      best = i;
    }
  }
  return {value, vs[best]};
}

}  // namespace polyslice
