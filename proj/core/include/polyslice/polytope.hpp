#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyslice/linalg.hpp"
#include "polyslice/lp.hpp"

namespace polyslice {

/// Polytope given as an intersection of closed halfspaces.
class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<HalfSpace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

 private:
  std::size_t dim_;
  std::vector<HalfSpace> halfspaces_;
};

/// Polytope given by a point list. The list is kept sorted lexicographically
/// and free of exact duplicates; extremeness is established by extreme_points.
class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<Vec> vertices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec>& vertices() const { return vertices_; }

 private:
  std::size_t dim_;
  std::vector<Vec> vertices_;
};

/// True iff the recession cone {x : a·x <= 0 for all halfspaces} is {0}.
bool is_bounded(const HPolytope& p);

/// All vertices of a bounded full-dimensional H-polytope, by enumerating the
/// dim-subsets of halfspaces with nonsingular normals.
/// Throws UnboundedError or DegenerateError (empty, or empty interior).
VPolytope enumerate_vertices(const HPolytope& p);

/// The points of S that are not convex combinations of the remaining points.
VPolytope extreme_points(std::span<const Vec> points);

/// Closed membership: a·x <= b for every halfspace.
bool contains(const HPolytope& p, const Vec& x);

struct Support {
  Scalar value;
  Vec argmax;  // lexicographically smallest maximiser
};

Support support(const VPolytope& v, const Vec& f);

}  // namespace polyslice
