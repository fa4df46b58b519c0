#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyslice/linalg.hpp"

namespace polyslice {

/// Closed halfspace a·x <= b. The normal must be nonzero.
struct HalfSpace {
  HalfSpace(Vec normal, Scalar offset);

  Vec a;
  Scalar b;

  bool satisfied_by(const Vec& x) const { return dot(a, x) <= b; }
};

/// Hyperplane constraint a·x = b.
struct LinearEquality {
  Vec a;
  Scalar b;
};

struct LpFeasibility {
  bool feasible = false;
  Vec witness;  // set when feasible
};

/// Decides whether {a·x <= b} ∧ {c·x = e} has a solution in Q^dim, by an exact
/// two-phase-style simplex (phase one only) with Bland's rule.
LpFeasibility lp_feasible(std::size_t dim, std::span<const HalfSpace> constraints,
                          std::span<const LinearEquality> equalities = {});

/// Finds some x >= 0 with A x = b, or nullopt if none exists.
std::optional<Vec> nonnegative_solution(const Matrix& a, const Vec& b);

/// True iff p is a convex combination of points.
bool in_convex_hull(std::span<const Vec> points, const Vec& p);

}  // namespace polyslice
