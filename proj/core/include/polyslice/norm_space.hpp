#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polyslice/linalg.hpp"
#include "polyslice/polytope.hpp"

namespace polyslice {

/// Finite-dimensional polyhedral norm |||x||| = max over generators φ of φ·x.
///
/// The generator set must be closed under negation and span the dual space;
/// the constructor enforces both, so the unit ball is a bounded, centrally
/// symmetric polytope with nonempty interior.
class PolyhedralNormSpace {
 public:
  PolyhedralNormSpace(std::string label, std::size_t dim, std::vector<Vec> generators,
                      std::map<std::string, Scalar> params = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  const std::map<std::string, Scalar>& params() const { return params_; }

  Scalar norm(const Vec& x) const;

 private:
  std::string label_;
  std::size_t dim_;
  std::vector<Vec> generators_;
  std::map<std::string, Scalar> params_;
};

/// Norm-one dual vertices attaining the norm at a point.
struct FaceSet {
  Vec point;
  std::vector<Vec> attaining;
};

inline Scalar norm(const PolyhedralNormSpace& space, const Vec& x) { return space.norm(x); }

/// The c0 ⊕ R renorming whose dual ball is the hull of the unit ball of
/// ℓ1 ⊕∞ R and (0, ±(1+r)), truncated to n sequence coordinates.
/// Layout: x(1..n) first, β last, so dim = n + 1 and there are 4n + 2 generators.
PolyhedralNormSpace make_space_ii(int n, const Scalar& r);

/// The c0 renorming
///   max{ |x(k)|, |x(1)| + |x(k)|/3, ω_k |x(1)| + |x(k)|/2 : 2 <= k <= n }.
/// omega[k - 2] holds ω_k and must lie in (5/6, 1]; 10(n - 1) generators.
PolyhedralNormSpace make_space_vii(int n, const std::vector<Scalar>& omega);

/// ω_k = 1 - 1/(6k) for k = 2..n.
std::vector<Scalar> default_omega(int n);

/// User-supplied generator set (validated like any other space).
PolyhedralNormSpace make_custom_space(std::vector<Vec> generators, std::string label = "custom");

/// Sup norm of the coordinates other than beta_index, plus |x(beta_index)|.
Scalar reference_product_norm(const Vec& x, std::size_t beta_index);

/// {x : φ·x <= 1 for every generator φ}.
HPolytope unit_ball(const PolyhedralNormSpace& space);

/// Extreme points of the convex hull of the generators.
VPolytope dual_ball_vertices(const PolyhedralNormSpace& space);

/// Dual-ball vertices φ with φ·x = |||x|||. Throws InvalidArgument for x = 0.
FaceSet attaining_set(const PolyhedralNormSpace& space, const Vec& x);

}  // namespace polyslice
