#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyslice/norm_space.hpp"
#include "polyslice/polytope.hpp"

namespace polyslice {

/// Slice {x in B : f·x >= sup f(B) - alpha} of a unit ball. Slices are closed;
/// a convex set and its closure have the same diameter.
struct SliceSpec {
  SliceSpec(Vec functional, Scalar depth);

  Vec f;
  Scalar alpha;
};

/// Unit ball plus the cut -f·x <= -(s - alpha), appended as the last halfspace,
/// where s is the support value of f on the ball.
HPolytope make_slice(const PolyhedralNormSpace& space, const SliceSpec& spec);
/// Same, reusing an already enumerated vertex set of the unit ball.
HPolytope make_slice(const PolyhedralNormSpace& space, const VPolytope& ball_vertices, const SliceSpec& spec);

struct DiameterResult {
  Scalar value;
  std::pair<Vec, Vec> witness_pair;
  std::size_t vertex_count = 0;
};

/// Largest |||u - v||| over vertex pairs. The map (u, v) -> |||u - v||| is
/// convex, so its maximum over P x P is attained at a pair of vertices.
/// Ties go to the lexicographically smallest pair.
DiameterResult diameter(const HPolytope& p, const PolyhedralNormSpace& space);
DiameterResult diameter(const VPolytope& v, const PolyhedralNormSpace& space);

/// Two points x ± (1 - r) y of a slice at distance 2(1 - r), built from a
/// direction y that every functional above level r at x, and the slicing
/// functional itself, annihilate.
struct LowerBoundCertificate {
  // inputs
  Vec g;
  Scalar alpha;
  Scalar r;
  // derived
  Scalar level;  // sup g(B) - alpha
  Vec x;
  Vec y;
  std::vector<Vec> active_set;
  Scalar bound;  // 2(1 - r)
  bool plus_in_slice = false;
  bool minus_in_slice = false;
  std::string point_rule;

  bool holds() const { return plus_in_slice && minus_in_slice; }
};

/// Builds the certificate. The base point x is the first of
///   1. the lexicographically smallest g-maximising vertex of the slice,
///   2. the barycenter of the g-maximising face of the slice,
///   3. an LP point of the slice on which every generator outside some
///      hyperplane through g stays <= r (hyperplanes scanned in generator order),
/// whose active set leaves a nontrivial common kernel with g.
/// Throws InvalidArgument unless 0 < r < 1 and alpha > 0, and DimensionTooSmall
/// when no candidate leaves a nonzero kernel.
LowerBoundCertificate lower_bound_certificate(const PolyhedralNormSpace& space, const Vec& g, const Scalar& alpha,
                                              const Scalar& r);

/// Recomputes every claim of a certificate from its inputs.
bool verify_certificate(const PolyhedralNormSpace& space, const LowerBoundCertificate& cert);

struct ProfileEntry {
  Scalar alpha;
  DiameterResult result;
  VPolytope slice;  // vertices of the slice at this depth
};

/// Exact slice diameters along f for strictly decreasing positive alphas.
std::vector<ProfileEntry> diameter_profile(const PolyhedralNormSpace& space, const Vec& f,
                                           const std::vector<Scalar>& alphas);

/// Floating-point lower bound on the diameter from random pairs of convex
/// combinations of vertices. Seeded and reproducible.
double sample_diameter_lower_bound(const HPolytope& p, const PolyhedralNormSpace& space, std::size_t trials,
                                   std::uint64_t seed);
double sample_diameter_lower_bound(const VPolytope& v, const PolyhedralNormSpace& space, std::size_t trials,
                                   std::uint64_t seed);

/// Slack allowed between a sampled and an exact diameter.
inline constexpr double kSampleSlack = 1e-9;

}  // namespace polyslice
