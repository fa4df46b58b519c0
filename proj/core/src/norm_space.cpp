#include "polyslice/norm_space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polyslice/errors.hpp"

namespace polyslice {

PolyhedralNormSpace::PolyhedralNormSpace(std::string label, std::size_t dim, std::vector<Vec> generators,
                                         std::map<std::string, Scalar> params)
    : label_(std::move(label)), dim_(dim), generators_(std::move(generators)), params_(std::move(params)) {
  if (dim_ == 0) throw InvalidArgument("space dimension must be positive");
  for (const auto& g : generators_) {
    if (g.size() != dim_) throw DimensionMismatch("generator length does not match space dimension");
  }
  const std::set<Vec> lookup(generators_.begin(), generators_.end());
  for (const auto& g : generators_) {
    if (!lookup.contains(-g)) throw InvalidArgument("generator set is not closed under negation");
  }
  if (rank(Matrix(dim_, generators_)) != dim_) {
    throw InvalidArgument("generators do not span the dual space");
  }
}

Scalar PolyhedralNormSpace::norm(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("norm: vector length does not match space dimension");
  Scalar best = 0;
  for (const auto& g : generators_) {
    Scalar v = dot(g, x);
    if (v > best) best = std::move(v);
  }
  return best;
}

PolyhedralNormSpace make_space_ii(int n, const Scalar& r) {
  if (n < 1) throw InvalidArgument("space II needs n >= 1");
  if (sgn(r) <= 0) throw InvalidArgument("space II needs r > 0");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  const std::size_t beta = d - 1;
  std::vector<Vec> gens;
  gens.reserve(4 * static_cast<std::size_t>(n) + 2);
  Vec top(d);
  top[beta] = 1 + r;
  gens.push_back(-top);
  gens.push_back(top);
  for (std::size_t k = 0; k < beta; ++k) {
    for (int xi : {1, -1}) {
      for (int psi : {1, -1}) {
        Vec g(d);
        g[k] = xi;
        g[beta] = psi;
        gens.push_back(std::move(g));
      }
    }
  }
  return PolyhedralNormSpace("II", d, std::move(gens), {{"N", Scalar(n)}, {"r", r}});
}

std::vector<Scalar> default_omega(int n) {
  std::vector<Scalar> omega;
  for (int k = 2; k <= n; ++k) omega.push_back(1 - Scalar(1, 6 * k));
  return omega;
}

PolyhedralNormSpace make_space_vii(int n, const std::vector<Scalar>& omega) {
  if (n < 2) throw InvalidArgument("space VII needs n >= 2");
  if (omega.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidArgument("space VII needs one omega per coordinate 2..n (" + std::to_string(n - 1) + " values)");
  }
  const Scalar lower(5, 6);
  const std::size_t d = static_cast<std::size_t>(n);
  std::map<std::string, Scalar> params{{"N", Scalar(n)}};
  std::vector<Vec> gens;
  gens.reserve(10 * (d - 1));
  for (std::size_t k = 1; k < d; ++k) {
    const Scalar& w = omega[k - 1];
    if (w <= lower || w > 1) {
      throw InvalidArgument("omega_" + std::to_string(k + 1) + " = " + format_scalar(w) + " lies outside (5/6, 1]");
    }
    params.emplace("omega_" + std::to_string(k + 1), w);
    for (int s : {1, -1}) {
      Vec g(d);
      g[k] = s;
      gens.push_back(std::move(g));
    }
    const std::pair<Scalar, Scalar> families[] = {{Scalar(1), Scalar(1, 3)}, {w, Scalar(1, 2)}};
    for (const auto& [lead, tail] : families) {
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          Vec g(d);
          g[0] = s1 * lead;
          g[k] = s2 * tail;
          gens.push_back(std::move(g));
        }
      }
    }
  }
  return PolyhedralNormSpace("VII", d, std::move(gens), std::move(params));
}

PolyhedralNormSpace make_custom_space(std::vector<Vec> generators, std::string label) {
  if (generators.empty()) throw InvalidArgument("custom space needs at least one generator");
  const std::size_t d = generators.front().size();
  return PolyhedralNormSpace(std::move(label), d, std::move(generators));
}

Scalar reference_product_norm(const Vec& x, std::size_t beta_index) {
  if (beta_index >= x.size()) throw InvalidArgument("reference_product_norm: beta index out of range");
  Scalar sup = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == beta_index) continue;
    Scalar a = abs(x[i]);
    if (a > sup) sup = std::move(a);
  }
  return sup + abs(x[beta_index]);
}

HPolytope unit_ball(const PolyhedralNormSpace& space) {
  std::vector<HalfSpace> hs;
  hs.reserve(space.generators().size());
  for (const auto& g : space.generators()) {
    if (!g.is_zero()) hs.emplace_back(g, Scalar(1));
  }
  return HPolytope(space.dim(), std::move(hs));
}

VPolytope dual_ball_vertices(const PolyhedralNormSpace& space) { return extreme_points(space.generators()); }

FaceSet attaining_set(const PolyhedralNormSpace& space, const Vec& x) {
  if (x.is_zero()) throw InvalidArgument("attaining_set is undefined at the origin");
  const Scalar n = space.norm(x);
  FaceSet face{x, {}};
  const VPolytope duals = dual_ball_vertices(space);
  for (const auto& phi : duals.vertices()) {
    if (dot(phi, x) == n) face.attaining.push_back(phi);
  }
  return face;
}

}  // namespace polyslice
