#include "polyslice/slice.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "parallel.hpp"
#include "polyslice/errors.hpp"

namespace polyslice {
namespace {

// Index combinations of size k from [0, n) in lexicographic order.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), idx_(k) {
    for (std::size_t i = 0; i < k; ++i) idx_[i] = i;
    done_ = k > n;
  }
  bool done() const { return done_; }
  const std::vector<std::size_t>& current() const { return idx_; }
  void next() {
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == n_ - k + i - 1) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    ++idx_[i - 1];
    for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool done_;
};

Vec scaled_to_leading_one(Vec v) {
  for (const auto& c : v) {
    if (sgn(c) != 0) {
      const Scalar lead = c;
      return v / lead;
    }
  }
  return v;
}

enum class Outcome { kTrivialKernel, kChecksFailed, kHolds };

struct Attempt {
  Outcome outcome;
  LowerBoundCertificate cert;
};

class CertificateBuilder {
 public:
  CertificateBuilder(const PolyhedralNormSpace& space, const Vec& g, const Scalar& alpha, const Scalar& r)
      : space_(space),
        g_(g),
        alpha_(alpha),
        r_(r),
        duals_(dual_ball_vertices(space).vertices()),
        ball_(enumerate_vertices(unit_ball(space))),
        slice_(make_slice(space, ball_, SliceSpec(g, alpha))),
        level_(support(ball_, g).value - alpha) {}

  LowerBoundCertificate build() {
    const VPolytope slice_vertices = enumerate_vertices(slice_);
    const Support top = support(slice_vertices, g_);

    std::optional<LowerBoundCertificate> failed;
    auto consider = [&](const Vec& x, const std::string& rule) -> std::optional<LowerBoundCertificate> {
      Attempt a = attempt(x, rule);
      if (a.outcome == Outcome::kHolds) return std::move(a.cert);
      if (a.outcome == Outcome::kChecksFailed && !failed) failed = std::move(a.cert);
      return std::nullopt;
    };

    if (auto c = consider(top.argmax, "support-vertex")) return *c;

    Vec barycenter(space_.dim());
    std::size_t count = 0;
    for (const auto& v : slice_vertices.vertices()) {
      if (dot(g_, v) == top.value) {
        barycenter += v;
        ++count;
      }
    }
    barycenter /= Scalar(static_cast<long>(count));
    if (auto c = consider(barycenter, "face-barycenter")) return *c;

    if (auto c = hyperplane_search(consider)) return *c;

    if (failed) return *failed;
    throw DimensionTooSmall("no slice point leaves a nonzero common kernel of the active functionals and g (dim " +
                            std::to_string(space_.dim()) + ")");
  }

 private:
  template <typename Consider>
  std::optional<LowerBoundCertificate> hyperplane_search(Consider& consider) {
    const std::size_t d = space_.dim();
    if (d < 2) return std::nullopt;
    std::set<Vec> seen;
    for (Combinations comb(duals_.size(), d - 2); !comb.done(); comb.next()) {
      Matrix span(d);
      span.append_row(g_);
      for (auto i : comb.current()) span.append_row(duals_[i]);
      auto kernel = nullspace_basis(span);
      if (kernel.size() != 1) continue;
      Vec normal = scaled_to_leading_one(std::move(kernel.front()));
      if (!seen.insert(normal).second) continue;

      std::vector<HalfSpace> hs;
      hs.reserve(duals_.size() + 1);
      for (const auto& phi : duals_) {
        if (phi.is_zero()) continue;
        hs.emplace_back(phi, sgn(dot(phi, normal)) == 0 ? Scalar(1) : r_);
      }
      hs.emplace_back(-g_, -level_);
      auto lp = lp_feasible(d, hs);
      if (!lp.feasible) continue;
      if (auto c = consider(lp.witness, "hyperplane-lp")) return c;
    }
    return std::nullopt;
  }

  Attempt attempt(const Vec& x, const std::string& rule) const {
    const std::size_t d = space_.dim();
    LowerBoundCertificate cert;
    cert.g = g_;
    cert.alpha = alpha_;
    cert.r = r_;
    cert.level = level_;
    cert.x = x;
    cert.bound = 2 * (1 - r_);
    cert.point_rule = rule;
    Matrix constraints(d);
    for (const auto& phi : duals_) {
      if (dot(phi, x) > r_) {
        cert.active_set.push_back(phi);
        constraints.append_row(phi);
      }
    }
    constraints.append_row(g_);
    const auto kernel = nullspace_basis(constraints);
    if (kernel.empty()) return {Outcome::kTrivialKernel, std::move(cert)};
    for (const auto& direction : kernel) {
      Vec y = direction / space_.norm(direction);
      const Vec step = (1 - r_) * y;
      const bool plus = contains(slice_, x + step);
      const bool minus = contains(slice_, x - step);
      if ((plus && minus) || cert.y.empty()) {
        cert.y = std::move(y);
        cert.plus_in_slice = plus;
        cert.minus_in_slice = minus;
      }
      if (plus && minus) return {Outcome::kHolds, std::move(cert)};
    }
    return {Outcome::kChecksFailed, std::move(cert)};
  }

  const PolyhedralNormSpace& space_;
  Vec g_;
  Scalar alpha_;
  Scalar r_;
  std::vector<Vec> duals_;
  VPolytope ball_;
  HPolytope slice_;
  Scalar level_;
};

double norm_double(const std::vector<std::vector<double>>& gens, const std::vector<double>& x) {
  double best = 0.0;
  for (const auto& g : gens) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += g[i] * x[i];
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

SliceSpec::SliceSpec(Vec functional, Scalar depth) : f(std::move(functional)), alpha(std::move(depth)) {
  if (f.is_zero()) throw InvalidArgument("slice functional must be nonzero");
  if (sgn(alpha) <= 0) throw InvalidArgument("slice depth alpha must be positive");
}

HPolytope make_slice(const PolyhedralNormSpace& space, const SliceSpec& spec) {
  return make_slice(space, enumerate_vertices(unit_ball(space)), spec);
}

HPolytope make_slice(const PolyhedralNormSpace& space, const VPolytope& ball_vertices, const SliceSpec& spec) {
  if (spec.f.size() != space.dim()) throw DimensionMismatch("slice functional length does not match space");
  const Scalar s = support(ball_vertices, spec.f).value;
  std::vector<HalfSpace> hs = unit_ball(space).halfspaces();
  hs.emplace_back(-spec.f, -(s - spec.alpha));
  return HPolytope(space.dim(), std::move(hs));
}

DiameterResult diameter(const HPolytope& p, const PolyhedralNormSpace& space) {
  return diameter(enumerate_vertices(p), space);
}

DiameterResult diameter(const VPolytope& v, const PolyhedralNormSpace& space) {
  if (v.dim() != space.dim()) throw DimensionMismatch("diameter: polytope and space dimensions differ");
  const auto& vs = v.vertices();
  if (vs.empty()) throw DegenerateError("diameter of an empty vertex set");
  std::vector<Vec> gens;
  for (const auto& g : space.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  // values[i][k] = φ_k · v_i, so |||v_i - v_j||| = max_k values[i][k] - values[j][k].
  std::vector<std::vector<Scalar>> values(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    values[i].reserve(gens.size());
    for (const auto& g : gens) values[i].push_back(dot(g, vs[i]));
  }
  struct RowBest {
    Scalar value;
    std::size_t j = 0;
  };
  std::vector<RowBest> rows(vs.size());
  detail::parallel_for(vs.size(), [&](std::size_t i) {
    RowBest best{Scalar(0), i};
    Scalar diff;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Scalar pair_norm = 0;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        diff = values[i][k] - values[j][k];
        if (diff > pair_norm) pair_norm = diff;
      }
      if (pair_norm > best.value) best = {pair_norm, j};
    }
    rows[i] = std::move(best);
  });
  std::size_t bi = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].value > rows[bi].value) bi = i;
  }
  return {rows[bi].value, {vs[bi], vs[rows[bi].j]}, vs.size()};
}

LowerBoundCertificate lower_bound_certificate(const PolyhedralNormSpace& space, const Vec& g, const Scalar& alpha,
                                              const Scalar& r) {
  if (sgn(r) <= 0 || r >= 1) throw InvalidArgument("certificate requires 0 < r < 1, got r = " + format_scalar(r));
  if (sgn(alpha) <= 0) throw InvalidArgument("certificate requires alpha > 0");
  if (g.size() != space.dim()) throw DimensionMismatch("certificate functional length does not match space");
  if (g.is_zero()) throw InvalidArgument("certificate functional must be nonzero");
  return CertificateBuilder(space, g, alpha, r).build();
}

bool verify_certificate(const PolyhedralNormSpace& space, const LowerBoundCertificate& cert) {
  if (sgn(cert.r) <= 0 || cert.r >= 1 || cert.bound != 2 * (1 - cert.r)) return false;
  if (cert.x.size() != space.dim() || cert.y.size() != space.dim()) return false;
  const VPolytope ball = enumerate_vertices(unit_ball(space));
  if (cert.level != support(ball, cert.g).value - cert.alpha) return false;
  if (space.norm(cert.y) != 1 || sgn(dot(cert.g, cert.y)) != 0) return false;
  std::vector<Vec> active;
  const VPolytope duals = dual_ball_vertices(space);
  for (const auto& phi : duals.vertices()) {
    if (dot(phi, cert.x) > cert.r) active.push_back(phi);
  }
  if (active != cert.active_set) return false;
  for (const auto& phi : active) {
    if (sgn(dot(phi, cert.y)) != 0) return false;
  }
  const Vec step = (1 - cert.r) * cert.y;
  auto in_slice = [&](const Vec& p) { return space.norm(p) <= 1 && dot(cert.g, p) >= cert.level; };
  return in_slice(cert.x + step) == cert.plus_in_slice && in_slice(cert.x - step) == cert.minus_in_slice &&
         space.norm(cert.x + step - (cert.x - step)) == cert.bound;
}

std::vector<ProfileEntry> diameter_profile(const PolyhedralNormSpace& space, const Vec& f,
                                           const std::vector<Scalar>& alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (sgn(alphas[i]) <= 0) throw InvalidArgument("profile alphas must be positive");
    if (i > 0 && alphas[i] >= alphas[i - 1]) throw InvalidArgument("profile alphas must be strictly decreasing");
  }
  const VPolytope ball = enumerate_vertices(unit_ball(space));
  std::vector<ProfileEntry> out;
  out.reserve(alphas.size());
  for (const auto& a : alphas) {
    VPolytope slice = enumerate_vertices(make_slice(space, ball, SliceSpec(f, a)));
    DiameterResult result = diameter(slice, space);
    out.push_back({a, std::move(result), std::move(slice)});
  }
  return out;
}

double sample_diameter_lower_bound(const HPolytope& p, const PolyhedralNormSpace& space, std::size_t trials,
                                   std::uint64_t seed) {
  return sample_diameter_lower_bound(enumerate_vertices(p), space, trials, seed);
}

double sample_diameter_lower_bound(const VPolytope& v, const PolyhedralNormSpace& space, std::size_t trials,
                                   std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("sampling needs at least one trial");
  if (v.vertices().empty()) throw DegenerateError("sampling an empty vertex set");
  const std::size_t d = space.dim();
  std::vector<std::vector<double>> verts;
  for (const auto& p : v.vertices()) {
    std::vector<double> row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = to_double(p[i]);
    verts.push_back(std::move(row));
  }
  std::vector<std::vector<double>> gens;
  for (const auto& g : space.generators()) {
    std::vector<double> row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = to_double(g[i]);
    gens.push_back(std::move(row));
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = verts.size();
  auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto random_point = [&] {
    const std::size_t terms = 1 + rng() % std::min<std::size_t>(3, n);
    std::vector<double> point(d, 0.0);
    double total = 0.0;
    const std::vector<double>* last = nullptr;
    for (std::size_t t = 0; t < terms; ++t) {
      last = &verts[rng() % n];
      const double w = -std::log(1.0 - uniform01());
      total += w;
      for (std::size_t i = 0; i < d; ++i) point[i] += w * (*last)[i];
    }
    if (total == 0.0) return *last;
    for (auto& c : point) c /= total;
    return point;
  };
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_point();
    const auto b = random_point();
    std::vector<double> diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = a[i] - b[i];
    best = std::max(best, norm_double(gens, diff));
  }
  return best;
}

}  // namespace polyslice
