// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// All geometric comparisons are exact rationals; the only tolerance is the
// float slack of the sampling oracle, pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../support/generators.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/experiments.hpp"
#include "polyslice/lp.hpp"
#include "polyslice/norm_space.hpp"
#include "polyslice/slice.hpp"

using namespace polyslice;

namespace {

constexpr double kThm1CaseSeconds = 60.0;
constexpr double kProp3CaseSeconds = 120.0;
constexpr double kSamplingSlack = 1e-9;
constexpr std::size_t kSamplingTrials = 10000;
constexpr std::size_t kSandwichVectors = 1000;
constexpr int kAxiomInputs = 1000;
constexpr int kRandomPolytopes = 200;

Scalar q(const char* t) { return parse_scalar(t); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const ReportRow* find_row(const Report& rep, const std::string& quantity, Relation rel) {
  for (const auto& r : rep.rows) {
    if (r.quantity == quantity && r.relation == rel) return &r;
  }
  return nullptr;
}

// A slice computed by criteria 1-3, revisited by criterion 7.
struct SliceCase {
  std::string label;
  PolyhedralNormSpace space;
  SliceSpec spec;
};
std::vector<SliceCase> g_slices;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Vec beta_functional(int n, const Scalar& r) {
  Vec f(static_cast<std::size_t>(n + 1));
  f[static_cast<std::size_t>(n)] = 1 + r;
  return f;
}

Outcome criterion_thm1() {
  Outcome out;
  double worst = 0;
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const char* es : {"1/2", "1/5", "1/20"}) {
      const Scalar eps = q(es);
      const auto t0 = std::chrono::steady_clock::now();
      const Report rep = run_thm1(n, eps, {}, {}, kSamplingTrials, 1);
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      ++cases;
      const std::string tag = "N=" + std::to_string(n) + " eps=" + es;
      const auto* row = find_row(rep, "diameter", Relation::kLe);
      if (row == nullptr || row->bound != 4 * eps / 5 || !(row->value <= row->bound)) out.fail(tag + ": diameter > 2r+3delta");
      if (!rep.passed()) out.fail(tag + ": report verdict fail");
      if (secs >= kThm1CaseSeconds) out.fail(tag + ": took " + std::to_string(secs) + " s");
      const Scalar r = eps / 4;
      g_slices.push_back({"thm1 " + tag, make_space_ii(n, r), SliceSpec(beta_functional(n, r), eps / 10)});
    }
  }
  if (out.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cases, diam <= 2r+3delta = 4eps/5 exactly, slowest %.2f s", cases, worst);
    out.detail = buf;
  }
  return out;
}

Outcome criterion_prop2() {
  Outcome out;
  int certified = 0;
  for (const char* rs : {"1/10", "1/4"}) {
    const Scalar r = q(rs);
    for (const char* g : {"e1", "e1+e2", "random"}) {
      const std::string tag = std::string("r=") + rs + " g=" + g;
      const Report rep = run_prop2(4, r, g, q("1/2"), kSamplingTrials, 1);
      const auto* plus = find_row(rep, "certificate_plus_in_slice", Relation::kEq);
      const auto* minus = find_row(rep, "certificate_minus_in_slice", Relation::kEq);
      const auto* lower = find_row(rep, "diameter", Relation::kGe);
      if (plus == nullptr || minus == nullptr || !plus->pass || !minus->pass) {
        out.fail(tag + ": certificate membership check failed");
      }
      if (lower == nullptr || !lower->asserted || lower->bound != 2 * (1 - r) || !(lower->value >= lower->bound)) {
        out.fail(tag + ": exact diameter below 2(1-r)");
      }
      if (!rep.passed()) out.fail(tag + ": report verdict fail");
      if (out.pass) ++certified;
      const Vec gv = functional_from_spec(g, 5, 1);
      g_slices.push_back({"prop2 " + tag, make_space_ii(4, r), SliceSpec(gv, q("1/2"))});
    }
  }
  // N = 1: the obstruction must surface as DimensionTooSmall.
  const auto s1 = make_space_ii(1, q("1/10"));
  bool obstructed = false;
  try {
    lower_bound_certificate(s1, Vec{1, 0}, q("1/2"), q("1/10"));
  } catch (const DimensionTooSmall&) {
    obstructed = true;
  }
  const Report rep1 = run_prop2(1, q("1/10"), "e1", q("1/2"), 1000, 1);
  const auto* flag = find_row(rep1, "certificate_dimension_too_small", Relation::kEq);
  if (!obstructed || flag == nullptr) out.fail("N=1: DimensionTooSmall not produced/reported");
  if (out.pass) out.detail = std::to_string(certified) + "/6 certificates valid at N=4, diam >= 2(1-r); N=1 reports DimensionTooSmall";
  return out;
}

Outcome criterion_prop3() {
  Outcome out;
  double worst = 0;
  int four_eps_holds = 0;
  int cases = 0;
  Scalar max_ratio = 0;
  const std::vector<const char*> eps_list{"1/10", "1/20", "1/40", "1/80"};
  for (int n : {3, 4, 5}) {
    std::vector<Scalar> diams;
    for (const char* es : eps_list) {
      const Scalar eps = q(es);
      const std::string tag = "N=" + std::to_string(n) + " eps=" + es;
      const auto t0 = std::chrono::steady_clock::now();
      const Report rep = run_prop3(n, {eps}, {}, kSamplingTrials, 1);
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      ++cases;
      const auto* d = find_row(rep, "diameter", Relation::kLe);
      const auto* tail = find_row(rep, "vertex_max_tail_coordinate", Relation::kLe);
      if (d == nullptr || d->bound != 6 * eps || !(d->value <= d->bound)) {
        out.fail(tag + ": diameter > 6eps");
        continue;
      }
      if (tail == nullptr || tail->bound != 3 * eps || !tail->pass) out.fail(tag + ": vertex tail coordinate > 3eps");
      if (!rep.passed()) out.fail(tag + ": report verdict fail");
      if (secs >= kProp3CaseSeconds) out.fail(tag + ": took " + std::to_string(secs) + " s");
      diams.push_back(d->value);
      max_ratio = std::max(max_ratio, Scalar(d->value / eps));
      if (d->value <= 4 * eps) ++four_eps_holds;
      g_slices.push_back({"prop3 " + tag, make_space_vii(n, default_omega(n)),
                          SliceSpec(Vec::unit(static_cast<std::size_t>(n), 0), eps)});
    }
    for (std::size_t i = 1; i < diams.size(); ++i) {
      if (diams[i] > diams[i - 1]) out.fail("N=" + std::to_string(n) + ": diameters not monotone");
    }
  }
  if (max_ratio > 6) out.fail("diam/eps exceeds 6");
  std::printf("       prop3: 4eps constant holds in %d/%d cases; max diam/eps = %s\n", four_eps_holds, cases,
              format_scalar(max_ratio).c_str());
  if (out.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d cases, diam <= 6eps, monotone, diam/eps <= %s, tails <= 3eps, slowest %.2f s",
                  cases, format_scalar(max_ratio).c_str(), worst);
    out.detail = buf;
  }
  return out;
}

Outcome criterion_verify_ext() {
  Outcome out;
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const char* rs : {"1/20", "1/10", "1/4"}) {
      const Report rep = run_verify_ext(n, q(rs));
      const auto* count = find_row(rep, "extreme_point_count", Relation::kEq);
      if (!rep.passed() || count == nullptr || count->value != 4 * n + 2) {
        out.fail("N=" + std::to_string(n) + " r=" + rs + ": extreme set differs from generators");
      }
      ++cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " cases, Ext = generators, count 4N+2";
  return out;
}

Outcome criterion_sandwich() {
  Outcome out;
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const char* rs : {"1/20", "1/10", "1/4"}) {
      const Report rep = run_sandwich(n, q(rs), kSandwichVectors, static_cast<std::uint64_t>(n));
      const auto* lo = find_row(rep, "lower_violations", Relation::kEq);
      const auto* hi = find_row(rep, "upper_violations", Relation::kEq);
      if (!rep.passed() || lo == nullptr || hi == nullptr || lo->value != 0 || hi->value != 0) {
        out.fail("N=" + std::to_string(n) + " r=" + rs + ": sandwich violated");
      }
      ++cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " grid points x " + std::to_string(kSandwichVectors) + " vectors";
  return out;
}

Outcome criterion_properties() {
  Outcome out;
  testkit::Gen gen(20);
  std::vector<PolyhedralNormSpace> spaces;
  for (int n : {1, 3, 6}) spaces.push_back(make_space_ii(n, q("1/10")));
  for (int n : {2, 4, 6}) spaces.push_back(make_space_vii(n, default_omega(n)));
  for (const auto& s : spaces) {
    for (int t = 0; t < kAxiomInputs; ++t) {
      // Every 50th input is the zero vector so definiteness is exercised both ways.
      const Vec x = t % 50 == 0 ? Vec(s.dim()) : gen.vec(s.dim());
      const Vec y = gen.vec(s.dim());
      const Scalar lambda = gen.rational();
      Vec lx = x;
      lx *= lambda;
      if (s.norm(lx) != abs(lambda) * s.norm(x)) out.fail(s.label() + ": homogeneity");
      if (s.norm(x + y) > s.norm(x) + s.norm(y)) out.fail(s.label() + ": triangle inequality");
      if ((s.norm(x) == 0) != x.is_zero()) out.fail(s.label() + ": definiteness");
    }
  }

  testkit::Gen pgen(2024);
  for (int t = 0; t < kRandomPolytopes; ++t) {
    const HPolytope p = pgen.bounded_polytope(4, 12);
    const VPolytope v = enumerate_vertices(p);
    if (extreme_points(v.vertices()).vertices() != v.vertices()) out.fail("polytope " + std::to_string(t) + ": vertices vs extreme_points");
    for (int k = 0; k < 10; ++k) {
      const Vec x = pgen.vec(p.dim(), 6, 4);
      if (contains(p, x) != in_convex_hull(v.vertices(), x)) out.fail("polytope " + std::to_string(t) + ": LP vs H membership");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(spaces.size()) + " spaces x " + std::to_string(kAxiomInputs) + " inputs; " +
                 std::to_string(kRandomPolytopes) + " random polytopes (d<=4, m<=12)";
  }
  return out;
}

Outcome criterion_sampling() {
  Outcome out;
  double worst_gap = 0;
  for (std::size_t i = 0; i < g_slices.size(); ++i) {
    const auto& c = g_slices[i];
    const VPolytope v = enumerate_vertices(make_slice(c.space, c.spec));
    const DiameterResult d = diameter(v, c.space);
    const double sampled = sample_diameter_lower_bound(v, c.space, kSamplingTrials, 1 + i);
    if (!(Scalar(sampled) <= d.value + Scalar(kSamplingSlack))) out.fail(c.label + ": sample exceeds exact diameter");
    worst_gap = std::max(worst_gap, sampled - to_double(d.value));
  }
  if (out.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu slices x %zu trials, max(sampled - exact) = %.3g", g_slices.size(),
                  kSamplingTrials, worst_gap);
    out.detail = buf;
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 thm1 slice diameters", criterion_thm1},
      {"2 prop2 certificates", criterion_prop2},
      {"3 prop3 shrinking slices", criterion_prop3},
      {"4 extreme-point identification", criterion_verify_ext},
      {"5 norm sandwich", criterion_sandwich},
      {"6 property suites", criterion_properties},
      {"7 sampling oracle consistency", criterion_sampling},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
