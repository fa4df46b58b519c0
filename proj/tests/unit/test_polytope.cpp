#include <gtest/gtest.h>

#include <algorithm>

#include "../support/generators.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/norm_space.hpp"
#include "polyslice/polytope.hpp"

using namespace polyslice;

namespace {

HPolytope cube(std::size_t d) {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < d; ++i) {
    hs.emplace_back(Vec::unit(d, i), 1);
    hs.emplace_back(-Vec::unit(d, i), 1);
  }
  return HPolytope(d, std::move(hs));
}

Scalar q(const char* t) { return parse_scalar(t); }

}  // namespace

TEST(EnumerateVertices, Cube) {
  const auto v = enumerate_vertices(cube(3));
  ASSERT_EQ(v.size(), 8u);
  for (const auto& p : v.vertices()) {
    for (const auto& c : p) EXPECT_EQ(abs(c), 1);
  }
}

TEST(EnumerateVertices, CrossPolytope) {
  std::vector<HalfSpace> hs;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) hs.emplace_back(Vec{s1, s2}, 1);
  }
  const auto v = enumerate_vertices(HPolytope(2, hs));
  const std::vector<Vec> expected{Vec{-1, 0}, Vec{0, -1}, Vec{0, 1}, Vec{1, 0}};
  EXPECT_EQ(v.vertices(), expected);
}

// Frozen from tests/oracles/brute_force.py (Fraction arithmetic over all 3-subsets).
TEST(EnumerateVertices, SpaceTwoBallMatchesBruteForceOracle) {
  const auto space = make_space_ii(2, Scalar(1, 10));
  const auto v = enumerate_vertices(unit_ball(space));
  const std::vector<Vec> expected{
      Vec{-1, -1, 0},
      Vec{-1, 1, 0},
      Vec{q("-1/11"), q("-1/11"), q("-10/11")},
      Vec{q("-1/11"), q("-1/11"), q("10/11")},
      Vec{q("-1/11"), q("1/11"), q("-10/11")},
      Vec{q("-1/11"), q("1/11"), q("10/11")},
      Vec{q("1/11"), q("-1/11"), q("-10/11")},
      Vec{q("1/11"), q("-1/11"), q("10/11")},
      Vec{q("1/11"), q("1/11"), q("-10/11")},
      Vec{q("1/11"), q("1/11"), q("10/11")},
      Vec{1, -1, 0},
      Vec{1, 1, 0},
  };
  EXPECT_EQ(v.vertices(), expected);
}

TEST(EnumerateVertices, UnboundedRejected) {
  const std::vector<HalfSpace> hs{{Vec{1, 0}, 1}, {Vec{-1, 0}, 1}, {Vec{0, 1}, 1}};
  EXPECT_THROW(enumerate_vertices(HPolytope(2, hs)), UnboundedError);
  EXPECT_THROW((enumerate_vertices(HPolytope(2, {}))), UnboundedError);
}

TEST(EnumerateVertices, FlatOrEmptyRejected) {
  const std::vector<HalfSpace> segment{{Vec{1, 0}, 0}, {Vec{-1, 0}, 0}, {Vec{0, 1}, 1}, {Vec{0, -1}, 1}};
  EXPECT_THROW(enumerate_vertices(HPolytope(2, segment)), DegenerateError);
  const std::vector<HalfSpace> empty{{Vec{1}, 0}, {Vec{-1}, -1}};
  EXPECT_THROW(enumerate_vertices(HPolytope(1, empty)), DegenerateError);
}

TEST(HPolytope, MismatchedNormalRejected) {
  const std::vector<HalfSpace> hs{{Vec{1, 0}, 1}};
  EXPECT_THROW(HPolytope(3, hs), DimensionMismatch);
}

TEST(ExtremePoints, InteriorPointRemoved) {
  const std::vector<Vec> s{Vec{0, 0}, Vec{1, 0}, Vec{0, 1}, Vec{q("1/4"), q("1/4")}};
  const auto ext = extreme_points(s);
  const std::vector<Vec> expected{Vec{0, 0}, Vec{0, 1}, Vec{1, 0}};
  EXPECT_EQ(ext.vertices(), expected);
}

TEST(ExtremePoints, SpaceTwoGeneratorsPlusMidpoint) {
  const auto space = make_space_ii(2, Scalar(1, 10));
  std::vector<Vec> s = space.generators();
  s.push_back(Vec{0, 0, 1});
  const auto ext = extreme_points(s);
  EXPECT_EQ(ext.size(), 10u);
  EXPECT_EQ((std::count(ext.vertices().begin(), ext.vertices().end(), Vec{0, 0, 1})), 0);
  for (const auto& g : space.generators()) {
    EXPECT_EQ(std::count(ext.vertices().begin(), ext.vertices().end(), g), 1);
  }
}

TEST(ExtremePoints, SingletonAndDuplicates) {
  EXPECT_EQ((extreme_points(std::vector<Vec>{Vec{3, 4}}).vertices()), (std::vector<Vec>{Vec{3, 4}}));
  const std::vector<Vec> dup{Vec{0}, Vec{1}, Vec{1}, Vec{q("1/2")}};
  EXPECT_EQ(extreme_points(dup).vertices(), (std::vector<Vec>{Vec{0}, Vec{1}}));
}

TEST(Contains, ClosedConvention) {
  const auto c = cube(3);
  EXPECT_TRUE((contains(c, Vec{0, 0, 0})));
  EXPECT_TRUE((contains(c, Vec{1, 1, 1})));
  EXPECT_FALSE((contains(c, Vec{q("1001/1000"), 0, 0})));
  EXPECT_THROW((contains(c, Vec{0, 0})), DimensionMismatch);
}

TEST(Support, CubeAndZeroFunctional) {
  const auto v = enumerate_vertices(cube(3));
  const auto s = support(v, Vec{1, 1, 1});
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(s.argmax, (Vec{1, 1, 1}));
  const auto z = support(v, Vec{0, 0, 0});
  EXPECT_EQ(z.value, 0);
  EXPECT_EQ(z.argmax, (Vec{-1, -1, -1}));  // lexicographically smallest
}

TEST(Support, DualBallOfSpaceTwoInBetaDirection) {
  const auto space = make_space_ii(2, Scalar(1, 10));
  const auto s = support(dual_ball_vertices(space), Vec{0, 0, 1});
  EXPECT_EQ(s.value, q("11/10"));
  EXPECT_EQ(s.argmax, (Vec{0, 0, q("11/10")}));
}

TEST(Support, EmptyRejected) {
  EXPECT_THROW((support(VPolytope(2, {}), Vec{1, 0})), InvalidArgument);
}

// Invariants over 200 random bounded polytopes (d <= 4, m <= 12).
class RandomPolytopes : public ::testing::Test {
 protected:
  static constexpr int kCases = 200;
};

TEST_F(RandomPolytopes, KernelInvariants) {
  testkit::Gen gen(2024);
  for (int t = 0; t < kCases; ++t) {
    const HPolytope p = gen.bounded_polytope();
    const std::size_t d = p.dim();
    const VPolytope v = enumerate_vertices(p);

    for (const auto& x : v.vertices()) {
      EXPECT_TRUE(contains(p, x));
      Matrix tight(d);
      for (const auto& h : p.halfspaces()) {
        if (dot(h.a, x) == h.b) tight.append_row(h.a);
      }
      EXPECT_EQ(rank(tight), d) << "vertex is not the intersection of d independent facets";
    }

    EXPECT_EQ(extreme_points(v.vertices()).vertices(), v.vertices());

    const Vec f = gen.vec(d);
    const auto s = support(v, f);
    for (const auto& x : v.vertices()) EXPECT_GE(s.value, dot(f, x));

    for (int k = 0; k < 5; ++k) {
      const Vec x = gen.vec(d, 6, 4);
      EXPECT_EQ(contains(p, x), in_convex_hull(v.vertices(), x));
    }
  }
}

TEST_F(RandomPolytopes, SymmetricSystemsHaveSymmetricVertices) {
  testkit::Gen gen(99);
  for (int t = 0; t < 50; ++t) {
    const HPolytope base = gen.bounded_polytope(3, 6);
    std::vector<HalfSpace> hs = base.halfspaces();
    for (const auto& h : base.halfspaces()) hs.emplace_back(-h.a, h.b);
    const auto v = enumerate_vertices(HPolytope(base.dim(), hs));
    for (const auto& x : v.vertices()) {
      EXPECT_TRUE(std::binary_search(v.vertices().begin(), v.vertices().end(), -x));
    }
  }
}
