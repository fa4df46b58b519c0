#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/serialize.hpp"

using namespace polyslice;
using nlohmann::json;

namespace {
Scalar q(const char* t) { return parse_scalar(t); }
}  // namespace

TEST(SerializeScalar, RationalStrings) {
  EXPECT_EQ(to_json(q("-6/4")), json("-3/2"));
  EXPECT_EQ(to_json(Scalar(5)), json("5/1"));
  EXPECT_EQ(scalar_from_json(json("7/21")), q("1/3"));
  EXPECT_EQ(scalar_from_json(json(4)), 4);
  EXPECT_THROW(scalar_from_json(json("1/0")), InvalidArgument);
  EXPECT_THROW(scalar_from_json(json("abc")), InvalidArgument);
}

TEST(SerializeVec, RoundTrip) {
  testkit::Gen gen(5);
  for (int t = 0; t < 50; ++t) {
    const Vec v = gen.vec(static_cast<std::size_t>(gen.integer(1, 6)));
    EXPECT_EQ(vec_from_json(to_json(v)), v);
  }
}

TEST(SerializePolytopes, RoundTrip) {
  testkit::Gen gen(8);
  for (int t = 0; t < 20; ++t) {
    const HPolytope p = gen.bounded_polytope(3, 8);
    const HPolytope back = hpolytope_from_json(to_json(p));
    ASSERT_EQ(back.dim(), p.dim());
    ASSERT_EQ(back.halfspaces().size(), p.halfspaces().size());
    for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
      EXPECT_EQ(back.halfspaces()[i].a, p.halfspaces()[i].a);
      EXPECT_EQ(back.halfspaces()[i].b, p.halfspaces()[i].b);
    }
    const VPolytope v = enumerate_vertices(p);
    EXPECT_EQ(vpolytope_from_json(to_json(v)).vertices(), v.vertices());
  }
}

TEST(SerializeSpace, KindsRoundTrip) {
  for (const auto& s : {make_space_ii(3, q("1/4")), make_space_vii(3, {q("11/12"), q("9/10")}),
                        make_custom_space({Vec{1, 0}, Vec{-1, 0}, Vec{0, 2}, Vec{0, -2}})}) {
    const auto back = space_from_json(to_json(s));
    EXPECT_EQ(back.dim(), s.dim());
    EXPECT_EQ(back.generators(), s.generators());
  }
}

TEST(SerializeSpace, ParsesHandWrittenFiles) {
  const auto ii = space_from_json(json::parse(R"({"kind": "II", "N": 2, "r": "1/10"})"));
  EXPECT_EQ(ii.generators().size(), 10u);
  const auto vii = space_from_json(json::parse(R"({"kind": "VII", "N": 3})"));
  EXPECT_EQ(vii.generators(), make_space_vii(3, default_omega(3)).generators());
  const auto custom = space_from_json(json::parse(R"({"kind": "custom", "generators": [["1","0"],["-1","0"],["0","1"],["0","-1"]]})"));
  EXPECT_EQ(custom.dim(), 2u);
  EXPECT_THROW(space_from_json(json::parse(R"({"kind": "IX", "N": 2})")), InvalidArgument);
}

TEST(SerializeDiameter, CarriesExactAndDecimal) {
  const auto s = make_space_ii(2, q("1/10"));
  Vec f(3);
  f[2] = q("11/10");
  const auto d = diameter(make_slice(s, SliceSpec(f, q("1/40"))), s);
  const json j = to_json(d);
  EXPECT_EQ(j.at("value"), json("5/22"));
  EXPECT_EQ(j.at("vertex_count"), json(8));
  EXPECT_EQ(j.at("witness_pair").size(), 2u);
  EXPECT_TRUE(j.contains("value_decimal"));
}

TEST(SerializeCertificate, ThirdPartyReverification) {
  const Scalar r = q("1/4");
  const auto s = make_space_ii(4, r);
  const auto c = lower_bound_certificate(s, Vec::unit(5, 0), q("1/2"), r);
  const json j = to_json(c);
  const auto back = certificate_from_json(j);
  EXPECT_EQ(back.x, c.x);
  EXPECT_EQ(back.y, c.y);
  EXPECT_EQ(back.r, c.r);
  EXPECT_EQ(back.alpha, c.alpha);
  EXPECT_TRUE(verify_certificate(s, back));

  json bad = j;
  bad["y"] = to_json(c.y + c.y);
  EXPECT_FALSE(verify_certificate(s, certificate_from_json(bad)));
}
