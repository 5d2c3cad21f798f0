#include <gtest/gtest.h>

#include "hopfgen/json_io.hpp"

using namespace hopfgen;

namespace {

HopfAlgebra v4_monomial() {
  auto v4 = parse_group_spec("product:cyclic:2,cyclic:2");
  auto f2 = make_field(2);
  return monomial_type_I(v4, v4.index_of("(a,e)"), character_from_exponents({0, 0, 1, 1}, f2), f2);
}

}  // namespace

TEST(Json, Scalars) {
  auto f = make_field(3);
  Scalar s(f, RatPoly{Rational(1, 2), Rational(-3)});
  Json j = scalar_to_json(s);
  EXPECT_EQ(j.dump(), R"(["1/2","-3"])");
  EXPECT_EQ(scalar_from_json(j, f), s);
  EXPECT_EQ(scalar_to_json(Scalar(0)).dump(), "[]");
  EXPECT_EQ(scalar_from_json(Json::parse(R"(["6/4"])"), nullptr), Scalar(Rational(3, 2)));
  EXPECT_THROW(scalar_from_json(Json::parse(R"(["1","2"])"), nullptr), FormatError);
  EXPECT_THROW(scalar_from_json(Json::parse(R"(["1/0"])"), nullptr), FormatError);
  EXPECT_THROW(scalar_from_json(Json::parse("3"), nullptr), FormatError);
}

TEST(Json, HopfRoundTrip) {
  for (auto h : {taft(2), taft(3), e_algebra(2), group_algebra(symmetric_group(3)), v4_monomial()}) {
    Json j = hopf_to_json(h);
    EXPECT_EQ(j["schema"], 1);
    auto back = hopf_from_json(Json::parse(j.dump()));
    EXPECT_TRUE(same_structure(h, back)) << h.family_name();
    EXPECT_EQ(back.labels, h.labels);
    EXPECT_EQ(back.grouplikes, h.grouplikes);
    EXPECT_EQ(back.family.kind, FamilyKind::Generic);
    EXPECT_TRUE(verify_hopf_axioms(back).ok()) << h.family_name();
  }
}

TEST(Json, TaftTwoShape) {
  auto j = hopf_to_json(taft(2));
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["field"], 2);
  // Delta(y) = 1 (x) y + y (x) x
  int y = 2;
  int terms = 0;
  for (const auto& e : j["comult"])
    if (e[0] == y) ++terms;
  EXPECT_EQ(terms, 2);
}

TEST(Json, RejectsBrokenDumps) {
  auto j = hopf_to_json(taft(2));
  auto bad = j;
  bad["schema"] = 2;
  EXPECT_THROW(hopf_from_json(bad), FormatError);
  bad = j;
  bad["mult"][0][2] = 17;
  EXPECT_THROW(hopf_from_json(bad), FormatError);
  bad = j;
  bad.erase("counit");
  EXPECT_THROW(hopf_from_json(bad), FormatError);
  // a consistent but wrong table is ingested and then fails the axioms
  bad = j;
  bad["mult"][1][3] = Json::array({"2"});
  EXPECT_FALSE(verify_hopf_axioms(hopf_from_json(bad)).ok());
}

TEST(Json, CocycleRoundTrip) {
  auto h = taft(2);
  std::vector<Scalar> f{Scalar(1), Scalar(2), Scalar(1), Scalar(Rational(-1, 3))};
  auto a = coboundary(h, f);
  auto back = cocycle_from_json(h, Json::parse(cocycle_to_json(h, a).dump()));
  EXPECT_EQ(back.values, a.values);
  EXPECT_EQ(back.inverse, a.inverse);
  auto j = cocycle_to_json(h, a);
  j["values"][2][2] = Json::array({"5"});
  EXPECT_THROW(cocycle_from_json(h, j), InvalidCocycle);
}

TEST(Json, GroupsAndElements) {
  auto g = symmetric_group(3);
  auto back = group_from_json(group_to_json(g));
  EXPECT_EQ(back.labels(), g.labels());
  EXPECT_EQ(back.table(), g.table());
  EXPECT_THROW(group_from_json(Json::parse(R"({"labels":["e","a"],"table":[[0,1],[1,1]]})")), InvalidGroup);
  auto h = taft(2);
  TElement e = TElement(TMonomial::from({{1, 2}, {0, -1}}), Scalar(Rational(3, 2)));
  auto je = telement_to_json(e, h.labels);
  EXPECT_EQ(je["text"], to_string(e, h.labels));
  EXPECT_EQ(je["terms"][0]["exponents"]["x"], 2);
  EXPECT_EQ(je["terms"][0]["exponents"]["1"], -1);
}

TEST(Json, Reports) {
  Report r;
  r.add("a", true);
  r.add("b", false, "why not");
  auto j = report_to_json(r);
  EXPECT_EQ(j["a"]["pass"], true);
  EXPECT_EQ(j["b"]["detail"], "why not");
  EXPECT_FALSE(j["a"].contains("detail"));
}
