#include <gtest/gtest.h>

#include "hopfgen/cocycle.hpp"

using namespace hopfgen;

namespace {

std::vector<Scalar> taft2_f() {
  // f(1) = 1, f(x) = 2, f(y) = 1, f(xy) = -1/3
  auto h = taft(2);
  std::vector<Scalar> f(h.dim);
  f[h.index_of("1")] = Scalar(1);
  f[h.index_of("x")] = Scalar(2);
  f[h.index_of("y")] = Scalar(1);
  f[h.index_of("xy")] = Scalar(Rational(-1, 3));
  return f;
}

}  // namespace

TEST(Cocycle, TrivialIsSelfInverseAndValid) {
  for (auto h : {taft(3), e_algebra(2), group_algebra(symmetric_group(3))}) {
    auto a = trivial_cocycle(h);
    EXPECT_TRUE(verify_cocycle_condition(h, a.values).ok()) << h.family_name();
    EXPECT_EQ(convolution_inverse(h, a.values), a.values);
    EXPECT_TRUE(is_lazy(h, a.values));
  }
}

TEST(Cocycle, NonNormalizedRejected) {
  auto h = taft(3);
  auto v = trivial_cocycle(h).values;
  v[h.unit][h.unit] = Scalar(2);
  auto rep = verify_cocycle_condition(h, v);
  EXPECT_FALSE(rep.find("normalized")->pass);
  EXPECT_THROW(make_cocycle(h, v), InvalidCocycle);
}

TEST(Cocycle, ZeroFormNotInvertible) {
  auto h = taft(2);
  ScalarMatrix z(h.dim, std::vector<Scalar>(h.dim));
  EXPECT_THROW(convolution_inverse(h, z), NotInvertible);
}

TEST(Cocycle, BrokenConditionDetected) {
  auto h = taft(2);
  auto v = trivial_cocycle(h).values;
  // alpha(y,y) = 1 alone: at (x, y, y) the left side picks up alpha(xy, y) = 0
  v[h.index_of("y")][h.index_of("y")] = Scalar(1);
  auto rep = verify_cocycle_condition(h, v);
  EXPECT_TRUE(rep.find("normalized")->pass);
  EXPECT_FALSE(rep.find("cocycle_condition")->pass);
  EXPECT_THROW(make_cocycle(h, v), InvalidCocycle);
}

TEST(Cocycle, GroupCocyclesLazyWithPointwiseInverse) {
  for (auto g : {symmetric_group(3), cyclic_group(4), parse_group_spec("product:cyclic:2,cyclic:2")}) {
    auto h = group_algebra(g);
    auto a = random_group_cocycle(h, 17);
    EXPECT_TRUE(verify_cocycle_condition(h, a.values).ok());
    EXPECT_TRUE(is_lazy(h, a.values));
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) EXPECT_EQ(a.inverse[i][j] * a.values[i][j], Scalar(1));
    EXPECT_TRUE(verify_convolution_inverse(h, a.values, a.inverse).ok());
  }
}

TEST(Cocycle, SignBicharacterOnKleinIsNotCoboundary) {
  // alpha(g,h)/alpha(h,g) is a coboundary invariant on abelian groups
  auto g = parse_group_spec("product:cyclic:2,cyclic:2");
  auto h = group_algebra(g);
  auto a = random_group_cocycle(h, 3);
  int u = g.index_of("(a,e)"), v = g.index_of("(e,a)");
  EXPECT_EQ(a.values[u][v] * a.inverse[v][u], Scalar(-1));
}

TEST(Cocycle, CoboundaryOnTaftIsNonLazy) {
  auto h = taft(2);
  auto a = coboundary(h, taft2_f());
  EXPECT_TRUE(verify_cocycle_condition(h, a.values).ok());
  EXPECT_TRUE(verify_convolution_inverse(h, a.values, a.inverse).ok());
  EXPECT_FALSE(is_lazy(h, a.values));
}

TEST(Twisted, TrivialCocycleGivesH) {
  auto h = taft(3);
  auto t = twisted_algebra(h, trivial_cocycle(h).values);
  EXPECT_EQ(t.mult, h.mult);
  EXPECT_TRUE(verify_twisted_algebra(h, t).ok());
  auto co = twisted_coinvariants(h);
  ASSERT_EQ(co.size(), 1u);
  EXPECT_EQ(co[0].size(), 1u);
  EXPECT_EQ(co[0].begin()->first, h.unit);
}

TEST(Twisted, CoboundaryTwistIsComoduleAlgebra) {
  auto h = taft(2);
  auto a = coboundary(h, taft2_f());
  auto t = twisted_algebra(h, a.values);
  EXPECT_NE(t.mult, h.mult);
  EXPECT_TRUE(verify_twisted_algebra(h, t).ok());
  // associativity must fail for a non-cocycle
  auto bad = trivial_cocycle(h).values;
  bad[h.index_of("y")][h.index_of("xy")] = Scalar(1);
  EXPECT_FALSE(verify_twisted_algebra(h, twisted_algebra(h, bad)).ok());
}

TEST(Cotwist, TrivialAndGroupCasesUnchanged) {
  auto h = taft(3);
  auto l = cotwist_hopf(h, trivial_cocycle(h));
  EXPECT_TRUE(same_structure(l, h));
  EXPECT_EQ(l.family.kind, FamilyKind::Taft);
  auto gh = group_algebra(symmetric_group(3));
  auto lg = cotwist_hopf(gh, random_group_cocycle(gh, 9));
  EXPECT_TRUE(same_structure(lg, gh));
}

TEST(Cotwist, CoboundaryCotwistIsHopf) {
  auto h = taft(2);
  auto l = cotwist_hopf(h, coboundary(h, taft2_f()));
  EXPECT_TRUE(verify_hopf_axioms(l).ok());
}
