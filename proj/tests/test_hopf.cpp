#include <gtest/gtest.h>

#include "hopfgen/hopf.hpp"

using namespace hopfgen;

namespace {

AlgebraElement basis(int i) { return {{i, Scalar(1)}}; }

Tensor2 comult_tensor(const HopfAlgebra& h, int b) {
  Tensor2 t;
  for (const auto& c : h.comult[b]) accumulate(t, std::make_pair(c.left, c.right), c.coef);
  return t;
}

Tensor2 tensor_product(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b) {
  Tensor2 r;
  for (const auto& [ka, sa] : a)
    for (const auto& [kb, sb] : b)
      for (const auto& [l, cl] : h.product(ka.first, kb.first))
        for (const auto& [rr, cr] : h.product(ka.second, kb.second))
          accumulate(r, std::make_pair(l, rr), sa * sb * cl * cr);
  return r;
}

ScalarMatrix antipode_power(const HopfAlgebra& h, int k) {
  ScalarMatrix m(h.dim, std::vector<Scalar>(h.dim));
  for (int i = 0; i < h.dim; ++i) m[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    ScalarMatrix next(h.dim, std::vector<Scalar>(h.dim));
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j)
        if (!m[i][j].is_zero())
          for (int l = 0; l < h.dim; ++l) next[i][l] += m[i][j] * h.antipode[j][l];
    m = std::move(next);
  }
  return m;
}

}  // namespace

TEST(Taft, AxiomsHold) {
  for (int n = 2; n <= 5; ++n) {
    auto h = taft(n);
    EXPECT_EQ(h.dim, n * n);
    auto rep = verify_hopf_axioms(h);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << n << " " << c.name << " " << c.detail;
  }
}

TEST(Taft, RelationsAndLabels) {
  auto h = taft(3);
  Scalar q = Scalar::q(h.field);
  int x = h.index_of("x"), y = h.index_of("y"), xy = h.index_of("xy");
  EXPECT_EQ(h.multiply(basis(y), basis(x)), (AlgebraElement{{xy, q}}));
  EXPECT_EQ(h.multiply(basis(x), basis(y)), basis(xy));
  EXPECT_TRUE(h.multiply(basis(h.index_of("y^2")), basis(y)).empty());
  EXPECT_EQ(h.multiply(basis(h.index_of("x^2")), basis(x)), basis(h.unit));
  EXPECT_EQ(h.labels[h.unit], "1");
  EXPECT_EQ(h.labels[7], "xy^2");
}

TEST(Taft, CoproductOfYSquared) {
  auto h = taft(3);
  Scalar q = Scalar::q(h.field);
  int y2 = h.index_of("y^2");
  Tensor2 expect;
  accumulate(expect, std::make_pair(h.unit, y2), Scalar(1));
  accumulate(expect, std::make_pair(h.index_of("y"), h.index_of("xy")), Scalar(1) + q);
  accumulate(expect, std::make_pair(y2, h.index_of("x^2")), Scalar(1));
  EXPECT_EQ(comult_tensor(h, y2), expect);
  // Delta(y)^2 computed in H (x) H
  Tensor2 dy = comult_tensor(h, h.index_of("y"));
  EXPECT_EQ(tensor_product(h, dy, dy), expect);
}

TEST(Taft, SweedlerAntipode) {
  auto h = taft(2);
  int y = h.index_of("y"), x = h.index_of("x");
  // S(y) = -y x^{-1} = -y x
  AlgebraElement expect = h.multiply({{y, Scalar(-1)}}, basis(x));
  EXPECT_EQ(h.apply_antipode(basis(y)), expect);
}

TEST(Taft, AntipodePowerIsIdentity) {
  for (int n = 2; n <= 4; ++n) {
    auto h = taft(n);
    auto m = antipode_power(h, 2 * n);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) EXPECT_EQ(m[i][j], Scalar(i == j ? 1 : 0)) << n;
  }
}

TEST(EAlgebra, AxiomsHold) {
  for (int n = 1; n <= 4; ++n) {
    auto h = e_algebra(n);
    EXPECT_EQ(h.dim, 1 << (n + 1));
    auto rep = verify_hopf_axioms(h);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << n << " " << c.name << " " << c.detail;
  }
}

TEST(EAlgebra, SweedlerIsEOne) {
  auto e1 = e_algebra(1);
  auto t2 = taft(2);
  EXPECT_EQ(e1.labels, (std::vector<std::string>{"1", "x", "y1", "xy1"}));
  EXPECT_TRUE(same_structure(e1, t2));
}

TEST(EAlgebra, CoproductOfY12) {
  auto h = e_algebra(2);
  int one = h.unit, x = h.index_of("x"), y1 = h.index_of("y1"), y2 = h.index_of("y2");
  int y12 = h.index_of("y1y2"), xy1 = h.index_of("xy1"), xy2 = h.index_of("xy2");
  Tensor2 expect;
  accumulate(expect, std::make_pair(one, y12), Scalar(1));
  accumulate(expect, std::make_pair(y1, xy2), Scalar(1));
  accumulate(expect, std::make_pair(y2, xy1), Scalar(-1));
  accumulate(expect, std::make_pair(y12, one), Scalar(1));  // x^2 = 1
  EXPECT_EQ(comult_tensor(h, y12), expect);
  EXPECT_EQ(h.multiply(basis(y2), basis(y1)), (AlgebraElement{{y12, Scalar(-1)}}));
  EXPECT_EQ(h.multiply(basis(y1), basis(x)), (AlgebraElement{{xy1, Scalar(-1)}}));
}

TEST(EAlgebra, SignFormulaMatchesProductOfGenerators) {
  for (int n = 1; n <= 4; ++n) {
    auto h = e_algebra(n);
    for (int b = 0; b < h.dim; ++b) {
      if (h.gpart[b] != 0 || h.ypart[b] == 0) continue;
      // y_I = y_{i1} ... y_{ir}; Delta(y_I) = prod Delta(y_i)
      Tensor2 acc = comult_tensor(h, h.unit);
      for (int i = 0; i < n; ++i)
        if (h.ypart[b] >> i & 1) acc = tensor_product(h, acc, comult_tensor(h, h.lookup(0, 1 << i)));
      EXPECT_EQ(acc, comult_tensor(h, b)) << h.labels[b];
    }
  }
}

TEST(GroupAlgebra, Basics) {
  auto t = group_algebra(cyclic_group(1));
  EXPECT_EQ(t.dim, 1);
  for (const char* spec : {"cyclic:5", "sym:3", "dihedral:4", "alt:4", "quaternion", "sym:4"}) {
    auto h = group_algebra(parse_group_spec(spec));
    EXPECT_TRUE(verify_hopf_axioms(h).ok()) << spec;
    for (int g = 0; g < h.dim; ++g) {
      ASSERT_EQ(h.comult[g].size(), 1u);
      EXPECT_EQ(h.comult[g][0].left, g);
      EXPECT_EQ(h.comult[g][0].right, g);
    }
    auto s2 = antipode_power(h, 2);
    for (int i = 0; i < h.dim; ++i) EXPECT_TRUE(s2[i][i].is_one());
  }
}

TEST(GroupAlgebra, Z2MatchesSweedlerGrouplikes) {
  auto kz2 = group_algebra(cyclic_group(2));
  auto sw = taft(2);
  for (int g = 0; g < 2; ++g) EXPECT_EQ(comult_tensor(kz2, g), comult_tensor(sw, g));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) EXPECT_EQ(kz2.product(a, b), sw.product(a, b));
}

TEST(Monomial, TaftDatumGivesTaft) {
  for (int n = 2; n <= 5; ++n) {
    auto f = make_field(n);
    std::vector<long> e;
    for (int k = 0; k < n; ++k) e.push_back(k);
    auto h = monomial_type_I(cyclic_group(n), 1, character_from_exponents(e, f), f);
    EXPECT_TRUE(same_structure(h, taft(n))) << n;
  }
}

TEST(Monomial, KleinFourInstance) {
  auto g = parse_group_spec("product:cyclic:2,cyclic:2");
  auto f = make_field(2);
  int x = g.index_of("(a,e)");
  // chi = projection onto the first factor: chi(a^i, b^j) = (-1)^i
  std::vector<long> e = {0, 0, 1, 1};
  auto h = monomial_type_I(g, x, character_from_exponents(e, f), f);
  EXPECT_EQ(h.dim, 8);
  auto rep = verify_hopf_axioms(h);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  int y = h.index_of("y");
  for (int a = 0; a < 4; ++a) {
    // y g = chi(g) g y
    int gy = h.lookup(a, 1);
    EXPECT_EQ(h.multiply(basis(y), basis(a)), (AlgebraElement{{gy, Scalar(e[a] ? -1 : 1)}}));
  }
}

TEST(Monomial, AntipodeOfY) {
  auto f = make_field(3);
  auto h = monomial_type_I(cyclic_group(3), 1, character_from_exponents({0, 1, 2}, f), f);
  int y = h.index_of("y");
  int x2 = h.index_of("a^2");
  AlgebraElement expect = h.multiply({{y, Scalar(-1)}}, basis(x2));
  EXPECT_EQ(h.apply_antipode(basis(y)), expect);
}

TEST(Axioms, CorruptedTableIsReported) {
  auto h = taft(2);
  int x = h.index_of("x"), y = h.index_of("y"), xy = h.index_of("xy");
  h.mult[static_cast<std::size_t>(y) * h.dim + x] = {{xy, Scalar(1)}};  // yx = xy instead of -xy
  auto rep = verify_hopf_axioms(h);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.find("comult_multiplicative")->pass || rep.find("associativity")->pass);
}

TEST(Center, EAlgebraEvenSubsets) {
  // Z(E(n)) = span{y_I : |I| even}, plus x y_1...y_n when n is even (x y_[n]
  // commutes with x for even n and is killed by every y_j on both sides).
  for (int n = 1; n <= 4; ++n) {
    auto h = e_algebra(n);
    auto z = center(h);
    int expected = (1 << (n - 1)) + (n % 2 == 0 ? 1 : 0);
    EXPECT_EQ(static_cast<int>(z.size()), expected) << n;
    int even_subsets = 0;
    for (const auto& v : z) {
      ASSERT_EQ(v.size(), 1u);
      int b = v.begin()->first;
      if (h.gpart[b] == 0) {
        EXPECT_EQ(__builtin_popcount(h.ypart[b]) % 2, 0);
        ++even_subsets;
      } else {
        EXPECT_EQ(h.ypart[b], (1 << n) - 1);
        EXPECT_EQ(n % 2, 0);
      }
      for (int c = 0; c < h.dim; ++c) EXPECT_EQ(h.multiply(v, basis(c)), h.multiply(basis(c), v));
    }
    EXPECT_EQ(even_subsets, 1 << (n - 1));
  }
}

TEST(Center, TaftAndAbelianGroup) {
  for (int n = 2; n <= 4; ++n) {
    auto z = center(taft(n));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0].size(), 1u);
    EXPECT_EQ(z[0].begin()->first, 0);
  }
  EXPECT_EQ(center(group_algebra(cyclic_group(4))).size(), 4u);
  EXPECT_EQ(center(group_algebra(symmetric_group(3))).size(), 3u);  // class sums
}

TEST(Grading, FamilyDegrees) {
  auto t3 = taft(3);
  auto g = hab_grading(t3);
  EXPECT_EQ(g.group.factors(), std::vector<long>{3});
  EXPECT_EQ(g.degree[t3.index_of("xy^2")], std::vector<long>{0});
  auto e2 = e_algebra(2);
  auto ge = hab_grading(e2);
  EXPECT_EQ(ge.degree[e2.index_of("xy1")], std::vector<long>{0});
  EXPECT_EQ(ge.degree[e2.index_of("y1")], std::vector<long>{1});
  auto s3 = group_algebra(symmetric_group(3));
  auto gs = hab_grading(s3);
  const auto& grp = *s3.family.group;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c = grp.mul(grp.mul(a, b), grp.mul(grp.inverse(a), grp.inverse(b)));
      EXPECT_TRUE(gs.group.is_zero(gs.degree[c]));
    }
  HopfAlgebra generic = t3;
  generic.family.kind = FamilyKind::Generic;
  EXPECT_THROW(hab_grading(generic), UnsupportedFamily);
}

TEST(Grading, MultiplicativeOnMonomialProducts) {
  std::vector<HopfAlgebra> hs = {taft(3), taft(4), e_algebra(2), group_algebra(symmetric_group(3))};
  auto f = make_field(2);
  auto v4 = parse_group_spec("product:cyclic:2,cyclic:2");
  hs.push_back(monomial_type_I(v4, v4.index_of("(a,e)"), character_from_exponents({0, 0, 1, 1}, f), f));
  for (const auto& h : hs) {
    auto g = hab_grading(h);
    for (int a = 0; a < h.dim; ++a)
      for (int b = 0; b < h.dim; ++b) {
        int c = h.product_index(a, b);
        if (c < 0) continue;
        EXPECT_EQ(g.degree[c], g.group.add(g.degree[a], g.degree[b])) << h.family_name();
      }
  }
}
