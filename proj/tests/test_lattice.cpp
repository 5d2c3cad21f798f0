#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hopfgen/lattice.hpp"

using namespace hopfgen;

namespace {

std::set<int> commutator_closure(const FiniteGroup& g) {
  std::set<int> c{g.identity()};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) c.insert(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : std::set<int>(c))
      for (int y : std::set<int>(c))
        if (c.insert(g.mul(x, y)).second) grew = true;
  }
  return c;
}

long ab_order(const FiniteGroup& g) { return g.order() / static_cast<long>(commutator_closure(g).size()); }

bool oracle_member(const FiniteGroup& g, const std::set<int>& comm, const IntRow& v) {
  int acc = g.identity();
  for (int x = 0; x < g.order(); ++x) {
    long e = v[x].get_si();
    int p = g.power(x, static_cast<int>(((e % g.order()) + g.order()) % g.order()));
    acc = g.mul(acc, p);
  }
  return comm.count(acc) > 0;
}

std::vector<FiniteGroup> groups() {
  std::vector<FiniteGroup> gs;
  for (int n = 1; n <= 12; ++n) gs.push_back(cyclic_group(n));
  gs.push_back(parse_group_spec("product:cyclic:2,cyclic:2"));
  gs.push_back(symmetric_group(3));
  gs.push_back(symmetric_group(4));
  gs.push_back(dihedral_group(4));
  gs.push_back(alternating_group(4));
  gs.push_back(quaternion_group());
  return gs;
}

// Brute-force HNF of a 2x2 matrix: search unimodular U with small entries.
IntMatrix brute_hnf_2x2(const IntMatrix& m) {
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          if (std::abs(a * d - b * c) != 1) continue;
          IntMatrix h = int_multiply({{a, b}, {c, d}}, m);
          if (h[1][0] == 0 && h[0][0] > 0 && h[1][1] > 0 && h[0][1] >= 0 && h[0][1] < h[1][1]) return h;
        }
  return {};
}

}  // namespace

TEST(Hnf, KnownMatrices) {
  EXPECT_EQ(hnf(int_identity(3)).form, int_identity(3));
  IntMatrix m{{2, 4}, {6, 8}};
  auto r = hnf(m);
  EXPECT_EQ(r.form, brute_hnf_2x2(m));
  EXPECT_EQ(int_multiply(r.transform, m), r.form);
  IntMatrix z(2, IntRow(3, 0));
  EXPECT_EQ(hnf(z).form, z);
  EXPECT_EQ(hnf(z).rank, 0u);
}

TEST(Hnf, FuzzIdempotentUnimodular) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> ent(-9, 9), sz(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int r = sz(rng), c = sz(rng);
    IntMatrix m(r, IntRow(c));
    for (auto& row : m)
      for (auto& x : row) x = ent(rng);
    auto h = hnf(m);
    EXPECT_EQ(int_multiply(h.transform, m), h.form);
    Integer d = int_determinant(h.transform);
    EXPECT_TRUE(d == 1 || d == -1);
    EXPECT_EQ(hnf(h.form).form, h.form);
  }
}

TEST(YGroup, IndexEqualsAbelianizationOrder) {
  for (const auto& g : groups()) {
    auto y = y_group(g);
    EXPECT_EQ(y.index, ab_order(g)) << g.order();
    auto comm = commutator_closure(g);
    for (const auto& row : y.basis) EXPECT_TRUE(oracle_member(g, comm, row));
  }
}

TEST(YGroup, TrivialAndS3) {
  auto t = y_group(cyclic_group(1));
  EXPECT_EQ(t.basis, (IntMatrix{{1}}));
  EXPECT_EQ(t.index, 1);
  EXPECT_EQ(y_group(symmetric_group(3)).index, 2);
}

TEST(YGroup, BasisWithTeIsBasis) {
  for (const auto& g : groups()) {
    auto b = y_basis_with_te(g);
    EXPECT_EQ(lattice_basis(b), y_group(g).basis);
  }
}

TEST(NamedBasis, Cyclic) {
  for (int n = 2; n <= 12; ++n) {
    auto nb = cyclic_named_basis(n);
    EXPECT_TRUE(nb.report.ok()) << n;
    EXPECT_EQ(nb.lattice.index, n);
  }
  auto c4 = cyclic_named_basis(4);
  std::vector<std::string> s;
  for (const auto& v : c4.lattice.basis) s.push_back(lattice_monomial_string(c4.lattice.group, v));
  EXPECT_EQ(s, (std::vector<std::string>{"t[e]", "t[a]^-2*t[a^2]", "t[a]^-3*t[a^3]", "t[e]*t[a]^-4"}));
}

TEST(NamedBasis, ProductsAndSemidirect) {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 4}}) {
    auto nb = product_named_basis(m, n);
    EXPECT_TRUE(nb.report.ok());
    EXPECT_EQ(nb.lattice.index, ab_order(nb.lattice.group));
    EXPECT_EQ(static_cast<int>(nb.lattice.basis.size()), m * n);
  }
  // Z/3 x| Z/2 by inversion is S_3; the action is nontrivial on (Z/3)_ab
  auto z3 = cyclic_group(3), z2 = cyclic_group(2);
  std::vector<std::vector<int>> inv{{0, 1, 2}, {0, 2, 1}};
  EXPECT_THROW(semidirect_named_basis(z3, z2, inv), TrivialActionViolated);
  std::vector<std::vector<int>> triv{{0, 1, 2}, {0, 1, 2}};
  auto nb = semidirect_named_basis(z3, z2, triv);
  EXPECT_TRUE(nb.report.ok());
  EXPECT_EQ(nb.lattice.index, 6);
}

TEST(NamedBasis, Symmetric) {
  for (int n = 3; n <= 4; ++n) {
    auto nb = symmetric_named_basis(n);
    EXPECT_TRUE(nb.report.ok()) << n;
    EXPECT_EQ(nb.lattice.index, 2);
  }
  EXPECT_THROW(named_basis("weird:3"), UnsupportedKind);
  EXPECT_TRUE(named_basis("product:2,3").report.ok());
}

TEST(PQ, GenerationEqualsY) {
  for (const auto& g : groups()) EXPECT_TRUE(pq_generation_check(g).ok()) << g.order();
}

TEST(PQ, Z2Vectors) {
  // P_a = 2e_a and Q_{a,a} = 2e_a + e_e: HNF {e_e, 2e_a}
  auto g = cyclic_group(2);
  EXPECT_EQ(lattice_basis({{0, 2}, {1, 2}}), (IntMatrix{{1, 0}, {0, 2}}));
  EXPECT_EQ(y_group(g).basis, (IntMatrix{{1, 0}, {0, 2}}));
}
