#include <gtest/gtest.h>

#include <set>

#include "hopfgen/group.hpp"

using namespace hopfgen;

namespace {

// |[G,G]| by brute-force closure, independent of the library's routine.
int commutator_order(const FiniteGroup& g) {
  std::set<int> sub{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(sub.begin(), sub.end());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        int c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
        for (int s : cur)
          if (sub.insert(g.mul(s, c)).second) grew = true;
      }
  }
  return static_cast<int>(sub.size());
}

// Tests whether two groups are isomorphic by searching for a bijection that
// preserves element orders and the table, using generated-subgroup BFS.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  // small generating set of a
  std::vector<int> gens;
  std::vector<int> span{a.identity()};
  for (int g = 0; g < a.order() && static_cast<int>(span.size()) < a.order(); ++g) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    gens.push_back(g);
    span = a.generated_subgroup(gens);
  }
  std::vector<int> images(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<int> phi(a.order(), -1);
      phi[a.identity()] = b.identity();
      std::vector<int> frontier{a.identity()};
      for (std::size_t i = 0; i < frontier.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int x = a.mul(frontier[i], gens[j]);
          int y = b.mul(phi[frontier[i]], images[j]);
          if (phi[x] < 0) {
            phi[x] = y;
            frontier.push_back(x);
          } else if (phi[x] != y) {
            return false;
          }
        }
      std::set<int> hit(phi.begin(), phi.end());
      if (static_cast<int>(hit.size()) != a.order()) return false;
      for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
      return true;
    }
    for (int c = 0; c < b.order(); ++c) {
      if (b.element_order(c) != a.element_order(gens[k])) continue;
      images[k] = c;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

TEST(Group, CyclicAndTrivial) {
  auto t = cyclic_group(1);
  EXPECT_EQ(t.order(), 1);
  EXPECT_EQ(t.label(0), "e");
  auto z6 = cyclic_group(6);
  EXPECT_EQ(z6.label(2), "a^2");
  EXPECT_EQ(z6.element_order(z6.index_of("a^2")), 3);
  EXPECT_TRUE(z6.is_abelian());
}

TEST(Group, SymmetricThreeIsNonAbelian) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.label(s3.identity()), "e");
  for (int g = 0; g < 6; ++g) {
    EXPECT_EQ(s3.is_central(g), g == s3.identity());
  }
  EXPECT_NO_THROW(s3.index_of("(1 2 3)"));
}

TEST(Group, RejectsNonAssociativeTable) {
  // Latin square with identity 0 that is not associative
  std::vector<std::vector<int>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup({"e", "a", "b", "c", "d"}, t), InvalidGroup);
  EXPECT_THROW(FiniteGroup({"e", "e"}, {{0, 1}, {1, 0}}), InvalidGroup);
}

TEST(Group, SemidirectA4ByZ2IsS4) {
  auto a4 = alternating_group(4);
  auto z2 = cyclic_group(2);
  Permutation tau{1, 0, 2, 3};
  auto perms = all_permutations(4, true);
  std::vector<int> conj(a4.order());
  for (int i = 0; i < a4.order(); ++i)
    conj[i] = a4.index_of(permutation_label(compose(compose(tau, perms[i]), tau)));
  std::vector<int> ident(a4.order());
  std::iota(ident.begin(), ident.end(), 0);
  auto g = semidirect_product(a4, z2, {ident, conj});
  EXPECT_EQ(g.order(), 24);
  EXPECT_TRUE(isomorphic(g, symmetric_group(4)));
  EXPECT_FALSE(isomorphic(direct_product(a4, z2), symmetric_group(4)));
}

TEST(Group, SemidirectRejectsBadAction) {
  auto z3 = cyclic_group(3), z2 = cyclic_group(2);
  std::vector<int> id{0, 1, 2}, not_auto{0, 2, 2}, inv{0, 2, 1};
  EXPECT_THROW(semidirect_product(z3, z2, {id, not_auto}), InvalidAction);
  // a -> a^{-1} on Z/3 indexed by Z/3 is not a homomorphism Z/3 -> Aut(Z/3)
  EXPECT_THROW(semidirect_product(z3, z3, {id, inv, inv}), InvalidAction);
  auto s3 = semidirect_product(z3, z2, {id, inv});
  EXPECT_TRUE(isomorphic(s3, symmetric_group(3)));
  EXPECT_TRUE(isomorphic(dihedral_group(3), symmetric_group(3)));
}

TEST(Group, SpecStrings) {
  EXPECT_EQ(parse_group_spec("cyclic:6").order(), 6);
  EXPECT_EQ(parse_group_spec("sym:4").order(), 24);
  EXPECT_EQ(parse_group_spec("product:cyclic:2,cyclic:2").order(), 4);
  EXPECT_EQ(parse_group_spec("dihedral:4").order(), 8);
  EXPECT_EQ(parse_group_spec("alt:4").order(), 12);
  EXPECT_EQ(parse_group_spec("quaternion").order(), 8);
  EXPECT_THROW(parse_group_spec("cyclic:x"), FormatError);
  EXPECT_THROW(parse_group_spec("free:2"), FormatError);
  EXPECT_THROW(parse_group_spec("sym:5"), RangeError);  // 120 > default cap
}

TEST(Abelianization, Examples) {
  auto z6 = abelianization(cyclic_group(6));
  EXPECT_EQ(z6.group.order(), 6);
  auto s3 = abelianization(symmetric_group(3));
  EXPECT_EQ(s3.group.factors(), std::vector<long>({2}));
  EXPECT_EQ(s3.commutator_subgroup.size(), 3u);
  auto v4 = abelianization(parse_group_spec("product:cyclic:2,cyclic:2"));
  EXPECT_EQ(v4.group.factors(), std::vector<long>({2, 2}));
  auto z2z3 = abelianization(direct_product(cyclic_group(2), cyclic_group(3)));
  EXPECT_EQ(z2z3.group.factors(), std::vector<long>({6}));
  EXPECT_EQ(abelianization(quaternion_group()).group.factors(), std::vector<long>({2, 2}));
  EXPECT_EQ(abelianization(alternating_group(4)).group.order(), 3);
  EXPECT_EQ(abelianization(dihedral_group(4)).group.order(), 4);
}

TEST(Abelianization, PerfectGroupIsTrivial) {
  setenv("HOPFGEN_MAX_GROUP_ORDER", "60", 1);
  auto a5 = alternating_group(5);
  EXPECT_EQ(abelianization(a5).group.order(), 1);
  unsetenv("HOPFGEN_MAX_GROUP_ORDER");
}

TEST(Abelianization, ProjectionIsHomomorphismWithCommutatorKernel) {
  for (const char* spec : {"sym:3", "sym:4", "dihedral:4", "alt:4", "quaternion", "cyclic:12",
                           "product:cyclic:2,cyclic:4", "product:sym:3,cyclic:2"}) {
    auto g = parse_group_spec(spec);
    auto ab = abelianization(g);
    EXPECT_EQ(ab.group.order() * commutator_order(g), g.order()) << spec;
    int kernel = 0;
    std::set<long> image;
    for (int a = 0; a < g.order(); ++a) {
      if (ab.group.is_zero(ab.projection[a])) ++kernel;
      image.insert(ab.group.index_of(ab.projection[a]));
      for (int b = 0; b < g.order(); ++b)
        EXPECT_EQ(ab.projection[g.mul(a, b)], ab.group.add(ab.projection[a], ab.projection[b])) << spec;
    }
    EXPECT_EQ(kernel, commutator_order(g)) << spec;
    EXPECT_EQ(static_cast<long>(image.size()), ab.group.order()) << spec;
    for (std::size_t i = 1; i < ab.group.factors().size(); ++i)
      EXPECT_EQ(ab.group.factors()[i] % ab.group.factors()[i - 1], 0) << spec;
  }
}

TEST(Abelianization, MultiplicativeOnProducts) {
  std::vector<FiniteGroup> gs = {cyclic_group(2), cyclic_group(3), symmetric_group(3), cyclic_group(4)};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a.order() * b.order() > max_group_order()) continue;
      EXPECT_EQ(abelianization(direct_product(a, b)).group.order(),
                abelianization(a).group.order() * abelianization(b).group.order());
    }
}

TEST(MonomialDatum, Validation) {
  auto f3 = make_field(3);
  auto z3 = cyclic_group(3);
  EXPECT_NO_THROW(validate_monomial_datum(z3, 1, character_from_exponents({0, 1, 2}, f3), f3));
  try {
    validate_monomial_datum(z3, 1, character_from_exponents({0, 2, 1}, f3), f3);
    FAIL();
  } catch (const DatumError& e) {
    EXPECT_NE(std::string(e.what()).find("chi_of_x"), std::string::npos);
  }
  auto s3 = symmetric_group(3);
  auto f2 = make_field(2);
  int t = s3.index_of("(1 2)");
  try {
    validate_monomial_datum(s3, t, character_from_exponents({0, 1, 1, 0, 0, 1}, f2), f2);
    FAIL();
  } catch (const DatumError& e) {
    EXPECT_NE(std::string(e.what()).find("central"), std::string::npos);
  }
  // chi not multiplicative
  EXPECT_THROW(validate_monomial_datum(z3, 1, character_from_exponents({0, 1, 1}, f3), f3), DatumError);
}
