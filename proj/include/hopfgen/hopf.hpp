#pragma once

// Finite-dimensional Hopf algebras given by structure constants: the Taft,
// E(n), monomial type I and group-algebra families, axiom verification, the
// center and the H_ab-grading.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfgen/arith.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/linalg.hpp"
#include "hopfgen/report.hpp"

namespace hopfgen {

using AlgebraElement = std::map<int, Scalar>;
using Tensor2 = std::map<std::pair<int, int>, Scalar>;
using Tensor3 = std::map<std::tuple<int, int, int>, Scalar>;

template <class Map, class Key>
inline void accumulate(Map& m, const Key& key, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) m.erase(it);
  }
}

enum class FamilyKind { Taft, E, Monomial, Group, Generic };

struct FamilyTag {
  FamilyKind kind = FamilyKind::Generic;
  int n = 0;                                  ///< Taft/E parameter, or the order of x
  std::shared_ptr<const FiniteGroup> group;   ///< monomial and group families
  int x = -1;                                 ///< monomial: index of x in G
  std::vector<long> chi;                      ///< monomial: chi(g) = q^{chi[g]}
};

/// Structure constants of a product on a basis of size d: entry i*d + j lists
/// the terms of b_i b_j.
using MultTable = std::vector<std::vector<std::pair<int, Scalar>>>;

struct ComultTerm {
  int left;
  int right;
  Scalar coef;
};

/// Structure constants of a Hopf algebra over Q(q) on a pointed basis.
///
/// Family-built algebras also record, for every basis element, its group-like
/// part (`gpart`, a basis index) and its "y-part" (`ypart`: the y-degree j for
/// x^i y^j and g y^j, the subset bitmask I for x^a y_I, 0 for group elements).
struct HopfAlgebra {
  FieldPtr field;
  int dim = 0;
  std::vector<std::string> labels;
  MultTable mult;
  std::vector<std::vector<ComultTerm>> comult;
  std::vector<Scalar> counit;
  ScalarMatrix antipode;  ///< antipode[i][k]: coefficient of b_k in S(b_i)
  int unit = 0;
  std::vector<int> grouplikes;
  FamilyTag family;
  std::vector<int> gpart;
  std::vector<int> ypart;

  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const {
    return mult[static_cast<std::size_t>(i) * dim + j];
  }

  /// Index of the single basis element b_i b_j is proportional to, or -1 if zero.
  /// Only meaningful for family-built algebras (products are monomial).
  int product_index(int i, int j) const {
    const auto& p = product(i, j);
    return p.empty() ? -1 : p.front().first;
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
      if (labels[i] == label) return i;
    throw UnknownLabel("no basis element '" + label + "'");
  }

  bool is_grouplike(int i) const {
    for (int g : grouplikes)
      if (g == i) return true;
    return false;
  }

  /// Basis index with the given group-like part and y-part, or -1.
  int lookup(int g, int y) const {
    for (int i = 0; i < dim; ++i)
      if (gpart[i] == g && ypart[i] == y) return i;
    return -1;
  }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r;
    for (const auto& [i, s] : a)
      for (const auto& [j, t] : b)
        for (const auto& [k, c] : product(i, j)) accumulate(r, k, s * t * c);
    return r;
  }

  AlgebraElement apply_antipode(const AlgebraElement& a) const {
    AlgebraElement r;
    for (const auto& [i, s] : a)
      for (int k = 0; k < dim; ++k) accumulate(r, k, s * antipode[i][k]);
    return r;
  }

  std::string family_name() const {
    switch (family.kind) {
      case FamilyKind::Taft: return "taft(" + std::to_string(family.n) + ")";
      case FamilyKind::E: return "e(" + std::to_string(family.n) + ")";
      case FamilyKind::Monomial: return "monomial(order " + std::to_string(family.group->order()) +
                                        ", n " + std::to_string(family.n) + ")";
      case FamilyKind::Group: return "group(order " + std::to_string(family.group->order()) + ")";
      case FamilyKind::Generic: return "generic";
    }
    return "generic";
  }
};

/// True iff mult, comult, counit and antipode coincide entry by entry.
inline bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim != b.dim || a.unit != b.unit || a.counit != b.counit || a.antipode != b.antipode)
    return false;
  for (std::size_t k = 0; k < a.mult.size(); ++k)
    if (a.mult[k] != b.mult[k]) return false;
  for (int i = 0; i < a.dim; ++i) {
    Tensor2 x, y;
    for (const auto& t : a.comult[i]) accumulate(x, std::make_pair(t.left, t.right), t.coef);
    for (const auto& t : b.comult[i]) accumulate(y, std::make_pair(t.left, t.right), t.coef);
    if (x != y) return false;
  }
  return true;
}

/// Antipode as the convolution inverse of the identity: sum S(b_1) b_2 = eps(b) 1.
/// The system is triangular for a pointed basis order and is solved sparsely.
inline ScalarMatrix compute_antipode(const HopfAlgebra& h) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  std::vector<SparseEquation> eqs;
  for (int b = 0; b < h.dim; ++b) {
    std::vector<SparseEquation> rows(d);
    rows[h.unit].rhs = h.counit[b];
    for (const auto& t : h.comult[b])
      for (int m = 0; m < h.dim; ++m)
        for (const auto& [c, coef] : h.product(m, t.right))
          rows[c].terms.emplace_back(static_cast<std::size_t>(t.left) * d + m, t.coef * coef);
    for (auto& r : rows)
      if (!r.terms.empty() || !r.rhs.is_zero()) eqs.push_back(std::move(r));
  }
  auto sol = solve_sparse(d * d, std::move(eqs));
  if (!sol) throw NotInvertible("identity map has no convolution inverse");
  ScalarMatrix s(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) s[i][k] = (*sol)[i * d + k];
  return s;
}

namespace detail {

inline std::string power_label(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

inline void set_product(HopfAlgebra& h, int i, int j, int k, const Scalar& c) {
  auto& slot = h.mult[static_cast<std::size_t>(i) * h.dim + j];
  slot.clear();
  if (k >= 0 && !c.is_zero()) slot.emplace_back(k, c);
}

inline void init_tables(HopfAlgebra& h) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  h.mult.assign(d * d, {});
  h.comult.assign(d, {});
  h.counit.assign(d, Scalar(0));
}

// Number of pairs (i in a, j in b) with i > j, for bitmask subsets.
inline int crossing_pairs(unsigned a, unsigned b) {
  int count = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(a >> i & 1u)) continue;
    for (int j = 0; j < i; ++j)
      if (b >> j & 1u) ++count;
  }
  return count;
}

}  // namespace detail

/// The n^2-dimensional Taft algebra: x^n = 1, y^n = 0, yx = q xy over Q(zeta_n).
/// Basis x^i y^j at index j*n + i.
inline HopfAlgebra taft(int n) {
  if (n < 2) throw RangeError("taft(n) needs n >= 2");
  HopfAlgebra h;
  h.field = make_field(n);
  h.dim = n * n;
  h.family.kind = FamilyKind::Taft;
  h.family.n = n;
  detail::init_tables(h);
  auto idx = [n](int i, int j) { return j * n + ((i % n) + n) % n; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      std::string l = detail::power_label("x", i) + detail::power_label("y", j);
      h.labels.push_back(l.empty() ? "1" : l);
      h.gpart.push_back(i);
      h.ypart.push_back(j);
    }
  for (int i = 0; i < n; ++i) h.grouplikes.push_back(i);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d)
        for (int c = 0; c < n; ++c) {
          // (x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}
          if (b + d >= n) continue;
          detail::set_product(h, idx(a, b), idx(c, d), idx(a + c, b + d),
                              Scalar::q_power(h.field, static_cast<long>(b) * c));
        }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r <= j; ++r)
        h.comult[idx(i, j)].push_back({idx(i, r), idx(i + r, j - r), q_binomial(j, r, h.field)});
      if (j == 0) h.counit[idx(i, j)] = 1;
    }
  h.antipode = compute_antipode(h);
  return h;
}

/// E(n): x^2 = 1, y_i^2 = 0, x y_i = -y_i x, y_i y_j = -y_j y_i; dimension 2^{n+1}.
/// Basis x^a y_I ordered by |I|, then by I, then by a.
inline HopfAlgebra e_algebra(int n) {
  if (n < 1) throw RangeError("e_algebra(n) needs n >= 1");
  if (n > 12) throw RangeError("e_algebra(n) is limited to n <= 12");
  HopfAlgebra h;
  h.field = make_field(2);
  h.dim = 1 << (n + 1);
  h.family.kind = FamilyKind::E;
  h.family.n = n;
  detail::init_tables(h);
  std::vector<unsigned> masks;
  for (int k = 0; k <= n; ++k)
    for (unsigned m = 0; m < (1u << n); ++m)
      if (__builtin_popcount(m) == k) masks.push_back(m);
  std::map<std::pair<int, unsigned>, int> index;
  for (unsigned m : masks)
    for (int a = 0; a < 2; ++a) {
      int id = static_cast<int>(h.labels.size());
      index[{a, m}] = id;
      std::string l = a ? "x" : "";
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) l += "y" + std::to_string(i + 1);
      h.labels.push_back(l.empty() ? "1" : l);
      h.gpart.push_back(a);
      h.ypart.push_back(static_cast<int>(m));
    }
  h.grouplikes = {0, 1};
  for (const auto& [ki, i] : index)
    for (const auto& [kj, j] : index) {
      auto [a, mi] = ki;
      auto [b, mj] = kj;
      if (mi & mj) continue;
      // x^a y_I x^b y_J = (-1)^{b|I|} x^{a+b} y_I y_J, y_I y_J = (-1)^{cross(I,J)} y_{I u J}
      int sign_exp = b * __builtin_popcount(mi) + detail::crossing_pairs(mi, mj);
      detail::set_product(h, i, j, index.at({(a + b) % 2, mi | mj}), Scalar(sign_exp % 2 ? -1 : 1));
    }
  for (const auto& [key, id] : index) {
    auto [a, mi] = key;
    for (unsigned mj = mi;; mj = (mj - 1) & mi) {
      // J subset of I, with complement J^c in I
      unsigned jc = mi & ~mj;
      int m_j = detail::crossing_pairs(mj, jc);
      int k = __builtin_popcount(mj);
      h.comult[id].push_back(
          {index.at({a, mj}), index.at({(a + k) % 2, jc}), Scalar(m_j % 2 ? -1 : 1)});
      if (mj == 0) break;
    }
    if (mi == 0) h.counit[id] = 1;
  }
  h.antipode = compute_antipode(h);
  return h;
}

/// Group algebra k[G] over the given field (default Q).
inline HopfAlgebra group_algebra(const FiniteGroup& g, FieldPtr field = nullptr) {
  HopfAlgebra h;
  h.field = field ? field : make_field(1);
  h.dim = g.order();
  h.family.kind = FamilyKind::Group;
  h.family.group = std::make_shared<const FiniteGroup>(g);
  detail::init_tables(h);
  h.labels = g.labels();
  h.unit = g.identity();
  for (int a = 0; a < g.order(); ++a) {
    h.grouplikes.push_back(a);
    h.gpart.push_back(a);
    h.ypart.push_back(0);
    h.comult[a].push_back({a, a, Scalar(1)});
    h.counit[a] = 1;
    for (int b = 0; b < g.order(); ++b) detail::set_product(h, a, b, g.mul(a, b), Scalar(1));
  }
  // unit first in the pointed order
  if (h.unit != 0) std::swap(h.grouplikes[0], h.grouplikes[h.unit]);
  h.antipode.assign(h.dim, std::vector<Scalar>(h.dim));
  for (int a = 0; a < g.order(); ++a) h.antipode[a][g.inverse(a)] = 1;
  return h;
}

/// Monomial Hopf algebra of type I for a datum (G, x, chi) over Q(zeta_n),
/// n = order(x).  Basis g y^i at index i*|G| + g.
inline HopfAlgebra monomial_type_I(const FiniteGroup& g, int x, const Character& chi,
                                   const FieldPtr& field) {
  validate_monomial_datum(g, x, chi, field);
  const int n = field->n, m = g.order();
  HopfAlgebra h;
  h.field = field;
  h.dim = n * m;
  h.family.kind = FamilyKind::Monomial;
  h.family.n = n;
  h.family.group = std::make_shared<const FiniteGroup>(g);
  h.family.x = x;
  for (const auto& v : chi.values) {
    long e = -1;
    for (long k = 0; k < n; ++k)
      if (Scalar::q_power(field, k) == v) e = k;
    if (e < 0) throw DatumError("chi_power: value is not a power of q");
    h.family.chi.push_back(e);
  }
  detail::init_tables(h);
  h.unit = g.identity();
  auto idx = [m](int gi, int i) { return i * m + gi; };
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      const std::string& gl = g.label(a);
      std::string l = i == 0 ? gl : (a == g.identity() ? "" : gl) + detail::power_label("y", i);
      h.labels.push_back(l);
      h.gpart.push_back(a);
      h.ypart.push_back(i);
    }
  for (int a = 0; a < m; ++a) h.grouplikes.push_back(a);
  if (h.unit != 0) std::swap(h.grouplikes[0], h.grouplikes[h.unit]);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < m; ++b) {
          if (i + j >= n) continue;
          // (g y^i)(h y^j) = chi(h)^i gh y^{i+j}
          detail::set_product(h, idx(a, i), idx(b, j), idx(g.mul(a, b), i + j),
                              Scalar::q_power(field, h.family.chi[b] * i));
        }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      for (int r = 0; r <= i; ++r)
        h.comult[idx(a, i)].push_back(
            {idx(a, r), idx(g.mul(a, g.power(x, r)), i - r), q_binomial(i, r, field)});
      if (i == 0) h.counit[idx(a, i)] = 1;
    }
  h.antipode = compute_antipode(h);
  return h;
}

// ---------------------------------------------------------------------------
// Axioms

namespace detail {

inline Tensor2 comult_of(const HopfAlgebra& h, const AlgebraElement& a) {
  Tensor2 r;
  for (const auto& [i, s] : a)
    for (const auto& t : h.comult[i]) accumulate(r, std::make_pair(t.left, t.right), s * t.coef);
  return r;
}

inline std::string describe(const HopfAlgebra& h, int i) { return h.labels[i]; }

}  // namespace detail

/// Exhaustive checks of the Hopf algebra axioms on basis elements.  The five
/// core checks are coassociativity, counit, comult_multiplicative,
/// counit_multiplicative and antipode; associativity and unit are reported too.
inline Report verify_hopf_axioms(const HopfAlgebra& h) {
  Report rep;
  const int d = h.dim;
  auto first_failure = [&](const std::function<std::optional<std::string>(std::size_t)>& check,
                           std::size_t count) {
    std::vector<std::optional<std::string>> found(count);
    parallel_for(count, [&](std::size_t k) { found[k] = check(k); });
    for (auto& f : found)
      if (f) return f;
    return std::optional<std::string>{};
  };

  auto assoc = first_failure(
      [&](std::size_t k) -> std::optional<std::string> {
        int a = static_cast<int>(k) / d, b = static_cast<int>(k) % d;
        AlgebraElement ab = h.multiply({{a, Scalar(1)}}, {{b, Scalar(1)}});
        for (int c = 0; c < d; ++c) {
          AlgebraElement l = h.multiply(ab, {{c, Scalar(1)}});
          AlgebraElement r = h.multiply({{a, Scalar(1)}}, h.multiply({{b, Scalar(1)}}, {{c, Scalar(1)}}));
          if (l != r) return "(" + h.labels[a] + " " + h.labels[b] + ") " + h.labels[c];
        }
        return std::nullopt;
      },
      static_cast<std::size_t>(d) * d);
  rep.add("associativity", !assoc, assoc.value_or(""));

  std::optional<std::string> unit_fail;
  for (int a = 0; a < d && !unit_fail; ++a) {
    AlgebraElement e{{a, Scalar(1)}};
    if (h.multiply({{h.unit, Scalar(1)}}, e) != e || h.multiply(e, {{h.unit, Scalar(1)}}) != e)
      unit_fail = h.labels[a];
  }
  rep.add("unit", !unit_fail, unit_fail.value_or(""));

  auto coassoc = first_failure(
      [&](std::size_t k) -> std::optional<std::string> {
        Tensor3 l, r;
        for (const auto& t : h.comult[k]) {
          for (const auto& u : h.comult[t.left])
            accumulate(l, std::make_tuple(u.left, u.right, t.right), t.coef * u.coef);
          for (const auto& u : h.comult[t.right])
            accumulate(r, std::make_tuple(t.left, u.left, u.right), t.coef * u.coef);
        }
        if (l != r) return h.labels[k];
        return std::nullopt;
      },
      static_cast<std::size_t>(d));
  rep.add("coassociativity", !coassoc, coassoc.value_or(""));

  std::optional<std::string> counit_fail;
  for (int b = 0; b < d && !counit_fail; ++b) {
    AlgebraElement l, r, e{{b, Scalar(1)}};
    for (const auto& t : h.comult[b]) {
      accumulate(l, t.right, t.coef * h.counit[t.left]);
      accumulate(r, t.left, t.coef * h.counit[t.right]);
    }
    if (l != e || r != e) counit_fail = h.labels[b];
  }
  rep.add("counit", !counit_fail, counit_fail.value_or(""));

  auto mult_fail = first_failure(
      [&](std::size_t k) -> std::optional<std::string> {
        int a = static_cast<int>(k) / d, b = static_cast<int>(k) % d;
        Tensor2 lhs = detail::comult_of(h, h.multiply({{a, Scalar(1)}}, {{b, Scalar(1)}}));
        Tensor2 rhs;
        for (const auto& s : h.comult[a])
          for (const auto& t : h.comult[b])
            for (const auto& [l, cl] : h.product(s.left, t.left))
              for (const auto& [r, cr] : h.product(s.right, t.right))
                accumulate(rhs, std::make_pair(l, r), s.coef * t.coef * cl * cr);
        if (lhs != rhs) return h.labels[a] + " * " + h.labels[b];
        return std::nullopt;
      },
      static_cast<std::size_t>(d) * d);
  rep.add("comult_multiplicative", !mult_fail, mult_fail.value_or(""));

  std::optional<std::string> eps_fail;
  for (int a = 0; a < d && !eps_fail; ++a) {
    if (h.counit[h.unit] != Scalar(1)) eps_fail = "eps(1) != 1";
    for (int b = 0; b < d && !eps_fail; ++b) {
      Scalar v(0);
      for (const auto& [k, c] : h.product(a, b)) v += c * h.counit[k];
      if (v != h.counit[a] * h.counit[b]) eps_fail = h.labels[a] + " * " + h.labels[b];
    }
  }
  rep.add("counit_multiplicative", !eps_fail, eps_fail.value_or(""));

  std::optional<std::string> s_fail;
  for (int b = 0; b < d && !s_fail; ++b) {
    AlgebraElement left, right, expect;
    accumulate(expect, h.unit, h.counit[b]);
    for (const auto& t : h.comult[b]) {
      for (int m = 0; m < d; ++m) {
        if (!h.antipode[t.left][m].is_zero())
          for (const auto& [k, c] : h.product(m, t.right))
            accumulate(left, k, t.coef * h.antipode[t.left][m] * c);
        if (!h.antipode[t.right][m].is_zero())
          for (const auto& [k, c] : h.product(t.left, m))
            accumulate(right, k, t.coef * h.antipode[t.right][m] * c);
      }
    }
    if (left != expect || right != expect) s_fail = h.labels[b];
  }
  rep.add("antipode", !s_fail, s_fail.value_or(""));

  std::optional<std::string> g_fail;
  for (int g : h.grouplikes) {
    if (h.comult[g].size() != 1 || h.comult[g][0].left != g || h.comult[g][0].right != g ||
        !h.comult[g][0].coef.is_one() || !h.counit[g].is_one())
      g_fail = h.labels[g];
  }
  if (h.grouplikes.empty() || h.grouplikes.front() != h.unit) g_fail = "unit is not the first group-like";
  rep.add("grouplikes", !g_fail, g_fail.value_or(""));
  return rep;
}

// ---------------------------------------------------------------------------
// Center and grading

/// Basis of Z(H) from the linear system [z, b] = 0 (reduced echelon basis).
inline std::vector<AlgebraElement> center(const HopfAlgebra& h) {
  const int d = h.dim;
  ScalarMatrix rows;
  for (int b = 0; b < d; ++b) {
    std::vector<std::vector<Scalar>> block(d, std::vector<Scalar>(d));
    for (int i = 0; i < d; ++i) {
      for (const auto& [k, c] : h.product(i, b)) block[k][i] += c;
      for (const auto& [k, c] : h.product(b, i)) block[k][i] -= c;
    }
    for (auto& r : block)
      for (const auto& s : r)
        if (!s.is_zero()) {
          rows.push_back(std::move(r));
          break;
        }
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : nullspace(rows, static_cast<std::size_t>(d))) {
    AlgebraElement z;
    for (int i = 0; i < d; ++i) accumulate(z, i, v[i]);
    out.push_back(std::move(z));
  }
  return out;
}

struct HabGrading {
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup::Element> degree;  ///< basis index -> H_ab element
};

/// H_ab and the degree of every basis element under H -> k[H_ab], y -> 0.
inline HabGrading hab_grading(const HopfAlgebra& h) {
  HabGrading g;
  switch (h.family.kind) {
    case FamilyKind::Taft:
      g.group = FiniteAbelianGroup(std::vector<long>{h.family.n});
      for (int b = 0; b < h.dim; ++b) g.degree.push_back(g.group.reduce({h.gpart[b] + h.ypart[b]}));
      return g;
    case FamilyKind::E:
      g.group = FiniteAbelianGroup(std::vector<long>{2});
      for (int b = 0; b < h.dim; ++b)
        g.degree.push_back(g.group.reduce({h.gpart[b] + __builtin_popcount(h.ypart[b])}));
      return g;
    case FamilyKind::Monomial:
    case FamilyKind::Group: {
      auto ab = abelianization(*h.family.group);
      g.group = ab.group;
      for (int b = 0; b < h.dim; ++b) {
        auto deg = ab.projection[h.gpart[b]];
        if (h.family.kind == FamilyKind::Monomial)
          deg = g.group.add(deg, g.group.scale(ab.projection[h.family.x], h.ypart[b]));
        g.degree.push_back(deg);
      }
      return g;
    }
    case FamilyKind::Generic: break;
  }
  throw UnsupportedFamily("H_ab grading needs a family-built Hopf algebra");
}

}  // namespace hopfgen
