#pragma once

// Two-cocycles on H as dense basis matrices: verification, convolution inverse,
// laziness, the twisted comodule algebra and the cotwisted Hopf algebra.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfgen/errors.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/linalg.hpp"
#include "hopfgen/report.hpp"

namespace hopfgen {

struct TwoCocycle {
  ScalarMatrix values;   ///< alpha(b_i, b_j)
  ScalarMatrix inverse;  ///< convolution inverse
};

/// Convolution inverse of a bilinear form: sum a(x1,y1) b(x2,y2) = eps(x) eps(y).
inline ScalarMatrix convolution_inverse(const HopfAlgebra& h, const ScalarMatrix& a) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  std::vector<SparseEquation> eqs;
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y) {
      SparseEquation eq;
      eq.rhs = h.counit[x] * h.counit[y];
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          const Scalar& v = a[s.left][t.left];
          if (v.is_zero()) continue;
          eq.terms.emplace_back(static_cast<std::size_t>(s.right) * d + t.right, s.coef * t.coef * v);
        }
      eqs.push_back(std::move(eq));
    }
  auto sol = solve_sparse(d * d, std::move(eqs));
  if (!sol) throw NotInvertible("bilinear form has no convolution inverse");
  ScalarMatrix inv(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv[i][j] = (*sol)[i * d + j];
  return inv;
}

/// Normalization and the cocycle condition
/// alpha(x1,y1) alpha(x2 y2, z) = alpha(y1,z1) alpha(x, y2 z2) on all basis triples.
inline Report verify_cocycle_condition(const HopfAlgebra& h, const ScalarMatrix& a) {
  Report rep;
  const int d = h.dim;
  std::string norm_fail;
  for (int b = 0; b < d && norm_fail.empty(); ++b)
    if (a[b][h.unit] != h.counit[b] || a[h.unit][b] != h.counit[b]) norm_fail = h.labels[b];
  rep.add("normalized", norm_fail.empty(), norm_fail);

  // (x, y) -> sum alpha(x1,y1) (x2 y2) as a vector over the basis
  auto twisted = [&](int x, int y) {
    AlgebraElement r;
    for (const auto& s : h.comult[x])
      for (const auto& t : h.comult[y]) {
        const Scalar& v = a[s.left][t.left];
        if (v.is_zero()) continue;
        for (const auto& [k, c] : h.product(s.right, t.right)) accumulate(r, k, s.coef * t.coef * v * c);
      }
    return r;
  };
  std::vector<std::optional<std::string>> fail(static_cast<std::size_t>(d) * d);
  parallel_for(fail.size(), [&](std::size_t idx) {
    int x = static_cast<int>(idx) / d, y = static_cast<int>(idx) % d;
    AlgebraElement xy = twisted(x, y);
    for (int z = 0; z < d; ++z) {
      Scalar lhs(0), rhs(0);
      for (const auto& [k, c] : xy) lhs += c * a[k][z];
      for (const auto& s : h.comult[y])
        for (const auto& t : h.comult[z]) {
          const Scalar& v = a[s.left][t.left];
          if (v.is_zero()) continue;
          for (const auto& [k, c] : h.product(s.right, t.right)) rhs += s.coef * t.coef * v * c * a[x][k];
        }
      if (lhs != rhs) {
        fail[idx] = "(" + h.labels[x] + ", " + h.labels[y] + ", " + h.labels[z] + ")";
        return;
      }
    }
  });
  std::string first;
  for (auto& f : fail)
    if (f) {
      first = *f;
      break;
    }
  rep.add("cocycle_condition", first.empty(), first);
  return rep;
}

/// Both convolution identities alpha * beta = beta * alpha = eps (x) eps.
inline Report verify_convolution_inverse(const HopfAlgebra& h, const ScalarMatrix& a, const ScalarMatrix& b) {
  Report rep;
  std::string lf, rf;
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y) {
      Scalar l(0), r(0);
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          Scalar c = s.coef * t.coef;
          l += c * a[s.left][t.left] * b[s.right][t.right];
          r += c * b[s.left][t.left] * a[s.right][t.right];
        }
      Scalar e = h.counit[x] * h.counit[y];
      if (l != e && lf.empty()) lf = h.labels[x] + ", " + h.labels[y];
      if (r != e && rf.empty()) rf = h.labels[x] + ", " + h.labels[y];
    }
  rep.add("alpha_times_inverse", lf.empty(), lf);
  rep.add("inverse_times_alpha", rf.empty(), rf);
  return rep;
}

/// Validates a cocycle and computes its inverse; InvalidCocycle / NotInvertible.
inline TwoCocycle make_cocycle(const HopfAlgebra& h, ScalarMatrix values, bool verify = true) {
  if (static_cast<int>(values.size()) != h.dim) throw InvalidCocycle("matrix has wrong size");
  for (const auto& row : values)
    if (static_cast<int>(row.size()) != h.dim) throw InvalidCocycle("matrix has wrong size");
  if (verify) {
    auto rep = verify_cocycle_condition(h, values);
    for (const auto& c : rep.checks)
      if (!c.pass) throw InvalidCocycle(c.name + " fails at " + c.detail);
  }
  TwoCocycle a;
  a.inverse = convolution_inverse(h, values);
  a.values = std::move(values);
  return a;
}

/// alpha_0(x, y) = eps(x) eps(y).
inline TwoCocycle trivial_cocycle(const HopfAlgebra& h) {
  ScalarMatrix v(h.dim, std::vector<Scalar>(h.dim));
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) v[i][j] = h.counit[i] * h.counit[j];
  TwoCocycle a;
  a.inverse = v;
  a.values = std::move(v);
  return a;
}

/// Coboundary of a convolution-invertible f with f(1) = 1:
/// alpha(x, y) = f(x1) f(y1) f^{-1}(x2 y2).
inline TwoCocycle coboundary(const HopfAlgebra& h, const std::vector<Scalar>& f) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  if (f.size() != d || f[h.unit] != Scalar(1)) throw InvalidCocycle("coboundary needs f(1) = 1");
  std::vector<SparseEquation> eqs;
  for (int x = 0; x < h.dim; ++x) {
    SparseEquation eq;
    eq.rhs = h.counit[x];
    for (const auto& s : h.comult[x])
      if (!f[s.left].is_zero()) eq.terms.emplace_back(static_cast<std::size_t>(s.right), s.coef * f[s.left]);
    eqs.push_back(std::move(eq));
  }
  auto finv = solve_sparse(d, std::move(eqs));
  if (!finv) throw NotInvertible("f has no convolution inverse");
  ScalarMatrix v(d, std::vector<Scalar>(d));
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y)
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          Scalar c = s.coef * t.coef * f[s.left] * f[t.left];
          if (c.is_zero()) continue;
          for (const auto& [k, m] : h.product(s.right, t.right)) v[x][y] += c * m * (*finv)[k];
        }
  return make_cocycle(h, std::move(v));
}

/// Seeded cocycle on a group algebra: a random coboundary times a sign
/// bicharacter pulled back from G_ab (nontrivial when G_ab has even order).
inline TwoCocycle random_group_cocycle(const HopfAlgebra& h, std::uint64_t seed) {
  if (h.family.kind != FamilyKind::Group) throw UnsupportedFamily("random_group_cocycle needs a group algebra");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 7);
  std::vector<Scalar> f(h.dim);
  for (int g = 0; g < h.dim; ++g) {
    Rational r(num(rng), num(rng));
    r.canonicalize();
    if (num(rng) % 2) r = -r;
    f[g] = g == h.unit ? Scalar(1) : Scalar(r);
  }
  TwoCocycle base = coboundary(h, f);
  const FiniteGroup& grp = *h.family.group;
  auto ab = abelianization(grp);
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < ab.group.factors().size(); ++i)
    if (ab.group.factors()[i] % 2 == 0) even.push_back(i);
  if (even.empty()) return base;
  std::size_t i0 = even.front(), i1 = even.back();
  ScalarMatrix v = base.values;
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b)
      if ((ab.projection[a][i0] * ab.projection[b][i1]) % 2) v[a][b] = -v[a][b];
  return make_cocycle(h, std::move(v));
}

/// sum alpha(x1,y1) x2 y2 = sum x1 y1 alpha(x2,y2) for all basis pairs.
inline bool is_lazy(const HopfAlgebra& h, const ScalarMatrix& a) {
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y) {
      AlgebraElement l, r;
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          Scalar c = s.coef * t.coef;
          if (!a[s.left][t.left].is_zero())
            for (const auto& [k, m] : h.product(s.right, t.right)) accumulate(l, k, c * m * a[s.left][t.left]);
          if (!a[s.right][t.right].is_zero())
            for (const auto& [k, m] : h.product(s.left, t.left)) accumulate(r, k, c * m * a[s.right][t.right]);
        }
      if (l != r) return false;
    }
  return true;
}

/// The comodule algebra alpha-H on the symbols u_b: u_x u_y = alpha(x1,y1) u_{x2 y2},
/// coaction u_x -> u_{x1} (x) x2.
struct TwistedAlgebra {
  int dim = 0;
  int unit = 0;
  MultTable mult;
};

inline TwistedAlgebra twisted_algebra(const HopfAlgebra& h, const ScalarMatrix& a) {
  TwistedAlgebra t;
  t.dim = h.dim;
  t.unit = h.unit;
  t.mult.assign(static_cast<std::size_t>(h.dim) * h.dim, {});
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y) {
      AlgebraElement r;
      for (const auto& s : h.comult[x])
        for (const auto& u : h.comult[y]) {
          const Scalar& v = a[s.left][u.left];
          if (v.is_zero()) continue;
          for (const auto& [k, m] : h.product(s.right, u.right)) accumulate(r, k, s.coef * u.coef * v * m);
        }
      auto& slot = t.mult[static_cast<std::size_t>(x) * h.dim + y];
      for (const auto& [k, c] : r) slot.emplace_back(k, c);
    }
  return t;
}

/// Associativity, unit, and the coaction being an algebra map.
inline Report verify_twisted_algebra(const HopfAlgebra& h, const TwistedAlgebra& t) {
  Report rep;
  const int d = t.dim;
  auto mul = [&](const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [i, s] : a)
      for (const auto& [j, u] : b)
        for (const auto& [k, c] : t.mult[static_cast<std::size_t>(i) * d + j]) accumulate(r, k, s * u * c);
    return r;
  };
  std::string af, uf, cf;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      AlgebraElement xy = mul({{x, Scalar(1)}}, {{y, Scalar(1)}});
      for (int z = 0; z < d && af.empty(); ++z)
        if (mul(xy, {{z, Scalar(1)}}) != mul({{x, Scalar(1)}}, mul({{y, Scalar(1)}}, {{z, Scalar(1)}})))
          af = h.labels[x] + ", " + h.labels[y] + ", " + h.labels[z];
      // delta(u_x u_y) = delta(u_x) delta(u_y)
      Tensor2 l, r;
      for (const auto& [k, c] : xy)
        for (const auto& s : h.comult[k]) accumulate(l, std::make_pair(s.left, s.right), c * s.coef);
      for (const auto& s : h.comult[x])
        for (const auto& u : h.comult[y])
          for (const auto& [k, c] : t.mult[static_cast<std::size_t>(s.left) * d + u.left])
            for (const auto& [m, e] : h.product(s.right, u.right))
              accumulate(r, std::make_pair(k, m), s.coef * u.coef * c * e);
      if (l != r && cf.empty()) cf = h.labels[x] + ", " + h.labels[y];
    }
  for (int x = 0; x < d && uf.empty(); ++x) {
    AlgebraElement e{{x, Scalar(1)}};
    if (mul({{t.unit, Scalar(1)}}, e) != e || mul(e, {{t.unit, Scalar(1)}}) != e) uf = h.labels[x];
  }
  rep.add("associativity", af.empty(), af);
  rep.add("unit", uf.empty(), uf);
  rep.add("coaction_multiplicative", cf.empty(), cf);
  return rep;
}

/// Basis of the coinvariants {a : delta(a) = a (x) 1} of alpha-H (coaction
/// depends only on the coalgebra of H).
inline std::vector<AlgebraElement> twisted_coinvariants(const HopfAlgebra& h) {
  const int d = h.dim;
  ScalarMatrix rows;
  std::map<std::pair<int, int>, std::vector<Scalar>> eq;
  for (int x = 0; x < d; ++x) {
    for (const auto& s : h.comult[x]) {
      auto& r = eq[{s.left, s.right}];
      if (r.empty()) r.assign(d, Scalar(0));
      r[x] += s.coef;
    }
    auto& r = eq[{x, h.unit}];
    if (r.empty()) r.assign(d, Scalar(0));
    r[x] -= Scalar(1);
  }
  for (auto& [k, r] : eq) rows.push_back(std::move(r));
  std::vector<AlgebraElement> out;
  for (const auto& v : nullspace(rows, static_cast<std::size_t>(d))) {
    AlgebraElement a;
    for (int i = 0; i < d; ++i) accumulate(a, i, v[i]);
    out.push_back(std::move(a));
  }
  return out;
}

/// L = alpha-H-alpha^{-1}: x * y = alpha(x1,y1) x2 y2 alpha^{-1}(x3,y3), same
/// coalgebra, antipode recomputed.  Keeps the family tag when the product is
/// unchanged.
inline HopfAlgebra cotwist_hopf(const HopfAlgebra& h, const TwoCocycle& a) {
  struct Term3 {
    int a, b, c;
    Scalar coef;
  };
  std::vector<std::vector<Term3>> d2(h.dim);
  for (int x = 0; x < h.dim; ++x)
    for (const auto& s : h.comult[x])
      for (const auto& t : h.comult[s.right]) d2[x].push_back({s.left, t.left, t.right, s.coef * t.coef});
  HopfAlgebra l = h;
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y) {
      AlgebraElement r;
      for (const auto& s : d2[x])
        for (const auto& t : d2[y]) {
          const Scalar& v = a.values[s.a][t.a];
          if (v.is_zero()) continue;
          const Scalar& w = a.inverse[s.c][t.c];
          if (w.is_zero()) continue;
          for (const auto& [k, m] : h.product(s.b, t.b)) accumulate(r, k, s.coef * t.coef * v * w * m);
        }
      auto& slot = l.mult[static_cast<std::size_t>(x) * h.dim + y];
      slot.clear();
      for (const auto& [k, c] : r) slot.emplace_back(k, c);
    }
  if (l.mult != h.mult) l.family = FamilyTag{};
  l.antipode = compute_antipode(l);
  return l;
}

}  // namespace hopfgen
