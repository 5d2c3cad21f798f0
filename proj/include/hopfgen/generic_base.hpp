#pragma once

// Generic cocycles, generator presentations of the generic base algebra B_H,
// decomposition of degree-zero monomials, Jacobian independence, the quotient
// presentation, niceness witnesses and the U'_H relations.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfgen/cocycle.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/identities.hpp"
#include "hopfgen/intmat.hpp"
#include "hopfgen/lattice.hpp"
#include "hopfgen/linalg.hpp"
#include "hopfgen/report.hpp"
#include "hopfgen/tring.hpp"

namespace hopfgen {

// ---------------------------------------------------------------------------
// sigma_alpha and its inverse

namespace detail {

struct Sweedler3 {
  int a, b, c;
  Scalar coef;
};

inline std::vector<std::vector<Sweedler3>> double_comult(const HopfAlgebra& h) {
  std::vector<std::vector<Sweedler3>> d(h.dim);
  for (int x = 0; x < h.dim; ++x)
    for (const auto& s : h.comult[x])
      for (const auto& t : h.comult[s.right]) d[x].push_back({s.left, t.left, t.right, s.coef * t.coef});
  return d;
}

}  // namespace detail

/// sigma_alpha(x, y) = t_{x1} t_{y1} alpha(x2, y2) t^{-1}_{x3 y3}, and the inverse
/// sigma^{-1}(x, y) = t_{x1 y1} alpha^{-1}(x2, y2) t^{-1}_{x3} t^{-1}_{y3}, tabulated.
class GenericCocycle {
 public:
  GenericCocycle(const TRing& ring, const TwoCocycle& alpha) : ring_(ring), alpha_(alpha) {
    const HopfAlgebra& h = ring.hopf();
    const int d = h.dim;
    auto d2 = detail::double_comult(h);
    sigma_.assign(d, std::vector<TElement>(d));
    inverse_.assign(d, std::vector<TElement>(d));
    parallel_for(static_cast<std::size_t>(d) * d, [&](std::size_t idx) {
      int x = static_cast<int>(idx) / d, y = static_cast<int>(idx) % d;
      TElement s, si;
      for (const auto& p : d2[x])
        for (const auto& r : d2[y]) {
          Scalar c = p.coef * r.coef;
          const Scalar& a = alpha.values[p.b][r.b];
          if (!a.is_zero()) {
            TElement lead = ring.t(p.a) * ring.t(r.a);
            for (const auto& [k, m] : h.product(p.c, r.c)) s += (lead * ring.t_inv(k)).scaled(c * a * m);
          }
          const Scalar& ai = alpha.inverse[p.b][r.b];
          if (!ai.is_zero()) {
            TElement tail = ring.t_inv(p.c) * ring.t_inv(r.c);
            for (const auto& [k, m] : h.product(p.a, r.a)) si += (ring.t(k) * tail).scaled(c * ai * m);
          }
        }
      sigma_[x][y] = std::move(s);
      inverse_[x][y] = std::move(si);
    });
  }

  const TElement& operator()(int x, int y) const { return sigma_[x][y]; }
  const TElement& inverse(int x, int y) const { return inverse_[x][y]; }
  const TRing& ring() const { return ring_; }

 private:
  const TRing& ring_;
  TwoCocycle alpha_;
  std::vector<std::vector<TElement>> sigma_, inverse_;
};

inline TElement generic_cocycle(const TRing& ring, const TwoCocycle& alpha, int x, int y) {
  return GenericCocycle(ring, alpha)(x, y);
}

inline TElement generic_cocycle_inverse(const TRing& ring, const TwoCocycle& alpha, int x, int y) {
  return GenericCocycle(ring, alpha).inverse(x, y);
}

/// Cocycle condition in S(t_H)_Theta, both convolution identities, and
/// specialization t_b -> eps(b) recovering alpha; exhaustive over basis tuples.
inline Report verify_sigma(const TRing& ring, const TwoCocycle& alpha) {
  const HopfAlgebra& h = ring.hopf();
  const int d = h.dim;
  GenericCocycle sig(ring, alpha);
  Report rep;

  std::vector<std::string> cfail(d);
  parallel_for(static_cast<std::size_t>(d), [&](std::size_t xi) {
    int x = static_cast<int>(xi);
    for (int y = 0; y < d && cfail[x].empty(); ++y) {
      // sigma(x1,y1) * (x2 y2) as a map basis -> coefficient in S
      std::map<int, TElement> left;
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          const TElement& v = sig(s.left, t.left);
          if (v.is_zero()) continue;
          for (const auto& [k, m] : h.product(s.right, t.right)) left[k] += v.scaled(s.coef * t.coef * m);
        }
      for (int z = 0; z < d; ++z) {
        TElement l, r;
        for (const auto& [k, v] : left) l += v * sig(k, z);
        for (const auto& s : h.comult[y])
          for (const auto& t : h.comult[z]) {
            const TElement& v = sig(s.left, t.left);
            if (v.is_zero()) continue;
            for (const auto& [k, m] : h.product(s.right, t.right))
              r += (v * sig(x, k)).scaled(s.coef * t.coef * m);
          }
        if (l != r) {
          cfail[x] = "(" + h.labels[x] + ", " + h.labels[y] + ", " + h.labels[z] + ")";
          break;
        }
      }
    }
  });
  std::string first;
  for (const auto& f : cfail)
    if (!f.empty()) {
      first = f;
      break;
    }
  rep.add("sigma_cocycle_condition", first.empty(), first);

  std::string lf, rf, sf;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      TElement l, r;
      for (const auto& s : h.comult[x])
        for (const auto& t : h.comult[y]) {
          Scalar c = s.coef * t.coef;
          l += (sig(s.left, t.left) * sig.inverse(s.right, t.right)).scaled(c);
          r += (sig.inverse(s.left, t.left) * sig(s.right, t.right)).scaled(c);
        }
      TElement e(h.counit[x] * h.counit[y]);
      if (l != e && lf.empty()) lf = h.labels[x] + ", " + h.labels[y];
      if (r != e && rf.empty()) rf = h.labels[x] + ", " + h.labels[y];
      if (ring.counit_specialize(sig(x, y)) != alpha.values[x][y] && sf.empty())
        sf = h.labels[x] + ", " + h.labels[y];
    }
  rep.add("sigma_times_inverse", lf.empty(), lf);
  rep.add("inverse_times_sigma", rf.empty(), rf);
  rep.add("counit_specialization", sf.empty(), sf);
  return rep;
}

// ---------------------------------------------------------------------------
// Generator presentations

struct GammaPresentation {
  FamilyKind kind = FamilyKind::Generic;
  int n = 0;
  std::vector<TElement> invertible;  ///< Gamma_0, or a basis of Y_G
  std::vector<TElement> plain;       ///< Gamma_1, or Gamma
  bool special = false;              ///< Taft n = 2 presentation
};

namespace detail {

inline TElement mono(std::vector<std::pair<int, int>> f) { return TElement(TMonomial::from(std::move(f))); }

inline std::vector<TElement> y_basis_elements(const HopfAlgebra& h) {
  const FiniteGroup& g = *h.family.group;
  std::vector<TElement> out;
  for (const auto& row : y_group(g).basis) {
    std::vector<std::pair<int, int>> f;
    for (int a = 0; a < g.order(); ++a)
      if (row[a] != 0) f.emplace_back(h.lookup(a, 0), static_cast<int>(row[a].get_si()));
    out.push_back(mono(f));
  }
  return out;
}

}  // namespace detail

/// Taft: Gamma_0 = [t_1, t_x t_{x^{n-1}}, t_{x^i}/t_x^i (2 <= i < n)], Gamma_1 =
/// t_{x^i y^j} t_{x^k} with i+j+k = 0 mod n (n = 2: t_x t_y, t_{xy}).  E(n):
/// Gamma_0 = [t_1, t_x^2] and Gamma_1 in basis order.  Monomial: Y_G basis and
/// t_{g y^i}/t_{g x^i}.  Group algebra: Y_G basis.
inline GammaPresentation gamma_generators(const HopfAlgebra& h) {
  using detail::mono;
  GammaPresentation p;
  p.kind = h.family.kind;
  p.n = h.family.n;
  switch (h.family.kind) {
    case FamilyKind::Taft: {
      const int n = h.family.n;
      auto X = [&](int i) { return h.lookup(((i % n) + n) % n, 0); };
      p.invertible.push_back(mono({{X(0), 1}}));
      p.invertible.push_back(TElement::var(X(1)) * TElement::var(X(n - 1)));
      for (int i = 2; i < n; ++i) p.invertible.push_back(mono({{X(i), 1}, {X(1), -i}}));
      p.special = n == 2;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          int b = h.lookup(i, j);
          int k = ((-(i + j)) % n + n) % n;
          if (p.special && k == 0)
            p.plain.push_back(TElement::var(b));
          else
            p.plain.push_back(TElement::var(b) * TElement::var(X(k)));
        }
      break;
    }
    case FamilyKind::E: {
      const int one = h.unit, x = h.lookup(1, 0);
      p.invertible = {TElement::var(one), TElement::var(x, 2)};
      for (int b = 0; b < h.dim; ++b) {
        int size = __builtin_popcount(static_cast<unsigned>(h.ypart[b]));
        if (size == 0) continue;
        bool has_x = h.gpart[b] == x;
        bool pair_with_x = (size % 2 == 0) == has_x;
        p.plain.push_back(pair_with_x ? TElement::var(b) * TElement::var(x) : TElement::var(b));
      }
      break;
    }
    case FamilyKind::Monomial: {
      const FiniteGroup& g = *h.family.group;
      p.invertible = detail::y_basis_elements(h);
      for (int i = 1; i < p.n; ++i)
        for (int a = 0; a < g.order(); ++a) {
          int gxi = g.mul(a, g.power(h.family.x, i));
          p.plain.push_back(mono({{h.lookup(a, i), 1}, {h.lookup(gxi, 0), -1}}));
        }
      break;
    }
    case FamilyKind::Group:
      p.invertible = detail::y_basis_elements(h);
      break;
    case FamilyKind::Generic:
      throw UnsupportedFamily("no generator presentation for a generic Hopf algebra");
  }
  return p;
}

/// B_H^alpha = B_L with L the cotwist; needs L to keep a supported family.
inline GammaPresentation gamma_generators(const HopfAlgebra& h, const TwoCocycle& alpha) {
  return gamma_generators(cotwist_hopf(h, alpha));
}

/// Invertible generators, their inverses, then the plain generators.
inline std::vector<TElement> generator_set(const GammaPresentation& p) {
  std::vector<TElement> out = p.invertible;
  for (const auto& g : p.invertible) out.push_back(TElement(g.leading_monomial().pow(-1)));
  out.insert(out.end(), p.plain.begin(), p.plain.end());
  return out;
}

inline Report gamma_degree_check(const HopfAlgebra& h, const GammaPresentation& p) {
  auto gr = hab_grading(h);
  Report rep;
  std::string bad;
  for (const auto* set : {&p.invertible, &p.plain})
    for (const auto& g : *set)
      if (!gr.group.is_zero(hab_degree(gr, g.leading_monomial())) && bad.empty())
        bad = to_string(g, h.labels);
  rep.add("degree_zero", bad.empty(), bad);
  std::size_t want0 = 0, want1 = 0;
  switch (p.kind) {
    case FamilyKind::Taft:
      want0 = static_cast<std::size_t>(p.n);
      want1 = static_cast<std::size_t>(p.n) * (p.n - 1);
      break;
    case FamilyKind::E:
      want0 = 2;
      want1 = (std::size_t{1} << (p.n + 1)) - 2;
      break;
    case FamilyKind::Monomial:
      want0 = static_cast<std::size_t>(h.family.group->order());
      want1 = static_cast<std::size_t>(p.n - 1) * h.family.group->order();
      break;
    case FamilyKind::Group:
      want0 = static_cast<std::size_t>(h.dim);
      break;
    case FamilyKind::Generic:
      break;
  }
  rep.add("counts", p.invertible.size() == want0 && p.plain.size() == want1,
          std::to_string(p.invertible.size()) + " + " + std::to_string(p.plain.size()));
  if (p.special) rep.add("special_presentation_n2", true, "t_1, t_x^2, t_x t_y, t_xy");
  return rep;
}

// ---------------------------------------------------------------------------
// Decomposition of monomials over the generators

struct DecompositionWitness {
  std::vector<long> exponents;  ///< invertible generators first, then plain
  std::vector<long> residue;    ///< torus powers t_{g_i}^{k_i}, 0 <= k_i < n_i
};

class Decomposer {
 public:
  Decomposer(const TRing& ring, GammaPresentation pres)
      : ring_(ring), pres_(std::move(pres)), grading_(hab_grading(ring.hopf())) {
    const HopfAlgebra& h = ring.hopf();
    torus_ = h.grouplikes;
    std::sort(torus_.begin(), torus_.end());
    for (std::size_t i = 0; i < torus_.size(); ++i) torus_pos_[torus_[i]] = i;
    for (std::size_t j = 0; j < pres_.plain.size(); ++j) {
      for (const auto& [b, e] : pres_.plain[j].leading_monomial().factors())
        if (!ring.grouplike(b)) {
          if (e != 1 || plain_of_.count(b)) throw DatumError("plain generator is not paired with one variable");
          plain_of_[b] = j;
        }
    }
    for (int b = 0; b < h.dim; ++b)
      if (!ring.grouplike(b) && !plain_of_.count(b))
        throw DatumError("variable t_" + h.labels[b] + " has no plain generator");
    for (const auto& g : pres_.invertible) {
      IntRow row(torus_.size(), 0);
      for (const auto& [b, e] : g.leading_monomial().factors()) row[torus_pos_.at(b)] = e;
      torus_basis_.push_back(std::move(row));
    }
    if (torus_basis_.size() != torus_.size()) throw DatumError("invertible generators do not span the torus");
    // lifts of the invariant-factor generators of H_ab
    const auto& f = grading_.group.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto want = grading_.group.zero();
      want[i] = 1;
      want = grading_.group.reduce(want);
      int lift = -1;
      for (int g : torus_)
        if (grading_.degree[g] == want) {
          lift = g;
          break;
        }
      if (lift < 0) throw DatumError("no group-like lift of an H_ab generator");
      lifts_.push_back(lift);
    }
  }

  const GammaPresentation& presentation() const { return pres_; }
  const std::vector<int>& lifts() const { return lifts_; }

  /// NotDegreeZero / OutOfLocalization.
  DecompositionWitness decompose(const TMonomial& m) const {
    if (!ring_.in_localization(m)) throw OutOfLocalization(ring_.str(m) + " is not in S(t_H)_Theta");
    if (!grading_.group.is_zero(hab_degree(grading_, m))) throw NotDegreeZero(ring_.str(m));
    DecompositionWitness w;
    w.exponents.assign(pres_.invertible.size() + pres_.plain.size(), 0);
    TMonomial rest = m;
    for (const auto& [b, e] : m.factors()) {
      if (ring_.grouplike(b)) continue;
      std::size_t j = plain_of_.at(b);
      w.exponents[pres_.invertible.size() + j] = e;
      rest = rest * pres_.plain[j].leading_monomial().pow(-e);
    }
    IntRow target(torus_.size(), 0);
    for (const auto& [b, e] : rest.factors()) target[torus_pos_.at(b)] = e;
    auto sol = solve_integer_combination(torus_basis_, target);
    if (!sol) throw NotDegreeZero("torus part " + ring_.str(rest) + " is not generated by Gamma_0");
    for (std::size_t i = 0; i < sol->size(); ++i) w.exponents[i] = (*sol)[i].get_si();
    return w;
  }

  /// m = (product of generators) * prod t_{g_i}^{k_i}.
  DecompositionWitness decompose_with_residue(const TMonomial& m) const {
    auto deg = hab_degree(grading_, m);
    TMonomial b = m;
    std::vector<long> k(lifts_.size());
    for (std::size_t i = 0; i < lifts_.size(); ++i) {
      k[i] = deg[i];
      b = b * TMonomial::var(lifts_[i], static_cast<int>(-k[i]));
    }
    auto w = decompose(b);
    w.residue = std::move(k);
    return w;
  }

  TMonomial recompose(const DecompositionWitness& w) const {
    TMonomial r;
    for (std::size_t i = 0; i < pres_.invertible.size(); ++i)
      r = r * pres_.invertible[i].leading_monomial().pow(static_cast<int>(w.exponents[i]));
    for (std::size_t j = 0; j < pres_.plain.size(); ++j)
      r = r * pres_.plain[j].leading_monomial().pow(static_cast<int>(w.exponents[pres_.invertible.size() + j]));
    for (std::size_t i = 0; i < w.residue.size(); ++i) r = r * TMonomial::var(lifts_[i], static_cast<int>(w.residue[i]));
    return r;
  }

 private:
  const TRing& ring_;
  GammaPresentation pres_;
  HabGrading grading_;
  std::vector<int> torus_;
  std::map<int, std::size_t> torus_pos_;
  std::map<int, std::size_t> plain_of_;
  IntMatrix torus_basis_;
  std::vector<int> lifts_;
};

inline std::string to_string(const DecompositionWitness& w, const GammaPresentation& p,
                             const std::vector<std::string>& labels) {
  std::string out;
  auto put = [&](const TElement& g, long e) {
    if (e == 0) return;
    if (!out.empty()) out += " * ";
    out += "(" + to_string(g, labels) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < p.invertible.size(); ++i) put(p.invertible[i], w.exponents[i]);
  for (std::size_t j = 0; j < p.plain.size(); ++j) put(p.plain[j], w.exponents[p.invertible.size() + j]);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Jacobian

struct JacobianResult {
  bool symbolic = false;
  TElement determinant;  ///< full determinant (symbolic runs only)
  TElement minor;        ///< Taft: Gamma_0 against t_1, ..., t_{x^{n-1}}
  std::size_t rank_at_point = 0;
  bool independent = false;
  Report report;
};

namespace detail {

inline TElement derivative(const TElement& e, int b) {
  TElement r;
  for (const auto& [m, s] : e.terms()) {
    int k = m.exponent(b);
    if (k == 0) continue;
    r.add_term(m * TMonomial::var(b, -1), s * Scalar(k));
  }
  return r;
}

/// Row-by-row Laplace expansion over column masks, dropping masks that can
/// no longer be completed.
inline TElement sparse_determinant(const std::vector<std::vector<TElement>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return TElement(Scalar(1));
  if (n > 63) throw RangeError("determinant too large");
  std::vector<std::size_t> last(n, 0);
  std::vector<bool> any(n, false);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m[r][c].is_zero()) {
        last[c] = r;
        any[c] = true;
      }
  for (std::size_t c = 0; c < n; ++c)
    if (!any[c]) return TElement();
  std::unordered_map<std::uint64_t, TElement> states{{0, TElement(Scalar(1))}};
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t must = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (last[c] <= r) must |= std::uint64_t{1} << c;
    std::unordered_map<std::uint64_t, TElement> next;
    for (const auto& [mask, v] : states)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        if ((mask & bit) || m[r][c].is_zero()) continue;
        std::uint64_t nm = mask | bit;
        if ((nm & must) != must) continue;
        int above = __builtin_popcountll(mask >> c);  // used columns to the right
        TElement term = v * m[r][c];
        if (above % 2) term = -term;
        auto& slot = next[nm];
        slot += term;
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    states = std::move(next);
  }
  auto it = states.find(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return it == states.end() ? TElement() : it->second;
}

inline Scalar evaluate(const TElement& e, const std::vector<Scalar>& point) {
  Scalar r(0);
  for (const auto& [m, s] : e.terms()) {
    Scalar v = s;
    for (const auto& [b, k] : m.factors()) v *= point[b].pow(k);
    r += v;
  }
  return r;
}

}  // namespace detail

/// Expected Taft minor: (1 + (-1)^{n-1}(n-1)) t_{x^{n-1}} / t_x^{(n-2)(n+1)/2}.
inline TElement taft_minor_closed_form(const HopfAlgebra& h) {
  const int n = h.family.n;
  long c = 1 + ((n - 1) % 2 ? -1L : 1L) * (n - 1);
  int e = (n - 2) * (n + 1) / 2;
  return TElement(TMonomial::from({{h.lookup(n - 1, 0), 1}, {h.lookup(1, 0), -e}}), Scalar(c));
}

/// Jacobian of the generator vector (invertible then plain) with respect to the
/// t_b in basis order.  Symbolic up to dimension `symbolic_limit`; always also
/// ranked at a seeded random rational point.
inline JacobianResult jacobian_check(const TRing& ring, std::uint64_t seed = 1, int symbolic_limit = 16) {
  const HopfAlgebra& h = ring.hopf();
  auto pres = gamma_generators(h);
  std::vector<TElement> gens = pres.invertible;
  gens.insert(gens.end(), pres.plain.begin(), pres.plain.end());
  JacobianResult res;
  const int d = h.dim;
  if (static_cast<int>(gens.size()) != d) throw DatumError("generator count differs from dim H");
  std::vector<std::vector<TElement>> jac(d, std::vector<TElement>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) jac[r][c] = detail::derivative(gens[r], c);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 13);
  std::vector<Scalar> point(d);
  for (auto& v : point) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    v = Scalar(r);
  }
  ScalarMatrix at(d, std::vector<Scalar>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) at[r][c] = detail::evaluate(jac[r][c], point);
  res.rank_at_point = rank(at);
  res.report.add("rank_at_random_point", res.rank_at_point == static_cast<std::size_t>(d),
                 std::to_string(res.rank_at_point) + " of " + std::to_string(d));

  if (d <= symbolic_limit) {
    res.symbolic = true;
    res.determinant = detail::sparse_determinant(jac);
    res.report.add("determinant_nonzero", !res.determinant.is_zero());
  }
  res.independent = res.rank_at_point == static_cast<std::size_t>(d) ||
                    (res.symbolic && !res.determinant.is_zero());

  if (h.family.kind == FamilyKind::Taft) {
    const int n = h.family.n;
    std::vector<std::vector<TElement>> minor(n, std::vector<TElement>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) minor[r][c] = jac[r][h.lookup(c, 0)];
    res.minor = detail::sparse_determinant(minor);
    if (!pres.special) {
      TElement closed = taft_minor_closed_form(h);
      bool match = res.minor == closed || res.minor == -closed;
      res.report.add("minor_matches_closed_form", match,
                     to_string(res.minor, h.labels) + " vs " + to_string(closed, h.labels));
    }
    if (res.symbolic) {
      // plain block is diagonal with entries t_{x^k}: D = +-(t_1 ... t_{x^{n-1}})^{n-1} J
      TMonomial torus;
      for (int i = 0; i < n; ++i) torus = torus * TMonomial::var(h.lookup(i, 0), n - 1);
      if (pres.special) torus = TMonomial::var(h.lookup(1, 0));
      TElement want = TElement(torus) * res.minor;
      bool ok = res.determinant == want || res.determinant == -want;
      res.report.add("determinant_factorization", ok, to_string(res.determinant, h.labels));
    }
  }
  if (!res.independent)
    throw SingularJacobian("Jacobian of the generators vanishes for " + h.family_name());
  return res;
}

// ---------------------------------------------------------------------------
// S(t_H)_Theta / (B^+) = k[H_ab]

inline Report quotient_presentation_check(const TRing& ring) {
  const HopfAlgebra& h = ring.hopf();
  auto pres = gamma_generators(h);
  auto gr = hab_grading(h);
  Report rep;
  // t_b -> 0 off the group-likes, t_g -> class of g
  auto image = [&](const TMonomial& m) -> std::optional<FiniteAbelianGroup::Element> {
    auto deg = gr.group.zero();
    for (const auto& [b, e] : m.factors()) {
      if (!ring.grouplike(b)) return std::nullopt;
      deg = gr.group.add(deg, gr.group.scale(gr.degree[b], e));
    }
    return deg;
  };
  std::string bad;
  for (const auto& g : pres.invertible) {
    auto im = image(g.leading_monomial());
    if ((!im || !gr.group.is_zero(*im)) && bad.empty()) bad = to_string(g, h.labels);
  }
  for (const auto& g : pres.plain)
    if (image(g.leading_monomial()) && bad.empty()) bad = to_string(g, h.labels);
  rep.add("bplus_killed", bad.empty(), bad);

  // surjectivity: the classes of the group-likes exhaust H_ab
  std::set<FiniteAbelianGroup::Element> hit{gr.group.zero()};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto e : std::set<FiniteAbelianGroup::Element>(hit))
      for (int g : h.grouplikes)
        if (hit.insert(gr.group.add(e, gr.degree[g])).second) grew = true;
  }
  rep.add("surjective", static_cast<long>(hit.size()) == gr.group.order(),
          std::to_string(hit.size()) + " of " + std::to_string(gr.group.order()));

  // kernel on the torus is exactly the lattice of Gamma_0: index = |H_ab|
  std::vector<int> torus = h.grouplikes;
  std::sort(torus.begin(), torus.end());
  IntMatrix lat;
  for (const auto& g : pres.invertible) {
    IntRow row(torus.size(), 0);
    for (const auto& [b, e] : g.leading_monomial().factors())
      row[std::find(torus.begin(), torus.end(), b) - torus.begin()] = e;
    lat.push_back(std::move(row));
  }
  Integer det = lat.size() == torus.size() ? int_determinant(lat) : Integer(0);
  if (det < 0) det = -det;
  rep.add("torus_kernel_index", det == gr.group.order(), det.get_str());

  // each non-group-like t_b is a unit multiple of a plain generator
  std::string unpaired;
  for (int b = 0; b < h.dim && unpaired.empty(); ++b) {
    if (ring.grouplike(b)) continue;
    bool found = false;
    for (const auto& g : pres.plain) {
      const auto& m = g.leading_monomial();
      if (m.exponent(b) != 1) continue;
      bool unit = true;
      for (const auto& [c, e] : m.factors())
        if (c != b && !ring.grouplike(c)) unit = false;
      found = found || unit;
    }
    if (!found) unpaired = h.labels[b];
  }
  rep.add("nongrouplike_killed", unpaired.empty(), unpaired);

  // left coideal: Delta(gamma) in S (x) B, membership by decomposition
  Decomposer dec(ring, pres);
  std::string coideal;
  for (const auto& g : generator_set(pres)) {
    for (const auto& [k, s] : ring.s_coproduct(g)) {
      try {
        dec.decompose(k.second);
      } catch (const Error&) {
        if (coideal.empty()) coideal = to_string(g, h.labels) + " -> " + ring.str(k.second);
      }
    }
  }
  rep.add("left_coideal", coideal.empty(), coideal);
  return rep;
}

// ---------------------------------------------------------------------------
// Niceness witnesses: mu_0(P) = gamma * mu_0(D) (x) 1

struct NicenessWitness {
  TElement gamma;
  NCPoly poly;
  std::vector<std::string> denominators;
};

namespace detail {

/// Numerator over a product of whitelisted central denominators.
struct CFrac {
  NCPoly num;
  std::map<std::size_t, int> den;
};

class WitnessBuilder {
 public:
  explicit WitnessBuilder(const HopfAlgebra& h) : h_(h), wl_(denominator_whitelist(h)) {}

  std::size_t den(const std::string& name) const {
    for (std::size_t i = 0; i < wl_.size(); ++i)
      if (wl_[i].name == name) return i;
    throw WitnessFailure("denominator " + name + " is not whitelisted");
  }
  const std::vector<Denominator>& whitelist() const { return wl_; }

  CFrac lift(const NCPoly& p) const { return {p, {}}; }
  CFrac mul(const CFrac& a, const CFrac& b) const {
    CFrac r{a.num * b.num, a.den};
    for (const auto& [i, k] : b.den) r.den[i] += k;
    return r;
  }
  CFrac add(const CFrac& a, const CFrac& b, const Scalar& sb) const {
    std::map<std::size_t, int> common = a.den;
    for (const auto& [i, k] : b.den) common[i] = std::max(common[i], k);
    CFrac r{pad(a, common) + pad(b, common).scaled(sb), common};
    return r;
  }
  CFrac scaled(CFrac a, const Scalar& s) const {
    a.num = a.num.scaled(s);
    return a;
  }

  NicenessWitness finish(const TElement& gamma, const CFrac& f) const {
    NicenessWitness w{gamma, f.num, {}};
    for (const auto& [i, k] : f.den)
      for (int j = 0; j < k; ++j) w.denominators.push_back(wl_[i].name);
    return w;
  }

 private:
  NCPoly pad(const CFrac& a, const std::map<std::size_t, int>& common) const {
    NCPoly p = a.num;
    for (const auto& [i, k] : common) {
      auto it = a.den.find(i);
      int have = it == a.den.end() ? 0 : it->second;
      for (int j = have; j < k; ++j) p *= wl_[i].poly;
    }
    return p;
  }

  const HopfAlgebra& h_;
  std::vector<Denominator> wl_;
};

}  // namespace detail

/// Checks mu_0(P) = gamma * prod mu_0(D) (x) 1 exactly.
inline bool verify_witness(const UniversalMap& m, const NicenessWitness& w) {
  const HopfAlgebra& h = m.hopf();
  auto wl = denominator_whitelist(h);
  TElement d(Scalar(1));
  for (const auto& name : w.denominators) {
    auto it = std::find_if(wl.begin(), wl.end(), [&](const Denominator& x) { return x.name == name; });
    if (it == wl.end()) return false;
    auto img = m(it->poly);
    if (!m.ring().is_coinvariant(img)) return false;
    d *= m.ring().coinvariant_part(img);
  }
  return m(w.poly) == m.ring().tensor(w.gamma * d, h.unit);
}

/// One witness per generator (invertible, inverses, plain).  Monomial and group
/// algebras: the Y_G part is covered by pq_generation_check; witnesses are
/// produced for Gamma.  WitnessFailure if any verification fails.
inline std::vector<NicenessWitness> niceness_witnesses(const HopfAlgebra& h) {
  detail::WitnessBuilder wb(h);
  UniversalMap mu0(h);
  const TRing& ring = mu0.ring();
  auto pres = gamma_generators(h);
  auto X = [](int b) { return NCPoly::symbol(b); };
  std::vector<NicenessWitness> out;
  const auto kind = h.family.kind;
  const Scalar q = h.field ? Scalar::q(h.field) : Scalar(1);

  // y-type elements of A as fractions
  std::vector<detail::CFrac> ygen;  // Taft/monomial: [y]; E: y_1..y_n
  std::string unit_name;
  if (kind == FamilyKind::Taft) {
    const int n = h.family.n;
    int x = h.lookup(1, 0), y = h.lookup(0, 1);
    NCPoly num = X(x).pow(n - 1) * (X(y) * X(x) - X(x) * X(y));
    detail::CFrac f{num.scaled((q - Scalar(1)).inverse()), {}};
    f.den[wb.den("X[1]")] = 1;
    f.den[wb.den("X[x]^" + std::to_string(n))] = 1;
    ygen.push_back(f);
  } else if (kind == FamilyKind::E) {
    int x = h.lookup(1, 0);
    for (int i = 0; i < h.family.n; ++i) {
      int yi = h.lookup(0, 1 << i);
      NCPoly num = X(x) * (X(yi) * X(x) - X(x) * X(yi));
      detail::CFrac f{num.scaled(Scalar(Rational(-1, 2))), {}};
      f.den[wb.den("X[1]")] = 1;
      f.den[wb.den("X[x]^2")] = 1;
      ygen.push_back(f);
    }
  } else if (kind == FamilyKind::Monomial) {
    const FiniteGroup& g = *h.family.group;
    int e = h.lookup(g.identity(), 0), x = h.lookup(h.family.x, 0), y = h.lookup(g.identity(), 1);
    int xinv = h.lookup(g.inverse(h.family.x), 0);
    Scalar qx = Scalar(h.field, RatPoly{0, 1});
    NCPoly num = X(e) * X(xinv) * (X(y) * X(x) - X(x) * X(y));
    detail::CFrac f{num.scaled((qx - Scalar(1)).inverse()), {}};
    f.den[wb.den("P[" + g.label(g.identity()) + "]")] += 1;
    f.den[wb.den("P[" + g.label(h.family.x) + "]")] += 1;
    ygen.push_back(f);
  }
  auto ypure = [&](int mask_or_degree) {
    detail::CFrac r = wb.lift(NCPoly(Scalar(1)));
    if (kind == FamilyKind::E) {
      for (int i = 0; i < h.family.n; ++i)
        if (mask_or_degree & (1 << i)) r = wb.mul(r, ygen[i]);
    } else {
      for (int k = 0; k < mask_or_degree; ++k) r = wb.mul(r, ygen[0]);
    }
    return r;
  };

  // T_b with mu_0(T_b) = t_b (x) g_b, g_b the right leg of the top term b (x) g_b
  std::vector<int> topg(h.dim, -1);
  for (int b = 0; b < h.dim; ++b)
    for (const auto& c : h.comult[b])
      if (c.left == b) topg[b] = c.right;
  std::map<int, detail::CFrac> T;
  std::function<const detail::CFrac&(int)> top = [&](int b) -> const detail::CFrac& {
    auto it = T.find(b);
    if (it != T.end()) return it->second;
    if (ring.grouplike(b)) return T[b] = wb.lift(X(b));
    detail::CFrac acc = wb.lift(X(b));
    for (const auto& c : h.comult[b]) {
      if (c.left == b) continue;
      if (h.gpart[c.right] != topg[c.left])
        throw WitnessFailure("comultiplication of " + h.labels[b] + " is not in top-term form");
      detail::CFrac term = wb.mul(top(c.left), ypure(h.ypart[c.right]));
      acc = wb.add(acc, term, -c.coef);
    }
    return T[b] = acc;
  };

  auto emit = [&](const TElement& gamma, const detail::CFrac& f) {
    auto w = wb.finish(gamma, f);
    if (!verify_witness(mu0, w)) throw WitnessFailure("witness for " + ring.str(gamma) + " does not verify");
    out.push_back(std::move(w));
  };
  auto with_den = [&](NCPoly p, std::vector<std::string> names) {
    detail::CFrac f{std::move(p), {}};
    for (const auto& n : names) f.den[wb.den(n)] += 1;
    return f;
  };

  if (kind == FamilyKind::Taft) {
    const int n = h.family.n;
    auto Xi = [&](int i) { return h.lookup(((i % n) + n) % n, 0); };
    const std::string xn = "X[x]^" + std::to_string(n);
    auto pow_name = [&](int i) { return "X[" + h.labels[Xi(i)] + "]^" + std::to_string(n); };
    // Gamma_0 in presentation order: t_1, t_x t_{x^{n-1}}, t_{x^i}/t_x^i
    std::vector<int> ratio_index{0};
    for (int i = 2; i < n; ++i) ratio_index.push_back(i);
    for (std::size_t g = 0; g < pres.invertible.size(); ++g) {
      const TElement& gamma = pres.invertible[g];
      TElement inv(gamma.leading_monomial().pow(-1));
      if (g == 1) {
        emit(gamma, wb.lift(X(Xi(1)) * X(Xi(n - 1))));
        emit(inv, with_den(X(Xi(1)).pow(n - 1) * X(Xi(n - 1)).pow(n - 1),
                           n == 2 ? std::vector<std::string>{xn, xn} : std::vector<std::string>{xn, pow_name(n - 1)}));
      } else {
        int i = g == 0 ? 0 : static_cast<int>(g);
        emit(gamma, with_den(X(Xi(i)) * X(Xi(1)).pow(n - i), {xn}));
        emit(inv, with_den(X(Xi(i)).pow(n - 1) * X(Xi(1)).pow(i), {pow_name(i)}));
      }
    }
  } else if (kind == FamilyKind::E) {
    int one = h.unit, x = h.lookup(1, 0);
    emit(pres.invertible[0], wb.lift(X(one)));
    emit(TElement(pres.invertible[0].leading_monomial().pow(-1)), with_den(NCPoly(Scalar(1)), {"X[1]"}));
    emit(pres.invertible[1], wb.lift(X(x).pow(2)));
    emit(TElement(pres.invertible[1].leading_monomial().pow(-1)), with_den(NCPoly(Scalar(1)), {"X[x]^2"}));
  }

  // plain generators: t_b * tau with tau in {1, t_h (h g_b = 1), t_h^{-1} (h = g_b)}
  for (const auto& gamma : pres.plain) {
    int b = -1;
    std::vector<std::pair<int, int>> tau;
    for (const auto& [c, e] : gamma.leading_monomial().factors()) {
      if (!ring.grouplike(c))
        b = c;
      else
        tau.emplace_back(c, e);
    }
    detail::CFrac f = top(b);
    int gb = topg[b];
    if (tau.empty()) {
      if (gb != h.unit) throw WitnessFailure("unpaired generator " + ring.str(gamma));
    } else if (tau.size() == 1 && tau[0].second == 1) {
      if (h.product_index(tau[0].first, gb) != h.unit) throw WitnessFailure("bad pairing " + ring.str(gamma));
      f = wb.mul(f, wb.lift(X(tau[0].first)));
    } else if (tau.size() == 1 && tau[0].second == -1 && tau[0].first == gb) {
      const FiniteGroup& g = *h.family.group;
      int ginv = h.lookup(g.inverse(gb), 0);
      f = wb.mul(f, with_den(X(ginv), {"P[" + g.label(gb) + "]"}));
    } else {
      throw WitnessFailure("unsupported generator shape " + ring.str(gamma));
    }
    emit(gamma, f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// U'_H relations

inline Report uprime_relations_check(const HopfAlgebra& h) {
  UniversalMap mu0(h);
  const TRing& ring = mu0.ring();
  Report rep;
  auto X = [&](int b) { return mu0.generator(b); };
  auto mul = [&](const TTensorH& a, const TTensorH& b) { return ring.multiply(a, b); };
  auto power = [&](const TTensorH& a, int k) {
    TTensorH r = mu0.one();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  };
  auto add = [](TTensorH a, const TTensorH& b, const Scalar& s) {
    for (const auto& [k, v] : b) accumulate(a, k, v * s);
    return a;
  };
  auto eta_of = [&](int y, int x) {
    // X_y - (t_y / t_x) X_x
    TElement ratio(TMonomial::from({{y, 1}, {x, -1}}));
    return add(X(y), ring.scale(ratio, X(x)), Scalar(-1));
  };
  // PBW: products hit every basis element once with a monomial coefficient
  auto pbw = [&](const std::vector<TTensorH>& elems) {
    std::set<int> seen;
    for (const auto& e : elems) {
      if (e.size() != 1 || !e.begin()->second.is_one()) return false;
      if (!seen.insert(e.begin()->first.second).second) return false;
    }
    return static_cast<int>(seen.size()) == h.dim;
  };
  const Scalar q = h.field ? Scalar::q(h.field) : Scalar(1);
  switch (h.family.kind) {
    case FamilyKind::Taft: {
      const int n = h.family.n;
      int x = h.lookup(1, 0), y = h.lookup(0, 1);
      TTensorH xi = X(x), eta = eta_of(y, x);
      rep.add("eta_is_t1_y", eta == ring.tensor(TElement::var(h.unit), y));
      rep.add("xi_power", power(xi, n) == mu0(NCPoly::symbol(x).pow(n)));
      rep.add("eta_nilpotent", power(eta, n).empty());
      rep.add("eta_xi_q_commute", add(mul(eta, xi), mul(xi, eta), -q).empty());
      std::vector<TTensorH> basis;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.push_back(mul(power(xi, i), power(eta, j)));
      rep.add("pbw_independent", pbw(basis));
      if (n == 2) rep.add("special_presentation_n2", true);
      break;
    }
    case FamilyKind::E: {
      const int n = h.family.n;
      int x = h.lookup(1, 0);
      TTensorH xi = X(x);
      std::vector<TTensorH> eta;
      bool shape = true;
      for (int i = 0; i < n; ++i) {
        int yi = h.lookup(0, 1 << i);
        eta.push_back(eta_of(yi, x));
        shape = shape && eta.back() == ring.tensor(TElement::var(h.unit), yi);
      }
      rep.add("eta_is_t1_y", shape);
      rep.add("xi_square", mul(xi, xi) == mu0(NCPoly::symbol(x).pow(2)));
      bool sq = true, anti_x = true, anti = true;
      for (int i = 0; i < n; ++i) {
        sq = sq && mul(eta[i], eta[i]).empty();
        anti_x = anti_x && add(mul(eta[i], xi), mul(xi, eta[i]), Scalar(1)).empty();
        for (int j = 0; j < n; ++j) anti = anti && add(mul(eta[i], eta[j]), mul(eta[j], eta[i]), Scalar(1)).empty();
      }
      rep.add("eta_square_zero", sq);
      rep.add("eta_xi_anticommute", anti_x);
      rep.add("eta_anticommute", anti);
      std::vector<TTensorH> basis;
      for (int a = 0; a < 2; ++a)
        for (int mask = 0; mask < (1 << n); ++mask) {
          TTensorH e = power(xi, a);
          for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) e = mul(e, eta[i]);
          basis.push_back(e);
        }
      rep.add("pbw_independent", pbw(basis));
      break;
    }
    case FamilyKind::Monomial: {
      const FiniteGroup& g = *h.family.group;
      const int n = h.family.n;
      int x = h.lookup(h.family.x, 0), y = h.lookup(g.identity(), 1);
      TTensorH eta = eta_of(y, x);
      rep.add("eta_is_t1_y", eta == ring.tensor(TElement::var(h.unit), y));
      rep.add("eta_nilpotent", power(eta, n).empty());
      bool chi = true;
      std::vector<TTensorH> basis;
      for (int a = 0; a < g.order(); ++a) {
        TTensorH xg = X(h.lookup(a, 0));
        Scalar c = h.family.chi.empty() ? Scalar(1) : Scalar(h.field, RatPoly{0, 1}).pow(h.family.chi[a]);
        chi = chi && add(mul(eta, xg), mul(xg, eta), -c).empty();
        for (int i = 0; i < n; ++i) basis.push_back(mul(xg, power(eta, i)));
      }
      rep.add("eta_chi_commute", chi);
      rep.add("pbw_independent", pbw(basis));
      break;
    }
    case FamilyKind::Group: {
      std::vector<TTensorH> basis;
      for (int a = 0; a < h.dim; ++a) basis.push_back(X(a));
      rep.add("pbw_independent", pbw(basis));
      break;
    }
    case FamilyKind::Generic:
      throw UnsupportedFamily("no U' presentation for a generic Hopf algebra");
  }
  return rep;
}

}  // namespace hopfgen
