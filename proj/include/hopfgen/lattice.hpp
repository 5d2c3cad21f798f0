#pragma once

// The lattice Y_G = ker(Z^G -> G_ab) underlying the generic base algebra of kG.

#include <string>
#include <vector>

#include "hopfgen/errors.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/intmat.hpp"
#include "hopfgen/report.hpp"
#include "hopfgen/tring.hpp"

namespace hopfgen {

struct YLattice {
  FiniteGroup group;
  IntMatrix basis;  ///< rows: exponent vectors over G
  Integer index;
};

namespace detail {

inline IntRow unit_vector(int n, int i) {
  IntRow v(n, 0);
  v[i] = 1;
  return v;
}

inline void check_cap(const FiniteGroup& g) {
  if (g.order() > max_group_order())
    throw RangeError("group of order " + std::to_string(g.order()) + " exceeds cap " +
                     std::to_string(max_group_order()));
}

/// e_g + e_h - e_{gh} over all pairs.
inline IntMatrix sigma_vectors(const FiniteGroup& g) {
  const int n = g.order();
  IntMatrix gens;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IntRow v(n, 0);
      v[a] += 1;
      v[b] += 1;
      v[g.mul(a, b)] -= 1;
      gens.push_back(std::move(v));
    }
  return gens;
}

inline Integer abs_det(const IntMatrix& m) {
  Integer d = int_determinant(m);
  return d < 0 ? Integer(-d) : d;
}

}  // namespace detail

/// Degree of an exponent vector in G_ab.
inline FiniteAbelianGroup::Element lattice_degree(const Abelianization& ab, const IntRow& v) {
  const auto& f = ab.group.factors();
  FiniteAbelianGroup::Element deg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer s = 0;
    for (std::size_t g = 0; g < v.size(); ++g) s += v[g] * ab.projection[g][i];
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(f[i]));
    deg[i] = r.get_si();
  }
  return deg;
}

inline bool in_y_kernel(const Abelianization& ab, const IntRow& v) {
  return ab.group.is_zero(lattice_degree(ab, v));
}

/// HNF basis of the lattice generated by the sigma(g,h); IndexMismatch if
/// [Z^G : Y_G] differs from |G_ab|.
inline YLattice y_group(const FiniteGroup& g) {
  detail::check_cap(g);
  YLattice y{g, lattice_basis(detail::sigma_vectors(g)), 0};
  if (static_cast<int>(y.basis.size()) != g.order()) throw IndexMismatch("Y_G does not have full rank");
  y.index = detail::abs_det(y.basis);
  auto ab = abelianization(g);
  if (y.index != ab.group.order())
    throw IndexMismatch("index " + y.index.get_str() + " != |G_ab| = " + std::to_string(ab.group.order()));
  return y;
}

/// A basis of Y_G containing t_e: Y_G splits as Z t_e + (Y_G with zero e-coordinate).
inline IntMatrix y_basis_with_te(const FiniteGroup& g) {
  auto gens = detail::sigma_vectors(g);
  const int e = g.identity();
  for (auto& v : gens) v[e] = 0;
  IntMatrix rest = lattice_basis(gens);
  IntMatrix out{detail::unit_vector(g.order(), e)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

struct NamedBasis {
  YLattice lattice;
  Report report;
};

namespace detail {

inline NamedBasis certify(const FiniteGroup& g, IntMatrix basis) {
  NamedBasis nb{{g, std::move(basis), 0}, {}};
  auto ab = abelianization(g);
  std::string bad;
  for (std::size_t i = 0; i < nb.lattice.basis.size() && bad.empty(); ++i)
    if (!in_y_kernel(ab, nb.lattice.basis[i])) bad = std::to_string(i);
  nb.report.add("membership", bad.empty(), bad);
  bool square = static_cast<int>(nb.lattice.basis.size()) == g.order();
  nb.report.add("cardinality", square, std::to_string(nb.lattice.basis.size()));
  if (square) nb.lattice.index = abs_det(nb.lattice.basis);
  nb.report.add("determinant", nb.lattice.index == ab.group.order(),
                nb.lattice.index.get_str() + " vs " + std::to_string(ab.group.order()));
  return nb;
}

}  // namespace detail

/// Z/N with generator a: y_0 = t_e and y_k = t_{a^k}/t_a^k for 2 <= k <= N.
inline NamedBasis cyclic_named_basis(int n) {
  auto g = cyclic_group(n);
  IntMatrix b{detail::unit_vector(n, 0)};
  for (int k = 2; k <= n; ++k) {
    IntRow v(n, 0);
    v[k % n] += 1;
    v[1] -= k;
    b.push_back(std::move(v));
  }
  return detail::certify(g, std::move(b));
}

/// Z/m x Z/n, labels (a^i,a^j).
inline NamedBasis product_named_basis(int m, int n) {
  auto g = direct_product(cyclic_group(m), cyclic_group(n));
  const int N = m * n;
  auto idx = [&](int i, int j) { return i * n + j; };
  IntMatrix b{detail::unit_vector(N, idx(0, 0))};
  auto pure = [&](int order, auto at) {
    if (order < 2) return;
    IntRow p(N, 0);
    p[at(1)] = order;
    b.push_back(std::move(p));
    for (int k = 2; k < order; ++k) {
      IntRow v(N, 0);
      v[at(k)] += 1;
      v[at(1)] -= k;
      b.push_back(std::move(v));
    }
  };
  pure(m, [&](int k) { return idx(k, 0); });
  pure(n, [&](int k) { return idx(0, k); });
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < n; ++j) {
      IntRow v(N, 0);
      v[idx(i, j)] += 1;
      v[idx(i, 0)] -= 1;
      v[idx(0, j)] -= 1;
      b.push_back(std::move(v));
    }
  return detail::certify(g, std::move(b));
}

/// G = H x| K; K must act trivially on H_ab.  Bases of Y_H, Y_K containing t_e
/// are taken from y_basis_with_te.
inline NamedBasis semidirect_named_basis(const FiniteGroup& h, const FiniteGroup& k,
                                         const std::vector<std::vector<int>>& action) {
  auto g = semidirect_product(h, k, action);
  detail::check_cap(g);
  auto hab = abelianization(h);
  for (int kk = 0; kk < k.order(); ++kk)
    for (int a = 0; a < h.order(); ++a)
      if (!hab.group.is_zero(hab.group.add(hab.projection[action[kk][a]], hab.group.neg(hab.projection[a]))))
        throw TrivialActionViolated(k.label(kk) + " moves the class of " + h.label(a));
  const int m = h.order(), n = k.order(), N = m * n;
  const int he = h.identity(), ke = k.identity();
  auto idx = [&](int a, int b) { return a * n + b; };
  IntMatrix b{detail::unit_vector(N, idx(he, ke))};
  auto bh = y_basis_with_te(h), bk = y_basis_with_te(k);
  for (std::size_t r = 1; r < bh.size(); ++r) {
    IntRow v(N, 0);
    for (int a = 0; a < m; ++a) v[idx(a, ke)] = bh[r][a];
    b.push_back(std::move(v));
  }
  for (std::size_t r = 1; r < bk.size(); ++r) {
    IntRow v(N, 0);
    for (int c = 0; c < n; ++c) v[idx(he, c)] = bk[r][c];
    b.push_back(std::move(v));
  }
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < n; ++c) {
      if (a == he || c == ke) continue;
      IntRow v(N, 0);
      v[idx(a, c)] += 1;
      v[idx(a, ke)] -= 1;
      v[idx(he, c)] -= 1;
      b.push_back(std::move(v));
    }
  return detail::certify(g, std::move(b));
}

/// S_n = A_n x| <tau>: t_e, t_tau^2, t_sigma, t_{sigma tau}/(t_sigma t_tau).
/// The recipe is certified, not assumed, for small n.
inline NamedBasis symmetric_named_basis(int n) {
  if (n < 2) throw UnsupportedKind("symmetric recipe needs n >= 2");
  auto g = symmetric_group(n);
  Permutation tp(n);
  for (int i = 0; i < n; ++i) tp[i] = i;
  std::swap(tp[0], tp[1]);
  const int tau = g.index_of(permutation_label(tp));
  const int N = g.order(), e = g.identity();
  auto perms = all_permutations(n);
  IntMatrix b{detail::unit_vector(N, e)};
  IntRow t2(N, 0);
  t2[tau] = 2;
  b.push_back(std::move(t2));
  std::vector<int> evens;
  for (int s = 0; s < N; ++s)
    if (s != e && permutation_sign(perms[s]) == 1) evens.push_back(s);
  for (int s : evens) b.push_back(detail::unit_vector(N, s));
  for (int s : evens) {
    IntRow v(N, 0);
    v[g.mul(s, tau)] += 1;
    v[s] -= 1;
    v[tau] -= 1;
    b.push_back(std::move(v));
  }
  return detail::certify(g, std::move(b));
}

/// kind: "cyclic:N", "product:M,N", "symmetric:N".  Semidirect products go
/// through semidirect_named_basis directly.
inline NamedBasis named_basis(const std::string& kind) {
  auto colon = kind.find(':');
  std::string k = kind.substr(0, colon), arg = colon == std::string::npos ? "" : kind.substr(colon + 1);
  try {
    if (k == "cyclic") return cyclic_named_basis(std::stoi(arg));
    if (k == "symmetric") return symmetric_named_basis(std::stoi(arg));
    if (k == "product") {
      auto comma = arg.find(',');
      if (comma == std::string::npos) throw UnsupportedKind("product needs M,N");
      return product_named_basis(std::stoi(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw UnsupportedKind("bad parameter in '" + kind + "'");
  }
  throw UnsupportedKind("unknown basis kind '" + k + "'");
}

/// P_g = t_g t_{g^-1} and Q_{g,h} = t_g t_h t_{(gh)^-1} generate Y_G over Z.
inline Report pq_generation_check(const FiniteGroup& g) {
  detail::check_cap(g);
  const int n = g.order();
  IntMatrix gens;
  for (int a = 0; a < n; ++a) {
    IntRow p(n, 0);
    p[a] += 1;
    p[g.inverse(a)] += 1;
    gens.push_back(std::move(p));
    for (int b = 0; b < n; ++b) {
      IntRow q(n, 0);
      q[a] += 1;
      q[b] += 1;
      q[g.inverse(g.mul(a, b))] += 1;
      gens.push_back(std::move(q));
    }
  }
  auto pq = lattice_basis(gens);
  auto y = lattice_basis(detail::sigma_vectors(g));
  Report rep;
  rep.add("pq_rank", pq.size() == static_cast<std::size_t>(n), std::to_string(pq.size()));
  rep.add("pq_span_equals_Y", pq == y);
  return rep;
}

/// Exponent vector as a Laurent monomial string in the t_g.
inline std::string lattice_monomial_string(const FiniteGroup& g, const IntRow& v) {
  std::vector<std::pair<int, int>> f;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.emplace_back(static_cast<int>(i), static_cast<int>(v[i].get_si()));
  return monomial_string(TMonomial::from(f), g.labels());
}

}  // namespace hopfgen
