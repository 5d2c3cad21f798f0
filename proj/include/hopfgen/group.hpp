#pragma once

// Finite groups as Cayley tables, finite abelian groups in invariant-factor
// form, abelianization, and characters.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfgen/arith.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/intmat.hpp"

namespace hopfgen {

/// Group-order cap: HOPFGEN_MAX_GROUP_ORDER if set, else 24.
inline int max_group_order() {
  if (const char* env = std::getenv("HOPFGEN_MAX_GROUP_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({"e"}, {{0}}) {}

  /// Validates the table as a group law (exhaustive associativity check).
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw InvalidGroup("empty group");
    if (n > max_group_order())
      throw RangeError("group order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(max_group_order()));
    if (static_cast<int>(table_.size()) != n) throw InvalidGroup("table has wrong row count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n) throw InvalidGroup("labels are not unique");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw InvalidGroup("table has wrong column count");
      for (int v : row)
        if (v < 0 || v >= n) throw InvalidGroup("table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw InvalidGroup("no identity element");
    inverse_.assign(n, -1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
    for (int g = 0; g < n; ++g)
      if (inverse_[g] < 0) throw InvalidGroup("element " + labels_[g] + " has no inverse");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw InvalidGroup("table is not associative at (" + labels_[a] + "," + labels_[b] +
                               "," + labels_[c] + ")");
  }

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int g, long k) const {
    if (k < 0) return power(inverse(g), -k);
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, g);
    return r;
  }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int index_of(const std::string& label) const {
    for (int i = 0; i < order(); ++i)
      if (labels_[i] == label) return i;
    throw UnknownLabel("no group element '" + label + "'");
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  bool is_central(int g) const {
    for (int h = 0; h < order(); ++h)
      if (mul(g, h) != mul(h, g)) return false;
    return true;
  }
  int element_order(int g) const {
    int k = 1;
    for (int x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
  }

  /// Subgroup generated by `gens`, as a sorted index list.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<int> members{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int g : gens) {
        int x = mul(members[i], g);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Constructors

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw RangeError("cyclic group order must be >= 1");
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "e" : k == 1 ? "a" : "a^" + std::to_string(k));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup(std::move(labels), std::move(table));
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), n = h.order();
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  std::vector<std::vector<int>> table(m * n, std::vector<int>(m * n));
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          table[a1 * n + b1][a2 * n + b2] = g.mul(a1, a2) * n + h.mul(b1, b2);
  return FiniteGroup(std::move(labels), std::move(table));
}

/// H x| K with (h1,k1)(h2,k2) = (h1 phi_{k1}(h2), k1 k2).  `action[k][h]` is
/// phi_k(h); it must be a homomorphism K -> Aut(H).
inline FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& k,
                                      const std::vector<std::vector<int>>& action) {
  const int m = h.order(), n = k.order();
  if (static_cast<int>(action.size()) != n) throw InvalidAction("need one map per element of K");
  for (int kk = 0; kk < n; ++kk) {
    const auto& phi = action[kk];
    if (static_cast<int>(phi.size()) != m) throw InvalidAction("map has wrong size");
    std::vector<bool> hit(m, false);
    for (int x : phi) {
      if (x < 0 || x >= m || hit[x]) throw InvalidAction("map is not a bijection");
      hit[x] = true;
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (phi[h.mul(a, b)] != h.mul(phi[a], phi[b]))
          throw InvalidAction("phi_" + k.label(kk) + " is not an automorphism");
  }
  for (int k1 = 0; k1 < n; ++k1)
    for (int k2 = 0; k2 < n; ++k2)
      for (int a = 0; a < m; ++a)
        if (action[k.mul(k1, k2)][a] != action[k1][action[k2][a]])
          throw InvalidAction("action is not a homomorphism K -> Aut(H)");
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) labels.push_back("(" + h.label(a) + "," + k.label(b) + ")");
  std::vector<std::vector<int>> table(m * n, std::vector<int>(m * n));
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          table[a1 * n + b1][a2 * n + b2] = h.mul(a1, action[b1][a2]) * n + k.mul(b1, b2);
  return FiniteGroup(std::move(labels), std::move(table));
}

using Permutation = std::vector<int>;  // images of 0..n-1

/// Cycle notation on 1..n, identity "e".
inline std::string permutation_label(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

inline int permutation_sign(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// (a*b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline FiniteGroup permutation_group(const std::vector<Permutation>& perms) {
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(permutation_label(p));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(compose(perms[i], perms[j]));
      if (it == index.end()) throw InvalidGroup("permutation set not closed");
      table[i][j] = it->second;
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

inline std::vector<Permutation> all_permutations(int n, bool even_only = false) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    if (!even_only || permutation_sign(p) == 1) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline FiniteGroup symmetric_group(int n) {
  if (n < 1) throw RangeError("symmetric group degree must be >= 1");
  long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (order > max_group_order()) throw RangeError("S_" + std::to_string(n) + " exceeds group cap");
  return permutation_group(all_permutations(n));
}

inline FiniteGroup alternating_group(int n) {
  if (n < 1) throw RangeError("alternating group degree must be >= 1");
  long order = 1;
  for (int i = 3; i <= n; ++i) order *= i;
  if (order > max_group_order()) throw RangeError("A_" + std::to_string(n) + " exceeds group cap");
  return permutation_group(all_permutations(n, true));
}

/// Dihedral group of order 2n: r^i s^j with s r = r^{-1} s.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) throw RangeError("dihedral parameter must be >= 1");
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string r = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      std::string s = j ? "s" : "";
      labels.push_back(r.empty() && s.empty() ? "e" : r + s);
    }
  const int m = 2 * n;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          // r^i1 s^j1 r^i2 s^j2 = r^{i1 + (-1)^j1 i2} s^{j1+j2}
          int i = ((i1 + (j1 ? -i2 : i2)) % n + n) % n;
          int j = (j1 + j2) % 2;
          table[j1 * n + i1][j2 * n + i2] = j * n + i;
        }
  return FiniteGroup(std::move(labels), std::move(table));
}

/// Quaternion group Q8.
inline FiniteGroup quaternion_group() {
  // units +-1, +-i, +-j, +-k encoded as (sign, unit in {1,i,j,k})
  const char* names[] = {"1", "i", "j", "k"};
  // unit product table: u*v = sign * w
  const int w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::string> labels;
  for (int sign = 0; sign < 2; ++sign)
    for (int u = 0; u < 4; ++u) labels.push_back(std::string(sign ? "-" : "") + names[u]);
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int s1 = 0; s1 < 2; ++s1)
    for (int u1 = 0; u1 < 4; ++u1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int u2 = 0; u2 < 4; ++u2) {
          int sign = (s1 + s2 + (s[u1][u2] < 0 ? 1 : 0)) % 2;
          table[s1 * 4 + u1][s2 * 4 + u2] = sign * 4 + w[u1][u2];
        }
  return FiniteGroup(std::move(labels), std::move(table));
}

/// Parses "cyclic:6", "sym:4", "alt:4", "dihedral:4", "quaternion", "trivial",
/// "product:cyclic:2,cyclic:3" (n-ary).
inline FiniteGroup parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&]() {
    try {
      std::size_t used = 0;
      int v = std::stoi(arg, &used);
      if (used != arg.size()) throw FormatError("");
      return v;
    } catch (const std::exception&) {
      throw FormatError("group spec '" + spec + "' needs an integer parameter");
    }
  };
  if (kind == "cyclic" || kind == "Z") return cyclic_group(number());
  if (kind == "sym" || kind == "S") return symmetric_group(number());
  if (kind == "alt" || kind == "A") return alternating_group(number());
  if (kind == "dihedral" || kind == "D") return dihedral_group(number());
  if (kind == "quaternion" || kind == "Q8") return quaternion_group();
  if (kind == "trivial") return cyclic_group(1);
  if (kind == "product") {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
      auto comma = arg.find(',', start);
      parts.push_back(arg.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() < 2) throw FormatError("product needs at least two factors");
    FiniteGroup g = parse_group_spec(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_group_spec(parts[i]));
    return g;
  }
  throw FormatError("unknown group kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Finite abelian groups

/// Z/d_1 x ... x Z/d_k with every d_i >= 1; elements are reduced integer tuples.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<long>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    for (long d : factors_)
      if (d < 1) throw RangeError("invariant factors must be >= 1");
  }

  const std::vector<long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long order() const {
    long o = 1;
    for (long d : factors_) o *= d;
    return o;
  }
  Element zero() const { return Element(factors_.size(), 0); }
  Element reduce(Element e) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = ((e[i] % factors_[i]) + factors_[i]) % factors_[i];
    return e;
  }
  Element add(const Element& a, const Element& b) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
  }
  Element scale(const Element& a, long k) const {
    Element r(a);
    for (auto& x : r) x *= k;
    return reduce(std::move(r));
  }
  Element neg(const Element& a) const { return scale(a, -1); }
  bool is_zero(const Element& a) const { return reduce(a) == zero(); }

  /// Mixed-radix index of a reduced element.
  long index_of(const Element& a) const {
    long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
    return idx;
  }
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (long idx = 0; idx < order(); ++idx) {
      Element e(factors_.size());
      long rem = idx;
      for (std::size_t i = factors_.size(); i-- > 0;) {
        e[i] = rem % factors_[i];
        rem /= factors_[i];
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<long> factors_;
};

struct Abelianization {
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup::Element> projection;  ///< element index -> class
  std::vector<int> commutator_subgroup;
};

/// G_ab = G/[G,G] with invariant factors from the Smith form of the relation
/// lattice of a small generating set of the quotient.
inline Abelianization abelianization(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> commutators;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  Abelianization res;
  res.commutator_subgroup = g.generated_subgroup(commutators);
  // cosets gC
  std::vector<int> coset(n, -1);
  std::vector<int> rep;
  for (int a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(rep.size());
    rep.push_back(a);
    for (int c : res.commutator_subgroup) coset[g.mul(a, c)] = id;
  }
  const int m = static_cast<int>(rep.size());
  auto qmul = [&](int c1, int c2) { return coset[g.mul(rep[c1], rep[c2])]; };
  const int qid = coset[g.identity()];
  // greedy generators of the quotient
  std::vector<int> gens;
  std::vector<bool> reached(m, false);
  reached[qid] = true;
  for (int c = 0; c < m; ++c) {
    if (reached[c]) continue;
    gens.push_back(c);
    std::vector<int> frontier;
    for (int x = 0; x < m; ++x)
      if (reached[x]) frontier.push_back(x);
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (int gen : gens) {
        int y = qmul(frontier[i], gen);
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
  }
  const std::size_t k = gens.size();
  if (k == 0) {
    res.group = FiniteAbelianGroup(std::vector<long>{});
    res.projection.assign(n, {});
    return res;
  }
  // spanning-tree words
  std::vector<IntRow> word(m);
  std::vector<bool> seen(m, false);
  word[qid] = IntRow(k, Integer(0));
  seen[qid] = true;
  std::vector<int> order{qid};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      int y = qmul(order[i], gens[j]);
      if (!seen[y]) {
        seen[y] = true;
        word[y] = word[order[i]];
        word[y][j] += 1;
        order.push_back(y);
      }
    }
  IntMatrix relations;
  for (int c = 0; c < m; ++c)
    for (std::size_t j = 0; j < k; ++j) {
      IntRow r = word[c];
      r[j] += 1;
      const IntRow& w = word[qmul(c, gens[j])];
      for (std::size_t t = 0; t < k; ++t) r[t] -= w[t];
      if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; }))
        relations.push_back(std::move(r));
    }
  auto snf = smith(relations);
  std::vector<long> factors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
    if (d == 0) throw Error("abelianization produced a free factor");
    if (d != 1) {
      factors.push_back(d.get_si());
      kept.push_back(i);
    }
  }
  res.group = FiniteAbelianGroup(factors);
  res.projection.resize(n);
  for (int a = 0; a < n; ++a) {
    const IntRow& w = word[coset[a]];
    FiniteAbelianGroup::Element e;
    for (std::size_t idx : kept) {
      Integer s = 0;
      for (std::size_t t = 0; t < k; ++t) s += w[t] * snf.right[t][idx];
      e.push_back(s.get_si());
    }
    res.projection[a] = res.group.reduce(std::move(e));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Characters and monomial data

struct Character {
  std::vector<Scalar> values;  ///< element index -> chi(g)
};

/// chi(g) = q^{exponents[g]}; the result is not validated here.
inline Character character_from_exponents(const std::vector<long>& exponents, const FieldPtr& field) {
  Character chi;
  for (long e : exponents) chi.values.push_back(Scalar::q_power(field, e));
  return chi;
}

/// Throws DatumError naming the first violated condition of a monomial datum.
inline void validate_monomial_datum(const FiniteGroup& g, int x, const Character& chi,
                                    const FieldPtr& field) {
  if (x < 0 || x >= g.order()) throw DatumError("element: index out of range");
  if (static_cast<int>(chi.values.size()) != g.order())
    throw DatumError("character: wrong number of values");
  if (!g.is_central(x)) throw DatumError("central: " + g.label(x) + " is not central");
  if (field->n < 2 || g.element_order(x) != field->n)
    throw DatumError("order: order(" + g.label(x) + ") = " + std::to_string(g.element_order(x)) +
                     " but n = " + std::to_string(field->n) + " (need equal and >= 2)");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (chi.values[g.mul(a, b)] != chi.values[a] * chi.values[b])
        throw DatumError("character: chi is not multiplicative");
  for (int a = 0; a < g.order(); ++a)
    if (chi.values[a].pow(field->n) != Scalar(1))
      throw DatumError("chi_power: chi^n != 1 at " + g.label(a));
  if (chi.values[x] != Scalar::q(field))
    throw DatumError("chi_of_x: chi(" + g.label(x) + ") = " + chi.values[x].to_string() + " != q");
}

}  // namespace hopfgen
