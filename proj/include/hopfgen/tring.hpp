#pragma once

// The commutative algebra S(t_H)_Theta: polynomials in the symbols t_b,
// localized at the group-like symbols, with the t^{-1} map, its coproduct and
// H_ab-grading, and the tensor ring S(t_H)_Theta (x) H.

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfgen/arith.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/linalg.hpp"
#include "hopfgen/report.hpp"

namespace hopfgen {

/// Sorted (basis index, nonzero exponent) pairs.
class TMonomial {
 public:
  TMonomial() = default;
  static TMonomial var(int b, int e = 1) {
    TMonomial m;
    if (e != 0) m.f_.emplace_back(b, e);
    return m;
  }
  /// From (index, exponent) pairs in any order; duplicates are summed.
  static TMonomial from(std::vector<std::pair<int, int>> factors) {
    std::sort(factors.begin(), factors.end());
    TMonomial m;
    for (const auto& [b, e] : factors) {
      if (!m.f_.empty() && m.f_.back().first == b) m.f_.back().second += e;
      else m.f_.emplace_back(b, e);
      if (m.f_.back().second == 0) m.f_.pop_back();
    }
    return m;
  }

  const std::vector<std::pair<int, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int exponent(int b) const {
    for (const auto& [v, e] : f_)
      if (v == b) return e;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
  }

  friend TMonomial operator*(const TMonomial& a, const TMonomial& b) {
    TMonomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
      if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
        r.f_.push_back(a.f_[i++]);
      } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
        r.f_.push_back(b.f_[j++]);
      } else {
        int e = a.f_[i].second + b.f_[j].second;
        if (e != 0) r.f_.emplace_back(a.f_[i].first, e);
        ++i;
        ++j;
      }
    }
    return r;
  }
  TMonomial pow(int k) const {
    TMonomial r;
    if (k == 0) return r;
    for (const auto& [v, e] : f_) r.f_.emplace_back(v, e * k);
    return r;
  }

  friend bool operator==(const TMonomial& a, const TMonomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const TMonomial& a, const TMonomial& b) { return a.f_ != b.f_; }
  friend bool operator<(const TMonomial& a, const TMonomial& b) { return a.f_ < b.f_; }

 private:
  std::vector<std::pair<int, int>> f_;
};

/// Laurent polynomial in the t-symbols with Q(q) coefficients.
class TElement {
 public:
  using Terms = std::map<TMonomial, Scalar>;

  TElement() = default;
  TElement(const Scalar& s) { accumulate(terms_, TMonomial(), s); }  // NOLINT(google-explicit-constructor)
  TElement(const TMonomial& m, const Scalar& s = Scalar(1)) { accumulate(terms_, m, s); }  // NOLINT

  static TElement var(int b, int e = 1) { return TElement(TMonomial::var(b, e)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const TMonomial& m, const Scalar& s) { accumulate(terms_, m, s); }

  /// The single monomial of a one-term element with coefficient 1.
  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_one(); }
  const TMonomial& leading_monomial() const { return terms_.begin()->first; }

  TElement& operator+=(const TElement& o) {
    for (const auto& [m, s] : o.terms_) accumulate(terms_, m, s);
    return *this;
  }
  TElement& operator-=(const TElement& o) {
    for (const auto& [m, s] : o.terms_) accumulate(terms_, m, -s);
    return *this;
  }
  TElement operator-() const {
    TElement r;
    for (const auto& [m, s] : terms_) r.terms_.emplace(m, -s);
    return r;
  }
  friend TElement operator+(TElement a, const TElement& b) { return a += b; }
  friend TElement operator-(TElement a, const TElement& b) { return a -= b; }
  friend TElement operator*(const TElement& a, const TElement& b) {
    TElement r;
    for (const auto& [ma, sa] : a.terms_)
      for (const auto& [mb, sb] : b.terms_) accumulate(r.terms_, ma * mb, sa * sb);
    return r;
  }
  TElement& operator*=(const TElement& o) { return *this = *this * o; }
  TElement scaled(const Scalar& s) const {
    TElement r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  TElement pow(int k) const {
    TElement r(Scalar(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const TElement& a, const TElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TElement& a, const TElement& b) { return !(a == b); }
  friend bool operator<(const TElement& a, const TElement& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

/// Text form "3/2*t[x^2y]*t[x]^-3 + ...".
inline std::string monomial_string(const TMonomial& m, const std::vector<std::string>& labels) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [b, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += "t[" + labels[b] + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string scalar_factor_string(const Scalar& s) {
  if (s.is_rational()) return s.to_string();
  return "(" + s.to_string() + ")";
}

inline std::string to_string(const TElement& e, const std::vector<std::string>& labels) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, s] : e.terms()) {
    std::string coef;
    Scalar c = s;
    bool negative = s.is_rational() && s.rational() < 0;
    if (negative) c = -s;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (m.is_one()) {
      out += scalar_factor_string(c);
    } else {
      if (!c.is_one()) out += scalar_factor_string(c) + "*";
      out += monomial_string(m, labels);
    }
  }
  return out;
}

/// Element of S(t_H)_Theta (x) H: (t-monomial, basis index) -> coefficient.
using TTensorH = std::map<std::pair<TMonomial, int>, Scalar>;
/// Element of S(t_H)_Theta (x) S(t_H)_Theta.
using TPair = std::map<std::pair<TMonomial, TMonomial>, Scalar>;

/// S(t_H)_Theta attached to a fixed Hopf algebra, with its t^{-1} map computed
/// once at construction.
class TRing {
 public:
  explicit TRing(HopfAlgebra h) : h_(std::make_shared<const HopfAlgebra>(std::move(h))) {
    is_grouplike_.assign(h_->dim, false);
    for (int g : h_->grouplikes) is_grouplike_[g] = true;
    tinv_ = compute_t_inverse();
  }

  const HopfAlgebra& hopf() const { return *h_; }
  std::shared_ptr<const HopfAlgebra> hopf_ptr() const { return h_; }
  bool grouplike(int b) const { return is_grouplike_[b]; }

  const std::vector<TElement>& t_inverse() const { return tinv_; }
  const TElement& t_inv(int b) const { return tinv_[b]; }
  TElement t(int b) const { return TElement::var(b); }

  /// Negative exponents only on group-like symbols.
  bool in_localization(const TMonomial& m) const {
    for (const auto& [b, e] : m.factors())
      if (e < 0 && !is_grouplike_[b]) return false;
    return true;
  }
  bool in_localization(const TElement& e) const {
    for (const auto& [m, s] : e.terms())
      if (!in_localization(m)) return false;
    return true;
  }

  std::string str(const TElement& e) const { return to_string(e, h_->labels); }
  std::string str(const TMonomial& m) const { return monomial_string(m, h_->labels); }

  /// Both identities sum t_{b1} t^{-1}_{b2} = sum t^{-1}_{b1} t_{b2} = eps(b).
  Report verify_t_inverse() const {
    Report rep;
    std::string left_fail, right_fail;
    for (int b = 0; b < h_->dim; ++b) {
      TElement l, r;
      for (const auto& c : h_->comult[b]) {
        l += (t(c.left) * tinv_[c.right]).scaled(c.coef);
        r += (tinv_[c.left] * t(c.right)).scaled(c.coef);
      }
      TElement expect(h_->counit[b]);
      if (l != expect && left_fail.empty()) left_fail = h_->labels[b];
      if (r != expect && right_fail.empty()) right_fail = h_->labels[b];
    }
    rep.add("t_inverse_left", left_fail.empty(), left_fail);
    rep.add("t_inverse_right", right_fail.empty(), right_fail);
    bool local = true;
    for (const auto& e : tinv_) local = local && in_localization(e);
    rep.add("t_inverse_localized", local);
    return rep;
  }

  /// Coproduct of S(t_H)_Theta: Delta(t_b) = t_{b1} (x) t_{b2}, Delta(1/t_g) = 1/t_g (x) 1/t_g.
  TPair s_coproduct(const TElement& e) const {
    TPair out;
    for (const auto& [m, s] : e.terms()) {
      TPair acc;
      acc.emplace(std::make_pair(TMonomial(), TMonomial()), s);
      for (const auto& [b, exp] : m.factors()) {
        TPair factor;
        if (exp < 0) {
          TMonomial inv = TMonomial::var(b, exp);
          factor.emplace(std::make_pair(inv, inv), Scalar(1));
        } else {
          for (const auto& c : h_->comult[b])
            accumulate(factor, std::make_pair(TMonomial::var(c.left), TMonomial::var(c.right)), c.coef);
        }
        int reps = exp < 0 ? 1 : exp;
        for (int k = 0; k < reps; ++k) acc = pair_product(acc, factor);
      }
      for (const auto& [k, v] : acc) accumulate(out, k, v);
    }
    return out;
  }

  static TPair pair_product(const TPair& a, const TPair& b) {
    TPair r;
    for (const auto& [ka, sa] : a)
      for (const auto& [kb, sb] : b)
        accumulate(r, std::make_pair(ka.first * kb.first, ka.second * kb.second), sa * sb);
    return r;
  }

  // -- tensor ring S (x) H ----------------------------------------------------

  TTensorH tensor(const TElement& e, int b) const {
    TTensorH r;
    for (const auto& [m, s] : e.terms()) accumulate(r, std::make_pair(m, b), s);
    return r;
  }

  /// Product in S (x) H, or in S (x) A for another multiplication table on
  /// the same basis (e.g. a twisted algebra).
  TTensorH multiply(const TTensorH& a, const TTensorH& b, const MultTable* table = nullptr) const {
    const MultTable& mt = table ? *table : h_->mult;
    TTensorH r;
    for (const auto& [ka, sa] : a)
      for (const auto& [kb, sb] : b)
        for (const auto& [k, c] : mt[static_cast<std::size_t>(ka.second) * h_->dim + kb.second])
          accumulate(r, std::make_pair(ka.first * kb.first, k), sa * sb * c);
    return r;
  }

  /// (e (x) 1) * x for a t-element e.
  TTensorH scale(const TElement& e, const TTensorH& x) const {
    TTensorH r;
    for (const auto& [m, s] : e.terms())
      for (const auto& [k, c] : x) accumulate(r, std::make_pair(m * k.first, k.second), s * c);
    return r;
  }

  /// Coinvariant: lies in S (x) 1.
  bool is_coinvariant(const TTensorH& x) const {
    for (const auto& [k, s] : x)
      if (k.second != h_->unit) return false;
    return true;
  }

  /// The S-component of an element of S (x) 1.
  TElement coinvariant_part(const TTensorH& x) const {
    TElement r;
    for (const auto& [k, s] : x)
      if (k.second == h_->unit) r.add_term(k.first, s);
    return r;
  }

  /// Central: for each t-monomial the H-component lies in Z(H).
  bool is_central(const TTensorH& x) const {
    std::map<TMonomial, AlgebraElement> parts;
    for (const auto& [k, s] : x) accumulate(parts[k.first], k.second, s);
    for (const auto& [m, a] : parts)
      for (int b = 0; b < h_->dim; ++b) {
        AlgebraElement e{{b, Scalar(1)}};
        if (h_->multiply(a, e) != h_->multiply(e, a)) return false;
      }
    return true;
  }

  /// Specialization t_b -> eps(b) (t_g^{-1} -> 1).
  Scalar counit_specialize(const TElement& e) const {
    Scalar r(0);
    for (const auto& [m, s] : e.terms()) {
      Scalar v = s;
      for (const auto& [b, exp] : m.factors()) {
        v *= exp < 0 ? h_->counit[b].inverse().pow(-exp) : h_->counit[b].pow(exp);
        if (v.is_zero()) break;
      }
      r += v;
    }
    return r;
  }

 private:
  // Triangular solve: t^{-1}_b = (eps(b) - sum' c t_{b1} t^{-1}_{b2}) / (c_g t_g) using
  // the unique term g (x) b of Delta(b) with g group-like.
  std::vector<TElement> compute_t_inverse() const {
    const int d = h_->dim;
    std::vector<TElement> inv(d);
    std::vector<bool> done(d, false);
    for (int g : h_->grouplikes) {
      inv[g] = TElement::var(g, -1);
      done[g] = true;
    }
    for (int b = 0; b < d; ++b) {
      if (done[b]) continue;
      std::optional<std::pair<int, Scalar>> pivot;
      TElement rest(h_->counit[b]);
      for (const auto& c : h_->comult[b]) {
        if (c.right == b) {
          if (!is_grouplike_[c.left] || pivot)
            throw NotPointedOrder("Delta(" + h_->labels[b] + ") has no isolated g (x) b term");
          pivot = std::make_pair(c.left, c.coef);
          continue;
        }
        if (!done[c.right])
          throw NotPointedOrder("t^{-1}_" + h_->labels[c.right] + " needed before it is available");
        rest -= (t(c.left) * inv[c.right]).scaled(c.coef);
      }
      if (!pivot) throw NotPointedOrder("Delta(" + h_->labels[b] + ") has no g (x) b term");
      inv[b] = (rest * TElement::var(pivot->first, -1)).scaled(pivot->second.inverse());
      done[b] = true;
    }
    return inv;
  }

  std::shared_ptr<const HopfAlgebra> h_;
  std::vector<bool> is_grouplike_;
  std::vector<TElement> tinv_;
};

/// t^{-1}_b for every basis element of H.
inline std::vector<TElement> t_inverse_map(const HopfAlgebra& h) { return TRing(h).t_inverse(); }

/// H_ab-degree of a t-monomial: additive extension of the basis grading.
inline FiniteAbelianGroup::Element hab_degree(const HabGrading& g, const TMonomial& m) {
  auto deg = g.group.zero();
  for (const auto& [b, e] : m.factors()) deg = g.group.add(deg, g.group.scale(g.degree[b], e));
  return deg;
}

inline std::string to_string(const TTensorH& x, const std::vector<std::string>& labels) {
  if (x.empty()) return "0";
  std::map<int, TElement> by_basis;
  for (const auto& [k, s] : x) by_basis[k.second].add_term(k.first, s);
  std::string out;
  for (const auto& [b, e] : by_basis) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(e, labels) + ") (x) " + labels[b];
  }
  return out;
}

}  // namespace hopfgen
