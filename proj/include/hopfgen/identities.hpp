#pragma once

// The tensor algebra T(X_H), the universal comodule algebra map mu_alpha,
// H-identities, and push-forwards along Hopf algebra maps.

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hopfgen/cocycle.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/tring.hpp"

namespace hopfgen {

inline int& max_word_length() {
  static int cap = 64;
  return cap;
}

using Word = std::vector<int>;

/// Noncommutative polynomial in the symbols X_b.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Scalar& s) {
    if (!s.is_zero()) terms_[{}] = s;
  }
  static NCPoly symbol(int b) {
    NCPoly p;
    p.terms_[{b}] = Scalar(1);
    return p;
  }
  static NCPoly word(Word w, const Scalar& s = Scalar(1)) {
    NCPoly p;
    if (!s.is_zero()) p.terms_[std::move(w)] = s;
    return p;
  }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& [w, s] : terms_) m = std::max(m, w.size());
    return m;
  }
  void add_term(const Word& w, const Scalar& s) { accumulate(terms_, w, s); }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, s] : o.terms_) accumulate(terms_, w, s);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, s] : o.terms_) accumulate(terms_, w, -s);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const { return scaled(Scalar(-1)); }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, sa] : a.terms_)
      for (const auto& [wb, sb] : b.terms_) {
        if (static_cast<int>(wa.size() + wb.size()) > max_word_length())
          throw WordTooLong("word length " + std::to_string(wa.size() + wb.size()) + " exceeds cap " +
                            std::to_string(max_word_length()));
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        accumulate(r.terms_, w, sa * sb);
      }
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  NCPoly scaled(const Scalar& s) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) accumulate(r.terms_, w, c * s);
    return r;
  }
  NCPoly pow(int k) const {
    NCPoly r(Scalar(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Word, Scalar> terms_;
};

inline std::string to_string(const NCPoly& p, const std::vector<std::string>& labels) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, s] : p.terms()) {
    std::string mono;
    for (int b : w) mono += (mono.empty() ? "" : "*") + std::string("X[") + labels[b] + "]";
    std::string coef = s.to_string();
    bool neg = !coef.empty() && coef[0] == '-' && s.is_rational();
    if (neg) coef = coef.substr(1);
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += s.is_rational() ? coef : "(" + coef + ")";
    else if (coef == "1")
      out += mono;
    else
      out += (s.is_rational() ? coef : "(" + coef + ")") + "*" + mono;
  }
  return out;
}

namespace detail {

class NCParser {
 public:
  NCParser(const std::string& text, const HopfAlgebra& h) : s_(text), h_(h) {}

  NCPoly parse() {
    NCPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NCPoly expr() {
    skip();
    NCPoly r;
    if (eat('-'))
      r = -term();
    else
      r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  NCPoly term() {
    NCPoly r = factor();
    while (eat('*')) r *= factor();
    return r;
  }
  NCPoly factor() {
    NCPoly base = primary();
    while (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  NCPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'X') {
      ++pos_;
      if (!eat('[')) fail("expected '['");
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated label");
      std::string label = s_.substr(start, pos_ - start);
      ++pos_;
      for (int b = 0; b < h_.dim; ++b)
        if (h_.labels[b] == label) return NCPoly::symbol(b);
      throw UnknownLabel("no basis element '" + label + "'");
    }
    if (c == 'q') {
      ++pos_;
      if (!h_.field) return NCPoly(Scalar(1));
      return NCPoly(Scalar::q(h_.field));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
      }
      try {
        return NCPoly(Scalar(parse_rational(s_.substr(start, pos_ - start))));
      } catch (const FormatError&) {
        fail("zero denominator");
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const HopfAlgebra& h_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := scalar | 'X[' label ']' | factor '^' nat | '(' expr ')'.
inline NCPoly parse_ncpoly(const std::string& text, const HopfAlgebra& h) {
  return detail::NCParser(text, h).parse();
}

/// mu_alpha: T(X_H) -> S(t_H) (x) alpha-H, X_b -> sum t_{b1} (x) u_{b2}.
class UniversalMap {
 public:
  explicit UniversalMap(const HopfAlgebra& h) : UniversalMap(h, trivial_cocycle(h)) {}
  UniversalMap(const HopfAlgebra& h, const TwoCocycle& alpha)
      : ring_(h), alpha_(alpha), twisted_(twisted_algebra(h, alpha.values)) {
    for (int b = 0; b < h.dim; ++b) {
      TTensorH g;
      for (const auto& c : h.comult[b]) accumulate(g, std::make_pair(TMonomial::var(c.left), c.right), c.coef);
      gens_.push_back(std::move(g));
    }
  }

  const TRing& ring() const { return ring_; }
  const HopfAlgebra& hopf() const { return ring_.hopf(); }
  const TwoCocycle& cocycle() const { return alpha_; }
  const MultTable& table() const { return twisted_.mult; }
  const TTensorH& generator(int b) const { return gens_[b]; }

  TTensorH one() const { return {{{TMonomial(), hopf().unit}, Scalar(1)}}; }
  TTensorH multiply(const TTensorH& a, const TTensorH& b) const { return ring_.multiply(a, b, &twisted_.mult); }

  TTensorH word(const Word& w) const {
    if (w.empty()) return one();
    TTensorH r = gens_[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) r = multiply(r, gens_[w[i]]);
    return r;
  }

  TTensorH operator()(const NCPoly& p) const {
    TTensorH r;
    for (const auto& [w, s] : p.terms())
      for (const auto& [k, c] : word(w)) accumulate(r, k, s * c);
    return r;
  }

  /// Central in S (x) alpha-H.
  bool is_central(const TTensorH& x) const {
    const int d = hopf().dim;
    std::map<TMonomial, AlgebraElement> parts;
    for (const auto& [k, s] : x) accumulate(parts[k.first], k.second, s);
    for (const auto& [m, a] : parts)
      for (int b = 0; b < d; ++b) {
        AlgebraElement l, r;
        for (const auto& [i, s] : a) {
          for (const auto& [k, c] : twisted_.mult[static_cast<std::size_t>(i) * d + b]) accumulate(l, k, s * c);
          for (const auto& [k, c] : twisted_.mult[static_cast<std::size_t>(b) * d + i]) accumulate(r, k, s * c);
        }
        if (l != r) return false;
      }
    return true;
  }

  /// delta(mu(w)) = (mu (x) id)(delta_T(w)) with delta_T(X_b) = X_{b1} (x) b2.
  bool comodule_map_on(const Word& w) const {
    const HopfAlgebra& h = hopf();
    using Key = std::tuple<TMonomial, int, int>;
    std::map<Key, Scalar> lhs, rhs;
    for (const auto& [k, s] : word(w))
      for (const auto& c : h.comult[k.second]) accumulate(lhs, Key{k.first, c.left, c.right}, s * c.coef);
    rhs[Key{TMonomial(), h.unit, h.unit}] = Scalar(1);
    for (int b : w) {
      std::map<Key, Scalar> next;
      for (const auto& [k, s] : rhs)
        for (const auto& c : h.comult[b])
          for (const auto& [g, gs] : gens_[c.left])
            for (const auto& [a, ac] : twisted_.mult[static_cast<std::size_t>(std::get<1>(k)) * h.dim + g.second])
              for (const auto& [hh, hc] : h.product(std::get<2>(k), c.right))
                accumulate(next, Key{std::get<0>(k) * g.first, a, hh}, s * c.coef * gs * ac * hc);
      rhs = std::move(next);
    }
    return lhs == rhs;
  }

 private:
  TRing ring_;
  TwoCocycle alpha_;
  TwistedAlgebra twisted_;
  std::vector<TTensorH> gens_;
};

inline TTensorH mu(const HopfAlgebra& h, const TwoCocycle& alpha, const NCPoly& p) {
  return UniversalMap(h, alpha)(p);
}

inline bool is_identity(const HopfAlgebra& h, const TwoCocycle& alpha, const NCPoly& p) {
  return mu(h, alpha, p).empty();
}

struct Classification {
  bool identity = false;
  bool coinvariant = false;
  bool central = false;
  TTensorH image;
};

inline Classification classify(const UniversalMap& m, const NCPoly& p) {
  Classification c;
  c.image = m(p);
  c.identity = c.image.empty();
  c.coinvariant = m.ring().is_coinvariant(c.image);
  c.central = m.is_central(c.image);
  return c;
}

inline Classification classify(const HopfAlgebra& h, const TwoCocycle& alpha, const NCPoly& p) {
  return classify(UniversalMap(h, alpha), p);
}

// ---------------------------------------------------------------------------
// Central denominators allowed when clearing fractions in U'_H

struct Denominator {
  std::string name;
  NCPoly poly;
};

/// X_1, X_{x^i}^n (Taft); X_1, X_x^2 (E(n)); P_g, Q_{g,h} (group and monomial).
inline std::vector<Denominator> denominator_whitelist(const HopfAlgebra& h) {
  std::vector<Denominator> out;
  const auto& f = h.family;
  auto X = [](int b) { return NCPoly::symbol(b); };
  switch (f.kind) {
    case FamilyKind::Taft:
      out.push_back({"X[1]", X(h.unit)});
      for (int i = 0; i < f.n; ++i) {
        int g = h.lookup(i, 0);
        out.push_back({"X[" + h.labels[g] + "]^" + std::to_string(f.n), X(g).pow(f.n)});
      }
      break;
    case FamilyKind::E:
      out.push_back({"X[1]", X(h.unit)});
      out.push_back({"X[x]^2", X(h.lookup(1, 0)).pow(2)});
      break;
    case FamilyKind::Group:
    case FamilyKind::Monomial: {
      const FiniteGroup& g = *f.group;
      auto gx = [&](int a) { return h.lookup(a, 0); };
      for (int a = 0; a < g.order(); ++a)
        out.push_back({"P[" + g.label(a) + "]", X(gx(a)) * X(gx(g.inverse(a)))});
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          out.push_back({"Q[" + g.label(a) + "," + g.label(b) + "]",
                         X(gx(a)) * X(gx(b)) * X(gx(g.inverse(g.mul(a, b))))});
      break;
    }
    case FamilyKind::Generic:
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf algebra maps and push-forwards

struct HopfMap {
  std::shared_ptr<const HopfAlgebra> src, dst;
  std::vector<AlgebraElement> images;  ///< phi(b) in the target basis
};

namespace detail {

inline AlgebraElement apply_map(const HopfMap& f, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [b, s] : a)
    for (const auto& [c, t] : f.images[b]) accumulate(r, c, s * t);
  return r;
}

}  // namespace detail

/// Verifies multiplicativity, unit, comultiplication and counit; NotHopfMap.
/// With cocycles given, also alpha'(phi x, phi y) = alpha(x, y); CocycleMismatch.
inline HopfMap make_hopf_map(const HopfAlgebra& src, const HopfAlgebra& dst, std::vector<AlgebraElement> images,
                             const ScalarMatrix* alpha = nullptr, const ScalarMatrix* alpha_dst = nullptr) {
  if (static_cast<int>(images.size()) != src.dim) throw NotHopfMap("need one image per basis element");
  HopfMap f{std::make_shared<const HopfAlgebra>(src), std::make_shared<const HopfAlgebra>(dst), std::move(images)};
  for (const auto& img : f.images)
    for (const auto& [c, s] : img)
      if (c < 0 || c >= dst.dim) throw NotHopfMap("image index out of range");
  if (detail::apply_map(f, {{src.unit, Scalar(1)}}) != AlgebraElement{{dst.unit, Scalar(1)}})
    throw NotHopfMap("unit not preserved");
  for (int x = 0; x < src.dim; ++x) {
    Scalar e(0);
    for (const auto& [c, s] : f.images[x]) e += s * dst.counit[c];
    if (e != src.counit[x]) throw NotHopfMap("counit fails at " + src.labels[x]);
    Tensor2 l, r;
    for (const auto& c : src.comult[x])
      for (const auto& [a, sa] : f.images[c.left])
        for (const auto& [b, sb] : f.images[c.right]) accumulate(l, std::make_pair(a, b), c.coef * sa * sb);
    for (const auto& [a, sa] : f.images[x])
      for (const auto& c : dst.comult[a]) accumulate(r, std::make_pair(c.left, c.right), sa * c.coef);
    if (l != r) throw NotHopfMap("comultiplication fails at " + src.labels[x]);
    for (int y = 0; y < src.dim; ++y) {
      AlgebraElement xy;
      for (const auto& [k, c] : src.product(x, y)) accumulate(xy, k, c);
      if (detail::apply_map(f, xy) != dst.multiply(f.images[x], f.images[y]))
        throw NotHopfMap("product fails at " + src.labels[x] + ", " + src.labels[y]);
    }
  }
  if (alpha && alpha_dst)
    for (int x = 0; x < src.dim; ++x)
      for (int y = 0; y < src.dim; ++y) {
        Scalar v(0);
        for (const auto& [a, sa] : f.images[x])
          for (const auto& [b, sb] : f.images[y]) v += sa * sb * (*alpha_dst)[a][b];
        if (v != (*alpha)[x][y]) throw CocycleMismatch("at " + src.labels[x] + ", " + src.labels[y]);
      }
  return f;
}

inline HopfMap identity_map(const HopfAlgebra& h) {
  std::vector<AlgebraElement> img;
  for (int b = 0; b < h.dim; ++b) img.push_back({{b, Scalar(1)}});
  return make_hopf_map(h, h, std::move(img));
}

/// phi_T: X_b -> sum phi(b)_c X_c, extended multiplicatively.
inline NCPoly push_forward(const HopfMap& f, const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, s] : p.terms()) {
    NCPoly acc(s);
    for (int b : w) {
      NCPoly img;
      for (const auto& [c, t] : f.images[b]) img.add_term({c}, t);
      acc *= img;
    }
    r += acc;
  }
  return r;
}

/// phi_S: t_b -> sum phi(b)_c t_c; negative powers need phi(b) = s * c with c group-like.
inline TElement push_t(const HopfMap& f, const TElement& e) {
  TElement r;
  for (const auto& [m, s] : e.terms()) {
    TElement acc(s);
    for (const auto& [b, exp] : m.factors()) {
      const auto& img = f.images[b];
      if (exp < 0) {
        if (img.size() != 1 || !f.dst->is_grouplike(img.begin()->first))
          throw OutOfLocalization("t_" + f.src->labels[b] + "^-1 has no image in the localization");
        acc *= TElement(TMonomial::var(img.begin()->first, exp), img.begin()->second.inverse().pow(-exp));
      } else {
        TElement t;
        for (const auto& [c, v] : img) t.add_term(TMonomial::var(c), v);
        acc *= t.pow(exp);
      }
    }
    r += acc;
  }
  return r;
}

/// iota: kG -> H and pi: H -> kG for a monomial Hopf algebra H.
inline std::pair<HopfMap, HopfMap> monomial_splitting(const HopfAlgebra& h) {
  if (h.family.kind != FamilyKind::Monomial) throw UnsupportedFamily("splitting needs a monomial Hopf algebra");
  const FiniteGroup& g = *h.family.group;
  HopfAlgebra kg = group_algebra(g, h.field);
  std::vector<AlgebraElement> iota, pi;
  for (int a = 0; a < g.order(); ++a) iota.push_back({{h.lookup(a, 0), Scalar(1)}});
  for (int b = 0; b < h.dim; ++b)
    pi.push_back(h.ypart[b] == 0 ? AlgebraElement{{h.gpart[b], Scalar(1)}} : AlgebraElement{});
  return {make_hopf_map(kg, h, std::move(iota)), make_hopf_map(h, kg, std::move(pi))};
}

}  // namespace hopfgen
