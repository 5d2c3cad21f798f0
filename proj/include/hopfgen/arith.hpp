#pragma once

// Exact arithmetic in Q and in the cyclotomic field Q(q) = Q[X]/Phi_n(X),
// plus q-integer combinatorics.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfgen/errors.hpp"

namespace hopfgen {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using RatPoly = std::vector<Rational>;

namespace detail {

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by a monic-or-not divisor b (b nonzero).
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly quot;
  const std::size_t db = b.size() - 1;
  if (a.size() >= b.size()) quot.assign(a.size() - db, Rational(0));
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    quot[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {std::move(quot), std::move(a)};
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

/// Q(zeta_n) presented as Q[X]/Phi_n.  `modulus` is monic, lowest degree first.
struct FieldSpec {
  int n = 1;
  RatPoly modulus;
  int degree = 1;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// n-th cyclotomic polynomial by recursive division of X^n - 1 by Phi_d, d | n, d < n.
inline RatPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw RangeError("cyclotomic order must be >= 1");
  RatPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quot, rem] = detail::poly_divmod(p, cyclotomic_polynomial(d));
    if (!rem.empty()) throw Error("cyclotomic division left a remainder");
    p = std::move(quot);
  }
  return p;
}

/// Shared, memoized field descriptor for Q(zeta_n).
inline FieldPtr make_field(int n) {
  if (n < 1) throw RangeError("make_field: n must be >= 1");
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<FieldSpec>();
  f->n = n;
  f->modulus = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  cache.emplace(n, f);
  return f;
}

/// Element of Q(q), kept reduced modulo Phi_n with trailing zeros trimmed, so
/// equality is coefficientwise.  A scalar without a field is a rational constant
/// and combines with scalars of any field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) { if (v != 0) c_.emplace_back(v); }  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}    // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) {  // NOLINT(google-explicit-constructor)
    if (r != 0) {
      c_.push_back(r);
      c_.back().canonicalize();
    }
  }
  Scalar(FieldPtr field, RatPoly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
  }

  /// The distinguished primitive n-th root of unity.
  static Scalar q(const FieldPtr& field) { return Scalar(field, RatPoly{0, 1}); }
  static Scalar q_power(const FieldPtr& field, long k) {
    const long n = field->n;
    long e = ((k % n) + n) % n;
    RatPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return Scalar(field, std::move(p));
  }

  const FieldPtr& field() const { return field_; }
  const RatPoly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational() const {
    if (!is_rational()) throw RangeError("scalar is not rational: " + to_string());
    return c_.empty() ? Rational(0) : c_[0];
  }

  /// Coefficients padded to the field degree (serialization form).
  std::vector<Rational> padded(int degree) const {
    std::vector<Rational> out(static_cast<std::size_t>(degree), Rational(0));
    for (std::size_t i = 0; i < c_.size() && i < out.size(); ++i) out[i] = c_[i];
    return out;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Arbitrary total order (for use as map keys / sorting only).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    detail::trim(c_);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    detail::trim(c_);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    adopt(o);
    if (c_.empty() || o.c_.empty()) {
      c_.clear();
      return *this;
    }
    if (o.c_.size() == 1) {
      for (auto& x : c_) x *= o.c_[0];
      return *this;
    }
    if (c_.size() == 1) {
      Rational f = c_[0];
      c_ = o.c_;
      for (auto& x : c_) x *= f;
      return *this;
    }
    c_ = detail::poly_mul(c_, o.c_);
    normalize();
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse via the extended Euclidean algorithm with Phi_n.
  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (c_.size() == 1) {
      Scalar r = *this;
      r.c_[0] = 1 / r.c_[0];
      return r;
    }
    // s*a + t*m = gcd; track only s.
    RatPoly r0 = field_->modulus, r1 = c_;
    RatPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
      auto [quot, rem] = detail::poly_divmod(r0, r1);
      RatPoly s2 = detail::poly_sub(s0, detail::poly_mul(quot, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw DivisionByZero("scalar shares a factor with the modulus");
    Rational g = r0[0];
    for (auto& x : s0) x /= g;
    return Scalar(field_, std::move(s0));
  }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    result.field_ = field_;
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      Rational a = abs(v);
      if (i == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void adopt(const Scalar& o) {
    if (!o.field_) return;
    if (!field_) {
      field_ = o.field_;
    } else if (field_ != o.field_ && field_->n != o.field_->n) {
      throw FieldMismatch("Q(zeta_" + std::to_string(field_->n) + ") vs Q(zeta_" +
                          std::to_string(o.field_->n) + ")");
    }
  }
  void normalize() {
    detail::trim(c_);
    if (field_ && c_.size() > static_cast<std::size_t>(field_->degree)) {
      c_ = detail::poly_divmod(std::move(c_), field_->modulus).second;
    }
  }

  FieldPtr field_;
  RatPoly c_;
};

/// Inverse in Q(q); DivisionByZero for 0.
inline Scalar scalar_invert(const Scalar& a) { return a.inverse(); }

/// q-integer [j] = 1 + q + ... + q^{j-1} (equal to (q^j - 1)/(q - 1) when q != 1).
inline Scalar q_int(long j, const FieldPtr& field) {
  Scalar s(0);
  for (long k = 0; k < j; ++k) s += Scalar::q_power(field, k);
  return Scalar(field, s.coeffs());
}

inline Scalar q_factorial(long j, const FieldPtr& field) {
  Scalar r = Scalar(field, RatPoly{1});
  for (long k = 2; k <= j; ++k) r *= q_int(k, field);
  return r;
}

/// Gaussian binomial [j choose r] at q, defined for 0 <= r <= j < n.
inline Scalar q_binomial(long j, long r, const FieldPtr& field) {
  if (r < 0 || r > j || j >= field->n)
    throw RangeError("q_binomial(" + std::to_string(j) + "," + std::to_string(r) +
                     ") needs 0 <= r <= j < n = " + std::to_string(field->n));
  if (r == 0) return Scalar(field, RatPoly{1});
  Scalar num(field, RatPoly{1});
  for (long k = j - r + 1; k <= j; ++k) num *= q_int(k, field);
  return num / q_factorial(r, field);
}

/// Parses one coefficient string "p/q" or "p".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || s.find_first_of(" \t") != std::string::npos || r.set_str(s, 10) != 0)
    throw FormatError("bad rational '" + s + "'");
  if (r.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hopfgen
