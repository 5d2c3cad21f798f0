#include <gtest/gtest.h>

#include <random>

#include "hopfgen/arith.hpp"
#include "hopfgen/linalg.hpp"

using namespace hopfgen;

namespace {

using IntPoly = std::vector<long>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
IntPoly div_exact(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t s = q.size(); s-- > 0;) {
    long f = a[s + b.size() - 1];
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
  }
  return q;
}

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  return n > 1 ? -r : r;
}

// Phi_n = prod_{d | n} (X^d - 1)^{mu(n/d)}
IntPoly cyclotomic_oracle(int n) {
  IntPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = mobius(n / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return div_exact(num, den);
}

// Gaussian binomial as an integer polynomial in q via q-Pascal.
IntPoly gaussian_oracle(int j, int r) {
  if (r == 0 || r == j) return {1};
  IntPoly a = gaussian_oracle(j - 1, r - 1);
  IntPoly b = gaussian_oracle(j - 1, r);
  IntPoly shifted(r, 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  IntPoly out(std::max(a.size(), shifted.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < shifted.size(); ++i) out[i] += shifted[i];
  return out;
}

Scalar from_int_poly(const FieldPtr& f, const IntPoly& p) {
  RatPoly c;
  for (long v : p) c.emplace_back(v);
  return Scalar(f, c);
}

Scalar random_scalar(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  RatPoly c;
  for (int i = 0; i < f->degree; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
  for (auto& x : c) x.canonicalize();
  return Scalar(f, c);
}

}  // namespace

TEST(Field, SmallFieldsAreRational) {
  auto f1 = make_field(1), f2 = make_field(2);
  EXPECT_EQ(f1->degree, 1);
  EXPECT_EQ(f2->degree, 1);
  EXPECT_EQ(Scalar::q(f1), Scalar(1));
  EXPECT_EQ(Scalar::q(f2), Scalar(-1));
}

TEST(Field, CyclotomicMatchesMobiusProduct) {
  for (int n = 1; n <= 30; ++n) {
    IntPoly expect = cyclotomic_oracle(n);
    auto f = make_field(n);
    ASSERT_EQ(f->modulus.size(), expect.size()) << n;
    for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(f->modulus[i], expect[i]) << n;
  }
  auto f3 = make_field(3);
  EXPECT_EQ(f3->modulus, (RatPoly{1, 1, 1}));
}

TEST(Scalar, Inverses) {
  auto f = make_field(3);
  Scalar q = Scalar::q(f);
  EXPECT_EQ(scalar_invert(Scalar(1)), Scalar(1));
  EXPECT_EQ(scalar_invert(q), q * q);
  Scalar a = Scalar(1) + q;
  Scalar inv = scalar_invert(a);
  // (1 + q)(-q) = -q - q^2 = 1
  EXPECT_EQ(inv, -q);
  EXPECT_EQ(a * inv, Scalar(1));
  EXPECT_THROW(scalar_invert(Scalar(0)), DivisionByZero);
}

TEST(Scalar, RootOfUnityPowers) {
  for (int n : {3, 4, 5, 6, 8, 12}) {
    auto f = make_field(n);
    Scalar q = Scalar::q(f);
    EXPECT_EQ(q.pow(n), Scalar(1)) << n;
    for (int k = 1; k < n; ++k) EXPECT_NE(q.pow(k), Scalar(1)) << n << " " << k;
    EXPECT_EQ(Scalar::q_power(f, -1), q.inverse());
  }
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int n : {3, 5, 7, 8}) {
    auto f = make_field(n);
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Scalar(1));
        EXPECT_EQ(a.inverse() * a, Scalar(1));
      }
    }
  }
}

TEST(Scalar, MixedFieldsRejected) {
  Scalar a = Scalar::q(make_field(3)), b = Scalar::q(make_field(5));
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_NO_THROW(a + Scalar(Rational(1, 2)));
}

TEST(Scalar, TextForm) {
  auto f = make_field(5);
  EXPECT_EQ((Scalar(1) + Scalar::q(f)).to_string(), "1 + q");
  EXPECT_EQ((-Scalar::q_power(f, 2)).to_string(), "-q^2");
  EXPECT_EQ(Scalar(Rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), FormatError);
}

TEST(QBinomial, DefinitionValues) {
  auto f3 = make_field(3);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(q_binomial(j, 0, f3), Scalar(1));
  EXPECT_EQ(q_binomial(2, 1, f3), Scalar(1) + Scalar::q(f3));
  EXPECT_TRUE(q_int(3, f3).is_zero());
  EXPECT_THROW(q_binomial(3, 1, f3), RangeError);
  EXPECT_THROW(q_binomial(1, 2, f3), RangeError);
  EXPECT_THROW(q_binomial(1, -1, f3), RangeError);
}

TEST(QBinomial, MatchesGaussianPolynomials) {
  for (int n = 2; n <= 9; ++n) {
    auto f = make_field(n);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r <= j; ++r)
        EXPECT_EQ(q_binomial(j, r, f), from_int_poly(f, gaussian_oracle(j, r))) << n << " " << j << " " << r;
  }
}

TEST(QBinomial, FactorialAndPascalIdentities) {
  for (int n = 2; n <= 8; ++n) {
    auto f = make_field(n);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r <= j; ++r)
        EXPECT_EQ(q_binomial(j, r, f) * q_factorial(r, f) * q_factorial(j - r, f), q_factorial(j, f));
    for (int j = 2; j < n; ++j)
      for (int r = 1; r <= j - 1; ++r)
        EXPECT_EQ(q_binomial(j, r, f),
                  Scalar::q_power(f, r) * q_binomial(j - 1, r, f) + q_binomial(j - 1, r - 1, f));
  }
}

TEST(Linalg, SparseSolverMatchesDense) {
  auto f = make_field(5);
  Scalar q = Scalar::q(f);
  // x0 + q x1 = 1 ; x1 - x2 = q ; 2 x2 + x0 = 0   (no single-unknown rows)
  std::vector<SparseEquation> eqs = {
      {{{0, Scalar(1)}, {1, q}}, Scalar(1)},
      {{{1, Scalar(1)}, {2, Scalar(-1)}}, q},
      {{{2, Scalar(2)}, {0, Scalar(1)}}, Scalar(0)},
  };
  auto sol = solve_sparse(3, eqs);
  ASSERT_TRUE(sol);
  for (const auto& e : eqs) {
    Scalar lhs(0);
    for (const auto& [v, c] : e.terms) lhs += c * (*sol)[v];
    EXPECT_EQ(lhs, e.rhs);
  }
  eqs.push_back({{{0, Scalar(1)}}, Scalar(100)});
  EXPECT_FALSE(solve_sparse(3, eqs));
}

TEST(Linalg, NullspaceAndDeterminant) {
  ScalarMatrix m = {{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}};
  auto ns = nullspace(m, 3);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + Scalar(2) * v[1] + Scalar(3) * v[2], Scalar(0));
  ScalarMatrix sq = {{Scalar(0), Scalar(2)}, {Scalar(3), Scalar(1)}};
  EXPECT_EQ(determinant(sq), Scalar(-6));
  EXPECT_EQ(rank(sq), 2u);
}
