#pragma once

// Integer matrices with Hermite and Smith normal forms.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfgen/arith.hpp"

namespace hopfgen {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, IntRow(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), IntRow(cols, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
inline Integer int_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct HnfResult {
  IntMatrix form;       ///< U * M
  IntMatrix transform;  ///< unimodular U (empty when not requested)
  std::size_t rank = 0;
};

namespace detail {

// row_a <- p*row_a + q*row_b ; row_b <- s*row_a_old + t*row_b_old
inline void combine_rows(IntRow& a, IntRow& b, const Integer& p, const Integer& q,
                         const Integer& s, const Integer& t) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    Integer na = p * a[c] + q * b[c];
    Integer nb = s * a[c] + t * b[c];
    a[c] = std::move(na);
    b[c] = std::move(nb);
  }
}

}  // namespace detail

/// Row-style Hermite normal form: U*M = H, H in echelon form with positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows last.
inline HnfResult hnf(const IntMatrix& input, bool with_transform = true) {
  HnfResult res;
  res.form = input;
  IntMatrix& h = res.form;
  const std::size_t rows = h.size();
  const std::size_t cols = rows ? h[0].size() : 0;
  if (with_transform) res.transform = int_identity(rows);
  IntMatrix& u = res.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-combine all rows below r into row r for column c
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h[i][c] == 0) continue;
      if (h[r][c] == 0) {
        std::swap(h[r], h[i]);
        if (with_transform) std::swap(u[r], u[i]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][c].get_mpz_t(),
                 h[i][c].get_mpz_t());
      Integer a = h[r][c] / g, b = h[i][c] / g;
      // [s t; -b a] has determinant s*a + t*b = 1
      detail::combine_rows(h[r], h[i], s, t, -b, a);
      if (with_transform) detail::combine_rows(u[r], u[i], s, t, -b, a);
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      if (with_transform)
        for (auto& x : u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) h[i][k] -= f * h[r][k];
      if (with_transform)
        for (std::size_t k = 0; k < rows; ++k) u[i][k] -= f * u[r][k];
    }
    ++r;
  }
  res.rank = r;
  return res;
}

/// Nonzero rows of the HNF: a canonical basis of the row lattice.
inline IntMatrix lattice_basis(const IntMatrix& generators) {
  auto res = hnf(generators, false);
  res.form.resize(res.rank);
  return res.form;
}

struct SmithResult {
  std::vector<Integer> diagonal;  ///< d_1 | d_2 | ... (length min(rows, cols))
  IntMatrix left;                 ///< U with U*M*V = D
  IntMatrix right;                ///< V
};

/// Smith normal form with both transforms.
inline SmithResult smith(const IntMatrix& input) {
  IntMatrix d = input;
  const std::size_t rows = d.size();
  const std::size_t cols = rows ? d[0].size() : 0;
  IntMatrix u = int_identity(rows), v = int_identity(cols);
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  };
  auto combine_cols = [&](IntMatrix& m, std::size_t a, std::size_t b, const Integer& p,
                          const Integer& q, const Integer& s, const Integer& t) {
    for (auto& row : m) {
      Integer na = p * row[a] + q * row[b];
      Integer nb = s * row[a] + t * row[b];
      row[a] = std::move(na);
      row[b] = std::move(nb);
    }
  };
  const std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    // pivot: smallest nonzero in the trailing block
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (d[i][j] != 0 && (!best || abs(d[i][j]) < abs(d[best->first][best->second])))
            best = std::make_pair(i, j);
      if (!best) break;
      if (best->first != k) {
        std::swap(d[k], d[best->first]);
        std::swap(u[k], u[best->first]);
      }
      if (best->second != k) swap_cols(k, best->second);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d[i][k] == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d[k][k].get_mpz_t(),
                   d[i][k].get_mpz_t());
        Integer a = d[k][k] / g, b = d[i][k] / g;
        detail::combine_rows(d[k], d[i], s, t, -b, a);
        detail::combine_rows(u[k], u[i], s, t, -b, a);
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d[k][j] == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d[k][k].get_mpz_t(),
                   d[k][j].get_mpz_t());
        Integer a = d[k][k] / g, b = d[k][j] / g;
        combine_cols(d, k, j, s, t, -b, a);
        combine_cols(v, k, j, s, t, -b, a);
      }
      for (std::size_t i = k + 1; i < rows && clean; ++i)
        if (d[i][k] != 0) clean = false;
      if (!clean) continue;
      // divisibility: fold a row holding a non-multiple into row k
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (d[i][j] % d[k][k] != 0) {
            for (std::size_t c = 0; c < cols; ++c) d[k][c] += d[i][c];
            for (std::size_t c = 0; c < rows; ++c) u[k][c] += u[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[k][k] < 0) {
      for (auto& x : d[k]) x = -x;
      for (auto& x : u[k]) x = -x;
    }
  }
  SmithResult res;
  for (std::size_t k = 0; k < n; ++k) res.diagonal.push_back(d[k][k]);
  res.left = std::move(u);
  res.right = std::move(v);
  return res;
}

/// Solves x * basis = target for an integer row vector x (basis square, nonsingular).
/// Returns nullopt if the solution is not integral.
inline std::optional<IntRow> solve_integer_combination(const IntMatrix& basis, const IntRow& target) {
  const std::size_t n = basis.size();
  // Work on the transpose: basis^T * x^T = target^T, exact over Q.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(basis[j][i]);
    m[i][n] = Rational(target[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t c = col; c <= n; ++c) m[col][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  IntRow x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][n].get_den() != 1) return std::nullopt;
    x[i] = m[i][n].get_num();
  }
  return x;
}

}  // namespace hopfgen
