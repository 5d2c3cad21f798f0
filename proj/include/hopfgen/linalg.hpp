#pragma once

// Exact linear algebra over Q(q): row reduction, rank, nullspace, and a sparse
// solver that exploits the triangular systems produced by pointed coalgebras.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "hopfgen/arith.hpp"

namespace hopfgen {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(ScalarMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c)
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(ScalarMatrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

/// Basis of {v : m v = 0}.
inline std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m, std::size_t cols) {
  auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by elimination (square matrices).
inline Scalar determinant(ScalarMatrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// One linear equation sum_k coef_k * x_{var_k} = rhs.
struct SparseEquation {
  std::vector<std::pair<std::size_t, Scalar>> terms;
  Scalar rhs;
};

/// Unique solution of a sparse system, or nullopt when the system is singular or
/// inconsistent.  Equations with a single unresolved unknown are eliminated by
/// propagation first; any remaining core is row-reduced densely.
inline std::optional<std::vector<Scalar>> solve_sparse(std::size_t unknowns,
                                                       std::vector<SparseEquation> eqs) {
  std::vector<std::optional<Scalar>> value(unknowns);
  std::vector<std::vector<std::size_t>> eqs_of_var(unknowns);
  std::vector<std::size_t> open_count(eqs.size(), 0);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    // merge duplicate variables
    std::vector<std::pair<std::size_t, Scalar>> merged;
    std::sort(eqs[e].terms.begin(), eqs[e].terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [v, c] : eqs[e].terms) {
      if (!merged.empty() && merged.back().first == v) merged.back().second += c;
      else merged.emplace_back(v, c);
    }
    std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
    eqs[e].terms = std::move(merged);
    for (auto& [v, c] : eqs[e].terms) eqs_of_var[v].push_back(e);
    open_count[e] = eqs[e].terms.size();
  }
  std::deque<std::size_t> queue;
  for (std::size_t e = 0; e < eqs.size(); ++e)
    if (open_count[e] == 1) queue.push_back(e);
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    if (open_count[e] != 1) continue;
    Scalar acc = eqs[e].rhs;
    std::size_t target = unknowns;
    Scalar coef;
    for (auto& [v, c] : eqs[e].terms) {
      if (value[v]) acc -= c * *value[v];
      else {
        target = v;
        coef = c;
      }
    }
    value[target] = acc / coef;
    for (std::size_t e2 : eqs_of_var[target]) {
      if (--open_count[e2] == 1) queue.push_back(e2);
    }
  }
  std::vector<std::size_t> open_vars;
  std::vector<std::size_t> column(unknowns, unknowns);
  for (std::size_t v = 0; v < unknowns; ++v)
    if (!value[v]) {
      column[v] = open_vars.size();
      open_vars.push_back(v);
    }
  if (!open_vars.empty()) {
    const std::size_t cols = open_vars.size();
    ScalarMatrix m;
    for (auto& eq : eqs) {
      std::vector<Scalar> row(cols + 1, Scalar(0));
      Scalar rhs = eq.rhs;
      bool any = false;
      for (auto& [v, c] : eq.terms) {
        if (value[v]) rhs -= c * *value[v];
        else {
          row[column[v]] += c;
          any = true;
        }
      }
      if (!any) continue;
      row[cols] = rhs;
      m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m, cols + 1);
    if (pivots.size() != cols || (!pivots.empty() && pivots.back() == cols)) return std::nullopt;
    for (std::size_t r = 0; r < cols; ++r) value[open_vars[pivots[r]]] = m[r][cols];
  }
  std::vector<Scalar> out(unknowns);
  for (std::size_t v = 0; v < unknowns; ++v) out[v] = *value[v];
  for (auto& eq : eqs) {
    Scalar lhs(0);
    for (auto& [v, c] : eq.terms) lhs += c * out[v];
    if (lhs != eq.rhs) return std::nullopt;
  }
  return out;
}

}  // namespace hopfgen
