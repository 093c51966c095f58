#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork {

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

// In-place elimination on a row-major buffer. When `reduce` is set, pivots are
// normalized to 1 and cleared above as well as below (Gauss-Jordan).
inline std::vector<std::size_t> eliminate(Matrix& m, bool reduce) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      auto a = m.row(p);
      auto b = m.row(r);
      for (std::size_t j = c; j < cols; ++j) std::swap(a[j], b[j]);
    }
    auto pivot_row = m.row(r);
    if (reduce) {
      const Rational inv = Rational(1) / pivot_row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!pivot_row[j].is_zero()) pivot_row[j] *= inv;
      }
    }
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!pivot_row[j].is_zero()) support.push_back(j);
    }
    const std::size_t first = reduce ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r) continue;
      auto target = m.row(i);
      if (target[c].is_zero()) continue;
      const Rational factor = reduce ? target[c] : target[c] / pivot_row[c];
      for (std::size_t j : support) target[j] -= factor * pivot_row[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline Echelon row_reduce(Matrix m) {
  auto pivots = detail::eliminate(m, true);
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination only. Eliminates along the shorter side.
inline std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix work = m.rows() > m.cols() ? m.transpose() : m;
  return detail::eliminate(work, false).size();
}

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;
};

/// Rank and a basis of the right kernel {v : m v = 0}. The basis vectors are
/// the standard ones from the reduced echelon form: each has a 1 in exactly one
/// free column and 0 in the other free columns, hence independent.
inline RankKernel rank_and_kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  RankKernel out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Rational& coeff = e.reduced(r, free);
      if (!coeff.is_zero()) v[e.pivots[r]] = -coeff;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

/// Some solution x of m x = b, or nullopt when b is outside the column space.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ValidationError("solve: right-hand side has wrong length");
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols()) = b[i];
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

/// Indices of standard basis vectors that extend the column space of m to
/// the whole ambient space; greedy in index order.
inline std::vector<std::size_t> complement_of_column_space(const Matrix& m) {
  // Pivots of [m | I] beyond the first m.cols() columns pick the complement.
  Matrix augmented(m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols() + i) = 1;
  }
  const Echelon e = row_reduce(std::move(augmented));
  std::vector<std::size_t> out;
  for (auto p : e.pivots) {
    if (p >= m.cols()) out.push_back(p - m.cols());
  }
  return out;
}

}  // namespace fieldwork
