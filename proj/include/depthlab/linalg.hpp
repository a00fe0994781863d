#pragma once

// Small dense exact linear algebra over Scalar. Sizes are d+1 <= 4 in practice,
// so everything is plain Gaussian elimination.

#include <depthlab/scalar.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace depthlab {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// True iff a and b are nonzero multiples of each other (any sign).
inline bool parallel(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t k = 0;
  while (a[k] == 0) ++k;
  if (b[k] == 0) return false;
  Scalar r = b[k] / a[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != r * a[i]) return false;
  return true;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline Vec mul(const Matrix& m, std::span<const Scalar> v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix bt = transpose(b);
  Matrix out(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) out[i][j] = dot(a[i], bt[j]);
  return out;
}

/// Row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Scalar inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Scalar f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

inline Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Unique solution of the square system m x = rhs, or nullopt when singular.
inline std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> rhs) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = rhs[i];
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

/// Basis of the null space {x : m x = 0}; m has `cols` columns.
inline std::vector<Vec> null_space(Matrix m, std::size_t cols) {
  auto piv = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, Scalar(0));
    x[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Vector orthogonal to the rows of m (m has n-1 independent rows of length n):
/// the generalized cross product, entries are signed cofactors.
inline Vec orthogonal_complement(const Matrix& rows, std::size_t n) {
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (const auto& r : rows) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(r[k]);
      minor.push_back(std::move(row));
    }
    Scalar c = determinant(minor);
    out[j] = ((j + rows.size()) % 2 == 0) ? c : Scalar(-c);
  }
  return out;
}

/// Exact rank of a set of vectors together with coordinate indices on which the
/// projection is injective over their span.
struct SpanInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> coords;     // pivot coordinates, size == rank
  std::vector<std::size_t> basis_ids;  // indices of input vectors forming a basis
};

inline SpanInfo span_info(std::span<const Vec> vectors, std::size_t dim) {
  SpanInfo info;
  Matrix basis;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Matrix trial = basis;
    trial.push_back(vectors[i]);
    if (rank(trial) > basis.size()) {
      basis = std::move(trial);
      info.basis_ids.push_back(i);
      if (basis.size() == dim) break;
    }
  }
  info.rank = basis.size();
  Matrix reduced = basis;
  info.coords = row_reduce(reduced);
  return info;
}

}  // namespace depthlab
