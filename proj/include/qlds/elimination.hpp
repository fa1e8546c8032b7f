#ifndef QLDS_ELIMINATION_HPP
#define QLDS_ELIMINATION_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace qlds {

template <typename T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan reduction with row operations applied from the left
/// (row_r <- row_r - m * row_p), so the right null space is preserved.
/// Exact mode pivots on the first nonzero entry; float mode picks the
/// largest entry and treats anything at or below `tol * scale` as zero.
template <typename T>
Echelon<T> row_reduce(Matrix<T> a, double tol = kDefaultTolerance) {
  const std::size_t m = a.rows(), n = a.cols();
  const double cutoff = is_exact_v<T> ? 0.0 : tol * std::max(1.0, frobenius(a));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    if constexpr (is_exact_v<T>) {
      for (std::size_t i = r; i < m; ++i)
        if (!is_zero(a(i, c))) {
          p = i;
          break;
        }
    } else {
      double best = cutoff;
      for (std::size_t i = r; i < m; ++i)
        if (abs(a(i, c)) > best) {
          best = abs(a(i, c));
          p = i;
        }
    }
    if (p == m) {
      if constexpr (!is_exact_v<T>)
        for (std::size_t i = r; i < m; ++i) a(i, c) = Quaternion<T>();
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Quaternion<T> inv = inverse(a(r, c));
    for (std::size_t j = 0; j < n; ++j) a(r, j) = inv * a(r, j);
    a(r, c) = Quaternion<T>(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Quaternion<T> f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
      a(i, c) = Quaternion<T>();
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

/// Pivot count after row reduction.
template <typename T>
std::size_t qrank(const Matrix<T>& a, double tol = kDefaultTolerance) {
  return row_reduce(a, tol).pivots.size();
}

/// Basis of {v : A v = 0}; one vector per free column, with that free
/// entry set to 1.
template <typename T>
std::vector<QVector<T>> null_space_right(const Matrix<T>& a, double tol = kDefaultTolerance) {
  Echelon<T> e = row_reduce(a, tol);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<QVector<T>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector<T> v(n);
    v[f] = Quaternion<T>(1);
    for (std::size_t p = 0; p < e.pivots.size(); ++p) v[e.pivots[p]] = -e.reduced(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse by Gauss-Jordan on [A | I].
template <typename T>
Matrix<T> inverse_row_reduce(const Matrix<T>& a, double tol = kDefaultTolerance) {
  require_square(a, "inverse_row_reduce");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Quaternion<T>(1);
  }
  Echelon<T> e = row_reduce(aug, tol);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw SingularError("matrix is singular (row reduction)");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// x with A x = b.
template <typename T>
QVector<T> solve_right_row_reduce(const Matrix<T>& a, const QVector<T>& b,
                                  double tol = kDefaultTolerance) {
  return inverse_row_reduce(a, tol) * b;
}

/// x with x A = b.
template <typename T>
QVector<T> solve_left_row_reduce(const Matrix<T>& a, const QVector<T>& b,
                                 double tol = kDefaultTolerance) {
  return b * inverse_row_reduce(a, tol);
}

}  // namespace qlds

#endif  // QLDS_ELIMINATION_HPP
