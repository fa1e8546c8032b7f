#ifndef QLDS_CRAMER_HPP
#define QLDS_CRAMER_HPP

#include <cmath>
#include <cstddef>

#include "determinant.hpp"
#include "elimination.hpp"

namespace qlds {

namespace detail {

// Singularity test for a determinant of an order-n matrix with entries of
// size `scale`: literal zero in exact mode, |d| <= 1e-12 scale^n otherwise.
template <typename T>
bool det_is_singular(const T& d, double scale, std::size_t n) {
  if constexpr (is_exact_v<T>) {
    return sgn(d) == 0;
  } else {
    return std::fabs(d) <= 1e-12 * std::pow(std::max(1.0, scale), static_cast<double>(n));
  }
}

template <typename T>
Matrix<T> inverse_1x1(const Matrix<T>& a) {
  Matrix<T> r(1, 1);
  r(0, 0) = inverse(a(0, 0));
  return r;
}

}  // namespace detail

enum class CramerPath { automatic, hermitian, general };

/// Inverse of an invertible Hermitian matrix from row and column cofactors.
/// Both cofactor matrices are built and must agree; exact mode also checks
/// A X = X A = I.
template <typename T>
Matrix<T> inv_hermitian(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "inv_hermitian");
  if (!is_hermitian(a)) throw PreconditionError("inv_hermitian: matrix is not Hermitian");
  const std::size_t n = a.rows();
  T det = det_hermitian(a, cap);
  if (detail::det_is_singular(det, frobenius(a), n))
    throw SingularError("inv_hermitian: determinant is zero");
  if (n == 1) return detail::inverse_1x1(a);

  Matrix<T> from_rows(n, n), from_cols(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Quaternion<T> r, l;
      if (i == j) {
        r = rdet(delete_row_col(a, i, i), 0, cap);
        l = cdet(delete_row_col(a, j, j), 0, cap);
      } else {
        // column j takes column i, then row and column i go
        Matrix<T> ar = delete_row_col(replace_column(a, j, a.col(i)), i, i);
        r = -rdet(ar, j < i ? j : j - 1, cap);
        // row i takes row j, then row and column j go
        Matrix<T> al = delete_row_col(replace_row(a, i, a.row_vec(j)), j, j);
        l = -cdet(al, i < j ? i : i - 1, cap);
      }
      // entry (j, i) of the inverse
      from_rows(j, i) = r / det;
      from_cols(j, i) = l / det;
    }
  }
  const double tol = is_exact_v<T> ? 0.0 : 1e-9 * std::max(1.0, frobenius(from_rows));
  if (!approx_equal(from_rows, from_cols, tol))
    throw InconsistencyError("inv_hermitian: row and column cofactor inverses disagree");
  if constexpr (is_exact_v<T>) {
    Matrix<T> id = Matrix<T>::identity(n);
    if (a * from_rows != id || from_rows * a != id)
      throw InconsistencyError("inv_hermitian: A X != I");
  }
  return from_rows;
}

/// Inverse of an arbitrary invertible matrix through A*A and AA*. The left
/// (column determinant) and right (row determinant) constructions and the
/// row-reduction inverse must all agree.
template <typename T>
Matrix<T> inv_general(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "inv_general");
  const std::size_t n = a.rows();
  T dd = ddet(a, cap);
  const double scale = frobenius(a);
  if (detail::det_is_singular(dd, scale * scale, n))
    throw SingularError("inv_general: double determinant is zero");
  Matrix<T> h = conj_transpose(a);
  Matrix<T> hA = h * a, Ah = a * h;
  Matrix<T> left(n, n), right(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      left(p, q) = cdet(replace_column(hA, p, h.col(q)), p, cap) / dd;
      right(p, q) = rdet(replace_row(Ah, q, h.row_vec(p)), q, cap) / dd;
    }
  const double tol = is_exact_v<T> ? 0.0 : 1e-9 * std::max(1.0, frobenius(left));
  if (!approx_equal(left, right, tol))
    throw InconsistencyError("inv_general: left and right representations disagree");
  if (!approx_equal(left, inverse_row_reduce(a), tol))
    throw InconsistencyError("inv_general: determinantal inverse differs from row reduction");
  return left;
}

/// x with A x = b. Hermitian path: x_j = cdet_j(A_{.j}(b)) / det A.
/// General path: x_j = cdet_j((A*A)_{.j}(A* b)) / ddet A.
template <typename T>
QVector<T> cramer_right(const Matrix<T>& a, const QVector<T>& b,
                        CramerPath path = CramerPath::automatic,
                        std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "cramer_right");
  if (b.size() != a.rows()) throw PreconditionError("cramer_right: length mismatch");
  const std::size_t n = a.rows();
  if (path == CramerPath::automatic)
    path = is_hermitian(a) ? CramerPath::hermitian : CramerPath::general;
  QVector<T> x(n);
  if (path == CramerPath::hermitian) {
    T det = det_hermitian(a, cap);
    if (detail::det_is_singular(det, frobenius(a), n))
      throw SingularError("cramer_right: determinant is zero");
    for (std::size_t j = 0; j < n; ++j) x[j] = cdet(replace_column(a, j, b), j, cap) / det;
  } else {
    T dd = ddet(a, cap);
    const double scale = frobenius(a);
    if (detail::det_is_singular(dd, scale * scale, n))
      throw SingularError("cramer_right: double determinant is zero");
    Matrix<T> h = conj_transpose(a);
    Matrix<T> hA = h * a;
    QVector<T> hb = h * b;
    for (std::size_t j = 0; j < n; ++j) x[j] = cdet(replace_column(hA, j, hb), j, cap) / dd;
  }
  if constexpr (is_exact_v<T>) {
    if (a * x != b) throw InconsistencyError("cramer_right: nonzero residual");
  }
  return x;
}

/// x with x A = b. Hermitian path: x_i = rdet_i(A_{i.}(b)) / det A.
/// General path: x_i = rdet_i((AA*)_{i.}(b A*)) / ddet A.
template <typename T>
QVector<T> cramer_left(const Matrix<T>& a, const QVector<T>& b,
                       CramerPath path = CramerPath::automatic,
                       std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "cramer_left");
  if (b.size() != a.rows()) throw PreconditionError("cramer_left: length mismatch");
  const std::size_t n = a.rows();
  if (path == CramerPath::automatic)
    path = is_hermitian(a) ? CramerPath::hermitian : CramerPath::general;
  QVector<T> x(n);
  if (path == CramerPath::hermitian) {
    T det = det_hermitian(a, cap);
    if (detail::det_is_singular(det, frobenius(a), n))
      throw SingularError("cramer_left: determinant is zero");
    for (std::size_t i = 0; i < n; ++i) x[i] = rdet(replace_row(a, i, b), i, cap) / det;
  } else {
    T dd = ddet(a, cap);
    const double scale = frobenius(a);
    if (detail::det_is_singular(dd, scale * scale, n))
      throw SingularError("cramer_left: double determinant is zero");
    Matrix<T> h = conj_transpose(a);
    Matrix<T> Ah = a * h;
    QVector<T> bh = b * h;
    for (std::size_t i = 0; i < n; ++i) x[i] = rdet(replace_row(Ah, i, bh), i, cap) / dd;
  }
  if constexpr (is_exact_v<T>) {
    if (x * a != b) throw InconsistencyError("cramer_left: nonzero residual");
  }
  return x;
}

}  // namespace qlds

#endif  // QLDS_CRAMER_HPP
