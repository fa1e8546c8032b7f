#ifndef QLDS_DRAZIN_HPP
#define QLDS_DRAZIN_HPP

#include <cstddef>
#include <optional>

#include "determinant.hpp"
#include "elimination.hpp"

namespace qlds {

/// Smallest k >= 1 with rank A^{k+1} = rank A^k. Invertible and zero
/// matrices both give 1.
template <typename T>
unsigned matrix_index(const Matrix<T>& a, double tol = kDefaultTolerance) {
  require_square(a, "matrix_index");
  Matrix<T> ak = a;
  std::size_t rk = qrank(ak, tol);
  for (unsigned k = 1;; ++k) {
    Matrix<T> next = ak * a;
    std::size_t rn = qrank(next, tol);
    if (rn == rk) return k;
    ak = std::move(next);
    rk = rn;
  }
}

template <typename T>
struct DrazinResult {
  unsigned index = 1;
  std::size_t rank = 0;
  Matrix<T> ad;
};

/// The determinantal representations side by side. The general pair is
/// always filled; the Hermitian pair only for Hermitian input.
template <typename T>
struct DrazinRepresentations {
  unsigned index = 1;
  std::size_t rank = 0;
  Matrix<T> by_columns;  // column determinants of M*M, M = A^{2k+1}
  Matrix<T> by_rows;     // row determinants of MM*
  std::optional<Matrix<T>> hermitian_by_columns;  // column determinants of A^{k+1}
  std::optional<Matrix<T>> hermitian_by_rows;     // row determinants of A^{k+1}
};

namespace detail {

template <typename T>
Matrix<T> drazin_general_columns(const Matrix<T>& ak, const Matrix<T>& m, std::size_t r,
                                 std::size_t cap) {
  const std::size_t n = ak.rows();
  Matrix<T> mh = conj_transpose(m);
  Matrix<T> mm = mh * m;
  Matrix<T> hat = mh * ak;
  T den = minor_sum(mm, r, cap);
  Matrix<T> x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QVector<T> col = hat.col(j);
    QVector<T> inner(n);  // inner[t] = anchored column minor sum at t
    for (std::size_t t = 0; t < n; ++t) inner[t] = minor_sum_column(mm, r, t, col, cap);
    for (std::size_t i = 0; i < n; ++i) {
      Quaternion<T> s;
      for (std::size_t t = 0; t < n; ++t) s += ak(i, t) * inner[t];
      x(i, j) = s / den;
    }
  }
  return x;
}

template <typename T>
Matrix<T> drazin_general_rows(const Matrix<T>& ak, const Matrix<T>& m, std::size_t r,
                              std::size_t cap) {
  const std::size_t n = ak.rows();
  Matrix<T> mh = conj_transpose(m);
  Matrix<T> mm = m * mh;
  Matrix<T> check = ak * mh;
  T den = minor_sum(mm, r, cap);
  Matrix<T> x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector<T> row = check.row_vec(i);
    QVector<T> inner(n);
    for (std::size_t s = 0; s < n; ++s) inner[s] = minor_sum_row(mm, r, s, row, cap);
    for (std::size_t j = 0; j < n; ++j) {
      Quaternion<T> acc;
      for (std::size_t s = 0; s < n; ++s) acc += inner[s] * ak(s, j);
      x(i, j) = acc / den;
    }
  }
  return x;
}

template <typename T>
Matrix<T> drazin_hermitian_columns(const Matrix<T>& ak, const Matrix<T>& ak1, std::size_t r,
                                   std::size_t cap) {
  const std::size_t n = ak.rows();
  T den = minor_sum(ak1, r, cap);
  Matrix<T> x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QVector<T> col = ak.col(j);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = minor_sum_column(ak1, r, i, col, cap) / den;
  }
  return x;
}

template <typename T>
Matrix<T> drazin_hermitian_rows(const Matrix<T>& ak, const Matrix<T>& ak1, std::size_t r,
                                std::size_t cap) {
  const std::size_t n = ak.rows();
  T den = minor_sum(ak1, r, cap);
  Matrix<T> x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector<T> row = ak.row_vec(i);
    for (std::size_t j = 0; j < n; ++j) x(i, j) = minor_sum_row(ak1, r, j, row, cap) / den;
  }
  return x;
}

}  // namespace detail

/// Evaluates every applicable determinantal representation of A^D.
template <typename T>
DrazinRepresentations<T> drazin_representations(const Matrix<T>& a,
                                                 std::size_t cap = kDefaultEnumerationCap,
                                                 double tol = kDefaultTolerance) {
  require_square(a, "drazin");
  check_enumeration_cap(a.rows(), cap);
  const std::size_t n = a.rows();
  DrazinRepresentations<T> out;
  out.index = matrix_index(a, tol);
  Matrix<T> ak = power(a, out.index);
  out.rank = qrank(ak, tol);
  if (out.rank == 0) {
    out.by_columns = out.by_rows = Matrix<T>(n, n);
    if (is_hermitian(a, tol)) out.hermitian_by_columns = out.hermitian_by_rows = Matrix<T>(n, n);
    return out;
  }
  Matrix<T> m = power(a, 2 * out.index + 1);
  out.by_columns = detail::drazin_general_columns(ak, m, out.rank, cap);
  out.by_rows = detail::drazin_general_rows(ak, m, out.rank, cap);
  if (is_hermitian(a, tol)) {
    Matrix<T> ak1 = ak * a;
    out.hermitian_by_columns = detail::drazin_hermitian_columns(ak, ak1, out.rank, cap);
    out.hermitian_by_rows = detail::drazin_hermitian_rows(ak, ak1, out.rank, cap);
  }
  return out;
}

/// X A X = X, A X = X A and A^{k+1} X = A^k.
template <typename T>
bool drazin_verify(const Matrix<T>& a, const Matrix<T>& x, unsigned k,
                   double tol = 1e-9) {
  if (!a.square() || a.rows() != x.rows() || !x.square()) return false;
  Matrix<T> ak = power(a, k);
  const double s = std::max({1.0, frobenius(a), frobenius(x), frobenius(ak)});
  const double t = tol * s * s;
  return approx_equal(Matrix<T>(x * a * x), x, t) && approx_equal(Matrix<T>(a * x), Matrix<T>(x * a), t) &&
         approx_equal(Matrix<T>(ak * a * x), ak, t);
}

/// Determinantal Drazin inverse. Exact mode evaluates every representation
/// and requires them to coincide; float mode evaluates one and checks the
/// defining identities to 1e-9.
template <typename T>
DrazinResult<T> drazin_det(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap,
                           double tol = kDefaultTolerance) {
  require_square(a, "drazin_det");
  check_enumeration_cap(a.rows(), cap);
  DrazinResult<T> res;
  if constexpr (is_exact_v<T>) {
    DrazinRepresentations<T> reps = drazin_representations(a, cap, tol);
    res.index = reps.index;
    res.rank = reps.rank;
    if (reps.by_columns != reps.by_rows)
      throw InconsistencyError("drazin_det: column and row representations disagree");
    if (reps.hermitian_by_columns) {
      if (*reps.hermitian_by_columns != *reps.hermitian_by_rows ||
          *reps.hermitian_by_columns != reps.by_columns)
        throw InconsistencyError("drazin_det: Hermitian representations disagree");
    }
    res.ad = reps.by_columns;
  } else {
    const std::size_t n = a.rows();
    res.index = matrix_index(a, tol);
    Matrix<T> ak = power(a, res.index);
    res.rank = qrank(ak, tol);
    if (res.rank == 0) {
      res.ad = Matrix<T>(n, n);
    } else if (is_hermitian(a, tol)) {
      res.ad = detail::drazin_hermitian_columns(ak, Matrix<T>(ak * a), res.rank, cap);
    } else {
      res.ad = detail::drazin_general_columns(ak, power(a, 2 * res.index + 1), res.rank, cap);
    }
  }
  if (!drazin_verify(a, res.ad, res.index, is_exact_v<T> ? 0.0 : 1e-9))
    throw InconsistencyError("drazin_det: result fails the Drazin identities");
  return res;
}

}  // namespace qlds

#endif  // QLDS_DRAZIN_HPP
