#ifndef QLDS_COMPLEX_ADJOINT_HPP
#define QLDS_COMPLEX_ADJOINT_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace qlds {

/// Complex matrix over pairs (re, im) of T. Used only as an independent
/// cross-check channel for quaternion results.
template <typename T>
struct ComplexMatrix {
  struct Entry {
    T re{0}, im{0};
  };
  std::size_t rows = 0, cols = 0;
  std::vector<Entry> data;

  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Entry& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Entry& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw PreconditionError("complex product shape mismatch");
    ComplexMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) {
        T re(0), im(0);
        for (std::size_t t = 0; t < a.cols; ++t) {
          const Entry& x = a(i, t);
          const Entry& y = b(t, j);
          re += x.re * y.re - x.im * y.im;
          im += x.re * y.im + x.im * y.re;
        }
        c(i, j) = {re, im};
      }
    return c;
  }
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t t = 0; t < a.data.size(); ++t)
      if (a.data[t].re != b.data[t].re || a.data[t].im != b.data[t].im) return false;
    return true;
  }
};

/// chi(A) for A = A1 + A2 j, with A1 = w + x i and A2 = y + z i:
/// [[A1, A2], [-conj(A2), conj(A1)]].
template <typename T>
ComplexMatrix<T> complex_adjoint(const Matrix<T>& a) {
  const std::size_t n = a.rows(), m = a.cols();
  ComplexMatrix<T> c(2 * n, 2 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Quaternion<T>& q = a(i, j);
      c(i, j) = {q.w, q.x};
      c(i, j + m) = {q.y, q.z};
      c(i + n, j) = {T(-q.y), q.z};
      c(i + n, j + m) = {q.w, T(-q.x)};
    }
  return c;
}

/// Determinant of a square complex matrix by Gaussian elimination.
/// Exact for rational entries; partial pivoting for double.
template <typename T>
std::pair<T, T> complex_det(ComplexMatrix<T> a) {
  if (a.rows != a.cols) throw PreconditionError("complex_det: not square");
  using E = typename ComplexMatrix<T>::Entry;
  auto mul = [](const E& x, const E& y) {
    return E{T(x.re * y.re - x.im * y.im), T(x.re * y.im + x.im * y.re)};
  };
  auto n2 = [](const E& x) { return T(x.re * x.re + x.im * x.im); };
  const std::size_t n = a.rows;
  E det{T(1), T(0)};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = c; r < n; ++r)
        if (sgn(a(r, c).re) != 0 || sgn(a(r, c).im) != 0) {
          p = r;
          break;
        }
    } else {
      double best = 0;
      for (std::size_t r = c; r < n; ++r)
        if (n2(a(r, c)) > best) {
          best = n2(a(r, c));
          p = r;
        }
    }
    if (p == n) return {T(0), T(0)};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = E{T(-det.re), T(-det.im)};
    }
    const E piv = a(c, c);
    det = mul(det, piv);
    T d = n2(piv);
    E inv{T(piv.re / d), T(-piv.im / d)};
    for (std::size_t r = c + 1; r < n; ++r) {
      E f = mul(a(r, c), inv);
      for (std::size_t j = c; j < n; ++j) {
        E s = mul(f, a(c, j));
        a(r, j).re -= s.re;
        a(r, j).im -= s.im;
      }
    }
  }
  return {det.re, det.im};
}

/// Rank of a complex matrix (exact backend).
template <typename T>
std::size_t complex_rank(ComplexMatrix<T> a, double tol = kDefaultTolerance) {
  using E = typename ComplexMatrix<T>::Entry;
  auto nz = [&](const E& x) {
    return !(ScalarTraits<T>::is_zero(x.re, tol) && ScalarTraits<T>::is_zero(x.im, tol));
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols && rank < a.rows; ++c) {
    std::size_t p = a.rows;
    for (std::size_t r = rank; r < a.rows; ++r)
      if (nz(a(r, c))) {
        p = r;
        break;
      }
    if (p == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(p, j), a(rank, j));
    const E piv = a(rank, c);
    T d(piv.re * piv.re + piv.im * piv.im);
    E inv{T(piv.re / d), T(-piv.im / d)};
    for (std::size_t r = rank + 1; r < a.rows; ++r) {
      const E x = a(r, c);
      E f{T(x.re * inv.re - x.im * inv.im), T(x.re * inv.im + x.im * inv.re)};
      for (std::size_t j = c; j < a.cols; ++j) {
        const E y = a(rank, j);
        a(r, j).re -= f.re * y.re - f.im * y.im;
        a(r, j).im -= f.re * y.im + f.im * y.re;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace qlds

#endif  // QLDS_COMPLEX_ADJOINT_HPP
