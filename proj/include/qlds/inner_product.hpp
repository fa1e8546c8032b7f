#ifndef QLDS_INNER_PRODUCT_HPP
#define QLDS_INNER_PRODUCT_HPP

#include <vector>

#include "matrix.hpp"
#include "number_theory.hpp"

namespace qlds {

/// <x, y>_r = sum conj(y_i) x_i. Right-linear in x: <x a, y> = <x, y> a.
template <typename T>
Quaternion<T> inner_right(const QVector<T>& x, const QVector<T>& y) {
  if (x.size() != y.size()) throw PreconditionError("inner_right: length mismatch");
  Quaternion<T> s;
  for (std::size_t i = 0; i < x.size(); ++i) s += conj(y[i]) * x[i];
  return s;
}

template <typename T>
T vector_norm2(const QVector<T>& v) {
  T s(0);
  for (const auto& e : v) s += norm2(e);
  return s;
}

/// Right scalar s with |v s| = 1. Exact mode finds a rational quaternion
/// (real when possible); float mode uses 1/|v|.
template <typename T>
Quaternion<T> unit_scaling(const QVector<T>& v) {
  T n2 = vector_norm2(v);
  if (ScalarTraits<T>::is_zero(n2, 0.0)) throw PreconditionError("unit_scaling: zero vector");
  if constexpr (is_exact_v<T>) {
    return quaternion_with_norm2(Rational(1 / n2));
  } else {
    return Quaternion<T>(1.0 / std::sqrt(n2));
  }
}

template <typename T>
QVector<T> normalize_right(const QVector<T>& v) {
  return v * unit_scaling(v);
}

/// Orthonormalizes right-independent vectors. Each vector loses its
/// components along the earlier outputs e (projection e <e, e>^{-1} <v, e>
/// with <e, e> = 1) and is then scaled on the right to unit length.
template <typename T>
std::vector<QVector<T>> gram_schmidt_right(const std::vector<QVector<T>>& vs,
                                           double tol = kDefaultTolerance) {
  std::vector<QVector<T>> out;
  for (const auto& v : vs) {
    QVector<T> u = v;
    for (const auto& e : out) u = u - e * inner_right(u, e);
    T n2 = vector_norm2(u);
    double ref = ScalarTraits<T>::to_double(vector_norm2(v));
    if (ScalarTraits<T>::is_zero(n2, tol * tol * std::max(1.0, ref)))
      throw PreconditionError("gram_schmidt_right: input vectors are right-linearly dependent");
    out.push_back(normalize_right(u));
  }
  return out;
}

template <typename T>
Matrix<T> columns_to_matrix(const std::vector<QVector<T>>& cols, std::size_t rows) {
  Matrix<T> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace qlds

#endif  // QLDS_INNER_PRODUCT_HPP
