#ifndef QLDS_DETERMINANT_HPP
#define QLDS_DETERMINANT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace qlds {

namespace detail {

// Depth-first walk over the anchored cycle normal forms, multiplying entries
// as it goes. Row mode appends each factor on the right, column mode prepends
// it on the left, which yields the two orderings of the definitions. Shared
// prefixes are multiplied once. Terms are accumulated in a fixed order.
template <typename T, bool Row>
class CycleExpansion {
 public:
  CycleExpansion(const Matrix<T>& a, std::size_t anchor)
      : a_(a), n_(a.rows()), used_(a.rows(), false) {
    used_[anchor] = true;
    walk(Quaternion<T>(1), anchor, anchor, n_ - 1, 1);
  }
  const Quaternion<T>& value() const { return sum_; }
  std::size_t terms() const { return terms_; }

 private:
  Quaternion<T> step(const Quaternion<T>& p, std::size_t from, std::size_t to) const {
    return Row ? Quaternion<T>(p * a_(from, to)) : Quaternion<T>(a_(to, from) * p);
  }

  void walk(const Quaternion<T>& p, std::size_t head, std::size_t last, std::size_t left,
            std::size_t cycles) {
    for (std::size_t e = 0; e < n_; ++e) {
      if (used_[e]) continue;
      used_[e] = true;
      walk(step(p, last, e), head, e, left - 1, cycles);
      used_[e] = false;
    }
    Quaternion<T> closed = step(p, last, head);
    if (left == 0) {
      if ((n_ - cycles) % 2)
        sum_ -= closed;
      else
        sum_ += closed;
      ++terms_;
      return;
    }
    std::size_t h = 0;
    while (used_[h]) ++h;
    used_[h] = true;
    walk(closed, h, h, left - 1, cycles + 1);
    used_[h] = false;
  }

  const Matrix<T>& a_;
  std::size_t n_;
  std::vector<bool> used_;
  Quaternion<T> sum_;
  std::size_t terms_ = 0;
};

}  // namespace detail

/// i-th row determinant (0-based row index).
template <typename T>
Quaternion<T> rdet(const Matrix<T>& a, std::size_t i,
                   std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "rdet");
  check_enumeration_cap(a.rows(), cap);
  if (i >= a.rows()) throw PreconditionError("rdet: row index out of range");
  return detail::CycleExpansion<T, true>(a, i).value();
}

/// j-th column determinant (0-based column index).
template <typename T>
Quaternion<T> cdet(const Matrix<T>& a, std::size_t j,
                   std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "cdet");
  check_enumeration_cap(a.rows(), cap);
  if (j >= a.rows()) throw PreconditionError("cdet: column index out of range");
  return detail::CycleExpansion<T, false>(a, j).value();
}

/// Number of terms the expansion visits (n! by construction).
template <typename T>
std::size_t expansion_terms(const Matrix<T>& a, std::size_t anchor) {
  return detail::CycleExpansion<T, true>(a, anchor).terms();
}

namespace detail {

template <typename T>
double det_tolerance(const Matrix<T>& a) {
  if constexpr (is_exact_v<T>) {
    return 0.0;
  } else {
    double s = std::max(1.0, frobenius(a));
    double scale = 1.0;
    for (std::size_t t = 0; t < a.rows(); ++t) scale *= s;
    return kDefaultTolerance * scale;
  }
}

}  // namespace detail

/// Determinant of a Hermitian matrix. All n row and n column determinants
/// are computed; they must agree and be real.
template <typename T>
T det_hermitian(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "det_hermitian");
  if (!is_hermitian(a)) throw PreconditionError("det_hermitian: matrix is not Hermitian");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  const double tol = detail::det_tolerance(a);
  Quaternion<T> ref = rdet(a, 0, cap);
  for (std::size_t t = 0; t < n; ++t) {
    Quaternion<T> r = rdet(a, t, cap);
    Quaternion<T> c = cdet(a, t, cap);
    if (!approx_equal(r, ref, tol) || !approx_equal(c, ref, tol))
      throw InconsistencyError("det_hermitian: row/column determinants disagree");
  }
  if (!is_real(ref, tol)) throw InconsistencyError("det_hermitian: determinant is not real");
  return ref.w;
}

/// ddet A = det(A* A); checked against det(A A*).
template <typename T>
T ddet(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "ddet");
  Matrix<T> h = conj_transpose(a);
  T left = det_hermitian(Matrix<T>(h * a), cap);
  T right = det_hermitian(Matrix<T>(a * h), cap);
  Matrix<T> ha = h * a;
  if (!ScalarTraits<T>::is_zero(T(left - right), detail::det_tolerance(ha)))
    throw InconsistencyError("ddet: det(A*A) differs from det(AA*)");
  return left;
}

/// Sum of the principal minors of order r of a Hermitian matrix.
template <typename T>
T minor_sum(const Matrix<T>& h, std::size_t r, std::size_t cap = kDefaultEnumerationCap) {
  require_square(h, "minor_sum");
  if (r < 1 || r > h.rows()) throw PreconditionError("minor_sum: bad order");
  T s(0);
  for (const auto& beta : index_sets(r, h.rows())) s += det_hermitian(principal(h, beta), cap);
  return s;
}

/// Sum over column index sets containing j of
/// cdet_j of the principal submatrix of H with column j replaced by c.
template <typename T>
Quaternion<T> minor_sum_column(const Matrix<T>& h, std::size_t r, std::size_t j,
                               const QVector<T>& c, std::size_t cap = kDefaultEnumerationCap) {
  require_square(h, "minor_sum_column");
  if (r < 1 || r > h.rows() || j >= h.rows())
    throw PreconditionError("minor_sum_column: bad order or anchor");
  Matrix<T> hc = replace_column(h, j, c);
  Quaternion<T> s;
  for (const auto& beta : index_sets(r, h.rows(), static_cast<long>(j)))
    s += cdet(principal(hc, beta), position_in(beta, j), cap);
  return s;
}

/// Row mirror of minor_sum_column: rdet_i over row index sets containing i,
/// row i replaced by c.
template <typename T>
Quaternion<T> minor_sum_row(const Matrix<T>& h, std::size_t r, std::size_t i,
                            const QVector<T>& c, std::size_t cap = kDefaultEnumerationCap) {
  require_square(h, "minor_sum_row");
  if (r < 1 || r > h.rows() || i >= h.rows())
    throw PreconditionError("minor_sum_row: bad order or anchor");
  Matrix<T> hr = replace_row(h, i, c);
  Quaternion<T> s;
  for (const auto& alpha : index_sets(r, h.rows(), static_cast<long>(i)))
    s += rdet(principal(hr, alpha), position_in(alpha, i), cap);
  return s;
}

/// p(t) = t^n - d1 t^{n-1} + ... + (-1)^n dn, with dk the principal minor
/// sums.
template <typename T>
Polynomial<T> char_poly_hermitian(const Matrix<T>& a, std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "char_poly_hermitian");
  if (!is_hermitian(a)) throw PreconditionError("char_poly_hermitian: matrix is not Hermitian");
  const std::size_t n = a.rows();
  Polynomial<T> p;
  p.c.assign(n + 1, T(0));
  p.c[n] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    T d = minor_sum(a, k, cap);
    p.c[n - k] = (k % 2) ? T(-d) : d;
  }
  return p;
}

}  // namespace qlds

#endif  // QLDS_DETERMINANT_HPP
