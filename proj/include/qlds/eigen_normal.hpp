#ifndef QLDS_EIGEN_NORMAL_HPP
#define QLDS_EIGEN_NORMAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "determinant.hpp"
#include "elimination.hpp"
#include "inner_product.hpp"
#include "real_form.hpp"
#include "polynomial.hpp"

namespace qlds {

/// h + k i with k >= 0: the complex representative of a right eigenvalue
/// class.
template <typename T>
struct StandardEigenvalue {
  T re{0}, im{0};
  Quaternion<T> as_quaternion() const { return {re, im, T(0), T(0)}; }
  friend bool operator==(const StandardEigenvalue& a, const StandardEigenvalue& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <typename T>
struct SpectralDecomposition {
  std::vector<StandardEigenvalue<T>> eigenvalues;
  Matrix<T> eigenvectors;  // one column per eigenvalue
  Matrix<T> diagonal;      // diag of the eigenvalues
  bool unitary = false;
};

/// A v = v lambda, exactly or to `tol` entrywise.
template <typename T>
bool verify_eigenpair(const Matrix<T>& a, const QVector<T>& v, const Quaternion<T>& lambda,
                      double tol = 1e-8) {
  QVector<T> lhs = a * v;
  QVector<T> rhs = v * lambda;
  for (std::size_t t = 0; t < v.size(); ++t)
    if (!approx_equal(lhs[t], rhs[t], tol)) return false;
  return true;
}

namespace detail {

// Distinct values with multiplicities. Float values closer than 1e-8
// (relative to the largest) are merged and replaced by their mean.
template <typename T>
std::vector<std::pair<T, std::size_t>> group_roots(const std::vector<T>& roots) {
  std::vector<std::pair<T, std::size_t>> out;
  if constexpr (is_exact_v<T>) {
    for (const T& r : roots) {
      if (!out.empty() && out.back().first == r)
        ++out.back().second;
      else
        out.push_back({r, 1});
    }
  } else {
    double scale = 1.0;
    for (double r : roots) scale = std::max(scale, std::fabs(r));
    double sum = 0;
    for (std::size_t t = 0; t < roots.size(); ++t) {
      if (!out.empty() && std::fabs(roots[t] - roots[t - 1]) <= 1e-8 * scale) {
        sum += roots[t];
        ++out.back().second;
      } else {
        sum = roots[t];
        out.push_back({roots[t], 1});
      }
      out.back().first = sum / static_cast<double>(out.back().second);
    }
  }
  return out;
}

// Exact mode: roots of the characteristic polynomial. Float mode: Jacobi on
// the real form, since multiple roots of a rounded polynomial lose about
// half their digits per extra multiplicity.
template <typename T>
std::vector<T> hermitian_eigenvalues(const Matrix<T>& h) {
  if constexpr (is_exact_v<T>) {
    return real_roots(char_poly_hermitian(h));
  } else {
    return hermitian_spectrum(h);
  }
}

template <typename T>
T exact_or_float_sqrt(const T& v, const char* what) {
  if constexpr (is_exact_v<T>) {
    auto r = ScalarTraits<T>::sqrt(v);
    if (!r) throw NotRepresentableError(std::string(what) + ": square root is irrational");
    return *r;
  } else {
    return std::sqrt(std::max(0.0, v));
  }
}

template <typename T>
void sort_decomposition(SpectralDecomposition<T>& sd) {
  const std::size_t n = sd.eigenvalues.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = sd.eigenvalues[a];
    const auto& y = sd.eigenvalues[b];
    if (x.re != y.re) return x.re > y.re;
    return x.im > y.im;
  });
  std::vector<StandardEigenvalue<T>> ev;
  Matrix<T> u(sd.eigenvectors.rows(), n);
  for (std::size_t t = 0; t < n; ++t) {
    ev.push_back(sd.eigenvalues[order[t]]);
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, t) = sd.eigenvectors(i, order[t]);
  }
  sd.eigenvalues = std::move(ev);
  sd.eigenvectors = std::move(u);
  QVector<T> d;
  for (const auto& e : sd.eigenvalues) d.push_back(e.as_quaternion());
  sd.diagonal = Matrix<T>::diagonal(d);
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix from its characteristic polynomial,
/// with an orthonormal eigenvector basis obtained from the null spaces of
/// M - lambda I. Sorted in descending order.
template <typename T>
SpectralDecomposition<T> hermitian_eigs(const Matrix<T>& m, double tol = 1e-9) {
  require_square(m, "hermitian_eigs");
  if (!is_hermitian(m)) throw PreconditionError("hermitian_eigs: matrix is not Hermitian");
  const std::size_t n = m.rows();
  SpectralDecomposition<T> sd;
  std::vector<QVector<T>> cols;
  for (const auto& [lambda, mult] : detail::group_roots(detail::hermitian_eigenvalues(m))) {
    Matrix<T> shifted = m - Matrix<T>::identity(n) * Quaternion<T>(lambda);
    auto basis = null_space_right(shifted, tol);
    if (basis.size() != mult)
      throw InconsistencyError("hermitian_eigs: eigenspace dimension differs from multiplicity");
    for (auto& v : gram_schmidt_right(basis, tol)) {
      cols.push_back(std::move(v));
      sd.eigenvalues.push_back({lambda, T(0)});
    }
  }
  sd.eigenvectors = columns_to_matrix(cols, n);
  sd.unitary = true;
  detail::sort_decomposition(sd);
  return sd;
}

/// Unitary diagonalization of a normal matrix, U* N U = D with D holding
/// the standard eigenvalues. Eigenspaces of N*N are taken one at a time.
/// A one-dimensional eigenspace gives an eigenvector v of N directly; it is
/// scaled so its first nonzero entry is 1 and then rotated on the right by
/// the smallest rational factor that makes its eigenvalue complex with
/// nonnegative imaginary part. A larger eigenspace W is re-diagonalized:
/// the Hermitian part of N on W fixes the real parts, and on each of its
/// eigenspaces the skew part S obeys S^2 = -kappa^2 I, so v = S x + x kappa i
/// is an eigenvector for h + kappa i.
template <typename T>
SpectralDecomposition<T> normal_diagonalize(const Matrix<T>& nm, double tol = 1e-9) {
  require_square(nm, "normal_diagonalize");
  if (!is_normal(nm, tol)) throw PreconditionError("normal_diagonalize: matrix is not normal");
  const std::size_t n = nm.rows();
  const Quaternion<T> unit_i = Quaternion<T>::unit_i();
  const Quaternion<T> unit_j = Quaternion<T>::unit_j();
  Matrix<T> nh = conj_transpose(nm);
  Matrix<T> m = nh * nm;

  SpectralDecomposition<T> sd;
  std::vector<QVector<T>> cols;
  for (const auto& [lambda, mult] : detail::group_roots(detail::hermitian_eigenvalues(m))) {
    Matrix<T> shifted = m - Matrix<T>::identity(n) * Quaternion<T>(lambda);
    auto basis = null_space_right(shifted, tol);
    if (basis.size() != mult)
      throw InconsistencyError("normal_diagonalize: eigenspace dimension differs from multiplicity");

    if (mult == 1) {
      QVector<T> v = basis[0];
      for (const auto& e : v)
        if (!is_zero(e, tol)) {
          v = v * inverse(e);
          break;
        }
      T vn2 = vector_norm2(v);
      Quaternion<T> d = inner_right(QVector<T>(nm * v), v) / vn2;
      Quaternion<T> dv = vec(d);
      T kappa = detail::exact_or_float_sqrt(norm2(dv), "normal_diagonalize");
      Quaternion<T> w;
      if (ScalarTraits<T>::is_zero(kappa, tol)) {
        w = unit_scaling(v);
      } else {
        Quaternion<T> ahat = dv / kappa;
        // p ahat = i p, so p^{-1} i p = ahat
        Quaternion<T> p = Quaternion<T>(1) - unit_i * ahat;
        if (is_zero(p, tol)) p = unit_j;
        T target = norm2(p) / vn2;
        Quaternion<T> c;
        if constexpr (is_exact_v<T>) {
          auto cc = complex_with_norm2(target);
          if (!cc)
            throw NotRepresentableError(
                "normal_diagonalize: no rational unit rotation for this eigenvector");
          c = *cc;
        } else {
          c = Quaternion<T>(std::sqrt(target));
        }
        w = inverse(p) * c;
      }
      cols.push_back(v * w);
      sd.eigenvalues.push_back({d.w, kappa});
      continue;
    }

    auto e_basis = gram_schmidt_right(basis, tol);
    Matrix<T> e = columns_to_matrix(e_basis, n);
    Matrix<T> nw = conj_transpose(e) * nm * e;
    Matrix<T> nwh = conj_transpose(nw);
    const Quaternion<T> half(ScalarTraits<T>::from_ratio(1, 2));
    Matrix<T> hw = (nw + nwh) * half;
    Matrix<T> sw = (nw - nwh) * half;
    // symmetrize away float noise so the Hermitian test passes
    if constexpr (!is_exact_v<T>) hw = (hw + conj_transpose(hw)) * half;
    SpectralDecomposition<T> inner = hermitian_eigs(hw, tol);
    for (const auto& [h, hmult] : detail::group_roots([&] {
           std::vector<T> hs;
           for (const auto& ev : inner.eigenvalues) hs.push_back(ev.re);
           std::sort(hs.begin(), hs.end());
           return hs;
         }())) {
      std::vector<QVector<T>> xs;
      for (std::size_t t = 0; t < inner.eigenvalues.size(); ++t) {
        bool same;
        if constexpr (is_exact_v<T>)
          same = inner.eigenvalues[t].re == h;
        else
          same = std::fabs(inner.eigenvalues[t].re - h) <= 1e-8 * std::max(1.0, std::fabs(h));
        if (same) xs.push_back(inner.eigenvectors.col(t));
      }
      // S^2 = -kappa^2 on this subspace. In float mode |S x| / |x| keeps
      // full absolute accuracy where sqrt(lambda - h^2) would not.
      T kappa;
      if constexpr (is_exact_v<T>) {
        kappa = detail::exact_or_float_sqrt(T(lambda - h * h), "normal_diagonalize");
      } else {
        kappa = std::sqrt(vector_norm2(QVector<T>(sw * xs.front())) / vector_norm2(xs.front()));
      }
      std::vector<QVector<T>> found;
      if (ScalarTraits<T>::is_zero(kappa, tol)) {
        found = xs;
      } else {
        for (const auto& x0 : xs) {
          if (found.size() == xs.size()) break;
          QVector<T> x = x0;
          for (const auto& f : found) x = x - f * inner_right(x, f);
          if (ScalarTraits<T>::to_double(vector_norm2(x)) <= tol * tol) continue;
          QVector<T> v = sw * x + x * Quaternion<T>(T(0), kappa, T(0), T(0));
          if (ScalarTraits<T>::to_double(vector_norm2(v)) <= tol * tol) {
            QVector<T> xj = x * unit_j;
            v = sw * xj + xj * Quaternion<T>(T(0), kappa, T(0), T(0));
          }
          found.push_back(normalize_right(v));
        }
        if (found.size() != xs.size())
          throw InconsistencyError("normal_diagonalize: degenerate eigenspace not resolved");
      }
      for (const auto& v : found) {
        cols.push_back(e * v);
        sd.eigenvalues.push_back({h, kappa});
      }
    }
  }

  sd.eigenvectors = columns_to_matrix(cols, n);
  detail::sort_decomposition(sd);
  Matrix<T> dcheck = conj_transpose(sd.eigenvectors) * nm * sd.eigenvectors;
  const double dtol = is_exact_v<T> ? 0.0 : 1e-9 * std::max(1.0, frobenius(nm));
  if (!approx_equal(dcheck, sd.diagonal, dtol))
    throw InconsistencyError("normal_diagonalize: U* N U is not the expected diagonal");
  sd.unitary = is_unitary(sd.eigenvectors, 1e-9);
  if (!sd.unitary) throw InconsistencyError("normal_diagonalize: eigenvector matrix not unitary");
  if constexpr (!is_exact_v<T>) sd.diagonal = dcheck;
  return sd;
}

/// Eigen-structure of A = T N T^{-1} carried over from the normal matrix N:
/// same standard eigenvalues, eigenvectors T U.
template <typename T>
SpectralDecomposition<T> transported_eigs(const Matrix<T>& t, const Matrix<T>& nm,
                                          double tol = 1e-9) {
  require_square(t, "transported_eigs");
  if (t.rows() != nm.rows()) throw PreconditionError("transported_eigs: shape mismatch");
  T dd = ddet(t);
  if (ScalarTraits<T>::is_zero(dd, is_exact_v<T> ? 0.0 : 1e-12))
    throw SingularError("transported_eigs: similarity matrix is singular");
  SpectralDecomposition<T> sd = normal_diagonalize(nm, tol);
  Matrix<T> a = t * nm * inverse_row_reduce(t);
  sd.eigenvectors = t * sd.eigenvectors;
  const double vtol = is_exact_v<T> ? 0.0 : 1e-8 * std::max(1.0, frobenius(a) * frobenius(t));
  if (!approx_equal(Matrix<T>(a * sd.eigenvectors), Matrix<T>(sd.eigenvectors * sd.diagonal),
                    vtol))
    throw InconsistencyError("transported_eigs: A V != V D");
  sd.unitary = is_unitary(sd.eigenvectors, tol);
  return sd;
}

}  // namespace qlds

#endif  // QLDS_EIGEN_NORMAL_HPP
