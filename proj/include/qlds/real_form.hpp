#ifndef QLDS_REAL_FORM_HPP
#define QLDS_REAL_FORM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace qlds {

/// 4x4 real block representing v -> q v on the coefficient vector of v.
inline std::array<std::array<double, 4>, 4> left_mult_block(const QuatD& q) {
  return {{{q.w, -q.x, -q.y, -q.z},
           {q.x, q.w, -q.z, q.y},
           {q.y, q.z, q.w, -q.x},
           {q.z, -q.y, q.x, q.w}}};
}

/// 4x4 real block representing v -> v q.
inline std::array<std::array<double, 4>, 4> right_mult_block(const QuatD& q) {
  return {{{q.w, -q.x, -q.y, -q.z},
           {q.x, q.w, q.z, -q.y},
           {q.y, -q.z, q.w, q.x},
           {q.z, q.y, -q.x, q.w}}};
}

/// Row-major 4n x 4n real matrix of x -> A x.
inline std::vector<double> left_real_form(const MatrixD& a) {
  const std::size_t n = a.rows(), m = 4 * n;
  std::vector<double> big(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto blk = left_mult_block(a(i, j));
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) big[(4 * i + r) * m + 4 * j + c] = blk[r][c];
    }
  return big;
}

/// Eigenvalues of a Hermitian quaternion matrix, ascending, by cyclic Jacobi
/// on its real form (symmetric, every eigenvalue repeated four times).
inline std::vector<double> hermitian_spectrum(const MatrixD& h) {
  const std::size_t n = h.rows(), m = 4 * n;
  std::vector<double> a = left_real_form(h);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0, total = 0;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        total += at(r, c) * at(r, c);
        if (r != c) off += at(r, c) * at(r, c);
      }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> diag(m);
  for (std::size_t r = 0; r < m; ++r) diag[r] = at(r, r);
  std::sort(diag.begin(), diag.end());
  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t)
    out[t] = (diag[4 * t] + diag[4 * t + 1] + diag[4 * t + 2] + diag[4 * t + 3]) / 4;
  return out;
}

}  // namespace qlds

#endif  // QLDS_REAL_FORM_HPP
