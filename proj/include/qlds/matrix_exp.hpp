#ifndef QLDS_MATRIX_EXP_HPP
#define QLDS_MATRIX_EXP_HPP

#include "elimination.hpp"
#include "matrix.hpp"

namespace qlds {

enum class ExpMethod { series, diagonalized };

struct ExpResult {
  MatrixD value;
  ExpMethod method = ExpMethod::series;
  int scaling_steps = 0;
};

/// e^{A t}: halve A t until its Frobenius norm is at most 1/2, sum 18 terms
/// of the series by Horner's rule, then square back.
inline ExpResult mat_exp(const MatrixD& a, double t = 1.0) {
  require_square(a, "mat_exp");
  const std::size_t n = a.rows();
  MatrixD s = a * QuatD(t);
  int steps = 0;
  while (frobenius(s) > 0.5) {
    s = s * QuatD(0.5);
    ++steps;
  }
  const MatrixD id = MatrixD::identity(n);
  MatrixD acc = id;
  for (int m = 18; m >= 1; --m) acc = id + (s * acc) * QuatD(1.0 / m);
  for (int h = 0; h < steps; ++h) acc = acc * acc;
  return {acc, ExpMethod::series, steps};
}

/// P e^{D t} P^{-1} with e^{D t} taken entrywise on the diagonal.
inline MatrixD mat_exp_diag(const MatrixD& p, const MatrixD& d, double t = 1.0) {
  require_square(p, "mat_exp_diag");
  if (d.rows() != p.rows() || !d.square()) throw PreconditionError("mat_exp_diag: shape mismatch");
  if (!is_diagonal(d, 0.0)) throw PreconditionError("mat_exp_diag: D is not diagonal");
  MatrixD pinv = inverse_row_reduce(p, 1e-12);
  QVector<double> e;
  for (std::size_t i = 0; i < d.rows(); ++i) e.push_back(qexp(d(i, i) * t));
  return p * MatrixD::diagonal(e) * pinv;
}

}  // namespace qlds

#endif  // QLDS_MATRIX_EXP_HPP
