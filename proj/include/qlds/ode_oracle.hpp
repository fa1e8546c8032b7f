#ifndef QLDS_ODE_ORACLE_HPP
#define QLDS_ODE_ORACLE_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "lqds.hpp"
#include "real_form.hpp"

namespace qlds {

inline std::vector<double> embed(const QVector<double>& v) {
  std::vector<double> r;
  r.reserve(4 * v.size());
  for (const auto& q : v)
    for (int c = 0; c < 4; ++c) r.push_back(q[c]);
  return r;
}

inline QVector<double> extract(const std::vector<double>& r) {
  QVector<double> v(r.size() / 4);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int c = 0; c < 4; ++c) v[i][c] = r[4 * i + c];
  return v;
}

/// The 4n x 4n real matrix of x -> A x (right) or x -> x A (left), row-major.
inline std::vector<double> real_embedding(Side side, const MatrixD& a) {
  const std::size_t n = a.rows(), m = 4 * n;
  std::vector<double> big(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // right: (Ax)_i += a_ij x_j ; left: (xA)_j += x_i a_ij
      const auto blk = side == Side::right ? left_mult_block(a(i, j)) : right_mult_block(a(i, j));
      const std::size_t br = side == Side::right ? i : j;
      const std::size_t bc = side == Side::right ? j : i;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) big[(4 * br + r) * m + 4 * bc + c] = blk[r][c];
    }
  return big;
}

/// Fixed-step classical Runge-Kutta on the real embedding of
/// x' = A x + b(t) (right) or x' = x A + b(t) (left).
template <typename T>
QVector<double> rk4_integrate(Side side, const Matrix<T>& a, const PolynomialVector<T>& b,
                              const QVector<double>& x0, double t0, double t1,
                              std::size_t steps) {
  if (steps < 1) throw PreconditionError("rk4_integrate: steps must be positive");
  const MatrixD ad = matrix_cast<double>(a);
  const std::size_t m = 4 * ad.rows();
  const std::vector<double> big = real_embedding(side, ad);
  auto f = [&](double t, const std::vector<double>& y) {
    std::vector<double> out = embed(b.eval_double(t));
    for (std::size_t r = 0; r < m; ++r) {
      double s = 0;
      for (std::size_t c = 0; c < m; ++c) s += big[r * m + c] * y[c];
      out[r] += s;
    }
    return out;
  };
  auto axpy = [](const std::vector<double>& y, double h, const std::vector<double>& k) {
    std::vector<double> r(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) r[t] = y[t] + h * k[t];
    return r;
  };
  std::vector<double> y = embed(x0);
  const double h = (t1 - t0) / static_cast<double>(steps);
  double t = t0;
  for (std::size_t s = 0; s < steps; ++s) {
    auto k1 = f(t, y);
    auto k2 = f(t + h / 2, axpy(y, h / 2, k1));
    auto k3 = f(t + h / 2, axpy(y, h / 2, k2));
    auto k4 = f(t + h, axpy(y, h, k3));
    for (std::size_t r = 0; r < m; ++r) y[r] += h / 6 * (k1[r] + 2 * k2[r] + 2 * k3[r] + k4[r]);
    t = t0 + static_cast<double>(s + 1) * h;
  }
  return extract(y);
}

/// Largest |closed(t) - rk4(t)| over the grid. RK4 starts from closed(t0)
/// and uses `steps_per_point` steps from t0 to each grid time.
template <typename T>
double compare(const ClosedFormSolution<T>& closed, const LqdsProblem<T>& problem,
               const std::vector<double>& grid, std::size_t steps_per_point = 2000) {
  const double t0 = problem.t0.value_or(0.0);
  const QVector<double> x0 = closed(t0);
  double worst = 0;
  for (double t : grid) {
    QVector<double> ref = t == t0 ? x0
                                  : rk4_integrate(problem.side, problem.a, problem.b, x0, t0, t,
                                                  steps_per_point);
    worst = std::max(worst, max_abs_diff(closed(t), ref));
  }
  return worst;
}

}  // namespace qlds

#endif  // QLDS_ODE_ORACLE_HPP
