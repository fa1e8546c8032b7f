#ifndef QLDS_LQDS_HPP
#define QLDS_LQDS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cramer.hpp"
#include "drazin.hpp"
#include "matrix_exp.hpp"
#include "scalar_ode.hpp"

namespace qlds {

/// Vector polynomial sum_m C[m] t^m.
template <typename T>
struct PolynomialVector {
  std::size_t dim = 0;
  std::vector<QVector<T>> coeffs;

  PolynomialVector() = default;
  explicit PolynomialVector(std::size_t n) : dim(n) {}
  PolynomialVector(std::size_t n, std::vector<QVector<T>> c) : dim(n), coeffs(std::move(c)) {
    for (const auto& v : coeffs)
      if (v.size() != dim) throw PreconditionError("polynomial vector: coefficient length mismatch");
  }
  static PolynomialVector constant(const QVector<T>& v) { return {v.size(), {v}}; }

  /// Highest nonzero power, or -1 for the zero polynomial.
  long degree() const {
    for (std::size_t m = coeffs.size(); m-- > 0;)
      for (const auto& e : coeffs[m])
        if (!is_zero(e, 0.0)) return static_cast<long>(m);
    return -1;
  }
  bool is_zero_poly() const { return degree() < 0; }

  QVector<T> coeff(std::size_t m) const {
    return m < coeffs.size() ? coeffs[m] : QVector<T>(dim);
  }
  void set(std::size_t m, QVector<T> v) {
    if (coeffs.size() <= m) coeffs.resize(m + 1, QVector<T>(dim));
    coeffs[m] = std::move(v);
  }
  void trim() {
    long d = degree();
    coeffs.resize(static_cast<std::size_t>(d + 1));
  }

  QVector<T> operator()(const T& t) const {
    QVector<T> acc(dim);
    for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * Quaternion<T>(t) + coeffs[m];
    return acc;
  }
  QVector<double> eval_double(double t) const {
    QVector<double> acc(dim);
    for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * QuatD(t) + vector_cast<double>(coeffs[m]);
    return acc;
  }

  PolynomialVector derivative() const {
    PolynomialVector d(dim);
    for (std::size_t m = 1; m < coeffs.size(); ++m)
      d.set(m - 1, coeffs[m] * Quaternion<T>(T(static_cast<long>(m))));
    return d;
  }
  /// Antiderivative vanishing at t = 0.
  PolynomialVector integral() const {
    PolynomialVector r(dim);
    r.set(0, QVector<T>(dim));
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      r.set(m + 1, coeffs[m] * Quaternion<T>(ScalarTraits<T>::from_ratio(1, static_cast<long>(m + 1))));
    return r;
  }

  friend PolynomialVector operator+(const PolynomialVector& a, const PolynomialVector& b) {
    PolynomialVector r(a.dim);
    for (std::size_t m = 0; m < std::max(a.coeffs.size(), b.coeffs.size()); ++m)
      r.set(m, a.coeff(m) + b.coeff(m));
    return r;
  }
  friend PolynomialVector operator-(const PolynomialVector& a, const PolynomialVector& b) {
    PolynomialVector r(a.dim);
    for (std::size_t m = 0; m < std::max(a.coeffs.size(), b.coeffs.size()); ++m)
      r.set(m, a.coeff(m) - b.coeff(m));
    return r;
  }
  friend bool operator==(PolynomialVector a, PolynomialVector b) {
    a.trim();
    b.trim();
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

/// A·p (right systems) or p·A (left systems), coefficientwise.
template <typename T>
PolynomialVector<T> apply(Side side, const Matrix<T>& a, const PolynomialVector<T>& p) {
  PolynomialVector<T> r(a.rows());
  for (std::size_t m = 0; m < p.coeffs.size(); ++m)
    r.set(m, side == Side::right ? QVector<T>(a * p.coeffs[m]) : QVector<T>(p.coeffs[m] * a));
  return r;
}

template <typename T>
struct LqdsProblem {
  Side side = Side::right;
  Matrix<T> a;
  PolynomialVector<T> b;
  std::optional<double> t0;
  std::optional<QVector<T>> x0;

  void validate() const {
    require_square(a, "lqds problem");
    if (b.dim != a.rows()) throw PreconditionError("lqds problem: source length mismatch");
    if (x0 && x0->size() != a.rows())
      throw PreconditionError("lqds problem: initial vector length mismatch");
  }
};

enum class HomogeneousForm { none, exponential, fundamental };

/// x(t) = poly(t) + homogeneous part. The homogeneous part is
///   exponential:  e^{A(t-t0)} g  (right)   or  g e^{A(t-t0)}  (left)
///   fundamental:  P e^{D(t-t0)} P^{-1} g   or  g P e^{D(t-t0)} P^{-1}
/// and is always evaluated in binary64.
template <typename T>
struct ClosedFormSolution {
  Side side = Side::right;
  PolynomialVector<T> poly;
  HomogeneousForm form = HomogeneousForm::none;
  MatrixD a;
  MatrixD p, d;
  double t0 = 0.0;
  QVector<double> g;

  bool has_homogeneous() const {
    if (form == HomogeneousForm::none) return false;
    for (const auto& e : g)
      if (!is_zero(e)) return true;
    return false;
  }

  QVector<double> homogeneous(double t) const {
    if (!has_homogeneous()) return QVector<double>(poly.dim);
    MatrixD e = form == HomogeneousForm::exponential ? mat_exp(a, t - t0).value
                                                     : mat_exp_diag(p, d, t - t0);
    return side == Side::right ? QVector<double>(e * g) : QVector<double>(g * e);
  }

  QVector<double> operator()(double t) const { return poly.eval_double(t) + homogeneous(t); }
};

/// e^{A(t-t0)} x0 (right) or x0 e^{A(t-t0)} (left).
template <typename T>
ClosedFormSolution<T> hom_solution(Side side, const Matrix<T>& a, const QVector<T>& x0,
                                   double t0 = 0.0) {
  require_square(a, "hom_solution");
  if (x0.size() != a.rows()) throw PreconditionError("hom_solution: length mismatch");
  ClosedFormSolution<T> s;
  s.side = side;
  s.poly = PolynomialVector<T>(a.rows());
  s.form = HomogeneousForm::exponential;
  s.a = matrix_cast<double>(a);
  s.t0 = t0;
  s.g = vector_cast<double>(x0);
  return s;
}

/// Polynomial particular solution for invertible A, same degree as b:
/// right C_d = -A^{-1} B_d, C_m = A^{-1}((m+1) C_{m+1} - B_m); left mirrored.
template <typename T>
PolynomialVector<T> particular_polynomial(Side side, const Matrix<T>& a,
                                          const PolynomialVector<T>& b) {
  require_square(a, "particular_polynomial");
  PolynomialVector<T> c(a.rows());
  long d = b.degree();
  if (d < 0) return c;
  Matrix<T> inv = inv_general(a);
  QVector<T> next(a.rows());
  for (long m = d; m >= 0; --m) {
    QVector<T> rhs = next * Quaternion<T>(T(m + 1)) - b.coeff(static_cast<std::size_t>(m));
    QVector<T> cm = side == Side::right ? QVector<T>(inv * rhs) : QVector<T>(rhs * inv);
    c.set(static_cast<std::size_t>(m), cm);
    next = cm;
  }
  return c;
}

/// Constant particular solution -A^{-1} b (right) or -b A^{-1} (left). Every
/// component is also evaluated by the Cramer-type determinant formulas
/// (Hermitian and double-determinant paths as applicable) and they must
/// coincide.
template <typename T>
QVector<T> particular_invertible(Side side, const Matrix<T>& a, const QVector<T>& b) {
  require_square(a, "particular_invertible");
  Matrix<T> inv = inv_general(a);
  QVector<T> x = side == Side::right ? QVector<T>(-(inv * b)) : QVector<T>(-(b * inv));
  std::vector<CramerPath> paths{CramerPath::general};
  if (is_hermitian(a)) paths.push_back(CramerPath::hermitian);
  const double tol = is_exact_v<T> ? 0.0 : 1e-9 * std::max(1.0, frobenius(inv));
  for (CramerPath path : paths) {
    QVector<T> y = side == Side::right ? cramer_right(a, b, path) : cramer_left(a, b, path);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!approx_equal(x[i], Quaternion<T>(-y[i]), tol))
        throw InconsistencyError("particular_invertible: determinantal component disagrees");
  }
  return x;
}

namespace detail {

template <typename T>
T inv_factorial(unsigned m) {
  long f = 1;
  for (unsigned t = 2; t <= m; ++t) f *= static_cast<long>(t);
  return ScalarTraits<T>::from_ratio(1, f);
}

// Coefficients of the singular-case particular solution for a constant
// source, evaluated entrywise through anchored minor sums instead of the
// Drazin matrix: returns C_0..C_k.
template <typename T>
std::vector<QVector<T>> singular_constant_determinantal(Side side, const Matrix<T>& a,
                                                        const QVector<T>& b, unsigned k,
                                                        std::size_t r, std::size_t cap) {
  const std::size_t n = a.rows();
  std::vector<QVector<T>> c(k + 1, QVector<T>(n));
  auto apow = [&](unsigned l) { return power(a, l); };
  // powers of A applied to b from the proper side
  auto bpow = [&](unsigned l) {
    return side == Side::right ? QVector<T>(apow(l) * b) : QVector<T>(b * apow(l));
  };
  // y = A^D A^m b (right) or b A^m A^D (left)
  std::function<QVector<T>(unsigned)> drazin_times;
  const Matrix<T> ak = apow(k);
  if (r == 0) {
    drazin_times = [&](unsigned) { return QVector<T>(n); };
  } else if (is_hermitian(a)) {
    const Matrix<T> ak1 = apow(k + 1);
    const T den = minor_sum(ak1, r, cap);
    drazin_times = [&, ak1, den](unsigned m) {
      QVector<T> y(n);
      QVector<T> src = bpow(k + m);
      for (std::size_t i = 0; i < n; ++i)
        y[i] = (side == Side::right ? minor_sum_column(ak1, r, i, src, cap)
                                    : minor_sum_row(ak1, r, i, src, cap)) /
               den;
      return y;
    };
  } else {
    const Matrix<T> mm = apow(2 * k + 1);
    const Matrix<T> mh = conj_transpose(mm);
    drazin_times = [&, mm, mh](unsigned m) {
      QVector<T> y(n);
      if (side == Side::right) {
        const Matrix<T> h = mh * mm;
        const T den = minor_sum(h, r, cap);
        QVector<T> dhat = mh * bpow(k + m);
        QVector<T> inner(n);
        for (std::size_t t = 0; t < n; ++t) inner[t] = minor_sum_column(h, r, t, dhat, cap);
        y = ak * inner;
        for (auto& e : y) e = e / den;
      } else {
        const Matrix<T> h = mm * mh;
        const T den = minor_sum(h, r, cap);
        QVector<T> dcheck = bpow(k + m) * mh;
        QVector<T> inner(n);
        for (std::size_t s = 0; s < n; ++s) inner[s] = minor_sum_row(h, r, s, dcheck, cap);
        y = inner * ak;
        for (auto& e : y) e = e / den;
      }
      return y;
    };
  }
  c[0] = -drazin_times(0);
  for (unsigned m = 1; m <= k; ++m)
    c[m] = (bpow(m - 1) - drazin_times(m)) * Quaternion<T>(inv_factorial<T>(m));
  return c;
}

}  // namespace detail

/// Polynomial particular solution for any square A (singular allowed),
/// with E = A A^D and F_l the l-fold antiderivative of b from 0:
///   right  x = -sum_l (A^D)^{l+1} b^{(l)} + sum_{l<k} A^l (I - E) F_{l+1}
///   left   x = -sum_l b^{(l)} (A^D)^{l+1} + sum_{l<k} F_{l+1} (I - E) A^l
/// For a constant source every coefficient is recomputed through the
/// determinantal minor-sum formulas and must agree.
template <typename T>
PolynomialVector<T> particular_singular(Side side, const Matrix<T>& a,
                                        const PolynomialVector<T>& b,
                                        std::size_t cap = kDefaultEnumerationCap) {
  require_square(a, "particular_singular");
  if (b.dim != a.rows()) throw PreconditionError("particular_singular: length mismatch");
  const std::size_t n = a.rows();
  DrazinResult<T> dz = drazin_det(a, cap);
  const unsigned k = dz.index;
  const Matrix<T> id = Matrix<T>::identity(n);
  const Matrix<T> proj = id - a * dz.ad;  // I - E

  PolynomialVector<T> x(n);
  PolynomialVector<T> deriv = b;
  Matrix<T> adp = dz.ad;
  while (!deriv.is_zero_poly()) {
    x = x - apply(side, adp, deriv);
    deriv = deriv.derivative();
    adp = adp * dz.ad;
  }
  PolynomialVector<T> anti = b.integral();
  Matrix<T> al = id;
  for (unsigned l = 0; l < k; ++l) {
    Matrix<T> w = side == Side::right ? Matrix<T>(al * proj) : Matrix<T>(proj * al);
    x = x + apply(side, w, anti);
    anti = anti.integral();
    al = al * a;
  }
  x.trim();

  if (b.degree() <= 0) {
    QVector<T> b0 = b.coeff(0);
    auto c = detail::singular_constant_determinantal(side, a, b0, k, dz.rank, cap);
    const double tol = is_exact_v<T> ? 0.0 : 1e-8 * std::max(1.0, frobenius(a));
    for (std::size_t m = 0; m <= std::max<std::size_t>(k, x.coeffs.size()); ++m) {
      QVector<T> lhs = x.coeff(m);
      QVector<T> rhs = m < c.size() ? c[m] : QVector<T>(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!approx_equal(lhs[i], rhs[i], tol))
          throw InconsistencyError("particular_singular: determinantal coefficient disagrees");
    }
  }
  return x;
}

/// Initial data for a solution family.
struct InitialCondition {
  double t0 = 0.0;
  QVector<double> x0;
};

/// General solution when A = P D P^{-1} with D diagonal: polynomial
/// particular part plus P e^{D(t-t0)} P^{-1} g. With an initial condition g
/// is fixed by x(t0) = x0; otherwise the family member with g = 0 is
/// returned.
template <typename T>
ClosedFormSolution<T> general_solution_diagonalizable(Side side, const Matrix<T>& a,
                                                      const Matrix<T>& p, const Matrix<T>& d,
                                                      const PolynomialVector<T>& b,
                                                      std::optional<InitialCondition> init = {}) {
  require_square(a, "general_solution_diagonalizable");
  if (!is_diagonal(d, 0.0)) throw PreconditionError("general_solution_diagonalizable: D not diagonal");
  Matrix<T> pinv = inverse_row_reduce(p);
  const double tol = is_exact_v<T> ? 0.0 : 1e-8 * std::max(1.0, frobenius(a));
  if (!approx_equal(Matrix<T>(p * d * pinv), a, tol))
    throw PreconditionError("general_solution_diagonalizable: A != P D P^{-1}");
  ClosedFormSolution<T> s;
  s.side = side;
  s.poly = PolynomialVector<T>(a.rows());
  if (!b.is_zero_poly()) {
    bool singular = false;
    for (std::size_t i = 0; i < d.rows(); ++i) singular = singular || is_zero(d(i, i), 0.0);
    if (singular)
      throw SingularError(
          "general_solution_diagonalizable: A is singular; use the Drazin particular solution");
    s.poly = particular_polynomial(side, a, b);
  }
  s.form = HomogeneousForm::fundamental;
  s.a = matrix_cast<double>(a);
  s.p = matrix_cast<double>(p);
  s.d = matrix_cast<double>(d);
  s.g = QVector<double>(a.rows());
  if (init) {
    s.t0 = init->t0;
    s.g = init->x0 - s.poly.eval_double(init->t0);
  }
  return s;
}

/// Singular-case general solution: the Drazin particular solution plus
/// e^{At} (G b) (right) or (b G) e^{At} (left). The vector G b is the free
/// parameter `gb`; an initial condition fixes it by solving
/// e^{A t0} (G b) = x0 - poly(t0).
template <typename T>
ClosedFormSolution<T> general_solution_singular(Side side, const Matrix<T>& a,
                                                const PolynomialVector<T>& b,
                                                std::optional<QVector<double>> gb = {},
                                                std::optional<InitialCondition> init = {},
                                                std::size_t cap = kDefaultEnumerationCap) {
  ClosedFormSolution<T> s;
  s.side = side;
  s.poly = particular_singular(side, a, b, cap);
  s.form = HomogeneousForm::exponential;
  s.a = matrix_cast<double>(a);
  s.t0 = 0.0;
  s.g = gb ? *gb : QVector<double>(a.rows());
  if (init) {
    MatrixD e0 = mat_exp(s.a, init->t0).value;
    QVector<double> rhs = init->x0 - s.poly.eval_double(init->t0);
    s.g = side == Side::right ? solve_right_row_reduce(e0, rhs, 1e-12)
                              : solve_left_row_reduce(e0, rhs, 1e-12);
  }
  return s;
}

/// Solves a problem by the natural path: polynomial ansatz for invertible A,
/// Drazin particular solution otherwise; the homogeneous part is matched to
/// the initial condition when one is given.
template <typename T>
ClosedFormSolution<T> lqds_solve(const LqdsProblem<T>& pr,
                                 std::size_t cap = kDefaultEnumerationCap) {
  pr.validate();
  const std::size_t n = pr.a.rows();
  ClosedFormSolution<T> s;
  s.side = pr.side;
  bool invertible = qrank(pr.a) == n;
  s.poly = invertible ? particular_polynomial(pr.side, pr.a, pr.b)
                      : particular_singular(pr.side, pr.a, pr.b, cap);
  s.poly.trim();
  s.form = HomogeneousForm::exponential;
  s.a = matrix_cast<double>(pr.a);
  s.t0 = pr.t0.value_or(0.0);
  s.g = QVector<double>(n);
  if (pr.x0) {
    if constexpr (is_exact_v<T>) {
      s.g = vector_cast<double>(QVector<T>(*pr.x0 - s.poly(T(ScalarTraits<T>::from_double(s.t0)))));
    } else {
      s.g = *pr.x0 - s.poly(s.t0);
    }
  }
  return s;
}

template <typename T>
struct ResidualReport {
  bool exact = false;          // true when the polynomial identity path was used
  bool zero = false;           // exact path: identity holds
  double max_residual = 0.0;   // numeric path (or |witness| for the exact path)
  std::size_t witness_power = 0;
  std::size_t witness_index = 0;
  Quaternion<T> witness;
};

/// Residual of a solution against x' = A x + b (right) or x' = x A + b
/// (left). A purely polynomial solution in exact mode is checked as a
/// polynomial identity; anything else by central differences with h = 1e-5
/// at the sample times.
template <typename T>
ResidualReport<T> residual(const ClosedFormSolution<T>& sol, const Matrix<T>& a,
                           const PolynomialVector<T>& b, const std::vector<double>& samples) {
  ResidualReport<T> rep;
  if (is_exact_v<T> && !sol.has_homogeneous()) {
    rep.exact = true;
    PolynomialVector<T> r = sol.poly.derivative() - apply(sol.side, a, sol.poly) - b;
    rep.zero = true;
    for (std::size_t m = 0; m < r.coeffs.size() && rep.zero; ++m)
      for (std::size_t i = 0; i < r.dim; ++i)
        if (!is_zero(r.coeffs[m][i])) {
          rep.zero = false;
          rep.witness_power = m;
          rep.witness_index = i;
          rep.witness = r.coeffs[m][i];
          rep.max_residual = abs(r.coeffs[m][i]);
          break;
        }
    return rep;
  }
  const double h = 1e-5;
  const MatrixD ad = matrix_cast<double>(a);
  for (double t : samples) {
    QVector<double> xp = sol(t + h), xm = sol(t - h), x = sol(t);
    QVector<double> deriv = (xp - xm) * QuatD(1.0 / (2 * h));
    QVector<double> ax = sol.side == Side::right ? QVector<double>(ad * x) : QVector<double>(x * ad);
    QVector<double> res = deriv - ax - b.eval_double(t);
    for (const auto& e : res) rep.max_residual = std::max(rep.max_residual, abs(e));
  }
  rep.zero = rep.max_residual == 0.0;
  return rep;
}

}  // namespace qlds

#endif  // QLDS_LQDS_HPP
