#ifndef QLDS_SCALAR_ODE_HPP
#define QLDS_SCALAR_ODE_HPP

#include "quaternion.hpp"

namespace qlds {

enum class Side { right, left };

inline const char* to_string(Side s) { return s == Side::right ? "right" : "left"; }

struct ScalarOdeValue {
  QuatD value;
  /// a = 0: the particular part is f (t - t0) instead of a constant.
  bool singular_coefficient = false;
};

/// Value at t of the solution of q' = a q + f (right) or q' = q a + f (left)
/// with q(t0) = q0, for constant a and f.
inline ScalarOdeValue scalar_lqde_solve(const QuatD& a, const QuatD& q0, double t0,
                                        const QuatD& f, Side side, double t) {
  const double dt = t - t0;
  if (is_zero(a)) return {q0 + f * dt, true};
  const QuatD e = qexp(a * dt);
  if (side == Side::right) {
    const QuatD p = -(inverse(a) * f);
    return {e * (q0 - p) + p, false};
  }
  const QuatD p = -(f * inverse(a));
  return {(q0 - p) * e + p, false};
}

}  // namespace qlds

#endif  // QLDS_SCALAR_ODE_HPP
