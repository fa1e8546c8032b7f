#ifndef QLDS_QUATERNION_HPP
#define QLDS_QUATERNION_HPP

#include <cmath>
#include <ostream>
#include <type_traits>
#include <utility>

#include "errors.hpp"
#include "scalar.hpp"

namespace qlds {

/// w + x i + y j + z k with coefficients in T (Rational or double).
template <typename T>
struct Quaternion {
  T w{0}, x{0}, y{0}, z{0};

  Quaternion() = default;
  Quaternion(T w_, T x_, T y_, T z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  // implicit: a real scalar is a quaternion
  Quaternion(const T& real) : w(real), x(0), y(0), z(0) {}
  Quaternion(int real) : w(real), x(0), y(0), z(0) {}

  static Quaternion unit_i() { return {T(0), T(1), T(0), T(0)}; }
  static Quaternion unit_j() { return {T(0), T(0), T(1), T(0)}; }
  static Quaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }

  const T& operator[](int c) const {
    switch (c) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }
  T& operator[](int c) {
    switch (c) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) {
    return {T(-a.w), T(-a.x), T(-a.y), T(-a.z)};
  }

  // Hamilton product; the term order is fixed so float results are reproducible.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {T(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
            T(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            T(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
            T(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }
  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return {T(s * q.w), T(s * q.x), T(s * q.y), T(s * q.z)};
  }
  friend Quaternion operator*(const Quaternion& q, const T& s) { return s * q; }
  friend Quaternion operator/(const Quaternion& q, const T& s) {
    if (ScalarTraits<T>::is_zero(s, 0.0)) throw SingularError("division by zero scalar");
    return {T(q.w / s), T(q.x / s), T(q.y / s), T(q.z / s)};
  }

  /// Literal equality; meaningful for the exact backend.
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
  }
};

template <typename T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return {q.w, T(-q.x), T(-q.y), T(-q.z)};
}

template <typename T>
T norm2(const Quaternion<T>& q) {
  return T(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

template <typename T>
double abs(const Quaternion<T>& q) {
  return std::sqrt(ScalarTraits<T>::to_double(norm2(q)));
}

template <typename T>
bool is_zero(const Quaternion<T>& q, double tol = 0.0) {
  using S = ScalarTraits<T>;
  return S::is_zero(q.w, tol) && S::is_zero(q.x, tol) && S::is_zero(q.y, tol) &&
         S::is_zero(q.z, tol);
}

template <typename T>
bool is_real(const Quaternion<T>& q, double tol = 0.0) {
  using S = ScalarTraits<T>;
  return S::is_zero(q.x, tol) && S::is_zero(q.y, tol) && S::is_zero(q.z, tol);
}

/// Componentwise comparison; tolerance is ignored by the exact backend.
template <typename T>
bool approx_equal(const Quaternion<T>& a, const Quaternion<T>& b, double tol) {
  return is_zero(Quaternion<T>(a - b), is_exact_v<T> ? 0.0 : tol);
}

template <typename T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  T n = norm2(q);
  if (ScalarTraits<T>::is_zero(n, 0.0)) throw SingularError("inverse of zero quaternion");
  return conj(q) / n;
}

/// Vector (imaginary) part.
template <typename T>
Quaternion<T> vec(const Quaternion<T>& q) {
  return {T(0), q.x, q.y, q.z};
}

template <typename T>
Quaternion<double> to_double(const Quaternion<T>& q) {
  using S = ScalarTraits<T>;
  return {S::to_double(q.w), S::to_double(q.x), S::to_double(q.y), S::to_double(q.z)};
}

inline Quaternion<double> to_double(const Quaternion<double>& q) { return q; }

template <typename To, typename From>
Quaternion<To> quat_cast(const Quaternion<From>& q) {
  if constexpr (std::is_same_v<To, From>) {
    return q;
  } else if constexpr (std::is_same_v<To, double>) {
    return to_double(q);
  } else {
    using S = ScalarTraits<To>;
    return {S::from_double(q.w), S::from_double(q.x), S::from_double(q.y),
            S::from_double(q.z)};
  }
}

using QuatQ = Quaternion<Rational>;
using QuatD = Quaternion<double>;

/// e^q. Argument halving until |q| <= 1/2, 20-term Horner series, then
/// repeated squaring.
inline QuatD qexp(const QuatD& q) {
  int halvings = 0;
  QuatD s = q;
  while (abs(s) > 0.5) {
    s = s * 0.5;
    ++halvings;
  }
  QuatD acc(1.0);
  for (int n = 20; n >= 1; --n) acc = QuatD(1.0) + (s * acc) * (1.0 / n);
  for (int h = 0; h < halvings; ++h) acc = acc * acc;
  return acc;
}

}  // namespace qlds

#endif  // QLDS_QUATERNION_HPP
