#ifndef QLDS_SCALAR_HPP
#define QLDS_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace qlds {

/// Exact coefficient ring.
using Rational = mpq_class;

enum class Backend { exact, float64 };

inline std::string_view to_string(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

/// Uniform view of the two coefficient backends.
///
/// `exact` backends compare literally; float backends compare against a
/// caller-supplied tolerance. Every routine in the library is written
/// against this interface only.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::float64;

  static double from_int(long v) { return static_cast<double>(v); }
  static double from_ratio(long p, long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }
  static std::optional<double> sqrt(double v) {
    if (v < 0) return std::nullopt;
    return std::sqrt(v);
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::exact;

  static Rational from_int(long v) { return Rational(v); }
  static Rational from_ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  /// Exact binary value of `v`.
  static Rational from_double(double v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return Rational(::abs(v)); }
  static bool is_zero(const Rational& v, double) { return sgn(v) == 0; }
  /// Square root when it is itself rational, otherwise nullopt.
  static std::optional<Rational> sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) ||
        !mpz_perfect_square_p(v.get_den_mpz_t()))
      return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
};

template <typename T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Default tolerance used by float-mode structural predicates.
inline constexpr double kDefaultTolerance = 1e-10;

}  // namespace qlds

#endif  // QLDS_SCALAR_HPP
