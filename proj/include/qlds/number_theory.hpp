#ifndef QLDS_NUMBER_THEORY_HPP
#define QLDS_NUMBER_THEORY_HPP

#include <array>
#include <optional>

#include "quaternion.hpp"

namespace qlds {

namespace detail {

inline std::optional<mpz_class> isqrt_exact(const mpz_class& v) {
  if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// a^2 + b^2 = v, searched from the largest a down.
inline std::optional<std::array<mpz_class, 2>> two_squares(const mpz_class& v,
                                                           unsigned long cap) {
  if (sgn(v) < 0) return std::nullopt;
  mpz_class a;
  mpz_sqrt(a.get_mpz_t(), v.get_mpz_t());
  for (unsigned long it = 0; sgn(a) >= 0 && it < cap; ++it, --a) {
    if (auto b = isqrt_exact(mpz_class(v - a * a))) return std::array<mpz_class, 2>{a, *b};
    if (2 * a * a < v) break;  // past the symmetric point
  }
  return std::nullopt;
}

inline std::optional<std::array<mpz_class, 4>> four_squares(const mpz_class& v,
                                                            unsigned long cap) {
  mpz_class a;
  mpz_sqrt(a.get_mpz_t(), v.get_mpz_t());
  unsigned long budget = cap;
  for (; sgn(a) >= 0 && budget > 0; --a) {
    mpz_class ra = v - a * a;
    mpz_class b;
    mpz_sqrt(b.get_mpz_t(), ra.get_mpz_t());
    for (; sgn(b) >= 0 && budget > 0; --b, --budget) {
      if (auto cd = two_squares(mpz_class(ra - b * b), 64))
        return std::array<mpz_class, 4>{a, b, (*cd)[0], (*cd)[1]};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline constexpr unsigned long kSquareSearchCap = 200000;

/// A quaternion c = a + b i with |c|^2 = target, or nullopt when no rational
/// pair exists within the search budget. A real c is preferred.
inline std::optional<QuatQ> complex_with_norm2(const Rational& target,
                                               unsigned long cap = kSquareSearchCap) {
  if (sgn(target) < 0) return std::nullopt;
  if (auto r = ScalarTraits<Rational>::sqrt(target)) return QuatQ(*r);
  // target = p/q = (p q) / q^2
  mpz_class pq = target.get_num() * target.get_den();
  if (auto ab = detail::two_squares(pq, cap)) {
    Rational a((*ab)[0], target.get_den()), b((*ab)[1], target.get_den());
    a.canonicalize();
    b.canonicalize();
    return QuatQ(a, b, Rational(0), Rational(0));
  }
  return std::nullopt;
}

/// A quaternion s with |s|^2 = target. Every positive rational is a sum of
/// four rational squares; real and complex solutions are tried first.
inline QuatQ quaternion_with_norm2(const Rational& target,
                                   unsigned long cap = kSquareSearchCap) {
  if (sgn(target) <= 0) throw PreconditionError("quaternion_with_norm2: target must be positive");
  if (auto c = complex_with_norm2(target, cap)) return *c;
  mpz_class pq = target.get_num() * target.get_den();
  auto r = detail::four_squares(pq, cap);
  if (!r) throw NotRepresentableError("no four-square representation found within budget");
  std::array<Rational, 4> s;
  for (int t = 0; t < 4; ++t) {
    s[t] = Rational((*r)[t], target.get_den());
    s[t].canonicalize();
  }
  return QuatQ(s[0], s[1], s[2], s[3]);
}

}  // namespace qlds

#endif  // QLDS_NUMBER_THEORY_HPP
