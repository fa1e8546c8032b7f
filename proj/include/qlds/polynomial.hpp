#ifndef QLDS_POLYNOMIAL_HPP
#define QLDS_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace qlds {

/// Real polynomial c[0] + c[1] t + ... + c[n] t^n.
template <typename T>
struct Polynomial {
  std::vector<T> c;

  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  T operator()(const T& t) const {
    T acc(0);
    for (std::size_t m = c.size(); m-- > 0;) acc = T(acc * t + c[m]);
    return acc;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }
};

namespace detail {

using ZPoly = std::vector<mpz_class>;  // integer coefficients, low to high
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t t = 0; t < b.size(); ++t) a[t + shift] -= f * b[t];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline QPoly poly_div(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t t = 0; t < b.size(); ++t) a[t + shift] -= f * b[t];
    a.pop_back();
    trim(a);
  }
  return q;
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t m = 1; m < p.size(); ++m) d.push_back(Rational(p[m] * static_cast<long>(m)));
  return d;
}

inline Rational eval(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t m = p.size(); m-- > 0;) acc = acc * x + p[m];
  return acc;
}

inline int sign_at(const QPoly& p, const Rational& x) { return sgn(eval(p, x)); }

// Number of sign changes in a Sturm chain evaluated at x.
inline int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (true) {
    QPoly r = poly_mod(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Cauchy bound: every real root lies in (-B, B).
inline Rational root_bound(const QPoly& p) {
  Rational m(0);
  for (std::size_t t = 0; t + 1 < p.size(); ++t) {
    Rational r = abs(p[t] / p.back());
    if (r > m) m = r;
  }
  return m + 1;
}

// Isolates and refines the real roots of a square-free polynomial. Roots
// that turn up exactly as bisection midpoints are returned exactly.
inline void isolate(const QPoly& p, std::vector<Rational>& roots, double width) {
  std::vector<QPoly> chain = sturm_chain(p);
  Rational b = root_bound(p);
  struct Interval {
    Rational lo, hi;
  };
  std::vector<Interval> work{{Rational(-b), b}};
  const Rational eps(width);
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    int count = variations(chain, iv.lo) - variations(chain, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      // a single root in (lo, hi]; bisect on sign
      Rational lo = iv.lo, hi = iv.hi;
      if (sign_at(p, hi) == 0) {
        roots.push_back(hi);
        continue;
      }
      while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        if (sm == sign_at(p, hi))
          hi = mid;
        else
          lo = mid;
      }
      roots.push_back(Rational((lo + hi) / 2));
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
}

inline std::vector<mpz_class> divisors(mpz_class v, std::size_t cap) {
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0) return out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (out.size() > cap) throw CapExceededError("rational root search: too many divisors");
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(mpz_class(v / d));
    }
    if (d > 1000000) throw CapExceededError("rational root search: coefficient too large");
  }
  return out;
}

inline QPoly to_rational(const std::vector<Rational>& c) { return c; }
inline QPoly to_rational(const std::vector<double>& c) {
  QPoly q;
  for (double v : c) q.push_back(Rational(v));
  return q;
}

}  // namespace detail

/// Real roots with multiplicity, ascending. Every root must be real.
/// Rational roots are found exactly by the rational-root test (exact
/// backend); the remaining factor is made square-free and its roots are
/// isolated with Sturm sequences and refined by exact bisection.
/// Irrational roots cannot be represented in the exact backend and raise
/// NotRepresentableError; the float backend returns them refined to
/// `width`.
namespace detail {

// Aberth iteration for every complex root of a float polynomial. Returns
// the real parts when each root lies within 1e-4 (relative) of the real axis.
inline std::optional<std::vector<double>> near_real_roots(std::vector<double> c) {
  using C = std::complex<double>;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) return std::vector<double>{};
  const std::size_t n = c.size() - 1;
  double radius = 0;
  for (std::size_t m = 0; m < n; ++m) radius = std::max(radius, std::fabs(c[m] / c[n]));
  radius = 1 + radius;
  std::vector<C> z(n);
  for (std::size_t t = 0; t < n; ++t)
    z[t] = std::polar(radius * 0.5, 6.283185307179586 * (t + 0.25) / static_cast<double>(n));
  auto eval = [&](C x, C& d) {
    C v = 0;
    d = 0;
    for (std::size_t m = c.size(); m-- > 0;) {
      d = d * x + v;
      v = v * x + c[m];
    }
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    double move = 0;
    for (std::size_t t = 0; t < n; ++t) {
      C d;
      C v = eval(z[t], d);
      if (v == C(0)) continue;
      C ratio = v / d;
      C repulse = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (u != t) repulse += C(1) / (z[t] - z[u]);
      C step = ratio / (C(1) - ratio * repulse);
      z[t] -= step;
      move = std::max(move, std::abs(step) / std::max(1.0, std::abs(z[t])));
    }
    if (move < 1e-15) break;
  }
  std::vector<double> out;
  for (const auto& x : z) {
    if (std::fabs(x.imag()) > 1e-4 * std::max(1.0, std::abs(x))) return std::nullopt;
    out.push_back(x.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

template <typename T>
std::vector<T> real_roots(const Polynomial<T>& poly, double width = 1e-13) {
  using namespace detail;
  QPoly p = to_rational(poly.c);
  trim(p);
  if (p.empty()) throw PreconditionError("real_roots: zero polynomial");
  const std::size_t degree = p.size() - 1;
  std::vector<Rational> exact_roots;

  // zero roots
  while (p.size() > 1 && sgn(p[0]) == 0) {
    exact_roots.push_back(Rational(0));
    p.erase(p.begin());
  }

  if constexpr (is_exact_v<T>) {
    // primitive integer form for the rational-root test
    mpz_class den = 1;
    for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> zc;
    for (const auto& x : p) zc.push_back(mpz_class(x * den));
    auto nums = divisors(zc.front(), 4096);
    auto dens = divisors(zc.back(), 4096);
    bool found = true;
    while (found && p.size() > 1) {
      found = false;
      for (const auto& a : nums) {
        for (const auto& b : dens) {
          for (int s : {1, -1}) {
            Rational cand(mpz_class(s * a), b);
            cand.canonicalize();
            if (sgn(eval(p, cand)) == 0) {
              exact_roots.push_back(cand);
              p = poly_div(p, QPoly{Rational(-cand), Rational(1)});
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
  }

  std::vector<Rational> approx;
  if (p.size() > 1) {
    // Yun square-free decomposition: p = prod f_m^m
    QPoly a = p;
    QPoly d = derivative(a);
    QPoly g = poly_gcd(a, d);
    QPoly b = poly_div(a, g);
    QPoly c = poly_div(d, g);
    QPoly bp = derivative(b);
    QPoly dd;
    for (std::size_t t = 0; t < std::max(c.size(), bp.size()); ++t) {
      Rational u = t < c.size() ? c[t] : Rational(0);
      Rational v = t < bp.size() ? bp[t] : Rational(0);
      dd.push_back(Rational(u - v));
    }
    trim(dd);
    std::size_t mult = 1;
    while (b.size() > 1) {
      QPoly f = poly_gcd(b, dd);
      if (f.size() > 1) {
        std::vector<Rational> rs;
        isolate(f, rs, width);
        for (const auto& r : rs)
          for (std::size_t m = 0; m < mult; ++m) approx.push_back(r);
      }
      b = poly_div(b, f);
      c = poly_div(dd, f);
      bp = derivative(b);
      dd.clear();
      for (std::size_t t = 0; t < std::max(c.size(), bp.size()); ++t) {
        Rational u = t < c.size() ? c[t] : Rational(0);
        Rational v = t < bp.size() ? bp[t] : Rational(0);
        dd.push_back(Rational(u - v));
      }
      trim(dd);
      ++mult;
    }
  }

  if (exact_roots.size() + approx.size() != degree) {
    if constexpr (!is_exact_v<T>) {
      // Rounded coefficients can split a multiple real root into a complex
      // pair; fall back to all complex roots and snap near-real ones.
      std::vector<double> c;
      for (const auto& x : poly.c) c.push_back(static_cast<double>(x));
      if (auto near = detail::near_real_roots(c)) return *near;
    }
    throw PreconditionError("real_roots: polynomial has non-real roots");
  }

  std::vector<T> out;
  if constexpr (is_exact_v<T>) {
    for (const auto& r : approx) {
      if (sgn(eval(p, r)) != 0)
        throw NotRepresentableError("real_roots: irrational root near " +
                                    std::to_string(r.get_d()));
    }
    out.assign(exact_roots.begin(), exact_roots.end());
    out.insert(out.end(), approx.begin(), approx.end());
  } else {
    for (const auto& r : exact_roots) out.push_back(r.get_d());
    for (const auto& r : approx) out.push_back(r.get_d());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qlds

#endif  // QLDS_POLYNOMIAL_HPP
