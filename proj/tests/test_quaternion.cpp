#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace qlds;
using qt::rand_quat;

namespace {
const QuatQ I{0, 1, 0, 0}, J{0, 0, 1, 0}, K{0, 0, 0, 1};
}

TEST(Quaternion, UnitTable) {
  EXPECT_EQ(I * I, QuatQ(-1));
  EXPECT_EQ(J * J, QuatQ(-1));
  EXPECT_EQ(K * K, QuatQ(-1));
  EXPECT_EQ(I * J * K, QuatQ(-1));
  EXPECT_EQ(I * J, K);
  EXPECT_EQ(J * I, -K);
  EXPECT_EQ(J * K, I);
  EXPECT_EQ(K * I, J);
}

TEST(Quaternion, RingAxiomsExact) {
  for (int t = 0; t < 200; ++t) {
    QuatQ a = rand_quat<Rational>(), b = rand_quat<Rational>(), c = rand_quat<Rational>();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(conj(a * b), conj(b) * conj(a));
    EXPECT_EQ(norm2(a * b), norm2(a) * norm2(b));
    EXPECT_EQ(a * conj(a), QuatQ(norm2(a)));
    if (!is_zero(a)) {
      EXPECT_EQ(a * inverse(a), QuatQ(1));
      EXPECT_EQ(inverse(a) * a, QuatQ(1));
    }
  }
}

TEST(Quaternion, InverseOfZeroIsSingular) {
  EXPECT_THROW(inverse(QuatQ(0)), SingularError);
  EXPECT_THROW(inverse(QuatD(0.0)), SingularError);
}

TEST(Quaternion, ExpPureImaginaryMatchesEuler) {
  for (double th : {0.0, 0.3, 1.0, 2.5, 7.0}) {
    QuatD e = qexp(QuatD{0, th, 0, 0});
    EXPECT_NEAR(e.w, std::cos(th), 1e-13);
    EXPECT_NEAR(e.x, std::sin(th), 1e-13);
  }
  // e^{a + v} = e^a (cos|v| + v/|v| sin|v|)
  QuatD q{0.5, 1.0, -2.0, 2.0};
  QuatD e = qexp(q);
  const double s = std::exp(0.5) * std::sin(3.0) / 3.0;
  EXPECT_NEAR(e.w, std::exp(0.5) * std::cos(3.0), 1e-12);
  EXPECT_NEAR(e.x, s, 1e-12);
  EXPECT_NEAR(e.y, -2 * s, 1e-12);
  EXPECT_NEAR(e.z, 2 * s, 1e-12);
}

TEST(Quaternion, ExpCommutingSumAndInverse) {
  for (int t = 0; t < 50; ++t) {
    QuatD a = rand_quat<double>(2);
    // a and a*s + r commute for real r, s
    QuatD b = a * QuatD(qt::rand_real(-1, 1)) + QuatD(qt::rand_real(-1, 1));
    EXPECT_TRUE(approx_equal(qexp(a) * qexp(b), qexp(a + b), 1e-9));
    EXPECT_TRUE(approx_equal(qexp(a) * qexp(-a), QuatD(1.0), 1e-12));
  }
}

TEST(ScalarOde, MatchesClosedFormAndDerivative) {
  for (Side side : {Side::right, Side::left}) {
    QuatD a{0.3, -1.0, 0.5, 0.2}, q0{1, 2, -1, 0.5}, f{0.0, 1.0, 0.0, -1.0};
    auto sol = [&](double t) { return scalar_lqde_solve(a, q0, 0.0, f, side, t).value; };
    EXPECT_TRUE(approx_equal(sol(0.0), q0, 1e-14));
    for (double t : {0.2, 0.7, 1.3}) {
      const double h = 1e-5;
      QuatD d = (sol(t + h) - sol(t - h)) / (2 * h);
      QuatD rhs = side == Side::right ? a * sol(t) + f : sol(t) * a + f;
      EXPECT_TRUE(approx_equal(d, rhs, 1e-7)) << to_string(side) << " t=" << t;
    }
  }
  auto z = scalar_lqde_solve(QuatD(0.0), QuatD(1.0), 0.0, QuatD{0, 1, 0, 0}, Side::right, 2.0);
  EXPECT_TRUE(z.singular_coefficient);
  EXPECT_TRUE(approx_equal(z.value, QuatD{1, 2, 0, 0}, 1e-15));
}
