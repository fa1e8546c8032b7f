#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qlds;

TEST(Cramer, HermitianInverseSmall) {
  EXPECT_EQ(inv_hermitian(MatrixQ::identity(3)), MatrixQ::identity(3));
  EXPECT_EQ(inv_hermitian(MatrixQ::diagonal({QuatQ(2), QuatQ(4)})),
            MatrixQ::diagonal({QuatQ(Rational(1, 2)), QuatQ(Rational(1, 4))}));
}

TEST(Cramer, HermitianInverseRandom) {
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 3;
    auto a = qt::rand_hermitian<Rational>(n);
    if (det_hermitian(a) == 0) {
      EXPECT_THROW(inv_hermitian(a), SingularError);
      continue;
    }
    auto inv = inv_hermitian(a);
    EXPECT_EQ(a * inv, MatrixQ::identity(n));
    EXPECT_EQ(inv, inverse_row_reduce(a));
  }
}

TEST(Cramer, GeneralInverseAgreesWithElimination) {
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 3;
    auto a = qt::rand_invertible<Rational>(n);
    auto inv = inv_general(a);
    EXPECT_EQ(inv, inverse_row_reduce(a));
    EXPECT_EQ(inv * a, MatrixQ::identity(n));
  }
}

TEST(Cramer, SingularInputsSignal) {
  for (int t = 0; t < 20; ++t) {
    auto a = qt::rand_rank_deficient<Rational>(3, 1 + t % 2);
    auto b = qt::rand_vector<Rational>(3);
    EXPECT_THROW(inv_general(a), SingularError);
    EXPECT_THROW(cramer_right(a, b), SingularError);
    EXPECT_THROW(cramer_left(a, b), SingularError);
  }
}

TEST(Cramer, ResidualsExactlyZeroBothPaths) {
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 3;
    auto a = t % 2 ? qt::rand_invertible<Rational>(n) : qt::rand_hermitian<Rational>(n);
    if (qrank(a) < n) continue;
    auto b = qt::rand_vector<Rational>(n);
    auto xr = cramer_right(a, b, CramerPath::general);
    auto xl = cramer_left(a, b, CramerPath::general);
    EXPECT_EQ(QVector<Rational>(a * xr), b);
    EXPECT_EQ(QVector<Rational>(xl * a), b);
    if (is_hermitian(a)) {
      EXPECT_EQ(cramer_right(a, b, CramerPath::hermitian), xr);
      EXPECT_EQ(cramer_left(a, b, CramerPath::hermitian), xl);
    }
  }
}

TEST(Cramer, LeftSystemIsAdjointOfRightSystem) {
  // x A = b  <=>  A* x* = b*
  for (int t = 0; t < 20; ++t) {
    auto a = qt::rand_invertible<Rational>(3);
    auto b = qt::rand_vector<Rational>(3);
    auto xl = cramer_left(a, b);
    QVector<Rational> bc(3);
    for (std::size_t i = 0; i < 3; ++i) bc[i] = conj(b[i]);
    auto xr = cramer_right(conj_transpose(a), bc);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(xl[i], conj(xr[i]));
  }
}

TEST(Cramer, FloatPathMatchesExact) {
  auto a = qt::rand_invertible<Rational>(3);
  auto b = qt::rand_vector<Rational>(3);
  auto x = cramer_right(a, b);
  auto xd = cramer_right(matrix_cast<double>(a), vector_cast<double>(b));
  EXPECT_LT(max_abs_diff(xd, vector_cast<double>(x)), 1e-9);
}
