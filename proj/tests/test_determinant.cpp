#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qlds;

namespace {
MatrixQ m2() {
  MatrixQ a(2, 2);
  a(0, 0) = QuatQ(1);
  a(0, 1) = QuatQ{0, 0, 0, 1};
  a(1, 0) = QuatQ{0, 0, 0, -1};
  a(1, 1) = QuatQ(2);
  return a;
}
}  // namespace

TEST(Determinant, SmallKnownValues) {
  EXPECT_EQ(rdet(MatrixQ::identity(3), 0), QuatQ(1));
  EXPECT_EQ(rdet(m2(), 0), QuatQ(1));
  EXPECT_EQ(rdet(m2(), 1), QuatQ(1));
  EXPECT_EQ(cdet(m2(), 0), QuatQ(1));
  EXPECT_EQ(det_hermitian(m2()), Rational(1));
}

TEST(Determinant, MatchesDefinitionByBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      auto a = qt::rand_matrix<Rational>(n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(rdet(a, i), qt::naive_det(a, i, true)) << "n=" << n << " i=" << i;
        EXPECT_EQ(cdet(a, i), qt::naive_det(a, i, false)) << "n=" << n << " j=" << i;
      }
    }
}

TEST(Determinant, TermCountIsFactorial) {
  std::size_t f = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    f *= n;
    MatrixQ a = MatrixQ::identity(n);
    for (std::size_t anchor = 0; anchor < n; ++anchor) EXPECT_EQ(expansion_terms(a, anchor), f);
  }
}

TEST(Determinant, CapIsEnforced) {
  EXPECT_THROW(rdet(MatrixQ::identity(9), 0), CapExceededError);
  EXPECT_THROW(rdet(MatrixQ::identity(4), 0, 3), CapExceededError);
  EXPECT_NO_THROW(rdet(MatrixQ::identity(4), 0, 4));
}

TEST(Determinant, HermitianRowAndColumnDeterminantsAgreeAndAreReal) {
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + t % 3;
    auto a = qt::rand_hermitian<Rational>(n);
    QuatQ d0 = rdet(a, 0);
    EXPECT_TRUE(is_real(d0));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(rdet(a, i), d0);
      EXPECT_EQ(cdet(a, i), d0);
    }
  }
}

TEST(Determinant, RowReplacementByLeftCombinationVanishes) {
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + t % 3, i = static_cast<std::size_t>(t) % n;
    auto a = qt::rand_hermitian<Rational>(n);
    QVector<Rational> row(n), col(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      QuatQ c = qt::rand_quat<Rational>(2);
      row = row + c * a.row_vec(k);
      col = col + a.col(k) * c;
    }
    auto ar = replace_row(a, i, row);
    EXPECT_EQ(rdet(ar, i), QuatQ(0));
    EXPECT_EQ(cdet(ar, i), QuatQ(0));
    auto ac = replace_column(a, i, col);
    EXPECT_EQ(cdet(ac, i), QuatQ(0));
    EXPECT_EQ(rdet(ac, i), QuatQ(0));
  }
}

TEST(Determinant, DoubleDeterminantMatchesComplexAdjoint) {
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + t % 3;
    auto a = t % 4 == 0 ? qt::rand_rank_deficient<Rational>(n + 1, n) : qt::rand_matrix<Rational>(n);
    Rational d = ddet(a);
    EXPECT_EQ(d, det_hermitian(Matrix<Rational>(a * conj_transpose(a))));
    auto [re, im] = complex_det(complex_adjoint(a));
    EXPECT_EQ(d, re);
    EXPECT_EQ(im, Rational(0));
    EXPECT_EQ(d == 0, qrank(a) < a.rows());
  }
}

TEST(Determinant, MinorSums) {
  EXPECT_EQ(minor_sum(MatrixQ::identity(3), 2), Rational(3));
  EXPECT_THROW(minor_sum(MatrixQ::identity(3), 4), PreconditionError);
  EXPECT_THROW(minor_sum(MatrixQ::identity(3), 0), PreconditionError);
}

TEST(Determinant, CharacteristicPolynomialSmall) {
  auto p = char_poly_hermitian(MatrixQ::identity(2));
  EXPECT_EQ(p.c, (std::vector<Rational>{1, -2, 1}));
  MatrixQ d = MatrixQ::diagonal({QuatQ(2), QuatQ(3)});
  EXPECT_EQ(char_poly_hermitian(d).c, (std::vector<Rational>{6, -5, 1}));
  EXPECT_THROW(char_poly_hermitian(qt::rand_invertible<Rational>(2) * MatrixQ::diagonal({QuatQ{0, 1, 0, 0}, QuatQ(1)})),
               PreconditionError);
}

TEST(Determinant, FloatBackendAgreesWithExact) {
  for (int t = 0; t < 20; ++t) {
    auto a = qt::rand_hermitian<Rational>(3);
    EXPECT_NEAR(det_hermitian(matrix_cast<double>(a)), det_hermitian(a).get_d(), 1e-9);
  }
}
