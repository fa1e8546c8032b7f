#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qlds;

namespace {

template <typename T>
PolynomialVector<T> rand_poly(std::size_t n, int degree) {
  PolynomialVector<T> b(n);
  for (int m = 0; m <= degree; ++m) b.set(static_cast<std::size_t>(m), qt::rand_vector<T>(n, 2));
  return b;
}

}  // namespace

TEST(PolynomialVector, CalculusRoundTrip) {
  auto p = rand_poly<Rational>(3, 2);
  EXPECT_EQ(p.integral().derivative(), p);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(PolynomialVector<Rational>(3).degree(), -1);
  EXPECT_EQ(p(Rational(0)), p.coeff(0));
}

TEST(Lqds, InvertibleAnsatzIsExactSolution) {
  for (int t = 0; t < 30; ++t) {
    Side side = t % 2 ? Side::left : Side::right;
    std::size_t n = 1 + t % 3;
    auto a = qt::rand_invertible<Rational>(n, 2);
    auto b = rand_poly<Rational>(n, t % 3);
    auto c = particular_polynomial(side, a, b);
    EXPECT_EQ(c.derivative() - apply(side, a, c), b);
  }
}

TEST(Lqds, ConstantInvertibleMatchesCramer) {
  for (int t = 0; t < 10; ++t) {
    auto a = qt::rand_invertible<Rational>(3, 2);
    auto b = qt::rand_vector<Rational>(3);
    for (Side side : {Side::right, Side::left}) {
      auto x = particular_invertible(side, a, b);
      auto c = particular_polynomial(side, a, PolynomialVector<Rational>::constant(b));
      EXPECT_EQ(c.coeff(0), x);
    }
  }
}

TEST(Lqds, SingularDrazinPolynomialIsExactSolution) {
  for (int t = 0; t < 30; ++t) {
    Side side = t % 2 ? Side::left : Side::right;
    std::size_t n = 2 + t % 2;
    auto a = t % 3 == 0 ? qt::rand_nilpotent<Rational>(n)
                        : qt::rand_rank_deficient<Rational>(n, n - 1, 1);
    auto b = rand_poly<Rational>(n, t % 3);
    auto x = particular_singular(side, a, b);
    EXPECT_EQ(x.derivative() - apply(side, a, x), b) << "t=" << t;
    // degree bound: deg b + index
    EXPECT_LE(x.degree(), b.degree() + static_cast<long>(matrix_index(a)));
  }
}

TEST(Lqds, SingularPathAgreesWithAnsatzWhenInvertible) {
  auto a = qt::rand_invertible<Rational>(3, 2);
  auto b = rand_poly<Rational>(3, 1);
  EXPECT_EQ(particular_singular(Side::right, a, b), particular_polynomial(Side::right, a, b));
}

TEST(Lqds, InitialConditionIsMet) {
  for (Side side : {Side::right, Side::left}) {
    LqdsProblem<Rational> pr;
    pr.side = side;
    pr.a = qt::rand_rank_deficient<Rational>(3, 2, 1);
    pr.b = rand_poly<Rational>(3, 1);
    pr.t0 = 0.25;
    pr.x0 = qt::rand_vector<Rational>(3);
    auto s = lqds_solve(pr);
    EXPECT_LT(max_abs_diff(s(0.25), vector_cast<double>(*pr.x0)), 1e-12);
    auto rep = residual(s, pr.a, pr.b, {0.0, 0.5, 1.0});
    EXPECT_FALSE(rep.exact);
    EXPECT_LT(rep.max_residual, 1e-5);
  }
}

TEST(Lqds, DiagonalizableRequiresFactorization) {
  auto a = qt::rand_invertible<Rational>(2, 2);
  EXPECT_THROW(general_solution_diagonalizable(Side::right, a, MatrixQ::identity(2),
                                               MatrixQ::identity(2), PolynomialVector<Rational>(2)),
               PreconditionError);
}

TEST(Lqds, ResidualReportsWitness) {
  auto a = MatrixQ::identity(2);
  PolynomialVector<Rational> b(2);
  b.set(0, {QuatQ(1), QuatQ(0)});
  ClosedFormSolution<Rational> wrong;
  wrong.poly = PolynomialVector<Rational>(2);
  auto rep = residual(wrong, a, b, {});
  EXPECT_TRUE(rep.exact);
  EXPECT_FALSE(rep.zero);
  EXPECT_EQ(rep.witness_power, 0u);
  EXPECT_EQ(rep.witness_index, 0u);
  EXPECT_EQ(rep.witness, QuatQ(-1));
}
