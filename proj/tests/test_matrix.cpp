#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace qlds;

TEST(Matrix, ProductAssociativeAndAdjointReverses) {
  for (int t = 0; t < 50; ++t) {
    auto a = qt::rand_matrix<Rational>(3), b = qt::rand_matrix<Rational>(3),
         c = qt::rand_matrix<Rational>(3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a));
  }
}

TEST(Matrix, ShapeErrors) {
  MatrixQ a(2, 3), b(2, 3);
  EXPECT_THROW(a * b, PreconditionError);
  EXPECT_THROW(require_square(a, "x"), PreconditionError);
}

TEST(Matrix, StructuralPredicates) {
  auto h = qt::rand_hermitian<Rational>(3);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_TRUE(is_normal(h));
  EXPECT_TRUE(is_unitary(MatrixQ::identity(3)));
  EXPECT_TRUE(is_diagonal(MatrixQ::identity(3)));
}

TEST(Elimination, RankMatchesComplexAdjoint) {
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 3, r = 1 + t % n;
    auto a = qt::rand_rank_deficient<Rational>(n, r);
    EXPECT_EQ(2 * qrank(a), complex_rank(complex_adjoint(a)));
  }
}

TEST(Elimination, InverseAndSolves) {
  for (int t = 0; t < 40; ++t) {
    auto a = qt::rand_invertible<Rational>(3);
    auto inv = inverse_row_reduce(a);
    EXPECT_EQ(a * inv, MatrixQ::identity(3));
    EXPECT_EQ(inv * a, MatrixQ::identity(3));
    auto b = qt::rand_vector<Rational>(3);
    EXPECT_EQ(a * solve_right_row_reduce(a, b), b);
    EXPECT_EQ(solve_left_row_reduce(a, b) * a, b);
  }
  EXPECT_THROW(inverse_row_reduce(qt::rand_rank_deficient<Rational>(3, 2)), SingularError);
}

TEST(Elimination, NullSpaceIsRightKernel) {
  auto a = qt::rand_rank_deficient<Rational>(4, 2);
  auto ns = null_space_right(a);
  EXPECT_EQ(ns.size(), 4 - qrank(a));
  for (const auto& v : ns) {
    QVector<Rational> z = a * v;
    for (const auto& e : z) EXPECT_TRUE(is_zero(e));
  }
}

TEST(InnerProduct, GramSchmidtGivesUnitaryExact) {
  // Exact normalization needs norms that are sums of rational squares, which
  // always holds; exercised on integer vectors.
  for (int t = 0; t < 20; ++t) {
    std::vector<QVector<Rational>> vs;
    auto a = qt::rand_invertible<Rational>(3, 2);
    for (std::size_t j = 0; j < 3; ++j) vs.push_back(a.col(j));
    auto es = gram_schmidt_right(vs);
    EXPECT_TRUE(is_unitary(columns_to_matrix(es, 3)));
  }
  std::vector<QVector<Rational>> dep{{QuatQ(1), QuatQ(0)}, {QuatQ(2), QuatQ(0)}};
  EXPECT_THROW(gram_schmidt_right(dep), PreconditionError);
}

TEST(Polynomial, RealRootsExactAndRepeated) {
  // (t-1)^2 (t+3)(t-1/2)
  std::vector<Rational> c{1};
  for (Rational r : {Rational(1), Rational(1), Rational(-3), Rational(1, 2)}) {
    std::vector<Rational> nc(c.size() + 1, 0);
    for (std::size_t m = 0; m < c.size(); ++m) {
      nc[m + 1] += c[m];
      nc[m] -= r * c[m];
    }
    c = nc;
  }
  Polynomial<Rational> p{c};
  auto roots = real_roots(p);
  std::sort(roots.begin(), roots.end());
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_EQ(roots[0], Rational(-3));
  EXPECT_EQ(roots[1], Rational(1, 2));
  EXPECT_EQ(roots[2], Rational(1));
  EXPECT_EQ(roots[3], Rational(1));
}

TEST(Polynomial, IrrationalRootNotRepresentableExactly) {
  Polynomial<Rational> p{{Rational(-2), Rational(0), Rational(1)}};
  EXPECT_THROW(real_roots(p), NotRepresentableError);
  Polynomial<double> pd{{-2.0, 0.0, 1.0}};
  auto r = real_roots(pd);
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[1], std::sqrt(2.0), 1e-12);
}

TEST(Matrix, WorkedExampleProducts) {
  std::ifstream in(std::string(QLDS_FIXTURE_DIR) + "/normal3.json");
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = load_json_text(ss.str());
  auto n = parse_matrix<Rational>(j.at("A"), "A");
  auto t = parse_matrix<Rational>(j.at("T"), "T");
  EXPECT_EQ(conj_transpose(n) * n, parse_matrix<Rational>(j.at("M"), "M"));
  EXPECT_EQ(t * parse_matrix<Rational>(j.at("Tinv"), "Tinv"), MatrixQ::identity(3));
  EXPECT_EQ(MatrixQ::identity(3) * t, t);
}

TEST(Quaternion, SmallExamples) {
  QuatQ q{1, 2, 3, 4};
  EXPECT_EQ(conj(q) * q, QuatQ(30));
  QuatQ one_i{1, 1, 0, 0};
  EXPECT_EQ(inverse(one_i), (QuatQ{Rational(1, 2), Rational(-1, 2), 0, 0}));
}
