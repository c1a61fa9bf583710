#include "facet/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "facet/errors.hpp"

namespace facet {
namespace {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

DenseMatrix permuted(const DenseMatrix& m, std::span<const std::size_t> perm) {
  return m.select_rows(perm);
}

void ExpectReconstructs(const DenseMatrix& m, const Factorization& f) {
  const DenseMatrix lu = multiply(f.lower(), f.upper());
  const DenseMatrix pm = permuted(m, f.permutation());
  const double scale = m.max_abs();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      EXPECT_NEAR(lu(i, j), pm(i, j), 1e-10 * scale) << i << "," << j;
}

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

TEST(DenseMatrixTest, RejectsBadShapeAndNonFinite) {
  EXPECT_THROW(DenseMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(DenseMatrix(1, 1, {std::numeric_limits<double>::quiet_NaN()}),
               std::invalid_argument);
  EXPECT_THROW(DenseMatrix(1, 1, {std::numeric_limits<double>::infinity()}),
               std::invalid_argument);
}

TEST(FactorizeTest, Scalar) {
  const DenseMatrix m(1, 1, {2.0});
  const Factorization f = factorize(m);
  ExpectReconstructs(m, f);
  EXPECT_DOUBLE_EQ(f.pivots()[0], 2.0);
}

TEST(FactorizeTest, IdentityNeedsNoPermutation) {
  const DenseMatrix m = DenseMatrix::Identity(2);
  const Factorization f = factorize(m);
  ExpectReconstructs(m, f);
  EXPECT_EQ(f.permutation()[0], 0u);
  EXPECT_EQ(f.permutation()[1], 1u);
}

TEST(FactorizeTest, AntiDiagonalNeedsRowSwap) {
  const DenseMatrix m = DenseMatrix::FromRows({{0, 1}, {1, 0}});
  const Factorization f = factorize(m, 1e-12);
  EXPECT_EQ(f.permutation()[0], 1u);
  // L U = P M, multiplied out by hand: P M = [[1,0],[0,1]].
  ExpectReconstructs(m, f);
  const DenseMatrix lu = multiply(f.lower(), f.upper());
  EXPECT_EQ(lu, DenseMatrix::Identity(2));
}

TEST(FactorizeTest, SingularErrorReportsStep) {
  const DenseMatrix m = DenseMatrix::FromRows({{1, 2}, {2, 4}});
  try {
    factorize(m);
    FAIL() << "expected SingularError";
  } catch (const SingularError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
  std::size_t step = 99;
  EXPECT_FALSE(try_factorize(DenseMatrix(2, 2), kDefaultSingularTol, &step));
  EXPECT_EQ(step, 0u);
}

TEST(FactorizeTest, ToleranceIsRelativeToColumn) {
  const DenseMatrix m = DenseMatrix::FromRows({{1, 1}, {1, 1 + 1e-13}});
  EXPECT_THROW(factorize(m, 1e-12), SingularError);
  EXPECT_NO_THROW(factorize(m, 1e-14));
}

TEST(SolveColumnsTest, Examples) {
  EXPECT_EQ(factorize(DenseMatrix::Identity(2)).solve_columns(Vector{3, -1}),
            (Vector{3, -1}));
  EXPECT_EQ(factorize(DenseMatrix::FromRows({{-1, 0}, {0, -1}})).solve_columns(Vector{-1, -1}),
            (Vector{1, 1}));
  // -x2 = -1 gives x2 = 1, then x1 + 1 = -1 gives x1 = -2.
  const DenseMatrix m = DenseMatrix::FromRows({{1, 1}, {0, -1}});
  const Vector x = factorize(m).solve_columns(Vector{-1, -1});
  EXPECT_NEAR(x[0], -2, 1e-15);
  EXPECT_NEAR(x[1], 1, 1e-15);
  // The post-pivot base of the two-variable example: (0, 1).
  const DenseMatrix e3 = DenseMatrix::FromRows({{-1, -1}, {0, -1}});
  const Vector x3 = factorize(e3).solve_columns(Vector{-1, -1});
  EXPECT_NEAR(x3[0], 0, 1e-15);
  EXPECT_NEAR(x3[1], 1, 1e-15);
  const Vector back = e3.multiply(x3);
  EXPECT_NEAR(back[0], -1, 1e-15);
  EXPECT_NEAR(back[1], -1, 1e-15);
}

TEST(SolveRowsTest, Examples) {
  EXPECT_EQ(factorize(DenseMatrix::Identity(2)).solve_rows(Vector{0, 1}), (Vector{0, 1}));
  const DenseMatrix neg = DenseMatrix::FromRows({{-1, 0}, {0, -1}});
  EXPECT_EQ(factorize(neg).solve_rows(Vector{-1, -1}), (Vector{1, 1}));
  EXPECT_EQ(factorize(neg).solve_rows(Vector{1, 1}), (Vector{-1, -1}));
}

TEST(LinalgProperty, RoundTripAndTransposeDuality) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const DenseMatrix m = random_matrix(rng, n);
    auto f = try_factorize(m);
    if (!f) continue;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector rhs(n);
    for (auto& v : rhs) v = u(rng);

    const Vector x = f->solve_columns(rhs);
    const Vector back = m.multiply(x);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(back[i], rhs[i], 1e-7 * (1 + max_abs(rhs)));
    }

    const Vector y = f->solve_rows(rhs);
    const Vector y_t = factorize(m.transposed()).solve_columns(rhs);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y[i], y_t[i], 1e-9 * (1 + max_abs(y)));
    const Vector row_back = m.transposed().multiply(y);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(row_back[i], rhs[i], 1e-8 * (1 + max_abs(rhs)));
    }
  }
}

TEST(LinalgProperty, DuplicatedRowIsSingular) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 11;
    DenseMatrix m = random_matrix(rng, n);
    const std::size_t src = trial % n, dst = (trial / n + 1 + src) % n;
    if (src == dst) continue;
    for (std::size_t j = 0; j < n; ++j) m(dst, j) = m(src, j);
    EXPECT_THROW(factorize(m), SingularError) << "n=" << n;
  }
}

}  // namespace
}  // namespace facet
