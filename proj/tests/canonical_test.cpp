#include "facet/canonical.hpp"

#include <gtest/gtest.h>

#include <random>

#include "facet/errors.hpp"
#include "facet/pivot.hpp"
#include "test_problems.hpp"

namespace facet {
namespace {

using testing::e1;
using testing::e3;

TEST(ToCanonicalTest, SingleVariableNegativeCost) {
  const CanonicalForm cf = to_canonical(e1());
  ASSERT_EQ(cf.lp.num_rows(), 3u);
  EXPECT_EQ(cf.lp.rows(0, 0), 1);
  EXPECT_EQ(cf.lp.rhs[0], 0);
  EXPECT_EQ(cf.lp.rows(1, 0), 1);
  EXPECT_EQ(cf.lp.rhs[1], 0);
  EXPECT_EQ(cf.lp.rows(2, 0), -1);
  EXPECT_EQ(cf.lp.rhs[2], -5);
  EXPECT_EQ(cf.certificate.base, (std::vector<std::size_t>{2}));
  EXPECT_EQ(cf.certificate.y0, (Vector{1}));
  // c = y0 * A_B0 = 1 * (-1).
  EXPECT_EQ(cf.certificate.y0[0] * cf.lp.rows(2, 0), cf.lp.objective[0]);
  EXPECT_EQ(cf.lp.origin[2], (RowOrigin{RowOrigin::Kind::kUpperBound, 0}));
}

TEST(ToCanonicalTest, ZeroObjectiveUsesLowerBounds) {
  const CanonicalForm cf =
      to_canonical(testing::make_lp("z", {0, 0}, {}, {}, {0, 0}, {1, 1}));
  EXPECT_EQ(cf.lp.num_rows(), 4u);
  EXPECT_EQ(cf.certificate.base, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(cf.certificate.y0, (Vector{0, 0}));
}

TEST(ToCanonicalTest, TwoVariableExampleStartsAtUpperCorner) {
  const CanonicalForm cf = to_canonical(e3());
  EXPECT_EQ(cf.lp.num_rows(), 5u);
  EXPECT_EQ(cf.certificate.base, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(cf.certificate.y0, (Vector{1, 1}));
  const BaseState s = make_state(cf.lp, cf.certificate.base, cf.certificate.y0, 1e-12);
  EXPECT_EQ(s.x, (Vector{1, 1}));
}

TEST(ToCanonicalTest, RejectsBadBounds) {
  auto p = e1();
  p.lower = {6};
  EXPECT_THROW(to_canonical(p), BoundsError);
  p.lower = {-std::numeric_limits<double>::infinity()};
  EXPECT_THROW(to_canonical(p), BoundsError);
}

TEST(ValidateCertificateTest, ConstructedCertificateIsValid) {
  const CanonicalForm cf = to_canonical(e3());
  EXPECT_NO_THROW(validate_certificate(cf.lp, cf.certificate, 1e-10));
}

CertificateError::Kind kind_of(const CanonicalLP& lp, const InitialCertificate& cert) {
  try {
    validate_certificate(lp, cert, 1e-10);
  } catch (const CertificateError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected CertificateError";
  return CertificateError::Kind::kEquationMismatch;
}

TEST(ValidateCertificateTest, ErrorKinds) {
  const CanonicalForm cf = to_canonical(e3());
  InitialCertificate neg = cf.certificate;
  neg.y0 = {1, -0.1};
  EXPECT_EQ(kind_of(cf.lp, neg), CertificateError::Kind::kNegativeCoefficient);

  InitialCertificate dup = cf.certificate;
  dup.base = {3, 3};
  EXPECT_EQ(kind_of(cf.lp, dup), CertificateError::Kind::kSingularBase);

  InitialCertificate mismatch = cf.certificate;
  mismatch.y0 = {1, 2};
  EXPECT_EQ(kind_of(cf.lp, mismatch), CertificateError::Kind::kEquationMismatch);

  // Rows 2 and 4 of the canonical form are +e1 and -e1.
  InitialCertificate parallel = cf.certificate;
  parallel.base = {1, 3};
  EXPECT_EQ(kind_of(cf.lp, parallel), CertificateError::Kind::kSingularBase);
}

TEST(MapSolutionBackTest, Examples) {
  const StandardSolution s1 = map_solution_back(e1(), {5});
  EXPECT_EQ(s1.objective, -5);
  EXPECT_EQ(s1.constraint_slack, (Vector{5}));
  EXPECT_EQ(s1.lower_slack, (Vector{5}));
  EXPECT_EQ(s1.upper_slack, (Vector{0}));

  const auto zero = testing::make_lp("z", {0, 0}, {}, {}, {0.5, -1}, {1, 1});
  EXPECT_EQ(map_solution_back(zero, zero.lower).objective, 0);

  const StandardSolution s3 = map_solution_back(e3(), {0, 1});
  EXPECT_EQ(s3.objective, -1);
  EXPECT_EQ(s3.constraint_slack, (Vector{0}));
}

TEST(CanonicalProperty, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 6, m = trial % 9;
    const StandardLP p = testing::random_standard(rng, d, m);
    const CanonicalForm cf = to_canonical(p);
    ASSERT_EQ(cf.lp.num_rows(), m + 2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        EXPECT_EQ(cf.lp.rows(m + j, k), j == k ? 1.0 : 0.0);
        EXPECT_EQ(cf.lp.rows(m + d + j, k), j == k ? -1.0 : 0.0);
      }
      EXPECT_EQ(cf.lp.rhs[m + j], p.lower[j]);
      EXPECT_EQ(cf.lp.rhs[m + d + j], -p.upper[j]);
    }
    for (double y : cf.certificate.y0) EXPECT_GE(y, 0.0);
    EXPECT_NO_THROW(validate_certificate(cf.lp, cf.certificate, 1e-10));

    const BaseState s = make_state(cf.lp, cf.certificate.base, cf.certificate.y0, 1e-12);
    for (std::size_t j = 0; j < d; ++j) {
      EXPECT_EQ(s.x[j], p.objective[j] >= 0 ? p.lower[j] : p.upper[j]);
    }

    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int k = 0; k < 20; ++k) {
      Vector x(d);
      for (auto& v : x) v = u(rng);
      EXPECT_EQ(is_feasible(p, x), is_feasible(cf.lp, x));
    }
  }
}

}  // namespace
}  // namespace facet
