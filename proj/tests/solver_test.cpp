#include "facet/solver.hpp"

#include <gtest/gtest.h>

#include "facet/errors.hpp"
#include "facet/generators.hpp"
#include "test_problems.hpp"

namespace facet {
namespace {

TEST(SolveStandardTest, AlreadyFeasibleStart) {
  const SolveOutcome o = solve_standard(testing::e1());
  EXPECT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_EQ(*o.x, (Vector{5}));
  EXPECT_EQ(*o.objective, -5);
  EXPECT_EQ(o.iterations, 0u);
  EXPECT_EQ(o.bound, 2u);
  EXPECT_TRUE(o.audit.all_passed());
}

TEST(SolveStandardTest, OnePivotWithRedundancyRemoval) {
  const SolveOutcome o = solve_standard(testing::e2());
  ASSERT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_EQ(*o.x, (Vector{2}));
  EXPECT_EQ(*o.objective, 2);
  ASSERT_EQ(o.iterations, 1u);
  const PivotRecord& r = o.trace[0];
  EXPECT_EQ(r.k, 0u);
  EXPECT_EQ(r.entering, 0u);
  EXPECT_EQ(r.leaving, 1u);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_EQ(r.sigma_p, -2.0);
  EXPECT_EQ(r.objective_before, 0.0);
  EXPECT_EQ(r.objective_after, 2.0);
  EXPECT_EQ(r.leaving_slack, 2.0);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.redundant_removed, 1u);  // x >= 0
  EXPECT_TRUE(o.audit.all_passed());
}

TEST(SolveStandardTest, TieBrokenToLeastIndex) {
  const SolveOutcome o = solve_standard(testing::e3());
  ASSERT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_EQ(*o.objective, -1);
  EXPECT_EQ(*o.x, (Vector{0, 1}));
  ASSERT_EQ(o.iterations, 1u);
  EXPECT_LE(o.iterations, o.bound);
  EXPECT_EQ(o.bound, 3u);
  EXPECT_EQ(o.trace[0].entering, 0u);
  EXPECT_EQ(o.trace[0].leaving, 3u);
  EXPECT_FALSE(o.trace[0].redundant_removed);
  EXPECT_EQ(o.snapshots.back().base, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(o.snapshots.back().y_c, (Vector{1, 0}));
}

TEST(SolveStandardTest, ConflictingRowsAreInfeasible) {
  const SolveOutcome o = solve_standard(testing::infeasible_pair());
  EXPECT_EQ(o.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(o.x);
  EXPECT_FALSE(o.objective);
  EXPECT_EQ(o.iterations, 1u);
  EXPECT_EQ(o.infeasible_row, 1u);
}

TEST(SolveStandardTest, KleeMintyTwo) {
  const StandardLP km = gen_klee_minty(2);
  const SolveOutcome o = solve_standard(km);
  ASSERT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_NEAR(*o.objective, -1, 1e-12);
  EXPECT_NEAR((*o.x)[0], 0, 1e-12);
  EXPECT_NEAR((*o.x)[1], 1, 1e-12);
  EXPECT_LE(o.iterations, km.num_constraints() + km.num_vars());
}

TEST(SolveStandardTest, ZeroObjectiveStopsAtLowerCorner) {
  auto p = testing::make_lp("z", {0, 0}, {{1, 1}}, {-3}, {-1, 0.5}, {1, 1});
  const SolveOutcome o = solve_standard(p);
  ASSERT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_EQ(*o.x, p.lower);
  EXPECT_EQ(o.iterations, 0u);
}

TEST(SolveCanonicalTest, RejectsInvalidCertificate) {
  CanonicalForm cf = to_canonical(testing::e3());
  cf.certificate.y0 = {1, -0.5};
  EXPECT_THROW(solve_canonical(cf.lp, cf.certificate), CertificateError);
}

TEST(SolveCanonicalTest, IterationCapIsReported) {
  const CanonicalForm cf = to_canonical(testing::e2());
  SolverOptions opts;
  opts.max_iter_factor = 0;
  const SolveOutcome o = solve_canonical(cf.lp, cf.certificate, opts);
  EXPECT_EQ(o.status, SolveStatus::kIterationCapExceeded);
  EXPECT_EQ(o.iterations, 0u);
  EXPECT_FALSE(o.diagnostic.empty());
}

TEST(SolveCanonicalTest, CustomCertificate) {
  // Base {x1 >= 0, x2 >= 0} certifies c = (1, 2) directly.
  CanonicalLP lp;
  lp.objective = {1, 2};
  lp.rows = DenseMatrix::FromRows({{1, 0}, {0, 1}, {1, 1}});
  lp.rhs = {0, 0, 1};
  lp.origin.resize(3);
  const SolveOutcome o = solve_canonical(lp, {{0, 1}, {1, 2}});
  ASSERT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_EQ(*o.objective, 1);
  EXPECT_EQ(*o.x, (Vector{1, 0}));
}

TEST(SolverProperty, OptimalOutcomesSatisfyOptimalityConditions) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const StandardLP p = gen_random_feasible(1 + seed % 5, seed % 11, seed);
    const CanonicalForm cf = to_canonical(p);
    const SolveOutcome o = solve_canonical(cf.lp, cf.certificate);
    ASSERT_EQ(o.status, SolveStatus::kOptimal) << p.name;
    const double feas = o.tolerances.feasibility_threshold(cf.lp);
    for (double s : compute_residuals(cf.lp, *o.x).sigma) EXPECT_GE(s, -feas);
    for (double y : o.snapshots.back().y_c) EXPECT_GE(y, -o.tolerances.dual);
    EXPECT_TRUE(verify_optimality(cf.lp, *o.x, o.snapshots.back().base,
                                  o.snapshots.back().y_c, 1e-8))
        << p.name;
  }
}

TEST(SolverProperty, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const StandardLP p = gen_random_feasible(4, 10, seed);
    const SolveOutcome a = solve_standard(p), b = solve_standard(p);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
      EXPECT_EQ(a.trace[k].entering, b.trace[k].entering);
      EXPECT_EQ(a.trace[k].leaving, b.trace[k].leaving);
      EXPECT_EQ(std::bit_cast<std::uint64_t>(a.trace[k].ratio),
                std::bit_cast<std::uint64_t>(b.trace[k].ratio));
      EXPECT_EQ(std::bit_cast<std::uint64_t>(a.trace[k].objective_after),
                std::bit_cast<std::uint64_t>(b.trace[k].objective_after));
    }
    for (std::size_t k = 0; k < a.snapshots.size(); ++k) {
      EXPECT_EQ(a.snapshots[k].x, b.snapshots[k].x);
    }
  }
}

TEST(VerifyOptimalityTest, Examples) {
  const StandardLP p = testing::e2();
  const CanonicalForm cf = to_canonical(p);
  const SolveOutcome o = solve_canonical(cf.lp, cf.certificate);
  const Snapshot& last = o.snapshots.back();
  EXPECT_TRUE(verify_optimality(cf.lp, last.x, last.base, last.y_c, 1e-9));
  EXPECT_FALSE(verify_optimality(cf.lp, {last.x[0] + 0.1}, last.base, last.y_c, 1e-9));
  // x = 3 is feasible but not on the base row x >= 2.
  EXPECT_FALSE(verify_optimality(cf.lp, {3}, last.base, last.y_c, 1e-9));
  // The starting point x = 0 is basic and dual feasible but violates x >= 2.
  EXPECT_FALSE(verify_optimality(cf.lp, {0}, cf.certificate.base, cf.certificate.y0, 1e-9));
}

}  // namespace
}  // namespace facet
