#include "facet/generators.hpp"

#include <gtest/gtest.h>

#include <random>

#include "facet/errors.hpp"
#include "facet/io.hpp"
#include "facet/pivot.hpp"

namespace facet {
namespace {

TEST(KleeMintyTest, Shape) {
  const StandardLP p = gen_klee_minty(3, 0.25);
  EXPECT_EQ(p.num_vars(), 3u);
  EXPECT_EQ(p.num_constraints(), 6u);
  EXPECT_EQ(p.objective, (Vector{0, 0, -1}));
  // x_3 - eps x_2 >= 0 and -x_3 - eps x_2 >= -1.
  EXPECT_EQ(p.constraints(4, 1), -0.25);
  EXPECT_EQ(p.constraints(4, 2), 1.0);
  EXPECT_EQ(p.constraints(5, 1), -0.25);
  EXPECT_EQ(p.constraints(5, 2), -1.0);
  EXPECT_EQ(p.rhs[5], -1.0);
  EXPECT_TRUE(is_feasible(p, {0, 0, 1}));
}

TEST(KleeMintyTest, RangeGuards) {
  EXPECT_THROW(gen_klee_minty(3, 0.0), RangeError);
  EXPECT_THROW(gen_klee_minty(3, 0.5), RangeError);
  EXPECT_THROW(gen_klee_minty(1), RangeError);
  EXPECT_THROW(gen_klee_minty(13), RangeError);
  EXPECT_NO_THROW(gen_klee_minty(12));
}

TEST(RandomFeasibleTest, InteriorPointIsStrictlyFeasible) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t d = 1 + seed % 5, m = seed % 13;
    const StandardLP p = gen_random_feasible(d, m, seed);
    // The interior point is the first d draws of the documented stream.
    std::mt19937_64 engine(seed);
    Vector z(d);
    for (auto& v : z) v = static_cast<double>(engine() >> 11) * 0x1p-53;
    const CanonicalForm cf = to_canonical(p);
    for (double s : compute_residuals(cf.lp, z).sigma) EXPECT_GT(s, 0.0);
    EXPECT_EQ(p.metadata.at("generator"), "mt19937_64");
    EXPECT_EQ(p.metadata.at("seed"), std::to_string(seed));
    EXPECT_EQ(p.lower, Vector(d, -1.0));
    EXPECT_EQ(p.upper, Vector(d, 2.0));
  }
}

TEST(RandomFeasibleTest, Deterministic) {
  EXPECT_EQ(write_problem(gen_random_feasible(3, 8, 1)),
            write_problem(gen_random_feasible(3, 8, 1)));
  EXPECT_NE(write_problem(gen_random_feasible(3, 8, 1)),
            write_problem(gen_random_feasible(3, 8, 2)));
}

TEST(InfeasibleTest, ConflictingRows) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const StandardLP p = gen_infeasible(1 + seed % 4, 2 + seed % 5, seed);
    Vector a(p.constraints.row(0).begin(), p.constraints.row(0).end());
    EXPECT_NEAR(dot(a, a), 1.0, 1e-12);
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(p.constraints(1, j), -a[j]);
    EXPECT_EQ(p.rhs[0], 1.0);
    EXPECT_EQ(p.rhs[1], 0.0);
  }
  EXPECT_THROW(gen_infeasible(2, 1, 1), RangeError);
  EXPECT_EQ(write_problem(gen_infeasible(3, 4, 9)), write_problem(gen_infeasible(3, 4, 9)));
}

TEST(GeneratorProperty, OutputsSatisfyStandardInvariants) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_NO_THROW(validate_standard(gen_random_feasible(1 + seed % 6, seed % 10, seed)));
    EXPECT_NO_THROW(validate_standard(gen_infeasible(1 + seed % 6, 2 + seed % 10, seed)));
  }
  for (std::size_t dim = 2; dim <= 12; ++dim) EXPECT_NO_THROW(validate_standard(gen_klee_minty(dim)));
}

}  // namespace
}  // namespace facet
