#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "facet/canonical.hpp"

namespace facet {

/// Brute-force vertex enumeration over every d-subset of rows. Shares only
/// the linear algebra with the pivoting solver.
struct OracleOptions {
  /// Absolute feasibility tolerance; nullopt means 1e-9 * (1 + max|b|).
  std::optional<double> feas_tol;
  /// Rows taking part; nullopt means all rows.
  std::optional<std::vector<bool>> active;
  /// Replaces the problem's objective when set.
  std::optional<Vector> objective;
  double max_subsets = 1e7;
};

struct OracleResult {
  bool feasible = false;
  Vector x;             // lexicographically smallest optimal vertex
  double objective = 0.0;
  std::size_t subsets = 0;
  std::size_t nonsingular = 0;
  std::size_t feasible_vertices = 0;
};

/// Number of d-subsets of n rows, as a double so large cases do not wrap.
double count_subsets(std::size_t n, std::size_t d);

/// Throws SizeGuardError when the subset count exceeds opts.max_subsets.
OracleResult enumerate_solve(const CanonicalLP& p, const OracleOptions& opts = {});

/// True when a_row x >= b_row - tol holds at every vertex of the other
/// active rows, i.e. the row is implied by them.
bool verify_redundant(const CanonicalLP& p, std::size_t row,
                      const std::vector<bool>& active, double tol);
bool verify_redundant(const CanonicalLP& p, std::size_t row, double tol);

}  // namespace facet
