#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "facet/canonical.hpp"
#include "facet/linalg.hpp"

namespace facet {

/// Numerical thresholds for one solve. Defaults follow the exact-arithmetic
/// rules as closely as double precision allows.
struct Tolerances {
  /// Row i is violated when sigma_i < -feas * (1 + max|b|).
  double feas = 1e-9;
  /// y_pj counts as positive when y_pj > pos.
  double pos = 1e-11;
  /// Relative tolerance for ties in the leaving ratio test.
  double ratio_tie = 1e-9;
  /// Dual coefficients may not drop below -dual.
  double dual = 1e-9;
  double singular = kDefaultSingularTol;

  double feasibility_threshold(const CanonicalLP& p) const;
};

/// Current base B^k (positional), its factorization, basic solution x^k and
/// the dual coefficients y_c^k aligned with the base positions.
struct BaseState {
  std::vector<std::size_t> base;
  Factorization factorization;
  Vector x;
  Vector y_c;
  std::size_t iteration = 0;
};

/// sigma_i = a_i x - b_i for every row.
struct Residuals {
  Vector sigma;
};

/// Entering row p and its coefficients over the current base:
/// a_p = y_p^T A_B.
struct EnteringExpansion {
  std::size_t p = 0;
  Vector y_p;
};

struct LeavingChoice {
  std::size_t position = 0;  // slot in the base
  std::size_t row = 0;       // row index q
  double ratio = 0.0;        // y_cq / y_pq
};

/// Builds the state for a given base and dual vector: factorizes A_B and
/// solves for x. Throws SingularError.
BaseState make_state(const CanonicalLP& p, std::vector<std::size_t> base,
                     Vector y_c, double singular_tol, std::size_t iteration = 0);

Residuals compute_residuals(const CanonicalLP& p, std::span<const double> x);

/// Least index i in `candidates` with sigma_i < -threshold; nullopt means
/// every candidate is satisfied. `candidates` must be sorted ascending.
std::optional<std::size_t> select_entering(const Residuals& r,
                                           std::span<const std::size_t> candidates,
                                           double threshold);

EnteringExpansion expand_entering(const BaseState& state, std::size_t p,
                                  const DenseMatrix& rows);

/// True when no y_pj exceeds pos_tol, i.e. the entering row cannot be
/// satisfied together with the current base: the problem is infeasible.
bool detect_infeasible(const EnteringExpansion& exp, double pos_tol);

/// Minimum ratio y_cj / y_pj over positions with y_pj > pos_tol; among
/// ties (relative ratio_tie_tol) the smallest row index wins.
/// Requires at least one y_pj > pos_tol.
LeavingChoice select_leaving(const BaseState& state, const EnteringExpansion& exp,
                             double pos_tol, double ratio_tie_tol);

/// Dual coefficients over the new base (p in q's slot). Throws
/// DualViolation if any entry falls below -dual_tol.
Vector update_dual(const BaseState& state, const EnteringExpansion& exp,
                   std::size_t q_position, double dual_tol);

/// True when every other y_pj is <= pos_tol; the leaving row is then implied
/// by the new base rows.
bool detect_redundant(const EnteringExpansion& exp, std::size_t q_position,
                      double pos_tol);

/// Substitutes p into q's slot, refactorizes and re-solves. Throws
/// SingularError if the new base is singular.
BaseState apply_pivot(const BaseState& state, std::size_t p,
                      std::size_t q_position, const CanonicalLP& lp,
                      Vector new_y_c, double singular_tol);

}  // namespace facet
