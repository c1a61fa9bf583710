#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facet/audit.hpp"
#include "facet/canonical.hpp"
#include "facet/pivot.hpp"

namespace facet {

struct SolverOptions {
  Tolerances tol;
  /// The loop stops after max_iter_factor * (n - d) pivots.
  std::size_t max_iter_factor = 4;
  /// Run audit_trace on the finished trace.
  bool audit = true;
};

enum class SolveStatus { kOptimal, kInfeasible, kNumericalBreakdown, kIterationCapExceeded };

const char* to_string(SolveStatus s);
std::optional<SolveStatus> status_from_string(const std::string& s);

/// One facet pivot, k -> k+1. Row indices are 0-based.
struct PivotRecord {
  std::size_t k = 0;
  std::size_t entering = 0;
  std::size_t leaving = 0;
  std::size_t leaving_position = 0;
  double ratio = 0.0;
  double sigma_p = 0.0;
  double objective_before = 0.0;
  double objective_after = 0.0;
  /// a_q x^{k+1} - b_q.
  double leaving_slack = 0.0;
  bool degenerate = false;
  std::optional<std::size_t> redundant_removed;
};

/// Base, basic solution and dual coefficients at iteration k.
struct Snapshot {
  std::vector<std::size_t> base;
  Vector x;
  Vector y_c;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kNumericalBreakdown;
  std::optional<Vector> x;
  std::optional<double> objective;
  std::vector<PivotRecord> trace;
  /// snapshots[k] is the state at iteration k; one more entry than trace
  /// unless the loop broke down while pivoting.
  std::vector<Snapshot> snapshots;
  AuditReport audit;
  std::size_t bound = 0;        // n - d with the original n
  std::size_t iterations = 0;
  std::string diagnostic;
  /// For Infeasible: the entering row whose expansion had no positive entry.
  std::optional<std::size_t> infeasible_row;
  Tolerances tolerances;
  std::size_t max_iter_factor = 0;
};

/// Runs the facet pivot loop from the supplied dual-feasible base. The
/// certificate is validated first; CertificateError propagates.
SolveOutcome solve_canonical(const CanonicalLP& p, const InitialCertificate& cert,
                             const SolverOptions& opts = {});

/// Canonicalizes, solves, and reports the objective of the standard form.
SolveOutcome solve_standard(const StandardLP& p, const SolverOptions& opts = {});

/// Optimality conditions at a basic point: A_B x = b_B, A x >= b and
/// c^T = y_c^T A_B with y_c >= 0, all within tol.
bool verify_optimality(const CanonicalLP& p, const Vector& x,
                       const std::vector<std::size_t>& base, const Vector& y_c,
                       double tol);

}  // namespace facet
