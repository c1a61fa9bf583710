#pragma once

#include <cstddef>
#include <string>

namespace facet {

struct CanonicalLP;
struct InitialCertificate;
struct SolveOutcome;

struct CheckResult {
  bool pass = true;
  /// First counterexample on failure, a short summary otherwise.
  std::string detail;
};

/// Trace-level checks of the facet pivot guarantees.
struct AuditReport {
  CheckResult dual_feasibility;
  CheckResult no_base_repetition;
  CheckResult no_facet_return;
  CheckResult leaving_slack_positive;
  CheckResult monotone_objective;
  CheckResult iteration_bound;
  /// Later iterations where a former leaving row sits exactly on its
  /// hyperplane (allowed, counted separately).
  std::size_t boundary_returns = 0;
  /// Pivots whose leaving row stays tight at x^{k+1}.
  std::size_t nonstrict_leaving = 0;

  bool all_passed() const;
};

struct AuditTolerances {
  double tol = 1e-9;
  double objective_rel = 1e-7;
  /// Allowed drift of c^T - y_c^T A_B relative to 1 + max|c|.
  double certificate_rel = 1e-7;
};

/// The six named checks in report order, for printing and serialization.
inline constexpr const char* kAuditCheckNames[] = {
    "dual_feasibility",       "no_base_repetition", "no_facet_return",
    "leaving_slack_positive", "monotone_objective", "iteration_bound"};

const CheckResult& check_by_index(const AuditReport& r, std::size_t i);
CheckResult& check_by_index(AuditReport& r, std::size_t i);

/// Replays the outcome's trace against the problem data. Never throws on a
/// failed check; failures are recorded in the report.
AuditReport audit_trace(const CanonicalLP& p, const InitialCertificate& cert,
                        const SolveOutcome& outcome,
                        const AuditTolerances& tol = {});

}  // namespace facet
