#include "facet/compare.hpp"

#include <cmath>
#include <sstream>

#include "facet/errors.hpp"

namespace facet {

const char* to_string(OracleComparison::Verdict v) {
  switch (v) {
    case OracleComparison::Verdict::kAgree: return "agree";
    case OracleComparison::Verdict::kDisagree: return "disagree";
    case OracleComparison::Verdict::kExcluded: return "excluded";
    case OracleComparison::Verdict::kSkipped: return "skipped";
  }
  return "unknown";
}

namespace {

bool matches(const SolveOutcome& o, const OracleResult& r, double rel,
             std::string& why) {
  const bool solver_optimal = o.status == SolveStatus::kOptimal;
  const bool solver_infeasible = o.status == SolveStatus::kInfeasible;
  std::ostringstream os;
  os.precision(17);
  if (r.feasible) {
    if (!solver_optimal) {
      os << "solver " << to_string(o.status) << ", oracle optimum " << r.objective;
      why = os.str();
      return false;
    }
    const double gap = std::abs(*o.objective - r.objective);
    if (gap > rel * (1.0 + std::abs(r.objective))) {
      os << "objective " << *o.objective << " vs oracle " << r.objective;
      why = os.str();
      return false;
    }
    os << "objective " << r.objective;
  } else {
    if (!solver_infeasible) {
      os << "solver " << to_string(o.status) << ", oracle finds no feasible vertex";
      why = os.str();
      return false;
    }
    os << "both infeasible";
  }
  why = os.str();
  return true;
}

}  // namespace

OracleComparison compare_with_oracle(const CanonicalLP& p, const SolveOutcome& o,
                                     double rel, double max_subsets) {
  OracleComparison cmp;
  OracleOptions opts;
  opts.max_subsets = max_subsets;
  try {
    cmp.oracle = enumerate_solve(p, opts);
  } catch (const SizeGuardError& e) {
    cmp.verdict = OracleComparison::Verdict::kSkipped;
    cmp.detail = e.what();
    return cmp;
  }
  if (matches(o, cmp.oracle, rel, cmp.detail)) {
    cmp.verdict = OracleComparison::Verdict::kAgree;
    return cmp;
  }
  OracleOptions loose = opts;
  loose.feas_tol = 10.0 * 1e-9 * (1.0 + max_abs(p.rhs));
  const OracleResult relaxed = enumerate_solve(p, loose);
  const bool unstable =
      relaxed.feasible != cmp.oracle.feasible ||
      (relaxed.feasible &&
       std::abs(relaxed.objective - cmp.oracle.objective) >
           rel * (1.0 + std::abs(cmp.oracle.objective)));
  cmp.verdict = unstable ? OracleComparison::Verdict::kExcluded
                         : OracleComparison::Verdict::kDisagree;
  return cmp;
}

std::vector<RemovalCheck> verify_removals(const CanonicalLP& p, const SolveOutcome& o,
                                          double tol) {
  std::vector<RemovalCheck> out;
  std::vector<bool> active(p.num_rows(), true);
  for (const PivotRecord& r : o.trace) {
    if (!r.redundant_removed) continue;
    const std::size_t row = *r.redundant_removed;
    out.push_back({row, r.k, verify_redundant(p, row, active, tol)});
    active[row] = false;
  }
  return out;
}

}  // namespace facet
