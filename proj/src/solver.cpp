#include "facet/solver.hpp"

#include <algorithm>
#include <cmath>

#include "facet/errors.hpp"

namespace facet {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kNumericalBreakdown: return "NumericalBreakdown";
    case SolveStatus::kIterationCapExceeded: return "IterationCapExceeded";
  }
  return "Unknown";
}

std::optional<SolveStatus> status_from_string(const std::string& s) {
  for (auto st : {SolveStatus::kOptimal, SolveStatus::kInfeasible,
                  SolveStatus::kNumericalBreakdown,
                  SolveStatus::kIterationCapExceeded}) {
    if (s == to_string(st)) return st;
  }
  return std::nullopt;
}

namespace {

Snapshot snapshot_of(const BaseState& s) { return {s.base, s.x, s.y_c}; }

std::vector<std::size_t> entering_candidates(const std::vector<bool>& active,
                                             const std::vector<std::size_t>& base) {
  std::vector<bool> in_base(active.size(), false);
  for (std::size_t i : base) in_base[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (active[i] && !in_base[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

SolveOutcome solve_canonical(const CanonicalLP& p, const InitialCertificate& cert,
                             const SolverOptions& opts) {
  const Tolerances& tol = opts.tol;
  validate_certificate(p, cert, std::max(tol.dual, 1e-10));

  const std::size_t n = p.num_rows();
  const std::size_t d = p.num_vars();
  const double feas_threshold = tol.feasibility_threshold(p);
  const std::size_t cap = opts.max_iter_factor * (n - d);

  SolveOutcome out;
  out.bound = n - d;
  out.tolerances = tol;
  out.max_iter_factor = opts.max_iter_factor;

  std::vector<bool> active(n, true);
  BaseState state;
  try {
    state = make_state(p, cert.base, cert.y0, tol.singular);
  } catch (const SingularError& e) {
    out.status = SolveStatus::kNumericalBreakdown;
    out.diagnostic = std::string("initial base: ") + e.what();
    return out;
  }
  out.snapshots.push_back(snapshot_of(state));

  auto finish = [&](SolveStatus status) {
    out.status = status;
    out.iterations = out.trace.size();
    if (status == SolveStatus::kOptimal) {
      out.x = state.x;
      out.objective = dot(p.objective, state.x);
    }
    if (opts.audit) out.audit = audit_trace(p, cert, out);
    return out;
  };

  while (true) {
    const Residuals r = compute_residuals(p, state.x);
    const auto candidates = entering_candidates(active, state.base);
    const auto entering = select_entering(r, candidates, feas_threshold);
    if (!entering) return finish(SolveStatus::kOptimal);

    if (out.trace.size() >= cap) {
      out.diagnostic = "iteration cap " + std::to_string(cap) + " reached";
      return finish(SolveStatus::kIterationCapExceeded);
    }

    const std::size_t p_row = *entering;
    EnteringExpansion exp = expand_entering(state, p_row, p.rows);
    if (detect_infeasible(exp, tol.pos)) {
      out.infeasible_row = p_row;
      out.diagnostic = "row " + std::to_string(p_row + 1) +
                       " is violated and has no positive coefficient over the base";
      return finish(SolveStatus::kInfeasible);
    }

    const LeavingChoice leave = select_leaving(state, exp, tol.pos, tol.ratio_tie);

    PivotRecord rec;
    rec.k = state.iteration;
    rec.entering = p_row;
    rec.leaving = leave.row;
    rec.leaving_position = leave.position;
    rec.ratio = leave.ratio;
    rec.sigma_p = r.sigma[p_row];
    rec.objective_before = dot(p.objective, state.x);

    Vector next_y;
    try {
      next_y = update_dual(state, exp, leave.position, tol.dual);
    } catch (const DualViolation& e) {
      out.trace.push_back(rec);
      out.diagnostic = e.what();
      return finish(SolveStatus::kNumericalBreakdown);
    }

    if (detect_redundant(exp, leave.position, tol.pos)) {
      active[leave.row] = false;
      rec.redundant_removed = leave.row;
    }

    try {
      state = apply_pivot(state, p_row, leave.position, p, std::move(next_y),
                          tol.singular);
    } catch (const SingularError& e) {
      out.trace.push_back(rec);
      out.diagnostic = std::string("pivot produced a singular base: ") + e.what();
      return finish(SolveStatus::kNumericalBreakdown);
    }

    rec.objective_after = dot(p.objective, state.x);
    rec.leaving_slack = dot(p.rows.row(leave.row), state.x) - p.rhs[leave.row];
    rec.degenerate = rec.ratio <= tol.dual || rec.leaving_slack <= feas_threshold;
    out.trace.push_back(rec);
    out.snapshots.push_back(snapshot_of(state));
  }
}

SolveOutcome solve_standard(const StandardLP& p, const SolverOptions& opts) {
  const CanonicalForm cf = to_canonical(p);
  SolveOutcome out = solve_canonical(cf.lp, cf.certificate, opts);
  if (out.x) out.objective = map_solution_back(p, *out.x).objective;
  return out;
}

bool verify_optimality(const CanonicalLP& p, const Vector& x,
                       const std::vector<std::size_t>& base, const Vector& y_c,
                       double tol) {
  const std::size_t d = p.num_vars();
  if (x.size() != d || base.size() != d || y_c.size() != d) return false;
  for (std::size_t i : base) {
    if (i >= p.num_rows()) return false;
    if (std::abs(dot(p.rows.row(i), x) - p.rhs[i]) > tol) return false;
  }
  if (!is_feasible(p, x, tol)) return false;
  for (double y : y_c) {
    if (y < -tol) return false;
  }
  for (std::size_t col = 0; col < d; ++col) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += y_c[j] * p.rows(base[j], col);
    if (std::abs(s - p.objective[col]) > tol * (1.0 + max_abs(p.objective))) {
      return false;
    }
  }
  return true;
}

}  // namespace facet
