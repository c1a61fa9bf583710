#include "facet/pivot.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

#include "facet/errors.hpp"

namespace facet {

double Tolerances::feasibility_threshold(const CanonicalLP& p) const {
  return feas * (1.0 + max_abs(p.rhs));
}

BaseState make_state(const CanonicalLP& p, std::vector<std::size_t> base,
                     Vector y_c, double singular_tol, std::size_t iteration) {
  BaseState s{std::move(base), {}, {}, std::move(y_c), iteration};
  s.factorization = factorize(p.rows.select_rows(s.base), singular_tol);
  Vector b(s.base.size());
  for (std::size_t j = 0; j < s.base.size(); ++j) b[j] = p.rhs[s.base[j]];
  s.x = s.factorization.solve_columns(b);
  return s;
}

Residuals compute_residuals(const CanonicalLP& p, std::span<const double> x) {
  Residuals r;
  r.sigma.resize(p.num_rows());
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    r.sigma[i] = dot(p.rows.row(i), x) - p.rhs[i];
  }
  return r;
}

std::optional<std::size_t> select_entering(const Residuals& r,
                                           std::span<const std::size_t> candidates,
                                           double threshold) {
  for (std::size_t i : candidates) {
    if (r.sigma[i] < -threshold) return i;
  }
  return std::nullopt;
}

EnteringExpansion expand_entering(const BaseState& state, std::size_t p,
                                  const DenseMatrix& rows) {
  assert(std::find(state.base.begin(), state.base.end(), p) == state.base.end());
  return {p, state.factorization.solve_rows(rows.row(p))};
}

bool detect_infeasible(const EnteringExpansion& exp, double pos_tol) {
  return std::none_of(exp.y_p.begin(), exp.y_p.end(),
                      [pos_tol](double v) { return v > pos_tol; });
}

LeavingChoice select_leaving(const BaseState& state, const EnteringExpansion& exp,
                             double pos_tol, double ratio_tie_tol) {
  const std::size_t d = state.base.size();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < d; ++j) {
    if (exp.y_p[j] > pos_tol) min_ratio = std::min(min_ratio, state.y_c[j] / exp.y_p[j]);
  }
  assert(std::isfinite(min_ratio) && "select_leaving needs a positive y_pj");

  const double tie = ratio_tie_tol * std::max(1.0, std::abs(min_ratio));
  LeavingChoice best;
  bool found = false;
  for (std::size_t j = 0; j < d; ++j) {
    if (exp.y_p[j] <= pos_tol) continue;
    const double ratio = state.y_c[j] / exp.y_p[j];
    if (ratio - min_ratio > tie) continue;
    if (!found || state.base[j] < best.row) {
      best = {j, state.base[j], ratio};
      found = true;
    }
  }
  return best;
}

Vector update_dual(const BaseState& state, const EnteringExpansion& exp,
                   std::size_t q_position, double dual_tol) {
  const double step = state.y_c[q_position] / exp.y_p[q_position];
  Vector next(state.y_c.size());
  for (std::size_t j = 0; j < next.size(); ++j) {
    next[j] = j == q_position ? step : state.y_c[j] - exp.y_p[j] * step;
    if (next[j] < -dual_tol) {
      std::ostringstream os;
      os << "dual coefficient at base position " << j + 1 << " (row "
         << (j == q_position ? exp.p : state.base[j]) + 1 << ") became "
         << next[j] << " at iteration " << state.iteration;
      throw DualViolation(os.str());
    }
  }
  return next;
}

bool detect_redundant(const EnteringExpansion& exp, std::size_t q_position,
                      double pos_tol) {
  for (std::size_t j = 0; j < exp.y_p.size(); ++j) {
    if (j != q_position && exp.y_p[j] > pos_tol) return false;
  }
  return true;
}

BaseState apply_pivot(const BaseState& state, std::size_t p,
                      std::size_t q_position, const CanonicalLP& lp,
                      Vector new_y_c, double singular_tol) {
  auto base = state.base;
  base[q_position] = p;
  return make_state(lp, std::move(base), std::move(new_y_c), singular_tol,
                    state.iteration + 1);
}

}  // namespace facet
