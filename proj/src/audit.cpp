#include "facet/audit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "facet/solver.hpp"

namespace facet {

bool AuditReport::all_passed() const {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!check_by_index(*this, i).pass) return false;
  }
  return true;
}

const CheckResult& check_by_index(const AuditReport& r, std::size_t i) {
  switch (i) {
    case 0: return r.dual_feasibility;
    case 1: return r.no_base_repetition;
    case 2: return r.no_facet_return;
    case 3: return r.leaving_slack_positive;
    case 4: return r.monotone_objective;
    default: return r.iteration_bound;
  }
}

CheckResult& check_by_index(AuditReport& r, std::size_t i) {
  return const_cast<CheckResult&>(check_by_index(std::as_const(r), i));
}

namespace {

void fail(CheckResult& c, const std::string& why) {
  if (!c.pass) return;  // keep the first counterexample
  c.pass = false;
  c.detail = why;
}

double residual(const CanonicalLP& p, std::size_t row, const Vector& x) {
  return dot(p.rows.row(row), x) - p.rhs[row];
}

void check_duals(const CanonicalLP& p, const InitialCertificate& cert,
                 const SolveOutcome& o, const AuditTolerances& t, CheckResult& c) {
  const std::size_t d = p.num_vars();
  if (!o.snapshots.empty() && o.snapshots.front().base != cert.base) {
    fail(c, "iteration 0 base differs from the certificate");
  }
  const double limit = t.certificate_rel * (1.0 + max_abs(p.objective));
  for (std::size_t k = 0; k < o.snapshots.size(); ++k) {
    const Snapshot& s = o.snapshots[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (s.y_c[j] < -t.tol) {
        std::ostringstream os;
        os << "k=" << k << ": y_c for row " << s.base[j] + 1 << " is " << s.y_c[j];
        fail(c, os.str());
      }
    }
    for (std::size_t col = 0; col < d; ++col) {
      double sum = 0.0;
      for (std::size_t j = 0; j < d; ++j) sum += s.y_c[j] * p.rows(s.base[j], col);
      if (std::abs(sum - p.objective[col]) > limit) {
        std::ostringstream os;
        os << "k=" << k << ": y_c^T A_B misses c in component " << col + 1
           << " by " << std::abs(sum - p.objective[col]);
        fail(c, os.str());
      }
    }
  }
  if (c.pass) c.detail = std::to_string(o.snapshots.size()) + " snapshots";
}

void check_repetition(const SolveOutcome& o, CheckResult& c) {
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t k = 0; k < o.snapshots.size(); ++k) {
    auto key = o.snapshots[k].base;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = seen.emplace(std::move(key), k);
    if (!inserted) {
      fail(c, "base at k=" + std::to_string(k) + " repeats k=" +
                  std::to_string(it->second));
    }
  }
  if (c.pass) c.detail = std::to_string(seen.size()) + " distinct bases";
}

}  // namespace

AuditReport audit_trace(const CanonicalLP& p, const InitialCertificate& cert,
                        const SolveOutcome& o, const AuditTolerances& t) {
  AuditReport r;
  check_duals(p, cert, o, t, r.dual_feasibility);
  check_repetition(o, r.no_base_repetition);

  // Pivots whose post-pivot snapshot exists.
  const std::size_t complete = std::min(o.trace.size(),
                                        o.snapshots.empty() ? 0 : o.snapshots.size() - 1);
  for (std::size_t k = 0; k < complete; ++k) {
    const PivotRecord& rec = o.trace[k];
    const Snapshot& before = o.snapshots[k];
    const Snapshot& after = o.snapshots[k + 1];
    const std::size_t q = rec.leaving;

    if (rec.leaving_position >= before.base.size() ||
        before.base[rec.leaving_position] != q ||
        after.base[rec.leaving_position] != rec.entering) {
      fail(r.no_facet_return, "k=" + std::to_string(k) +
                                  ": pivot record does not match the snapshots");
    }

    // Leaving row is satisfied, never re-enters and is never violated again.
    for (std::size_t later = k + 1; later < o.snapshots.size(); ++later) {
      const Snapshot& s = o.snapshots[later];
      if (std::find(s.base.begin(), s.base.end(), q) != s.base.end()) {
        fail(r.no_facet_return, "row " + std::to_string(q + 1) + " left at k=" +
                                    std::to_string(k) + " and is back in the base at k=" +
                                    std::to_string(later));
      }
      const double slack = residual(p, q, s.x);
      if (slack < -t.tol) {
        std::ostringstream os;
        os << "row " << q + 1 << " left at k=" << k << " is violated at k=" << later
           << " (a_q x - b_q = " << slack << ")";
        fail(r.no_facet_return, os.str());
      } else if (later > k + 1 && slack <= t.tol) {
        ++r.boundary_returns;
      }
    }

    const double slack = residual(p, q, after.x);
    if (slack < -t.tol) {
      std::ostringstream os;
      os << "k=" << k << ": leaving row " << q + 1 << " has a_q x^{k+1} - b_q = " << slack;
      fail(r.leaving_slack_positive, os.str());
    } else if (slack <= t.tol) {
      ++r.nonstrict_leaving;
    }

    // c^T x^{k+1} - c^T x^k = ratio * (b_p - a_p x^k), ratio >= 0.
    const double obj_before = dot(p.objective, before.x);
    const double obj_after = dot(p.objective, after.x);
    const double delta = obj_after - obj_before;
    const double ratio = after.y_c[rec.leaving_position];
    const double predicted = ratio * -residual(p, rec.entering, before.x);
    const double scale = 1.0 + std::max({std::abs(obj_before), std::abs(obj_after),
                                         std::abs(predicted)});
    if (std::abs(delta - predicted) > t.objective_rel * scale) {
      std::ostringstream os;
      os << "k=" << k << ": objective change " << delta << " but ratio * violation = "
         << predicted;
      fail(r.monotone_objective, os.str());
    }
    if (delta < -t.tol) {
      std::ostringstream os;
      os << "k=" << k << ": objective decreased by " << -delta;
      fail(r.monotone_objective, os.str());
    }
  }
  if (r.no_facet_return.pass) {
    r.no_facet_return.detail = std::to_string(r.boundary_returns) + " boundary returns";
  }
  if (r.leaving_slack_positive.pass) {
    r.leaving_slack_positive.detail =
        std::to_string(r.nonstrict_leaving) + " non-strict exits";
  }
  if (r.monotone_objective.pass) {
    r.monotone_objective.detail = std::to_string(complete) + " pivots checked";
  }

  const std::size_t bound = p.num_rows() - p.num_vars();
  std::string summary = std::to_string(o.trace.size()) + " <= " + std::to_string(bound);
  if (o.trace.size() > bound) {
    fail(r.iteration_bound, std::to_string(o.trace.size()) + " iterations exceed n - d = " +
                                std::to_string(bound));
  } else {
    r.iteration_bound.detail = summary;
  }
  return r;
}

}  // namespace facet
