#include "facet/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "facet/errors.hpp"

namespace facet {

double count_subsets(std::size_t n, std::size_t d) {
  if (d > n) return 0.0;
  double c = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return std::round(c);
}

namespace {

struct Vertex {
  Vector x;
  double objective;
};

// Calls visit(x) for every basic solution of the listed rows that satisfies
// all of them within tol.
// Calls visit(base, factorization) for every nonsingular d-subset of rows,
// in lexicographic order.
template <typename Visit>
void for_each_base(const CanonicalLP& p, const std::vector<std::size_t>& rows,
                   OracleResult& stats, Visit&& visit) {
  const std::size_t d = p.num_vars();
  const std::size_t n = rows.size();
  if (n < d) return;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  std::vector<std::size_t> base(d);
  while (true) {
    ++stats.subsets;
    for (std::size_t i = 0; i < d; ++i) base[i] = rows[pick[i]];
    if (auto f = try_factorize(p.rows.select_rows(base))) {
      ++stats.nonsingular;
      visit(base, *f);
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Calls visit(x) for every basic solution of the listed rows that satisfies
// all of them within tol.
template <typename Visit>
void for_each_feasible_vertex(const CanonicalLP& p,
                              const std::vector<std::size_t>& rows, double tol,
                              OracleResult& stats, Visit&& visit) {
  Vector b(p.num_vars());
  for_each_base(p, rows, stats, [&](const std::vector<std::size_t>& base,
                                    const Factorization& f) {
    for (std::size_t i = 0; i < base.size(); ++i) b[i] = p.rhs[base[i]];
    const Vector x = f.solve_columns(b);
    const bool ok = std::all_of(rows.begin(), rows.end(), [&](std::size_t r) {
      return dot(p.rows.row(r), x) >= p.rhs[r] - tol;
    });
    if (ok) {
      ++stats.feasible_vertices;
      visit(x);
    }
  });
}

// a^T x is bounded below on the rows iff a is a nonnegative combination of
// them, and then of some linearly independent d of them.
bool bounded_below(const CanonicalLP& p, const std::vector<std::size_t>& rows,
                   const Vector& a, double tol) {
  OracleResult stats;
  bool bounded = false;
  for_each_base(p, rows, stats, [&](const std::vector<std::size_t>&, const Factorization& f) {
    if (bounded) return;
    const Vector y = f.solve_rows(a);
    bounded = std::all_of(y.begin(), y.end(), [&](double v) { return v >= -tol; });
  });
  return bounded;
}

}  // namespace

OracleResult enumerate_solve(const CanonicalLP& p, const OracleOptions& opts) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (!opts.active || (*opts.active)[i]) rows.push_back(i);
  }
  const double subsets = count_subsets(rows.size(), p.num_vars());
  if (subsets > opts.max_subsets) {
    throw SizeGuardError("oracle: C(" + std::to_string(rows.size()) + ", " +
                         std::to_string(p.num_vars()) + ") exceeds the subset limit");
  }
  const double tol = opts.feas_tol.value_or(1e-9 * (1.0 + max_abs(p.rhs)));
  const Vector& c = opts.objective ? *opts.objective : p.objective;

  std::vector<Vertex> vertices;
  OracleResult res;
  for_each_feasible_vertex(p, rows, tol, res, [&](const Vector& x) {
    vertices.push_back({x, dot(c, x)});
  });
  if (vertices.empty()) return res;

  double best = vertices.front().objective;
  for (const auto& v : vertices) best = std::min(best, v.objective);
  const double tie = 1e-9 * (1.0 + std::abs(best));
  const Vertex* chosen = nullptr;
  for (const auto& v : vertices) {
    if (v.objective - best > tie) continue;
    if (chosen == nullptr || v.x < chosen->x) chosen = &v;
  }
  res.feasible = true;
  res.x = chosen->x;
  res.objective = best;
  return res;
}

bool verify_redundant(const CanonicalLP& p, std::size_t row,
                      const std::vector<bool>& active, double tol) {
  OracleOptions opts;
  opts.active = active;
  (*opts.active)[row] = false;
  opts.objective = Vector(p.rows.row(row).begin(), p.rows.row(row).end());
  opts.feas_tol = tol;
  const OracleResult r = enumerate_solve(p, opts);
  if (r.nonsingular == 0) return false;  // other rows do not pin a vertex
  if (!r.feasible) return true;          // the rest is already empty
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if ((*opts.active)[i]) rows.push_back(i);
  }
  if (!bounded_below(p, rows, *opts.objective, tol)) return false;
  return r.objective >= p.rhs[row] - tol;
}

bool verify_redundant(const CanonicalLP& p, std::size_t row, double tol) {
  return verify_redundant(p, row, std::vector<bool>(p.num_rows(), true), tol);
}

}  // namespace facet
