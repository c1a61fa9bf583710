#include "facet/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "facet/errors.hpp"

namespace facet {

void validate_standard(const StandardLP& p) {
  const std::size_t d = p.num_vars();
  if (d == 0) throw std::invalid_argument("StandardLP: no variables");
  if (p.constraints.rows() != p.rhs.size() ||
      (p.constraints.rows() > 0 && p.constraints.cols() != d)) {
    throw std::invalid_argument("StandardLP: constraint matrix shape mismatch");
  }
  if (p.lower.size() != d || p.upper.size() != d) {
    throw std::invalid_argument("StandardLP: bound vector length mismatch");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!std::isfinite(p.lower[j]) || !std::isfinite(p.upper[j])) {
      throw BoundsError("variable " + std::to_string(j + 1) +
                        " has a non-finite bound");
    }
    if (p.lower[j] > p.upper[j]) {
      throw BoundsError("variable " + std::to_string(j + 1) +
                        " has lower bound above upper bound");
    }
  }
}

CanonicalForm to_canonical(const StandardLP& p) {
  validate_standard(p);
  const std::size_t d = p.num_vars();
  const std::size_t m = p.num_constraints();
  const std::size_t n = m + 2 * d;

  CanonicalForm out;
  CanonicalLP& lp = out.lp;
  lp.name = p.name;
  lp.objective = p.objective;
  lp.rows = DenseMatrix(n, d);
  lp.rhs.resize(n);
  lp.origin.resize(n);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) lp.rows(i, j) = p.constraints(i, j);
    lp.rhs[i] = p.rhs[i];
    lp.origin[i] = {RowOrigin::Kind::kGeneral, i};
  }
  for (std::size_t j = 0; j < d; ++j) {
    lp.rows(m + j, j) = 1.0;
    lp.rhs[m + j] = p.lower[j];
    lp.origin[m + j] = {RowOrigin::Kind::kLowerBound, j};

    lp.rows(m + d + j, j) = -1.0;
    lp.rhs[m + d + j] = -p.upper[j];
    lp.origin[m + d + j] = {RowOrigin::Kind::kUpperBound, j};
  }

  auto& cert = out.certificate;
  cert.base.resize(d);
  cert.y0.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double c = p.objective[j];
    if (c >= 0.0) {
      cert.base[j] = m + j;
      cert.y0[j] = c;
    } else {
      cert.base[j] = m + d + j;
      cert.y0[j] = -c;
    }
  }
  return out;
}

void validate_certificate(const CanonicalLP& p, const InitialCertificate& cert,
                          double tol) {
  using Kind = CertificateError::Kind;
  const std::size_t d = p.num_vars();
  const std::size_t n = p.num_rows();
  if (cert.base.size() != d || cert.y0.size() != d) {
    throw std::invalid_argument("certificate: base and y0 must have length d");
  }
  std::set<std::size_t> seen;
  for (std::size_t idx : cert.base) {
    if (idx >= n) throw std::invalid_argument("certificate: base index out of range");
    if (!seen.insert(idx).second) {
      throw CertificateError(Kind::kSingularBase,
                             "certificate: row " + std::to_string(idx + 1) +
                                 " appears twice in the base");
    }
  }
  const DenseMatrix base = p.rows.select_rows(cert.base);
  if (!try_factorize(base)) {
    throw CertificateError(Kind::kSingularBase, "certificate: base is singular");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (cert.y0[j] < -tol) {
      std::ostringstream os;
      os << "certificate: y0[" << j + 1 << "] = " << cert.y0[j] << " is negative";
      throw CertificateError(Kind::kNegativeCoefficient, os.str());
    }
  }
  const double limit = tol * (1.0 + max_abs(p.objective));
  for (std::size_t col = 0; col < d; ++col) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += cert.y0[j] * base(j, col);
    if (std::abs(s - p.objective[col]) > limit) {
      throw CertificateError(Kind::kEquationMismatch,
                             "certificate: y0^T A_base does not reproduce c in "
                             "component " + std::to_string(col + 1));
    }
  }
}

StandardSolution map_solution_back(const StandardLP& p, const Vector& x) {
  if (x.size() != p.num_vars()) {
    throw std::invalid_argument("map_solution_back: x has wrong length");
  }
  StandardSolution s;
  s.x = x;
  s.objective = dot(p.objective, x);
  s.constraint_slack.resize(p.num_constraints());
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    s.constraint_slack[i] = dot(p.constraints.row(i), x) - p.rhs[i];
  }
  s.lower_slack.resize(x.size());
  s.upper_slack.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    s.lower_slack[j] = x[j] - p.lower[j];
    s.upper_slack[j] = p.upper[j] - x[j];
  }
  return s;
}

bool is_feasible(const StandardLP& p, const Vector& x, double tol) {
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    if (dot(p.constraints.row(i), x) < p.rhs[i] - tol) return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < p.lower[j] - tol || -x[j] < -p.upper[j] - tol) return false;
  }
  return true;
}

bool is_feasible(const CanonicalLP& p, const Vector& x, double tol) {
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (dot(p.rows.row(i), x) < p.rhs[i] - tol) return false;
  }
  return true;
}

}  // namespace facet
