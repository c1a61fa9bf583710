#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "facet/linalg.hpp"

namespace facet {

/// min c^T x  s.t.  A x >= b,  lower <= x <= upper.
struct StandardLP {
  std::string name;
  Vector objective;        // length d
  DenseMatrix constraints; // m x d
  Vector rhs;              // length m
  Vector lower;            // length d
  Vector upper;            // length d
  /// Free-form provenance (generator, seed, ...), carried through files.
  std::map<std::string, std::string> metadata;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_constraints() const { return rhs.size(); }
};

/// Where a canonical row came from. `index` is 0-based into the general
/// constraints or the variables.
struct RowOrigin {
  enum class Kind { kGeneral, kLowerBound, kUpperBound };
  Kind kind = Kind::kGeneral;
  std::size_t index = 0;

  bool operator==(const RowOrigin&) const = default;
};

/// min c^T x  s.t.  A x >= b, with n >= d rows.
struct CanonicalLP {
  std::string name;
  Vector objective;         // c, length d
  DenseMatrix rows;         // A, n x d
  Vector rhs;               // b, length n
  std::vector<RowOrigin> origin;

  std::size_t num_vars() const { return rows.cols(); }
  std::size_t num_rows() const { return rows.rows(); }
};

/// A base of d row indices (0-based, positional) and nonnegative
/// coefficients y0 with c^T = y0^T A_base.
struct InitialCertificate {
  std::vector<std::size_t> base;
  Vector y0;
};

struct CanonicalForm {
  CanonicalLP lp;
  InitialCertificate certificate;
};

/// Checks the StandardLP shape and bound invariants. Throws BoundsError for
/// non-finite or crossed bounds and std::invalid_argument for shape errors.
void validate_standard(const StandardLP& p);

/// Rows are ordered general constraints, then x_j >= l_j, then -x_j >= -u_j.
/// The certificate takes the lower-bound row for c_j >= 0 and the
/// upper-bound row otherwise.
CanonicalForm to_canonical(const StandardLP& p);

/// Throws CertificateError if the base is singular, a coefficient is below
/// -tol, or c^T differs from y0^T A_base by more than tol * (1 + max|c|).
void validate_certificate(const CanonicalLP& p, const InitialCertificate& cert,
                          double tol);

struct StandardSolution {
  Vector x;
  double objective = 0.0;
  Vector constraint_slack; // A x - b
  Vector lower_slack;      // x - l
  Vector upper_slack;      // u - x
};

StandardSolution map_solution_back(const StandardLP& p, const Vector& x);

/// Feasibility of x for the standard form, with absolute tolerance.
bool is_feasible(const StandardLP& p, const Vector& x, double tol = 0.0);
bool is_feasible(const CanonicalLP& p, const Vector& x, double tol = 0.0);

}  // namespace facet
