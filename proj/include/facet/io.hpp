#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "facet/canonical.hpp"
#include "facet/oracle.hpp"
#include "facet/solver.hpp"

namespace facet {

// All row and base indices in files are 1-based.

using ProblemFile = std::variant<StandardLP, CanonicalForm>;

/// Throws ParseError (syntax, wrong type, missing field), DimensionError
/// (array length disagrees with d, m or n) or IndexError (base index out of
/// range, bad origin tag).
ProblemFile parse_problem(const std::string& text);

std::string write_problem(const StandardLP& p);
std::string write_problem(const CanonicalForm& p);
std::string write_problem(const ProblemFile& p);

/// Stable key order; doubles are written in shortest round-trip form.
std::string write_result(const SolveOutcome& o, const std::string& name = "");
std::string write_oracle_result(const OracleResult& r, const std::string& name = "");

/// Numeric content of a result file, indices converted back to 0-based.
struct ResultFile {
  std::string name;
  SolveStatus status = SolveStatus::kNumericalBreakdown;
  std::optional<Vector> x;
  std::optional<double> objective;
  std::size_t iterations = 0;
  std::size_t bound = 0;
  std::vector<PivotRecord> pivots;
  std::vector<bool> audit_pass;  // in kAuditCheckNames order
  Tolerances tolerances;
  std::size_t max_iter_factor = 0;
};

ResultFile read_result(const std::string& text);

/// k,p,q,ratio,sigma_p,obj_before,obj_after,degenerate,redundant_removed
std::string write_trace_csv(const SolveOutcome& o);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace facet
