#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "facet/canonical.hpp"
#include "facet/oracle.hpp"
#include "facet/solver.hpp"

namespace facet {

/// Solver outcome checked against brute-force enumeration.
struct OracleComparison {
  enum class Verdict { kAgree, kDisagree, kExcluded, kSkipped };
  Verdict verdict = Verdict::kSkipped;
  OracleResult oracle;
  std::string detail;
};

const char* to_string(OracleComparison::Verdict v);

/// Objectives agree when |solver - oracle| <= rel * (1 + |oracle|). A
/// disagreement is downgraded to kExcluded when the oracle itself changes
/// its answer under a 10x looser feasibility tolerance (ill-conditioned
/// instance). kSkipped when the oracle's size guard trips.
OracleComparison compare_with_oracle(const CanonicalLP& p, const SolveOutcome& o,
                                     double rel = 1e-6, double max_subsets = 1e7);

struct RemovalCheck {
  std::size_t row = 0;
  std::size_t iteration = 0;
  bool implied = false;
};

/// Re-checks every redundancy removal in the trace against the rows that
/// were still active when it happened.
std::vector<RemovalCheck> verify_removals(const CanonicalLP& p, const SolveOutcome& o,
                                          double tol = 1e-9);

}  // namespace facet
