#pragma once

#include <filesystem>
#include <string>

#include "facet/io.hpp"
#include "facet/solver.hpp"

namespace facet {

/// Writes problem.json, result.json and trace.csv under dir/name and
/// returns that directory.
std::filesystem::path write_bundle(const std::filesystem::path& dir,
                                   const std::string& name, const ProblemFile& problem,
                                   const SolveOutcome& outcome);

/// Solves a problem file with explicit options; standard or canonical.
SolveOutcome solve_problem(const ProblemFile& problem, const SolverOptions& opts);

/// Re-solves the bundled problem with the options recorded in its result
/// file and reports whether the fresh result and trace are byte-identical.
bool replay_bundle(const std::filesystem::path& bundle_dir, std::string* why = nullptr);

}  // namespace facet
