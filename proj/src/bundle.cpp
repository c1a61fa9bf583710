#include "facet/bundle.hpp"

namespace facet {

namespace fs = std::filesystem;

SolveOutcome solve_problem(const ProblemFile& problem, const SolverOptions& opts) {
  if (const auto* sp = std::get_if<StandardLP>(&problem)) return solve_standard(*sp, opts);
  const auto& cf = std::get<CanonicalForm>(problem);
  return solve_canonical(cf.lp, cf.certificate, opts);
}

fs::path write_bundle(const fs::path& dir, const std::string& name,
                      const ProblemFile& problem, const SolveOutcome& outcome) {
  const fs::path target = dir / name;
  fs::create_directories(target);
  write_file((target / "problem.json").string(), write_problem(problem));
  write_file((target / "result.json").string(), write_result(outcome, name));
  write_file((target / "trace.csv").string(), write_trace_csv(outcome));
  return target;
}

bool replay_bundle(const fs::path& bundle_dir, std::string* why) {
  const ProblemFile problem = parse_problem(read_file((bundle_dir / "problem.json").string()));
  const std::string stored = read_file((bundle_dir / "result.json").string());
  const ResultFile recorded = read_result(stored);

  SolverOptions opts;
  opts.tol = recorded.tolerances;
  opts.max_iter_factor = recorded.max_iter_factor;
  const SolveOutcome fresh = solve_problem(problem, opts);

  if (write_result(fresh, recorded.name) != stored) {
    if (why) *why = "result differs";
    return false;
  }
  if (write_trace_csv(fresh) != read_file((bundle_dir / "trace.csv").string())) {
    if (why) *why = "trace differs";
    return false;
  }
  return true;
}

}  // namespace facet
