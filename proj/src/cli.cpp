#include "facet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "facet/bundle.hpp"
#include "facet/compare.hpp"
#include "facet/errors.hpp"
#include "facet/generators.hpp"
#include "facet/io.hpp"
#include "json.hpp"

namespace facet {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int exit_code_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return kExitOptimal;
    case SolveStatus::kInfeasible: return kExitInfeasible;
    default: return kExitSolverFailure;
  }
}

std::string real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

CanonicalForm canonical_of(const ProblemFile& problem) {
  if (const auto* sp = std::get_if<StandardLP>(&problem)) return to_canonical(*sp);
  return std::get<CanonicalForm>(problem);
}

std::string problem_name(const ProblemFile& problem) {
  if (const auto* sp = std::get_if<StandardLP>(&problem)) return sp->name;
  return std::get<CanonicalForm>(problem).lp.name;
}

struct SolveArgs {
  std::string problem;
  double tol_feas = Tolerances{}.feas;
  double tol_pos = Tolerances{}.pos;
  double tol_dual = Tolerances{}.dual;
  std::size_t max_iter_factor = SolverOptions{}.max_iter_factor;
  std::string trace;
  bool audit = false;
  std::string output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const ProblemFile problem = parse_problem(read_file(a.problem));
  SolverOptions opts;
  opts.tol.feas = a.tol_feas;
  opts.tol.pos = a.tol_pos;
  opts.tol.dual = a.tol_dual;
  opts.max_iter_factor = a.max_iter_factor;
  const SolveOutcome o = solve_problem(problem, opts);

  out << "status: " << to_string(o.status) << "\n";
  if (o.objective) out << "objective: " << real(*o.objective) << "\n";
  out << "iterations: " << o.iterations << "\n";
  out << "bound: " << o.bound << "\n";
  if (!o.diagnostic.empty()) out << "diagnostic: " << o.diagnostic << "\n";
  if (a.audit) {
    for (std::size_t i = 0; i < 6; ++i) {
      const CheckResult& c = check_by_index(o.audit, i);
      out << "audit " << kAuditCheckNames[i] << ": " << (c.pass ? "pass" : "FAIL")
          << " (" << c.detail << ")\n";
    }
  }
  if (!a.trace.empty()) write_file(a.trace, write_trace_csv(o));
  if (!a.output.empty()) write_file(a.output, write_result(o, problem_name(problem)));
  return exit_code_for(o.status);
}

int cmd_oracle(const std::string& path, const std::string& output, std::ostream& out) {
  const ProblemFile problem = parse_problem(read_file(path));
  const CanonicalForm cf = canonical_of(problem);
  OracleResult r;
  try {
    r = enumerate_solve(cf.lp);
  } catch (const SizeGuardError& e) {
    out << "status: SizeGuard\n" << "detail: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  out << "status: " << (r.feasible ? "Optimal" : "Infeasible") << "\n";
  if (r.feasible) out << "objective: " << real(r.objective) << "\n";
  out << "subsets: " << r.subsets << "\n";
  if (!output.empty()) write_file(output, write_oracle_result(r, problem_name(problem)));
  return r.feasible ? kExitOptimal : kExitInfeasible;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const ProblemFile problem = parse_problem(read_file(path));
  const CanonicalForm cf = canonical_of(problem);
  const SolveOutcome o = solve_problem(problem, SolverOptions{});
  const OracleComparison cmp = compare_with_oracle(cf.lp, o);
  out << "solver: " << to_string(o.status);
  if (o.objective) out << " " << real(*o.objective);
  out << "\n";
  out << to_string(cmp.verdict) << ": " << cmp.detail << "\n";
  if (cmp.verdict == OracleComparison::Verdict::kSkipped) return kExitSolverFailure;
  return cmp.verdict == OracleComparison::Verdict::kAgree ? 0 : 1;
}

struct GenArgs {
  std::size_t dim = 0;
  double eps = 1.0 / 3.0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string output;
};

// Instance i of a bench suite. Sizes cycle through d in 2..5 and m in 3..12
// unless pinned; Klee-Minty dimensions cycle through 2..12.
StandardLP bench_instance(const std::string& suite, std::size_t i, std::uint64_t seed,
                          std::optional<std::size_t> d, std::optional<std::size_t> m) {
  const std::uint64_t s = seed + i;
  if (suite == "klee-minty") return gen_klee_minty(d.value_or(2 + i % 11));
  const std::size_t dd = d.value_or(2 + s % 4);
  const std::size_t mm = m.value_or(3 + (s / 4) % 10);
  if (suite == "infeasible") return gen_infeasible(dd, mm, s);
  return gen_random_feasible(dd, mm, s);
}

struct BenchArgs {
  std::string suite;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> m;
  std::string report;
  std::string bundle_dir;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  fs::path bundle_root;
  if (!a.bundle_dir.empty()) {
    bundle_root = a.bundle_dir;
  } else if (!a.report.empty()) {
    bundle_root = fs::path(a.report).parent_path() / "counterexamples";
  } else {
    bundle_root = "counterexamples";
  }

  ordered_json instances = ordered_json::array();
  std::map<std::string, std::size_t> status_counts;
  std::map<std::string, std::size_t> verdict_counts;
  std::vector<std::size_t> check_passes(6, 0);
  std::size_t bound_violations = 0, max_iterations = 0, removals = 0,
              removals_verified = 0, bundles = 0;
  double max_ratio = 0.0;
  bool failed = false;

  for (std::size_t i = 0; i < a.count; ++i) {
    const StandardLP lp = bench_instance(a.suite, i, a.seed, a.d, a.m);
    const CanonicalForm cf = to_canonical(lp);
    const SolveOutcome o = solve_standard(lp);
    const OracleComparison cmp = compare_with_oracle(cf.lp, o);

    std::size_t implied = 0, removed = 0;
    if (cmp.verdict != OracleComparison::Verdict::kSkipped) {
      for (const auto& rc : verify_removals(cf.lp, o)) {
        ++removed;
        implied += rc.implied ? 1 : 0;
      }
    } else {
      for (const auto& r : o.trace) removed += r.redundant_removed ? 1 : 0;
    }
    removals += removed;
    removals_verified += implied;

    ++status_counts[to_string(o.status)];
    ++verdict_counts[to_string(cmp.verdict)];
    ordered_json failed_checks = ordered_json::array();
    for (std::size_t c = 0; c < 6; ++c) {
      if (check_by_index(o.audit, c).pass) {
        ++check_passes[c];
      } else {
        failed_checks.push_back(kAuditCheckNames[c]);
      }
    }
    bound_violations += o.iterations > o.bound ? 1 : 0;
    max_iterations = std::max(max_iterations, o.iterations);
    if (o.bound > 0) {
      max_ratio = std::max(max_ratio, static_cast<double>(o.iterations) /
                                          static_cast<double>(o.bound));
    }

    const bool bad = !o.audit.all_passed() ||
                     cmp.verdict == OracleComparison::Verdict::kDisagree ||
                     (implied != removed &&
                      cmp.verdict != OracleComparison::Verdict::kSkipped);
    std::string bundle;
    if (bad) {
      failed = true;
      // Relative to the bundle root so the report does not depend on where
      // it is written.
      bundle = write_bundle(bundle_root, lp.name, lp, o).filename().string();
      ++bundles;
    }

    ordered_json row;
    row["name"] = lp.name;
    row["d"] = lp.num_vars();
    row["m"] = lp.num_constraints();
    row["n"] = cf.lp.num_rows();
    row["status"] = to_string(o.status);
    if (o.objective) row["objective"] = *o.objective;
    row["iterations"] = o.iterations;
    row["bound"] = o.bound;
    row["audit_failed"] = failed_checks;
    row["oracle"] = to_string(cmp.verdict);
    row["redundant_removed"] = removed;
    row["redundant_verified"] = implied;
    if (!bundle.empty()) row["counterexample"] = bundle;
    instances.push_back(row);
  }

  ordered_json summary;
  summary["instances"] = a.count;
  summary["status"] = status_counts;
  summary["max_iterations"] = max_iterations;
  summary["max_iterations_over_bound"] = max_ratio;
  summary["bound_violations"] = bound_violations;
  ordered_json passes = ordered_json::object();
  for (std::size_t c = 0; c < 6; ++c) passes[kAuditCheckNames[c]] = check_passes[c];
  summary["audit_passes"] = passes;
  summary["oracle"] = verdict_counts;
  summary["redundant_removed"] = removals;
  summary["redundant_verified"] = removals_verified;
  summary["counterexamples"] = bundles;

  ordered_json report;
  report["suite"] = a.suite;
  report["count"] = a.count;
  report["seed"] = a.seed;
  report["summary"] = summary;
  report["instances"] = instances;
  if (!a.report.empty()) write_file(a.report, report.dump(2) + "\n");

  out << "suite " << a.suite << ": " << a.count << " instances, max iterations "
      << max_iterations << ", bound violations " << bound_violations << "\n";
  for (std::size_t c = 0; c < 6; ++c) {
    out << "  " << kAuditCheckNames[c] << ": " << check_passes[c] << "/" << a.count << "\n";
  }
  for (const auto& [k, v] : verdict_counts) out << "  oracle " << k << ": " << v << "\n";
  out << "  redundant rows verified: " << removals_verified << "/" << removals << "\n";
  if (bundles > 0) out << "  counterexamples written to " << bundle_root.string() << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Facet pivot simplex solver with trace auditing", "facetpivot"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("problem", solve.problem, "Problem file")->required();
  solve_cmd->add_option("--tol-feas", solve.tol_feas, "Relative feasibility tolerance");
  solve_cmd->add_option("--tol-pos", solve.tol_pos, "Positivity threshold for y_p");
  solve_cmd->add_option("--tol-dual", solve.tol_dual, "Dual feasibility tolerance");
  solve_cmd->add_option("--max-iter-factor", solve.max_iter_factor,
                        "Iteration cap as a multiple of n - d");
  solve_cmd->add_option("--trace", solve.trace, "Write the pivot trace as CSV");
  solve_cmd->add_flag("--audit", solve.audit, "Print the trace audit");
  solve_cmd->add_option("-o", solve.output, "Result file");

  std::string oracle_problem, oracle_output;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force vertex enumeration");
  oracle_cmd->add_option("problem", oracle_problem, "Problem file")->required();
  oracle_cmd->add_option("-o", oracle_output, "Result file");

  std::string verify_problem;
  auto* verify_cmd = app.add_subcommand("verify", "Compare solver and oracle");
  verify_cmd->add_option("problem", verify_problem, "Problem file")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o", gen.output, "Output problem file")->required();
  auto* km_cmd = gen_cmd->add_subcommand("klee-minty", "Klee-Minty cube")->fallthrough();
  km_cmd->add_option("--dim", gen.dim, "Dimension")->required();
  km_cmd->add_option("--eps", gen.eps, "Deformation parameter");
  auto* rand_cmd = gen_cmd->add_subcommand("random", "Random feasible LP")->fallthrough();
  auto* inf_cmd = gen_cmd->add_subcommand("infeasible", "Random infeasible LP")->fallthrough();
  for (auto* c : {rand_cmd, inf_cmd}) {
    c->add_option("--d", gen.d, "Variables")->required();
    c->add_option("--m", gen.m, "General constraints")->required();
    c->add_option("--seed", gen.seed, "Seed")->required();
  }

  BenchArgs bench;
  std::size_t bench_d = 0, bench_m = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Batch solve, audit and compare");
  bench_cmd->add_option("--suite", bench.suite, "Instance family")
      ->required()
      ->check(CLI::IsMember({"random", "klee-minty", "infeasible"}));
  bench_cmd->add_option("--count", bench.count, "Number of instances")->required();
  bench_cmd->add_option("--seed", bench.seed, "First seed")->required();
  auto* d_opt = bench_cmd->add_option("--d", bench_d, "Fix the number of variables");
  auto* m_opt = bench_cmd->add_option("--m", bench_m, "Fix the number of constraints");
  bench_cmd->add_option("--report", bench.report, "Report file");
  bench_cmd->add_option("--bundle-dir", bench.bundle_dir,
                        "Counterexample directory (default: next to the report)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*oracle_cmd) return cmd_oracle(oracle_problem, oracle_output, out);
    if (*verify_cmd) return cmd_verify(verify_problem, out);
    if (*gen_cmd) {
      StandardLP lp;
      if (*km_cmd) {
        lp = gen_klee_minty(gen.dim, gen.eps);
      } else if (*rand_cmd) {
        lp = gen_random_feasible(gen.d, gen.m, gen.seed);
      } else {
        lp = gen_infeasible(gen.d, gen.m, gen.seed);
      }
      write_file(gen.output, write_problem(lp));
      out << "wrote " << lp.name << " to " << gen.output << "\n";
      return 0;
    }
    if (*bench_cmd) {
      if (*d_opt) bench.d = bench_d;
      if (*m_opt) bench.m = bench_m;
      return cmd_bench(bench, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace facet
