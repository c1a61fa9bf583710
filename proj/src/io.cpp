#include "facet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "facet/errors.hpp"
#include "json.hpp"

namespace facet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field " + path + "/" + key, path + "/" + key);
  }
  return *it;
}

double real_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path + ": expected a number", path);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(path + ": number is not finite", path);
  return v;
}

std::size_t count_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(path + ": expected a non-negative integer", path);
  }
  return j.get<std::size_t>();
}

Vector reals_at(const json& j, const std::string& path, std::size_t expected) {
  if (!j.is_array()) throw ParseError(path + ": expected an array", path);
  if (j.size() != expected) {
    throw DimensionError(path + ": expected " + std::to_string(expected) +
                             " entries, found " + std::to_string(j.size()),
                         path);
  }
  Vector v(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    v[i] = real_at(j[i], path + "/" + std::to_string(i));
  }
  return v;
}

std::string origin_tag(const RowOrigin& o) {
  const char* kind = o.kind == RowOrigin::Kind::kGeneral      ? "general"
                     : o.kind == RowOrigin::Kind::kLowerBound ? "lower_bound"
                                                              : "upper_bound";
  return std::string(kind) + "(" + std::to_string(o.index + 1) + ")";
}

RowOrigin parse_origin(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string", path);
  static const std::regex re(R"((general|lower_bound|upper_bound)\((\d+)\))");
  std::smatch m;
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, m, re) || std::stoul(m[2].str()) == 0) {
    throw IndexError(path + ": bad origin tag '" + s + "'", path);
  }
  RowOrigin o;
  o.kind = m[1] == "general"       ? RowOrigin::Kind::kGeneral
           : m[1] == "lower_bound" ? RowOrigin::Kind::kLowerBound
                                   : RowOrigin::Kind::kUpperBound;
  o.index = std::stoul(m[2].str()) - 1;
  return o;
}

std::map<std::string, std::string> parse_metadata(const json& doc) {
  std::map<std::string, std::string> out;
  auto it = doc.find("metadata");
  if (it == doc.end()) return out;
  if (!it->is_object()) throw ParseError("/metadata: expected an object", "/metadata");
  for (const auto& [k, v] : it->items()) {
    out[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

StandardLP parse_standard(const json& doc) {
  StandardLP p;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("/name: expected a string", "/name");
    p.name = it->get<std::string>();
  }
  const std::size_t d = count_at(field(doc, "d", ""), "/d");
  const std::size_t m = count_at(field(doc, "m", ""), "/m");
  if (d == 0) throw DimensionError("/d: must be at least 1", "/d");
  p.objective = reals_at(field(doc, "objective", ""), "/objective", d);

  const json& cons = field(doc, "constraints", "");
  if (!cons.is_array()) throw ParseError("/constraints: expected an array", "/constraints");
  if (cons.size() != m) {
    throw DimensionError("/constraints: expected " + std::to_string(m) +
                             " entries, found " + std::to_string(cons.size()),
                         "/constraints");
  }
  p.constraints = DenseMatrix(m, d);
  p.rhs.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string path = "/constraints/" + std::to_string(i);
    const Vector row = reals_at(field(cons[i], "coeffs", path), path + "/coeffs", d);
    for (std::size_t j = 0; j < d; ++j) p.constraints(i, j) = row[j];
    p.rhs[i] = real_at(field(cons[i], "rhs", path), path + "/rhs");
  }
  p.lower = reals_at(field(doc, "lower", ""), "/lower", d);
  p.upper = reals_at(field(doc, "upper", ""), "/upper", d);
  p.metadata = parse_metadata(doc);
  validate_standard(p);
  return p;
}

CanonicalForm parse_canonical(const json& doc) {
  CanonicalForm cf;
  CanonicalLP& lp = cf.lp;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) {
    lp.name = it->get<std::string>();
  }
  const std::size_t d = count_at(field(doc, "d", ""), "/d");
  if (d == 0) throw DimensionError("/d: must be at least 1", "/d");
  lp.objective = reals_at(field(doc, "objective", ""), "/objective", d);

  const json& rows = field(doc, "rows", "");
  if (!rows.is_array()) throw ParseError("/rows: expected an array", "/rows");
  const std::size_t n = rows.size();
  if (auto it = doc.find("n"); it != doc.end() && count_at(*it, "/n") != n) {
    throw DimensionError("/rows: length differs from n", "/rows");
  }
  if (n < d) throw DimensionError("/rows: need at least d rows", "/rows");
  lp.rows = DenseMatrix(n, d);
  lp.rhs.resize(n);
  lp.origin.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "/rows/" + std::to_string(i);
    const Vector row = reals_at(field(rows[i], "coeffs", path), path + "/coeffs", d);
    for (std::size_t j = 0; j < d; ++j) lp.rows(i, j) = row[j];
    lp.rhs[i] = real_at(field(rows[i], "rhs", path), path + "/rhs");
    if (auto it = rows[i].find("origin"); it != rows[i].end()) {
      lp.origin[i] = parse_origin(*it, path + "/origin");
    } else {
      lp.origin[i] = {RowOrigin::Kind::kGeneral, i};
    }
  }

  const json& cert = field(doc, "certificate", "");
  const json& base = field(cert, "base", "/certificate");
  if (!base.is_array()) {
    throw ParseError("/certificate/base: expected an array", "/certificate/base");
  }
  if (base.size() != d) {
    throw DimensionError("/certificate/base: expected " + std::to_string(d) + " entries",
                         "/certificate/base");
  }
  for (std::size_t j = 0; j < d; ++j) {
    const std::string path = "/certificate/base/" + std::to_string(j);
    const std::size_t idx = count_at(base[j], path);
    if (idx < 1 || idx > n) {
      throw IndexError(path + ": row index " + std::to_string(idx) + " outside 1.." +
                           std::to_string(n),
                       path);
    }
    cf.certificate.base.push_back(idx - 1);
  }
  cf.certificate.y0 = reals_at(field(cert, "y0", "/certificate"), "/certificate/y0", d);
  return cf;
}

ordered_json reals(std::span<const double> v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(x);
  return a;
}

ordered_json one_based(std::span<const std::size_t> v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i : v) a.push_back(i + 1);
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ": " + e.what(),
                     "", line);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", "");
  try {
    auto it = doc.find("canonical");
    if (it != doc.end() && it->is_boolean() && it->get<bool>()) return parse_canonical(doc);
    return parse_standard(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed problem: ") + e.what(), "");
  }
}

std::string write_problem(const StandardLP& p) {
  ordered_json j;
  j["name"] = p.name;
  j["d"] = p.num_vars();
  j["m"] = p.num_constraints();
  j["objective"] = reals(p.objective);
  j["constraints"] = ordered_json::array();
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    ordered_json row;
    row["coeffs"] = reals(p.constraints.row(i));
    row["rhs"] = p.rhs[i];
    j["constraints"].push_back(row);
  }
  j["lower"] = reals(p.lower);
  j["upper"] = reals(p.upper);
  if (!p.metadata.empty()) {
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : p.metadata) meta[k] = v;
    j["metadata"] = meta;
  }
  return dump(j);
}

std::string write_problem(const CanonicalForm& cf) {
  const CanonicalLP& lp = cf.lp;
  ordered_json j;
  j["name"] = lp.name;
  j["canonical"] = true;
  j["d"] = lp.num_vars();
  j["n"] = lp.num_rows();
  j["objective"] = reals(lp.objective);
  j["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    ordered_json row;
    row["coeffs"] = reals(lp.rows.row(i));
    row["rhs"] = lp.rhs[i];
    row["origin"] = origin_tag(lp.origin[i]);
    j["rows"].push_back(row);
  }
  j["certificate"]["base"] = one_based(cf.certificate.base);
  j["certificate"]["y0"] = reals(cf.certificate.y0);
  return dump(j);
}

std::string write_problem(const ProblemFile& p) {
  return std::visit([](const auto& v) { return write_problem(v); }, p);
}

std::string write_result(const SolveOutcome& o, const std::string& name) {
  ordered_json j;
  j["name"] = name;
  j["status"] = to_string(o.status);
  if (o.x) j["x"] = reals(*o.x);
  if (o.objective) j["objective"] = *o.objective;
  j["iterations"] = o.iterations;
  j["bound"] = o.bound;
  j["pivots"] = ordered_json::array();
  for (std::size_t i = 0; i < o.trace.size(); ++i) {
    const PivotRecord& r = o.trace[i];
    ordered_json pr;
    pr["k"] = r.k;
    pr["p"] = r.entering + 1;
    pr["q"] = r.leaving + 1;
    pr["position"] = r.leaving_position + 1;
    pr["ratio"] = r.ratio;
    pr["sigma_p"] = r.sigma_p;
    pr["obj_before"] = r.objective_before;
    pr["obj_after"] = r.objective_after;
    pr["leaving_slack"] = r.leaving_slack;
    pr["degenerate"] = r.degenerate;
    pr["redundant_removed"] =
        r.redundant_removed ? ordered_json(*r.redundant_removed + 1) : ordered_json(nullptr);
    if (i + 1 < o.snapshots.size()) pr["base"] = one_based(o.snapshots[i + 1].base);
    j["pivots"].push_back(pr);
  }
  ordered_json audit = ordered_json::object();
  for (std::size_t i = 0; i < 6; ++i) {
    const CheckResult& c = check_by_index(o.audit, i);
    audit[kAuditCheckNames[i]] = {{"pass", c.pass}, {"detail", c.detail}};
  }
  j["audit"] = audit;
  j["tolerances"] = {{"feas", o.tolerances.feas},
                     {"pos", o.tolerances.pos},
                     {"ratio_tie", o.tolerances.ratio_tie},
                     {"dual", o.tolerances.dual},
                     {"singular", o.tolerances.singular}};
  j["max_iter_factor"] = o.max_iter_factor;
  if (!o.diagnostic.empty()) j["diagnostic"] = o.diagnostic;
  return dump(j);
}

std::string write_oracle_result(const OracleResult& r, const std::string& name) {
  ordered_json j;
  j["name"] = name;
  j["status"] = r.feasible ? "Optimal" : "Infeasible";
  if (r.feasible) {
    j["x"] = reals(r.x);
    j["objective"] = r.objective;
  }
  j["subsets"] = r.subsets;
  j["nonsingular"] = r.nonsingular;
  j["feasible_vertices"] = r.feasible_vertices;
  return dump(j);
}

ResultFile read_result(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("result: ") + e.what(), "", line_of(text, e.byte));
  }
  ResultFile r;
  try {
    r.name = doc.value("name", "");
    const auto status = status_from_string(field(doc, "status", "").get<std::string>());
    if (!status) throw ParseError("/status: unknown status", "/status");
    r.status = *status;
    if (doc.contains("x")) {
      r.x = Vector(doc["x"].begin(), doc["x"].end());
    }
    if (doc.contains("objective")) r.objective = real_at(doc["objective"], "/objective");
    r.iterations = count_at(field(doc, "iterations", ""), "/iterations");
    r.bound = count_at(field(doc, "bound", ""), "/bound");
    for (const auto& pj : field(doc, "pivots", "")) {
      PivotRecord p;
      p.k = pj.at("k").get<std::size_t>();
      p.entering = pj.at("p").get<std::size_t>() - 1;
      p.leaving = pj.at("q").get<std::size_t>() - 1;
      p.leaving_position = pj.at("position").get<std::size_t>() - 1;
      p.ratio = pj.at("ratio").get<double>();
      p.sigma_p = pj.at("sigma_p").get<double>();
      p.objective_before = pj.at("obj_before").get<double>();
      p.objective_after = pj.at("obj_after").get<double>();
      p.leaving_slack = pj.at("leaving_slack").get<double>();
      p.degenerate = pj.at("degenerate").get<bool>();
      if (!pj.at("redundant_removed").is_null()) {
        p.redundant_removed = pj["redundant_removed"].get<std::size_t>() - 1;
      }
      r.pivots.push_back(p);
    }
    const json& audit = field(doc, "audit", "");
    for (const char* name : kAuditCheckNames) {
      r.audit_pass.push_back(field(audit, name, "/audit").at("pass").get<bool>());
    }
    const json& tol = field(doc, "tolerances", "");
    r.tolerances.feas = tol.at("feas").get<double>();
    r.tolerances.pos = tol.at("pos").get<double>();
    r.tolerances.ratio_tie = tol.at("ratio_tie").get<double>();
    r.tolerances.dual = tol.at("dual").get<double>();
    r.tolerances.singular = tol.at("singular").get<double>();
    r.max_iter_factor = count_at(field(doc, "max_iter_factor", ""), "/max_iter_factor");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result: ") + e.what(), "");
  }
  return r;
}

std::string write_trace_csv(const SolveOutcome& o) {
  std::string out = "k,p,q,ratio,sigma_p,obj_before,obj_after,degenerate,redundant_removed\n";
  char buf[512];
  for (const PivotRecord& r : o.trace) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g,%.17g,%.17g,%d,", r.k,
                  r.entering + 1, r.leaving + 1, r.ratio, r.sigma_p, r.objective_before,
                  r.objective_after, r.degenerate ? 1 : 0);
    out += buf;
    if (r.redundant_removed) out += std::to_string(*r.redundant_removed + 1);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace facet
