// Copyright 2026 The twinsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twinsieve/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinsieve/arith.hpp"
#include "twinsieve/functionals.hpp"
#include "twinsieve/rayleigh.hpp"
#include "twinsieve/sievesim.hpp"

namespace twinsieve::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Raised for unknown suites and other argument problems the parser can't see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out = "-";
  std::string format = "json";
  unsigned workers = 1;
};

struct OptimizeArgs {
  std::uint32_t degree = 7;
  std::int64_t from_degree = -1;
  double tol = 1e-10;
  std::string precision = "extended";
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t m_max = 50;
  std::uint64_t ramanujan_max = 100;
  std::vector<std::uint64_t> m;
  std::vector<std::uint64_t> x;
  std::uint64_t a = 1;
  std::uint64_t limit = 0;
  std::uint64_t euler_cutoff = arith::kDefaultEulerCutoff;
  std::string function = "mu2_over_phi";
  std::uint32_t k = 1;
  std::uint64_t d = 1;
};

struct SieveArgs {
  sievesim::SieveConfig cfg;
  std::string coefficients_path;
  std::vector<double> coefficient_values;
  std::uint64_t limit = 0;
  bool indicative = false;
};

const std::vector<std::string> kSuites{"kloosterman", "divisor-ap", "two-omega", "mertens", "omega-k"};

Json header(const std::string& command, Json config) {
  Json j;
  j["artifact"] = kArtifact;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

Json common_json(const Common& c) { return Json{{"out", c.out}, {"format", c.format}, {"workers", c.workers}}; }

Json comparison_json(const arith::SumComparison& c) {
  Json j;
  j["sum"] = c.sum;
  for (const auto& [k, v] : c.parameters) j[k] = v;
  j["empirical"] = c.empirical;
  j["predicted"] = c.predicted;
  j["abs_error"] = c.abs_error;
  j["envelope"] = c.envelope;
  j["normalized_error"] = c.normalized_error;
  return j;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

// Flat projection: one line per row object, columns in order of first use.
std::string to_csv(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(cols[i])) os << csv_cell(row[cols[i]]);
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Common& c, const Json& report, const Json& rows, std::ostream& out) {
  const std::string text = c.format == "csv" ? to_csv(rows) : report.dump(2) + "\n";
  if (c.out.empty() || c.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open output file '" + c.out + "'");
  f << text;
}

// --- optimize --------------------------------------------------------------

int cmd_optimize(const Common& c, const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.degree > 7) err << "warning: degree " << a.degree << " is beyond the tested range 0..7; expect long runs\n";
  const std::uint32_t lo = a.from_degree < 0 ? a.degree : static_cast<std::uint32_t>(a.from_degree);
  if (lo > a.degree) throw UsageError("--from-degree must not exceed --degree");
  rayleigh::SolverOptions opts;
  opts.tol = a.tol;
  opts.precision = rayleigh::parse_precision(a.precision);

  Json config = common_json(c);
  config["degree"] = a.degree;
  config["from_degree"] = lo;
  config["tol"] = a.tol;
  config["precision"] = a.precision;

  const auto t_total = Clock::now();
  Json results = Json::array();
  Json rows = Json::array();
  Json timings = Json::array();
  for (std::uint32_t n = lo; n <= a.degree; ++n) {
    const auto t0 = Clock::now();
    const auto fp = rayleigh::assemble(functionals::BasisSpec{n}, c.workers);
    const double t_assembly = seconds_since(t0);
    const auto t1 = Clock::now();
    const auto opt = rayleigh::min_generalized_eigenpair(fp, opts);
    const double t_solve = seconds_since(t1);

    Json r;
    r["degree"] = n;
    r["dimension"] = fp.dimension();
    r["min_eigenvalue"] = rayleigh::to_decimal(opt.min_eigenvalue, 30);
    r["lambda_bound"] = rayleigh::to_decimal(opt.lambda_bound, 30);
    r["min_eigenvalue_double"] = opt.min_eigenvalue.convert_to<double>();
    r["lambda_bound_double"] = opt.lambda_bound.convert_to<double>();
    r["residual"] = opt.residual;
    r["sweeps"] = opt.sweeps;
    r["precision"] = rayleigh::precision_name(opt.precision);
    Json coeffs = Json::array();
    for (double v : opt.coefficients) coeffs.push_back(format_double(v));
    r["coefficients"] = coeffs;

    Json row = r;
    row.erase("coefficients");
    rows.push_back(row);
    results.push_back(std::move(r));
    timings.push_back(Json{{"degree", n}, {"assembly_seconds", t_assembly}, {"solve_seconds", t_solve}});
  }
  Json report = header("optimize", config);
  report["timings"] = Json{{"total_seconds", seconds_since(t_total)}, {"per_degree", timings}};
  report["result"] = results.size() == 1 ? results[0] : Json{{"sweep", results}};
  emit(c, report, rows, out);
  return kSuccess;
}

// --- verify ----------------------------------------------------------------

std::uint64_t table_limit(const VerifyArgs& a, std::uint64_t needed) {
  if (a.limit == 0) return std::max<std::uint64_t>(needed, 2);
  if (a.limit < needed)
    throw UsageError("--limit " + std::to_string(a.limit) + " is below the required " + std::to_string(needed));
  return a.limit;
}

std::vector<std::uint64_t> or_default(const std::vector<std::uint64_t>& v, std::vector<std::uint64_t> dflt) {
  return v.empty() ? dflt : v;
}

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (std::find(kSuites.begin(), kSuites.end(), a.suite) == kSuites.end())
    throw UsageError("unknown suite '" + a.suite + "'");

  Json config = common_json(c);
  config["suite"] = a.suite;
  const auto t0 = Clock::now();
  Json result;
  Json rows = Json::array();
  bool ok = true;

  if (a.suite == "kloosterman") {
    config["m_max"] = a.m_max;
    config["ramanujan_max"] = a.ramanujan_max;
    try {
      const auto w = arith::weil_check(a.m_max);
      result["weil"] = Json{{"m_max", w.m_max},
                            {"moduli", w.moduli},
                            {"pairs", w.pairs},
                            {"violations", w.violations},
                            {"symmetry_failures", w.symmetry_failures},
                            {"max_ratio", w.max_ratio},
                            {"argmax", Json{{"m", w.argmax_m}, {"a", w.argmax_a}, {"b", w.argmax_b}}},
                            {"max_imag_residue", w.max_imag_residue}};
      const auto r = arith::ramanujan_check(a.ramanujan_max);
      result["ramanujan"] = Json{{"m_max", r.m_max}, {"checks", r.checks}, {"mismatches", r.mismatches}};
      rows.push_back(Json{{"check", "weil"}, {"m_max", w.m_max}, {"pairs", w.pairs}, {"violations", w.violations},
                          {"max_ratio", w.max_ratio}});
      rows.push_back(Json{{"check", "ramanujan"}, {"m_max", r.m_max}, {"pairs", r.checks},
                          {"violations", r.mismatches}});
    } catch (const arith::InvariantViolation& e) {
      err << "invariant violated: " << e.what() << "\n";
      result["error"] = e.what();
      ok = false;
    }
  } else if (a.suite == "divisor-ap") {
    const auto ms = or_default(a.m, {1});
    const auto xs = or_default(a.x, {1000000});
    config["m"] = ms;
    config["x"] = xs;
    config["a"] = a.a;
    const std::uint64_t xmax = *std::max_element(xs.begin(), xs.end());
    config["limit"] = table_limit(a, xmax);
    const arith::ArithTables tables(config["limit"].get<std::uint64_t>());
    Json partitions = Json::array();
    for (const std::uint64_t m : ms) {
      for (const std::uint64_t x : xs) {
        rows.push_back(comparison_json(arith::divisor_sum_ap(m, a.a, x, tables)));
        rows.push_back(comparison_json(arith::coprime_divisor_sum(m, x, tables)));
        std::uint64_t total = 0;
        for (std::uint64_t r = 0; r < m; ++r)
          if (std::gcd(r, m) == 1) total += arith::tau_sum_ap(tables, m, r, x);
        const std::uint64_t coprime = arith::tau_sum_coprime(tables, m, x);
        partitions.push_back(Json{{"m", m}, {"x", x}, {"sum_over_classes", total}, {"coprime_sum", coprime},
                                  {"equal", total == coprime}});
        if (total != coprime) {
          err << "partition mismatch at m=" << m << ", x=" << x << "\n";
          ok = false;
        }
      }
    }
    result["comparisons"] = rows;
    result["partitions"] = partitions;
  } else if (a.suite == "two-omega") {
    const auto ms = or_default(a.m, {2});
    const auto xs = or_default(a.x, {1000000});
    config["m"] = ms;
    config["x"] = xs;
    config["a"] = a.a;
    config["euler_cutoff"] = a.euler_cutoff;
    const std::uint64_t xmax = *std::max_element(xs.begin(), xs.end());
    config["limit"] = table_limit(a, 2 * xmax);
    const arith::ArithTables tables(config["limit"].get<std::uint64_t>());
    Json dyadic = Json::array();
    for (const std::uint64_t m : ms) {
      for (const std::uint64_t x : xs) {
        const auto cmp = arith::two_omega_sum_ap(m, a.a, x, tables, a.euler_cutoff);
        Json row = comparison_json(cmp);
        row["ratio"] = cmp.empirical / cmp.predicted;
        rows.push_back(row);
        const std::uint64_t full2 = arith::two_omega_sum_range(tables, m, a.a, 0, 2 * x);
        const std::uint64_t full1 = arith::two_omega_sum_range(tables, m, a.a, 0, x);
        const std::uint64_t part = arith::two_omega_sum_range(tables, m, a.a, x, 2 * x);
        dyadic.push_back(Json{{"m", m}, {"x", x}, {"equal", full2 - full1 == part}});
        if (full2 - full1 != part) ok = false;
      }
    }
    const auto k = arith::two_omega_constants(ms.front(), a.euler_cutoff);
    result["constants"] = Json{{"m", ms.front()}, {"c_m", k.c_m}, {"c0", k.c0}, {"c_full", k.c_full},
                               {"c_dyadic", k.c_dyadic}, {"euler_cutoff", k.cutoff}};
    result["comparisons"] = rows;
    result["dyadic_consistency"] = dyadic;
  } else if (a.suite == "mertens") {
    const auto xs = or_default(a.x, {1000, 10000, 100000, 1000000, 10000000});
    config["x"] = xs;
    const auto rep = arith::mertens_check(xs);
    for (const auto& r : rep.rows)
      rows.push_back(Json{{"x", r.x}, {"sum", r.sum}, {"difference", r.difference}});
    result["rows"] = rows;
    result["bounds"] = Json::array({rep.lower, rep.upper});
    result["within_bounds"] = rep.within_bounds;
    if (!rep.within_bounds) {
      err << "Mertens difference left [" << rep.lower << ", " << rep.upper << "]\n";
      ok = false;
    }
  } else {  // omega-k
    const auto& f = arith::find_function(a.function);
    const auto ms = or_default(a.m, {1});
    const auto xs = or_default(a.x, {10000, 100000, 1000000, 10000000});
    config["function"] = a.function;
    config["k"] = a.k;
    config["d"] = a.d;
    config["m"] = ms;
    config["x"] = xs;
    config["euler_cutoff"] = a.euler_cutoff;
    const std::uint64_t xmax = *std::max_element(xs.begin(), xs.end());
    config["limit"] = table_limit(a, xmax);
    const arith::ArithTables tables(config["limit"].get<std::uint64_t>());
    for (const std::uint64_t m : ms)
      for (const std::uint64_t x : xs) {
        const auto cmp = arith::omega_k_partial_sum(f, a.k, a.d, m, x, tables, a.euler_cutoff);
        Json row = comparison_json(cmp);
        row["ratio"] = cmp.predicted != 0.0 ? Json(cmp.empirical / cmp.predicted) : Json();
        rows.push_back(row);
      }
    result["comparisons"] = rows;
  }

  result["passed"] = ok;
  Json report = header("verify", config);
  report["timings"] = Json{{"total_seconds", seconds_since(t0)}};
  report["result"] = result;
  emit(c, report, rows, out);
  return ok ? kSuccess : kFailure;
}

// --- sieve -----------------------------------------------------------------

int cmd_sieve(const Common& c, SieveArgs a, std::ostream& out, std::ostream&) {
  auto& cfg = a.cfg;
  cfg.workers = c.workers;
  if (!a.coefficients_path.empty() && !a.coefficient_values.empty())
    throw UsageError("--coefficients and --coefficient-values are mutually exclusive");
  if (!a.coefficients_path.empty()) {
    const Polynomial p = read_polynomial(a.coefficients_path);
    cfg.degree = p.degree;
    cfg.coefficients = p.coefficients;
  } else if (!a.coefficient_values.empty()) {
    cfg.coefficients = a.coefficient_values;
  } else {
    cfg.coefficients.assign(static_cast<std::size_t>(cfg.degree + 1) * (cfg.degree + 1), 0.0);
    cfg.coefficients[0] = 1.0;
  }
  cfg.validate();
  const std::uint64_t needed = 2 * cfg.x + cfg.h;
  if (a.limit != 0 && a.limit < needed)
    throw UsageError("--limit must be at least 2x + h = " + std::to_string(needed));
  const std::uint64_t limit = a.limit == 0 ? needed : a.limit;

  Json config = common_json(c);
  config["x"] = cfg.x;
  config["z"] = cfg.z;
  config["z_resolved"] = cfg.resolved_z();
  config["z_epsilon"] = cfg.z_epsilon;
  config["W"] = cfg.W;
  config["h"] = cfg.h;
  config["v0"] = cfg.v0;
  config["lambda"] = cfg.lambda;
  config["limit"] = limit;
  config["indicative"] = a.indicative;
  config["coefficients_file"] = a.coefficients_path;
  config["degree"] = cfg.degree;
  Json coeffs = Json::array();
  for (double v : cfg.coefficients) coeffs.push_back(format_double(v));
  config["coefficients"] = coeffs;

  const auto t0 = Clock::now();
  const arith::ArithTables tables(limit);
  const double t_tables = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto support = sievesim::enumerate_support(cfg);
  const auto weights = sievesim::build_weights(cfg, support);
  const double t_weights = seconds_since(t1);
  const auto t2 = Clock::now();
  const auto rep = sievesim::master_sum(cfg, weights, tables, a.indicative);
  const auto scan = sievesim::witness_scan(cfg.x, cfg.h, cfg.lambda, tables);
  const double t_sums = seconds_since(t2);

  Json result;
  result["support_size"] = support.size();
  result["max_abs_weight"] = weights.max_abs();
  result["S1"] = rep.sums.s1;
  result["S2"] = rep.sums.s2;
  result["terms"] = rep.sums.terms;
  result["S2_over_S1"] = rep.achieved_ratio ? Json(*rep.achieved_ratio) : Json();
  result["lambda"] = rep.lambda;
  result["master_sum"] = rep.master;
  result["master_sum_sign"] = rep.master > 0 ? "positive" : (rep.master < 0 ? "negative" : "zero");
  result["progression_witnesses"] = rep.witnesses;
  Json hist = Json::array();
  for (const auto& [v, n] : scan.histogram) hist.push_back(Json{{"value", v}, {"count", n}});
  result["witness_scan"] = Json{{"count", scan.count}, {"min_value", scan.min_value},
                                {"first_witness", scan.first_witness}, {"histogram", hist}};
  if (rep.indicative) {
    const auto& ind = *rep.indicative;
    result["indicative"] = Json{{"note", "asymptotic comparison; not expected to approach 1 at this scale"},
                                {"B", ind.B}, {"R1", ind.r1}, {"R2", ind.r2},
                                {"S1_over_asymptotic", ind.s1_ratio}, {"S2_over_asymptotic", ind.s2_ratio}};
  }

  Json report = header("sieve", config);
  report["timings"] = Json{{"tables_seconds", t_tables}, {"weights_seconds", t_weights}, {"sums_seconds", t_sums},
                           {"total_seconds", seconds_since(t0)}};
  report["result"] = result;

  Json row{{"x", cfg.x}, {"z", cfg.resolved_z()}, {"W", cfg.W}, {"h", cfg.h}, {"v0", cfg.v0},
           {"lambda", cfg.lambda}, {"S1", rep.sums.s1}, {"S2", rep.sums.s2}, {"S2_over_S1", result["S2_over_S1"]},
           {"master_sum", rep.master}, {"witnesses", rep.witnesses}};
  emit(c, report, Json::array({row}), out);
  return kSuccess;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Report path, '-' for stdout")->capture_default_str();
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Polynomial read_polynomial(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open coefficient file '" + path + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("coefficient file '" + path + "' is not valid JSON: " + e.what());
  }
  if (j.contains("result")) j = j["result"];
  if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients"))
    throw std::invalid_argument("coefficient file '" + path + "' lacks degree/coefficients");
  Polynomial p;
  p.degree = j["degree"].get<std::uint32_t>();
  for (const auto& v : j["coefficients"]) {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      char* end = nullptr;
      const double d = std::strtod(s.c_str(), &end);
      if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad coefficient '" + s + "'");
      p.coefficients.push_back(d);
    } else {
      p.coefficients.push_back(v.get<double>());
    }
  }
  const std::size_t dim = static_cast<std::size_t>(p.degree + 1) * (p.degree + 1);
  if (p.coefficients.size() != dim)
    throw std::invalid_argument("coefficient file '" + path + "': expected " + std::to_string(dim) + " values");
  return p;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact optimisation and desk-scale verification for a two-dimensional twin-prime sieve", "twinsieve"};
  app.require_subcommand(1);
  // -h would collide with the shift option --h.
  app.set_help_flag("--help", "Print this help message and exit");

  Common common;
  OptimizeArgs opt;
  VerifyArgs ver;
  SieveArgs sv;

  auto* o = app.add_subcommand("optimize", "Minimise R2/R1 over the degree-n symmetric basis");
  add_common(o, common);
  o->add_option("--degree", opt.degree, "Basis degree n")->capture_default_str();
  o->add_option("--from-degree", opt.from_degree, "Sweep degrees from this value up to --degree");
  o->add_option("--tol", opt.tol, "Eigen-residual tolerance")->capture_default_str();
  o->add_option("--precision", opt.precision, "Working precision")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();

  auto* v = app.add_subcommand("verify", "Run an arithmetic verification sweep");
  add_common(v, common);
  v->add_option("--suite", ver.suite, "kloosterman | divisor-ap | two-omega | mertens | omega-k")->required();
  v->add_option("--m-max", ver.m_max, "Largest modulus for the Weil sweep")->capture_default_str();
  v->add_option("--ramanujan-max", ver.ramanujan_max, "Largest modulus for the Ramanujan check")
      ->capture_default_str();
  v->add_option("--m", ver.m, "Moduli (repeatable)");
  v->add_option("--x", ver.x, "Range bounds (repeatable)");
  v->add_option("--a", ver.a, "Residue class")->capture_default_str();
  v->add_option("--limit", ver.limit, "Table limit N (0: smallest sufficient)")->capture_default_str();
  v->add_option("--euler-cutoff", ver.euler_cutoff, "Prime cutoff for Euler products")->capture_default_str();
  v->add_option("--function", ver.function, "Multiplicative function for omega-k")->capture_default_str();
  v->add_option("--k", ver.k, "Class index k for omega-k")->capture_default_str();
  v->add_option("--d", ver.d, "Divisibility condition d | n for omega-k")->capture_default_str();

  auto* s = app.add_subcommand("sieve", "Evaluate S1, S2 and the master sum");
  add_common(s, common);
  s->add_option("--x", sv.cfg.x, "Range base; n runs over (x, 2x]")->capture_default_str();
  s->add_option("--z", sv.cfg.z, "Support bound (0: floor(x^(1/3 - eps)))")->capture_default_str();
  s->add_option("--z-epsilon", sv.cfg.z_epsilon, "eps in z = x^(1/3 - eps)")->capture_default_str();
  s->add_option("--W", sv.cfg.W, "Even squarefree modulus")->capture_default_str();
  s->add_option("--h", sv.cfg.h, "Even shift")->capture_default_str();
  s->add_option("--v0", sv.cfg.v0, "Residue class of n mod W")->capture_default_str();
  s->add_option("--lambda", sv.cfg.lambda, "Trial constant")->capture_default_str();
  s->add_option("--degree", sv.cfg.degree, "Degree when no coefficient file is given")->capture_default_str();
  s->add_option("--coefficients", sv.coefficients_path, "JSON file {degree, coefficients[]} or optimize report");
  s->add_option("--coefficient-values", sv.coefficient_values, "Inline coefficients over the basis");
  s->add_option("--limit", sv.limit, "Table limit N (0: 2x + h)")->capture_default_str();
  s->add_flag("--indicative", sv.indicative, "Report asymptotic comparison ratios");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (o->parsed()) return cmd_optimize(common, opt, out, err);
    if (v->parsed()) return cmd_verify(common, ver, out, err);
    return cmd_sieve(common, sv, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace twinsieve::cli
