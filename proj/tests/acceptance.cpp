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

// Acceptance checks. Each check prints one line
//
//   PASS <id>: <detail>    or    FAIL <id>: <detail>
//
// Usage: acceptance [id ...]; with no arguments every check runs. The exit
// status is nonzero when any selected check fails.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadrature_oracle.hpp"
#include "twinsieve/arith.hpp"
#include "twinsieve/cli.hpp"
#include "twinsieve/functionals.hpp"
#include "twinsieve/rayleigh.hpp"
#include "twinsieve/sievesim.hpp"

namespace ar = twinsieve::arith;
namespace fn = twinsieve::functionals;
namespace ry = twinsieve::rayleigh;
namespace ss = twinsieve::sievesim;
using twinsieve::MultiPoly;
using twinsieve::Rational;
using Json = nlohmann::json;

namespace {

// Reference values and tolerances.
constexpr double kHeadlineEigenvalue = 6.290731135292344;
constexpr double kHeadlineEigenvalueRelTol = 1e-9;
constexpr double kHeadlineLambda = 12.5814622705847;
constexpr double kHeadlineLambdaTol = 2e-9;
constexpr double kScalarOracleRelTol = 1e-10;
constexpr double kMonotonicityTol = 1e-12;
constexpr double kDirichletFactor = 3.0;
constexpr double kEnvelopeRatio = 10.0;
constexpr double kOmegaGapBound = 2.0;
constexpr double kOmegaSpreadBound = 0.1;
constexpr double kOmegaRatioTol = 0.02;
constexpr double kWitnessLambda = 14.0;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

Outcome headline() {
  std::ostringstream out, err;
  const int code = twinsieve::cli::run_cli({"optimize", "--degree", "7"}, out, err);
  if (code != 0) return {false, "optimize exited with " + std::to_string(code) + ": " + err.str()};
  const Json r = Json::parse(out.str())["result"];
  const double mu = std::stod(r["min_eigenvalue"].get<std::string>());
  const double lam = std::stod(r["lambda_bound"].get<std::string>());
  const double rel = std::abs(mu - kHeadlineEigenvalue) / kHeadlineEigenvalue;
  const double abs_lam = std::abs(lam - kHeadlineLambda);
  const bool ok = rel <= kHeadlineEigenvalueRelTol && abs_lam <= kHeadlineLambdaTol;
  return {ok, "min_eigenvalue=" + r["min_eigenvalue"].get<std::string>() + " (rel err " + fmt(rel, 3) +
                  "), lambda_bound=" + r["lambda_bound"].get<std::string>() + " (abs err " + fmt(abs_lam, 3) + ")"};
}

Outcome scalar_oracle() {
  const MultiPoly one = MultiPoly::constant(fn::weight_variables(), Rational(1));
  const Rational exact = fn::r2_value(one) / fn::r1_value(one);
  const oracle::RegionT<double, oracle::GaussKronrod<double>> region([](double, double) { return 1.0; }, {});
  const double numeric = region.r2() / region.r1();
  const double rel = std::abs(numeric - exact.get_d()) / exact.get_d();
  return {rel <= kScalarOracleRelTol, "exact " + twinsieve::to_string(exact) + " = " + fmt(exact.get_d()) +
                                          ", quadrature " + fmt(numeric) + ", rel err " + fmt(rel, 3)};
}

Outcome geometry() {
  const MultiPoly one = MultiPoly::constant(fn::outer_variables(), Rational(1));
  Rational area = 0;
  for (fn::Region r : fn::kRegions) area += fn::region_integral(r, one);
  const Rational q = fn::q1_of(MultiPoly::constant(fn::weight_variables(), Rational(1)))
                         .eval(fn::Region::kLowLow, Rational(0), Rational(0));
  const Rational expected(3, 5);
  return {area == expected && q == expected,
          "area " + twinsieve::to_string(area) + ", Q1(1)(0,0) " + twinsieve::to_string(q)};
}

Outcome monotonicity() {
  std::vector<ry::HighReal> bounds;
  std::string detail;
  bool ok = true;
  for (std::uint32_t n = 0; n <= 7; ++n) {
    const auto opt = ry::min_generalized_eigenpair(ry::assemble(fn::BasisSpec{n}, 4));
    bounds.push_back(opt.lambda_bound);
    detail += (n ? ", " : "") + ry::to_decimal(opt.lambda_bound, 16);
    if (n > 0) {
      const double drop = static_cast<double>(bounds[n - 1] - bounds[n]);
      if (drop < -kMonotonicityTol) ok = false;
    }
  }
  return {ok, "lambda_bound(0..7) = " + detail};
}

Outcome weil() {
  try {
    const auto w = ar::weil_check(50);
    const auto r = ar::ramanujan_check(100);
    const bool ok = w.violations == 0 && w.symmetry_failures == 0 && r.mismatches == 0;
    return {ok, std::to_string(w.pairs) + " pairs over " + std::to_string(w.moduli) + " moduli, " +
                    std::to_string(w.violations) + " violations, max ratio " + fmt(w.max_ratio, 6) + "; " +
                    std::to_string(r.checks) + " Ramanujan checks, " + std::to_string(r.mismatches) +
                    " mismatches"};
  } catch (const ar::InvariantViolation& e) {
    return {false, e.what()};
  }
}

Outcome divisor_partition() {
  const std::uint64_t x = 1000000;
  const ar::ArithTables t(x);
  bool ok = true;
  std::string detail;
  for (std::uint64_t m : {6u, 30u, 210u}) {
    std::uint64_t total = 0;
    for (std::uint64_t a = 1; a < m; ++a)
      if (std::gcd(a, m) == 1) total += ar::tau_sum_ap(t, m, a, x);
    const std::uint64_t whole = ar::tau_sum_coprime(t, m, x);
    ok = ok && total == whole;
    detail += (detail.empty() ? "" : "; ") + ("m=" + std::to_string(m) + ": " + std::to_string(total) +
                                              (total == whole ? " == " : " != ") + std::to_string(whole));
  }
  return {ok, detail};
}

Outcome dirichlet() {
  const ar::ArithTables t(1000000);
  bool ok = true;
  std::string detail;
  for (std::uint64_t x : {10000u, 100000u, 1000000u}) {
    const auto c = ar::coprime_divisor_sum(1, x, t);
    const double bound = kDirichletFactor * std::sqrt(static_cast<double>(x));
    ok = ok && c.abs_error <= bound;
    detail += (detail.empty() ? "" : "; ") +
              ("x=" + std::to_string(x) + ": |error| " + fmt(c.abs_error, 6) + " <= " + fmt(bound, 6));
  }
  return {ok, detail};
}

Outcome error_envelope() {
  const ar::ArithTables t(10000000);
  std::vector<double> errs;
  for (std::uint64_t x : {100000u, 1000000u, 10000000u}) {
    const auto mmax = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 0.6));
    for (std::uint64_t m = 2; m <= mmax; m += 2) {
      if (!ar::is_squarefree(m)) continue;
      for (std::uint64_t a : {std::uint64_t{1}, m - 1}) {
        if (a == m - 1 && a == 1) continue;
        errs.push_back(ar::divisor_sum_ap(m, a, x, t).normalized_error);
      }
    }
  }
  std::vector<double> sorted = errs;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.size() % 2 ? sorted[sorted.size() / 2]
                                          : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
  const double max = sorted.back();
  return {max <= kEnvelopeRatio * median, std::to_string(errs.size()) + " points, max " + fmt(max, 6) +
                                              ", median " + fmt(median, 6) + ", ratio " + fmt(max / median, 4)};
}

Outcome omega_k() {
  const ar::ArithTables t(10000000);
  const auto phi = ar::functions::mu2_over_phi();
  const auto id = ar::functions::mu2_over_id();
  double lo = INFINITY, hi = -INFINITY;
  std::string detail = "sum mu^2/phi - log x:";
  for (std::uint64_t x : {10000u, 100000u, 1000000u, 10000000u}) {
    const auto c = ar::omega_k_partial_sum(phi, 1, 1, 1, x, t);
    const double gap = c.empirical - std::log(static_cast<double>(x));
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
    detail += " " + fmt(gap, 6);
  }
  const bool bounded = std::max(std::abs(lo), std::abs(hi)) <= kOmegaGapBound && hi - lo <= kOmegaSpreadBound;

  const std::uint64_t x = 10000000;
  const auto c = ar::omega_k_partial_sum(id, 1, 1, 1, x, t);
  const double ratio = c.empirical / (6.0 / (std::numbers::pi * std::numbers::pi) * std::log(static_cast<double>(x)));
  const bool close = std::abs(ratio - 1.0) <= kOmegaRatioTol;
  detail += " (spread " + fmt(hi - lo, 4) + "); sum mu^2/n / ((6/pi^2) log x) at 1e7 = " + fmt(ratio, 6);
  return {bounded && close, detail};
}

Outcome sieve_consistency() {
  const auto opt = ry::min_generalized_eigenpair(ry::assemble(fn::BasisSpec{2}));
  ss::SieveConfig cfg;
  cfg.x = 10000;
  cfg.z = 20;
  cfg.W = 6;
  cfg.degree = 2;
  cfg.coefficients = opt.coefficients;
  const ar::ArithTables t(2 * cfg.x + cfg.h);
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const double s1 = ss::evaluate_s1(cfg, w, t);
  const double s2 = ss::evaluate_s2(cfg, w, t);

  // Every n in the progression against every support pair, summed in the
  // same fixed-size blocks as the library.
  const auto& pairs = w.support.pairs();
  double n1 = 0, n2 = 0, b1 = 0, b2 = 0;
  std::uint64_t in_block = 0;
  for (std::uint64_t n = cfg.x + 1; n <= 2 * cfg.x; ++n) {
    if (n % cfg.W != cfg.v0) continue;
    double inner = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (n % pairs[i].first == 0 && (n + cfg.h) % pairs[i].second == 0) inner += w.lambda[i];
    const double sq = inner * inner;
    b1 += sq;
    b2 += sq * static_cast<double>((1u << t.big_omega(n)) + (1u << t.big_omega(n + cfg.h)));
    if (++in_block == ss::kBlockTerms) {
      n1 += b1;
      n2 += b2;
      b1 = b2 = 0;
      in_block = 0;
    }
  }
  n1 += b1;
  n2 += b2;

  bool symmetric = true;
  for (const auto& [d1, d2] : pairs) symmetric = symmetric && w.at(d1, d2) == w.at(d2, d1);
  const bool ok = s1 == n1 && s2 == n2 && s1 >= 0 && s2 >= 0 && symmetric;
  return {ok, "|support| " + std::to_string(pairs.size()) + ", S1 " + fmt(s1) + (s1 == n1 ? " == " : " != ") +
                  fmt(n1) + ", S2 " + fmt(s2) + (s2 == n2 ? " == " : " != ") + fmt(n2) + ", weights " +
                  (symmetric ? "symmetric" : "asymmetric")};
}

Outcome witness_scan() {
  const ar::ArithTables t(2000002);
  bool ok = true;
  std::string detail;
  for (std::uint64_t x : {10000u, 100000u, 1000000u}) {
    const auto r = ss::witness_scan(x, 2, kWitnessLambda, t);
    ok = ok && r.count > 0;
    detail += (detail.empty() ? "" : "; ") +
              ("x=" + std::to_string(x) + ": " + std::to_string(r.count) + " witnesses, min value " +
               std::to_string(r.min_value) + " (" + std::to_string(r.count_of(r.min_value)) + "), first " +
               std::to_string(r.first_witness));
  }
  return {ok, detail};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& checks() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"headline", headline},
      {"scalar_oracle", scalar_oracle},
      {"geometry", geometry},
      {"monotonicity", monotonicity},
      {"weil", weil},
      {"divisor_partition", divisor_partition},
      {"dirichlet", dirichlet},
      {"error_envelope", error_envelope},
      {"omega_k", omega_k},
      {"sieve_consistency", sieve_consistency},
      {"witness_scan", witness_scan},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty())
    for (const auto& [id, _] : checks()) wanted.push_back(id);

  int failures = 0;
  for (const auto& id : wanted) {
    const auto it = std::find_if(checks().begin(), checks().end(), [&](const auto& c) { return c.first == id; });
    if (it == checks().end()) {
      std::cerr << "unknown check '" << id << "'\n";
      return 2;
    }
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << ": " << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
