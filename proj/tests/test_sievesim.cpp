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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>
#include <numeric>

#include "twinsieve/functionals.hpp"
#include "twinsieve/sievesim.hpp"

namespace ar = twinsieve::arith;
namespace ss = twinsieve::sievesim;
using twinsieve::Rational;

namespace {

const ar::ArithTables& tables() {
  static const ar::ArithTables t(250000);
  return t;
}

ss::SieveConfig small_config() {
  ss::SieveConfig cfg;
  cfg.x = 10000;
  cfg.z = 20;
  cfg.degree = 1;
  cfg.coefficients = {1.0, -0.5, 0.25, 0.125};
  return cfg;
}

// S1 and S2 by looping over every support pair for every n.
ss::SieveSums naive_sums(const ss::SieveConfig& cfg, const ss::WeightTable& w) {
  ss::SieveSums out;
  const auto& pairs = w.support.pairs();
  for (std::uint64_t n = cfg.x + 1; n <= 2 * cfg.x; ++n) {
    if (n % cfg.W != cfg.v0 % cfg.W) continue;
    double inner = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (n % pairs[i].first == 0 && (n + cfg.h) % pairs[i].second == 0) inner += w.lambda[i];
    const double sq = inner * inner;
    out.s1 += sq;
    out.s2 += sq * static_cast<double>((1u << tables().big_omega(n)) + (1u << tables().big_omega(n + cfg.h)));
    ++out.terms;
  }
  return out;
}

}  // namespace

TEST_CASE("configuration checks") {
  ss::SieveConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.x = 1000000;
  CHECK(cfg.resolved_z() == 75);
  auto bad = [](auto mutate) {
    ss::SieveConfig c;
    mutate(c);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  };
  bad([](ss::SieveConfig& c) { c.x = 0; });
  bad([](ss::SieveConfig& c) { c.W = 5; });
  bad([](ss::SieveConfig& c) { c.W = 12; });
  bad([](ss::SieveConfig& c) { c.h = 3; });
  bad([](ss::SieveConfig& c) { c.h = 10; });
  bad([](ss::SieveConfig& c) { c.v0 = 3; });
  bad([](ss::SieveConfig& c) { c.v0 = 1; });  // v0 + h = 3
  bad([](ss::SieveConfig& c) { c.lambda = 0; });
  bad([](ss::SieveConfig& c) { c.z_epsilon = 0.5; });
  bad([](ss::SieveConfig& c) { c.coefficients = {1.0, 2.0}; });
  bad([](ss::SieveConfig& c) { c.z = 1; });
}

TEST_CASE("polynomial evaluation") {
  const std::vector<double> c{0.3, -1.2, 2.5, 0.7, 1.1, -0.4, 0.9, 0.2, -2.0};
  for (double a : {0.0, 0.1, 0.37, 0.6, 0.99})
    for (double b : {0.0, 0.25, 0.5, 0.8}) CHECK(ss::eval_polynomial(2, c, a, b) == ss::eval_polynomial(2, c, b, a));

  // Against the exact expansion at a dyadic point.
  namespace fn = twinsieve::functionals;
  const fn::BasisSpec spec{2};
  std::vector<Rational> cr;
  for (double v : c) cr.emplace_back(v);
  const auto P = fn::combine(spec, cr);
  const Rational exact = twinsieve::eval(P, {{"x", Rational(1, 4)}, {"y", Rational(5, 8)}});
  CHECK(ss::eval_polynomial(2, c, 0.25, 0.625) == doctest::Approx(exact.get_d()).epsilon(1e-14));
}

TEST_CASE("support enumeration") {
  ss::SieveConfig cfg;
  cfg.z = 2;
  const auto tiny = ss::enumerate_support(cfg);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny.contains(1, 1));

  cfg.z = 60;
  const auto s = ss::enumerate_support(cfg);
  CHECK(s.swap_closed());
  std::size_t expected = 0;
  for (std::uint64_t d1 = 1; d1 <= 60; ++d1)
    for (std::uint64_t d2 = 1; d2 <= 60; ++d2) {
      const bool in = ar::is_squarefree(d1 * d2 * 6) && ar::support_size_ok(d1, d2, 60);
      expected += in;
      CHECK(s.contains(d1, d2) == in);
    }
  CHECK(s.size() == expected);
  CHECK_FALSE(s.index_of(2, 1).has_value());

  CHECK_THROWS_AS(ss::SupportSet({{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_FALSE(ss::SupportSet({{1, 5}}).swap_closed());
}

TEST_CASE("sieve_f") {
  CHECK(ss::sieve_f(1) == 1.0);
  CHECK(ss::sieve_f(35) == doctest::Approx(35.0 / 4));
}

TEST_CASE("weights") {
  ss::SieveConfig one;
  one.z = 2;
  const auto w1 = ss::build_weights(one, ss::enumerate_support(one));
  CHECK(w1.at(1, 1) == 1.0);
  CHECK(w1.at(5, 1) == 0.0);

  auto cfg = small_config();
  cfg.z = 50;
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  for (const auto& [d1, d2] : w.support.pairs()) CHECK(w.at(d1, d2) == w.at(d2, d1));

  // lambda_{1,1} straight from the definition.
  const double lz = std::log(50.0);
  double sum = 0;
  for (const auto& [l1, l2] : w.support.pairs())
    sum += ss::eval_polynomial(cfg.degree, cfg.coefficients, std::log(double(l1)) / lz, std::log(double(l2)) / lz) /
           (ss::sieve_f(l1) * ss::sieve_f(l2));
  CHECK(w.at(1, 1) == doctest::Approx(sum).epsilon(1e-13));
  CHECK(w.max_abs() >= std::abs(w.at(1, 1)));
}

TEST_CASE("sums against a naive double loop") {
  const auto cfg = small_config();
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const auto fast = ss::evaluate_sums(cfg, w, tables());
  const auto slow = naive_sums(cfg, w);
  CHECK(fast.terms == slow.terms);
  CHECK(fast.s1 == doctest::Approx(slow.s1).epsilon(1e-12));
  CHECK(fast.s2 == doctest::Approx(slow.s2).epsilon(1e-12));
  CHECK(fast.s1 >= 0);
  CHECK(fast.s2 >= 0);
  CHECK(ss::evaluate_s1(cfg, w, tables()) == fast.s1);
  CHECK(ss::evaluate_s2(cfg, w, tables()) == fast.s2);
}

TEST_CASE("single-pair support reduces to counting") {
  ss::SieveConfig cfg;
  cfg.x = 50000;
  cfg.z = 2;
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const auto s = ss::evaluate_sums(cfg, w, tables());
  std::uint64_t count = 0;
  for (std::uint64_t n = cfg.x + 1; n <= 2 * cfg.x; ++n) count += n % 6 == 5;
  CHECK(s.terms == count);
  CHECK(s.s1 == static_cast<double>(count));
  const auto expected = ar::two_omega_sum_range(tables(), 6, 5, cfg.x, 2 * cfg.x) +
                        ar::two_omega_sum_range(tables(), 6, 1, cfg.x + 2, 2 * cfg.x + 2);
  CHECK(s.s2 == static_cast<double>(expected));
}

TEST_CASE("zero weights give zero sums") {
  auto cfg = small_config();
  cfg.coefficients.assign(4, 0.0);
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const auto r = ss::master_sum(cfg, w, tables());
  CHECK(r.sums.s1 == 0.0);
  CHECK(r.sums.s2 == 0.0);
  CHECK_FALSE(r.achieved_ratio.has_value());
}

TEST_CASE("results do not depend on the worker count") {
  auto cfg = small_config();
  cfg.x = 100000;
  cfg.z = 0;
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const auto a = ss::evaluate_sums(cfg, w, tables());
  cfg.workers = 3;
  const auto b = ss::evaluate_sums(cfg, w, tables());
  CHECK(a.s1 == b.s1);
  CHECK(a.s2 == b.s2);
}

TEST_CASE("master sum") {
  auto cfg = small_config();
  cfg.lambda = 1e9;
  const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
  const auto r = ss::master_sum(cfg, w, tables(), true);
  CHECK(r.master > 0);
  REQUIRE(r.achieved_ratio.has_value());
  CHECK(*r.achieved_ratio == doctest::Approx(r.sums.s2 / r.sums.s1));
  CHECK(r.witnesses == r.sums.terms);
  REQUIRE(r.indicative.has_value());
  CHECK(r.indicative->r1 > 0);
  CHECK(r.indicative->B == doctest::Approx(2.0 / 6.0 * std::log(20.0)));

  cfg.x = 200000;
  CHECK_THROWS_AS(ss::evaluate_sums(cfg, w, tables()), std::out_of_range);
}

TEST_CASE("sieve divisors") {
  CHECK(ss::sieve_divisors(35, 6, 100, tables()) == std::vector<std::uint64_t>{1, 5, 7, 35});
  CHECK(ss::sieve_divisors(2 * 3 * 5 * 7, 6, 10, tables()) == std::vector<std::uint64_t>{1, 5, 7});
  CHECK(ss::sieve_divisors(25, 6, 100, tables()) == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("witness scan") {
  const auto r = ss::witness_scan(10000, 2, 14.0, tables());
  std::uint64_t count = 0, c4 = 0, c8 = 0;
  for (std::uint64_t n = 10001; n <= 20000; ++n) {
    const std::uint64_t v = (1u << tables().big_omega(n)) + (1u << tables().big_omega(n + 2));
    count += v <= 14;
    c4 += v == 4;
    c8 += v == 8;
  }
  CHECK(r.count == count);
  CHECK(r.count_of(4) == c4);
  CHECK(r.count_of(8) == c8);
  CHECK(r.count_of(4) > 0);
  CHECK(r.count_of(8) > 0);
  CHECK(r.min_value == 4);
  std::uint64_t total = 0;
  for (const auto& [v, c] : r.histogram) total += c;
  CHECK(total == r.count);
}

TEST_CASE("weight growth with z") {
  // Reported rather than asserted: the size of the largest weight relative
  // to lambda_{1,1} as the level grows.
  for (std::uint64_t z : {10u, 30u, 100u, 300u}) {
    ss::SieveConfig cfg;
    cfg.z = z;
    const auto w = ss::build_weights(cfg, ss::enumerate_support(cfg));
    const double ratio = w.max_abs() / std::abs(w.at(1, 1));
    MESSAGE("z = " << z << ": |S| = " << w.support.size() << ", max|lambda| / |lambda_11| = " << ratio);
    CHECK(std::isfinite(ratio));
  }
}
