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

#include <random>

#include "twinsieve/multipoly.hpp"

using twinsieve::MultiPoly;
using twinsieve::Rational;
using twinsieve::make_rational;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly X() { return MultiPoly::variable(kXY, "x"); }
MultiPoly Y() { return MultiPoly::variable(kXY, "y"); }
MultiPoly C(long n, long d = 1) { return MultiPoly::constant(kXY, make_rational(n, d)); }

MultiPoly random_poly(std::mt19937& rng, std::uint32_t max_deg) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 7);
  MultiPoly p(kXY);
  for (std::uint32_t a = 0; a <= max_deg; ++a)
    for (std::uint32_t b = 0; a + b <= max_deg; ++b) p.add_term({a, b}, make_rational(coef(rng), den(rng)));
  return p;
}

Rational at(const MultiPoly& p, const Rational& x, const Rational& y) {
  return twinsieve::eval(p, {{"x", x}, {"y", y}});
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(twinsieve::parse_rational("3/6") == make_rational(1, 2));
  CHECK(twinsieve::parse_rational("-4") == Rational(-4));
  CHECK(twinsieve::to_string(make_rational(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(twinsieve::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(twinsieve::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("expansion of (x+y)^2 (x^2+y^2)") {
  const MultiPoly p = power(X() + Y(), 2) * (X() * X() + Y() * Y());
  CHECK(p.coefficient({4, 0}) == 1);
  CHECK(p.coefficient({3, 1}) == 2);
  CHECK(p.coefficient({2, 2}) == 2);
  CHECK(p.coefficient({1, 3}) == 2);
  CHECK(p.coefficient({0, 4}) == 1);
  CHECK(p.size() == 5);
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in("y") == 4);
}

TEST_CASE("canonical printing") {
  CHECK(MultiPoly(kXY).to_string() == "0");
  const MultiPoly p = C(3) * X() * X() * Y() - C(1, 2) * Y() + C(2);
  const MultiPoly q = C(2) - C(1, 2) * Y() + C(3) * Y() * X() * X();
  CHECK(p == q);
  CHECK(p.to_string() == q.to_string());
  CHECK(p.to_string() == "3 · x^2 y - 1/2 · y + 2");
}

TEST_CASE("cancellation drops terms") {
  MultiPoly p = X() + Y();
  p -= X();
  CHECK(p == Y());
  CHECK(p.size() == 1);
  CHECK((X() - X()).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly a = random_poly(rng, 3), b = random_poly(rng, 2), c = random_poly(rng, 2);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(power(a, 3) == a * a * a);
  }
  CHECK(power(X() + C(1), 0) == C(1));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  const Rational x = make_rational(2, 7), y = make_rational(-5, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
    CHECK(at(a * b, x, y) == at(a, x, y) * at(b, x, y));
    CHECK(at(a + b, x, y) == at(a, x, y) + at(b, x, y));
  }
}

TEST_CASE("definite integrals") {
  const MultiPoly zero = C(0), one = C(1);
  CHECK(integrate_definite(X() * X(), "x", zero, one) == C(1, 3));
  // int_y^{1-y} x dx = (1 - 2y) / 2
  CHECK(integrate_definite(X(), "x", Y(), C(1) - Y()) == C(1, 2) - Y());
  // int_0^1 int_0^{1-x} 1 dy dx = 1/2
  const MultiPoly inner = integrate_definite(C(1), "y", zero, C(1) - X());
  CHECK(integrate_definite(inner, "x", zero, one) == C(1, 2));
}

TEST_CASE("integration is additive over adjacent intervals") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly p = random_poly(rng, 4);
    const MultiPoly a = C(0), b = Y() * C(1, 2), c = C(1) - Y();
    CHECK(integrate_definite(p, "x", a, b) + integrate_definite(p, "x", b, c) == integrate_definite(p, "x", a, c));
  }
}

TEST_CASE("antiderivative matches term-wise power rule") {
  const MultiPoly p = C(3) * X() * X() * Y() + C(4);
  const MultiPoly F = antiderivative(p, "x");
  CHECK(F == X() * X() * X() * Y() + C(4) * X());
}

TEST_CASE("substitution commutes with evaluation") {
  std::mt19937 rng(5);
  const MultiPoly repl = Y() * Y() + C(1, 3);
  const Rational y = make_rational(3, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly p = random_poly(rng, 3);
    const MultiPoly s = substitute(p, "x", repl);
    CHECK_FALSE(s.mentions("x"));
    CHECK(at(s, Rational(0), y) == at(p, y * y + make_rational(1, 3), y));
  }
  CHECK_THROWS_AS(substitute(X(), "x", X() + C(1)), std::invalid_argument);
}

TEST_CASE("variable-list handling") {
  const MultiPoly p = X() + C(2);
  const MultiPoly q = p.with_variables({"y", "x", "z"});
  CHECK(q.variables() == std::vector<std::string>{"y", "x", "z"});
  CHECK(q.coefficient({0, 1, 0}) == 1);
  CHECK_THROWS_AS(p.with_variables({"y"}), std::invalid_argument);
  CHECK_THROWS_AS(p + MultiPoly::variable({"u", "v"}, "u"), std::invalid_argument);
  CHECK_THROWS_AS(p.index_of("w"), std::invalid_argument);
  const MultiPoly r = p.renamed("x", "z");
  CHECK(r.has_variable("z"));
  CHECK_FALSE(r.has_variable("x"));
  CHECK(r.coefficient({1, 0}) == 1);
}

TEST_CASE("evaluation needs every mentioned variable") {
  const MultiPoly p = X() + C(1);
  CHECK(twinsieve::eval(p, {{"x", Rational(2)}}) == 3);
  CHECK_THROWS_AS(twinsieve::eval(p, {{"y", Rational(2)}}), std::invalid_argument);
}
