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

#include "twinsieve/arith.hpp"

namespace twinsieve::arith {

Rational MultiplicativeFunctionSpec::eval(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument(name + ": argument must be positive");
  Rational v(1);
  for (const auto& pp : factor_small(n)) {
    if (pp.e > 1) {
      if (squarefree_only) return Rational(0);
      throw std::domain_error(name + ": only the values at primes are specified");
    }
    v *= at_prime(pp.p);
  }
  return v;
}

namespace functions {
namespace {

Rational q(std::uint64_t num, std::uint64_t den = 1) {
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

MultiplicativeFunctionSpec make(std::string name, std::function<Rational(std::uint64_t)> rule) {
  return MultiplicativeFunctionSpec{std::move(name), std::move(rule), true};
}

Rational g_at(std::uint64_t p) {
  if (p == 2) throw std::domain_error("g: undefined at p = 2");
  return q(p * (p - 1), p - 2);
}

}  // namespace

MultiplicativeFunctionSpec sieve_f() {
  return make("f", [](std::uint64_t p) -> Rational { return q(p, 2); });
}

MultiplicativeFunctionSpec sieve_g() { return make("g", g_at); }

MultiplicativeFunctionSpec sieve_f1() {
  return make("f1", [](std::uint64_t p) -> Rational { return q(p, 2) - 1; });
}

MultiplicativeFunctionSpec sieve_g1() {
  return make("g1", [](std::uint64_t p) -> Rational { return g_at(p) - 1; });
}

MultiplicativeFunctionSpec sieve_h() {
  return make("h", [](std::uint64_t p) -> Rational { return 1 - q(3, p + 2); });
}

MultiplicativeFunctionSpec sieve_h1() {
  return make("h1", [](std::uint64_t p) -> Rational { return 1 - q(3, p) + q(2, p * p); });
}

MultiplicativeFunctionSpec sieve_h2() {
  return make("h2", [](std::uint64_t p) -> Rational { return 1 - q(2, p) + q(2, p * p); });
}

MultiplicativeFunctionSpec mu2_over_phi() {
  return make("mu2_over_phi", [](std::uint64_t p) -> Rational { return q(1, p - 1); });
}

MultiplicativeFunctionSpec mu2_over_id() {
  return make("mu2_over_id", [](std::uint64_t p) -> Rational { return q(1, p); });
}

}  // namespace functions

const std::vector<MultiplicativeFunctionSpec>& standard_functions() {
  static const std::vector<MultiplicativeFunctionSpec> all{
      functions::sieve_f(),  functions::sieve_g(),  functions::sieve_f1(),
      functions::sieve_g1(), functions::sieve_h(),  functions::sieve_h1(),
      functions::sieve_h2(), functions::mu2_over_phi(), functions::mu2_over_id()};
  return all;
}

const MultiplicativeFunctionSpec& find_function(const std::string& name) {
  for (const auto& f : standard_functions())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : standard_functions()) known += (known.empty() ? "" : ", ") + f.name;
  throw std::invalid_argument("unknown multiplicative function '" + name + "' (known: " + known + ")");
}

double SumComparison::parameter(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  throw std::out_of_range("SumComparison: no parameter '" + key + "'");
}

}  // namespace twinsieve::arith
