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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace twinsieve {

// mpq_class keeps every value canonical: reduced, positive denominator, 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

// Multivariate polynomial with exact rational coefficients.
//
// The variable list is ordered and fixed for the lifetime of a value; two
// polynomials combine only when their variable lists are identical. Terms
// are kept in a sorted map, so two equal polynomials always compare equal
// and print identically. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps,
                            const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Index of `name` in the variable list; throws std::invalid_argument.
  std::size_t index_of(std::string_view name) const;
  bool has_variable(std::string_view name) const;
  // True when some stored term has a positive exponent for `name`.
  bool mentions(std::string_view name) const;

  std::uint32_t degree_in(std::string_view name) const;
  std::uint32_t total_degree() const;

  // Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Exponents& exps) const;

  // Re-expresses the polynomial over another variable list, matching by
  // name. Variables the polynomial mentions must be present in `variables`.
  MultiPoly with_variables(std::vector<std::string> variables) const;
  MultiPoly renamed(std::string_view from, std::string_view to) const;

  // Adds c * x^exps; drops the term if the sum cancels.
  void add_term(const Exponents& exps, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const Rational& c);

  std::string to_string() const;

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }

 private:
  void require_same_variables(const MultiPoly& q) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly scale(const MultiPoly& p, const Rational& c);
MultiPoly power(const MultiPoly& p, std::uint32_t k);

// Composition p|_{var = replacement}. The replacement shares p's variable
// list and must not mention `var`.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

// Term-wise antiderivative in `var`, without a constant of integration.
MultiPoly antiderivative(const MultiPoly& p, std::string_view var);

// F(upper) - F(lower) with F the antiderivative of p in `var`. Limits share
// p's variable list and must not mention `var`.
MultiPoly integrate_definite(const MultiPoly& p, std::string_view var, const MultiPoly& lower,
                             const MultiPoly& upper);

// Exact value at a point; every mentioned variable needs a coordinate.
Rational eval(const MultiPoly& p, const std::map<std::string, Rational>& point);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return sub(p, q); }
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return mul(p, q); }
inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return scale(p, c); }
inline MultiPoly operator-(const MultiPoly& p) { return scale(p, Rational(-1)); }

}  // namespace twinsieve
