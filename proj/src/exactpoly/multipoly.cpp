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

#include "twinsieve/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twinsieve {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("MultiPoly: duplicate variable " + vars_[i]);
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.arity(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exps.size() != p.arity()) throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
  p.add_term(exps, c);
  return p;
}

std::size_t MultiPoly::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("MultiPoly: unknown variable " + std::string(name));
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::has_variable(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MultiPoly::mentions(std::string_view name) const {
  if (!has_variable(name)) return false;
  return degree_in(name) > 0;
}

std::uint32_t MultiPoly::degree_in(std::string_view name) const {
  const std::size_t idx = index_of(name);
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> variables) const {
  MultiPoly out(std::move(variables));
  std::vector<std::size_t> target(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    auto it = std::find(out.vars_.begin(), out.vars_.end(), vars_[i]);
    if (it == out.vars_.end()) {
      if (mentions(vars_[i]))
        throw std::invalid_argument("MultiPoly::with_variables: dropping mentioned variable " + vars_[i]);
      target[i] = out.arity();
    } else {
      target[i] = static_cast<std::size_t>(it - out.vars_.begin());
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(out.arity(), 0);
    for (std::size_t i = 0; i < arity(); ++i)
      if (target[i] < out.arity()) f[target[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(std::string_view from, std::string_view to) const {
  auto vars = vars_;
  vars[index_of(from)] = std::string(to);
  MultiPoly out(std::move(vars));
  out.terms_ = terms_;
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != arity()) throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_variables(const MultiPoly& q) const {
  if (vars_ != q.vars_) throw std::invalid_argument("MultiPoly: mismatched variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_same_variables(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_same_variables(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vector first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << twinsieve::to_string(mag);
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (any ? " " : " · ") << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
  }
  return os.str();
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r = p;
  r += q;
  return r;
}

MultiPoly sub(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r = p;
  r -= q;
  return r;
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) {
  if (p.variables() != q.variables()) throw std::invalid_argument("MultiPoly: mismatched variable sets");
  MultiPoly r(p.variables());
  MultiPoly::Exponents e(p.arity());
  Rational prod;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      prod = cp * cq;
      r.add_term(e, prod);
    }
  }
  return r;
}

MultiPoly scale(const MultiPoly& p, const Rational& c) {
  MultiPoly r = p;
  r *= c;
  return r;
}

MultiPoly power(const MultiPoly& p, std::uint32_t k) {
  MultiPoly result = MultiPoly::constant(p.variables(), Rational(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  if (p.variables() != replacement.variables())
    throw std::invalid_argument("substitute: mismatched variable sets");
  const std::size_t idx = p.index_of(var);
  if (replacement.mentions(var)) throw std::invalid_argument("substitute: replacement mentions " + std::string(var));

  // Group p by the power of `var`: p = sum_k c_k * var^k.
  std::map<std::uint32_t, MultiPoly> by_power;
  for (const auto& [e, c] : p.terms()) {
    auto rest = e;
    const std::uint32_t k = rest[idx];
    rest[idx] = 0;
    auto [it, _] = by_power.try_emplace(k, MultiPoly(p.variables()));
    it->second.add_term(rest, c);
  }

  MultiPoly result(p.variables());
  MultiPoly rpow = MultiPoly::constant(p.variables(), Rational(1));
  std::uint32_t have = 0;
  for (const auto& [k, coeff] : by_power) {
    while (have < k) {
      rpow = mul(rpow, replacement);
      ++have;
    }
    result += mul(coeff, rpow);
  }
  return result;
}

MultiPoly antiderivative(const MultiPoly& p, std::string_view var) {
  const std::size_t idx = p.index_of(var);
  MultiPoly r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    auto f = e;
    f[idx] += 1;
    r.add_term(f, c / Rational(f[idx]));
  }
  return r;
}

MultiPoly integrate_definite(const MultiPoly& p, std::string_view var, const MultiPoly& lower,
                             const MultiPoly& upper) {
  if (lower.mentions(var) || upper.mentions(var))
    throw std::invalid_argument("integrate_definite: limits mention the integration variable");
  const MultiPoly F = antiderivative(p, var);
  return sub(substitute(F, var, upper), substitute(F, var, lower));
}

Rational eval(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  const auto& vars = p.variables();
  std::vector<const Rational*> coord(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it != point.end()) {
      coord[i] = &it->second;
    } else if (p.mentions(vars[i])) {
      throw std::invalid_argument("eval: missing coordinate for " + vars[i]);
    }
  }
  Rational sum(0);
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), coord[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), coord[i]->get_den_mpz_t(), e[i]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

}  // namespace twinsieve
