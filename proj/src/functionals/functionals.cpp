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

#include "twinsieve/functionals.hpp"

#include <algorithm>
#include <stdexcept>

namespace twinsieve::functionals {
namespace {

const Rational kBreak = make_rational(3, 5);

// a + b * var over `vars`.
MultiPoly linear(const std::vector<std::string>& vars, std::string_view var, const Rational& a,
                 const Rational& b) {
  MultiPoly p = MultiPoly::constant(vars, a);
  p += scale(MultiPoly::variable(vars, var), b);
  return p;
}

// 1 - (2/3) v
MultiPoly lower_line(const std::vector<std::string>& vars, std::string_view v) {
  return linear(vars, v, Rational(1), make_rational(-2, 3));
}

// (3/2)(1 - v)
MultiPoly upper_line(const std::vector<std::string>& vars, std::string_view v) {
  return linear(vars, v, make_rational(3, 2), make_rational(-3, 2));
}

MultiPoly constant(const std::vector<std::string>& vars, const Rational& c) {
  return MultiPoly::constant(vars, c);
}

// P(first, second) over integration_variables().
MultiPoly embed(const MultiPoly& P, std::string_view first, std::string_view second) {
  if (P.arity() != 2) throw std::invalid_argument("functionals: weight polynomial must have two variables");
  MultiPoly q({std::string(first), std::string(second)});
  for (const auto& [e, c] : P.terms()) q.add_term(e, c);
  return q.with_variables(integration_variables());
}

MultiPoly to_outer(const MultiPoly& p) { return p.with_variables(outer_variables()); }

std::array<RegionPiece, 3> make_pieces() {
  const auto& v = outer_variables();
  const Rational zero(0), one(1);
  return {
      RegionPiece{Region::kLowLow, constant(v, zero), constant(v, kBreak), constant(v, zero),
                  constant(v, kBreak)},
      RegionPiece{Region::kLowHigh, constant(v, zero), constant(v, kBreak), constant(v, kBreak),
                  lower_line(v, "s1")},
      RegionPiece{Region::kHighLow, constant(v, kBreak), constant(v, one), constant(v, zero),
                  upper_line(v, "s1")},
  };
}

// Coefficients c0 + c1 s1 of a linear limit.
std::pair<Rational, Rational> linear_coefficients(const MultiPoly& p) {
  if (p.total_degree() > 1 || p.mentions("s2"))
    throw std::logic_error("functionals: region limit is not linear in s1");
  return {p.coefficient({0, 0}), p.coefficient({1, 0})};
}

// (c0 + c1 s)^e as a dense coefficient vector.
std::vector<Rational> linear_power(const Rational& c0, const Rational& c1, std::uint32_t e) {
  std::vector<Rational> out(e + 1);
  Integer binom(1);
  for (std::uint32_t j = 0; j <= e; ++j) {
    mpq_class a, b;
    mpz_pow_ui(a.get_num_mpz_t(), c0.get_num_mpz_t(), e - j);
    mpz_pow_ui(a.get_den_mpz_t(), c0.get_den_mpz_t(), e - j);
    mpz_pow_ui(b.get_num_mpz_t(), c1.get_num_mpz_t(), j);
    mpz_pow_ui(b.get_den_mpz_t(), c1.get_den_mpz_t(), j);
    out[j] = Rational(binom) * a * b;
    binom = binom * (e - j) / (j + 1);
  }
  return out;
}

Rational rational_pow(const Rational& r, std::uint32_t e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  return out;
}

MultiPoly s1_weight(const Rational& a, const Rational& b) {
  // a s1 + b s1^2
  MultiPoly w(outer_variables());
  w.add_term({1, 0}, a);
  w.add_term({2, 0}, b);
  return w;
}

}  // namespace

Rational eta(const Rational& s) {
  if (s < 0 || s > 1) throw std::domain_error("eta: argument outside [0, 1]");
  Rational a = 1 - make_rational(2, 3) * s;
  Rational b = make_rational(3, 2) * (1 - s);
  return a < b ? a : b;
}

double eta(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("eta: argument outside [0, 1]");
  return std::min(1.0 - 2.0 * s / 3.0, 1.5 * (1.0 - s));
}

std::size_t BasisSpec::pos(std::uint32_t i, std::uint32_t j) const {
  if (i > degree || j > degree) throw std::out_of_range("BasisSpec::pos: index out of range");
  return static_cast<std::size_t>(degree + 1) * i + j;
}

std::pair<std::uint32_t, std::uint32_t> BasisSpec::indices(std::size_t k) const {
  if (k >= dimension()) throw std::out_of_range("BasisSpec::indices: index out of range");
  const auto w = static_cast<std::size_t>(degree + 1);
  return {static_cast<std::uint32_t>(k / w), static_cast<std::uint32_t>(k % w)};
}

MultiPoly basis_element(const BasisSpec& spec, std::size_t k) {
  const auto [i, j] = spec.indices(k);
  const auto& v = weight_variables();
  MultiPoly u = MultiPoly::variable(v, "x") + MultiPoly::variable(v, "y");
  MultiPoly r = MultiPoly::monomial(v, {2, 0}, Rational(1)) + MultiPoly::monomial(v, {0, 2}, Rational(1));
  return mul(power(u, i), power(r, j));
}

MultiPoly combine(const BasisSpec& spec, std::span<const Rational> coeffs) {
  if (coeffs.size() != spec.dimension()) throw std::invalid_argument("combine: coefficient count mismatch");
  MultiPoly P(weight_variables());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) P += scale(basis_element(spec, k), coeffs[k]);
  return P;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::kLowLow:
      return "LOW-LOW";
    case Region::kLowHigh:
      return "LOW-HIGH";
    case Region::kHighLow:
      return "HIGH-LOW";
  }
  return "?";
}

bool RegionPiece::contains(const Rational& s1, const Rational& s2) const {
  const std::map<std::string, Rational> at{{"s1", s1}, {"s2", s2}};
  if (s1 < twinsieve::eval(s1_lower, at) || s1 > twinsieve::eval(s1_upper, at)) return false;
  return s2 >= twinsieve::eval(s2_lower, at) && s2 <= twinsieve::eval(s2_upper, at);
}

const RegionPiece& region_piece(Region r) {
  static const std::array<RegionPiece, 3> pieces = make_pieces();
  return pieces[static_cast<std::size_t>(r)];
}

Rational PiecewiseFunctional::eval(Region r, const Rational& s1, const Rational& s2) const {
  return twinsieve::eval(piece(r), {{"s1", s1}, {"s2", s2}});
}

PiecewiseFunctional q2_of(const MultiPoly& P) {
  const auto& v = integration_variables();
  const MultiPoly Ps = embed(P, "s1", "t2");
  const MultiPoly s2 = MultiPoly::variable(v, "s2");
  MultiPoly low = to_outer(integrate_definite(Ps, "t2", s2, lower_line(v, "s1")));
  MultiPoly high = to_outer(integrate_definite(Ps, "t2", s2, upper_line(v, "s1")));
  PiecewiseFunctional q;
  q.pieces.emplace(Region::kLowLow, low);
  q.pieces.emplace(Region::kLowHigh, std::move(low));
  q.pieces.emplace(Region::kHighLow, std::move(high));
  return q;
}

PiecewiseFunctional q1_of(const MultiPoly& P) {
  const auto& v = integration_variables();
  const MultiPoly Pt = embed(P, "t1", "t2");
  const MultiPoly s1 = MultiPoly::variable(v, "s1");
  const MultiPoly s2 = MultiPoly::variable(v, "s2");
  const MultiPoly brk = constant(v, kBreak);

  // Inner t2-integrals below the two boundary lines of T.
  const MultiPoly inner_low = integrate_definite(Pt, "t2", s2, lower_line(v, "t1"));
  const MultiPoly inner_high = integrate_definite(Pt, "t2", s2, upper_line(v, "t1"));

  MultiPoly ll = integrate_definite(inner_low, "t1", s1, brk) +
                 integrate_definite(inner_high, "t1", brk, lower_line(v, "s2"));
  // t1 runs up to eta(s2) = (3/2)(1 - s2) when s2 >= 3/5.
  MultiPoly lh = integrate_definite(inner_low, "t1", s1, upper_line(v, "s2"));
  MultiPoly hl = integrate_definite(inner_high, "t1", s1, lower_line(v, "s2"));

  PiecewiseFunctional q;
  q.pieces.emplace(Region::kLowLow, to_outer(ll));
  q.pieces.emplace(Region::kLowHigh, to_outer(lh));
  q.pieces.emplace(Region::kHighLow, to_outer(hl));
  return q;
}

Rational region_integral(Region r, const MultiPoly& integrand) {
  const RegionPiece& piece = region_piece(r);
  const MultiPoly f = integrand.with_variables(outer_variables());
  const MultiPoly inner = integrate_definite(f, "s2", piece.s2_lower, piece.s2_upper);
  const MultiPoly outer = integrate_definite(inner, "s1", piece.s1_lower, piece.s1_upper);
  if (outer.total_degree() != 0) throw std::logic_error("region_integral: non-constant result");
  return outer.coefficient({0, 0});
}

std::vector<Rational> region_moments(Region r, std::uint32_t max_p, std::uint32_t max_q) {
  const RegionPiece& piece = region_piece(r);
  const Rational a = piece.s1_lower.coefficient({0, 0});
  const Rational b = piece.s1_upper.coefficient({0, 0});
  const auto [lo0, lo1] = linear_coefficients(piece.s2_lower);
  const auto [hi0, hi1] = linear_coefficients(piece.s2_upper);

  const std::uint32_t max_pow = max_p + max_q + 2;
  std::vector<Rational> a_pow(max_pow + 1), b_pow(max_pow + 1);
  for (std::uint32_t e = 0; e <= max_pow; ++e) {
    a_pow[e] = rational_pow(a, e);
    b_pow[e] = rational_pow(b, e);
  }

  const std::size_t width = max_q + 1;
  std::vector<Rational> moments(static_cast<std::size_t>(max_p + 1) * width);
  for (std::uint32_t q = 0; q <= max_q; ++q) {
    // u(s1) = (hi^{q+1} - lo^{q+1}) / (q+1)
    auto hi = linear_power(hi0, hi1, q + 1);
    const auto lo = linear_power(lo0, lo1, q + 1);
    for (std::size_t j = 0; j < hi.size(); ++j) hi[j] = (hi[j] - lo[j]) / Rational(q + 1);
    for (std::uint32_t p = 0; p <= max_p; ++p) {
      Rational m(0);
      for (std::uint32_t j = 0; j < hi.size(); ++j) {
        if (hi[j] == 0) continue;
        const std::uint32_t e = p + j + 1;
        m += hi[j] * (b_pow[e] - a_pow[e]) / Rational(e);
      }
      moments[p * width + q] = std::move(m);
    }
  }
  return moments;
}

Rational r1_value(const MultiPoly& P) {
  const PiecewiseFunctional q1 = q1_of(P);
  Rational total(0);
  for (Region r : kRegions) total += region_integral(r, mul(q1.piece(r), q1.piece(r)));
  return total;
}

Rational r2_value(const MultiPoly& P) {
  const PiecewiseFunctional q1 = q1_of(P);
  const PiecewiseFunctional q2 = q2_of(P);
  const MultiPoly w = s1_weight(Rational(3), Rational(-1));
  const MultiPoly four_s1 = s1_weight(Rational(4), Rational(0));
  Rational total(0);
  for (Region r : kRegions) {
    const MultiPoly& a = q1.piece(r);
    const MultiPoly& b = q2.piece(r);
    total += region_integral(r, mul(w, mul(b, b)) + mul(four_s1, mul(a, b)));
  }
  return total;
}

Rational r1_bilinear(const BasisSpec& spec, std::size_t k, std::size_t l) {
  const PiecewiseFunctional qk = q1_of(basis_element(spec, k));
  const PiecewiseFunctional ql = q1_of(basis_element(spec, l));
  Rational total(0);
  for (Region r : kRegions) total += region_integral(r, mul(qk.piece(r), ql.piece(r)));
  return total;
}

Rational r2_bilinear(const BasisSpec& spec, std::size_t k, std::size_t l) {
  const MultiPoly ek = basis_element(spec, k);
  const MultiPoly el = basis_element(spec, l);
  const PiecewiseFunctional q1k = q1_of(ek), q1l = q1_of(el);
  const PiecewiseFunctional q2k = q2_of(ek), q2l = q2_of(el);
  const MultiPoly w = s1_weight(Rational(3), Rational(-1));
  const MultiPoly two_s1 = s1_weight(Rational(2), Rational(0));
  Rational total(0);
  for (Region r : kRegions) {
    const MultiPoly cross = mul(q1k.piece(r), q2l.piece(r)) + mul(q1l.piece(r), q2k.piece(r));
    total += region_integral(r, mul(w, mul(q2k.piece(r), q2l.piece(r))) + mul(two_s1, cross));
  }
  return total;
}

}  // namespace twinsieve::functionals
