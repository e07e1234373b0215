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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twinsieve/multipoly.hpp"

// Support geometry and the integral functionals Q1, Q2, R1, R2.
//
// In logarithmic coordinates the support of the sieve weights is the
// pentagon
//
//   T = { (x1, x2) in [0,1]^2 : x1 + 2 x2 / 3 <= 1, 2 x1 / 3 + x2 <= 1 },
//
// whose upper boundary is x2 = eta(x1) with eta(s) = min(1 - 2s/3, 3(1-s)/2)
// and a corner at (3/5, 3/5). Every integral over T (or over the truncated
// region T_{s1,s2} = T intersected with x_i >= s_i) is split along the lines
// s = 3/5 so that each piece has polynomial limits and the result stays an
// exact polynomial.
namespace twinsieve::functionals {

// Fixed variable order of every symbolic integration in this module.
inline const std::vector<std::string>& integration_variables() {
  static const std::vector<std::string> vars{"t1", "t2", "s1", "s2"};
  return vars;
}

// Variables of the outer coordinates (s1, s2).
inline const std::vector<std::string>& outer_variables() {
  static const std::vector<std::string> vars{"s1", "s2"};
  return vars;
}

// Variables of a weight polynomial P(x, y).
inline const std::vector<std::string>& weight_variables() {
  static const std::vector<std::string> vars{"x", "y"};
  return vars;
}

// min{1 - 2s/3, 3(1-s)/2}; the first branch is active iff s <= 3/5.
Rational eta(const Rational& s);
double eta(double s);

// Index set of the symmetric basis (x+y)^i (x^2+y^2)^j, 0 <= i, j <= degree.
struct BasisSpec {
  std::uint32_t degree = 0;

  std::size_t dimension() const { return static_cast<std::size_t>(degree + 1) * (degree + 1); }
  std::size_t pos(std::uint32_t i, std::uint32_t j) const;
  std::pair<std::uint32_t, std::uint32_t> indices(std::size_t k) const;
};

// Expanded (x+y)^i (x^2+y^2)^j over weight_variables().
MultiPoly basis_element(const BasisSpec& spec, std::size_t k);

// Sum_k coeffs[k] * e_k.
MultiPoly combine(const BasisSpec& spec, std::span<const Rational> coeffs);

enum class Region {
  kLowLow,   // 0 <= s1 <= 3/5, 0 <= s2 <= 3/5
  kLowHigh,  // 0 <= s1 <= 3/5, 3/5 <= s2 <= 1 - 2 s1 / 3
  kHighLow,  // 3/5 <= s1 <= 1, 0 <= s2 <= 3 (1 - s1) / 2
};

inline constexpr std::array<Region, 3> kRegions{Region::kLowLow, Region::kLowHigh, Region::kHighLow};

const char* region_name(Region r);

// One piece of the partition of T. s1 runs between constants, s2 between
// polynomials in s1; all limits are over outer_variables().
struct RegionPiece {
  Region label;
  MultiPoly s1_lower;
  MultiPoly s1_upper;
  MultiPoly s2_lower;
  MultiPoly s2_upper;

  // Closed-region membership test for a rational point.
  bool contains(const Rational& s1, const Rational& s2) const;
};

const RegionPiece& region_piece(Region r);

// A functional stored as one polynomial in (s1, s2) per region of T.
struct PiecewiseFunctional {
  std::map<Region, MultiPoly> pieces;

  const MultiPoly& piece(Region r) const { return pieces.at(r); }
  Rational eval(Region r, const Rational& s1, const Rational& s2) const;
};

// Q2(s1,s2) = int_{s2}^{eta(s1)} P(s1, t2) dt2, split at s1 = 3/5. The
// LowLow and LowHigh pieces coincide.
PiecewiseFunctional q2_of(const MultiPoly& P);

// Q1(s1,s2) = integral of P(t1, t2) over T_{s1,s2}, one piece per region.
PiecewiseFunctional q1_of(const MultiPoly& P);

// Integral of an (s1, s2) polynomial over one region of T.
Rational region_integral(Region r, const MultiPoly& integrand);

// Exact table of int int_region s1^p s2^q, 0 <= p <= max_p, 0 <= q <= max_q,
// stored row-major as moments[p * (max_q + 1) + q].
std::vector<Rational> region_moments(Region r, std::uint32_t max_p, std::uint32_t max_q);

// R1(P) = int_T Q1^2 and R2(P) = int_T s1(3-s1) Q2^2 + 4 s1 Q1 Q2.
Rational r1_value(const MultiPoly& P);
Rational r2_value(const MultiPoly& P);

// Symmetric bilinear forms with R_i(sum a_k e_k) = sum a_k a_l B_i(e_k, e_l),
// evaluated directly from the piecewise functionals of the two elements.
Rational r1_bilinear(const BasisSpec& spec, std::size_t k, std::size_t l);
Rational r2_bilinear(const BasisSpec& spec, std::size_t k, std::size_t l);

}  // namespace twinsieve::functionals
