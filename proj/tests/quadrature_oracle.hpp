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

// Numeric evaluation of R1 and R2 straight from the geometric description
//
//   Q1(s1,s2) = int_{s1}^{eta(s2)} int_{s2}^{eta(t1)} P dt2 dt1,
//   Q2(s1,s2) = int_{s2}^{eta(s1)} P(s1,t2) dt2,
//
// with no reference to the exact region decomposition. Each nested integral
// is split at the kink s = 3/5 of eta, so every piece has a polynomial
// integrand and the quadrature converges quickly.

#include <algorithm>
#include <functional>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

template <typename Real>
using Fn1 = std::function<Real(Real)>;

// Bisection depth is capped per level: with four nested levels, roundoff in
// the inner results otherwise triggers refinement that multiplies through.
template <typename Real>
struct GaussKronrod {
  unsigned max_depth = 2;
  Real operator()(const Fn1<Real>& f, Real a, Real b) const {
    return boost::math::quadrature::gauss_kronrod<Real, 31>::integrate(f, a, b, max_depth, Real(1e-14));
  }
};

template <typename Real, unsigned N>
struct GaussLegendre {
  Real operator()(const Fn1<Real>& f, Real a, Real b) const {
    return boost::math::quadrature::gauss<Real, N>::integrate(f, a, b);
  }
};

template <typename Real, typename Integrator>
class RegionT {
 public:
  RegionT(std::function<Real(Real, Real)> p, Integrator integrate) : p_(std::move(p)), integrate_(integrate) {}

  static Real eta(const Real& s) {
    const Real a = 1 - 2 * s / 3;
    const Real b = 3 * (1 - s) / 2;
    return a < b ? a : b;
  }

  Real q2(const Real& s1, const Real& s2) const {
    return integrate_([&](Real t2) { return p_(s1, t2); }, s2, eta(s1));
  }

  Real q1(const Real& s1, const Real& s2) const {
    return split([&](Real t1) { return integrate_([&](Real t2) { return p_(t1, t2); }, s2, eta(t1)); }, s1,
                 eta(s2));
  }

  // int_T F(s1, s2) ds2 ds1
  Real over_t(const std::function<Real(Real, Real)>& f) const {
    return split([&](Real s1) { return split([&](Real s2) { return f(s1, s2); }, Real(0), eta(s1)); }, Real(0),
                 Real(1));
  }

  Real r1() const {
    return over_t([&](Real s1, Real s2) {
      const Real q = q1(s1, s2);
      return q * q;
    });
  }

  Real r2() const {
    return over_t([&](Real s1, Real s2) {
      const Real a = q1(s1, s2);
      const Real b = q2(s1, s2);
      return s1 * (3 - s1) * b * b + 4 * s1 * a * b;
    });
  }

 private:
  Real split(const Fn1<Real>& f, const Real& a, const Real& b) const {
    const Real k = Real(3) / 5;
    if (a < k && k < b) return integrate_(f, a, k) + integrate_(f, k, b);
    return integrate_(f, a, b);
  }

  std::function<Real(Real, Real)> p_;
  Integrator integrate_;
};

}  // namespace oracle
