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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "twinsieve/arith.hpp"

namespace twinsieve::arith {
namespace {

std::uint64_t residue(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = a % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

// Inverse of every unit mod m, 0 for non-units.
std::vector<std::uint64_t> unit_inverses(std::uint64_t m) {
  std::vector<std::uint64_t> inv(m, 0);
  if (m == 1) {
    inv[0] = 0;
    return inv;
  }
  for (std::uint64_t h = 1; h < m; ++h) {
    if (inv[h] != 0 || std::gcd(h, m) != 1) continue;
    for (std::uint64_t k = 1; k < m; ++k) {
      if ((h * k) % m == 1) {
        inv[h] = k;
        inv[k] = h;
        break;
      }
    }
  }
  return inv;
}

// Sum of e(r/m) weighted by the integer multiplicity of each residue r.
// Multiplicities are exact, so S(a,b) and S(b,a) come out bit-identical.
KloostermanValue from_counts(const std::vector<std::uint64_t>& counts, std::uint64_t m) {
  double re = 0.0, im = 0.0;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (counts[r] == 0) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    re += static_cast<double>(counts[r]) * std::cos(t);
    im += static_cast<double>(counts[r]) * std::sin(t);
  }
  return {re, std::abs(im)};
}

KloostermanValue kloosterman_with(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                                  const std::vector<std::uint64_t>& inv, std::vector<std::uint64_t>& counts) {
  counts.assign(m, 0);
  if (m == 1) {
    counts[0] = 1;
  } else {
    for (std::uint64_t h = 1; h < m; ++h) {
      if (inv[h] == 0) continue;
      ++counts[(a * h + b * inv[h]) % m];
    }
  }
  return from_counts(counts, m);
}

}  // namespace

KloostermanValue kloosterman(std::int64_t a, std::int64_t b, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("kloosterman: modulus must be at least 1");
  const auto inv = unit_inverses(m);
  std::vector<std::uint64_t> counts;
  return kloosterman_with(residue(a, m), residue(b, m), m, inv, counts);
}

std::int64_t ramanujan_closed_form(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("ramanujan_closed_form: modulus must be at least 1");
  if (!is_squarefree(m)) throw std::invalid_argument("ramanujan_closed_form: modulus must be squarefree");
  const std::uint64_t g = std::gcd(residue(a, m), m);  // gcd(0, m) = m
  return static_cast<std::int64_t>(mobius_of(m)) * mobius_of(g) * static_cast<std::int64_t>(totient_of(g));
}

WeilReport weil_check(std::uint64_t m_max) {
  WeilReport rep;
  rep.m_max = m_max;
  std::vector<std::uint64_t> counts;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    if (!is_squarefree(m)) continue;
    ++rep.moduli;
    const auto inv = unit_inverses(m);
    const double scale = std::sqrt(static_cast<double>(m)) * static_cast<double>(tau_of(m));
    std::vector<double> row(m * m);
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = 0; b < m; ++b) {
        const KloostermanValue s = kloosterman_with(a, b, m, inv, counts);
        row[a * m + b] = s.value;
        const std::uint64_t g = std::gcd(std::gcd(a, b), m);
        const double ratio = std::abs(s.value) / (scale * std::sqrt(static_cast<double>(g)));
        ++rep.pairs;
        if (ratio > rep.max_ratio) {
          rep.max_ratio = ratio;
          rep.argmax_m = m;
          rep.argmax_a = static_cast<std::int64_t>(a);
          rep.argmax_b = static_cast<std::int64_t>(b);
        }
        if (ratio > 1.0 + kImagResidueTolerance) ++rep.violations;
        rep.max_imag_residue = std::max(rep.max_imag_residue, s.imag_residue);
      }
    }
    for (std::uint64_t a = 0; a < m; ++a)
      for (std::uint64_t b = a + 1; b < m; ++b)
        if (row[a * m + b] != row[b * m + a]) ++rep.symmetry_failures;
  }
  if (rep.violations > 0 || rep.symmetry_failures > 0 || rep.max_imag_residue > kImagResidueTolerance) {
    std::ostringstream os;
    os << "weil_check: " << rep.violations << " bound violations, " << rep.symmetry_failures
       << " symmetry failures, imaginary residue " << rep.max_imag_residue << " (worst m=" << rep.argmax_m
       << ", a=" << rep.argmax_a << ", b=" << rep.argmax_b << ")";
    throw InvariantViolation(os.str());
  }
  return rep;
}

RamanujanReport ramanujan_check(std::uint64_t m_max) {
  RamanujanReport rep;
  rep.m_max = m_max;
  std::vector<std::uint64_t> counts;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    if (!is_squarefree(m)) continue;
    const auto inv = unit_inverses(m);
    for (std::uint64_t a = 0; a < m; ++a) {
      const KloostermanValue s = kloosterman_with(a, 0, m, inv, counts);
      const auto expected = static_cast<double>(ramanujan_closed_form(static_cast<std::int64_t>(a), m));
      ++rep.checks;
      // The closed form is an integer; the trigonometric sum carries only
      // rounding noise.
      if (std::abs(s.value - expected) > kImagResidueTolerance || s.imag_residue > kImagResidueTolerance)
        ++rep.mismatches;
    }
  }
  if (rep.mismatches > 0) {
    std::ostringstream os;
    os << "ramanujan_check: " << rep.mismatches << " of " << rep.checks << " closed-form comparisons failed";
    throw InvariantViolation(os.str());
  }
  return rep;
}

}  // namespace twinsieve::arith
