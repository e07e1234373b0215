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
#include <numeric>

#include "twinsieve/arith.hpp"
#include "twinsieve/functionals.hpp"

namespace twinsieve::arith {
namespace {

void require_range(const ArithTables& tables, std::uint64_t hi, const char* who) {
  if (hi > tables.limit())
    throw std::out_of_range(std::string(who) + ": range end " + std::to_string(hi) + " exceeds table limit " +
                            std::to_string(tables.limit()));
}

void require_modulus(std::uint64_t m, const char* who) {
  if (m == 0) throw std::invalid_argument(std::string(who) + ": modulus must be at least 1");
  if (!is_squarefree(m)) throw std::invalid_argument(std::string(who) + ": modulus must be squarefree");
}

void require_unit(std::uint64_t a, std::uint64_t m, const char* who) {
  if (std::gcd(a % m, m) != 1) throw std::invalid_argument(std::string(who) + ": (a, m) must be 1");
}

// First n >= 1 with n = a (mod m).
std::uint64_t first_in_class(std::uint64_t a, std::uint64_t m) {
  const std::uint64_t r = a % m;
  return r == 0 ? m : r;
}

// 2 sum_{p | m} log p / (p - 1)
double prime_log_correction(std::uint64_t m) {
  double s = 0.0;
  for (const auto& pp : factor_small(m)) s += std::log(static_cast<double>(pp.p)) / static_cast<double>(pp.p - 1);
  return 2.0 * s;
}

SumComparison finish(SumComparison c) {
  c.abs_error = std::abs(c.empirical - c.predicted);
  c.normalized_error = c.abs_error / c.envelope;
  return c;
}

double u(std::uint64_t v) { return static_cast<double>(v); }

}  // namespace

double dirichlet_constant() { return 2.0 * kEulerGamma - 1.0; }

std::uint64_t tau_sum_ap(const ArithTables& tables, std::uint64_t m, std::uint64_t a, std::uint64_t x) {
  if (m == 0) throw std::invalid_argument("tau_sum_ap: modulus must be at least 1");
  require_range(tables, x, "tau_sum_ap");
  std::uint64_t total = 0;
  for (std::uint64_t n = first_in_class(a, m); n <= x; n += m) total += tables.tau(n);
  return total;
}

std::uint64_t tau_sum_coprime(const ArithTables& tables, std::uint64_t m, std::uint64_t x) {
  if (m == 0) throw std::invalid_argument("tau_sum_coprime: modulus must be at least 1");
  require_range(tables, x, "tau_sum_coprime");
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= x; ++n)
    if (std::gcd(n, m) == 1) total += tables.tau(n);
  return total;
}

SumComparison divisor_sum_ap(std::uint64_t m, std::uint64_t a, std::uint64_t x, const ArithTables& tables) {
  require_modulus(m, "divisor_sum_ap");
  require_unit(a, m, "divisor_sum_ap");
  if (x < 1) throw std::invalid_argument("divisor_sum_ap: x must be positive");
  SumComparison c;
  c.sum = "divisor_ap";
  c.parameters = {{"m", u(m)}, {"a", u(a % m)}, {"x", u(x)}};
  c.empirical = u(tau_sum_ap(tables, m, a, x));
  const double X = u(x);
  c.predicted = X * u(totient_of(m)) / (u(m) * u(m)) * (std::log(X) + dirichlet_constant() + prime_log_correction(m));
  c.envelope = std::pow(X, 0.55) / std::pow(u(m), 0.25);
  return finish(c);
}

SumComparison coprime_divisor_sum(std::uint64_t m, std::uint64_t x, const ArithTables& tables) {
  require_modulus(m, "coprime_divisor_sum");
  if (x < 1) throw std::invalid_argument("coprime_divisor_sum: x must be positive");
  SumComparison c;
  c.sum = "coprime_divisor";
  c.parameters = {{"m", u(m)}, {"x", u(x)}};
  c.empirical = u(tau_sum_coprime(tables, m, x));
  const double X = u(x);
  const double phi = u(totient_of(m));
  c.predicted = X * phi * phi / (u(m) * u(m)) * (std::log(X) + dirichlet_constant() + prime_log_correction(m));
  double sigma = 1.0;  // sigma_{-1/2}(m) = prod_{p | m} (1 + p^{-1/2})
  for (const auto& pp : factor_small(m)) sigma *= 1.0 + 1.0 / std::sqrt(u(pp.p));
  c.envelope = std::sqrt(X) * sigma * sigma;
  return finish(c);
}

std::uint64_t two_omega_sum_range(const ArithTables& tables, std::uint64_t m, std::uint64_t a, std::uint64_t lo,
                                  std::uint64_t hi) {
  if (m == 0) throw std::invalid_argument("two_omega_sum_range: modulus must be at least 1");
  if (hi <= lo) return 0;
  require_range(tables, hi, "two_omega_sum_range");
  // First n > lo in the class.
  const std::uint64_t r = a % m;
  std::uint64_t n = lo - lo % m + r;
  if (n <= lo) n += m;
  std::uint64_t total = 0;
  for (; n <= hi; n += m) total += std::uint64_t{1} << tables.big_omega(n);
  return total;
}

TwoOmegaConstants two_omega_constants(std::uint64_t m, std::uint64_t euler_cutoff) {
  require_modulus(m, "two_omega_constants");
  if (m % 2 != 0) throw std::invalid_argument("two_omega_constants: modulus must be even");
  TwoOmegaConstants k;
  k.cutoff = euler_cutoff;
  long double c_m = 1.0L, c0 = 0.0L;
  for (const std::uint32_t p : primes_up_to(euler_cutoff)) {
    if (p == 2) continue;
    const long double lp = p;
    c0 += std::log(lp) / ((lp - 1) * (lp - 2));
    if (m % p != 0) c_m *= (lp - 1) * (lp - 1) / (lp * (lp - 2));
  }
  k.c_m = static_cast<double>(c_m);
  k.c0 = static_cast<double>(2 * c0);
  k.c_full = dirichlet_constant() + 2.0 * std::log(2.0) - k.c0;
  k.c_dyadic = k.c_full + 2.0 * std::log(2.0);
  return k;
}

double two_omega_main_term(std::uint64_t m, double x, const TwoOmegaConstants& k, bool dyadic) {
  double corr = 0.0;
  for (const auto& pp : factor_small(m))
    if (pp.p > 2) corr += std::log(u(pp.p)) / u(pp.p - 2);
  const double c = dyadic ? k.c_dyadic : k.c_full;
  return x * u(totient_of(m)) / (u(m) * u(m)) * k.c_m * (std::log(x) + c + 2.0 * corr);
}

SumComparison two_omega_sum_ap(std::uint64_t m, std::uint64_t a, std::uint64_t x, const ArithTables& tables,
                               std::uint64_t euler_cutoff) {
  require_modulus(m, "two_omega_sum_ap");
  if (m % 2 != 0) throw std::invalid_argument("two_omega_sum_ap: modulus must be even");
  require_unit(a, m, "two_omega_sum_ap");
  if (x < 1) throw std::invalid_argument("two_omega_sum_ap: x must be positive");
  const TwoOmegaConstants k = two_omega_constants(m, euler_cutoff);
  SumComparison c;
  c.sum = "two_omega_ap";
  c.parameters = {{"m", u(m)}, {"a", u(a % m)}, {"x", u(x)}, {"euler_cutoff", u(euler_cutoff)}};
  c.empirical = u(two_omega_sum_range(tables, m, a, x, 2 * x));
  c.predicted = two_omega_main_term(m, u(x), k, true);
  c.envelope = std::pow(u(x), 0.55) / std::pow(u(m), 0.25);
  return finish(c);
}

MertensReport mertens_check(std::span<const std::uint64_t> grid) {
  MertensReport rep;
  if (grid.empty()) return rep;
  for (const std::uint64_t x : grid)
    if (x < 2) throw std::invalid_argument("mertens_check: x must be at least 2");
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return grid[i] < grid[j]; });

  const auto primes = primes_up_to(grid[order.back()]);
  rep.rows.resize(grid.size());
  long double acc = 0.0L;
  std::size_t next = 0;
  for (const std::size_t idx : order) {
    const std::uint64_t x = grid[idx];
    for (; next < primes.size() && primes[next] <= x; ++next) {
      const long double p = primes[next];
      acc += std::log(p) / p;
    }
    MertensRow row;
    row.x = x;
    row.sum = static_cast<double>(acc);
    row.difference = static_cast<double>(acc - std::log(static_cast<long double>(x)));
    rep.rows[idx] = row;
  }
  for (const auto& row : rep.rows)
    rep.within_bounds = rep.within_bounds && row.difference >= rep.lower && row.difference <= rep.upper;
  return rep;
}

MertensRow mertens_row(std::uint64_t x) {
  const std::uint64_t g[1] = {x};
  return mertens_check(g).rows.front();
}

SumComparison omega_k_partial_sum(const MultiplicativeFunctionSpec& f, std::uint32_t k, std::uint64_t d,
                                  std::uint64_t m, std::uint64_t x, const ArithTables& tables,
                                  std::uint64_t euler_cutoff) {
  if (!f.squarefree_only) throw std::invalid_argument("omega_k_partial_sum: f must be supported on squarefree n");
  if (k == 0) throw std::invalid_argument("omega_k_partial_sum: k must be positive");
  if (d == 0 || m == 0) throw std::invalid_argument("omega_k_partial_sum: d and m must be positive");
  if (std::gcd(d, m) != 1) throw std::invalid_argument("omega_k_partial_sum: (d, m) must be 1");
  if (x < 2) throw std::invalid_argument("omega_k_partial_sum: x must be at least 2");
  require_range(tables, x, "omega_k_partial_sum");

  SumComparison c;
  c.sum = "omega_k:" + f.name;
  c.parameters = {{"k", u(k)}, {"d", u(d)}, {"m", u(m)}, {"x", u(x)}, {"euler_cutoff", u(euler_cutoff)}};
  const double X = u(x);
  const double L = std::log(X);
  c.envelope = std::pow(L, static_cast<double>(k) - 1.0);

  if (d > x) {
    c.empirical = 0.0;
    c.predicted = 0.0;
    return finish(c);
  }

  // F(n) for n <= x coprime to m, built multiplicatively along spf chains.
  std::vector<double> fv(static_cast<std::size_t>(x) + 1, 0.0);
  fv[1] = 1.0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const std::uint32_t p = tables.spf(n);
    const std::uint64_t r = n / p;
    if (m % p == 0 || r % p == 0) continue;
    if (r == 1) {
      fv[n] = f.at_prime(p).get_d();
    } else {
      fv[n] = fv[r] * fv[p];
    }
  }
  long double acc = 0.0L;
  for (std::uint64_t n = d; n <= x; n += d) acc += fv[n];
  c.empirical = static_cast<double>(acc);

  // f(d) / fbar(d) with fbar = f * 1, so fbar(p) = 1 + f(p).
  Rational ratio(1);
  for (const auto& pp : factor_small(d)) {
    if (pp.e > 1) {
      ratio = 0;
      break;
    }
    const Rational fp = f.at_prime(pp.p);
    ratio *= fp / (1 + fp);
  }

  long double cmf = 1.0L;
  for (const std::uint32_t p : primes_up_to(euler_cutoff)) {
    if (m % p == 0) continue;
    const long double fp = f.at_prime(p).get_d();
    cmf *= std::pow(1.0L - 1.0L / p, static_cast<long double>(k)) * (1.0L + fp);
  }

  const double base = u(totient_of(m)) * L / u(m);
  const double tail = 1.0 - std::log(u(d)) / L;
  c.predicted = ratio.get_d() * std::pow(base, k) * static_cast<double>(cmf) / std::tgamma(k + 1.0) * std::pow(tail, k);
  return finish(c);
}

bool support_size_ok(std::uint64_t d1, std::uint64_t d2, std::uint64_t z) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("support_size_ok: arguments must be positive");
  constexpr std::uint64_t kMaxZ = std::uint64_t{1} << 25;
  if (z > kMaxZ) throw std::out_of_range("support_size_ok: z too large for exact comparison");
  if (d1 > z || d2 > z) return false;
  using u128 = unsigned __int128;
  const u128 a = d1, b = d2, zz = z;
  const u128 z3 = zz * zz * zz;
  return a * a * b * b * b <= z3 && a * a * a * b * b <= z3;
}

bool support_size_ok_eta(std::uint64_t d1, std::uint64_t d2, std::uint64_t z) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("support_size_ok_eta: arguments must be positive");
  if (z < 2) throw std::invalid_argument("support_size_ok_eta: z must be at least 2");
  const double lz = std::log(u(z));
  const double s = std::log(u(d2)) / lz;
  // Beyond s = 1 the bound z^eta drops below 1, which no d1 >= 1 satisfies.
  if (s > 1.0 + 1e-12) return false;
  const double eta = functionals::eta(std::clamp(s, 0.0, 1.0));
  return std::log(u(d1)) <= eta * lz + 1e-12 * lz;
}

}  // namespace twinsieve::arith
