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

#include "twinsieve/sievesim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "twinsieve/functionals.hpp"
#include "twinsieve/rayleigh.hpp"

namespace twinsieve::sievesim {
namespace {

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

void fail(const std::string& what) { throw std::invalid_argument("SieveConfig: " + what); }

// First n > x with n = v0 (mod W), and how many such n lie in (x, 2x].
std::pair<std::uint64_t, std::uint64_t> progression(const SieveConfig& cfg) {
  const std::uint64_t r = cfg.v0 % cfg.W;
  std::uint64_t first = cfg.x - cfg.x % cfg.W + r;
  if (first <= cfg.x) first += cfg.W;
  const std::uint64_t end = 2 * cfg.x;
  const std::uint64_t count = first > end ? 0 : (end - first) / cfg.W + 1;
  return {first, count};
}

template <typename Fn>
void for_each_block(std::uint64_t blocks, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, blocks)));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::uint64_t b = next++; b < blocks; b = next++) fn(b);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::uint64_t SieveConfig::resolved_z() const {
  if (z != 0) return z;
  return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(x), 1.0 / 3.0 - z_epsilon)));
}

void SieveConfig::validate() const {
  if (x < 1) fail("x must be positive");
  if (!(z_epsilon >= 0.0 && z_epsilon < 1.0 / 3.0)) fail("z_epsilon must lie in [0, 1/3)");
  if (W == 0 || W % 2 != 0 || !arith::is_squarefree(W)) fail("W must be even and squarefree");
  if (h == 0 || h % 2 != 0) fail("h must be even and positive");
  for (const auto& pp : arith::factor_small(h))
    if (W % pp.p != 0) fail("every prime factor of h must divide W");
  if (gcd_u(v0 % W, W) != 1 || gcd_u((v0 + h) % W, W) != 1) fail("v0 and v0 + h must be coprime to W");
  if (resolved_z() < 2) fail("z must be at least 2");
  if (!(lambda > 0.0)) fail("lambda must be positive");
  const std::size_t dim = static_cast<std::size_t>(degree + 1) * (degree + 1);
  if (coefficients.size() != dim)
    fail("expected " + std::to_string(dim) + " coefficients for degree " + std::to_string(degree) + ", got " +
         std::to_string(coefficients.size()));
}

double eval_polynomial(std::uint32_t degree, const std::vector<double>& coefficients, double s1, double s2) {
  const double u = s1 + s2;
  const double v = s1 * s1 + s2 * s2;
  // Horner in v for each power of u, then Horner in u.
  double total = 0.0;
  for (std::uint32_t i = degree + 1; i-- > 0;) {
    double inner = 0.0;
    for (std::uint32_t j = degree + 1; j-- > 0;) inner = inner * v + coefficients[(degree + 1) * i + j];
    total = total * u + inner;
  }
  return total;
}

SupportSet::SupportSet(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto [d1, d2] = pairs_[i];
    if (d1 == 0 || d2 == 0 || d1 >= (std::uint64_t{1} << 32) || d2 >= (std::uint64_t{1} << 32))
      throw std::invalid_argument("SupportSet: entries must lie in [1, 2^32)");
    if (!index_.emplace(key(d1, d2), i).second) throw std::invalid_argument("SupportSet: duplicate pair");
  }
}

std::optional<std::size_t> SupportSet::index_of(std::uint64_t d1, std::uint64_t d2) const {
  const auto it = index_.find(key(d1, d2));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SupportSet::swap_closed() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const auto& p) { return contains(p.second, p.first); });
}

SupportSet enumerate_support(const SieveConfig& cfg) {
  const std::uint64_t z = cfg.resolved_z();
  if (z < 2) throw std::invalid_argument("enumerate_support: z must be at least 2");
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t d = 1; d <= z; ++d)
    if (arith::is_squarefree(d) && gcd_u(d, cfg.W) == 1) candidates.push_back(d);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const std::uint64_t d1 : candidates) {
    for (const std::uint64_t d2 : candidates) {
      if (!arith::support_size_ok(d1, d2, z)) break;  // monotone in d2
      if (gcd_u(d1, d2) == 1) pairs.emplace_back(d1, d2);
    }
  }
  return SupportSet(std::move(pairs));
}

double sieve_f(std::uint64_t n) {
  double v = 1.0;
  for (const auto& pp : arith::factor_small(n)) {
    if (pp.e > 1) return 0.0;
    v *= static_cast<double>(pp.p) / 2.0;
  }
  return v;
}

double WeightTable::at(std::uint64_t d1, std::uint64_t d2) const {
  const auto i = support.index_of(d1, d2);
  return i ? lambda[*i] : 0.0;
}

double WeightTable::max_abs() const {
  double m = 0.0;
  for (const double v : lambda) m = std::max(m, std::abs(v));
  return m;
}

WeightTable build_weights(const SieveConfig& cfg, const SupportSet& support) {
  cfg.validate();
  const std::uint64_t z = cfg.resolved_z();
  const double log_z = std::log(static_cast<double>(z));

  std::uint64_t top = 1;
  for (const auto& [a, b] : support.pairs()) top = std::max({top, a, b});
  std::vector<double> f(top + 1), s(top + 1);
  std::vector<int> mu(top + 1);
  for (std::uint64_t l = 1; l <= top; ++l) {
    f[l] = sieve_f(l);
    s[l] = std::log(static_cast<double>(l)) / log_z;
    mu[l] = arith::mobius_of(l);
  }

  WeightTable table;
  table.support = support;
  table.config = cfg;
  table.lambda.assign(support.size(), 0.0);
  table.d_values.assign(support.size(), 0.0);

  const auto& pairs = support.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [r1, r2] = pairs[i];
    table.d_values[i] = mu[r1] * mu[r2] * eval_polynomial(cfg.degree, cfg.coefficients, s[r1], s[r2]);
  }

  // Pairs are sorted, so (d1, d2) with d1 <= d2 comes before its mirror;
  // the mirror copies the value so symmetry holds exactly. Without swap
  // closure every pair is summed on its own.
  const bool mirror_ok = support.swap_closed();
  std::vector<bool> done(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (done[i]) continue;
    const auto [d1, d2] = pairs[i];
    double sum = 0.0;
    for (std::uint64_t l1 = d1; l1 <= top; l1 += d1) {
      for (std::uint64_t l2 = d2; l2 <= top; l2 += d2) {
        if (!support.contains(l1, l2)) continue;
        sum += eval_polynomial(cfg.degree, cfg.coefficients, s[l1], s[l2]) / (f[l1] * f[l2]);
      }
    }
    const double value = mu[d1] * mu[d2] * f[d1] * f[d2] * sum;
    table.lambda[i] = value;
    done[i] = true;
    if (mirror_ok) {
      const std::size_t j = *support.index_of(d2, d1);
      table.lambda[j] = value;
      done[j] = true;
    }
  }
  return table;
}

std::vector<std::uint64_t> sieve_divisors(std::uint64_t n, std::uint64_t W, std::uint64_t z,
                                          const arith::ArithTables& tables) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& pp : tables.factorize(n)) {
    if (W % pp.p == 0 || pp.p > z) continue;
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i)
      if (divs[i] * pp.p <= z) divs.push_back(divs[i] * pp.p);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

SieveSums evaluate_sums(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables) {
  cfg.validate();
  if (2 * cfg.x + cfg.h > tables.limit())
    throw std::out_of_range("evaluate_sums: 2x + h = " + std::to_string(2 * cfg.x + cfg.h) +
                            " exceeds table limit " + std::to_string(tables.limit()));
  const std::uint64_t z = cfg.resolved_z();
  const auto [first, count] = progression(cfg);
  const std::uint64_t blocks = (count + kBlockTerms - 1) / kBlockTerms;
  std::vector<double> s1(blocks, 0.0), s2(blocks, 0.0);

  for_each_block(blocks, cfg.workers, [&](std::uint64_t b) {
    double a1 = 0.0, a2 = 0.0;
    const std::uint64_t stop = std::min(count, (b + 1) * kBlockTerms);
    for (std::uint64_t j = b * kBlockTerms; j < stop; ++j) {
      const std::uint64_t n = first + j * cfg.W;
      const auto div1 = sieve_divisors(n, cfg.W, z, tables);
      const auto div2 = sieve_divisors(n + cfg.h, cfg.W, z, tables);
      double inner = 0.0;
      for (const std::uint64_t d1 : div1)
        for (const std::uint64_t d2 : div2) inner += weights.at(d1, d2);
      const double sq = inner * inner;
      const double weight = static_cast<double>((std::uint64_t{1} << tables.big_omega(n)) +
                                                (std::uint64_t{1} << tables.big_omega(n + cfg.h)));
      a1 += sq;
      a2 += sq * weight;
    }
    s1[b] = a1;
    s2[b] = a2;
  });

  SieveSums out;
  out.terms = count;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    out.s1 += s1[b];
    out.s2 += s2[b];
  }
  return out;
}

double evaluate_s1(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables) {
  return evaluate_sums(cfg, weights, tables).s1;
}

double evaluate_s2(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables) {
  return evaluate_sums(cfg, weights, tables).s2;
}

MasterSumReport master_sum(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables,
                           bool indicative) {
  MasterSumReport rep;
  rep.sums = evaluate_sums(cfg, weights, tables);
  rep.lambda = cfg.lambda;
  rep.master = rep.sums.s1 - rep.sums.s2 / cfg.lambda;
  if (rep.sums.s1 != 0.0) rep.achieved_ratio = rep.sums.s2 / rep.sums.s1;

  const auto [first, count] = progression(cfg);
  for (std::uint64_t j = 0; j < count; ++j) {
    const std::uint64_t n = first + j * cfg.W;
    const double v = static_cast<double>((std::uint64_t{1} << tables.big_omega(n)) +
                                         (std::uint64_t{1} << tables.big_omega(n + cfg.h)));
    if (v <= cfg.lambda) ++rep.witnesses;
  }

  if (indicative) {
    Indicative ind;
    const double W = static_cast<double>(cfg.W);
    ind.B = static_cast<double>(arith::totient_of(cfg.W)) * std::log(static_cast<double>(cfg.resolved_z())) / W;
    const auto fp = rayleigh::assemble(functionals::BasisSpec{cfg.degree});
    std::vector<Rational> a(cfg.coefficients.begin(), cfg.coefficients.end());
    ind.r1 = Rational(fp.A.quadratic_form(a) / 2).get_d();
    ind.r2 = Rational(fp.B.quadratic_form(a) / 2).get_d();
    const double b6 = std::pow(ind.B, 6);
    const double x = static_cast<double>(cfg.x);
    ind.s1_ratio = rep.sums.s1 / (x / W * b6 * ind.r1);
    ind.s2_ratio = rep.sums.s2 / (2 * x / W * b6 * ind.r2);
    rep.indicative = ind;
  }
  return rep;
}

std::uint64_t WitnessReport::count_of(std::uint64_t value) const {
  for (const auto& [v, c] : histogram)
    if (v == value) return c;
  return 0;
}

WitnessReport witness_scan(std::uint64_t x, std::uint64_t h, double lambda, const arith::ArithTables& tables) {
  if (x < 1) throw std::invalid_argument("witness_scan: x must be positive");
  if (2 * x + h > tables.limit())
    throw std::out_of_range("witness_scan: 2x + h exceeds table limit " + std::to_string(tables.limit()));
  WitnessReport rep;
  rep.x = x;
  rep.h = h;
  rep.lambda = lambda;
  rep.min_value = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> hist;
  for (std::uint64_t n = x + 1; n <= 2 * x; ++n) {
    const std::uint64_t v = (std::uint64_t{1} << tables.big_omega(n)) + (std::uint64_t{1} << tables.big_omega(n + h));
    rep.min_value = std::min(rep.min_value, v);
    if (static_cast<double>(v) > lambda) continue;
    if (rep.count == 0) rep.first_witness = n;
    ++rep.count;
    if (hist.size() <= v) hist.resize(v + 1, 0);
    ++hist[v];
  }
  for (std::uint64_t v = 0; v < hist.size(); ++v)
    if (hist[v] != 0) rep.histogram.emplace_back(v, hist[v]);
  return rep;
}

}  // namespace twinsieve::sievesim
