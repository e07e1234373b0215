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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twinsieve/arith.hpp"

// Desk-scale evaluation of the two-dimensional sieve: the weights
// lambda_{d1,d2} generated by a symmetric polynomial P, and the sums
//
//   S1 = sum_{x < n <= 2x, n = v0 (W)} (sum_{d1 | n, d2 | n+h} lambda_{d1,d2})^2
//   S2 = same, each term weighted by 2^Omega(n) + 2^Omega(n+h).
//
// Everything here is double precision.
namespace twinsieve::sievesim {

struct SieveConfig {
  std::uint64_t x = 10000;
  std::uint64_t z = 0;  // 0: floor(x^(1/3 - z_epsilon))
  double z_epsilon = 0.02;
  std::uint64_t W = 6;
  std::uint64_t h = 2;
  std::uint64_t v0 = 5;
  double lambda = 14.0;
  std::uint32_t degree = 0;
  // Over the basis (x+y)^i (x^2+y^2)^j at index (degree+1) i + j.
  std::vector<double> coefficients{1.0};
  unsigned workers = 1;

  std::uint64_t resolved_z() const;
  // Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

// P(s1, s2) via u = s1 + s2 and v = s1^2 + s2^2, so P(s1, s2) and P(s2, s1)
// agree bit for bit.
double eval_polynomial(std::uint32_t degree, const std::vector<double>& coefficients, double s1, double s2);

class SupportSet {
 public:
  SupportSet() = default;
  // Pairs are sorted; duplicates are rejected.
  explicit SupportSet(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(std::uint64_t d1, std::uint64_t d2) const { return index_.count(key(d1, d2)) != 0; }
  std::optional<std::size_t> index_of(std::uint64_t d1, std::uint64_t d2) const;
  bool swap_closed() const;

 private:
  static std::uint64_t key(std::uint64_t d1, std::uint64_t d2) { return (d1 << 32) | d2; }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// All (d1, d2) with mu^2(d1 d2 W) = 1 and d1^2 d2^3, d1^3 d2^2 <= z^3.
SupportSet enumerate_support(const SieveConfig& cfg);

struct WeightTable {
  SupportSet support;
  std::vector<double> lambda;    // aligned with support.pairs()
  std::vector<double> d_values;  // mu(r1) mu(r2) P(log r1/log z, log r2/log z)
  SieveConfig config;

  // 0 off the support.
  double at(std::uint64_t d1, std::uint64_t d2) const;
  double max_abs() const;
};

// f(n) = n / 2^omega(n) on squarefree n.
double sieve_f(std::uint64_t n);

WeightTable build_weights(const SieveConfig& cfg, const SupportSet& support);

struct SieveSums {
  double s1 = 0.0;
  double s2 = 0.0;
  std::uint64_t terms = 0;  // n in the progression
};

// Fixed-size blocks of the progression are summed in order and the block
// totals reduced in block order, so results do not depend on cfg.workers.
inline constexpr std::uint64_t kBlockTerms = 4096;

// Requires 2x + h <= tables.limit(); throws std::out_of_range otherwise.
SieveSums evaluate_sums(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables);
double evaluate_s1(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables);
double evaluate_s2(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables);

// Squarefree divisors of n coprime to W and at most z, ascending.
std::vector<std::uint64_t> sieve_divisors(std::uint64_t n, std::uint64_t W, std::uint64_t z,
                                          const arith::ArithTables& tables);

struct Indicative {
  double B = 0.0;          // phi(W) log z / W
  double r1 = 0.0;         // R1(P)
  double r2 = 0.0;         // R2(P)
  double s1_ratio = 0.0;   // S1 / ((x/W) B^6 R1)
  double s2_ratio = 0.0;   // S2 / ((2x/W) B^6 R2)
};

struct MasterSumReport {
  SieveSums sums;
  double lambda = 0.0;
  double master = 0.0;                  // S1 - S2 / lambda
  std::optional<double> achieved_ratio;  // S2 / S1, absent when S1 = 0
  std::uint64_t witnesses = 0;  // n in the progression with 2^Omega(n) + 2^Omega(n+h) <= lambda
  std::optional<Indicative> indicative;
};

// With `indicative`, also compares S1, S2 with their asymptotic shapes;
// these ratios are far from 1 at any feasible x and only reported.
MasterSumReport master_sum(const SieveConfig& cfg, const WeightTable& weights, const arith::ArithTables& tables,
                           bool indicative = false);

struct WitnessReport {
  std::uint64_t x = 0;
  std::uint64_t h = 0;
  double lambda = 0.0;
  std::uint64_t count = 0;  // n in (x, 2x] with 2^Omega(n) + 2^Omega(n+h) <= lambda
  std::uint64_t min_value = 0;
  std::uint64_t first_witness = 0;
  // (value, count) for every attained value <= lambda, ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;

  std::uint64_t count_of(std::uint64_t value) const;
};

WitnessReport witness_scan(std::uint64_t x, std::uint64_t h, double lambda, const arith::ArithTables& tables);

}  // namespace twinsieve::sievesim
