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
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twinsieve/multipoly.hpp"

// Sieved arithmetic functions, Kloosterman sums and the brute-force
// comparisons of divisor sums against their asymptotic main terms.
namespace twinsieve::arith {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr std::uint64_t kDefaultEulerCutoff = 1000000;

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked identity or bound failed; always indicates a bug.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bytes the tables may use: TWINSIEVE_MEMORY_BUDGET_MB when set, else 2 GiB.
std::size_t memory_budget_bytes();

struct PrimePower {
  std::uint64_t p;
  std::uint32_t e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Per-n tables of spf, Omega, tau, mu, phi for 1 <= n <= limit, built with a
// linear sieve. Immutable after construction.
class ArithTables {
 public:
  static constexpr std::size_t kBytesPerEntry = 13;

  explicit ArithTables(std::uint64_t limit, std::size_t budget_bytes = memory_budget_bytes());

  std::uint64_t limit() const { return limit_; }

  std::uint32_t spf(std::uint64_t n) const { return spf_[check(n)]; }
  std::uint32_t big_omega(std::uint64_t n) const { return omega_[check(n)]; }
  std::uint32_t tau(std::uint64_t n) const { return tau_[check(n)]; }
  int mobius(std::uint64_t n) const { return mu_[check(n)]; }
  std::uint64_t totient(std::uint64_t n) const { return phi_[check(n)]; }
  bool squarefree(std::uint64_t n) const { return mu_[check(n)] != 0; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[check(n)] == n; }

  // Ascending prime factorisation via repeated spf lookups.
  std::vector<PrimePower> factorize(std::uint64_t n) const;

 private:
  std::size_t check(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw std::out_of_range("ArithTables: argument outside [1, limit]");
    return static_cast<std::size_t>(n);
  }

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint16_t> tau_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> phi_;
};

ArithTables build_tables(std::uint64_t limit);

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Trial-division helpers for moduli, where building tables would be overkill.
std::vector<PrimePower> factor_small(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
int mobius_of(std::uint64_t n);
std::uint64_t totient_of(std::uint64_t n);
std::uint64_t tau_of(std::uint64_t n);

// A multiplicative function given by its values at primes. When
// squarefree_only is set the function vanishes off the squarefree integers.
struct MultiplicativeFunctionSpec {
  std::string name;
  std::function<Rational(std::uint64_t)> at_prime;
  bool squarefree_only = true;

  Rational eval(std::uint64_t n) const;
};

namespace functions {
MultiplicativeFunctionSpec sieve_f();       // f(p) = p / 2
MultiplicativeFunctionSpec sieve_g();       // g(p) = p(p-1)/(p-2), odd p only
MultiplicativeFunctionSpec sieve_f1();      // f = f1 * 1
MultiplicativeFunctionSpec sieve_g1();      // g = g1 * 1
MultiplicativeFunctionSpec sieve_h();       // 1 - 3/(p+2)
MultiplicativeFunctionSpec sieve_h1();      // 1 - 3/p + 2/p^2
MultiplicativeFunctionSpec sieve_h2();      // 1 - 2/p + 2/p^2
MultiplicativeFunctionSpec mu2_over_phi();  // mu^2 / phi
MultiplicativeFunctionSpec mu2_over_id();   // mu^2 / id
}  // namespace functions

const std::vector<MultiplicativeFunctionSpec>& standard_functions();
// Throws std::invalid_argument for an unknown name.
const MultiplicativeFunctionSpec& find_function(const std::string& name);

// One brute-force sum next to its predicted main term. normalized_error is
// abs_error / envelope, with the envelope named per sum.
struct SumComparison {
  std::string sum;
  std::vector<std::pair<std::string, double>> parameters;
  double empirical = 0.0;
  double predicted = 0.0;
  double abs_error = 0.0;
  double envelope = 1.0;
  double normalized_error = 0.0;

  double parameter(const std::string& key) const;
};

// --- Kloosterman and Ramanujan sums -------------------------------------

struct KloostermanValue {
  double value = 0.0;         // real part
  double imag_residue = 0.0;  // |imaginary part|, cancels exactly in theory
};

inline constexpr double kImagResidueTolerance = 1e-9;

// S(a, b; m) = sum over units h mod m of e((a h + b hbar) / m).
KloostermanValue kloosterman(std::int64_t a, std::int64_t b, std::uint64_t m);

// mu(m) mu((a,m)) phi((a,m)), the value of S(a, 0; m) for squarefree m.
std::int64_t ramanujan_closed_form(std::int64_t a, std::uint64_t m);

struct WeilReport {
  std::uint64_t m_max = 0;
  std::uint64_t moduli = 0;
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0.0;  // max |S| / (sqrt(m) tau(m) sqrt((a,b,m)))
  std::uint64_t argmax_m = 0;
  std::int64_t argmax_a = 0;
  std::int64_t argmax_b = 0;
  double max_imag_residue = 0.0;
  std::uint64_t symmetry_failures = 0;  // S(a,b,m) != S(b,a,m)
};

// Sweeps all squarefree m <= m_max and all residues a, b mod m. Throws
// InvariantViolation if the bound, the symmetry or the imaginary-part
// check fails anywhere.
WeilReport weil_check(std::uint64_t m_max);

struct RamanujanReport {
  std::uint64_t m_max = 0;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
};

// Compares S(a, 0; m) with ramanujan_closed_form for squarefree m <= m_max
// and all a mod m. Throws InvariantViolation on a mismatch.
RamanujanReport ramanujan_check(std::uint64_t m_max);

// --- Divisor sums --------------------------------------------------------

// 2 gamma - 1, the constant of the Dirichlet divisor problem.
double dirichlet_constant();

// D_{m,a}(x) = sum_{n <= x, n = a (m)} tau(n), exact.
std::uint64_t tau_sum_ap(const ArithTables& tables, std::uint64_t m, std::uint64_t a, std::uint64_t x);
// A_m(x) = sum_{n <= x, (n,m) = 1} tau(n), exact.
std::uint64_t tau_sum_coprime(const ArithTables& tables, std::uint64_t m, std::uint64_t x);

// D_{m,a}(x) against x phi(m)/m^2 (log x + c + 2 sum_{p|m} log p/(p-1));
// envelope x^0.55 / m^(1/4). Requires m squarefree and (a, m) = 1.
SumComparison divisor_sum_ap(std::uint64_t m, std::uint64_t a, std::uint64_t x, const ArithTables& tables);

// A_m(x) against x phi(m)^2/m^2 (log x + c + 2 sum_{p|m} log p/(p-1));
// envelope x^(1/2) sigma_{-1/2}(m)^2. Requires m squarefree.
SumComparison coprime_divisor_sum(std::uint64_t m, std::uint64_t x, const ArithTables& tables);

// sum_{lo < n <= hi, n = a (m)} 2^Omega(n), exact.
std::uint64_t two_omega_sum_range(const ArithTables& tables, std::uint64_t m, std::uint64_t a,
                                  std::uint64_t lo, std::uint64_t hi);

// Constants of the main term for sums of 2^Omega(n) over n = a (m), m even.
struct TwoOmegaConstants {
  double c_m = 0.0;       // prod_{p not | m} (p-1)^2 / (p(p-2)), truncated
  double c0 = 0.0;        // 2 sum_{p > 2} log p / ((p-1)(p-2)), truncated
  double c_full = 0.0;    // constant of the sum over n <= x
  double c_dyadic = 0.0;  // constant of the sum over x < n <= 2x
  std::uint64_t cutoff = 0;
};

TwoOmegaConstants two_omega_constants(std::uint64_t m, std::uint64_t euler_cutoff = kDefaultEulerCutoff);

// Main term x phi(m)/m^2 c(m) (log x + c + 2 sum_{p|m, p>2} log p/(p-2)),
// with c = c_full (dyadic = false) or c_dyadic (dyadic = true).
double two_omega_main_term(std::uint64_t m, double x, const TwoOmegaConstants& k, bool dyadic);

// sum_{x < n <= 2x, n = a (m)} 2^Omega(n) against the dyadic main term;
// envelope x^0.55 / m^(1/4). Requires m even squarefree, (a, m) = 1.
SumComparison two_omega_sum_ap(std::uint64_t m, std::uint64_t a, std::uint64_t x, const ArithTables& tables,
                               std::uint64_t euler_cutoff = kDefaultEulerCutoff);

// --- Mertens ---------------------------------------------------------------

struct MertensRow {
  std::uint64_t x = 0;
  double sum = 0.0;  // sum_{p <= x} log p / p
  double difference = 0.0;  // sum - log x
};

struct MertensReport {
  std::vector<MertensRow> rows;
  double lower = -2.0;
  double upper = 0.0;
  bool within_bounds = true;
};

MertensRow mertens_row(std::uint64_t x);
// One row per grid point; within_bounds when every difference lies in
// [lower, upper].
MertensReport mertens_check(std::span<const std::uint64_t> grid);

// --- Omega_k partial sums ---------------------------------------------------

// sum_{n <= x, d | n, (n, m) = 1} f(n) against
//   f(d)/fbar(d) (phi(m) log x / m)^k c(m,f)/k! (1 - log d / log x)^k,
// c(m, f) = prod_{p not | m} (1 - 1/p)^k (1 + f(p)) truncated at the cutoff.
// The envelope is (log x)^(k-1).
SumComparison omega_k_partial_sum(const MultiplicativeFunctionSpec& f, std::uint32_t k, std::uint64_t d,
                                  std::uint64_t m, std::uint64_t x, const ArithTables& tables,
                                  std::uint64_t euler_cutoff = kDefaultEulerCutoff);

// --- Support predicate ---------------------------------------------------

// max{d1^(2/3) d2, d1 d2^(2/3)} <= z, decided with exact integer powers.
bool support_size_ok(std::uint64_t d1, std::uint64_t d2, std::uint64_t z);

// d1 <= z^eta(log d2 / log z), evaluated in floating point.
bool support_size_ok_eta(std::uint64_t d1, std::uint64_t d2, std::uint64_t z);

}  // namespace twinsieve::arith
