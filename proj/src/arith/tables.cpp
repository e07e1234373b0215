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

#include <cstdlib>
#include <limits>
#include <sstream>

#include "twinsieve/arith.hpp"

namespace twinsieve::arith {

std::size_t memory_budget_bytes() {
  constexpr std::size_t kDefaultMb = 2048;
  std::size_t mb = kDefaultMb;
  if (const char* env = std::getenv("TWINSIEVE_MEMORY_BUDGET_MB"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * 1024 * 1024;
}

ArithTables::ArithTables(std::uint64_t limit, std::size_t budget_bytes) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("ArithTables: limit must be at least 2");
  if (limit >= std::numeric_limits<std::uint32_t>::max())
    throw MemoryBudgetExceeded("ArithTables: limit exceeds the 32-bit table range");
  // One extra byte per entry for the transient spf-exponent array.
  const double need = static_cast<double>(limit + 1) * (kBytesPerEntry + 1);
  if (need > static_cast<double>(budget_bytes)) {
    std::ostringstream os;
    os << "ArithTables: limit " << limit << " needs about " << static_cast<std::uint64_t>(need / (1 << 20))
       << " MiB, budget is " << budget_bytes / (1 << 20) << " MiB (set TWINSIEVE_MEMORY_BUDGET_MB)";
    throw MemoryBudgetExceeded(os.str());
  }

  const std::size_t n = static_cast<std::size_t>(limit) + 1;
  spf_.assign(n, 0);
  omega_.assign(n, 0);
  tau_.assign(n, 0);
  mu_.assign(n, 0);
  phi_.assign(n, 0);
  std::vector<std::uint8_t> spf_exp(n, 0);
  std::vector<std::uint32_t> primes;

  spf_[1] = 1;
  tau_[1] = 1;
  mu_[1] = 1;
  phi_[1] = 1;
  for (std::size_t i = 2; i < n; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      omega_[i] = 1;
      tau_[i] = 2;
      mu_[i] = -1;
      phi_[i] = static_cast<std::uint32_t>(i - 1);
      spf_exp[i] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      const std::uint64_t c = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || c >= n) break;
      spf_[c] = p;
      omega_[c] = static_cast<std::uint8_t>(omega_[i] + 1);
      if (p == spf_[i]) {
        const unsigned e = spf_exp[i];
        spf_exp[c] = static_cast<std::uint8_t>(e + 1);
        tau_[c] = static_cast<std::uint16_t>(tau_[i] / (e + 1) * (e + 2));
        mu_[c] = 0;
        phi_[c] = phi_[i] * p;
      } else {
        spf_exp[c] = 1;
        tau_[c] = static_cast<std::uint16_t>(tau_[i] * 2);
        mu_[c] = static_cast<std::int8_t>(-mu_[i]);
        phi_[c] = phi_[i] * (p - 1);
      }
    }
  }
}

std::vector<PrimePower> ArithTables::factorize(std::uint64_t n) const {
  check(n);
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

ArithTables build_tables(std::uint64_t limit) { return ArithTables(limit); }

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<PrimePower> factor_small(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_small: zero has no factorisation");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& pp : factor_small(n))
    if (pp.e > 1) return false;
  return true;
}

int mobius_of(std::uint64_t n) {
  int mu = 1;
  for (const auto& pp : factor_small(n)) {
    if (pp.e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t totient_of(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factor_small(n)) phi = phi / pp.p * (pp.p - 1);
  return phi;
}

std::uint64_t tau_of(std::uint64_t n) {
  std::uint64_t t = 1;
  for (const auto& pp : factor_small(n)) t *= pp.e + 1;
  return t;
}

}  // namespace twinsieve::arith
