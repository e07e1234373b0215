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

#include <cmath>
#include <limits>
#include <sstream>

#include "twinsieve/rayleigh.hpp"

namespace twinsieve::rayleigh {
namespace {

using std::abs;
using std::sqrt;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

template <typename Real>
Real from_rational(const Rational& q);

template <>
double from_rational<double>(const Rational& q) {
  return q.get_d();
}

template <>
HighReal from_rational<HighReal>(const Rational& q) {
  HighReal x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

template <typename Real>
struct Dense {
  std::size_t n = 0;
  std::vector<Real> v;
  explicit Dense(std::size_t size) : n(size), v(size * size, Real(0)) {}
  Real& operator()(std::size_t i, std::size_t j) { return v[i * n + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

template <typename Real>
Dense<Real> convert(const RationalMatrix& m) {
  Dense<Real> d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d(i, j) = from_rational<Real>(m(i, j));
  return d;
}

template <typename Real>
Dense<Real> cholesky(const Dense<Real>& a) {
  const std::size_t n = a.n;
  Dense<Real> L(n);
  for (std::size_t j = 0; j < n; ++j) {
    Real diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= L(j, k) * L(j, k);
    if (!(diag > 0)) {
      std::ostringstream os;
      os << "Cholesky breakdown at pivot " << j << ": A is not numerically positive definite";
      throw NotPositiveDefinite(os.str());
    }
    L(j, j) = sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

// C = L^{-1} B L^{-T}, symmetrised.
template <typename Real>
Dense<Real> reduce(const Dense<Real>& L, const Dense<Real>& b) {
  const std::size_t n = L.n;
  // Y = L^{-1} B, column by column.
  Dense<Real> Y(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      Real s = b(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * Y(k, c);
      Y(i, c) = s / L(i, i);
    }
  }
  // C = L^{-1} Y^T, so C^T = Y L^{-T}.
  Dense<Real> C(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      Real s = Y(c, i);
      for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * C(k, c);
      C(i, c) = s / L(i, i);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Real m = (C(i, j) + C(j, i)) / 2;
      C(i, j) = m;
      C(j, i) = m;
    }
  return C;
}

// Cyclic Jacobi. On return `c` is diagonal (to working precision) and the
// columns of `vecs` are the eigenvectors.
template <typename Real>
unsigned jacobi(Dense<Real>& c, Dense<Real>& vecs, unsigned max_sweeps) {
  const std::size_t n = c.n;
  for (std::size_t i = 0; i < n; ++i) vecs(i, i) = Real(1);
  const Real eps = std::numeric_limits<Real>::epsilon();

  for (unsigned sweep = 1; sweep <= max_sweeps; ++sweep) {
    Real off(0), total(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Real sq = c(i, j) * c(i, j);
        total += sq;
        if (i != j) off += sq;
      }
    if (off <= eps * eps * total || off == 0) return sweep - 1;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = c(p, q);
        if (apq == 0) continue;
        const Real theta = (c(q, q) - c(p, p)) / (2 * apq);
        Real t = Real(1) / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real cs = Real(1) / sqrt(t * t + 1);
        const Real sn = t * cs;
        for (std::size_t k = 0; k < n; ++k) {
          const Real ckp = c(k, p), ckq = c(k, q);
          c(k, p) = cs * ckp - sn * ckq;
          c(k, q) = sn * ckp + cs * ckq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Real cpk = c(p, k), cqk = c(q, k);
          c(p, k) = cs * cpk - sn * cqk;
          c(q, k) = sn * cpk + cs * cqk;
        }
        c(p, q) = Real(0);
        c(q, p) = Real(0);
        for (std::size_t k = 0; k < n; ++k) {
          const Real vkp = vecs(k, p), vkq = vecs(k, q);
          vecs(k, p) = cs * vkp - sn * vkq;
          vecs(k, q) = sn * vkp + cs * vkq;
        }
      }
    }
  }
  std::ostringstream os;
  os << "Jacobi eigensolver did not converge within " << max_sweeps << " sweeps";
  throw NoConvergence(os.str());
}

template <typename Real>
HighReal to_high(const Real& x) {
  if constexpr (std::is_same_v<Real, HighReal>) {
    return x;
  } else {
    return HighReal(x);
  }
}

template <typename Real>
double to_double(const Real& x) {
  if constexpr (std::is_same_v<Real, HighReal>) {
    return x.template convert_to<double>();
  } else {
    return static_cast<double>(x);
  }
}

template <typename Real>
Optimum solve(const FormPair& fp, const SolverOptions& options) {
  const std::size_t n = fp.dimension();
  if (n == 0) throw std::invalid_argument("min_generalized_eigenpair: empty form pair");
  const Dense<Real> A = convert<Real>(fp.A);
  const Dense<Real> B = convert<Real>(fp.B);
  const Dense<Real> L = cholesky(A);
  Dense<Real> C = reduce(L, B);
  Dense<Real> vecs(n);
  const unsigned sweeps = jacobi(C, vecs, options.max_sweeps);

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (C(i, i) < C(best, best)) best = i;
  const Real mu = C(best, best);

  // v = L^{-T} y
  std::vector<Real> v(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Real s = vecs(ii, best);
    for (std::size_t k = ii + 1; k < n; ++k) s -= L(k, ii) * v[k];
    v[ii] = s / L(ii, ii);
  }
  Real norm(0);
  for (const auto& x : v) norm += x * x;
  norm = sqrt(norm);
  std::size_t first = 0;
  while (first < n && v[first] == 0) ++first;
  const Real sign = (first < n && v[first] < 0) ? Real(-1) : Real(1);
  for (auto& x : v) x = sign * x / norm;

  Real res2(0), av2(0);
  for (std::size_t i = 0; i < n; ++i) {
    Real av(0), bv(0);
    for (std::size_t j = 0; j < n; ++j) {
      av += A(i, j) * v[j];
      bv += B(i, j) * v[j];
    }
    const Real r = bv - mu * av;
    res2 += r * r;
    av2 += av * av;
  }

  Optimum opt;
  opt.min_eigenvalue = to_high(mu);
  opt.lambda_bound = 2 * opt.min_eigenvalue;
  opt.coefficients.reserve(n);
  for (const auto& x : v) opt.coefficients.push_back(to_double(x));
  opt.residual = to_double(Real(sqrt(res2 / av2)));
  opt.sweeps = sweeps;
  opt.precision = options.precision;
  if (!(opt.residual <= options.tol)) {
    std::ostringstream os;
    os << "eigen-residual " << opt.residual << " exceeds tolerance " << options.tol;
    throw NoConvergence(os.str());
  }
  return opt;
}

}  // namespace

const char* precision_name(Precision p) { return p == Precision::kDouble ? "double" : "extended"; }

Precision parse_precision(const std::string& name) {
  if (name == "double") return Precision::kDouble;
  if (name == "extended") return Precision::kExtended;
  throw std::invalid_argument("unknown precision '" + name + "' (expected double or extended)");
}

Optimum min_generalized_eigenpair(const FormPair& fp, const SolverOptions& options) {
  if (options.precision == Precision::kDouble) return solve<double>(fp, options);
  return solve<HighReal>(fp, options);
}

HighReal rayleigh_quotient_high(const FormPair& fp, std::span<const double> a) {
  const std::size_t n = fp.dimension();
  if (a.size() != n) throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
  bool nonzero = false;
  for (double x : a) nonzero = nonzero || x != 0.0;
  if (!nonzero) throw std::invalid_argument("rayleigh_quotient: zero coefficient vector");
  std::vector<HighReal> x(a.begin(), a.end());
  HighReal num(0), den(0);
  for (std::size_t i = 0; i < n; ++i) {
    HighReal ra(0), rb(0);
    for (std::size_t j = 0; j < n; ++j) {
      ra += from_rational<HighReal>(fp.A(i, j)) * x[j];
      rb += from_rational<HighReal>(fp.B(i, j)) * x[j];
    }
    den += x[i] * ra;
    num += x[i] * rb;
  }
  return num / den;
}

double rayleigh_quotient(const FormPair& fp, std::span<const double> a) {
  return rayleigh_quotient_high(fp, a).convert_to<double>();
}

std::string to_decimal(const HighReal& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

}  // namespace twinsieve::rayleigh
