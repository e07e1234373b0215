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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "twinsieve/functionals.hpp"
#include "twinsieve/multipoly.hpp"

// Minimisation of R2(P) / R1(P) over the symmetric polynomial basis.
//
// R1 and R2 are quadratic forms in the basis coefficients a. assemble()
// produces their Hessians A and B exactly (a^T A a = 2 R1, a^T B a = 2 R2);
// the minimum of the ratio is the smallest eigenvalue of the pencil
// B v = mu A v, found by a Cholesky reduction of A followed by a Jacobi
// eigensolve in floating point.
namespace twinsieve::rayleigh {

// 100 decimal digits; the pencil at degree 7 is far too ill-conditioned for
// double precision.
using HighReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                               boost::multiprecision::et_off>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  // a^T M a, exact.
  Rational quadratic_form(std::span<const Rational> a) const;
  // Determinant of the leading k x k block, by fraction-free elimination.
  Rational leading_minor(std::size_t k) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

struct FormPair {
  std::uint32_t degree = 0;
  RationalMatrix A;  // Hessian of R1
  RationalMatrix B;  // Hessian of R2

  std::size_t dimension() const { return A.size(); }
};

// Exact Hessians of R1 and R2 over the degree-n basis. Entries are
// independent exact integrals; `workers` threads split the columns.
FormPair assemble(const functionals::BasisSpec& spec, unsigned workers = 1);

// Same matrices built entry by entry from functionals::r1_bilinear and
// r2_bilinear. Much slower; used to cross-check assemble() at small degree.
FormPair assemble_pairwise(const functionals::BasisSpec& spec);

enum class Precision { kDouble, kExtended };

const char* precision_name(Precision p);
Precision parse_precision(const std::string& name);

struct SolverOptions {
  double tol = 1e-10;
  Precision precision = Precision::kExtended;
  unsigned max_sweeps = 10000;
};

struct Optimum {
  HighReal min_eigenvalue;
  HighReal lambda_bound;  // 2 * min_eigenvalue
  // Unit Euclidean norm, first nonzero component positive.
  std::vector<double> coefficients;
  // ||B v - mu A v||_2 / ||A v||_2
  double residual = 0.0;
  unsigned sweeps = 0;
  Precision precision = Precision::kExtended;
};

class NotPositiveDefinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest generalized eigenpair of (B, A). Throws NotPositiveDefinite when
// the Cholesky factorisation of A breaks down, NoConvergence when the Jacobi
// iteration exceeds max_sweeps or the residual exceeds tol.
Optimum min_generalized_eigenpair(const FormPair& fp, const SolverOptions& options = {});

// (a^T B a) / (a^T A a) = R2(P_a) / R1(P_a). Throws std::invalid_argument
// on the zero vector.
double rayleigh_quotient(const FormPair& fp, std::span<const double> a);
HighReal rayleigh_quotient_high(const FormPair& fp, std::span<const double> a);

// Decimal string with `digits` significant digits.
std::string to_decimal(const HighReal& x, int digits = 30);

}  // namespace twinsieve::rayleigh
