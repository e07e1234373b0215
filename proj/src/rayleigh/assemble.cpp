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

// Exact assembly of the Hessians of R1 and R2.
//
// Every entry is an integral over a region of T of a product of two
// piecewise polynomials, so by linearity it is a bilinear combination of
// region moments m(p, q) = int int s1^p s2^q. Writing the functionals of
// basis element k as coefficient vectors x_k over the monomials s1^a s2^b,
//
//   int_region w(s1) F_k G_l = x_k^T M_w y_l,  M_w[(a,b),(c,d)] = int w s1^{a+c} s2^{b+d}.
//
// Each column is scaled to integers by its own common denominator and M_w by
// one common denominator, so the products run in mpz arithmetic and are
// converted back to a reduced rational once per entry.

#include <algorithm>
#include <atomic>
#include <thread>

#include "twinsieve/rayleigh.hpp"

namespace twinsieve::rayleigh {
namespace {

using functionals::BasisSpec;
using functionals::kRegions;
using functionals::PiecewiseFunctional;
using functionals::Region;

struct Monomials {
  std::uint32_t max_degree = 0;
  std::size_t count() const { return static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2; }
  // Graded layout: all monomials of total degree d are contiguous.
  std::size_t index(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t d = a + b;
    return static_cast<std::size_t>(d) * (d + 1) / 2 + b;
  }
};

// One functional piece scaled to integers: value = sum_i coeffs[i] m_i / den.
struct ScaledColumn {
  std::vector<std::pair<std::size_t, Integer>> coeffs;
  Integer den{1};
};

ScaledColumn scale_column(const MultiPoly& p, const Monomials& mon) {
  ScaledColumn col;
  for (const auto& [e, c] : p.terms()) mpz_lcm(col.den.get_mpz_t(), col.den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    Integer v = col.den / c.get_den() * c.get_num();
    col.coeffs.emplace_back(mon.index(e[0], e[1]), std::move(v));
  }
  std::sort(col.coeffs.begin(), col.coeffs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return col;
}

// Dense integer Gram matrix of the monomials under weight sum_j w[j] s1^j.
struct ScaledGram {
  std::size_t n = 0;
  std::vector<Integer> data;
  Integer den{1};
  const Integer& at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

ScaledGram weighted_gram(const std::vector<Rational>& moments, std::uint32_t width,
                         const std::vector<Rational>& weight, const Monomials& mon) {
  const std::uint32_t D = mon.max_degree;
  // Weighted moments for exponent sums up to 2D in each coordinate.
  const std::uint32_t span = 2 * D + 1;
  std::vector<Rational> wm(static_cast<std::size_t>(span) * span);
  for (std::uint32_t p = 0; p < span; ++p) {
    for (std::uint32_t q = 0; q < span; ++q) {
      Rational acc(0);
      for (std::uint32_t j = 0; j < weight.size(); ++j)
        if (weight[j] != 0) acc += weight[j] * moments[(p + j) * width + q];
      wm[p * span + q] = std::move(acc);
    }
  }
  ScaledGram g;
  for (const auto& m : wm) mpz_lcm(g.den.get_mpz_t(), g.den.get_mpz_t(), m.get_den_mpz_t());
  std::vector<Integer> wm_int(wm.size());
  for (std::size_t i = 0; i < wm.size(); ++i) wm_int[i] = g.den / wm[i].get_den() * wm[i].get_num();

  g.n = mon.count();
  g.data.resize(g.n * g.n);
  for (std::uint32_t a = 0; a <= D; ++a)
    for (std::uint32_t b = 0; a + b <= D; ++b)
      for (std::uint32_t c = 0; c <= D; ++c)
        for (std::uint32_t d = 0; c + d <= D; ++d)
          g.data[mon.index(a, b) * g.n + mon.index(c, d)] = wm_int[(a + c) * span + (b + d)];
  return g;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// out[k][l] = x_k^T G y_l for all k (and l >= k when `symmetric`).
std::vector<Rational> bilinear_block(const std::vector<ScaledColumn>& xs, const ScaledGram& g,
                                     const std::vector<ScaledColumn>& ys, bool symmetric,
                                     unsigned workers) {
  const std::size_t N = xs.size();
  std::vector<Rational> out(N * N);
  parallel_for(N, workers, [&](std::size_t l) {
    std::vector<Integer> h(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      for (const auto& [j, y] : ys[l].coeffs)
        mpz_addmul(h[i].get_mpz_t(), g.data[i * g.n + j].get_mpz_t(), y.get_mpz_t());
    }
    Integer acc;
    for (std::size_t k = 0; k < N; ++k) {
      if (symmetric && k > l) break;
      acc = 0;
      for (const auto& [i, x] : xs[k].coeffs) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), h[i].get_mpz_t());
      Rational v(acc, xs[k].den * ys[l].den * g.den);
      v.canonicalize();
      out[k * N + l] = std::move(v);
    }
  });
  if (symmetric)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t l = 0; l < k; ++l) out[k * N + l] = out[l * N + k];
  return out;
}

}  // namespace

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational RationalMatrix::quadratic_form(std::span<const Rational> a) const {
  if (a.size() != n_) throw std::invalid_argument("quadratic_form: dimension mismatch");
  Rational total(0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n_; ++j) row += (*this)(i, j) * a[j];
    total += a[i] * row;
  }
  return total;
}

Rational RationalMatrix::leading_minor(std::size_t k) const {
  if (k > n_) throw std::out_of_range("leading_minor: order exceeds matrix size");
  std::vector<Rational> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = (*this)(i, j);
  Rational det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && m[pivot * k + c] == 0) ++pivot;
    if (pivot == k) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m[pivot * k + j], m[c * k + j]);
      det = -det;
    }
    det *= m[c * k + c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m[r * k + c] == 0) continue;
      const Rational f = m[r * k + c] / m[c * k + c];
      for (std::size_t j = c; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
    }
  }
  return det;
}

FormPair assemble(const BasisSpec& spec, unsigned workers) {
  const std::size_t N = spec.dimension();

  std::vector<PiecewiseFunctional> q1(N), q2(N);
  parallel_for(N, workers, [&](std::size_t k) {
    const MultiPoly e = functionals::basis_element(spec, k);
    q1[k] = functionals::q1_of(e);
    q2[k] = functionals::q2_of(e);
  });

  Monomials mon;
  for (std::size_t k = 0; k < N; ++k)
    for (Region r : kRegions)
      mon.max_degree = std::max({mon.max_degree, q1[k].piece(r).total_degree(), q2[k].piece(r).total_degree()});

  // Weights as coefficient vectors in s1: 1, s1, s1 (3 - s1).
  const std::vector<Rational> w_one{Rational(1)};
  const std::vector<Rational> w_s1{Rational(0), Rational(1)};
  const std::vector<Rational> w_quad{Rational(0), Rational(3), Rational(-1)};

  RationalMatrix A(N), B(N);
  for (Region r : kRegions) {
    const std::uint32_t max_q = 2 * mon.max_degree;
    const std::uint32_t max_p = 2 * mon.max_degree + 2;
    const auto moments = functionals::region_moments(r, max_p, max_q);

    std::vector<ScaledColumn> c1(N), c2(N);
    for (std::size_t k = 0; k < N; ++k) {
      c1[k] = scale_column(q1[k].piece(r), mon);
      c2[k] = scale_column(q2[k].piece(r), mon);
    }

    const auto r1 = bilinear_block(c1, weighted_gram(moments, max_q + 1, w_one, mon), c1, true, workers);
    const auto quad = bilinear_block(c2, weighted_gram(moments, max_q + 1, w_quad, mon), c2, true, workers);
    const auto cross = bilinear_block(c1, weighted_gram(moments, max_q + 1, w_s1, mon), c2, false, workers);

    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t l = 0; l < N; ++l) {
        A(k, l) += 2 * r1[k * N + l];
        B(k, l) += 2 * (quad[k * N + l] + 2 * (cross[k * N + l] + cross[l * N + k]));
      }
    }
  }
  return FormPair{spec.degree, std::move(A), std::move(B)};
}

FormPair assemble_pairwise(const BasisSpec& spec) {
  const std::size_t N = spec.dimension();
  RationalMatrix A(N), B(N);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t l = k; l < N; ++l) {
      A(k, l) = 2 * functionals::r1_bilinear(spec, k, l);
      B(k, l) = 2 * functionals::r2_bilinear(spec, k, l);
      A(l, k) = A(k, l);
      B(l, k) = B(k, l);
    }
  }
  return FormPair{spec.degree, std::move(A), std::move(B)};
}

}  // namespace twinsieve::rayleigh
