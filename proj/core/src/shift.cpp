// Copyright 2026 The ekernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ekernel/shift.hpp"

#include <algorithm>
#include <cmath>

#include "ekernel/adaptive.hpp"
#include "ekernel/kernel.hpp"
#include "ekernel/quadrature.hpp"

namespace ekernel {

double CoeffVector::norm() const {
  std::vector<double> sq(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), sq.begin(),
                 [](Complex c) { return std::norm(c); });
  return std::sqrt(pairwise_sum(sq));
}

ShiftResolvent resolvent_coeffs(Complex lambda, int n) {
  require_finite(lambda, "lambda");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "truncation must be at least 2");
  ShiftResolvent r;
  r.lambda = lambda;
  r.vector.coeffs.assign(static_cast<std::size_t>(n), Complex(0.0));
  auto& c = r.vector.coeffs;
  if (std::norm(lambda) >= 1.0) {
    r.regime = ShiftRegime::kOutside;
    c[0] = -1.0 / std::conj(lambda);
    return r;
  }
  // (z - lambda) sum_k (conj(lambda) z)^k
  r.regime = ShiftRegime::kInside;
  const Complex cl = std::conj(lambda);
  c[0] = -lambda;
  Complex p = 1.0 - std::norm(lambda);
  for (std::size_t k = 1; k < c.size(); ++k) {
    c[k] = p;
    p *= cl;
  }
  return r;
}

Complex h2_inner(const CoeffVector& a, const CoeffVector& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<Complex> terms(n);
  for (std::size_t k = 0; k < n; ++k) terms[k] = a.coeffs[k] * std::conj(b.coeffs[k]);
  return pairwise_sum(terms);
}

InnerProduct h2_inner(const ShiftResolvent& a, const ShiftResolvent& b) {
  InnerProduct out{h2_inner(a.vector, b.vector), 0.0};
  if (a.regime == ShiftRegime::kInside && b.regime == ShiftRegime::kInside) {
    // Remainder sum_{k >= n} (1-|a|^2)(1-|b|^2) (conj(a) b)^{k-1}.
    const double rho = std::abs(a.lambda) * std::abs(b.lambda);
    const std::size_t n = std::min(a.vector.truncation(), b.vector.truncation());
    out.tail_bound = (1.0 - std::norm(a.lambda)) * (1.0 - std::norm(b.lambda)) *
                     std::pow(rho, static_cast<double>(n) - 1.0) / (1.0 - rho);
  }
  return out;
}

double check_shift_identity(Complex lambda, Complex w, int n, double tol) {
  const auto rw = resolvent_coeffs(w, n);
  const auto rl = resolvent_coeffs(lambda, n);
  const InnerProduct ip = h2_inner(rw, rl);
  if (ip.tail_bound > tol) {
    throw Error(ErrorCode::kTailTooLarge, "truncation tail exceeds the tolerance");
  }
  return std::abs(1.0 - ip.value - eval_E_unit_disc(lambda, w));
}

MobiusTransfer check_mobius_transfer(double alpha, Complex lambda, Complex w, double tol,
                                     int n) {
  if (!(alpha < 1.0)) throw Error(ErrorCode::kInvalidArgument, "alpha must be below 1");
  if (lambda == w) throw Error(ErrorCode::kInvalidPoint, "need lambda != w");
  MobiusTransfer out;
  out.alpha = alpha;
  out.s_alpha = (1.0 + alpha) / (alpha - 1.0);
  const Disk d = MobiusDiscParams{lambda, w}.alpha_disc(alpha);
  const auto f = integrate_bi_singular(disc_density(d.center, d.radius), w, lambda, tol);
  out.quadrature = std::exp(f.value);
  out.error_estimate = std::abs(out.quadrature) * std::expm1(f.error_estimate);
  out.shift_value = 1.0 - h2_inner(resolvent_coeffs(out.s_alpha, n),
                                   resolvent_coeffs(1.0, n)).value;
  out.residual = std::abs(out.quadrature - out.shift_value);
  return out;
}

}  // namespace ekernel
