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
#include "ekernel/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ekernel {
namespace {

// First-order error of exp(f) when f carries error err.
double exp_error(double abs_value, double err) { return abs_value * std::expm1(err); }

Complex checked(Complex z, const char* what) {
  if (!is_finite(z)) throw Error(ErrorCode::kPoleCase, std::string("pole in ") + what);
  return z;
}

}  // namespace

const char* to_string(DiagonalCase c) noexcept {
  switch (c) {
    case DiagonalCase::kOffDiagonal: return "off_diagonal";
    case DiagonalCase::kDiagonalFinite: return "diagonal_finite";
    case DiagonalCase::kDiagonalDivergent: return "diagonal_divergent";
  }
  return "unknown";
}

KernelValue eval_E(const DensitySpec& g, Complex lambda, Complex w, double tol,
                   const QuadratureOptions& options) {
  require_finite(lambda, "lambda");
  require_finite(w, "w");
  KernelValue out;
  if (lambda != w) {
    const auto f = integrate_bi_singular(g, w, lambda, tol, {}, options);
    out.value = std::exp(f.value);
    out.error_estimate = exp_error(std::abs(out.value), f.error_estimate);
    out.converged = f.converged;
    return out;
  }
  const DiagonalMass m = integrate_diagonal(g, w, tol);
  if (const auto* fin = std::get_if<FiniteMass>(&m)) {
    out.diagonal_case = DiagonalCase::kDiagonalFinite;
    out.value = std::exp(-fin->value);
    out.error_estimate = exp_error(out.value.real(), fin->error_estimate);
    out.converged = fin->converged;
  } else {
    out.diagonal_case = DiagonalCase::kDiagonalDivergent;
    out.value = 0.0;
  }
  return out;
}

Complex eval_E_unit_disc(Complex lambda, Complex w) {
  require_finite(lambda, "lambda");
  require_finite(w, "w");
  const bool l_in = std::norm(lambda) < 1.0;
  const bool w_in = std::norm(w) < 1.0;
  if (lambda == w) return w_in ? Complex(0.0) : Complex(1.0 - 1.0 / std::norm(w));
  if (l_in && w_in) {
    const Complex den = 1.0 - std::conj(w) * lambda;
    if (den == 0.0) throw Error(ErrorCode::kPoleCase, "1 - conj(w) lambda vanishes");
    return checked(std::norm(lambda - w) / den, "interior case");
  }
  if (l_in) return checked(std::conj((w - lambda) / w), "mixed case");
  // lambda outside, w inside: Hermitian reflection of the mixed case.
  if (w_in) return checked((lambda - w) / lambda, "mixed case");
  return checked(1.0 - 1.0 / (std::conj(w) * lambda), "exterior case");
}

Complex eval_E_disc(Complex center, double radius, Complex lambda, Complex w) {
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "disc radius must be positive");
  return eval_E_unit_disc((lambda - center) / radius, (w - center) / radius);
}

Complex eval_E_signed_discs(const DensitySpec& g, Complex lambda, Complex w) {
  if (lambda == w) {
    throw Error(ErrorCode::kInvalidPoint, "signed-disc factorization excludes the diagonal");
  }
  if (!is_disc_only(g)) {
    throw Error(ErrorCode::kInvalidArgument, "signed-disc factorization needs disc terms only");
  }
  Complex prod = 1.0;
  for (const Term& t : g.terms) {
    if (t.coeff == 0.0) continue;
    const auto& d = std::get<Disk>(t.region);
    const Complex f = eval_E_disc(d.center, d.radius, lambda, w);
    if (t.coeff == 1.0) {
      prod *= f;
    } else if (t.coeff == -1.0) {
      if (f == 0.0) throw Error(ErrorCode::kZeroDivisor, "hole factor vanishes");
      prod /= f;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "signed-disc coefficients must be -1, 0 or +1");
    }
  }
  return prod;
}

Disk MobiusDiscParams::alpha_disc(double alpha) const {
  return Disk{0.5 * (w + lambda + alpha * (lambda - w)), 0.5 * std::abs((lambda - w) * (1.0 - alpha))};
}

Disk MobiusDiscParams::beta_disc(double beta) const {
  if (beta == 0.0) throw Error(ErrorCode::kInvalidArgument, "beta must be nonzero");
  return Disk{lambda + Complex(0.0, 1.0) * (lambda - w) * (0.5 * beta),
              std::abs(0.5 * beta * (lambda - w))};
}

double disc_real_integral(double alpha) { return std::log(2.0 / (1.0 + std::abs(alpha))); }

double disc_imag_integral(double beta) {
  if (beta == 0.0 || !std::isfinite(beta)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must be finite and nonzero");
  }
  return std::atan(0.5 * beta);
}

double tail_bound_real(double n) {
  if (!(n > 1.0) || !std::isfinite(n)) throw Error(ErrorCode::kInvalidArgument, "need N > 1");
  return std::log((2.0 * n + 2.0) / (2.0 * n + 1.0)) + std::log((2.0 * n - 1.0) / (2.0 * n - 2.0));
}

double tail_bound_imag(double n) {
  if (!(n > 1.0) || !std::isfinite(n)) throw Error(ErrorCode::kInvalidArgument, "need N > 1");
  return 2.0 * std::atan(0.5 / n);
}

PrelimBound prelim_bound_check(const DensitySpec& g, Complex lambda, Complex w, double tol) {
  if (lambda == w) throw Error(ErrorCode::kInvalidPoint, "prelim bound needs lambda != w");
  const KernelValue e = eval_E(g, lambda, w, tol);
  const auto outside = inverse_square_mass(g, w, std::abs(lambda - w),
                                           std::numeric_limits<double>::infinity(), tol);
  PrelimBound out;
  out.lhs = std::abs(e.value);
  out.rhs = 2.0 * std::exp(-0.5 * outside.value.real());
  const double slack = e.error_estimate + out.rhs * std::expm1(0.5 * outside.error_estimate);
  out.holds = out.lhs <= out.rhs + slack;
  return out;
}

}  // namespace ekernel
