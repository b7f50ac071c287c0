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
// The exponential kernel
//
//   E_g(lambda, w) = exp(-(1/pi) \int g(u) / (conj(u - w) (u - lambda)) da(u)),
//
// with the diagonal convention E(w, w) = 0 when (1/pi) \int g / |u - w|^2 is
// infinite and exp of minus that integral otherwise. Closed forms for discs,
// the special discs D_{lambda,alpha} and Delta_{lambda,beta}, and their tail
// masses live here as well.

#ifndef EKERNEL_KERNEL_HPP_
#define EKERNEL_KERNEL_HPP_

#include "ekernel/density.hpp"
#include "ekernel/quadrature.hpp"

namespace ekernel {

enum class DiagonalCase { kOffDiagonal, kDiagonalFinite, kDiagonalDivergent };

const char* to_string(DiagonalCase c) noexcept;

struct KernelValue {
  Complex value;
  DiagonalCase diagonal_case = DiagonalCase::kOffDiagonal;
  double error_estimate = 0.0;
  bool converged = true;  // false: tolerance not reached, value is best effort
};

/// E_g(lambda, w) by quadrature. `tol` bounds the error of the exponent.
KernelValue eval_E(const DensitySpec& g, Complex lambda, Complex w, double tol,
                   const QuadratureOptions& options = {});

/// Closed form for g = 1_D, D the open unit disc (|z| = 1 counts as outside).
/// Throws kPoleCase if a denominator vanishes.
Complex eval_E_unit_disc(Complex lambda, Complex w);

/// Closed form for the indicator of the open disc D(center, radius).
Complex eval_E_disc(Complex center, double radius, Complex lambda, Complex w);

/// Product of disc factors for a density made of disc terms with coefficients
/// +1 (multiply) or -1 (divide). lambda != w. kZeroDivisor if a hole factor
/// vanishes.
Complex eval_E_signed_discs(const DensitySpec& g, Complex lambda, Complex w);

/// The discs D_{lambda,alpha} (alpha real) and Delta_{lambda,beta} (beta != 0)
/// attached to a pair lambda != w.
struct MobiusDiscParams {
  Complex lambda;
  Complex w;

  Disk alpha_disc(double alpha) const;
  Disk beta_disc(double beta) const;
};

/// ln(2 / (1 + |alpha|)).
double disc_real_integral(double alpha);

/// arctan(beta / 2); beta != 0.
double disc_imag_integral(double beta);

/// Worst-case tail masses over |Re q| > N and |Im q| > N, q = (u-w)/(u-lambda).
double tail_bound_real(double n);
double tail_bound_imag(double n);

struct PrelimBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// |E(lambda, w)| against 2 exp(-(1/(2 pi)) \int_{|u-w| >= |lambda-w|} g/|u-w|^2).
PrelimBound prelim_bound_check(const DensitySpec& g, Complex lambda, Complex w, double tol);

}  // namespace ekernel

#endif  // EKERNEL_KERNEL_HPP_
