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
// Truncated Hardy-space model of the unilateral shift on H^2 of the disc.
//
// For the shift U the vector U_lambda^{*-1} 1 is (z - lambda)/(1 - conj(lambda) z)
// when |lambda| < 1 and the constant -1/conj(lambda) when |lambda| >= 1, and
// 1 - <U_w^{*-1} 1, U_lambda^{*-1} 1> reproduces the unit-disc kernel
// E_D(lambda, w).

#ifndef EKERNEL_SHIFT_HPP_
#define EKERNEL_SHIFT_HPP_

#include <vector>

#include "ekernel/types.hpp"

namespace ekernel {

/// Taylor coefficients c_0..c_{N-1} at 0 of an H^2 element.
struct CoeffVector {
  std::vector<Complex> coeffs;

  std::size_t truncation() const { return coeffs.size(); }
  double norm() const;
};

enum class ShiftRegime { kInside, kOutside };

struct ShiftResolvent {
  Complex lambda;
  ShiftRegime regime = ShiftRegime::kInside;
  CoeffVector vector;
};

inline constexpr int kDefaultTruncation = 256;

/// Needs n >= 2. |lambda| = 1 uses the outside formula.
ShiftResolvent resolvent_coeffs(Complex lambda, int n = kDefaultTruncation);

struct InnerProduct {
  Complex value;
  double tail_bound = 0.0;  // bound on the truncated remainder (resolvents only)
};

/// sum a_n conj(b_n), shorter input zero-padded.
Complex h2_inner(const CoeffVector& a, const CoeffVector& b);

/// Inner product of two resolvents with the geometric tail bound.
InnerProduct h2_inner(const ShiftResolvent& a, const ShiftResolvent& b);

/// |1 - <r(w), r(lambda)> - E_D(lambda, w)|. Throws kTailTooLarge when the
/// truncation tail exceeds tol.
double check_shift_identity(Complex lambda, Complex w, int n, double tol);

struct MobiusTransfer {
  double alpha = 0.0;
  Complex s_alpha;       // (1 + alpha) / (alpha - 1)
  Complex quadrature;    // exp of the bi-singular integral over D_{lambda,alpha}
  Complex shift_value;   // 1 - <r(s_alpha), r(1)>
  double error_estimate = 0.0;
  double residual = 0.0;
};

/// Compares the disc integral over D_{lambda,alpha} with the shift model at
/// (s_alpha, 1). alpha < 1, lambda != w.
MobiusTransfer check_mobius_transfer(double alpha, Complex lambda, Complex w, double tol,
                                     int n = kDefaultTruncation);

}  // namespace ekernel

#endif  // EKERNEL_SHIFT_HPP_
