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
// Identities of the Cauchy transform hat{f}(lambda) = (1/pi) \int f(u) / (u - lambda) da(u)
// and the representation
//
//   E(lambda, w) = 1 - (1/pi) \int E(u, w) g(u) / (conj(u - w) (u - lambda)) da(u),
//
// each reported as a residual. Inner transforms are evaluated at the outer
// quadrature nodes (one nested level) with a per-call memo.

#ifndef EKERNEL_CAUCHY_HPP_
#define EKERNEL_CAUCHY_HPP_

#include <vector>

#include "ekernel/density.hpp"

namespace ekernel {

struct TransformSample {
  Complex point;
  Complex value;
  double error_estimate = 0.0;
};

struct IdentityCheck {
  double max_residual = 0.0;
  double error_budget = 0.0;  // summed quadrature error estimates
  std::vector<double> residuals;
};

/// hat{h} hat{k} - (hat{h} k)^ - (h hat{k})^ at each point. Coefficients of h
/// and k may be any bounded reals.
IdentityCheck check_product_identity(const DensitySpec& h, const DensitySpec& k,
                                     const std::vector<Complex>& points, double tol);

/// hat{h}^N - N (hat{h}^{N-1} h)^ at each point, 1 <= N <= 4. N = 1 is an exact zero.
IdentityCheck check_power_identity(const DensitySpec& h, int n,
                                   const std::vector<Complex>& points, double tol);

/// g together with the point w and C = -(1/pi) \int g(u) / conj(u - w) da(u).
struct H0Context {
  DensitySpec g;
  Complex w;
  Complex c;
};

H0Context make_h0_context(const DensitySpec& g, Complex w, double tol);

/// Residual of the binomial identity for h_w(u) = g(u) / conj(u - w):
///   hat{h}^N(lambda) = C^N / z^N + (N / z^N) (1/pi) \int (u-w)^N hat{h}(u)^{N-1} h(u) / (u - lambda) da,
/// with z = lambda - w. 1 <= N <= 3, lambda != w.
double check_h0_binomial(const H0Context& ctx, int n, Complex lambda, double tol);

enum class RepresentationRegime { kOutsideSupport, kFiniteDiagonal, kDensityPoint };

const char* to_string(RepresentationRegime r) noexcept;

struct RepresentationCheck {
  RepresentationRegime regime = RepresentationRegime::kFiniteDiagonal;
  double gamma = 0.0;  // density estimate (kDensityPoint only)
  IdentityCheck identity;
};

/// Residual of the representation at each lambda (lambda != w). The regime of
/// w is detected numerically; kRegimeUnverified when the diagonal integral
/// diverges and w is not a point of positive density.
RepresentationCheck check_representation(const DensitySpec& g, Complex w,
                                         const std::vector<Complex>& points, double tol,
                                         unsigned threads = 1);

struct DbarStencil {
  Complex dbar;       // centred-difference d-bar of hat{g} at the point
  double expected;    // -g(point)
  double error_bound; // quadrature contribution, err / h
};

/// Centred 5-point d-bar of the Cauchy transform; -d-bar hat{g} = g.
DbarStencil dbar_stencil(const DensitySpec& g, Complex point, double h, double tol);

}  // namespace ekernel

#endif  // EKERNEL_CAUCHY_HPP_
