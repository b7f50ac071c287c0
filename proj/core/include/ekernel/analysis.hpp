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
// Local estimators at a point w: Lebesgue density of g, the Lipschitz
// exponent of E(., w) and the logarithmic annulus bound behind it.

#ifndef EKERNEL_ANALYSIS_HPP_
#define EKERNEL_ANALYSIS_HPP_

#include <vector>

#include "ekernel/density.hpp"

namespace ekernel {

/// Radii r_k = r0 * ratio^k, k = 0..count-1.
struct RadialSchedule {
  double r0 = 0.125;
  double ratio = 0.5;
  int count = 8;

  /// r0 = support_radius / 8, ratio 1/2, 8 radii.
  static RadialSchedule defaults_for(const DensitySpec& g);
  std::vector<double> radii() const;
};

/// Least-squares line y = slope * x + intercept.
struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct DensityEstimate {
  double gamma = 0.0;
  std::vector<double> ratios;  // (1 / (pi r_k^2)) \int_{D(w, r_k)} g
};

/// Mean of the last three disc ratios. kNonConvergent when they spread by
/// more than 0.05.
DensityEstimate estimate_density(const DensitySpec& g, Complex w, const RadialSchedule& schedule,
                                 double tol = 1e-7);

struct LipschitzEstimate {
  FitResult fit;
  std::vector<double> radii;
  std::vector<double> max_abs_e;  // max over directions of |E(w + r e^{i theta}, w)|
};

/// Slope of log max_j |E(w + r_k e^{i theta_j}, w)| against log r_k.
/// kPreconditionFailed if the diagonal integral is finite at w.
LipschitzEstimate estimate_lipschitz_exponent(const DensitySpec& g, Complex w,
                                              const RadialSchedule& schedule,
                                              int directions = 8, double tol = 1e-7,
                                              unsigned threads = 1);

struct AnnulusBoundRow {
  double t = 0.0;
  double lhs = 0.0;  // (1/(2 pi)) \int_{t <= |u| < R} g / |u|^2
  double rhs = 0.0;  // -(gamma - eps) ln t - K
  bool holds = false;
};

struct AnnulusBound {
  double gamma = 0.0;
  double k = 0.0;
  std::vector<AnnulusBoundRow> rows;
};

/// Logarithmic growth of the annulus mass about 0: lhs(t) >= (gamma - eps) ln(1/t) - K
/// for small t, K fitted at the largest t. Needs 0 < t < R.
AnnulusBound check_annulus_bound(const DensitySpec& g, double r, const std::vector<double>& t_values,
                                 double eps, double tol = 1e-8);

}  // namespace ekernel

#endif  // EKERNEL_ANALYSIS_HPP_
