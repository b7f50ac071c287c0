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
#include "ekernel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "ekernel/kernel.hpp"
#include "ekernel/parallel.hpp"
#include "ekernel/quadrature.hpp"

namespace ekernel {

RadialSchedule RadialSchedule::defaults_for(const DensitySpec& g) {
  return RadialSchedule{g.support_radius / 8.0, 0.5, 8};
}

std::vector<double> RadialSchedule::radii() const {
  if (!(r0 > 0.0) || !(ratio > 0.0 && ratio < 1.0) || count < 3) {
    throw Error(ErrorCode::kInvalidArgument, "schedule needs r0 > 0, 0 < ratio < 1, count >= 3");
  }
  std::vector<double> r(static_cast<std::size_t>(count));
  double x = r0;
  for (auto& v : r) {
    v = x;
    x *= ratio;
  }
  return r;
}

FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorCode::kInvalidArgument, "fit needs >= 2 points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorCode::kInvalidArgument, "fit needs distinct abscissae");
  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / static_cast<double>(n));
  return f;
}

DensityEstimate estimate_density(const DensitySpec& g, Complex w, const RadialSchedule& schedule,
                                 double tol) {
  require_finite(w, "w");
  DensityEstimate out;
  for (const double r : schedule.radii()) {
    const double area = kPi * r * r;
    const auto m = disc_mass(g, w, r, 0.1 * tol * area);
    out.ratios.push_back(m.value.real() / area);
  }
  const auto last = std::span<const double>(out.ratios).last(3);
  const auto [lo, hi] = std::minmax_element(last.begin(), last.end());
  if (*hi - *lo > 0.05) {
    throw Error(ErrorCode::kNonConvergent, "density ratios have not settled");
  }
  out.gamma = std::clamp((last[0] + last[1] + last[2]) / 3.0, 0.0, 1.0);
  return out;
}

LipschitzEstimate estimate_lipschitz_exponent(const DensitySpec& g, Complex w,
                                              const RadialSchedule& schedule, int directions,
                                              double tol, unsigned threads) {
  require_finite(w, "w");
  if (directions < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one direction");
  if (!is_divergent(integrate_diagonal(g, w, tol))) {
    throw Error(ErrorCode::kPreconditionFailed,
                "diagonal integral is finite at w, so E(w, w) != 0");
  }
  LipschitzEstimate out;
  out.radii = schedule.radii();
  const std::size_t nd = static_cast<std::size_t>(directions);
  std::vector<double> mags(out.radii.size() * nd);
  parallel_for(mags.size(), threads, [&](std::size_t i) {
    const double r = out.radii[i / nd];
    const double theta = 2.0 * kPi * static_cast<double>(i % nd) / static_cast<double>(nd);
    mags[i] = std::abs(eval_E(g, w + std::polar(r, theta), w, tol).value);
  });
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t k = 0; k < out.radii.size(); ++k) {
    const auto row = std::span<const double>(mags).subspan(k * nd, nd);
    const double m = *std::max_element(row.begin(), row.end());
    out.max_abs_e.push_back(m);
    if (m > 0.0) {
      x.push_back(std::log(out.radii[k]));
      y.push_back(std::log(m));
    }
  }
  out.fit = fit_line(x, y);
  return out;
}

AnnulusBound check_annulus_bound(const DensitySpec& g, double r, const std::vector<double>& t_values,
                                 double eps, double tol) {
  if (!(r > 0.0) || t_values.empty() || !(eps > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need R > 0, eps > 0 and some t values");
  }
  for (const double t : t_values) {
    if (!(t > 0.0 && t < r)) throw Error(ErrorCode::kInvalidArgument, "need 0 < t < R");
  }
  AnnulusBound out;
  RadialSchedule sched{std::min(r, g.support_radius) / 8.0, 0.5, 8};
  out.gamma = estimate_density(g, 0.0, sched, tol).gamma;
  if (!(out.gamma > 0.0)) {
    throw Error(ErrorCode::kPreconditionFailed, "0 is not a point of positive density");
  }
  const double slope = out.gamma - eps;
  std::vector<double> lhs;
  for (const double t : t_values) {
    lhs.push_back(0.5 * inverse_square_mass(g, 0.0, t, r, tol).value.real());
  }
  const auto largest = static_cast<std::size_t>(
      std::max_element(t_values.begin(), t_values.end()) - t_values.begin());
  out.k = std::max(0.0, -slope * std::log(t_values[largest]) - lhs[largest]);
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    AnnulusBoundRow row;
    row.t = t_values[i];
    row.lhs = lhs[i];
    row.rhs = -slope * std::log(row.t) - out.k;
    row.holds = row.lhs >= row.rhs - tol;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace ekernel
