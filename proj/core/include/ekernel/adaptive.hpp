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

// Globally adaptive 15-point Gauss-Kronrod integration of complex-valued
// functions over a family of segments, with deterministic pairwise reduction.

#ifndef EKERNEL_ADAPTIVE_HPP_
#define EKERNEL_ADAPTIVE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "ekernel/types.hpp"

namespace ekernel {

/// A sampled value with the error it already carries (for nested rules).
struct Estimate {
  Complex value;
  double error = 0.0;
  long evaluations = 1;
};

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  long max_intervals = 20000;
  double min_width = 1e-13;  // relative to the segment length
};

struct AdaptiveResult {
  Complex value;
  double error = 0.0;
  long intervals = 0;
  long evaluations = 0;
  bool converged = false;
};

/// Sum in a fixed binary-tree order; the result depends only on the order of
/// `values`, never on how they were produced.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

namespace detail {

inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  std::size_t segment = 0;
  double a = 0.0;
  double b = 0.0;
  Complex value;
  double error = 0.0;
};

/// One Gauss-Kronrod 7/15 panel with the QUADPACK error heuristic, plus the
/// Kronrod-weighted inner errors of the samples.
template <class F>
Panel gk15(F& f, std::size_t segment, double a, double b, long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex fv[15];
  double inner = 0.0;
  const auto sample = [&](int slot, double x, double w) {
    const Estimate e = f(segment, x);
    fv[slot] = e.value;
    inner += w * e.error;
    evaluations += e.evaluations;
  };
  sample(0, center, kWgk[7]);
  for (int j = 0; j < 7; ++j) {
    sample(1 + 2 * j, center - half * kXgk[j], kWgk[j]);
    sample(2 + 2 * j, center + half * kXgk[j], kWgk[j]);
  }
  Complex resk = kWgk[7] * fv[0];
  Complex resg = kWg[3] * fv[0];
  double resabs = kWgk[7] * std::abs(fv[0]);
  for (int j = 0; j < 7; ++j) {
    const Complex s = fv[1 + 2 * j] + fv[2 + 2 * j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(fv[1 + 2 * j]) + std::abs(fv[2 + 2 * j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const Complex mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[0] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[1 + 2 * j] - mean) + std::abs(fv[2 + 2 * j] - mean));
  }
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * kEps * resabs);
  return Panel{segment, a, b, resk * half, err + inner * std::abs(half)};
}

}  // namespace detail

/// Integrates f(segment, x) over x in ranges[segment] for every segment and
/// returns the total. Panels are bisected in order of decreasing error until
/// the summed error estimate is below options.abs_tol or the panel budget is
/// spent. `f` returns an Estimate so nested integrals can report their own
/// error, which is folded into the panel error.
template <class F>
AdaptiveResult integrate_segments(F&& f, std::span<const std::pair<double, double>> ranges,
                                  const AdaptiveOptions& options) {
  using detail::Panel;
  AdaptiveResult out;
  std::vector<Panel> panels;
  panels.reserve(ranges.size() * 4);
  for (std::size_t s = 0; s < ranges.size(); ++s) {
    panels.push_back(detail::gk15(f, s, ranges[s].first, ranges[s].second, out.evaluations));
  }
  std::vector<double> min_width(ranges.size());
  for (std::size_t s = 0; s < ranges.size(); ++s) {
    min_width[s] = options.min_width * std::abs(ranges[s].second - ranges[s].first);
  }

  // Max-heap on error; ties broken by position so the refinement sequence is
  // a pure function of the inputs.
  const auto worse = [&panels](std::size_t i, std::size_t j) {
    const Panel& p = panels[i];
    const Panel& q = panels[j];
    if (p.error != q.error) return p.error < q.error;
    if (p.segment != q.segment) return p.segment > q.segment;
    return p.a > q.a;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);
  double total_error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    heap.push(i);
    total_error += panels[i].error;
  }

  while (total_error > options.abs_tol && !heap.empty() &&
         static_cast<long>(panels.size()) < options.max_intervals) {
    const std::size_t worst = heap.top();
    heap.pop();
    Panel& p = panels[worst];
    if (std::abs(p.b - p.a) <= min_width[p.segment]) {
      continue;  // too narrow to split; keep its estimate
    }
    const double mid = 0.5 * (p.a + p.b);
    Panel left = detail::gk15(f, p.segment, p.a, mid, out.evaluations);
    Panel right = detail::gk15(f, p.segment, mid, p.b, out.evaluations);
    total_error += left.error + right.error - p.error;
    panels[worst] = left;
    panels.push_back(right);
    heap.push(worst);
    heap.push(panels.size() - 1);
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) {
    return p.segment != q.segment ? p.segment < q.segment : p.a < q.a;
  });
  std::vector<Complex> values(panels.size());
  std::vector<double> errors(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i) {
    values[i] = panels[i].value;
    errors[i] = panels[i].error;
  }
  out.value = pairwise_sum(values);
  out.error = pairwise_sum(errors);
  out.intervals = static_cast<long>(panels.size());
  out.converged = out.error <= options.abs_tol;
  return out;
}

/// Single-range convenience for plain complex integrands.
template <class G>
AdaptiveResult integrate_1d(G&& g, double a, double b, const AdaptiveOptions& options) {
  const std::pair<double, double> range{a, b};
  auto f = [&g](std::size_t, double x) { return Estimate{g(x), 0.0, 1}; };
  return integrate_segments(f, std::span<const std::pair<double, double>>(&range, 1), options);
}

}  // namespace ekernel

#endif  // EKERNEL_ADAPTIVE_HPP_
