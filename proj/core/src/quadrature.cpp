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

#include "ekernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ekernel/adaptive.hpp"

namespace ekernel {
namespace {

using geom::HalfPlane;
using geom::RaySpan;
using geom::Window;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// One polar sweep: a weighted shape swept about `origin`, optionally limited
// to the half-plane nearer to `origin`.
struct Sweep {
  Region shape;
  double coeff = 0.0;
  Complex origin;
  bool about_lambda = false;  // origin is lambda (else w)
  std::optional<HalfPlane> half;
};

struct AngularSegment {
  std::size_t sweep = 0;
  double theta0 = 0.0;
  double theta1 = 0.0;
};

// Closed-form radial integral of rho * K over the span, for m == 1.
Complex radial_closed_form(const PlanarKernel& k, const Sweep& s, Complex e,
                           const RaySpan& span) {
  Complex acc;
  for (int i = 0; i < span.count; ++i) {
    const double a = span.parts[static_cast<std::size_t>(i)].lo;
    const double b = span.parts[static_cast<std::size_t>(i)].hi;
    switch (k.kind) {
      case KernelKind::kBiSingular: {
        const Complex delta = k.lambda - k.w;
        if (!s.about_lambda) {
          // \int_a^b e / (rho e - delta) d(rho)
          acc += std::log((b * e - delta) / (a * e - delta));
        } else {
          // \int_a^b conj(e) / (conj(delta) + rho conj(e)) d(rho)
          const Complex ce = std::conj(e);
          const Complex cd = std::conj(delta);
          acc += std::log((cd + b * ce) / (cd + a * ce));
        }
        break;
      }
      case KernelKind::kCauchy:
        acc += (b - a) * std::conj(e);
        break;
      case KernelKind::kInverseSquare:
        acc += std::log(b / a);
        break;
      case KernelKind::kArea:
        acc += 0.5 * (b - a) * (b + a);
        break;
    }
  }
  return acc;
}

// rho * K(origin + rho e), written so that the cancelled factor never forms.
Complex radial_kernel(const PlanarKernel& k, const Sweep& s, Complex e, double rho) {
  switch (k.kind) {
    case KernelKind::kBiSingular: {
      const Complex delta = k.lambda - k.w;
      if (!s.about_lambda) return e / (rho * e - delta);
      const Complex ce = std::conj(e);
      return ce / (std::conj(delta) + rho * ce);
    }
    case KernelKind::kCauchy:
      return std::conj(e);
    case KernelKind::kInverseSquare:
      return 1.0 / rho;
    case KernelKind::kArea:
      return rho;
  }
  return {};
}

std::vector<Sweep> build_sweeps(const DensitySpec& g, const PlanarKernel& k,
                                const Window& window) {
  std::vector<Sweep> sweeps;
  for (const Term& term : flatten(g)) {
    switch (k.kind) {
      case KernelKind::kBiSingular:
        sweeps.push_back({term.region, term.coeff, k.w, false, geom::nearer_half(k.w, k.lambda)});
        sweeps.push_back({term.region, term.coeff, k.lambda, true, geom::nearer_half(k.lambda, k.w)});
        break;
      case KernelKind::kCauchy:
        sweeps.push_back({term.region, term.coeff, k.lambda, true, std::nullopt});
        break;
      case KernelKind::kInverseSquare:
      case KernelKind::kArea:
        sweeps.push_back({term.region, term.coeff, k.w, false, std::nullopt});
        break;
    }
  }
  std::erase_if(sweeps, [&window](const Sweep& s) {
    return !geom::may_intersect(s.shape, s.half, window, s.origin);
  });
  return sweeps;
}

std::vector<AngularSegment> build_segments(const std::vector<Sweep>& sweeps,
                                           const Window& window) {
  std::vector<AngularSegment> segments;
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    const auto& s = sweeps[i];
    const auto angles = geom::breakpoint_angles(s.shape, s.half, window, s.origin);
    if (angles.empty()) {
      segments.push_back({i, 0.0, 2.0 * kPi});
      continue;
    }
    for (std::size_t j = 0; j < angles.size(); ++j) {
      const double a = angles[j];
      const double b = j + 1 < angles.size() ? angles[j + 1] : angles.front() + 2.0 * kPi;
      segments.push_back({i, a, b});
    }
  }
  return segments;
}

}  // namespace

QuadratureResult integrate_planar(const DensitySpec& g, const PlanarKernel& kernel,
                                  double tol, const Multiplier& multiplier,
                                  const Window& window, const QuadratureOptions& options) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  require_finite(kernel.w, "w");
  require_finite(kernel.lambda, "lambda");
  if (kernel.kind == KernelKind::kBiSingular && kernel.w == kernel.lambda) {
    throw Error(ErrorCode::kInvalidPoint,
                "bi-singular kernel needs lambda != w; use the diagonal integral");
  }
  if (kernel.kind == KernelKind::kInverseSquare && !(window.rho_min > 0.0)) {
    for (const Term& t : flatten(g)) {
      if (distance_to(t.region, kernel.w) <= 0.0) {
        throw Error(ErrorCode::kInvalidPoint,
                    "inverse-square integral needs w outside every term or rho_min > 0");
      }
    }
  }

  const auto sweeps = build_sweeps(g, kernel, window);
  const auto segments = build_segments(sweeps, window);
  QuadratureResult out;
  if (segments.empty()) {
    out.cells = 1;
    return out;
  }

  double coeff_mass = 0.0;
  for (const auto& s : sweeps) coeff_mass = std::max(coeff_mass, std::abs(s.coeff));
  const double inner_tol = options.inner_tol_fraction * tol /
                           (2.0 * kPi * std::max(1.0, coeff_mass) *
                            static_cast<double>(std::max<std::size_t>(1, sweeps.size())));
  AdaptiveOptions inner_opts{inner_tol, options.max_inner_cells, 1e-13};

  std::vector<Region> edges;
  if (multiplier) {
    for (const Term& t : flatten(g)) edges.push_back(t.region);
    edges.insert(edges.end(), options.multiplier_edges.begin(), options.multiplier_edges.end());
  }

  // t in [0, 1] -> theta = theta0 + (theta1 - theta0) (3t^2 - 2t^3).
  auto integrand = [&](std::size_t seg, double t) -> Estimate {
    const AngularSegment& as = segments[seg];
    const Sweep& s = sweeps[as.sweep];
    const double span_theta = as.theta1 - as.theta0;
    const double jac = span_theta * 6.0 * t * (1.0 - t);
    if (jac == 0.0) return {};
    const double theta = as.theta0 + span_theta * t * t * (3.0 - 2.0 * t);
    const Complex e = std::polar(1.0, theta);
    const RaySpan span = geom::section(s.shape, s.half, window, s.origin, e);
    if (span.empty()) return {};
    if (!multiplier) {
      return Estimate{s.coeff * jac * radial_closed_form(kernel, s, e, span), 0.0, 1};
    }
    Estimate acc{{}, 0.0, 0};
    // Split each part where the ray crosses an edge of the multiplier.
    std::vector<double> cuts;
    for (const Region& edge : edges) {
      const RaySpan c = geom::clip_ray(edge, s.origin, e);
      for (int i = 0; i < c.count; ++i) {
        cuts.push_back(c.parts[static_cast<std::size_t>(i)].lo);
        cuts.push_back(c.parts[static_cast<std::size_t>(i)].hi);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> pieces;
    for (int i = 0; i < span.count; ++i) {
      const auto& part = span.parts[static_cast<std::size_t>(i)];
      const double min_gap = 1e-9 * (part.hi - part.lo);
      double lo = part.lo;
      for (const double c : cuts) {
        if (c - lo > min_gap && part.hi - c > min_gap) {
          pieces.emplace_back(lo, c);
          lo = c;
        }
      }
      pieces.emplace_back(lo, part.hi);
    }
    const auto r = integrate_segments(
        [&](std::size_t, double rho) {
          return Estimate{multiplier(s.origin + rho * e) * radial_kernel(kernel, s, e, rho), 0.0, 1};
        },
        std::span<const std::pair<double, double>>(pieces), inner_opts);
    acc.value = r.value;
    acc.error = r.error;
    acc.evaluations = r.evaluations;
    const double scale = std::abs(s.coeff * jac);
    return Estimate{s.coeff * jac * acc.value, scale * acc.error, acc.evaluations};
  };

  std::vector<std::pair<double, double>> ranges(segments.size(), {0.0, 1.0});
  const AdaptiveOptions outer{tol, options.max_cells, 1e-12};
  const AdaptiveResult r = integrate_segments(integrand, ranges, outer);

  out.value = r.value;
  out.error_estimate = r.error + 64.0 * kEps * std::abs(r.value);
  out.cells = r.intervals;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  return out;
}

QuadratureResult integrate_bi_singular(const DensitySpec& g, Complex w, Complex lambda,
                                       double tol, const Multiplier& multiplier,
                                       const QuadratureOptions& options) {
  require_finite(w, "w");
  require_finite(lambda, "lambda");
  QuadratureResult r;
  if (w == lambda) {
    if (multiplier) {
      throw Error(ErrorCode::kInvalidPoint, "diagonal evaluation takes no multiplier");
    }
    r = integrate_planar(g, {KernelKind::kInverseSquare, w, w}, tol * kPi, {}, {}, options);
  } else {
    r = integrate_planar(g, {KernelKind::kBiSingular, w, lambda}, tol * kPi, multiplier, {},
                         options);
  }
  r.value /= -kPi;
  r.error_estimate /= kPi;
  return r;
}

QuadratureResult cauchy_transform(const DensitySpec& g, Complex lambda, double tol,
                                  const Multiplier& multiplier,
                                  const QuadratureOptions& options) {
  QuadratureResult r = integrate_planar(g, {KernelKind::kCauchy, lambda, lambda}, tol * kPi,
                                        multiplier, {}, options);
  r.value /= kPi;
  r.error_estimate /= kPi;
  return r;
}

QuadratureResult inverse_square_mass(const DensitySpec& g, Complex w, double rho_min,
                                     double rho_max, double tol) {
  if (!(rho_min >= 0.0) || !(rho_max > rho_min)) {
    throw Error(ErrorCode::kInvalidArgument, "window needs 0 <= rho_min < rho_max");
  }
  QuadratureResult r = integrate_planar(g, {KernelKind::kInverseSquare, w, w}, tol * kPi, {},
                                        Window{rho_min, rho_max});
  r.value /= kPi;
  r.error_estimate /= kPi;
  return r;
}

QuadratureResult disc_mass(const DensitySpec& g, Complex w, double r, double tol) {
  if (!(r > 0.0)) throw Error(ErrorCode::kInvalidArgument, "disc radius must be positive");
  return integrate_planar(g, {KernelKind::kArea, w, w}, tol, {}, Window{0.0, r});
}

DiagonalMass integrate_diagonal(const DensitySpec& g, Complex w, double tol,
                                double divergence_threshold) {
  require_finite(w, "w");
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (!(divergence_threshold > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "divergence threshold must be positive");
  }
  const auto terms = flatten(g);
  if (terms.empty()) return FiniteMass{0.0, 0.0, true};

  // Terms whose closure contains w decide the behaviour at small scales; the
  // others stop contributing below their distance to w.
  double reach = 0.0;
  double clearance = std::numeric_limits<double>::infinity();
  bool covered = false;
  for (const Term& t : terms) {
    const Disk bd = bounding_disk(t.region);
    reach = std::max(reach, std::abs(bd.center - w) + bd.radius);
    const double d = distance_to(t.region, w);
    if (d > 0.0) {
      clearance = std::min(clearance, d);
    } else {
      covered = true;
    }
  }
  if (!covered) {
    const auto r = inverse_square_mass(g, w, 0.0, 2.0 * reach, tol);
    return FiniteMass{r.value.real(), r.error_estimate, r.converged};
  }

  constexpr int kMaxOctaves = 1000;
  double partial = 0.0;
  double error = 0.0;
  bool converged = true;
  double prev = -1.0;
  double prev2 = -1.0;
  double outer = reach;
  for (int k = 0; k < kMaxOctaves; ++k) {
    const double inner = 0.5 * outer;
    const double tol_k = tol / (4.0 * (k + 1.0) * (k + 1.0));
    const auto r = inverse_square_mass(g, w, inner, outer, tol_k);
    const double c = std::max(0.0, r.value.real());
    partial += c;
    error += r.error_estimate;
    converged = converged && r.converged;
    if (partial >= divergence_threshold) return DivergentMass{partial, k + 1};

    if (outer <= clearance) {
      // Only terms covering w remain; their contribution per octave tends to
      // a constant (the cone density at w) as the boundaries flatten out.
      if (c < 1e-13 && prev >= 0.0 && prev < 1e-13) {
        return FiniteMass{partial, error + 2.0 * c, converged};
      }
      if (prev > 0.0 && c <= tol / 8.0 && c <= 0.75 * prev) {
        return FiniteMass{partial, error + 3.0 * c, converged};
      }
      if (prev2 > 0.0 && c > 1e-13 && std::abs(c - prev) <= 1e-9 * c &&
          std::abs(prev - prev2) <= 1e-9 * c) {
        const double steps = std::ceil((divergence_threshold - partial) / c);
        return DivergentMass{partial + steps * c, k + 1 + static_cast<int>(steps)};
      }
    }
    prev2 = prev;
    prev = c;
    outer = inner;
    if (outer < std::numeric_limits<double>::min() * 1e6) break;
  }
  return FiniteMass{partial, error, false};
}

}  // namespace ekernel
