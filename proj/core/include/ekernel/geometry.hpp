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

// Ray/shape clipping for polar sweeps about a fixed origin.
//
// A polar sweep writes an area integral over a shape S as
//   \int_0^{2\pi} \int_{ray(\theta) \cap S} f(o + \rho e^{i\theta}) \rho d\rho d\theta.
// For the shapes of the density algebra the ray section is at most two
// intervals, and it depends smoothly on \theta between the "breakpoint" angles
// returned below (directions of corners, tangencies and curve crossings).

#ifndef EKERNEL_GEOMETRY_HPP_
#define EKERNEL_GEOMETRY_HPP_

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "ekernel/density.hpp"

namespace ekernel::geom {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Ray section: up to two disjoint radial intervals, sorted.
struct RaySpan {
  std::array<Interval, 2> parts{};
  int count = 0;

  void push(double lo, double hi) {
    if (hi > lo) parts[static_cast<std::size_t>(count++)] = {lo, hi};
  }
  bool empty() const { return count == 0; }
};

/// The closed half-plane { u : Re(conj(normal) * (u - anchor)) <= 0 }.
struct HalfPlane {
  Complex anchor;
  Complex normal;
};

/// Points at least as close to `near` as to `far`.
HalfPlane nearer_half(Complex near, Complex far);

/// Radial window rho_min <= rho <= rho_max about the sweep origin.
struct Window {
  double rho_min = 0.0;
  double rho_max = std::numeric_limits<double>::infinity();
};

/// Section of the ray origin + t*dir (t >= 0, |dir| = 1) through `shape`.
RaySpan clip_ray(const Region& shape, Complex origin, Complex dir);

/// Restricts a span to a half-plane / window.
RaySpan clip(const RaySpan& span, const HalfPlane& half, Complex origin, Complex dir);
RaySpan clip(const RaySpan& span, const Window& window);

/// Full section: shape, optional half-plane, window.
RaySpan section(const Region& shape, const std::optional<HalfPlane>& half,
                const Window& window, Complex origin, Complex dir);

/// Sorted angles in [0, 2*pi) at which the section may fail to be smooth.
std::vector<double> breakpoint_angles(const Region& shape,
                                      const std::optional<HalfPlane>& half,
                                      const Window& window, Complex origin);

/// Conservative test: false only if the section is empty for every angle.
bool may_intersect(const Region& shape, const std::optional<HalfPlane>& half,
                   const Window& window, Complex origin);

}  // namespace ekernel::geom

#endif  // EKERNEL_GEOMETRY_HPP_
