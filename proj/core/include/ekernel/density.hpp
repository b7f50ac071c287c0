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

// Compactly supported densities 0 <= g <= 1 built from a small shape algebra
// (discs, annuli, axis-aligned rectangles) plus an optional piecewise-constant
// grid.
//
// Pointwise representatives use half-open conventions: a disc is the open set
// |u - c| < r, an annulus is r_inner <= |u - c| < r_outer and a rectangle is
// [x0, x1) x [y0, y1). Boundaries have measure zero, so none of the integrals
// depend on this choice.

#ifndef EKERNEL_DENSITY_HPP_
#define EKERNEL_DENSITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ekernel/types.hpp"

namespace ekernel {

struct Disk {
  Complex center;
  double radius = 0.0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

struct Annulus {
  Complex center;
  double r_inner = 0.0;
  double r_outer = 0.0;

  friend bool operator==(const Annulus&, const Annulus&) = default;
};

struct Rectangle {
  Complex corner_min;
  Complex corner_max;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

using Region = std::variant<Disk, Annulus, Rectangle>;

bool contains(const Region& region, Complex u) noexcept;

/// Smallest disc (center, radius) containing the region.
Disk bounding_disk(const Region& region) noexcept;

/// Distance from `u` to the closure of the region (0 when inside).
double distance_to(const Region& region, Complex u) noexcept;

struct Term {
  Region region;
  double coeff = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Piecewise-constant density on a uniform grid. Cell (i, j) covers
/// [x0 + i h, x0 + (i + 1) h) x [y0 + j h, y0 + (j + 1) h) and holds
/// values[j * nx + i].
struct DensityGrid {
  Complex origin;
  double spacing = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
  Rectangle cell(std::size_t i, std::size_t j) const;
  double eval(Complex u) const noexcept;

  friend bool operator==(const DensityGrid&, const DensityGrid&) = default;
};

struct DensitySpec {
  std::vector<Term> terms;
  std::optional<DensityGrid> grid;
  Complex support_center;
  double support_radius = 1.0;

  friend bool operator==(const DensitySpec&, const DensitySpec&) = default;
};

/// g(u). Exactly zero outside the declared support disc.
double eval_density(const DensitySpec& g, Complex u) noexcept;

/// Sum of the terms and grid at `u` without the support cut-off.
double eval_density_raw(const DensitySpec& g, Complex u) noexcept;

struct Violation {
  Complex point;
  double value = 0.0;
  std::string reason;
};

struct ValidationOptions {
  int grid_samples = 256;     // per axis, over the support square
  int boundary_samples = 64;  // per region boundary band
  double value_slack = 1e-12;
  std::uint64_t seed = 0x5eed;
};

/// Empty when `g` is a valid density; otherwise the first offending point.
std::optional<Violation> validate(const DensitySpec& g,
                                  const ValidationOptions& options = {});

/// Throws Error(kConfigViolation) carrying the violation text.
void require_valid(const DensitySpec& g, const ValidationOptions& options = {});

/// The same density with each term of every grid cell expanded into a
/// rectangle term; zero cells and zero coefficients are dropped.
std::vector<Term> flatten(const DensitySpec& g);

/// True when every term is a disc (the grid must be absent).
bool is_disc_only(const DensitySpec& g) noexcept;

// Fixture builders.
DensitySpec zero_density(Complex support_center = {}, double support_radius = 1.0);
DensitySpec disc_density(Complex center, double radius, double coeff = 1.0);
DensitySpec annulus_density(Complex center, double r_inner, double r_outer,
                            double coeff = 1.0);
DensitySpec unit_disc_density();

/// c * g, for amplitude scaling.
DensitySpec scaled(const DensitySpec& g, double c);

/// Density of g o sigma^{-1} for sigma(u) = rho * u + shift, rho > 0.
DensitySpec transformed(const DensitySpec& g, double rho, Complex shift);

/// g1 + g2 on a support disc covering both. Grids are not merged: at most one
/// operand may carry a grid.
DensitySpec sum(const DensitySpec& g1, const DensitySpec& g2);

/// Unit disc minus `hole_count` open discs with pairwise disjoint closures
/// inside the open unit disc and radii summing to at most `radius_budget`.
/// Deterministic in `seed` (see rng.hpp).
DensitySpec swiss_cheese(std::uint64_t seed, int hole_count,
                         double radius_budget);

}  // namespace ekernel

#endif  // EKERNEL_DENSITY_HPP_
