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

// Planar integration of singular kernels against densities.
//
// Every density term is a constant times the indicator of a disc, an annulus
// or a rectangle, so an integral against g splits into integrals over single
// shapes. Each shape is swept in polar coordinates centred at a singular
// point of the kernel: the area element rho d(rho) d(theta) cancels one
// 1/|u - s| factor and the radial integrand stays bounded. A kernel with two
// singular points w != lambda is split along their perpendicular bisector and
// each half is swept about its own singular point, so the other factor is
// bounded by 2/|lambda - w| there.
//
// Without a multiplier the radial integrals have closed forms (complex
// logarithms, chord lengths), leaving a one-dimensional angular integral.
// With a multiplier m(u) the radial integral is done numerically as well.
// Both levels use globally adaptive Gauss-Kronrod rules; angular segments are
// cut at corners, tangencies and curve crossings and pre-warped with a cubic
// substitution that removes the square-root endpoint behaviour at tangencies.

#ifndef EKERNEL_QUADRATURE_HPP_
#define EKERNEL_QUADRATURE_HPP_

#include <functional>
#include <variant>
#include <vector>

#include "ekernel/density.hpp"
#include "ekernel/geometry.hpp"

namespace ekernel {

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  long cells = 0;
  long evaluations = 0;
  bool converged = true;
};

/// Bounded pointwise factor m(u) multiplying the density.
using Multiplier = std::function<Complex(Complex)>;

enum class KernelKind {
  kBiSingular,     // 1 / (conj(u - w) (u - lambda))
  kCauchy,         // 1 / (u - lambda)
  kInverseSquare,  // 1 / |u - w|^2
  kArea,           // 1
};

struct PlanarKernel {
  KernelKind kind = KernelKind::kArea;
  Complex w;
  Complex lambda;
};

struct QuadratureOptions {
  long max_cells = 40000;          // angular panels
  long max_inner_cells = 4000;     // radial panels per ray
  double inner_tol_fraction = 0.05;
  // Extra boundaries where the multiplier is not smooth. Radial integrals are
  // cut where a ray crosses them (and the terms' own boundaries).
  std::vector<Region> multiplier_edges;
};

/// Raw \int m(u) g(u) K(u) da(u) with K from `kernel`. The window restricts
/// the integral to rho_min <= |u - w| <= rho_max (kInverseSquare and kArea
/// only). kInverseSquare needs rho_min > 0 or w outside every term.
QuadratureResult integrate_planar(const DensitySpec& g, const PlanarKernel& kernel,
                                  double tol, const Multiplier& multiplier = {},
                                  const geom::Window& window = {},
                                  const QuadratureOptions& options = {});

/// f_w(lambda) = -(1/pi) \int m(u) g(u) / (conj(u - w) (u - lambda)) da(u),
/// the exponent of E_g(lambda, w). lambda == w is accepted only when w lies
/// at positive distance from every term; otherwise kInvalidPoint is thrown and
/// integrate_diagonal() must be used.
QuadratureResult integrate_bi_singular(const DensitySpec& g, Complex w, Complex lambda,
                                       double tol, const Multiplier& multiplier = {},
                                       const QuadratureOptions& options = {});

/// Cauchy transform (1/pi) \int m(u) g(u) / (u - lambda) da(u). Term
/// coefficients may be arbitrary bounded reals here.
QuadratureResult cauchy_transform(const DensitySpec& g, Complex lambda, double tol,
                                  const Multiplier& multiplier = {},
                                  const QuadratureOptions& options = {});

/// (1/pi) \int_{rho_min <= |u - w| <= rho_max} g(u) / |u - w|^2 da(u).
QuadratureResult inverse_square_mass(const DensitySpec& g, Complex w, double rho_min,
                                     double rho_max, double tol);

/// \int_{D(w, r)} g da.
QuadratureResult disc_mass(const DensitySpec& g, Complex w, double r, double tol);

struct FiniteMass {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

struct DivergentMass {
  double partial_sum_at_stop = 0.0;
  int octaves = 0;
};

/// Outcome of (1/pi) \int g(u) / |u - w|^2 da(u).
using DiagonalMass = std::variant<FiniteMass, DivergentMass>;

inline constexpr double kDefaultDivergenceThreshold = 40.0;

/// Accumulates the diagonal integral over dyadic annuli about w. Declares
/// divergence once the partial sum passes `divergence_threshold`, or, below
/// every length scale of the density, once the per-annulus contribution is
/// stationary (the sum then grows linearly in the number of annuli and the
/// crossing is extrapolated).
DiagonalMass integrate_diagonal(const DensitySpec& g, Complex w, double tol,
                                double divergence_threshold = kDefaultDivergenceThreshold);

inline bool is_divergent(const DiagonalMass& m) {
  return std::holds_alternative<DivergentMass>(m);
}

}  // namespace ekernel

#endif  // EKERNEL_QUADRATURE_HPP_
