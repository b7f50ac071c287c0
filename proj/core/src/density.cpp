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

#include "ekernel/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ekernel/rng.hpp"

namespace ekernel {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string describe(Complex u) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << u.real() << ", " << u.imag() << ")";
  return os.str();
}

std::array<Complex, 4> corners(const Rectangle& r) {
  return {r.corner_min, Complex(r.corner_max.real(), r.corner_min.imag()),
          r.corner_max, Complex(r.corner_min.real(), r.corner_max.imag())};
}

std::optional<Violation> check_shape(const Region& region) {
  return std::visit(
      Overloaded{
          [](const Disk& d) -> std::optional<Violation> {
            if (!is_finite(d.center) || !std::isfinite(d.radius) ||
                d.radius <= 0.0) {
              return Violation{d.center, 0.0, "disk radius must be positive"};
            }
            return std::nullopt;
          },
          [](const Annulus& a) -> std::optional<Violation> {
            if (!is_finite(a.center) || !std::isfinite(a.r_inner) ||
                !std::isfinite(a.r_outer) || a.r_inner < 0.0 ||
                a.r_outer <= a.r_inner) {
              return Violation{a.center, 0.0,
                               "annulus needs 0 <= r_inner < r_outer"};
            }
            return std::nullopt;
          },
          [](const Rectangle& r) -> std::optional<Violation> {
            if (!is_finite(r.corner_min) || !is_finite(r.corner_max) ||
                !(r.corner_min.real() < r.corner_max.real()) ||
                !(r.corner_min.imag() < r.corner_max.imag())) {
              return Violation{r.corner_min, 0.0,
                               "rectangle corners must be strictly ordered"};
            }
            return std::nullopt;
          },
      },
      region);
}

// Farthest point of the region from `c`.
Complex farthest_point(const Region& region, Complex c) {
  return std::visit(
      Overloaded{
          [c](const Disk& d) {
            const Complex dir = d.center - c;
            const double n = std::abs(dir);
            return d.center + (n > 0 ? dir / n : Complex(1, 0)) * d.radius;
          },
          [c](const Annulus& a) {
            const Complex dir = a.center - c;
            const double n = std::abs(dir);
            return a.center + (n > 0 ? dir / n : Complex(1, 0)) * a.r_outer;
          },
          [c](const Rectangle& r) {
            const auto cs = corners(r);
            return *std::max_element(cs.begin(), cs.end(),
                                     [c](Complex x, Complex y) {
                                       return std::abs(x - c) < std::abs(y - c);
                                     });
          },
      },
      region);
}

}  // namespace

bool contains(const Region& region, Complex u) noexcept {
  return std::visit(
      Overloaded{
          [u](const Disk& d) { return std::norm(u - d.center) < d.radius * d.radius; },
          [u](const Annulus& a) {
            const double n = std::norm(u - a.center);
            return n >= a.r_inner * a.r_inner && n < a.r_outer * a.r_outer;
          },
          [u](const Rectangle& r) {
            return u.real() >= r.corner_min.real() && u.real() < r.corner_max.real() &&
                   u.imag() >= r.corner_min.imag() && u.imag() < r.corner_max.imag();
          },
      },
      region);
}

Disk bounding_disk(const Region& region) noexcept {
  return std::visit(
      Overloaded{
          [](const Disk& d) { return d; },
          [](const Annulus& a) { return Disk{a.center, a.r_outer}; },
          [](const Rectangle& r) {
            return Disk{0.5 * (r.corner_min + r.corner_max),
                        0.5 * std::abs(r.corner_max - r.corner_min)};
          },
      },
      region);
}

double distance_to(const Region& region, Complex u) noexcept {
  return std::visit(
      Overloaded{
          [u](const Disk& d) { return std::max(0.0, std::abs(u - d.center) - d.radius); },
          [u](const Annulus& a) {
            const double r = std::abs(u - a.center);
            if (r > a.r_outer) return r - a.r_outer;
            if (r < a.r_inner) return a.r_inner - r;
            return 0.0;
          },
          [u](const Rectangle& r) {
            const double dx = std::max({r.corner_min.real() - u.real(), 0.0,
                                        u.real() - r.corner_max.real()});
            const double dy = std::max({r.corner_min.imag() - u.imag(), 0.0,
                                        u.imag() - r.corner_max.imag()});
            return std::hypot(dx, dy);
          },
      },
      region);
}

Rectangle DensityGrid::cell(std::size_t i, std::size_t j) const {
  const Complex lo = origin + Complex(static_cast<double>(i) * spacing,
                                      static_cast<double>(j) * spacing);
  return Rectangle{lo, lo + Complex(spacing, spacing)};
}

double DensityGrid::eval(Complex u) const noexcept {
  const double fx = (u.real() - origin.real()) / spacing;
  const double fy = (u.imag() - origin.imag()) / spacing;
  if (!(fx >= 0.0) || !(fy >= 0.0)) return 0.0;
  const auto i = static_cast<std::size_t>(std::floor(fx));
  const auto j = static_cast<std::size_t>(std::floor(fy));
  if (i >= nx || j >= ny) return 0.0;
  return at(i, j);
}

double eval_density_raw(const DensitySpec& g, Complex u) noexcept {
  double value = 0.0;
  for (const auto& term : g.terms) {
    if (contains(term.region, u)) value += term.coeff;
  }
  if (g.grid) value += g.grid->eval(u);
  return value;
}

double eval_density(const DensitySpec& g, Complex u) noexcept {
  if (std::abs(u - g.support_center) > g.support_radius) return 0.0;
  return eval_density_raw(g, u);
}

std::optional<Violation> validate(const DensitySpec& g,
                                  const ValidationOptions& options) {
  const Complex c = g.support_center;
  const double radius = g.support_radius;
  if (!is_finite(c) || !std::isfinite(radius) || radius <= 0.0) {
    return Violation{c, 0.0, "support radius must be positive and finite"};
  }

  for (const auto& term : g.terms) {
    if (auto v = check_shape(term.region)) return v;
    if (!std::isfinite(term.coeff)) {
      return Violation{bounding_disk(term.region).center, term.coeff,
                       "coefficient must be finite"};
    }
    if (term.coeff == 0.0) continue;
    const Complex far = farthest_point(term.region, c);
    if (std::abs(far - c) > radius * (1.0 + 1e-12)) {
      return Violation{far, term.coeff, "region extends beyond the support disc"};
    }
  }

  if (g.grid) {
    const DensityGrid& grid = *g.grid;
    if (!is_finite(grid.origin) || !std::isfinite(grid.spacing) ||
        grid.spacing <= 0.0 || grid.nx == 0 || grid.ny == 0 ||
        grid.values.size() != grid.nx * grid.ny) {
      return Violation{grid.origin, 0.0, "grid shape is inconsistent"};
    }
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const double v = grid.at(i, j);
        const Rectangle cell = grid.cell(i, j);
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
          return Violation{0.5 * (cell.corner_min + cell.corner_max), v,
                           "grid value outside [0, 1]"};
        }
        if (v == 0.0) continue;
        const Complex far = farthest_point(cell, c);
        if (std::abs(far - c) > radius * (1.0 + 1e-12)) {
          return Violation{far, v, "grid cell extends beyond the support disc"};
        }
      }
    }
  }

  const auto check_point = [&](Complex u) -> std::optional<Violation> {
    const double v = eval_density_raw(g, u);
    if (v < -options.value_slack || v > 1.0 + options.value_slack) {
      std::string reason = "density value outside [0, 1] at " + describe(u);
      return Violation{u, v, std::move(reason)};
    }
    return std::nullopt;
  };

  // Stratified samples: one jittered point per cell of an n x n partition of
  // the support square.
  Mcg64 rng = make_mcg(options.seed);
  const int n = options.grid_samples;
  const double step = 2.0 * radius / n;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Complex u = c + Complex(-radius + (i + uniform01(rng)) * step,
                                    -radius + (j + uniform01(rng)) * step);
      if (std::abs(u - c) > radius) continue;
      if (auto v = check_point(u)) return v;
    }
  }

  // Thin bands on both sides of each region boundary, where overlapping
  // signed terms are most likely to leave [0, 1].
  const double band = 1e-7 * radius;
  for (const auto& term : g.terms) {
    for (int k = 0; k < options.boundary_samples; ++k) {
      const double s = uniform01(rng);
      const double side = (k % 2 == 0) ? band : -band;
      Complex u;
      std::visit(
          Overloaded{
              [&](const Disk& d) {
                u = d.center + std::polar(d.radius + side, 2.0 * kPi * s);
              },
              [&](const Annulus& a) {
                const double r = (k % 4 < 2) ? a.r_outer : a.r_inner;
                u = a.center + std::polar(std::max(0.0, r + side), 2.0 * kPi * s);
              },
              [&](const Rectangle& r) {
                const double w = r.corner_max.real() - r.corner_min.real();
                const double h = r.corner_max.imag() - r.corner_min.imag();
                double t = s * 2.0 * (w + h);
                if (t < w) {
                  u = r.corner_min + Complex(t, side);
                } else if ((t -= w) < h) {
                  u = Complex(r.corner_max.real() - side, r.corner_min.imag() + t);
                } else if ((t -= h) < w) {
                  u = Complex(r.corner_max.real() - t, r.corner_max.imag() - side);
                } else {
                  t -= w;
                  u = Complex(r.corner_min.real() + side, r.corner_max.imag() - t);
                }
              },
          },
          term.region);
      if (std::abs(u - c) > radius) continue;
      if (auto v = check_point(u)) return v;
    }
  }

  // Pairwise lens probes: the middle of the overlap along the line of centres
  // catches slivers far narrower than either sampling scheme resolves.
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    const Disk a = bounding_disk(g.terms[i].region);
    for (std::size_t j = i + 1; j < g.terms.size(); ++j) {
      const Disk b = bounding_disk(g.terms[j].region);
      const Complex d = b.center - a.center;
      const double dist = std::abs(d);
      if (dist == 0.0 || dist >= a.radius + b.radius) continue;
      const Complex e = d / dist;
      const Complex u = 0.5 * ((a.center + a.radius * e) + (b.center - b.radius * e));
      if (std::abs(u - c) > radius) continue;
      if (auto v = check_point(u)) return v;
    }
  }
  return std::nullopt;
}

void require_valid(const DensitySpec& g, const ValidationOptions& options) {
  if (auto v = validate(g, options)) {
    throw Error(ErrorCode::kConfigViolation,
                v->reason + " (value " + std::to_string(v->value) + ")");
  }
}

std::vector<Term> flatten(const DensitySpec& g) {
  std::vector<Term> out;
  for (const auto& term : g.terms) {
    if (term.coeff != 0.0) out.push_back(term);
  }
  if (g.grid) {
    const DensityGrid& grid = *g.grid;
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        if (grid.at(i, j) != 0.0) out.push_back({grid.cell(i, j), grid.at(i, j)});
      }
    }
  }
  return out;
}

bool is_disc_only(const DensitySpec& g) noexcept {
  if (g.grid) return false;
  return std::all_of(g.terms.begin(), g.terms.end(), [](const Term& t) {
    return std::holds_alternative<Disk>(t.region);
  });
}

DensitySpec zero_density(Complex support_center, double support_radius) {
  return DensitySpec{{}, std::nullopt, support_center, support_radius};
}

DensitySpec disc_density(Complex center, double radius, double coeff) {
  return DensitySpec{{{Disk{center, radius}, coeff}}, std::nullopt, center, radius};
}

DensitySpec annulus_density(Complex center, double r_inner, double r_outer,
                            double coeff) {
  return DensitySpec{{{Annulus{center, r_inner, r_outer}, coeff}},
                     std::nullopt, center, r_outer};
}

DensitySpec unit_disc_density() { return disc_density({0.0, 0.0}, 1.0); }

DensitySpec scaled(const DensitySpec& g, double c) {
  DensitySpec out = g;
  for (auto& term : out.terms) term.coeff *= c;
  if (out.grid) {
    for (auto& v : out.grid->values) v *= c;
  }
  return out;
}

DensitySpec transformed(const DensitySpec& g, double rho, Complex shift) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kInvalidArgument, "dilation factor must be positive");
  }
  const auto map = [rho, shift](Complex u) { return rho * u + shift; };
  DensitySpec out = g;
  for (auto& term : out.terms) {
    std::visit(Overloaded{
                   [&](Disk& d) {
                     d.center = map(d.center);
                     d.radius *= rho;
                   },
                   [&](Annulus& a) {
                     a.center = map(a.center);
                     a.r_inner *= rho;
                     a.r_outer *= rho;
                   },
                   [&](Rectangle& r) {
                     r.corner_min = map(r.corner_min);
                     r.corner_max = map(r.corner_max);
                   },
               },
               term.region);
  }
  if (out.grid) {
    out.grid->origin = map(out.grid->origin);
    out.grid->spacing *= rho;
  }
  out.support_center = map(g.support_center);
  out.support_radius = g.support_radius * rho;
  return out;
}

DensitySpec sum(const DensitySpec& g1, const DensitySpec& g2) {
  if (g1.grid && g2.grid) {
    throw Error(ErrorCode::kInvalidArgument, "cannot add two gridded densities");
  }
  DensitySpec out;
  out.terms = g1.terms;
  out.terms.insert(out.terms.end(), g2.terms.begin(), g2.terms.end());
  out.grid = g1.grid ? g1.grid : g2.grid;
  // Smallest disc containing both support discs.
  const Complex d = g2.support_center - g1.support_center;
  const double dist = std::abs(d);
  const double r1 = g1.support_radius;
  const double r2 = g2.support_radius;
  if (dist + r2 <= r1) {
    out.support_center = g1.support_center;
    out.support_radius = r1;
  } else if (dist + r1 <= r2) {
    out.support_center = g2.support_center;
    out.support_radius = r2;
  } else {
    const double r = 0.5 * (dist + r1 + r2);
    out.support_center = g1.support_center + d / dist * (r - r1);
    out.support_radius = r;
  }
  return out;
}

DensitySpec swiss_cheese(std::uint64_t seed, int hole_count,
                         double radius_budget) {
  if (hole_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "hole_count must be at least 1");
  }
  if (!(radius_budget > 0.0) || !(radius_budget < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "radius_budget must lie in (0, 1)");
  }
  constexpr int kMaxAttempts = 10000;
  constexpr double kGap = 1e-6;

  Mcg64 rng = make_mcg(seed);
  std::vector<double> radii(static_cast<std::size_t>(hole_count));
  for (auto& r : radii) r = uniform(rng, 0.5, 1.0);
  const double total = std::accumulate(radii.begin(), radii.end(), 0.0);
  for (auto& r : radii) r *= radius_budget / total * (1.0 - 1e-12);
  std::sort(radii.begin(), radii.end(), std::greater<>());

  DensitySpec out = unit_disc_density();
  std::vector<Disk> holes;
  for (double r : radii) {
    const double reach = (1.0 - r) * (1.0 - 1e-3);
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      const Complex c = std::polar(reach * std::sqrt(uniform01(rng)),
                                   2.0 * kPi * uniform01(rng));
      placed = std::all_of(holes.begin(), holes.end(), [&](const Disk& h) {
        return std::abs(c - h.center) > h.radius + r + kGap;
      });
      if (placed) holes.push_back(Disk{c, r});
    }
    if (!placed) {
      throw Error(ErrorCode::kPlacementFailed,
                  "could not place " + std::to_string(hole_count) +
                      " disjoint holes within the retry budget");
    }
  }
  for (const auto& h : holes) out.terms.push_back({h, -1.0});
  return out;
}

}  // namespace ekernel
