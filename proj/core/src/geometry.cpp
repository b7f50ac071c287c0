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

#include "ekernel/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ekernel::geom {
namespace {

double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }
double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Raw roots t1 <= t2 of |o + t e - c|^2 = r^2, if the line meets the circle.
std::optional<Interval> chord(Complex c, double r, Complex o, Complex e) {
  const Complex oc = o - c;
  const double b = dot(oc, e);
  const double cc = std::norm(oc) - r * r;
  const double disc = b * b - cc;
  if (!(disc > 0.0)) return std::nullopt;
  const double s = std::sqrt(disc);
  double t1 = 0.0;
  double t2 = 0.0;
  if (b > 0.0) {
    t1 = -b - s;
    t2 = cc / t1;
  } else {
    t2 = -b + s;
    t1 = cc / t2;
  }
  if (t1 > t2) std::swap(t1, t2);
  return Interval{t1, t2};
}

struct Circle {
  Complex c;
  double r;
};

// Parametrized p + t v with t restricted to [t0, t1].
struct Line {
  Complex p;
  Complex v;
  double t0;
  double t1;
};

void intersect(const Circle& a, const Circle& b, std::vector<Complex>& out) {
  const Complex d = b.c - a.c;
  const double dist = std::abs(d);
  if (dist == 0.0 || dist > a.r + b.r || dist < std::abs(a.r - b.r)) return;
  const double along = (a.r * a.r - b.r * b.r + dist * dist) / (2.0 * dist);
  const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
  const Complex u = d / dist;
  out.push_back(a.c + along * u + h * Complex(0, 1) * u);
  out.push_back(a.c + along * u - h * Complex(0, 1) * u);
}

void intersect(const Circle& a, const Line& l, std::vector<Complex>& out) {
  const double aa = std::norm(l.v);
  const Complex pc = l.p - a.c;
  const double b = dot(l.v, pc);
  const double cc = std::norm(pc) - a.r * a.r;
  const double disc = b * b - aa * cc;
  if (disc < 0.0) return;
  const double s = std::sqrt(disc);
  for (const double t : {(-b - s) / aa, (-b + s) / aa}) {
    if (t >= l.t0 && t <= l.t1) out.push_back(l.p + t * l.v);
  }
}

void intersect(const Line& a, const Line& b, std::vector<Complex>& out) {
  const double den = cross(a.v, b.v);
  if (den == 0.0) return;
  const Complex d = b.p - a.p;
  const double t = cross(d, b.v) / den;
  const double s = cross(d, a.v) / den;
  if (t >= a.t0 && t <= a.t1 && s >= b.t0 && s <= b.t1) out.push_back(a.p + t * a.v);
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a;
}

}  // namespace

HalfPlane nearer_half(Complex near, Complex far) {
  return HalfPlane{0.5 * (near + far), far - near};
}

RaySpan clip_ray(const Region& shape, Complex origin, Complex dir) {
  RaySpan span;
  if (const auto* d = std::get_if<Disk>(&shape)) {
    if (auto ch = chord(d->center, d->radius, origin, dir)) {
      span.push(std::max(ch->lo, 0.0), ch->hi);
    }
  } else if (const auto* a = std::get_if<Annulus>(&shape)) {
    const auto outer = chord(a->center, a->r_outer, origin, dir);
    if (!outer) return span;
    const auto inner = a->r_inner > 0.0 ? chord(a->center, a->r_inner, origin, dir)
                                        : std::nullopt;
    if (!inner) {
      span.push(std::max(outer->lo, 0.0), outer->hi);
    } else {
      span.push(std::max(outer->lo, 0.0), std::min(outer->hi, inner->lo));
      span.push(std::max({outer->lo, inner->hi, 0.0}), outer->hi);
    }
  } else {
    const auto& r = std::get<Rectangle>(shape);
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    const auto slab = [&](double o, double e, double mn, double mx) {
      if (e == 0.0) {
        if (o < mn || o > mx) hi = -1.0;
        return;
      }
      double t1 = (mn - o) / e;
      double t2 = (mx - o) / e;
      if (t1 > t2) std::swap(t1, t2);
      lo = std::max(lo, t1);
      hi = std::min(hi, t2);
    };
    slab(origin.real(), dir.real(), r.corner_min.real(), r.corner_max.real());
    slab(origin.imag(), dir.imag(), r.corner_min.imag(), r.corner_max.imag());
    span.push(lo, hi);
  }
  return span;
}

RaySpan clip(const RaySpan& span, const HalfPlane& half, Complex origin,
             Complex dir) {
  const double s0 = dot(half.normal, origin - half.anchor);
  const double ne = dot(half.normal, dir);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  if (ne > 0.0) {
    hi = -s0 / ne;
  } else if (ne < 0.0) {
    lo = -s0 / ne;
  } else if (s0 > 0.0) {
    return {};
  }
  RaySpan out;
  for (int i = 0; i < span.count; ++i) {
    const auto& p = span.parts[static_cast<std::size_t>(i)];
    out.push(std::max(p.lo, lo), std::min(p.hi, hi));
  }
  return out;
}

RaySpan clip(const RaySpan& span, const Window& window) {
  RaySpan out;
  for (int i = 0; i < span.count; ++i) {
    const auto& p = span.parts[static_cast<std::size_t>(i)];
    out.push(std::max(p.lo, window.rho_min), std::min(p.hi, window.rho_max));
  }
  return out;
}

RaySpan section(const Region& shape, const std::optional<HalfPlane>& half,
                const Window& window, Complex origin, Complex dir) {
  RaySpan span = clip_ray(shape, origin, dir);
  if (span.empty()) return span;
  if (half) span = clip(span, *half, origin, dir);
  return clip(span, window);
}

std::vector<double> breakpoint_angles(const Region& shape,
                                      const std::optional<HalfPlane>& half,
                                      const Window& window, Complex origin) {
  std::vector<Circle> circles;
  std::vector<Line> lines;
  std::vector<Complex> points;
  std::vector<double> angles;

  const auto add_tangents = [&](Complex c, double r) {
    const Complex oc = c - origin;
    const double d = std::abs(oc);
    const double base = std::arg(oc);
    if (std::abs(d - r) <= 1e-12 * r) {
      angles.push_back(base + 0.5 * kPi);
      angles.push_back(base - 0.5 * kPi);
    } else if (d > r) {
      const double spread = std::asin(r / d);
      angles.push_back(base + spread);
      angles.push_back(base - spread);
    }
  };

  if (const auto* d = std::get_if<Disk>(&shape)) {
    circles.push_back({d->center, d->radius});
    add_tangents(d->center, d->radius);
  } else if (const auto* a = std::get_if<Annulus>(&shape)) {
    circles.push_back({a->center, a->r_outer});
    add_tangents(a->center, a->r_outer);
    if (a->r_inner > 0.0) {
      circles.push_back({a->center, a->r_inner});
      add_tangents(a->center, a->r_inner);
    }
  } else {
    const auto& r = std::get<Rectangle>(shape);
    const std::array<Complex, 4> cs = {
        r.corner_min, Complex(r.corner_max.real(), r.corner_min.imag()),
        r.corner_max, Complex(r.corner_min.real(), r.corner_max.imag())};
    for (std::size_t i = 0; i < 4; ++i) {
      points.push_back(cs[i]);
      lines.push_back({cs[i], cs[(i + 1) % 4] - cs[i], 0.0, 1.0});
    }
  }
  const std::size_t shape_circles = circles.size();
  const std::size_t shape_lines = lines.size();
  if (half) {
    const double inf = std::numeric_limits<double>::infinity();
    lines.push_back({half->anchor, Complex(0, 1) * half->normal, -inf, inf});
  }
  if (window.rho_min > 0.0) circles.push_back({origin, window.rho_min});
  if (std::isfinite(window.rho_max)) circles.push_back({origin, window.rho_max});

  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (i >= shape_circles && j >= shape_circles) continue;  // concentric
      intersect(circles[i], circles[j], points);
    }
    for (const auto& l : lines) intersect(circles[i], l, points);
  }
  for (std::size_t i = shape_lines; i < lines.size(); ++i) {
    for (std::size_t j = 0; j < shape_lines; ++j) intersect(lines[i], lines[j], points);
  }

  const double scale = std::max(1.0, std::abs(origin));
  for (const Complex p : points) {
    const Complex d = p - origin;
    if (std::abs(d) > 1e-15 * scale) angles.push_back(std::arg(d));
  }
  for (auto& a : angles) a = wrap_angle(a);
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  for (const double a : angles) {
    if (out.empty() || a - out.back() > 1e-13) out.push_back(a);
  }
  if (out.size() > 1 && out.front() + 2.0 * kPi - out.back() <= 1e-13) out.pop_back();
  return out;
}

bool may_intersect(const Region& shape, const std::optional<HalfPlane>& half,
                   const Window& window, Complex origin) {
  const Disk bd = bounding_disk(shape);
  const double d = std::abs(bd.center - origin);
  if (d - bd.radius > window.rho_max) return false;
  if (const auto* a = std::get_if<Annulus>(&shape)) {
    if (d + a->r_outer < window.rho_min) return false;
    if (a->r_inner - d > window.rho_max) return false;  // window inside the hole
  } else if (d + bd.radius < window.rho_min) {
    return false;
  }
  if (half) {
    const double n = std::abs(half->normal);
    const double signed_dist = dot(half->normal, bd.center - half->anchor) / n;
    if (signed_dist > bd.radius) return false;
  }
  return true;
}

}  // namespace ekernel::geom
