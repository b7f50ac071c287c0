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
#include "ekernel/cauchy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "ekernel/analysis.hpp"
#include "ekernel/kernel.hpp"
#include "ekernel/parallel.hpp"
#include "ekernel/quadrature.hpp"

namespace ekernel {
namespace {

constexpr double kInnerFraction = 0.1;
constexpr double kMinDensity = 0.1;  // positive-density cut, same margin as eps

struct PointKey {
  std::uint64_t re;
  std::uint64_t im;
  bool operator==(const PointKey&) const = default;
};

struct PointHash {
  std::size_t operator()(const PointKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.re * 0x9e3779b97f4a7c15ULL ^ k.im);
  }
};

// A multiplier whose values are cached on exact node coordinates. Values are
// a pure function of the node, so sharing across threads is deterministic.
class MemoMultiplier {
 public:
  explicit MemoMultiplier(std::function<Complex(Complex)> fn) : fn_(std::move(fn)) {}

  Complex operator()(Complex u) {
    const PointKey key{std::bit_cast<std::uint64_t>(u.real()),
                       std::bit_cast<std::uint64_t>(u.imag())};
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const Complex v = fn_(u);
    std::lock_guard lock(mu_);
    memo_.emplace(key, v);
    return v;
  }

  Multiplier as_multiplier() {
    return [this](Complex u) { return (*this)(u); };
  }

 private:
  std::function<Complex(Complex)> fn_;
  std::mutex mu_;
  std::unordered_map<PointKey, Complex, PointHash> memo_;
};

void record(IdentityCheck& out, double residual, double err) {
  out.residuals.push_back(residual);
  out.max_residual = std::max(out.max_residual, residual);
  out.error_budget += err;
}

// (1/pi) \int |h| / |u - lambda| over a disc of the same mass is at most 2 sqrt(A/pi);
// scales inner errors into the outer integral.
double inner_gain(const DensitySpec& h) {
  double mass = 0.0;
  for (const Term& t : flatten(h)) {
    const Disk d = bounding_disk(t.region);
    mass += std::abs(t.coeff) * d.radius;
  }
  return 2.0 * mass;
}

// hat{h} is only Lipschitz across the boundaries of h.
QuadratureOptions edges_of(const DensitySpec& h) {
  QuadratureOptions o;
  for (const Term& t : flatten(h)) o.multiplier_edges.push_back(t.region);
  return o;
}

}  // namespace

IdentityCheck check_product_identity(const DensitySpec& h, const DensitySpec& k,
                                     const std::vector<Complex>& points, double tol) {
  const double inner_tol = kInnerFraction * tol;
  MemoMultiplier hat_h([&](Complex u) { return cauchy_transform(h, u, inner_tol).value; });
  MemoMultiplier hat_k([&](Complex u) { return cauchy_transform(k, u, inner_tol).value; });
  IdentityCheck out;
  for (const Complex lambda : points) {
    const auto a = cauchy_transform(h, lambda, tol);
    const auto b = cauchy_transform(k, lambda, tol);
    const auto hk = cauchy_transform(k, lambda, tol, hat_h.as_multiplier(), edges_of(h));
    const auto kh = cauchy_transform(h, lambda, tol, hat_k.as_multiplier(), edges_of(k));
    const Complex r = a.value * b.value - hk.value - kh.value;
    const double err = std::abs(a.value) * b.error_estimate + std::abs(b.value) * a.error_estimate +
                       hk.error_estimate + kh.error_estimate +
                       inner_tol * (inner_gain(h) + inner_gain(k));
    record(out, std::abs(r), err);
  }
  return out;
}

IdentityCheck check_power_identity(const DensitySpec& h, int n, const std::vector<Complex>& points,
                                   double tol) {
  if (n < 1 || n > 4) throw Error(ErrorCode::kInvalidArgument, "power identity needs 1 <= N <= 4");
  const double inner_tol = kInnerFraction * tol;
  MemoMultiplier weight([&](Complex u) {
    return std::pow(cauchy_transform(h, u, inner_tol).value, n - 1);
  });
  IdentityCheck out;
  for (const Complex lambda : points) {
    const auto a = cauchy_transform(h, lambda, tol);
    if (n == 1) {
      // Both sides are the same transform.
      const auto rhs = cauchy_transform(h, lambda, tol);
      record(out, std::abs(a.value - rhs.value), 0.0);
      continue;
    }
    const auto rhs = cauchy_transform(h, lambda, tol, weight.as_multiplier());
    const Complex r = std::pow(a.value, n) - static_cast<double>(n) * rhs.value;
    const double err = n * std::pow(std::abs(a.value), n - 1) * a.error_estimate +
                       n * rhs.error_estimate + n * (n - 1) * inner_tol * inner_gain(h);
    record(out, std::abs(r), err);
  }
  return out;
}

H0Context make_h0_context(const DensitySpec& g, Complex w, double tol) {
  require_finite(w, "w");
  // C = -(1/pi) \int g / conj(u - w) = -conj(hat{g}(w)) for real g.
  const auto t = cauchy_transform(g, w, tol);
  return H0Context{g, w, -std::conj(t.value)};
}

double check_h0_binomial(const H0Context& ctx, int n, Complex lambda, double tol) {
  if (n < 1 || n > 3) throw Error(ErrorCode::kInvalidArgument, "binomial check needs 1 <= N <= 3");
  require_finite(lambda, "lambda");
  if (lambda == ctx.w) throw Error(ErrorCode::kInvalidPoint, "binomial check needs lambda != w");
  const double inner_tol = kInnerFraction * tol;
  // hat{h}(z) = (1/pi) \int g / (conj(u - w)(u - z)) = -f_w(z).
  const auto hat_h = [&](Complex z, double t, const Multiplier& m = {}) {
    return -integrate_bi_singular(ctx.g, ctx.w, z, t, m).value;
  };
  MemoMultiplier weight([&](Complex u) {
    const Complex s = std::pow(u - ctx.w, n);
    return n == 1 ? s : s * std::pow(hat_h(u, inner_tol), n - 1);
  });
  const Complex z = lambda - ctx.w;
  const Complex lhs = std::pow(hat_h(lambda, tol), n);
  const Complex zn = std::pow(z, n);
  const Complex rhs = std::pow(ctx.c, n) / zn +
                      static_cast<double>(n) / zn * hat_h(lambda, tol, weight.as_multiplier());
  return std::abs(lhs - rhs);
}

const char* to_string(RepresentationRegime r) noexcept {
  switch (r) {
    case RepresentationRegime::kOutsideSupport: return "outside_support";
    case RepresentationRegime::kFiniteDiagonal: return "finite_diagonal";
    case RepresentationRegime::kDensityPoint: return "density_point";
  }
  return "unknown";
}

RepresentationCheck check_representation(const DensitySpec& g, Complex w,
                                         const std::vector<Complex>& points, double tol,
                                         unsigned threads) {
  require_finite(w, "w");
  for (const Complex l : points) {
    if (l == w) throw Error(ErrorCode::kInvalidPoint, "representation check needs lambda != w");
  }
  RepresentationCheck out;
  if (!is_divergent(integrate_diagonal(g, w, tol))) {
    bool outside = true;
    for (const Term& t : flatten(g)) {
      if (t.coeff > 0.0 && distance_to(t.region, w) <= 0.0) outside = false;
    }
    out.regime = outside ? RepresentationRegime::kOutsideSupport
                         : RepresentationRegime::kFiniteDiagonal;
  } else {
    double gamma = 0.0;
    try {
      gamma = estimate_density(g, w, RadialSchedule::defaults_for(g)).gamma;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNonConvergent) throw;
    }
    if (!(gamma >= kMinDensity)) {
      throw Error(ErrorCode::kRegimeUnverified,
                  "diagonal integral diverges and w is not a point of positive density");
    }
    out.regime = RepresentationRegime::kDensityPoint;
    out.gamma = gamma;
  }

  const double inner_tol = kInnerFraction * tol;
  MemoMultiplier e_w([&](Complex u) { return eval_E(g, u, w, inner_tol).value; });
  std::vector<double> res(points.size());
  std::vector<double> err(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const Complex lambda = points[i];
    const KernelValue e = eval_E(g, lambda, w, tol);
    // -(1/pi) \int E(u,w) g / (conj(u-w)(u-lambda)) is f_w with multiplier E(., w).
    const auto f = integrate_bi_singular(g, w, lambda, tol, e_w.as_multiplier());
    res[i] = std::abs(e.value - 1.0 - f.value);
    err[i] = e.error_estimate + f.error_estimate + 2.0 * inner_tol * inner_gain(g);
  });
  for (std::size_t i = 0; i < points.size(); ++i) record(out.identity, res[i], err[i]);
  return out;
}

DbarStencil dbar_stencil(const DensitySpec& g, Complex point, double h, double tol) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "stencil spacing must be positive");
  const Complex ih(0.0, h);
  double err = 0.0;
  const auto F = [&](Complex z) {
    const auto r = cauchy_transform(g, z, tol);
    err += r.error_estimate;
    return r.value;
  };
  const Complex dx = (F(point + h) - F(point - h)) / (2.0 * h);
  const Complex dy = (F(point + ih) - F(point - ih)) / (2.0 * h);
  return DbarStencil{0.5 * (dx + Complex(0.0, 1.0) * dy), -eval_density(g, point), err / h};
}

}  // namespace ekernel
