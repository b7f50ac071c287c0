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
#include "suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <variant>

#include "ekernel/analysis.hpp"
#include "ekernel/cauchy.hpp"
#include "ekernel/kernel.hpp"
#include "ekernel/parallel.hpp"
#include "ekernel/quadrature.hpp"
#include "ekernel/shift.hpp"

namespace ekernel::tools {
namespace {

double tol_or(const SuiteOptions& o, double fallback) { return o.tol.value_or(fallback); }

double dist_to_circle(Complex z) { return std::abs(std::abs(z) - 1.0); }

// Pairs (lambda, w) with min(|lambda - w|, distances to the circle) >= 0.05.
// Cycles through in/in, in/out, out/out and out/in.
std::vector<std::pair<Complex, Complex>> unit_disc_pairs(Mcg64& rng, int count) {
  std::vector<std::pair<Complex, Complex>> out;
  const auto draw = [&rng](bool inside) {
    for (;;) {
      const double r = inside ? uniform(rng, 0.0, 0.95) : uniform(rng, 1.05, 3.0);
      const Complex z = std::polar(r, uniform(rng, 0.0, 2.0 * kPi));
      if (dist_to_circle(z) >= 0.05) return z;
    }
  };
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const int regime = i % 4;
    const Complex l = draw(regime == 0 || regime == 1);
    const Complex w = draw(regime == 0 || regime == 3);
    if (std::abs(l - w) >= 0.05) out.emplace_back(l, w);
  }
  return out;
}

void track(SuiteReport& rep, const KernelValue& v) { rep.converged = rep.converged && v.converged; }

SuiteReport disc_closed_forms(const SuiteOptions& o) {
  SuiteReport rep{"disc-closed-forms", {}, true};
  auto rng = make_mcg(o.seed);

  // Unit-disc closed form against quadrature.
  {
    const double tol = tol_or(o, 1e-5);
    const DensitySpec d = unit_disc_density();
    const auto pairs = unit_disc_pairs(rng, 25);
    std::vector<double> dev(pairs.size());
    std::vector<KernelValue> vals(pairs.size());
    parallel_for(pairs.size(), o.threads, [&](std::size_t i) {
      vals[i] = eval_E(d, pairs[i].first, pairs[i].second, tol);
      dev[i] = std::abs(vals[i].value - eval_E_unit_disc(pairs[i].first, pairs[i].second));
    });
    for (const auto& v : vals) track(rep, v);
    rep.add("unit-disc closed form, 25 pairs", *std::max_element(dev.begin(), dev.end()), 1e-4);
  }

  // D_{lambda,alpha} and Delta_{lambda,beta} integrals at two unrelated pairs.
  {
    const double tol = tol_or(o, 1e-7);
    const std::pair<Complex, Complex> pairs[] = {{Complex(0.3, 0.1), Complex(-0.2, 0.4)},
                                                 {Complex(2.0, 1.0), Complex(-1.0, 3.0)}};
    double worst_re = 0.0;
    double worst_im = 0.0;
    for (const auto& [l, w] : pairs) {
      const MobiusDiscParams p{l, w};
      for (const double a : {-2.0, -1.0 / 3.0, 0.0, 0.5, 3.0}) {
        const Disk d = p.alpha_disc(a);
        const auto f = integrate_bi_singular(disc_density(d.center, d.radius), w, l, tol);
        worst_re = std::max(worst_re, std::abs(f.value.real() - disc_real_integral(a)));
      }
      for (const double b : {-2.0, -0.5, 0.5, 2.0}) {
        const Disk d = p.beta_disc(b);
        const auto f = integrate_bi_singular(disc_density(d.center, d.radius), w, l, tol);
        worst_im = std::max(worst_im, std::abs(f.value.imag() - disc_imag_integral(b)));
      }
    }
    rep.add("real-part integral over D_{lambda,alpha}", worst_re, 1e-4);
    rep.add("imaginary-part integral over Delta_{lambda,beta}", worst_im, 1e-4);
  }

  // |E| <= 2 on random fixtures, equality at antipodal boundary points.
  {
    const double tol = tol_or(o, 1e-6);
    std::vector<DensitySpec> gs;
    std::vector<std::pair<Complex, Complex>> pts;
    for (int i = 0; i < 200; ++i) {
      gs.push_back(random_density(rng));
      pts.emplace_back(random_point(rng, 2.5), random_point(rng, 2.5));
    }
    std::vector<KernelValue> vals(gs.size());
    parallel_for(gs.size(), o.threads, [&](std::size_t i) {
      vals[i] = eval_E(gs[i], pts[i].first, pts[i].second, tol);
    });
    double excess = 0.0;
    for (const auto& v : vals) {
      track(rep, v);
      excess = std::max(excess, std::abs(v.value) - 2.0);
    }
    rep.add("max(|E| - 2) over 200 random fixtures", std::max(0.0, excess), 1e-6);
    rep.add("antipodal closed form |E_D(1,-1) - 2|", std::abs(eval_E_unit_disc(1.0, -1.0) - 2.0), 0.0);
  }

  // Diagonal dichotomy for the unit disc.
  {
    const double tol = tol_or(o, 1e-7);
    const DensitySpec d = unit_disc_density();
    bool divergent = true;
    for (const double r : {0.0, 0.5, 0.9}) {
      divergent = divergent && is_divergent(integrate_diagonal(d, std::polar(r, 0.7), tol));
    }
    rep.add_flag("diagonal divergent for |w| in {0, 0.5, 0.9}", divergent);
    double worst = 0.0;
    bool finite = true;
    for (const double r : {1.5, 2.0, 4.0}) {
      const auto m = integrate_diagonal(d, std::polar(r, 0.7), tol);
      if (const auto* f = std::get_if<FiniteMass>(&m)) {
        worst = std::max(worst, std::abs(f->value + std::log(1.0 - 1.0 / (r * r))));
      } else {
        finite = false;
      }
    }
    rep.add_flag("diagonal finite for |w| in {1.5, 2, 4}", finite);
    rep.add("diagonal value vs -ln(1 - 1/|w|^2)", worst, 1e-4);
  }

  // Hermitian symmetry, multiplicativity, covariance, Swiss-cheese factorization.
  {
    const double tol = tol_or(o, 1e-6);
    constexpr int kFixtures = 50;
    struct Fixture {
      DensitySpec g1, g2;
      Complex l, w, shift;
      double rho;
    };
    std::vector<Fixture> fx;
    for (int i = 0; i < kFixtures; ++i) {
      Fixture f{random_density(rng), scaled(random_density(rng), 0.5), random_point(rng, 2.0),
                random_point(rng, 2.0), random_point(rng, 1.0), uniform(rng, 0.5, 2.0)};
      if (f.g1.grid && f.g2.grid) f.g2.grid.reset();
      f.g1 = scaled(f.g1, 0.5);
      fx.push_back(std::move(f));
    }
    std::vector<double> herm(fx.size()), mult(fx.size()), cov(fx.size());
    parallel_for(fx.size(), o.threads, [&](std::size_t i) {
      const Fixture& f = fx[i];
      const Complex e = eval_E(f.g1, f.l, f.w, tol).value;
      herm[i] = std::abs(e - std::conj(eval_E(f.g1, f.w, f.l, tol).value));
      const Complex e12 = eval_E(sum(f.g1, f.g2), f.l, f.w, tol).value;
      mult[i] = std::abs(e12 - e * eval_E(f.g2, f.l, f.w, tol).value);
      const auto sigma = [&f](Complex z) { return f.rho * z + f.shift; };
      cov[i] = std::abs(eval_E(transformed(f.g1, f.rho, f.shift), sigma(f.l), sigma(f.w), tol).value - e);
    });
    rep.add("Hermitian symmetry, 50 fixtures", *std::max_element(herm.begin(), herm.end()), 1e-4);
    rep.add("density-sum multiplicativity, 50 fixtures", *std::max_element(mult.begin(), mult.end()), 1e-4);
    rep.add("translation/dilation covariance, 50 fixtures", *std::max_element(cov.begin(), cov.end()), 1e-4);

    std::vector<double> cheese(10);
    std::vector<std::pair<Complex, Complex>> cp;
    for (int i = 0; i < 10; ++i) cp.emplace_back(random_point(rng, 1.5), random_point(rng, 1.5));
    parallel_for(cheese.size(), o.threads, [&](std::size_t i) {
      const DensitySpec g = swiss_cheese(o.seed * 100 + i, 1 + static_cast<int>(i % 5), 0.5);
      const auto [l, w] = cp[i];
      cheese[i] = std::abs(eval_E_signed_discs(g, l, w) - eval_E(g, l, w, tol).value);
    });
    rep.add("Swiss-cheese factorization, 10 fixtures", *std::max_element(cheese.begin(), cheese.end()), 1e-3);
  }
  return rep;
}

SuiteReport tails(const SuiteOptions& o) {
  SuiteReport rep{"tails", {}, true};
  bool positive = true;
  bool decreasing = true;
  double worst_tail = 0.0;
  double prev_re = INFINITY;
  double prev_im = INFINITY;
  for (int n = 2; n <= 1024; n *= 2) {
    const double re = tail_bound_real(n);
    const double im = tail_bound_imag(n);
    positive = positive && re > 0.0 && im > 0.0;
    decreasing = decreasing && re < prev_re && im < prev_im;
    if (n >= 64) worst_tail = std::max({worst_tail, re, im});
    prev_re = re;
    prev_im = im;
  }
  rep.add_flag("tail bounds positive", positive);
  rep.add_flag("tail bounds strictly decreasing over N = 2..1024", decreasing);
  rep.add("largest tail bound for N >= 64", worst_tail, 1e-2);

  const double tol = tol_or(o, 1e-7);
  const Complex l(0.4, -0.2);
  const Complex w(-0.1, 0.3);
  const MobiusDiscParams p{l, w};
  const auto part = [&](const Disk& d) {
    return integrate_bi_singular(disc_density(d.center, d.radius), w, l, tol).value;
  };
  const double re = std::abs(part(p.alpha_disc(2.0)).real()) + std::abs(part(p.alpha_disc(2.0 / 3.0)).real());
  const double im = std::abs(part(p.beta_disc(0.5)).imag()) + std::abs(part(p.beta_disc(-0.5)).imag());
  rep.add("real tail at N = 2, quadrature vs closed form", std::abs(re - tail_bound_real(2.0)), 1e-3);
  rep.add("imaginary tail at N = 2, quadrature vs closed form", std::abs(im - tail_bound_imag(2.0)), 1e-3);
  return rep;
}

SuiteReport representation(const SuiteOptions& o) {
  SuiteReport rep{"representation", {}, true};
  const double tol = tol_or(o, 1e-5);
  const DensitySpec d = unit_disc_density();
  const std::vector<Complex> exterior_w = {3.0, 0.5, Complex(0.0, 0.5), Complex(-3.0, 1.0),
                                           Complex(1.5, 1.5), Complex(-0.3, -0.4),
                                           Complex(0.0, -2.0), 0.0};
  const std::vector<Complex> interior_w = {0.5, Complex(0.3, 0.4), Complex(-0.8, 0.0),
                                           Complex(0.0, -0.2), Complex(0.1, 0.1),
                                           Complex(-0.4, -0.6)};
  const auto a = check_representation(d, 2.0, exterior_w, tol, o.threads);
  rep.add("representation, 1_D, w = 2 (" + std::string(to_string(a.regime)) + ")",
          a.identity.max_residual, 1e-3);
  const auto b = check_representation(d, 0.0, interior_w, tol, o.threads);
  rep.add("representation, 1_D, w = 0 (" + std::string(to_string(b.regime)) + ")",
          b.identity.max_residual, 1e-3);
  return rep;
}

SuiteReport cauchy_algebra(const SuiteOptions& o) {
  SuiteReport rep{"cauchy-algebra", {}, true};
  const double tol = tol_or(o, 1e-5);
  const DensitySpec d = unit_disc_density();
  const DensitySpec k = disc_density(Complex(0.3, 0.2), 0.5);
  const std::vector<Complex> panel = {0.0, 2.0, 0.5, Complex(0.3, 0.2), Complex(-0.5, 0.6),
                                      Complex(1.5, -1.0), Complex(0.0, -0.9), Complex(-1.2, 0.0),
                                      Complex(0.6, 0.6), Complex(0.9, -0.3), Complex(-0.1, 0.95),
                                      Complex(2.5, 2.5)};
  const auto p1 = check_product_identity(d, d, panel, tol);
  rep.add("product identity, h = k = 1_D, 12 points", p1.max_residual, 1e-3);
  const auto p2 = check_product_identity(d, k, panel, tol);
  rep.add("product identity, h = 1_D, k = 1_D(0.3+0.2i, 0.5), 12 points", p2.max_residual, 1e-3);
  rep.add("power identity N = 1 (exact)", check_power_identity(k, 1, panel, tol).max_residual, 0.0);
  const auto pw = check_power_identity(d, 2, panel, tol);
  rep.add("power identity N = 2, h = 1_D", pw.max_residual, 1e-3);

  const auto ctx = make_h0_context(annulus_density(0.0, 0.5, 1.0), 0.0, tol);
  rep.add("h0 constant C for the radial annulus", std::abs(ctx.c), 1e-6);
  double worst = 0.0;
  for (const int n : {1, 2}) {
    for (const Complex l : {Complex(0.7), Complex(1.5), Complex(0.2, 0.3), Complex(-0.6, 0.6)}) {
      worst = std::max(worst, check_h0_binomial(ctx, n, l, tol));
    }
  }
  rep.add("h0 binomial identity, annulus(0, 0.5, 1), N <= 2", worst, 2e-3);

  const auto s = dbar_stencil(d, Complex(0.2, 0.1), 1e-2, std::min(tol, 1e-9));
  rep.add("-dbar of the Cauchy transform of 1_D reproduces 1", std::abs(s.dbar - s.expected), 1e-2);
  return rep;
}

SuiteReport shift(const SuiteOptions& o) {
  SuiteReport rep{"shift", {}, true};
  auto rng = make_mcg(o.seed + 7);
  double inner = 0.0;
  for (int i = 0; i < 40; ++i) {
    const Complex l = std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, 2.0 * kPi));
    const Complex w = std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, 2.0 * kPi));
    inner = std::max(inner, check_shift_identity(l, w, kDefaultTruncation, 1e-10));
  }
  rep.add("shift identity, 40 interior pairs, N = 256", inner, 1e-10);
  double outer = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex l = std::polar(uniform(rng, 1.0, 3.0), uniform(rng, 0.0, 2.0 * kPi));
    const Complex w = std::polar(uniform(rng, 1.0, 3.0), uniform(rng, 0.0, 2.0 * kPi));
    outer = std::max(outer, check_shift_identity(l, w, kDefaultTruncation, 1e-12));
  }
  rep.add("shift identity, 20 exterior pairs", outer, 1e-12);

  const double tol = tol_or(o, 1e-7);
  for (const double a : {-1.0 / 3.0, 0.0}) {
    const auto m = check_mobius_transfer(a, Complex(0.2, 0.1), Complex(-0.3, 0.5), tol);
    rep.add("Mobius transfer, alpha = " + format_double(a), m.residual, 1e-4);
  }

  double norm_dev = 0.0;
  bool dichotomy = true;
  const DensitySpec d = unit_disc_density();
  for (const double r : {0.0, 0.3, 0.6, 0.9, 1.0, 1.5, 2.0, 4.0}) {
    const Complex w = std::polar(r, 1.1);
    const double norm = resolvent_coeffs(w).vector.norm();
    norm_dev = std::max(norm_dev, std::abs(norm - (r < 1.0 ? 1.0 : 1.0 / r)));
    if (r != 1.0) dichotomy = dichotomy && (is_divergent(integrate_diagonal(d, w, tol)) == (r < 1.0));
  }
  rep.add("resolvent norms: 1 inside, 1/|w| outside", norm_dev, 1e-6);
  rep.add_flag("diagonal divergence matches ||resolvent|| = 1", dichotomy);
  return rep;
}

SuiteReport lipschitz(const SuiteOptions& o) {
  SuiteReport rep{"lipschitz", {}, true};
  const double tol = tol_or(o, 1e-7);
  const DensitySpec d = unit_disc_density();
  struct Fixture {
    const char* name;
    DensitySpec g;
    Complex w;
    double gamma;
  };
  const Fixture fx[] = {{"1_D at 0", d, 0.0, 1.0},
                        {"1_D at 1", d, 1.0, 0.5},
                        {"0.3 1_D at 0", scaled(d, 0.3), 0.0, 0.3}};
  for (std::size_t i = 0; i < std::size(fx); ++i) {
    const Fixture& f = fx[i];
    const auto sched = RadialSchedule::defaults_for(f.g);
    const double g = estimate_density(f.g, f.w, sched, tol).gamma;
    rep.add(std::string("density estimate, ") + f.name, std::abs(g - f.gamma), 0.02);
    const auto lip = estimate_lipschitz_exponent(f.g, f.w, sched, 8, tol, o.threads);
    rep.add(std::string("slope margin gamma - 0.1 - slope, ") + f.name,
            std::max(0.0, g - 0.1 - lip.fit.slope), 0.0);
    if (i == 0) {
      rep.add("Lipschitz slope for 1_D at 0, r = 2^-3..2^-10", std::abs(lip.fit.slope - 2.0), 0.1);
    }
  }
  return rep;
}

}  // namespace

void SuiteReport::add(std::string name, double residual, double threshold) {
  checks.push_back({std::move(name), residual, threshold, residual <= threshold});
}

void SuiteReport::add_flag(std::string name, bool ok) {
  checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok});
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"disc-closed-forms", "tails", "representation",
                                                 "cauchy-algebra", "shift", "lipschitz"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.tol && !(*options.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (name == "disc-closed-forms") return disc_closed_forms(options);
  if (name == "tails") return tails(options);
  if (name == "representation") return representation(options);
  if (name == "cauchy-algebra") return cauchy_algebra(options);
  if (name == "shift") return shift(options);
  if (name == "lipschitz") return lipschitz(options);
  throw Error(ErrorCode::kInvalidArgument, "unknown suite: " + name);
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "\n";
  for (const auto& c : report.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << "  residual=" << format_double(c.residual)
       << "  threshold=" << format_double(c.threshold) << "\n";
  }
  os << "overall " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

DensitySpec random_density(Mcg64& rng) {
  const int kind = static_cast<int>(uniform01(rng) * 5.0);
  const Complex c = random_point(rng, 1.0);
  const double coeff = uniform(rng, 0.2, 1.0);
  switch (kind) {
    case 0:
      return disc_density(c, uniform(rng, 0.2, 1.2), coeff);
    case 1: {
      const double a = uniform(rng, 0.1, 0.5);
      return annulus_density(c, a, a + uniform(rng, 0.2, 0.8), coeff);
    }
    case 2: {
      const Complex half(uniform(rng, 0.1, 0.8), uniform(rng, 0.1, 0.8));
      return DensitySpec{{{Rectangle{c - half, c + half}, coeff}}, std::nullopt, c, std::abs(half)};
    }
    case 3:
      return swiss_cheese(rng(), 1 + static_cast<int>(uniform01(rng) * 4.0), uniform(rng, 0.2, 0.6));
    default: {
      DensityGrid grid{c - Complex(0.5, 0.5), 0.25, 4, 4, std::vector<double>(16)};
      for (auto& v : grid.values) v = uniform01(rng);
      return DensitySpec{{}, grid, c, std::sqrt(0.5)};
    }
  }
}

Complex random_point(Mcg64& rng, double radius) {
  return std::polar(radius * std::sqrt(uniform01(rng)), uniform(rng, 0.0, 2.0 * kPi));
}

}  // namespace ekernel::tools
