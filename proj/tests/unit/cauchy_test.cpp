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
#include "doctest.h"
#include "ekernel/cauchy.hpp"
#include "ekernel/quadrature.hpp"

#include <cmath>
#include <string>

using namespace ekernel;

namespace {

const std::vector<Complex> kPoints{Complex(0.3, 0.2), Complex(1.4, -0.5)};

}  // namespace

TEST_CASE("power identity") {
  const auto g = unit_disc_density();
  const auto one = check_power_identity(g, 1, kPoints, 1e-8);
  CHECK(one.max_residual == 0.0);
  const auto two = check_power_identity(g, 2, kPoints, 1e-7);
  REQUIRE(two.residuals.size() == kPoints.size());
  CHECK(two.max_residual <= two.error_budget + 1e-6);
  CHECK_THROWS_AS(check_power_identity(g, 5, kPoints, 1e-6), Error);
  CHECK_THROWS_AS(check_power_identity(g, 0, kPoints, 1e-6), Error);
}

TEST_CASE("product identity with signed coefficients") {
  const auto h = disc_density(Complex(0.1, 0.0), 0.6, 0.7);
  const auto k = annulus_density(Complex(-0.2, 0.1), 0.2, 0.5, -0.4);
  const auto c = check_product_identity(h, k, kPoints, 1e-7);
  CHECK(c.max_residual <= c.error_budget + 1e-6);
}

TEST_CASE("binomial identity for h_w") {
  const auto ctx = make_h0_context(unit_disc_density(), Complex(0.2, 0.0), 1e-9);
  // C = -(1/pi) \int_D 1/conj(u - w) = conj(w) inside the disc.
  CHECK(std::abs(ctx.c - Complex(0.2, 0.0)) <= 1e-8);
  for (int n = 1; n <= 2; ++n) {
    CHECK(check_h0_binomial(ctx, n, Complex(0.7, 0.3), 1e-7) <= 1e-6);
  }
  CHECK_THROWS_AS(check_h0_binomial(ctx, 4, Complex(0.7, 0.3), 1e-6), Error);
  CHECK_THROWS_AS(check_h0_binomial(ctx, 1, Complex(0.2, 0.0), 1e-6), Error);
}

TEST_CASE("representation in each regime") {
  const std::vector<Complex> pts{Complex(0.5, 0.4), Complex(-0.6, -0.2)};
  const auto g = unit_disc_density();
  const auto out = check_representation(g, 1.5, pts, 1e-8);
  CHECK(out.regime == RepresentationRegime::kOutsideSupport);
  CHECK(out.identity.max_residual <= 1e-6);

  const auto in = check_representation(g, Complex(0.1, 0.1), pts, 1e-8);
  CHECK(in.regime == RepresentationRegime::kDensityPoint);
  CHECK(in.gamma == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(in.identity.max_residual <= 1e-6);

  DensitySpec holed = g;
  holed.terms.push_back({Disk{Complex(-0.2, 0.0), 0.2}, -1.0});
  const auto hole = check_representation(holed, Complex(-0.2, 0.0), pts, 1e-8);
  CHECK(hole.regime == RepresentationRegime::kFiniteDiagonal);
  CHECK(hole.identity.max_residual <= 1e-6);
  CHECK(std::string(to_string(RepresentationRegime::kFiniteDiagonal)).size() > 0);

  try {
    check_representation(scaled(g, 0.05), 0.0, pts, 1e-6);
    FAIL("expected RegimeUnverified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRegimeUnverified);
  }
}

TEST_CASE("d-bar stencil recovers the density") {
  const auto g = unit_disc_density();
  const auto s = dbar_stencil(g, Complex(0.3, -0.2), 1e-3, 1e-11);
  CHECK(s.expected == -1.0);
  CHECK(std::abs(s.dbar - s.expected) <= s.error_bound + 1e-6);
  const auto o = dbar_stencil(g, Complex(1.5, 0.5), 1e-3, 1e-11);
  CHECK(o.expected == 0.0);
  CHECK(std::abs(o.dbar) <= o.error_bound + 1e-6);
}
