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
#include "ekernel/analysis.hpp"

#include <cmath>

using namespace ekernel;

TEST_CASE("line fit and schedule") {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 5.0, 7.0};
  const auto f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.rms <= 1e-14);
  const RadialSchedule s{0.5, 0.25, 3};
  const auto r = s.radii();
  REQUIRE(r.size() == 3);
  CHECK(r[2] == doctest::Approx(0.5 / 16));
  const auto d = RadialSchedule::defaults_for(disc_density(0.0, 2.0));
  CHECK(d.r0 == doctest::Approx(2.0 / 8));
  CHECK(d.count == 8);
}

TEST_CASE("density estimates at interior, boundary, corner and exterior points") {
  const RadialSchedule s;
  CHECK(estimate_density(unit_disc_density(), 0.0, s).gamma == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(estimate_density(unit_disc_density(), 1.0, s).gamma == doctest::Approx(0.5).epsilon(2e-3));
  const DensitySpec rect{{{Rectangle{Complex(0, 0), Complex(1, 1)}, 1.0}}, std::nullopt, Complex(0.5, 0.5), 1.0};
  CHECK(estimate_density(rect, 0.0, s).gamma == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(estimate_density(annulus_density(0.0, 0.5, 1.0), 0.0, s).gamma == 0.0);
  CHECK(estimate_density(scaled(unit_disc_density(), 0.3), 0.0, s).gamma ==
        doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("Lipschitz exponent is twice the density") {
  const RadialSchedule s;
  const auto full = estimate_lipschitz_exponent(unit_disc_density(), 0.0, s);
  CHECK(full.fit.slope == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(full.radii.size() == 8);
  CHECK(full.max_abs_e.size() == 8);
  const auto half = estimate_lipschitz_exponent(scaled(unit_disc_density(), 0.5), 0.0, s);
  CHECK(half.fit.slope == doctest::Approx(1.0).epsilon(1e-4));
  const auto edge = estimate_lipschitz_exponent(unit_disc_density(), 1.0, s, 16, 1e-7, 2);
  CHECK(edge.fit.slope == doctest::Approx(1.0).epsilon(0.02));
  try {
    estimate_lipschitz_exponent(unit_disc_density(), 2.0, s);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionFailed);
  }
}

TEST_CASE("annulus mass grows logarithmically") {
  const std::vector<double> ts{0.5, 0.1, 0.01, 1e-3, 1e-4};
  const auto b = check_annulus_bound(unit_disc_density(), 1.0, ts, 0.05);
  CHECK(b.gamma == doctest::Approx(1.0).epsilon(1e-6));
  REQUIRE(b.rows.size() == ts.size());
  for (const auto& row : b.rows) {
    // (1/(2 pi)) \int_{t <= |u| < 1} |u|^-2 = ln(1/t)
    CHECK(row.lhs == doctest::Approx(-std::log(row.t)).epsilon(1e-8));
    CHECK(row.holds);
  }
  CHECK_THROWS_AS(check_annulus_bound(unit_disc_density(), 1.0, {1.5}, 0.05), Error);
}
