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
#include "ekernel/adaptive.hpp"
#include "ekernel/geometry.hpp"

#include <cmath>

using namespace ekernel;
using namespace ekernel::geom;

TEST_CASE("ray sections through each shape") {
  const auto s = clip_ray(Disk{0.0, 1.0}, 0.0, 1.0);
  REQUIRE(s.count == 1);
  CHECK(s.parts[0].lo == 0.0);
  CHECK(s.parts[0].hi == doctest::Approx(1.0));

  const auto a = clip_ray(Annulus{0.0, 0.5, 1.0}, Complex(-2.0, 0.0), 1.0);
  REQUIRE(a.count == 2);
  CHECK(a.parts[0].lo == doctest::Approx(1.0));
  CHECK(a.parts[0].hi == doctest::Approx(1.5));
  CHECK(a.parts[1].lo == doctest::Approx(2.5));
  CHECK(a.parts[1].hi == doctest::Approx(3.0));

  const auto r = clip_ray(Rectangle{Complex(1, -1), Complex(2, 1)}, 0.0, std::polar(1.0, kPi / 4));
  REQUIRE(r.count == 1);
  CHECK(r.parts[0].lo == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.parts[0].hi == doctest::Approx(std::sqrt(2.0)));  // touches the corner only

  CHECK(clip_ray(Disk{3.0, 1.0}, 0.0, -1.0).empty());
}

TEST_CASE("half-plane and window clipping") {
  const auto h = nearer_half(0.0, 2.0);  // points with Re u <= 1
  auto s = section(Disk{0.0, 3.0}, h, Window{}, 0.0, 1.0);
  REQUIRE(s.count == 1);
  CHECK(s.parts[0].hi == doctest::Approx(1.0));
  s = section(Disk{0.0, 3.0}, std::nullopt, Window{0.5, 2.0}, 0.0, Complex(0, 1));
  REQUIRE(s.count == 1);
  CHECK(s.parts[0].lo == 0.5);
  CHECK(s.parts[0].hi == 2.0);
}

TEST_CASE("breakpoint angles include tangents and corners") {
  const auto t = breakpoint_angles(Disk{2.0, 1.0}, std::nullopt, Window{}, 0.0);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == doctest::Approx(kPi / 6));
  CHECK(t[1] == doctest::Approx(2 * kPi - kPi / 6));
  const auto c = breakpoint_angles(Rectangle{Complex(1, 1), Complex(2, 2)}, std::nullopt, Window{}, 0.0);
  CHECK(c.size() == 3);  // the two diagonal corners are collinear with the origin
}

TEST_CASE("adaptive Gauss-Kronrod integrates smooth and kinked functions") {
  const auto r = integrate_1d([](double x) { return Complex(std::exp(x), std::sin(x)); }, 0.0, 1.0,
                              AdaptiveOptions{1e-13});
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(r.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
  const auto k = integrate_1d([](double x) { return Complex(std::abs(x - 0.3)); }, 0.0, 1.0,
                              AdaptiveOptions{1e-11});
  CHECK(k.converged);
  CHECK(std::abs(k.value.real() - (0.045 + 0.245)) <= 1e-11);
  CHECK(std::abs(k.value.real() - 0.29) <= k.error + 1e-15);
}

TEST_CASE("pairwise summation is order-fixed") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / (1.0 + static_cast<double>(i));
  const double a = pairwise_sum(v);
  const double b = pairwise_sum(v);
  CHECK(a == b);
  CHECK(a == doctest::Approx(7.485470860550345));
}
