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
#include "ekernel/kernel.hpp"
#include "ekernel/shift.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace ekernel;

TEST_CASE("resolvent coefficients") {
  const Complex l(0.3, -0.4);
  const auto r = resolvent_coeffs(l, 40);
  CHECK(r.regime == ShiftRegime::kInside);
  REQUIRE(r.vector.truncation() == 40);
  CHECK(std::abs(r.vector.coeffs[0] + l) <= 1e-15);
  Complex p = 1.0;
  for (std::size_t k = 1; k < 40; ++k) {
    CHECK(std::abs(r.vector.coeffs[k] - (1.0 - std::norm(l)) * p) <= 1e-15);
    p *= std::conj(l);
  }
  // (z - l)/(1 - conj(l) z) is inner, so the norm is 1 up to the tail.
  CHECK(r.vector.norm() == doctest::Approx(1.0).epsilon(1e-12));

  const auto o = resolvent_coeffs(Complex(0.0, 2.0), 8);
  CHECK(o.regime == ShiftRegime::kOutside);
  CHECK(std::abs(o.vector.coeffs[0] + 1.0 / Complex(0.0, -2.0)) <= 1e-15);
  for (std::size_t k = 1; k < 8; ++k) CHECK(o.vector.coeffs[k] == Complex(0.0));
  CHECK(resolvent_coeffs(Complex(0.6, 0.8), 4).regime == ShiftRegime::kOutside);
  CHECK_THROWS_AS(resolvent_coeffs(0.5, 1), Error);
}

TEST_CASE("inner products") {
  const CoeffVector a{{Complex(1, 1), Complex(2, 0), Complex(0, 3)}};
  const CoeffVector b{{Complex(0, 1), Complex(1, 0)}};
  CHECK(std::abs(h2_inner(a, b) - (Complex(1, 1) * Complex(0, -1) + 2.0)) <= 1e-15);
  CHECK(std::abs(h2_inner(a, a) - a.norm() * a.norm()) <= 1e-13);
  const auto ip = h2_inner(resolvent_coeffs(0.5, 64), resolvent_coeffs(Complex(0, 0.5), 64));
  CHECK(ip.tail_bound > 0.0);
  CHECK(ip.tail_bound < 1e-15);
}

TEST_CASE("shift model reproduces the unit-disc kernel") {
  std::mt19937_64 eng(2);
  std::uniform_real_distribution<double> u(-1.8, 1.8);
  int checked = 0;
  while (checked < 40) {
    const Complex l(u(eng), u(eng)), w(u(eng), u(eng));
    if (std::abs(l) > 0.8 && std::abs(l) < 1.0) continue;  // keep the tail small
    if (std::abs(w) > 0.8 && std::abs(w) < 1.0) continue;
    const auto ip = h2_inner(resolvent_coeffs(w), resolvent_coeffs(l));
    CHECK(std::abs(1.0 - ip.value - oracle::unit_disc(l, w)) <= 1e-12);
    CHECK(check_shift_identity(l, w, kDefaultTruncation, 1e-10) <= 1e-12);
    ++checked;
  }
}

TEST_CASE("a truncation that cannot meet tol is reported") {
  try {
    check_shift_identity(Complex(0.99, 0.0), Complex(0.0, 0.99), 8, 1e-12);
    FAIL("expected TailTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTailTooLarge);
  }
}

TEST_CASE("Mobius transfer of the D_{lambda,alpha} disc") {
  const Complex l(0.25, 0.4), w(-0.3, 0.1);
  for (const double alpha : {-2.0, -0.5, 0.0, 0.5, 0.9}) {
    const auto m = check_mobius_transfer(alpha, l, w, 1e-10);
    CHECK(m.alpha == alpha);
    CHECK(std::abs(m.s_alpha - (1.0 + alpha) / (alpha - 1.0)) <= 1e-15);
    CHECK(m.residual <= 1e-8);
    // |E| over D_{lambda,alpha} is 2 / (1 + |alpha|) by the closed form.
    CHECK(std::abs(m.quadrature) == doctest::Approx(std::exp(disc_real_integral(alpha))).epsilon(1e-8));
  }
  CHECK_THROWS_AS(check_mobius_transfer(1.0, l, w, 1e-8), Error);
  CHECK_THROWS_AS(check_mobius_transfer(0.0, l, l, 1e-8), Error);
}
