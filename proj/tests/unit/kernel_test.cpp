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
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <string>

using namespace ekernel;

namespace {

void check_code(auto&& fn, ErrorCode code) {
  try {
    fn();
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("eval_E: documented unit-disc examples") {
  const auto d = unit_disc_density();
  const auto a = eval_E(d, 0.0, 0.5, 1e-10);
  CHECK(a.diagonal_case == DiagonalCase::kOffDiagonal);
  CHECK(std::abs(a.value - 0.25) <= 1e-9);
  CHECK(a.converged);
  CHECK(std::abs(eval_E(d, 2.0, 3.0, 1e-10).value - 5.0 / 6.0) <= 1e-9);
  CHECK(std::abs(eval_E(d, 0.5, 2.0, 1e-10).value - 0.75) <= 1e-9);

  const auto div = eval_E(d, 0.3, 0.3, 1e-8);
  CHECK(div.diagonal_case == DiagonalCase::kDiagonalDivergent);
  CHECK(div.value == Complex(0.0));
  const auto fin = eval_E(d, 2.0, 2.0, 1e-10);
  CHECK(fin.diagonal_case == DiagonalCase::kDiagonalFinite);
  CHECK(fin.value.real() == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(fin.value.imag() == 0.0);
  CHECK(std::string(to_string(DiagonalCase::kDiagonalDivergent)).size() > 0);
}

TEST_CASE("eval_E: zero density gives 1 everywhere") {
  const auto z = zero_density();
  CHECK(eval_E(z, Complex(0.1, 0.2), Complex(-0.3, 0.0), 1e-8).value == Complex(1.0));
  CHECK(eval_E(z, 0.4, 0.4, 1e-8).value == Complex(1.0));
}

TEST_CASE("closed forms agree with the oracle and with quadrature") {
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Complex c(0.3, -0.2);
  const double r = 0.8;
  const auto g = disc_density(c, r);
  for (int i = 0; i < 25; ++i) {
    const Complex l(u(eng), u(eng)), w(u(eng), u(eng));
    CHECK(std::abs(eval_E_unit_disc(l, w) - oracle::unit_disc(l, w)) <= 1e-13);
    const Complex exact = oracle::disc(c, r, l, w);
    CHECK(std::abs(eval_E_disc(c, r, l, w) - exact) <= 1e-13);
    const auto q = eval_E(g, l, w, 1e-9);
    CHECK(std::abs(q.value - exact) <= 3.0 * q.error_estimate + 1e-13);
  }
  // Boundary points count as outside.
  CHECK(std::abs(eval_E_unit_disc(1.0, 0.5) - 0.5) <= 1e-15);
  CHECK(std::abs(eval_E_unit_disc(0.0, Complex(0.0, 1.0)) - 1.0) <= 1e-15);
}

TEST_CASE("Hermitian symmetry of the kernel") {
  const auto g = swiss_cheese(11, 3, 0.5);
  const Complex l(0.2, 0.35), w(-0.4, -0.1);
  const auto a = eval_E(g, l, w, 1e-9);
  const auto b = eval_E(g, w, l, 1e-9);
  CHECK(std::abs(a.value - std::conj(b.value)) <= a.error_estimate + b.error_estimate);
}

TEST_CASE("signed discs: holes divide out") {
  DensitySpec holed = unit_disc_density();
  holed.terms.push_back({Disk{Complex(0.4, 0.1), 0.2}, -1.0});
  holed.terms.push_back({Disk{Complex(-0.5, -0.3), 0.15}, -1.0});
  std::mt19937_64 eng(9);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 12; ++i) {
    const Complex l(u(eng), u(eng)), w(u(eng), u(eng));
    const Complex closed = eval_E_signed_discs(holed, l, w);
    const Complex ref = oracle::unit_disc(l, w) / oracle::disc(Complex(0.4, 0.1), 0.2, l, w) /
                        oracle::disc(Complex(-0.5, -0.3), 0.15, l, w);
    CHECK(std::abs(closed - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    const auto q = eval_E(holed, l, w, 1e-9);
    CHECK(std::abs(q.value - closed) <= 3.0 * q.error_estimate + 1e-12);
  }
}

TEST_CASE("signed discs: argument checks") {
  const auto d = unit_disc_density();
  check_code([&] { eval_E_signed_discs(d, 0.2, 0.2); }, ErrorCode::kInvalidPoint);
  DensitySpec half = disc_density(0.0, 1.0, 0.5);
  check_code([&] { eval_E_signed_discs(half, 0.2, 0.3); }, ErrorCode::kInvalidArgument);
  DensitySpec ann = annulus_density(0.0, 0.2, 1.0);
  check_code([&] { eval_E_signed_discs(ann, 0.2, 0.3); }, ErrorCode::kInvalidArgument);
}

TEST_CASE("Mobius discs: closed forms match disc oracles") {
  const MobiusDiscParams p{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
  for (const double a : {-3.0, -0.5, 0.0, 0.7, 2.0}) {
    const Disk d = p.alpha_disc(a);
    const double logabs = std::log(std::abs(oracle::disc(d.center, d.radius, p.lambda, p.w)));
    CHECK(disc_real_integral(a) == doctest::Approx(logabs).epsilon(1e-12));
  }
  for (const double b : {-2.0, -0.25, 0.5, 3.0}) {
    const Disk d = p.beta_disc(b);
    const double arg = std::arg(oracle::disc(d.center, d.radius, p.lambda, p.w));
    CHECK(disc_imag_integral(b) == doctest::Approx(arg).epsilon(1e-12));
  }
  CHECK_THROWS_AS(p.beta_disc(0.0), Error);
  CHECK_THROWS_AS(disc_imag_integral(0.0), Error);
}

TEST_CASE("tail masses decay like 1/N") {
  double prev_r = 1e300, prev_i = 1e300;
  for (const double n : {2.0, 4.0, 16.0, 64.0, 1024.0}) {
    const double tr = tail_bound_real(n);
    const double ti = tail_bound_imag(n);
    CHECK(tr > 0.0);
    CHECK(ti > 0.0);
    CHECK(tr < prev_r);
    CHECK(ti < prev_i);
    prev_r = tr;
    prev_i = ti;
  }
  CHECK(1024.0 * tail_bound_real(1024.0) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(1024.0 * tail_bound_imag(1024.0) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(tail_bound_real(1.0), Error);
  CHECK_THROWS_AS(tail_bound_imag(0.5), Error);
}

TEST_CASE("preliminary modulus bound holds on random densities") {
  std::mt19937_64 eng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 6; ++i) {
    const auto g = swiss_cheese(100 + static_cast<std::uint64_t>(i), 2 + i % 3, 0.4);
    const Complex l(u(eng), u(eng)), w(u(eng), u(eng));
    const auto b = prelim_bound_check(g, l, w, 1e-8);
    CHECK(b.holds);
    CHECK(b.lhs <= b.rhs + 1e-6);
  }
  check_code([] { prelim_bound_check(unit_disc_density(), 0.1, 0.1, 1e-6); }, ErrorCode::kInvalidPoint);
}
