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
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ekernel/cauchy.hpp"
#include "ekernel/kernel.hpp"
#include "ekernel/shift.hpp"

namespace {

using ekernel::Complex;

void BM_EvalUnitDisc(benchmark::State& state) {
  const auto g = ekernel::unit_disc_density();
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekernel::eval_E(g, Complex(0.3, 0.2), Complex(-0.4, 0.1), tol));
  }
}
BENCHMARK(BM_EvalUnitDisc)->Arg(4)->Arg(8)->Arg(12);

void BM_EvalSwissCheese(benchmark::State& state) {
  const auto g = ekernel::swiss_cheese(1, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekernel::eval_E(g, Complex(0.3, 0.2), Complex(-0.4, 0.1), 1e-8));
  }
}
BENCHMARK(BM_EvalSwissCheese)->Arg(1)->Arg(4)->Arg(16);

void BM_DiagonalDivergent(benchmark::State& state) {
  const auto g = ekernel::unit_disc_density();
  for (auto _ : state) benchmark::DoNotOptimize(ekernel::integrate_diagonal(g, 0.3, 1e-8));
}
BENCHMARK(BM_DiagonalDivergent);

void BM_MultiplierRadial(benchmark::State& state) {
  const auto g = ekernel::unit_disc_density();
  const ekernel::Multiplier m = [](Complex u) { return std::conj(u) * u + 1.0; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekernel::cauchy_transform(g, Complex(0.2, 0.5), 1e-8, m));
  }
}
BENCHMARK(BM_MultiplierRadial);

void BM_ShiftIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekernel::check_shift_identity(Complex(0.5, 0.1), Complex(-0.2, 0.3), n, 1e-6));
  }
}
BENCHMARK(BM_ShiftIdentity)->Arg(64)->Arg(256);

void BM_Representation(benchmark::State& state) {
  const auto g = ekernel::unit_disc_density();
  const std::vector<Complex> pts{Complex(0.5, 0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ekernel::check_representation(g, 2.0, pts, 1e-6));
  }
}
BENCHMARK(BM_Representation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
