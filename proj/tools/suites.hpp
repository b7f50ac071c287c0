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
// Verification suites behind `ekernel verify`. Each suite runs a fixed set
// of fixtures and reports one residual per check against its threshold.

#ifndef EKERNEL_TOOLS_SUITES_HPP_
#define EKERNEL_TOOLS_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekernel/density.hpp"
#include "ekernel/rng.hpp"

namespace ekernel::tools {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool converged = true;  // every quadrature reached its tolerance

  void add(std::string name, double residual, double threshold);
  void add_flag(std::string name, bool ok);
  bool pass() const;
};

struct SuiteOptions {
  std::optional<double> tol;  // overrides every quadrature tolerance
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

/// Throws Error(kInvalidArgument) for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::string format_report(const SuiteReport& report);

/// Shortest round-trip text with 17 significant digits, locale-free.
std::string format_double(double v);

// Random fixtures shared by the suites.
DensitySpec random_density(Mcg64& rng);
Complex random_point(Mcg64& rng, double radius);

}  // namespace ekernel::tools

#endif  // EKERNEL_TOOLS_SUITES_HPP_
