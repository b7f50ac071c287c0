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

#ifndef EKERNEL_TYPES_HPP_
#define EKERNEL_TYPES_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ekernel {

/// A point of the complex plane, or a complex value.
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

enum class ErrorCode {
  kInvalidArgument,
  kInvalidPoint,
  kConfigViolation,
  kPoleCase,
  kZeroDivisor,
  kPreconditionFailed,
  kNonConvergent,
  kRegimeUnverified,
  kTailTooLarge,
  kPlacementFailed,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws kInvalidArgument when `z` has a NaN or infinite coordinate.
void require_finite(Complex z, const char* name);

}  // namespace ekernel

#endif  // EKERNEL_TYPES_HPP_
