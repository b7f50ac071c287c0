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

#include "ekernel/types.hpp"

namespace ekernel {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kConfigViolation: return "ConfigViolation";
    case ErrorCode::kPoleCase: return "PoleCase";
    case ErrorCode::kZeroDivisor: return "ZeroDivisor";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNonConvergent: return "NonConvergent";
    case ErrorCode::kRegimeUnverified: return "RegimeUnverified";
    case ErrorCode::kTailTooLarge: return "TailTooLarge";
    case ErrorCode::kPlacementFailed: return "PlacementFailed";
  }
  return "Unknown";
}

void require_finite(Complex z, const char* name) {
  if (!is_finite(z)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must have finite coordinates");
  }
}

}  // namespace ekernel
