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

// JSON density configuration files.
//
//   {
//     "support_center": [x, y],
//     "support_radius": R,
//     "terms": [
//       {"shape": {"kind": "disk", "center": [x, y], "radius": r}, "coeff": c},
//       {"shape": {"kind": "annulus", "center": [x, y],
//                  "r_inner": a, "r_outer": b}, "coeff": c},
//       {"shape": {"kind": "rectangle", "corner_min": [x, y],
//                  "corner_max": [x, y]}, "coeff": c}
//     ],
//     "grid": {"origin": [x, y], "spacing": h, "values": [[row 0], [row 1]]}
//   }
//
// "grid" is optional; values[j][i] is the cell at column i of row j, rows
// counted upward from the origin. Unknown keys are rejected.

#ifndef EKERNEL_DENSITY_IO_HPP_
#define EKERNEL_DENSITY_IO_HPP_

#include <string>
#include <string_view>

#include "ekernel/density.hpp"

namespace ekernel {

/// Parses and structurally checks a config. Throws Error(kConfigViolation).
/// Range checks (0 <= g <= 1) are left to validate().
DensitySpec parse_density_json(std::string_view text);

/// Reads `path`, parses it and validates the density.
DensitySpec load_density_file(const std::string& path);

std::string to_json(const DensitySpec& g);

}  // namespace ekernel

#endif  // EKERNEL_DENSITY_IO_HPP_
