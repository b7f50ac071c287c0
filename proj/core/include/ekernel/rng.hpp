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

#ifndef EKERNEL_RNG_HPP_
#define EKERNEL_RNG_HPP_

#include <cstdint>
#include <random>

namespace ekernel {

/// Multiplicative congruential generator x <- a*x mod 2^64 with
/// a = 0xd1342543de82ef95. The state is seeded with (seed << 1) | 1 so it is
/// always odd. Fixture generation depends on this exact sequence.
using Mcg64 = std::linear_congruential_engine<std::uint64_t,
                                              0xd1342543de82ef95ULL, 0, 0>;

inline Mcg64 make_mcg(std::uint64_t seed) { return Mcg64((seed << 1) | 1U); }

/// Top 53 bits of the next state scaled into [0, 1).
inline double uniform01(Mcg64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Mcg64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace ekernel

#endif  // EKERNEL_RNG_HPP_
