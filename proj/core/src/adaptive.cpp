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

#include "ekernel/adaptive.hpp"

namespace ekernel {
namespace {

template <class T>
T tree_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 4) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) { return tree_sum(values); }

double pairwise_sum(std::span<const double> values) { return tree_sum(values); }

}  // namespace ekernel
