// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Zeta and Moebius transforms over the subset lattice of a bitmask universe.
// Both run in O(k 2^k) for a table of size 2^k and are generic in the scalar
// type so exact arithmetic can be substituted in tests.

#ifndef NETGAME_SUBSET_TRANSFORM_HPP_
#define NETGAME_SUBSET_TRANSFORM_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <span>

namespace netgame {

/// f[S] <- sum over T subset of S of f[T].
template <typename T>
void zeta_transform(std::span<T> f) {
  assert(std::has_single_bit(f.size()));
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] += f[s ^ bit];
    }
  }
}

/// Inverse of zeta_transform: f[S] <- sum over T subset of S of
/// (-1)^{|S|-|T|} f[T].
template <typename T>
void mobius_transform(std::span<T> f) {
  assert(std::has_single_bit(f.size()));
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] -= f[s ^ bit];
    }
  }
}

}  // namespace netgame

#endif  // NETGAME_SUBSET_TRANSFORM_HPP_
