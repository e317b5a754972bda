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

#include <bit>
#include <random>
#include <span>
#include <vector>

#include <gtest/gtest.h>

#include "netgame/subset_transform.hpp"

namespace netgame {
namespace {

// O(3^k) reference sums in exact integer arithmetic.
std::vector<long long> naive_zeta(const std::vector<long long>& f) {
  std::vector<long long> out(f.size(), 0);
  for (std::size_t s = 0; s < f.size(); ++s) {
    for (std::size_t t = s;; t = (t - 1) & s) {
      out[s] += f[t];
      if (t == 0) break;
    }
  }
  return out;
}

std::vector<long long> naive_mobius(const std::vector<long long>& f) {
  std::vector<long long> out(f.size(), 0);
  for (std::size_t s = 0; s < f.size(); ++s) {
    for (std::size_t t = s;; t = (t - 1) & s) {
      const int sign = (std::popcount(s) - std::popcount(t)) % 2 == 0 ? 1 : -1;
      out[s] += sign * f[t];
      if (t == 0) break;
    }
  }
  return out;
}

std::vector<long long> random_table(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-50, 50);
  std::vector<long long> f(std::size_t{1} << k);
  for (auto& x : f) x = d(rng);
  return f;
}

TEST(SubsetTransform, ZetaMatchesNaive) {
  std::mt19937_64 rng(7);
  for (int k = 0; k <= 10; ++k) {
    std::vector<long long> f = random_table(k, rng);
    const std::vector<long long> expected = naive_zeta(f);
    zeta_transform(std::span<long long>(f));
    EXPECT_EQ(f, expected) << "k=" << k;
  }
}

TEST(SubsetTransform, MobiusMatchesNaive) {
  std::mt19937_64 rng(11);
  for (int k = 0; k <= 10; ++k) {
    std::vector<long long> f = random_table(k, rng);
    const std::vector<long long> expected = naive_mobius(f);
    mobius_transform(std::span<long long>(f));
    EXPECT_EQ(f, expected) << "k=" << k;
  }
}

TEST(SubsetTransform, RoundTrip) {
  std::mt19937_64 rng(13);
  const std::vector<long long> f = random_table(12, rng);
  std::vector<long long> g = f;
  zeta_transform(std::span<long long>(g));
  mobius_transform(std::span<long long>(g));
  EXPECT_EQ(g, f);
}

TEST(SubsetTransform, UnanimityDelta) {
  // A single dividend on {0, 2} sums to 1 exactly on supersets of {0, 2}.
  std::vector<double> f(8, 0.0);
  f[0b101] = 1.0;
  zeta_transform(std::span<double>(f));
  EXPECT_EQ(f, (std::vector<double>{0, 0, 0, 0, 0, 1, 0, 1}));
}

}  // namespace
}  // namespace netgame
