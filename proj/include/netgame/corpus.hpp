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

// Finite test corpora: every network on a small universe and seeded families
// of component-additive games over a given ground network.

#ifndef NETGAME_CORPUS_HPP_
#define NETGAME_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/value_function.hpp"

namespace netgame {

inline constexpr int kMaxCorpusPlayers = 5;

/// All 2^C(n,2) networks on n players in ascending slot-mask order.
inline std::vector<Network> all_networks(int n) {
  if (n < 0 || n > kMaxCorpusPlayers) {
    throw Error(ErrorCode::kCorpusTooLarge,
                std::to_string(n) + " players exceed the corpus limit of " +
                    std::to_string(kMaxCorpusPlayers));
  }
  const int slots = n * (n - 1) / 2;
  std::vector<Network> out;
  out.reserve(std::size_t{1} << slots);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << slots); ++m) {
    Network g(n);
    for (int s = 0; s < slots; ++s) {
      if ((m >> s) & 1u) g.set_slot(s);
    }
    out.push_back(g);
  }
  return out;
}

enum class GameFamily {
  /// Real worths in [-3, 7) on every connected subnetwork, closed additively.
  kSignedComponents,
  /// Integer dividends in {1, 2, 3} on a random subset of the connected
  /// subnetworks. Zero monotonic with nonnegative worths.
  kNonnegativeDividends,
  /// As kNonnegativeDividends, but no dividend touches a chosen set of
  /// players, who are therefore superfluous.
  kSuperfluous,
};

/// Seeded game generator over one ground network.
class GameSampler {
 public:
  GameSampler(Network ground, std::uint64_t seed)
      : ground_(std::move(ground)), rng_(seed), shape_(ground_) {
    connected_ = connected_subnetworks(shape_);
  }

  ValueFunction next(GameFamily family) {
    switch (family) {
      case GameFamily::kSignedComponents: return signed_components();
      case GameFamily::kNonnegativeDividends: return dividends(PlayerSet());
      case GameFamily::kSuperfluous: return dividends(pick_idle_players());
    }
    return null_game(ground_);
  }

  std::mt19937_64& rng() { return rng_; }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  ValueFunction signed_components() {
    std::vector<double> worth(shape_.size(), 0.0);
    for (LinkMask h : connected_) worth[h] = uniform(-3.0, 7.0);
    std::vector<double> table(shape_.size(), 0.0);
    for (LinkMask m = 1; m < table.size(); ++m) {
      for (LinkMask h : shape_.components_of(m)) table[m] += worth[h];
    }
    return ValueFunction(ground_, std::move(table), GameMode::kComponentClosure);
  }

  PlayerSet pick_idle_players() {
    PlayerSet idle;
    const PlayerSet present = ground_.players();
    if (present.empty()) return idle;
    const std::vector<PlayerId> members = present.members();
    idle.insert(members[integer(0, static_cast<int>(members.size()) - 1)]);
    if (members.size() > 3 && integer(0, 1) == 1) {
      idle.insert(members[integer(0, static_cast<int>(members.size()) - 1)]);
    }
    return idle;
  }

  ValueFunction dividends(PlayerSet idle) {
    std::vector<double> table(shape_.size(), 0.0);
    for (LinkMask h : connected_) {
      const bool touches_idle = !(shape_.players_of(h) & idle).empty();
      if (touches_idle || integer(0, 9) < 6) continue;
      table[h] = integer(1, 3);
    }
    zeta_transform(std::span<double>(table));
    return ValueFunction(ground_, std::move(table), GameMode::kUnanimityCombination);
  }

  Network ground_;
  std::mt19937_64 rng_;
  ValueFunction shape_;
  std::vector<LinkMask> connected_;
};

/// `count` games of one family over `ground`.
inline std::vector<ValueFunction> sample_games(const Network& ground, GameFamily family,
                                               int count, std::uint64_t seed) {
  GameSampler sampler(ground, seed);
  std::vector<ValueFunction> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(sampler.next(family));
  return out;
}

/// Seed for the games attached to one network of a corpus.
inline std::uint64_t network_seed(std::uint64_t seed, const Network& g) {
  return seed ^ (g.hash() * 0x9e3779b97f4a7c15ULL) ^ (std::uint64_t(g.universe()) << 56);
}

}  // namespace netgame

#endif  // NETGAME_CORPUS_HPP_
