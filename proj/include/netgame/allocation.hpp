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

// Allocation rules on network games: the Myerson value, component-wise equal
// division, and their convex combination.

#ifndef NETGAME_ALLOCATION_HPP_
#define NETGAME_ALLOCATION_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/value_function.hpp"

namespace netgame {

/// A weight in [0, 1].
class Alpha {
 public:
  Alpha(double value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (!(value >= 0.0 && value <= 1.0)) {
      throw Error(ErrorCode::kAlphaOutOfRange, std::to_string(value) + " is not in [0,1]");
    }
  }
  double value() const { return value_; }
  operator double() const { return value_; }  // NOLINT(google-explicit-constructor)

 private:
  double value_;
};

/// Payoff vector indexed by player.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(int universe) : payoffs_(universe, 0.0) {}
  explicit Allocation(std::vector<double> payoffs) : payoffs_(std::move(payoffs)) {}

  int size() const { return static_cast<int>(payoffs_.size()); }
  double& operator[](PlayerId i) { return payoffs_.at(i); }
  double operator[](PlayerId i) const { return payoffs_.at(i); }
  const std::vector<double>& payoffs() const { return payoffs_; }

  double sum_over(PlayerSet s) const {
    double total = 0.0;
    for (PlayerId i : s) total += payoffs_.at(i);
    return total;
  }
  double total() const { return std::accumulate(payoffs_.begin(), payoffs_.end(), 0.0); }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<double> payoffs_;
};

inline double max_abs_difference(const Allocation& x, const Allocation& y) {
  if (x.size() != y.size()) return INFINITY;
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

/// x * a + y * (1 - a), player by player.
inline Allocation mix(const Allocation& x, const Allocation& y, double a) {
  Allocation out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = a * x[i] + (1.0 - a) * y[i];
  return out;
}

namespace detail {

inline LinkMask scope_of(const Network& g, const ValueFunction& v) {
  if (g.universe() != v.universe() || !g.is_subset_of(v.ground())) {
    throw Error(ErrorCode::kGroundMismatch,
                g.to_string() + " is not a subnetwork of the game's ground " +
                    v.ground().to_string());
  }
  return v.mask_of(g);
}

// Shapley value of the graph-restricted game S -> v(scope|_S) over the
// players of `scope`, accumulated into `out`.
inline void myerson_over(const ValueFunction& v, LinkMask scope, Allocation& out) {
  const std::vector<PlayerId> players = v.players_of(scope).members();
  const int m = static_cast<int>(players.size());
  if (m == 0) return;
  if (m > kMaxPlayers) throw Error(ErrorCode::kTooManyPlayers, "too many players");

  std::vector<LinkMask> inc(m);
  for (int k = 0; k < m; ++k) inc[k] = v.incident(players[k]) & scope;

  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<LinkMask> touched(count, 0);
  std::vector<double> worth(count, 0.0);
  std::vector<LinkMask> inside(count, 0);
  for (std::uint32_t s = 1; s < count; ++s) {
    const int k = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    touched[s] = touched[rest] | inc[k];
    inside[s] = inside[rest] | (inc[k] & touched[rest]);
    worth[s] = v.at(inside[s]);
  }

  std::vector<double> coef(m);
  for (int s = 0; s < m; ++s) {
    // s!(m-s-1)!/m! = 1 / (m * C(m-1, s))
    double binom = 1.0;
    for (int t = 1; t <= s; ++t) binom = binom * (m - 1 - s + t) / t;
    coef[s] = 1.0 / (m * binom);
  }

  std::vector<double> y(m, 0.0);
  for (std::uint32_t s = 0; s < count; ++s) {
    const double c = coef[std::popcount(s)];
    const double base = worth[s];
    for (std::uint32_t free = (count - 1) & ~s; free != 0; free &= free - 1) {
      const int k = std::countr_zero(free);
      y[k] += (worth[s | (std::uint32_t{1} << k)] - base) * c;
    }
  }
  for (int k = 0; k < m; ++k) out[players[k]] += y[k];
}

}  // namespace detail

/// Myerson value of g under v, g a subnetwork of v's ground, summed over
/// coalitions of N(g). Computed per component when v is component additive
/// on g.
inline Allocation myerson_subset(const Network& g, const ValueFunction& v) {
  const LinkMask scope = detail::scope_of(g, v);
  Allocation out(v.universe());
  const std::vector<LinkMask> parts = v.components_of(scope);
  if (parts.size() >= 2 && detail::additivity_within(v, scope, kDefaultTolerance)) {
    for (LinkMask h : parts) detail::myerson_over(v, h, out);
  } else {
    detail::myerson_over(v, scope, out);
  }
  return out;
}

/// Myerson value from the defining sum over coalitions of all of N(g),
/// without splitting into components.
inline Allocation myerson_subset_global(const Network& g, const ValueFunction& v) {
  Allocation out(v.universe());
  detail::myerson_over(v, detail::scope_of(g, v), out);
  return out;
}

inline constexpr int kOracleMaxPlayers = 9;

/// Average marginal contribution over every ordering of N(g).
inline Allocation myerson_permutation_oracle(const Network& g, const ValueFunction& v) {
  detail::scope_of(g, v);
  std::vector<PlayerId> order = g.players().members();
  if (order.size() > kOracleMaxPlayers) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(order.size()) + " players exceed the oracle limit of " +
                    std::to_string(kOracleMaxPlayers));
  }
  Allocation out(v.universe());
  if (order.empty()) return out;
  std::vector<double> sum(v.universe(), 0.0);
  long long orderings = 0;
  do {
    PlayerSet before;
    double prev = 0.0;
    for (PlayerId i : order) {
      before.insert(i);
      const double now = v(restrict(g, before));
      sum[i] += now - prev;
      prev = now;
    }
    ++orderings;
  } while (std::next_permutation(order.begin(), order.end()));
  for (int i = 0; i < v.universe(); ++i) out[i] = sum[i] / static_cast<double>(orderings);
  return out;
}

/// Myerson value through the recursion on link deletions of each
/// component: Y_i(h) = (v(h) - v(h - L_i(h)) + sum_{j != i} Y_i(h - L_j(h))) / n(h).
inline Allocation myerson_recursive(const Network& g, const ValueFunction& v) {
  const LinkMask scope = detail::scope_of(g, v);
  const PropertyCheck additive = detail::additivity_within(v, scope, kDefaultTolerance);
  if (!additive) {
    throw Error(ErrorCode::kNotComponentAdditive,
                "fails at " + additive.witness->to_string());
  }
  std::unordered_map<LinkMask, std::vector<double>> memo;
  const int n = v.universe();

  auto solve = [&](auto&& self, LinkMask m) -> const std::vector<double>& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::vector<double> y(n, 0.0);
    for (LinkMask h : v.components_of(m)) {
      const PlayerSet members = v.players_of(h);
      const double size = members.size();
      for (PlayerId i : members) {
        double acc = v.at(h) - v.at(h & ~v.incident(i));
        for (PlayerId j : members) {
          if (j == i) continue;
          acc += self(self, h & ~v.incident(j))[i];
        }
        y[i] = acc / size;
      }
    }
    return memo.emplace(m, std::move(y)).first->second;
  };
  return Allocation(solve(solve, scope));
}

/// Component-wise equal division: v(h_i)/n(h_i) for i in component h_i.
inline Allocation ce_rule(const Network& g, const ValueFunction& v) {
  const LinkMask scope = detail::scope_of(g, v);
  Allocation out(v.universe());
  for (LinkMask h : v.components_of(scope)) {
    const PlayerSet members = v.players_of(h);
    const double share = v.at(h) / members.size();
    for (PlayerId i : members) out[i] = share;
  }
  return out;
}

/// alpha * Myerson + (1 - alpha) * equal division.
inline Allocation alpha_cem(const Network& g, const ValueFunction& v, Alpha alpha) {
  return mix(myerson_subset(g, v), ce_rule(g, v), alpha.value());
}

/// The game alpha * v + (1 - alpha) * sum_h v(h) u_h over the components h
/// of g.
inline ValueFunction cem_transform(const Network& g, const ValueFunction& v, Alpha alpha) {
  const LinkMask scope = detail::scope_of(g, v);
  ValueFunction w = alpha.value() * v;
  for (LinkMask h : v.components_of(scope)) {
    w += ((1.0 - alpha.value()) * v.at(h)) * unanimity_game(v.ground(), v.network_of(h));
  }
  return w;
}

/// Myerson value of the transformed game; equals alpha_cem for component
/// additive v.
inline Allocation alpha_cem_via_transform(const Network& g, const ValueFunction& v,
                                          Alpha alpha) {
  const PropertyCheck additive =
      detail::additivity_within(v, detail::scope_of(g, v), kDefaultTolerance);
  if (!additive) {
    throw Error(ErrorCode::kNotComponentAdditive,
                "fails at " + additive.witness->to_string());
  }
  return myerson_subset(g, cem_transform(g, v, alpha));
}

/// alpha-CEM of the unanimity game u_{g'} on a connected g.
inline Allocation unanimity_closed_form(const Network& g, const Network& basis, Alpha alpha) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, g.to_string());
  if (basis.empty()) throw Error(ErrorCode::kEmptyBasisNetwork, "basis network is empty");
  if (!basis.is_subset_of(g)) {
    throw Error(ErrorCode::kKeyOutsideGround,
                basis.to_string() + " is not a subnetwork of " + g.to_string());
  }
  if (!is_connected(basis)) throw Error(ErrorCode::kNotConnected, basis.to_string());
  const double a = alpha.value();
  const PlayerSet all = g.players();
  const PlayerSet core = basis.players();
  Allocation out(g.universe());
  for (PlayerId i : all) {
    out[i] = (1.0 - a) / all.size() + (core.contains(i) ? a / core.size() : 0.0);
  }
  return out;
}

}  // namespace netgame

#endif  // NETGAME_ALLOCATION_HPP_
