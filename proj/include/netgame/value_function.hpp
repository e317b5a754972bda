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

// Network games: value functions over the subnetwork lattice of a ground
// network, their linear algebra, the unanimity and identity bases, Harsanyi
// dividends, relabelling and zero-monotonicity.

#ifndef NETGAME_VALUE_FUNCTION_HPP_
#define NETGAME_VALUE_FUNCTION_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netgame/detail/union_find.hpp"
#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/subset_transform.hpp"

namespace netgame {

/// Subnetwork of a ground network, one bit per ground link (bit k is the
/// k-th ground link in canonical order).
using LinkMask = std::uint32_t;

inline constexpr int kMaxGroundLinks = 20;

enum class GameMode {
  kExplicit,
  kComponentClosure,
  kUnanimityCombination,
};

/// Worth of every subnetwork of `ground`. The empty network is worth 0.
class ValueFunction {
 public:
  explicit ValueFunction(Network ground, GameMode mode = GameMode::kExplicit)
      : ground_(std::move(ground)), mode_(mode) {
    index_ground();
    table_.assign(std::size_t{1} << links_.size(), 0.0);
  }

  ValueFunction(Network ground, std::vector<double> table, GameMode mode)
      : ground_(std::move(ground)), mode_(mode) {
    index_ground();
    if (table.size() != (std::size_t{1} << links_.size())) {
      throw Error(ErrorCode::kGroundMismatch, "table size does not match ground");
    }
    if (table[0] != 0.0) {
      throw Error(ErrorCode::kGroundMismatch, "worth of the empty network must be 0");
    }
    table_ = std::move(table);
  }

  const Network& ground() const { return ground_; }
  int universe() const { return ground_.universe(); }
  int link_count() const { return static_cast<int>(links_.size()); }
  std::size_t size() const { return table_.size(); }
  LinkMask full_mask() const { return static_cast<LinkMask>(table_.size() - 1); }
  GameMode mode() const { return mode_; }
  void set_mode(GameMode mode) { mode_ = mode; }

  const std::vector<Link>& ground_links() const { return links_; }
  std::span<const double> table() const { return table_; }

  double at(LinkMask m) const { return table_[m]; }
  double operator()(const Network& sub) const { return table_[mask_of(sub)]; }

  void set(LinkMask m, double worth) {
    if (m == 0 && worth != 0.0) {
      throw Error(ErrorCode::kGroundMismatch, "worth of the empty network must be 0");
    }
    table_.at(m) = worth;
  }
  void set(const Network& sub, double worth) { set(mask_of(sub), worth); }

  /// Local mask of a subnetwork of the ground.
  LinkMask mask_of(const Network& sub) const {
    if (sub.universe() != ground_.universe() || !sub.is_subset_of(ground_)) {
      throw Error(ErrorCode::kKeyOutsideGround,
                  sub.to_string() + " is not a subnetwork of " + ground_.to_string());
    }
    LinkMask m = 0;
    sub.for_each_link([&](Link l) {
      m |= LinkMask{1} << local_index_[Network::slot_index(universe(), l)];
    });
    return m;
  }

  Network network_of(LinkMask m) const {
    Network out(universe());
    for (; m != 0; m &= m - 1) out.insert(links_[std::countr_zero(m)]);
    return out;
  }

  /// Ground links incident to player i, as a local mask.
  LinkMask incident(PlayerId i) const {
    return (i >= 0 && i < universe()) ? incident_[i] : 0;
  }

  PlayerSet players_of(LinkMask m) const {
    std::uint32_t bits = 0;
    for (; m != 0; m &= m - 1) {
      const Link& l = links_[std::countr_zero(m)];
      bits |= (1u << l.a) | (1u << l.b);
    }
    return PlayerSet(bits);
  }

  /// g'|_S expressed in local links, for g' given by `within`.
  LinkMask restrict_mask(LinkMask within, PlayerSet coalition) const {
    LinkMask out = 0;
    for (LinkMask m = within; m != 0; m &= m - 1) {
      const int k = std::countr_zero(m);
      if (coalition.contains(links_[k].a) && coalition.contains(links_[k].b)) {
        out |= LinkMask{1} << k;
      }
    }
    return out;
  }

  /// Components of a local subnetwork, ordered by ascending minimum member.
  std::vector<LinkMask> components_of(LinkMask m) const {
    std::vector<LinkMask> out;
    if (m == 0) return out;
    detail::UnionFind<kMaxPlayers> uf(universe());
    for (LinkMask r = m; r != 0; r &= r - 1) {
      const Link& l = links_[std::countr_zero(r)];
      uf.unite(l.a, l.b);
    }
    std::array<int, kMaxPlayers> slot;
    slot.fill(-1);
    for (PlayerId i : players_of(m)) {
      const int root = uf.find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(out.size());
        out.push_back(0);
      }
    }
    for (LinkMask r = m; r != 0; r &= r - 1) {
      const int k = std::countr_zero(r);
      out[slot[uf.find(links_[k].a)]] |= LinkMask{1} << k;
    }
    return out;
  }

  bool is_connected_mask(LinkMask m) const {
    if (m == 0) return false;
    detail::UnionFind<kMaxPlayers> uf(universe());
    int merges = 0;
    for (LinkMask r = m; r != 0; r &= r - 1) {
      const Link& l = links_[std::countr_zero(r)];
      merges += uf.unite(l.a, l.b) ? 1 : 0;
    }
    return merges + 1 == players_of(m).size();
  }

  ValueFunction& operator+=(const ValueFunction& o) {
    require_same_ground(o);
    for (std::size_t m = 0; m < table_.size(); ++m) table_[m] += o.table_[m];
    merge_mode(o);
    return *this;
  }
  ValueFunction& operator-=(const ValueFunction& o) {
    require_same_ground(o);
    for (std::size_t m = 0; m < table_.size(); ++m) table_[m] -= o.table_[m];
    merge_mode(o);
    return *this;
  }
  ValueFunction& operator*=(double a) {
    for (double& x : table_) x *= a;
    return *this;
  }

  friend ValueFunction operator+(ValueFunction x, const ValueFunction& y) { return x += y; }
  friend ValueFunction operator-(ValueFunction x, const ValueFunction& y) { return x -= y; }
  friend ValueFunction operator*(double a, ValueFunction x) { return x *= a; }

  /// Tables are compared bit-for-bit; use max_abs_difference for tolerances.
  friend bool operator==(const ValueFunction& x, const ValueFunction& y) {
    return x.ground_ == y.ground_ && x.table_ == y.table_;
  }

  void require_same_ground(const ValueFunction& o) const {
    if (!(o.ground_ == ground_)) {
      throw Error(ErrorCode::kGroundMismatch,
                  ground_.to_string() + " vs " + o.ground_.to_string());
    }
  }

 private:
  void index_ground() {
    links_ = ground_.links();
    if (links_.size() > kMaxGroundLinks) {
      throw Error(ErrorCode::kGroundTooLarge,
                  std::to_string(links_.size()) + " links exceed the limit of " +
                      std::to_string(kMaxGroundLinks));
    }
    local_index_.assign(ground_.slot_count(), -1);
    incident_.fill(0);
    for (int k = 0; k < static_cast<int>(links_.size()); ++k) {
      local_index_[Network::slot_index(universe(), links_[k])] = k;
      incident_[links_[k].a] |= LinkMask{1} << k;
      incident_[links_[k].b] |= LinkMask{1} << k;
    }
  }

  void merge_mode(const ValueFunction& o) {
    if (o.mode_ != mode_) mode_ = GameMode::kExplicit;
  }

  Network ground_;
  std::vector<Link> links_;
  std::vector<int> local_index_;
  std::array<LinkMask, kMaxPlayers> incident_{};
  std::vector<double> table_;
  GameMode mode_ = GameMode::kExplicit;
};

inline double max_abs_difference(const ValueFunction& x, const ValueFunction& y) {
  x.require_same_ground(y);
  double worst = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) {
    worst = std::max(worst, std::abs(x.table()[m] - y.table()[m]));
  }
  return worst;
}

/// Harsanyi dividends keyed by (non-empty) subnetwork.
using DividendMap = std::map<Network, double>;

/// Masks of all connected non-empty subnetworks of the ground, ascending.
inline std::vector<LinkMask> connected_subnetworks(const ValueFunction& v) {
  std::vector<LinkMask> out;
  for (LinkMask m = 1; m <= v.full_mask() && m != 0; ++m) {
    if (v.is_connected_mask(m)) out.push_back(m);
  }
  return out;
}

inline ValueFunction null_game(const Network& g) {
  return ValueFunction(g, GameMode::kComponentClosure);
}

namespace detail {

inline LinkMask basis_mask(const ValueFunction& v, const Network& basis) {
  if (basis.empty()) {
    throw Error(ErrorCode::kEmptyBasisNetwork, "basis network must be non-empty");
  }
  if (basis.universe() != v.universe() || !basis.is_subset_of(v.ground())) {
    throw Error(ErrorCode::kKeyOutsideGround,
                basis.to_string() + " is not a subnetwork of " + v.ground().to_string());
  }
  return v.mask_of(basis);
}

}  // namespace detail

/// u_{g'}: 1 on every subnetwork containing g', 0 elsewhere.
inline ValueFunction unanimity_game(const Network& ground, const Network& basis) {
  ValueFunction u(ground, GameMode::kUnanimityCombination);
  const LinkMask b = detail::basis_mask(u, basis);
  for (LinkMask m = b; m <= u.full_mask(); m = (m + 1) | b) {
    u.set(m, 1.0);
    if (m == u.full_mask()) break;
  }
  return u;
}

/// e_{g'}: 1 exactly at g'.
inline ValueFunction identity_game(const Network& ground, const Network& basis) {
  ValueFunction e(ground, GameMode::kExplicit);
  e.set(detail::basis_mask(e, basis), 1.0);
  return e;
}

/// The component-additive game with v(h) = worths[h] on connected h (missing
/// entries are 0) and v(g') = sum of v over the components of g'.
inline ValueFunction closure_from_components(const Network& ground,
                                             const std::map<Network, double>& worths) {
  ValueFunction v(ground, GameMode::kComponentClosure);
  std::vector<double> connected_worth(v.size(), 0.0);
  for (const auto& [key, worth] : worths) {
    if (key.universe() != ground.universe() || !key.is_subset_of(ground)) {
      throw Error(ErrorCode::kKeyOutsideGround,
                  key.to_string() + " is not a subnetwork of " + ground.to_string());
    }
    const LinkMask m = v.mask_of(key);
    if (!v.is_connected_mask(m)) {
      throw Error(ErrorCode::kNonConnectedKey, key.to_string() + " is not connected");
    }
    connected_worth[m] = worth;
  }
  for (LinkMask m = 1; m <= v.full_mask() && m != 0; ++m) {
    double total = 0.0;
    for (LinkMask h : v.components_of(m)) total += connected_worth[h];
    v.set(m, total);
  }
  return v;
}

/// Result of a lattice-wide property scan with the first failing subnetwork.
struct PropertyCheck {
  bool holds = true;
  std::optional<Network> witness;
  std::optional<PlayerId> player;
  double residual = 0.0;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline PropertyCheck additivity_within(const ValueFunction& v, LinkMask scope, double tol) {
  PropertyCheck out;
  // Ascending enumeration of the submasks of `scope`.
  for (LinkMask m = 0;; m = (m - scope) & scope) {
    if (m != 0) {
      double total = 0.0;
      for (LinkMask h : v.components_of(m)) total += v.at(h);
      const double gap = std::abs(v.at(m) - total);
      if (gap > tol) {
        out.holds = false;
        out.witness = v.network_of(m);
        out.residual = gap;
        return out;
      }
    }
    if (m == scope) break;
  }
  return out;
}

}  // namespace detail

/// Component additivity over every subnetwork of the ground.
inline PropertyCheck is_component_additive(const ValueFunction& v,
                                           double tol = kDefaultTolerance) {
  return detail::additivity_within(v, v.full_mask(), std::max(tol, 0.0));
}

/// Delta_{g'}(v) for every non-empty subnetwork with a dividend whose
/// magnitude exceeds `drop_below`.
inline DividendMap harsanyi_dividends(const ValueFunction& v, double drop_below = 0.0) {
  std::vector<double> d(v.table().begin(), v.table().end());
  mobius_transform(std::span<double>(d));
  DividendMap out;
  for (LinkMask m = 1; m < d.size(); ++m) {
    if (std::abs(d[m]) > drop_below) out.emplace(v.network_of(m), d[m]);
  }
  return out;
}

/// sum of Delta_{g'} u_{g'} over the map's entries.
inline ValueFunction from_dividends(const Network& ground, const DividendMap& dividends) {
  ValueFunction v(ground, GameMode::kUnanimityCombination);
  std::vector<double> table(v.size(), 0.0);
  for (const auto& [key, value] : dividends) {
    if (key.universe() != ground.universe() || !key.is_subset_of(ground)) {
      throw Error(ErrorCode::kKeyOutsideGround,
                  key.to_string() + " is not a subnetwork of " + ground.to_string());
    }
    if (key.empty()) {
      if (value != 0.0) throw Error(ErrorCode::kEmptyBasisNetwork, "dividend on g_0");
      continue;
    }
    table[v.mask_of(key)] = value;
  }
  zeta_transform(std::span<double>(table));
  return ValueFunction(ground, std::move(table), GameMode::kUnanimityCombination);
}

/// (pi v)(pi g') = v(g'); the result's ground is pi(ground).
inline ValueFunction permute_game(const ValueFunction& v, const Permutation& pi) {
  const Network image_ground = apply_permutation(v.ground(), pi);
  ValueFunction out(image_ground, v.mode());
  std::vector<LinkMask> image_bit(v.link_count());
  for (int k = 0; k < v.link_count(); ++k) {
    const Link& l = v.ground_links()[k];
    Network single(v.universe(), {Link(pi(l.a), pi(l.b))});
    image_bit[k] = out.mask_of(single);
  }
  std::vector<double> table(v.size(), 0.0);
  for (LinkMask m = 0; m < v.size(); ++m) {
    LinkMask image = 0;
    for (LinkMask r = m; r != 0; r &= r - 1) image |= image_bit[std::countr_zero(r)];
    table[image] = v.at(m);
  }
  return ValueFunction(image_ground, std::move(table), v.mode());
}

/// v(g') - v(L_i(g')) >= v(g' - L_i(g')) for every g' and every i in N(g').
inline PropertyCheck is_zero_monotonic(const ValueFunction& v,
                                       double tol = kDefaultTolerance) {
  PropertyCheck out;
  for (LinkMask m = 1; m <= v.full_mask() && m != 0; ++m) {
    for (PlayerId i : v.players_of(m)) {
      const LinkMask own = m & v.incident(i);
      const double gap = v.at(m) - v.at(own) - v.at(m & ~own);
      if (gap < -tol) {
        out.holds = false;
        out.witness = v.network_of(m);
        out.player = i;
        out.residual = -gap;
        return out;
      }
    }
  }
  return out;
}

}  // namespace netgame

#endif  // NETGAME_VALUE_FUNCTION_HPP_
