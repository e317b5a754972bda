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

// Networks over a fixed player universe: links, neighbourhoods,
// restrictions, component decomposition and relabelling.
//
// A network stores its links as a bitset over the C(n,2) link slots of the
// complete network, enumerated lexicographically by (a, b) with a < b.

#ifndef NETGAME_NETWORK_HPP_
#define NETGAME_NETWORK_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "netgame/detail/union_find.hpp"
#include "netgame/error.hpp"

namespace netgame {

inline constexpr int kMaxPlayers = 24;
inline constexpr int kMaxLinkSlots = kMaxPlayers * (kMaxPlayers - 1) / 2;

using PlayerId = int;

/// A coalition: a subset of the player universe, one bit per player.
class PlayerSet {
 public:
  class iterator {
   public:
    using value_type = PlayerId;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    PlayerId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}
  PlayerSet(std::initializer_list<PlayerId> players) {
    for (PlayerId i : players) insert(i);
  }

  /// The set {0, ..., n-1}.
  static PlayerSet first(int n) {
    return PlayerSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  bool contains(PlayerId i) const {
    return i >= 0 && i < 32 && ((bits_ >> i) & 1u) != 0;
  }
  void insert(PlayerId i) {
    if (i < 0 || i >= kMaxPlayers) {
      throw Error(ErrorCode::kInvalidPlayer, "player " + std::to_string(i));
    }
    bits_ |= std::uint32_t{1} << i;
  }
  void erase(PlayerId i) {
    if (i >= 0 && i < 32) bits_ &= ~(std::uint32_t{1} << i);
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  /// Smallest member; the set must be non-empty.
  PlayerId min() const { return std::countr_zero(bits_); }
  bool is_subset_of(PlayerSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<PlayerId> members() const { return {begin(), end()}; }
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend PlayerSet operator|(PlayerSet x, PlayerSet y) { return PlayerSet(x.bits_ | y.bits_); }
  friend PlayerSet operator&(PlayerSet x, PlayerSet y) { return PlayerSet(x.bits_ & y.bits_); }
  friend PlayerSet operator-(PlayerSet x, PlayerSet y) { return PlayerSet(x.bits_ & ~y.bits_); }
  friend bool operator==(PlayerSet, PlayerSet) = default;
  friend auto operator<=>(PlayerSet, PlayerSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// An undirected link ij, always stored with a < b.
struct Link {
  PlayerId a = 0;
  PlayerId b = 1;

  Link() = default;
  Link(PlayerId i, PlayerId j) : a(std::min(i, j)), b(std::max(i, j)) {
    if (i == j || a < 0 || b >= kMaxPlayers) {
      throw Error(ErrorCode::kInvalidLink,
                  std::to_string(i) + "-" + std::to_string(j));
    }
  }

  bool touches(PlayerId i) const { return a == i || b == i; }
  PlayerId other(PlayerId i) const { return a == i ? b : a; }

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

namespace detail {

struct SlotTable {
  std::vector<Link> links;                                   // slot -> link
  std::array<std::array<int, kMaxPlayers>, kMaxPlayers> slot{};  // (a,b) -> slot
};

inline const SlotTable& slot_table(int universe) {
  static const std::array<SlotTable, kMaxPlayers + 1> tables = [] {
    std::array<SlotTable, kMaxPlayers + 1> t;
    for (int n = 0; n <= kMaxPlayers; ++n) {
      for (auto& row : t[n].slot) row.fill(-1);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          t[n].slot[a][b] = t[n].slot[b][a] = static_cast<int>(t[n].links.size());
          t[n].links.push_back(Link(a, b));
        }
      }
    }
    return t;
  }();
  return tables[universe];
}

}  // namespace detail

/// A set of links over the universe {0, ..., n-1}, n <= 24.
class Network {
 public:
  static constexpr int kWords = (kMaxLinkSlots + 63) / 64;

  explicit Network(int universe) : universe_(universe) {
    if (universe < 0 || universe > kMaxPlayers) {
      throw Error(ErrorCode::kUniverseTooLarge,
                  "universe " + std::to_string(universe) + " exceeds " +
                      std::to_string(kMaxPlayers));
    }
  }

  Network(int universe, std::initializer_list<Link> links) : Network(universe) {
    for (const Link& l : links) insert(l);
  }

  template <typename Range>
  Network(int universe, const Range& links) : Network(universe) {
    for (const Link& l : links) insert(l);
  }

  static Network complete(int universe) {
    Network g(universe);
    for (int s = 0; s < g.slot_count(); ++s) g.set_slot(s);
    return g;
  }

  static int slot_index(int universe, Link l) {
    return detail::slot_table(universe).slot[l.a][l.b];
  }
  static Link slot_link(int universe, int slot) {
    return detail::slot_table(universe).links[slot];
  }

  int universe() const { return universe_; }
  int slot_count() const { return universe_ * (universe_ - 1) / 2; }

  bool contains(Link l) const {
    if (l.b >= universe_) return false;
    return test_slot(slot_index(universe_, l));
  }
  void insert(Link l) { set_slot(checked_slot(l)); }
  void erase(Link l) {
    int s = checked_slot(l);
    words_[s / 64] &= ~(std::uint64_t{1} << (s % 64));
  }

  bool test_slot(int s) const { return ((words_[s / 64] >> (s % 64)) & 1u) != 0; }
  void set_slot(int s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }

  /// l(g).
  int link_count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Calls f(Link) for every link in ascending slot order.
  template <typename F>
  void for_each_link(F&& f) const {
    const auto& table = detail::slot_table(universe_);
    for (int w = 0; w < kWords; ++w) {
      for (std::uint64_t rest = words_[w]; rest != 0; rest &= rest - 1) {
        f(table.links[w * 64 + std::countr_zero(rest)]);
      }
    }
  }

  std::vector<Link> links() const {
    std::vector<Link> out;
    out.reserve(link_count());
    for_each_link([&](Link l) { out.push_back(l); });
    return out;
  }

  /// N(g): players with at least one link.
  PlayerSet players() const {
    std::uint32_t bits = 0;
    for_each_link([&](Link l) { bits |= (1u << l.a) | (1u << l.b); });
    return PlayerSet(bits);
  }
  /// n(g).
  int player_count() const { return players().size(); }

  bool is_subset_of(const Network& other) const {
    require_same_universe(other);
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  Network& operator|=(const Network& o) { return combine(o, [](auto x, auto y) { return x | y; }); }
  Network& operator&=(const Network& o) { return combine(o, [](auto x, auto y) { return x & y; }); }
  /// Set difference; see subtract() for the checked variant.
  Network& operator-=(const Network& o) { return combine(o, [](auto x, auto y) { return x & ~y; }); }

  friend Network operator|(Network x, const Network& y) { return x |= y; }
  friend Network operator&(Network x, const Network& y) { return x &= y; }
  friend Network operator-(Network x, const Network& y) { return x -= y; }

  friend bool operator==(const Network&, const Network&) = default;
  friend auto operator<=>(const Network&, const Network&) = default;

  /// 1-based rendering, e.g. "{1-2,3-4,4-5}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each_link([&](Link l) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(l.a + 1) + "-" + std::to_string(l.b + 1);
    });
    return out + "}";
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(universe_);
    for (std::uint64_t w : words_) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
    return h;
  }

  void require_same_universe(const Network& other) const {
    if (other.universe_ != universe_) {
      throw Error(ErrorCode::kUniverseMismatch,
                  std::to_string(universe_) + " vs " + std::to_string(other.universe_));
    }
  }

 private:
  int checked_slot(Link l) const {
    if (l.b >= universe_) {
      throw Error(ErrorCode::kInvalidPlayer,
                  "link " + std::to_string(l.a) + "-" + std::to_string(l.b) +
                      " outside universe " + std::to_string(universe_));
    }
    return slot_index(universe_, l);
  }

  template <typename Op>
  Network& combine(const Network& o, Op op) {
    require_same_universe(o);
    for (int w = 0; w < kWords; ++w) words_[w] = op(words_[w], o.words_[w]);
    return *this;
  }

  int universe_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

struct NetworkHash {
  std::size_t operator()(const Network& g) const { return g.hash(); }
};

/// A maximally connected subnetwork together with its player set.
struct Component {
  Network links;
  PlayerSet members;

  friend bool operator==(const Component&, const Component&) = default;
};

namespace detail {

inline void require_player(const Network& g, PlayerId i) {
  if (i < 0 || i >= g.universe()) {
    throw Error(ErrorCode::kInvalidPlayer,
                "player " + std::to_string(i) + " outside universe " +
                    std::to_string(g.universe()));
  }
}

}  // namespace detail

/// N_i(g).
inline PlayerSet neighbors(const Network& g, PlayerId i) {
  detail::require_player(g, i);
  PlayerSet out;
  g.for_each_link([&](Link l) {
    if (l.touches(i)) out.insert(l.other(i));
  });
  return out;
}

/// L_i(g).
inline Network player_links(const Network& g, PlayerId i) {
  detail::require_player(g, i);
  Network out(g.universe());
  g.for_each_link([&](Link l) {
    if (l.touches(i)) out.insert(l);
  });
  return out;
}

/// g|_S.
inline Network restrict(const Network& g, PlayerSet coalition) {
  Network out(g.universe());
  g.for_each_link([&](Link l) {
    if (coalition.contains(l.a) && coalition.contains(l.b)) out.insert(l);
  });
  return out;
}

/// g - g', requiring g' to be a subnetwork of g.
inline Network subtract(const Network& g, const Network& part) {
  if (!part.is_subset_of(g)) {
    throw Error(ErrorCode::kSubsetViolation,
                part.to_string() + " is not a subnetwork of " + g.to_string());
  }
  return g - part;
}

/// C(g), ordered by ascending minimum member. Isolated players appear in no
/// component.
inline std::vector<Component> components(const Network& g) {
  detail::UnionFind<kMaxPlayers> uf(g.universe());
  g.for_each_link([&](Link l) { uf.unite(l.a, l.b); });

  std::array<int, kMaxPlayers> index_of_root;
  index_of_root.fill(-1);
  std::vector<Component> out;
  PlayerSet present = g.players();
  for (PlayerId i : present) {
    int root = uf.find(i);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(out.size());
      out.push_back(Component{Network(g.universe()), PlayerSet()});
    }
    out[index_of_root[root]].members.insert(i);
  }
  g.for_each_link([&](Link l) { out[index_of_root[uf.find(l.a)]].links.insert(l); });
  return out;
}

/// h_i^g, or nothing when i is isolated in g.
inline std::optional<Component> component_of(const Network& g, PlayerId i) {
  detail::require_player(g, i);
  for (Component& c : components(g)) {
    if (c.members.contains(i)) return std::move(c);
  }
  return std::nullopt;
}

/// True iff g is non-empty and has exactly one component.
inline bool is_connected(const Network& g) {
  return !g.empty() && components(g).size() == 1;
}

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<PlayerId> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n > kMaxPlayers) throw Error(ErrorCode::kNotABijection, "too many points");
    std::uint32_t seen = 0;
    for (PlayerId p : image_) {
      if (p < 0 || p >= n || ((seen >> p) & 1u) != 0) {
        throw Error(ErrorCode::kNotABijection, "image is not a permutation");
      }
      seen |= 1u << p;
    }
  }

  static Permutation identity(int n) {
    std::vector<PlayerId> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    return Permutation(std::move(image));
  }

  static Permutation transposition(int n, PlayerId i, PlayerId j) {
    Permutation p = identity(n);
    std::swap(p.image_.at(i), p.image_.at(j));
    return p;
  }

  int size() const { return static_cast<int>(image_.size()); }
  PlayerId operator()(PlayerId i) const { return image_.at(i); }
  const std::vector<PlayerId>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<PlayerId> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (pi o sigma)(i) = pi(sigma(i)).
  friend Permutation compose(const Permutation& pi, const Permutation& sigma) {
    if (pi.size() != sigma.size()) throw Error(ErrorCode::kNotABijection, "size mismatch");
    std::vector<PlayerId> image(pi.size());
    for (int i = 0; i < pi.size(); ++i) image[i] = pi(sigma(i));
    return Permutation(std::move(image));
  }

  PlayerSet apply(PlayerSet s) const {
    PlayerSet out;
    for (PlayerId i : s) out.insert((*this)(i));
    return out;
  }

  /// True iff every player outside `moved` is a fixed point.
  bool fixes_outside(PlayerSet moved) const {
    for (int i = 0; i < size(); ++i) {
      if (!moved.contains(i) && image_[i] != i) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += std::to_string(image_[i] + 1);
    }
    return out + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<PlayerId> image_;
};

/// pi g = { pi(i)pi(j) : ij in g }.
inline Network apply_permutation(const Network& g, const Permutation& pi) {
  if (pi.size() != g.universe()) {
    throw Error(ErrorCode::kNotABijection, "permutation size differs from universe");
  }
  Network out(g.universe());
  g.for_each_link([&](Link l) { out.insert(Link(pi(l.a), pi(l.b))); });
  return out;
}

}  // namespace netgame

template <>
struct std::hash<netgame::Network> {
  std::size_t operator()(const netgame::Network& g) const { return g.hash(); }
};

#endif  // NETGAME_NETWORK_HPP_
