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

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "netgame/network.hpp"

namespace netgame {
namespace {

using testing::net;
using testing::players;

// Independent component oracle: depth-first search over an adjacency list.
std::vector<std::set<PlayerId>> dfs_components(const Network& g) {
  const int n = g.universe();
  std::vector<std::vector<PlayerId>> adj(n);
  for (const Link& l : g.links()) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::set<PlayerId>> out;
  for (PlayerId s = 0; s < n; ++s) {
    if (seen[s] || adj[s].empty()) continue;
    std::set<PlayerId> part;
    std::vector<PlayerId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const PlayerId u = stack.back();
      stack.pop_back();
      part.insert(u);
      for (PlayerId w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(part);
  }
  return out;
}

std::vector<Network> every_network(int n) {
  const int slots = n * (n - 1) / 2;
  std::vector<Network> out;
  for (std::uint32_t m = 0; m < (1u << slots); ++m) {
    Network g(n);
    for (int s = 0; s < slots; ++s) {
      if ((m >> s) & 1u) g.insert(Network::slot_link(n, s));
    }
    out.push_back(g);
  }
  return out;
}

std::vector<Permutation> every_permutation(int n) {
  std::vector<PlayerId> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

TEST(Link, CanonicalOrder) {
  const Link l(4, 2);
  EXPECT_EQ(l.a, 2);
  EXPECT_EQ(l.b, 4);
  EXPECT_EQ(Link(2, 4), l);
}

TEST(Link, RejectsSelfLoopAndNegative) {
  EXPECT_THROW(Link(3, 3), Error);
  EXPECT_THROW(Link(-1, 2), Error);
  EXPECT_THROW(Link(0, kMaxPlayers), Error);
}

TEST(Network, UniverseBound) {
  EXPECT_NO_THROW(Network{kMaxPlayers});
  try {
    Network g(kMaxPlayers + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseTooLarge);
  }
}

TEST(Network, InsertOutsideUniverse) {
  Network g(3);
  try {
    g.insert(Link(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPlayer);
  }
}

TEST(Network, SlotsAreLexicographic) {
  EXPECT_EQ(Network::slot_index(4, Link(0, 1)), 0);
  EXPECT_EQ(Network::slot_index(4, Link(0, 3)), 2);
  EXPECT_EQ(Network::slot_index(4, Link(1, 2)), 3);
  EXPECT_EQ(Network::slot_index(4, Link(2, 3)), 5);
  const Network all = Network::complete(kMaxPlayers);
  EXPECT_EQ(all.link_count(), kMaxLinkSlots);
  EXPECT_TRUE(all.contains(Link(22, 23)));
}

TEST(Network, BasicQueries) {
  const Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(g.link_count(), 3);
  EXPECT_EQ(g.players(), players({1, 2, 3, 4, 5}));
  EXPECT_EQ(g.to_string(), "{1-2,3-4,4-5}");
  EXPECT_TRUE(Network(5).empty());
  EXPECT_EQ(Network(5).to_string(), "{}");
  EXPECT_EQ(net(6, {{1, 2}}).players(), players({1, 2}));
}

TEST(Network, SetAlgebra) {
  const Network g = net(5, {{1, 2}, {3, 4}});
  const Network h = net(5, {{3, 4}, {4, 5}});
  EXPECT_EQ(g | h, net(5, {{1, 2}, {3, 4}, {4, 5}}));
  EXPECT_EQ(g & h, net(5, {{3, 4}}));
  EXPECT_EQ(g - h, net(5, {{1, 2}}));
  EXPECT_TRUE((g & h).is_subset_of(g));
  EXPECT_FALSE(g.is_subset_of(h));
}

TEST(Network, MixedUniversesRejected) {
  try {
    (void)(Network(3) | Network(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseMismatch);
  }
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(neighbors(net(5, {{1, 2}, {3, 4}, {4, 5}}), 3), players({3, 5}));
  EXPECT_TRUE(neighbors(Network(5), 0).empty());
  EXPECT_EQ(neighbors(net(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}}), 2), players({4, 5}));
  EXPECT_THROW(neighbors(Network(3), 3), Error);
}

TEST(PlayerLinks, Examples) {
  const Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(player_links(g, 3), net(5, {{3, 4}, {4, 5}}));
  EXPECT_EQ(player_links(g, 0), net(5, {{1, 2}}));
  EXPECT_TRUE(player_links(net(5, {{1, 2}}), 4).empty());
}

TEST(Restrict, Examples) {
  const Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(restrict(g, players({3, 4, 5})), net(5, {{3, 4}, {4, 5}}));
  EXPECT_TRUE(restrict(g, players({1, 3})).empty());
  const Network tri = net(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(restrict(tri, players({3, 4, 5})), net(5, {{3, 4}, {4, 5}, {3, 5}}));
}

TEST(Subtract, Examples) {
  const Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(subtract(g, player_links(g, 3)), net(5, {{1, 2}}));
  EXPECT_EQ(subtract(g, Network(5)), g);
  EXPECT_EQ(subtract(g, component_of(g, 0)->links), net(5, {{3, 4}, {4, 5}}));
  try {
    subtract(g, net(5, {{1, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSubsetViolation);
  }
}

TEST(Components, Examples) {
  const auto parts = components(net(5, {{1, 2}, {3, 4}, {4, 5}}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].links, net(5, {{1, 2}}));
  EXPECT_EQ(parts[0].members, players({1, 2}));
  EXPECT_EQ(parts[1].links, net(5, {{3, 4}, {4, 5}}));
  EXPECT_EQ(parts[1].members, players({3, 4, 5}));
  EXPECT_TRUE(components(Network(5)).empty());
  const auto tri = components(net(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}}));
  ASSERT_EQ(tri.size(), 2u);
  EXPECT_EQ(tri[1].links, net(5, {{3, 4}, {4, 5}, {3, 5}}));
}

TEST(Components, OrderedBySmallestMember) {
  const auto parts = components(net(6, {{5, 6}, {2, 4}, {1, 3}}));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].members.min(), 0);
  EXPECT_EQ(parts[1].members.min(), 1);
  EXPECT_EQ(parts[2].members.min(), 4);
}

TEST(ComponentOf, Examples) {
  const Network g = net(6, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(component_of(g, 4)->links, net(6, {{3, 4}, {4, 5}}));
  EXPECT_FALSE(component_of(g, 5).has_value());
  EXPECT_EQ(component_of(net(2, {{1, 2}}), 1)->links, net(2, {{1, 2}}));
}

TEST(Permutation, Examples) {
  const Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(apply_permutation(g, Permutation::identity(5)), g);
  EXPECT_EQ(apply_permutation(net(5, {{1, 2}}), Permutation::transposition(5, 0, 1)),
            net(5, {{1, 2}}));
  // 3 <-> 5 maps 34 to 54 and 45 to 43.
  EXPECT_EQ(apply_permutation(g, Permutation::transposition(5, 2, 4)),
            net(5, {{1, 2}, {3, 4}, {4, 5}}));
  EXPECT_EQ(apply_permutation(net(5, {{1, 3}}), Permutation::transposition(5, 2, 4)),
            net(5, {{1, 5}}));
}

TEST(Permutation, RejectsNonBijection) {
  for (const std::vector<PlayerId>& bad :
       {std::vector<PlayerId>{0, 0, 1}, std::vector<PlayerId>{0, 1, 3}}) {
    try {
      Permutation p(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotABijection);
    }
  }
  EXPECT_THROW(apply_permutation(Network(4), Permutation::identity(3)), Error);
}

TEST(Permutation, InverseAndFixedPoints) {
  const Permutation p({2, 0, 1, 3});
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(4));
  EXPECT_TRUE(p.fixes_outside(PlayerSet{0, 1, 2}));
  EXPECT_FALSE(p.fixes_outside(PlayerSet{0, 1}));
  EXPECT_EQ(p.to_string(), "[3,1,2,4]");
}

TEST(Properties, ComponentsPartitionLinksExhaustive) {
  for (int n = 0; n <= 6; ++n) {
    for (const Network& g : every_network(n)) {
      const auto parts = components(g);
      const auto oracle = dfs_components(g);
      ASSERT_EQ(parts.size(), oracle.size()) << g.to_string();
      Network all(n);
      PlayerSet seen;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const Component& c = parts[k];
        EXPECT_EQ(std::set<PlayerId>(c.members.begin(), c.members.end()), oracle[k]);
        EXPECT_TRUE((all & c.links).empty());
        EXPECT_TRUE((seen & c.members).empty());
        EXPECT_EQ(c.links.players(), c.members);
        EXPECT_TRUE(is_connected(c.links));
        all |= c.links;
        seen = seen | c.members;
      }
      ASSERT_EQ(all, g);
    }
  }
}

TEST(Properties, RestrictionIdentities) {
  for (int n = 0; n <= 5; ++n) {
    for (const Network& g : every_network(n)) {
      EXPECT_EQ(restrict(g, g.players()), g);
      EXPECT_TRUE(restrict(g, PlayerSet()).empty());
      for (PlayerId i = 0; i < n; ++i) {
        const Network own = player_links(g, i);
        const Network rest = subtract(g, own);
        EXPECT_TRUE((rest & own).empty());
        EXPECT_EQ(rest | own, g);
        EXPECT_EQ(component_of(g, i).has_value(), !neighbors(g, i).empty());
      }
    }
  }
}

TEST(Properties, PermutationIsGroupAction) {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = every_permutation(n);
    for (const Network& g : every_network(n)) {
      EXPECT_EQ(apply_permutation(g, Permutation::identity(n)), g);
      for (const Permutation& pi : perms) {
        for (const Permutation& sigma : perms) {
          ASSERT_EQ(apply_permutation(g, compose(pi, sigma)),
                    apply_permutation(apply_permutation(g, sigma), pi));
        }
      }
    }
  }
}

}  // namespace
}  // namespace netgame
