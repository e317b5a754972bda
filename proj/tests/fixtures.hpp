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

// Shared fixtures for the test suites. Player numbers in these helpers are
// 1-based, as in the JSON game documents.

#ifndef NETGAME_TESTS_FIXTURES_HPP_
#define NETGAME_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "netgame/netgame.hpp"

namespace netgame::testing {

using Pairs = std::initializer_list<std::pair<int, int>>;

inline Network net(int n, Pairs links) {
  Network g(n);
  for (auto [a, b] : links) g.insert(Link(a - 1, b - 1));
  return g;
}

inline PlayerSet players(std::initializer_list<int> one_based) {
  PlayerSet s;
  for (int i : one_based) s.insert(i - 1);
  return s;
}

/// g = {12, 34, 45}; player 3 adds nothing to any worth.
struct SplitGame {
  Network g = net(5, {{1, 2}, {3, 4}, {4, 5}});
  ValueFunction v{g};

  SplitGame() {
    v.set(net(5, {{1, 2}}), 2);
    v.set(net(5, {{4, 5}}), 2);
    v.set(net(5, {{3, 4}, {4, 5}}), 2);
    v.set(net(5, {{1, 2}, {3, 4}}), 2);
    v.set(net(5, {{1, 2}, {4, 5}}), 4);
    v.set(net(5, {{1, 2}, {3, 4}, {4, 5}}), 4);
  }
};

/// g = {12, 34, 45, 35}, v = 2 u_{12} + 3 u_{34,45,35}. Every rule pays 1 each.
struct FlatGame {
  Network g = net(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
  ValueFunction v = from_dividends(
      g, {{net(5, {{1, 2}}), 2.0}, {net(5, {{3, 4}, {4, 5}, {3, 5}}), 3.0}});
};

inline std::vector<double> alpha_grid() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

inline double max_gap(const Allocation& x, const std::vector<double>& y) {
  double gap = 0.0;
  for (int i = 0; i < x.size(); ++i) gap = std::max(gap, std::abs(x[i] - y.at(i)));
  return gap;
}

}  // namespace netgame::testing

#endif  // NETGAME_TESTS_FIXTURES_HPP_
