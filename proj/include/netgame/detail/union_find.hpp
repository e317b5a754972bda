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

#ifndef NETGAME_DETAIL_UNION_FIND_HPP_
#define NETGAME_DETAIL_UNION_FIND_HPP_

#include <array>
#include <numeric>

namespace netgame::detail {

// Disjoint sets over at most MaxSize elements, with path halving and union
// by size. Fixed capacity so it can live on the stack inside hot loops.
template <int MaxSize>
class UnionFind {
 public:
  explicit UnionFind(int size) : size_(size) {
    std::iota(parent_.begin(), parent_.begin() + size, 0);
    weight_.fill(1);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (weight_[a] < weight_[b]) std::swap(a, b);
    parent_[b] = a;
    weight_[a] += weight_[b];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int size() const { return size_; }

 private:
  int size_;
  std::array<int, MaxSize> parent_{};
  std::array<int, MaxSize> weight_{};
};

}  // namespace netgame::detail

#endif  // NETGAME_DETAIL_UNION_FIND_HPP_
