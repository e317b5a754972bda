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

#ifndef NETGAME_NETGAME_HPP_
#define NETGAME_NETGAME_HPP_

#include "netgame/allocation.hpp"
#include "netgame/axioms.hpp"
#include "netgame/bidding.hpp"
#include "netgame/corpus.hpp"
#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/subset_transform.hpp"
#include "netgame/value_function.hpp"

#endif  // NETGAME_NETGAME_HPP_
