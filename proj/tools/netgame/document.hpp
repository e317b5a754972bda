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

// JSON game documents. Players are numbered from 1 in documents and from 0
// in memory.
//
//   {"players": 5,
//    "network": [[1,2],[3,4],[4,5]],
//    "values": {"components": [{"links": [[1,2]], "worth": 2}, ...]},
//    "default_worth": 0}
//
// "values" holds exactly one of "explicit" (worth of any subnetwork, unlisted
// ones take default_worth), "components" (worth of connected subnetworks,
// closed additively; unlisted ones take default_worth) or "dividends"
// (Harsanyi dividends; entries use the key "dividend").

#ifndef NETGAME_TOOLS_DOCUMENT_HPP_
#define NETGAME_TOOLS_DOCUMENT_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "netgame/netgame.hpp"

namespace netgame::io {

struct GameDocument {
  Network network{0};
  ValueFunction game{Network(0)};
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void bad(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

inline Link read_link(const json& entry, int n) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
      !entry[1].is_number_integer()) {
    bad("a link must be a pair of player numbers: " + entry.dump());
  }
  const long a = entry[0].get<long>(), b = entry[1].get<long>();
  if (a < 1 || a > n || b < 1 || b > n) bad("player out of range in " + entry.dump());
  if (a == b) bad("self link " + entry.dump());
  return Link(static_cast<int>(a - 1), static_cast<int>(b - 1));
}

inline Network read_links(const json& list, int n) {
  if (!list.is_array()) bad("expected a list of links: " + list.dump());
  Network out(n);
  for (const json& entry : list) {
    const Link l = read_link(entry, n);
    if (out.contains(l)) bad("duplicate link " + entry.dump());
    out.insert(l);
  }
  return out;
}

inline double read_number(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_number()) {
    bad(std::string("missing numeric \"") + key + "\" in " + object.dump());
  }
  return it->get<double>();
}

inline json write_links(const Network& g) {
  json out = json::array();
  for (const Link& l : g.links()) out.push_back({l.a + 1, l.b + 1});
  return out;
}

}  // namespace detail

/// Builds the game described by an already parsed document.
inline GameDocument read_document(const nlohmann::json& doc) {
  using detail::bad;
  using nlohmann::json;
  if (!doc.is_object()) bad("document must be a JSON object");
  auto players = doc.find("players");
  if (players == doc.end() || !players->is_number_integer()) bad("missing integer \"players\"");
  const long n = players->get<long>();
  if (n < 0 || n > kMaxPlayers) bad("\"players\" must be in [0, 24]");
  auto links = doc.find("network");
  if (links == doc.end()) bad("missing \"network\"");
  const Network g = detail::read_links(*links, static_cast<int>(n));
  double fallback = 0.0;
  if (auto d = doc.find("default_worth"); d != doc.end()) {
    if (!d->is_number()) bad("\"default_worth\" must be a number");
    fallback = d->get<double>();
  }
  auto values = doc.find("values");
  if (values == doc.end() || !values->is_object() || values->size() != 1) {
    bad("\"values\" must hold exactly one of explicit, components, dividends");
  }
  const std::string mode = values->begin().key();
  const json& entries = values->begin().value();
  if (!entries.is_array()) bad("\"" + mode + "\" must be a list");

  std::map<Network, double> listed;
  const char* key = mode == "dividends" ? "dividend" : "worth";
  for (const json& e : entries) {
    if (!e.is_object()) bad("value entries must be objects");
    auto l = e.find("links");
    if (l == e.end()) bad("value entry without \"links\": " + e.dump());
    const Network sub = detail::read_links(*l, static_cast<int>(n));
    if (!sub.is_subset_of(g)) bad(sub.to_string() + " is not part of the network");
    const double x = detail::read_number(e, key);
    if (sub.empty()) {
      if (x != 0.0) bad("the empty network must be worth 0");
      continue;
    }
    if (!listed.emplace(sub, x).second) bad("duplicate entry for " + sub.to_string());
  }

  GameDocument out{g, ValueFunction(g)};
  if (mode == "explicit") {
    ValueFunction v(g, GameMode::kExplicit);
    for (LinkMask m = 1; m < v.size(); ++m) v.set(m, fallback);
    for (const auto& [sub, x] : listed) v.set(sub, x);
    out.game = std::move(v);
  } else if (mode == "components") {
    std::map<Network, double> worths;
    if (fallback != 0.0) {
      const ValueFunction shape(g);
      for (LinkMask m : connected_subnetworks(shape)) worths[shape.network_of(m)] = fallback;
    }
    for (const auto& [sub, x] : listed) {
      if (!is_connected(sub)) bad(sub.to_string() + " is not connected");
      worths[sub] = x;
    }
    out.game = closure_from_components(g, worths);
  } else if (mode == "dividends") {
    if (fallback != 0.0) bad("\"default_worth\" is not used with dividends");
    out.game = from_dividends(g, listed);
  } else {
    bad("unknown value mode \"" + mode + "\"");
  }
  return out;
}

inline GameDocument parse_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    detail::bad(e.what());
  }
  return read_document(doc);
}

/// Writes every subnetwork's worth.
inline nlohmann::json write_explicit(const Network& g, const ValueFunction& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (LinkMask m = 1; m < v.size(); ++m) {
    entries.push_back({{"links", detail::write_links(v.network_of(m))}, {"worth", v.at(m)}});
  }
  return {{"players", g.universe()},
          {"network", detail::write_links(g)},
          {"values", {{"explicit", entries}}}};
}

/// Writes the worth of every connected subnetwork; the game must be
/// component additive for the document to describe it.
inline nlohmann::json write_components(const Network& g, const ValueFunction& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (LinkMask m : connected_subnetworks(v)) {
    entries.push_back({{"links", detail::write_links(v.network_of(m))}, {"worth", v.at(m)}});
  }
  return {{"players", g.universe()},
          {"network", detail::write_links(g)},
          {"values", {{"components", entries}}}};
}

}  // namespace netgame::io

#endif  // NETGAME_TOOLS_DOCUMENT_HPP_
