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

// The bidding mechanism for network games: bids, net bids, proposals and
// sequential responses, with a breakdown risk after a rejection in the first
// round. Includes the equilibrium strategy profile, an exact-expectation
// engine, and a single-deviation check.

#ifndef NETGAME_BIDDING_HPP_
#define NETGAME_BIDDING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netgame/allocation.hpp"
#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/value_function.hpp"

namespace netgame {

/// Bids b^i_j of every active bidder i to every other active player j.
class BidMatrix {
 public:
  BidMatrix(int universe, PlayerSet members)
      : universe_(universe), members_(members), values_(universe * universe, 0.0) {}

  int universe() const { return universe_; }
  PlayerSet members() const { return members_; }
  double& at(PlayerId bidder, PlayerId target) { return values_.at(bidder * universe_ + target); }
  double at(PlayerId bidder, PlayerId target) const {
    return values_.at(bidder * universe_ + target);
  }

 private:
  int universe_;
  PlayerSet members_;
  std::vector<double> values_;
};

/// B^i = sum_{j != i} (b^i_j - b^j_i) for every member i; 0 for others.
inline std::vector<double> net_bids(const BidMatrix& bids) {
  std::vector<double> out(bids.universe(), 0.0);
  for (PlayerId i : bids.members()) {
    for (PlayerId j : bids.members()) {
      if (i != j) out[i] += bids.at(i, j) - bids.at(j, i);
    }
  }
  return out;
}

/// Myerson payoffs of subnetworks of one game, memoized by local mask.
class MyersonTable {
 public:
  explicit MyersonTable(const ValueFunction& v) : v_(&v) {}

  const std::vector<double>& at(LinkMask m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Allocation y(v_->universe());
    for (LinkMask h : v_->components_of(m)) detail::myerson_over(*v_, h, y);
    return memo_.emplace(m, y.payoffs()).first->second;
  }

 private:
  const ValueFunction* v_;
  std::unordered_map<LinkMask, std::vector<double>> memo_;
};

namespace detail {

inline LinkMask component_mask(const Network& h, const ValueFunction& v) {
  const LinkMask m = scope_of(h, v);
  if (!v.is_connected_mask(m)) throw Error(ErrorCode::kNotConnected, h.to_string());
  return m;
}

inline double bid_amount(MyersonTable& mv, const ValueFunction& v, LinkMask h, double alpha,
                         bool first_round, PlayerId bidder, PlayerId target) {
  const double marginal = mv.at(h)[target] - mv.at(h & ~v.incident(bidder))[target];
  if (!first_round) return marginal;
  return alpha * marginal + (1.0 - alpha) * v.at(h) / v.players_of(h).size();
}

inline double offer_amount(MyersonTable& mv, const ValueFunction& v, LinkMask h, double alpha,
                           bool first_round, PlayerId proposer, PlayerId target) {
  const double rest = mv.at(h & ~v.incident(proposer))[target];
  return first_round ? alpha * rest : rest;
}

}  // namespace detail

/// Equilibrium bids on component h in round t: alpha (MV_j(h) - MV_j(h -
/// L_i(h))) plus (1 - alpha) v(h)/n(h) in round 1 only.
inline BidMatrix equilibrium_bids(const Network& h, const ValueFunction& v, Alpha alpha,
                                  int round = 1) {
  const LinkMask m = detail::component_mask(h, v);
  MyersonTable mv(v);
  const PlayerSet members = v.players_of(m);
  BidMatrix out(v.universe(), members);
  for (PlayerId i : members) {
    for (PlayerId j : members) {
      if (i == j) continue;
      out.at(i, j) = round == 1
                         ? detail::bid_amount(mv, v, m, alpha, true, i, j)
                         : alpha.value() * detail::bid_amount(mv, v, m, alpha, false, i, j);
    }
  }
  return out;
}

/// Equilibrium offers y_j = alpha MV_j(h - L_p(h)) of proposer p, indexed by
/// player; entries outside N(h) - p are 0.
inline std::vector<double> equilibrium_offers(const Network& h, const ValueFunction& v,
                                              Alpha alpha, PlayerId proposer, int round = 1) {
  const LinkMask m = detail::component_mask(h, v);
  const PlayerSet members = v.players_of(m);
  if (!members.contains(proposer)) {
    throw Error(ErrorCode::kInvalidPlayer, "proposer is not in the component");
  }
  (void)round;
  MyersonTable mv(v);
  std::vector<double> out(v.universe(), 0.0);
  for (PlayerId j : members) {
    if (j != proposer) out[j] = detail::offer_amount(mv, v, m, alpha, true, proposer, j);
  }
  return out;
}

/// What a strategy sees when it is asked to act.
struct RoundContext {
  const ValueFunction* game = nullptr;
  LinkMask component = 0;
  int round = 1;
  double alpha = 1.0;
  PlayerSet active;
  PlayerId proposer = -1;
};

struct StrategyProfile {
  std::function<double(const RoundContext&, PlayerId bidder, PlayerId target)> bid;
  std::function<double(const RoundContext&, PlayerId proposer, PlayerId target)> offer;
  std::function<bool(const RoundContext&, PlayerId responder, const std::vector<double>& offers)>
      accept;
  /// False when the strategies themselves randomize; such profiles are run by
  /// sampling and need a seed.
  bool deterministic = true;
};

/// The equilibrium profile. Amounts are the realized transfers: after a
/// first-round rejection the continuation is reached with probability alpha,
/// so later rounds bid and offer the unscaled Myerson differences.
inline StrategyProfile equilibrium_profile(const ValueFunction& v,
                                           double tol = kDefaultTolerance) {
  auto mv = std::make_shared<MyersonTable>(v);
  StrategyProfile p;
  p.bid = [mv](const RoundContext& c, PlayerId i, PlayerId j) {
    return detail::bid_amount(*mv, *c.game, c.component, c.alpha, c.round == 1, i, j);
  };
  p.offer = [mv](const RoundContext& c, PlayerId proposer, PlayerId j) {
    return detail::offer_amount(*mv, *c.game, c.component, c.alpha, c.round == 1, proposer, j);
  };
  p.accept = [mv, tol](const RoundContext& c, PlayerId j, const std::vector<double>& offers) {
    const double due =
        detail::offer_amount(*mv, *c.game, c.component, c.alpha, c.round == 1, c.proposer, j);
    return offers[j] >= due - tol * std::max(1.0, std::abs(c.game->at(c.component)));
  };
  return p;
}

enum class TieMode {
  /// Average over every maximal bidder.
  kExpectation,
  /// Draw one maximal bidder uniformly with the run's seed.
  kSampled,
  /// Take the lowest-numbered maximal bidder.
  kLowestIndex,
};

enum class Terminal { kAccepted, kBrokenDown, kFullyRecursed };

constexpr std::string_view terminal_name(Terminal t) {
  switch (t) {
    case Terminal::kAccepted: return "accepted";
    case Terminal::kBrokenDown: return "broken-down";
    case Terminal::kFullyRecursed: return "fully-recursed";
  }
  return "unknown";
}

struct TraceEvent {
  double probability = 1.0;
  Network component{0};
  int round = 1;
  int stage = 1;
  PlayerId actor = -1;
  std::string action;
  std::vector<PlayerId> targets;
  std::vector<double> amounts;
};

struct MechanismOptions {
  std::optional<TieMode> ties;
  std::optional<std::uint64_t> seed;
  bool record_trace = false;
  double tol = kDefaultTolerance;
};

struct MechanismOutcome {
  Allocation payoffs;
  std::vector<TraceEvent> trace;
  Terminal terminal = Terminal::kAccepted;
};

namespace detail {

class MechanismRun {
 public:
  MechanismRun(const ValueFunction& v, double alpha, const StrategyProfile& profile,
               const MechanismOptions& options)
      : v_(v), alpha_(alpha), profile_(profile), options_(options), payoffs_(v.universe()) {
    ties_ = options.ties.value_or(options.seed ? TieMode::kSampled : TieMode::kExpectation);
    if ((ties_ == TieMode::kSampled || !profile.deterministic) && !options.seed) {
      throw Error(ErrorCode::kNonDeterministicProfileWithoutSeed,
                  "sampling requires a seed");
    }
    if (options.seed) rng_.seed(*options.seed);
  }

  MechanismOutcome run(LinkMask scope) {
    const std::vector<LinkMask> parts = v_.components_of(scope);
    for (LinkMask h : parts) play(h, 1, 1.0);
    MechanismOutcome out;
    out.payoffs = payoffs_;
    out.trace = std::move(trace_);
    if (parts.empty()) {
      out.terminal = Terminal::kFullyRecursed;
    } else if (broke_down_) {
      out.terminal = Terminal::kBrokenDown;
    } else if (rejected_) {
      out.terminal = Terminal::kFullyRecursed;
    } else {
      out.terminal = Terminal::kAccepted;
    }
    return out;
  }

 private:
  void record(double p, LinkMask h, int round, int stage, PlayerId actor, std::string action,
              std::vector<PlayerId> targets = {}, std::vector<double> amounts = {}) {
    if (!options_.record_trace) return;
    TraceEvent e;
    e.probability = p;
    e.component = v_.network_of(h);
    e.round = round;
    e.stage = stage;
    e.actor = actor;
    e.action = std::move(action);
    e.targets = std::move(targets);
    e.amounts = std::move(amounts);
    trace_.push_back(std::move(e));
  }

  void play(LinkMask h, int round, double weight) {
    const PlayerSet members = v_.players_of(h);
    RoundContext ctx{&v_, h, round, alpha_, members, -1};
    BidMatrix bids(v_.universe(), members);
    double scale = 1.0;
    for (PlayerId i : members) {
      std::vector<PlayerId> targets;
      std::vector<double> amounts;
      for (PlayerId j : members) {
        if (i == j) continue;
        bids.at(i, j) = profile_.bid(ctx, i, j);
        scale = std::max(scale, std::abs(bids.at(i, j)));
        targets.push_back(j);
        amounts.push_back(bids.at(i, j));
      }
      record(weight, h, round, 1, i, "bid", std::move(targets), std::move(amounts));
    }
    const std::vector<double> net = net_bids(bids);
    double best = -INFINITY;
    for (PlayerId i : members) best = std::max(best, net[i]);
    std::vector<PlayerId> top;
    for (PlayerId i : members) {
      if (net[i] >= best - options_.tol * scale * members.size()) top.push_back(i);
    }

    std::vector<std::pair<PlayerId, double>> winners;
    switch (ties_) {
      case TieMode::kExpectation:
        for (PlayerId w : top) winners.emplace_back(w, 1.0 / top.size());
        break;
      case TieMode::kSampled: {
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        winners.emplace_back(top[pick(rng_)], 1.0);
        break;
      }
      case TieMode::kLowestIndex:
        winners.emplace_back(top.front(), 1.0);
        break;
    }
    for (const auto& [w, share] : winners) {
      std::vector<double> nets;
      for (PlayerId i : members) nets.push_back(net[i]);
      record(weight * share, h, round, 1, w, "win", members.members(), std::move(nets));
      propose(ctx, bids, w, weight * share);
    }
  }

  void propose(RoundContext ctx, const BidMatrix& bids, PlayerId w, double weight) {
    const LinkMask h = ctx.component;
    const int round = ctx.round;
    ctx.proposer = w;
    std::vector<PlayerId> others;
    for (PlayerId j : ctx.active) {
      if (j != w) others.push_back(j);
    }

    std::vector<double> paid;
    for (PlayerId j : others) {
      payoffs_[j] += weight * bids.at(w, j);
      payoffs_[w] -= weight * bids.at(w, j);
      paid.push_back(bids.at(w, j));
    }
    record(weight, h, round, 1, w, "pay-bids", others, std::move(paid));

    std::vector<double> offers(v_.universe(), 0.0);
    std::vector<double> shown;
    for (PlayerId j : others) {
      offers[j] = profile_.offer(ctx, w, j);
      shown.push_back(offers[j]);
    }
    record(weight, h, round, 2, w, "offer", others, std::move(shown));

    bool accepted = true;
    for (PlayerId j : others) {
      const bool yes = profile_.accept(ctx, j, offers);
      record(weight, h, round, 3, j, yes ? "accept" : "reject", {w}, {offers[j]});
      if (!yes) {
        accepted = false;
        break;
      }
    }

    if (accepted) {
      double total = 0.0;
      std::vector<double> settled;
      for (PlayerId j : others) {
        payoffs_[j] += weight * offers[j];
        total += offers[j];
        settled.push_back(offers[j]);
      }
      payoffs_[w] += weight * (v_.at(h) - total);
      settled.push_back(v_.at(h) - total);
      std::vector<PlayerId> who = others;
      who.push_back(w);
      record(weight, h, round, 4, w, "settle", std::move(who), std::move(settled));
      return;
    }

    rejected_ = true;
    const LinkMask own = h & v_.incident(w);
    const LinkMask rest = h & ~own;
    double go_on = 1.0;
    if (round == 1) {
      if (profile_.deterministic) {
        go_on = alpha_;
      } else {
        go_on = std::bernoulli_distribution(alpha_)(rng_) ? 1.0 : 0.0;
      }
      if (go_on < 1.0) {
        broke_down_ = true;
        record(weight * (1.0 - go_on), h, round, 4, w, "breakdown");
      }
    }
    if (go_on == 0.0) return;
    payoffs_[w] += weight * go_on * v_.at(own);
    record(weight * go_on, h, round, 4, w, "leave", {w}, {v_.at(own)});
    for (LinkMask c : v_.components_of(rest)) play(c, round + 1, weight * go_on);
  }

  const ValueFunction& v_;
  double alpha_;
  const StrategyProfile& profile_;
  MechanismOptions options_;
  TieMode ties_;
  std::mt19937_64 rng_;
  Allocation payoffs_;
  std::vector<TraceEvent> trace_;
  bool rejected_ = false;
  bool broke_down_ = false;
};

}  // namespace detail

/// Runs the mechanism on every component of g. Deterministic profiles are
/// resolved exactly: the breakdown draw after a first-round rejection is
/// weighted rather than sampled.
inline MechanismOutcome run_mechanism(const Network& g, const ValueFunction& v, Alpha alpha,
                                      const StrategyProfile& profile,
                                      const MechanismOptions& options = {}) {
  const LinkMask scope = detail::scope_of(g, v);
  detail::MechanismRun run(v, alpha.value(), profile, options);
  return run.run(scope);
}

namespace detail {

inline void require_mechanism_game(const Network& g, const ValueFunction& v, double tol) {
  const LinkMask scope = scope_of(g, v);
  const PropertyCheck additive = additivity_within(v, scope, tol);
  if (!additive) {
    throw Error(ErrorCode::kNotComponentAdditive, "fails at " + additive.witness->to_string());
  }
  for (LinkMask m = 0;; m = (m - scope) & scope) {
    for (PlayerId i : v.players_of(m)) {
      const LinkMask own = m & v.incident(i);
      if (v.at(m) - v.at(own) < v.at(m & ~own) - tol) {
        throw Error(ErrorCode::kNotZeroMonotonic,
                    "fails at " + v.network_of(m).to_string() + " for player " +
                        std::to_string(i + 1));
      }
    }
    if (m == scope) break;
  }
}

inline double worth_scale(const ValueFunction& v) {
  double s = 1.0;
  for (double x : v.table()) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace detail

/// Expected payoffs of the equilibrium profile; checked against alpha_cem.
inline Allocation spe_payoffs(const Network& g, const ValueFunction& v, Alpha alpha,
                              double tol = kDefaultTolerance) {
  detail::require_mechanism_game(g, v, tol);
  const StrategyProfile profile = equilibrium_profile(v, tol);
  const MechanismOutcome out = run_mechanism(g, v, alpha, profile);
  const Allocation expected = alpha_cem(g, v, alpha);
  const double gap = max_abs_difference(out.payoffs, expected);
  if (gap > tol * detail::worth_scale(v)) {
    throw Error(ErrorCode::kEquilibriumMismatch,
                "mechanism and formula differ by " + std::to_string(gap));
  }
  return out.payoffs;
}

enum class DeviationKind { kBidPerturbation, kOfferPerturbation, kFlipAccept };

constexpr std::string_view deviation_name(DeviationKind k) {
  switch (k) {
    case DeviationKind::kBidPerturbation: return "bid-perturbation";
    case DeviationKind::kOfferPerturbation: return "offer-perturbation";
    case DeviationKind::kFlipAccept: return "flip-accept";
  }
  return "unknown";
}

struct DeviationReport {
  DeviationKind kind;
  PlayerId player = -1;
  double max_gain = 0.0;
  /// Description of the most profitable deviation tried.
  std::string worst;
  int runs = 0;
};

inline std::vector<double> default_deviation_grid() {
  return {-1e-1, -1e-2, -1e-3, 1e-3, 1e-2, 1e-1};
}

/// Payoff gain of player i over alpha_cem from unilateral deviations of one
/// kind, everyone else following the equilibrium profile. Perturbations are
/// scaled by max(1, |v(h_i)|) and applied wherever i acts.
inline DeviationReport deviation_check(const Network& g, const ValueFunction& v, Alpha alpha,
                                       PlayerId i, DeviationKind kind,
                                       const std::vector<double>& grid = default_deviation_grid(),
                                       double tol = kDefaultTolerance) {
  DeviationReport report{kind, i, -INFINITY, "", 0};
  const Allocation baseline = alpha_cem(g, v, alpha);
  const std::optional<Component> home = component_of(g, i);
  if (!home) {
    report.max_gain = 0.0;
    return report;
  }
  const double scale = std::max(1.0, std::abs(v(home->links)));
  const StrategyProfile eq = equilibrium_profile(v, tol);
  MechanismOptions options;
  options.ties = TieMode::kExpectation;

  auto evaluate = [&](const StrategyProfile& p, std::string label) {
    const double gain = run_mechanism(g, v, alpha, p, options).payoffs[i] - baseline[i];
    ++report.runs;
    if (gain > report.max_gain) {
      report.max_gain = gain;
      report.worst = std::move(label);
    }
  };
  auto spread = [](const RoundContext& c) {
    return static_cast<double>(std::max(1, c.active.size() - 1));
  };

  const std::vector<PlayerId> targets = (home->members - PlayerSet{i}).members();
  switch (kind) {
    case DeviationKind::kBidPerturbation:
      for (double e : grid) {
        const double eps = e * scale;
        StrategyProfile p = eq;
        p.bid = [eq, i, eps, spread](const RoundContext& c, PlayerId b, PlayerId t) {
          return eq.bid(c, b, t) + (b == i ? eps / spread(c) : 0.0);
        };
        evaluate(p, "all bids " + std::to_string(eps));
        for (PlayerId k : targets) {
          StrategyProfile q = eq;
          q.bid = [eq, i, k, eps](const RoundContext& c, PlayerId b, PlayerId t) {
            return eq.bid(c, b, t) + (b == i && t == k ? eps : 0.0);
          };
          evaluate(q, "bid to " + std::to_string(k + 1) + " " + std::to_string(eps));
        }
      }
      break;
    case DeviationKind::kOfferPerturbation:
      for (double e : grid) {
        const double eps = e * scale;
        StrategyProfile p = eq;
        p.offer = [eq, i, eps, spread](const RoundContext& c, PlayerId w, PlayerId t) {
          return eq.offer(c, w, t) + (w == i ? eps / spread(c) : 0.0);
        };
        evaluate(p, "all offers " + std::to_string(eps));
        for (PlayerId k : targets) {
          StrategyProfile q = eq;
          q.offer = [eq, i, k, eps](const RoundContext& c, PlayerId w, PlayerId t) {
            return eq.offer(c, w, t) + (w == i && t == k ? eps : 0.0);
          };
          evaluate(q, "offer to " + std::to_string(k + 1) + " " + std::to_string(eps));
        }
      }
      break;
    case DeviationKind::kFlipAccept: {
      StrategyProfile p = eq;
      p.accept = [eq, i](const RoundContext& c, PlayerId j, const std::vector<double>& y) {
        const bool base = eq.accept(c, j, y);
        return j == i ? !base : base;
      };
      evaluate(p, "invert every response");
      StrategyProfile q = eq;
      q.accept = [eq, i](const RoundContext& c, PlayerId j, const std::vector<double>& y) {
        const bool base = eq.accept(c, j, y);
        return j == i && c.round == 1 ? !base : base;
      };
      evaluate(q, "invert first-round responses");
      break;
    }
  }
  if (report.runs == 0) report.max_gain = 0.0;
  return report;
}

/// Largest gain over every player and deviation kind.
inline DeviationReport max_deviation_gain(const Network& g, const ValueFunction& v, Alpha alpha,
                                          const std::vector<double>& grid =
                                              default_deviation_grid(),
                                          double tol = kDefaultTolerance) {
  DeviationReport best{DeviationKind::kBidPerturbation, -1, 0.0, "", 0};
  int runs = 0;
  for (PlayerId i : g.players()) {
    for (DeviationKind k : {DeviationKind::kBidPerturbation, DeviationKind::kOfferPerturbation,
                            DeviationKind::kFlipAccept}) {
      const DeviationReport r = deviation_check(g, v, alpha, i, k, grid, tol);
      runs += r.runs;
      if (best.player < 0 || r.max_gain > best.max_gain) best = r;
    }
  }
  best.runs = runs;
  return best;
}

}  // namespace netgame

#endif  // NETGAME_BIDDING_HPP_
