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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "netgame/bidding.hpp"
#include "netgame/corpus.hpp"

namespace netgame {
namespace {

using testing::SplitGame;
using testing::FlatGame;
using testing::max_gap;
using testing::net;

// v({34}) = v({45}) = 3 but v({34,45}) = 1: player 3 fails zero monotonicity.
ValueFunction not_zero_monotonic(const Network& g) {
  return closure_from_components(
      g, {{net(5, {{3, 4}}), 3.0}, {net(5, {{4, 5}}), 3.0}, {net(5, {{3, 4}, {4, 5}}), 1.0}});
}

TEST(NetBids, ZeroAndAntisymmetric) {
  const PlayerSet members{0, 1, 3};
  BidMatrix zero(4, members);
  for (double b : net_bids(zero)) EXPECT_EQ(b, 0.0);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  BidMatrix bids(4, members);
  for (PlayerId i : members) {
    for (PlayerId j : members) {
      if (i != j) bids.at(i, j) = d(rng);
    }
  }
  const std::vector<double> b = net_bids(bids);
  EXPECT_NEAR(b[0] + b[1] + b[3], 0.0, 1e-12);
  EXPECT_EQ(b[2], 0.0);
}

TEST(EquilibriumBids, SplitGameComponentAtAlphaOne) {
  // MV on {34,45}: (0,1,1); on {45}: (0,1,1) for 3,4,5; on {34} and {}: 0.
  const SplitGame ex;
  const Network h = net(5, {{3, 4}, {4, 5}});
  const BidMatrix b = equilibrium_bids(h, ex.v, 1.0);
  EXPECT_DOUBLE_EQ(b.at(2, 3), 0.0);
  EXPECT_DOUBLE_EQ(b.at(2, 4), 0.0);
  EXPECT_DOUBLE_EQ(b.at(3, 2), 0.0);
  EXPECT_DOUBLE_EQ(b.at(3, 4), 1.0);
  EXPECT_DOUBLE_EQ(b.at(4, 2), 0.0);
  EXPECT_DOUBLE_EQ(b.at(4, 3), 1.0);
  for (double x : net_bids(b)) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(EquilibriumBids, AlphaZeroIsEqualShare) {
  const SplitGame ex;
  const Network h = net(5, {{3, 4}, {4, 5}});
  const BidMatrix b = equilibrium_bids(h, ex.v, 0.0);
  for (PlayerId i : {2, 3, 4}) {
    for (PlayerId j : {2, 3, 4}) {
      if (i != j) {
        EXPECT_DOUBLE_EQ(b.at(i, j), 2.0 / 3);
      }
    }
  }
}

TEST(EquilibriumBids, LaterRoundsDropEqualShare) {
  const SplitGame ex;
  const Network h = net(5, {{3, 4}, {4, 5}});
  const BidMatrix b = equilibrium_bids(h, ex.v, 0.5, 2);
  EXPECT_DOUBLE_EQ(b.at(3, 4), 0.5);
  EXPECT_DOUBLE_EQ(b.at(2, 3), 0.0);
}

TEST(EquilibriumBids, RequiresConnectedComponent) {
  const SplitGame ex;
  try {
    equilibrium_bids(ex.g, ex.v, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConnected);
  }
}

TEST(EquilibriumOffers, Examples) {
  const SplitGame ex;
  const Network h = net(5, {{3, 4}, {4, 5}});
  for (double x : equilibrium_offers(h, ex.v, 0.0, 2)) EXPECT_EQ(x, 0.0);
  const std::vector<double> from4 = equilibrium_offers(h, ex.v, 0.7, 3);
  EXPECT_DOUBLE_EQ(from4[2], 0.0);
  EXPECT_DOUBLE_EQ(from4[4], 0.0);
  const std::vector<double> from3 = equilibrium_offers(h, ex.v, 0.7, 2);
  EXPECT_DOUBLE_EQ(from3[3], 0.7);
  EXPECT_DOUBLE_EQ(from3[4], 0.7);
  EXPECT_THROW(equilibrium_offers(h, ex.v, 0.7, 0), Error);
}

TEST(Mechanism, SplitGame) {
  const SplitGame ex;
  const auto run = run_mechanism(ex.g, ex.v, 0.5, equilibrium_profile(ex.v));
  EXPECT_LE(max_gap(run.payoffs, {1, 1, 1.0 / 3, 5.0 / 6, 5.0 / 6}), 1e-12);
  EXPECT_EQ(run.terminal, Terminal::kAccepted);
}

TEST(Mechanism, EmptyNetwork) {
  const Network g(4);
  const ValueFunction v(g);
  const auto run = run_mechanism(g, v, 0.3, equilibrium_profile(v));
  EXPECT_EQ(run.payoffs.payoffs(), std::vector<double>(4, 0.0));
  EXPECT_EQ(run.terminal, Terminal::kFullyRecursed);
}

TEST(Mechanism, FlatGameIsFlat) {
  const FlatGame ex;
  for (double a : {0.0, 0.37, 1.0}) {
    const auto run = run_mechanism(ex.g, ex.v, a, equilibrium_profile(ex.v));
    EXPECT_LE(max_gap(run.payoffs, std::vector<double>(5, 1.0)), 1e-12);
  }
}

TEST(Mechanism, TieModesAgreeAtEquilibrium) {
  const SplitGame ex;
  const StrategyProfile p = equilibrium_profile(ex.v);
  const Allocation expected = alpha_cem(ex.g, ex.v, 0.6);
  for (TieMode t : {TieMode::kExpectation, TieMode::kLowestIndex}) {
    MechanismOptions o;
    o.ties = t;
    EXPECT_LE(max_abs_difference(run_mechanism(ex.g, ex.v, 0.6, p, o).payoffs, expected), 1e-12);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    MechanismOptions o;
    o.seed = seed;
    EXPECT_LE(max_abs_difference(run_mechanism(ex.g, ex.v, 0.6, p, o).payoffs, expected), 1e-12);
  }
}

TEST(Mechanism, SeededRunsAreReproducible) {
  const FlatGame ex;
  MechanismOptions o;
  o.seed = 99;
  o.record_trace = true;
  const StrategyProfile p = equilibrium_profile(ex.v);
  const auto a = run_mechanism(ex.g, ex.v, 0.4, p, o);
  const auto b = run_mechanism(ex.g, ex.v, 0.4, p, o);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].actor, b.trace[k].actor);
    EXPECT_EQ(a.trace[k].action, b.trace[k].action);
  }
}

TEST(Mechanism, SamplingNeedsSeed) {
  const SplitGame ex;
  StrategyProfile p = equilibrium_profile(ex.v);
  MechanismOptions o;
  o.ties = TieMode::kSampled;
  try {
    run_mechanism(ex.g, ex.v, 0.5, p, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonDeterministicProfileWithoutSeed);
  }
  p.deterministic = false;
  EXPECT_THROW(run_mechanism(ex.g, ex.v, 0.5, p), Error);
  EXPECT_THROW(run_mechanism(ex.g, ex.v, 1.2, equilibrium_profile(ex.v)), Error);
}

TEST(Mechanism, RejectedOffersBreakDownOrRecurse) {
  // Everybody rejects: round 1 breaks down with weight 1 - alpha.
  const SplitGame ex;
  StrategyProfile p = equilibrium_profile(ex.v);
  p.accept = [](const RoundContext&, PlayerId, const std::vector<double>&) { return false; };
  MechanismOptions o;
  o.record_trace = true;
  const auto partial = run_mechanism(ex.g, ex.v, 0.5, p, o);
  EXPECT_EQ(partial.terminal, Terminal::kBrokenDown);
  bool saw_breakdown = false;
  for (const TraceEvent& e : partial.trace) saw_breakdown = saw_breakdown || e.action == "breakdown";
  EXPECT_TRUE(saw_breakdown);
  const auto full = run_mechanism(ex.g, ex.v, 1.0, p, o);
  EXPECT_EQ(full.terminal, Terminal::kFullyRecursed);
}

TEST(Mechanism, TraceAccounting) {
  for (const Network& g : all_networks(4)) {
    GameSampler s(g, network_seed(31, g));
    const ValueFunction v = s.next(GameFamily::kNonnegativeDividends);
    MechanismOptions o;
    o.record_trace = true;
    const auto run = run_mechanism(g, v, 0.5, equilibrium_profile(v), o);
    for (const TraceEvent& e : run.trace) {
      if (e.action == "settle") {
        double total = 0.0;
        for (double x : e.amounts) total += x;
        EXPECT_NEAR(total, v(e.component), 1e-9) << g.to_string();
      }
    }
  }
}

TEST(SpePayoffs, SplitGameColumns) {
  const SplitGame ex;
  EXPECT_LE(max_gap(spe_payoffs(ex.g, ex.v, 1.0), {1, 1, 0, 1, 1}), 1e-12);
  EXPECT_LE(max_gap(spe_payoffs(ex.g, ex.v, 0.0), {1, 1, 2.0 / 3, 2.0 / 3, 2.0 / 3}), 1e-12);
  EXPECT_LE(max_gap(spe_payoffs(ex.g, ex.v, 0.5), {1, 1, 1.0 / 3, 5.0 / 6, 5.0 / 6}), 1e-12);
}

TEST(SpePayoffs, RequiresZeroMonotonicity) {
  const SplitGame ex;
  try {
    spe_payoffs(ex.g, not_zero_monotonic(ex.g), 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotZeroMonotonic);
  }
}

TEST(SpePayoffs, MatchesAlphaCemOnThreePlayerCorpus) {
  for (const Network& g : all_networks(3)) {
    GameSampler s(g, network_seed(7, g));
    for (int k = 0; k < 10; ++k) {
      const ValueFunction v = s.next(GameFamily::kSignedComponents);
      if (!is_zero_monotonic(v)) continue;
      for (double a : testing::alpha_grid()) {
        EXPECT_LE(max_abs_difference(spe_payoffs(g, v, a), alpha_cem(g, v, a)), 1e-9);
        for (const Component& c : components(g)) {
          for (double x : net_bids(equilibrium_bids(c.links, v, a))) EXPECT_LE(std::abs(x), 1e-12);
        }
      }
    }
  }
}

TEST(Deviations, SplitGameHasNoProfitableDeviation) {
  const SplitGame ex;
  for (double a : {0.0, 0.5, 1.0}) {
    const DeviationReport r = max_deviation_gain(ex.g, ex.v, a);
    EXPECT_LE(r.max_gain, 1e-9) << r.worst;
    EXPECT_GT(r.runs, 0);
  }
}

TEST(Deviations, EachKindOnSplitGame) {
  const SplitGame ex;
  for (PlayerId i = 0; i < 5; ++i) {
    for (DeviationKind k : {DeviationKind::kBidPerturbation, DeviationKind::kOfferPerturbation,
                            DeviationKind::kFlipAccept}) {
      const DeviationReport r = deviation_check(ex.g, ex.v, 0.5, i, k);
      EXPECT_EQ(r.kind, k);
      EXPECT_LE(r.max_gain, 1e-9) << deviation_name(k) << " " << i << " " << r.worst;
    }
  }
}

TEST(Deviations, LowerOffersDoNotPay) {
  // A proposer who shades every offer is rejected and ends up no better off.
  const SplitGame ex;
  StrategyProfile p = equilibrium_profile(ex.v);
  const auto eq_offer = p.offer;
  p.offer = [eq_offer](const RoundContext& c, PlayerId proposer, PlayerId target) {
    return eq_offer(c, proposer, target) - (proposer == 3 ? 0.1 : 0.0);
  };
  MechanismOptions o;
  o.ties = TieMode::kExpectation;
  const auto run = run_mechanism(ex.g, ex.v, 0.5, p, o);
  EXPECT_LE(run.payoffs[3], alpha_cem(ex.g, ex.v, 0.5)[3] + 1e-12);
}

TEST(Deviations, NegativeWorthInvitesRejection) {
  // Zero monotonic as defined, yet the proposer gains by being refused.
  const Network g = net(2, {{1, 2}});
  const ValueFunction v = from_dividends(g, {{g, -2.0}});
  ASSERT_TRUE(is_zero_monotonic(v).holds);
  EXPECT_LE(max_abs_difference(spe_payoffs(g, v, Alpha(0.0)), alpha_cem(g, v, Alpha(0.0))), 1e-12);
  EXPECT_GT(max_deviation_gain(g, v, Alpha(0.0)).max_gain, 0.5);
}

}  // namespace
}  // namespace netgame
