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

// Axioms for network allocation rules: instance-level checkers, a small
// library of rules (including the independence counterexamples), and an
// exhaustive auditor over every network on a few players.

#ifndef NETGAME_AXIOMS_HPP_
#define NETGAME_AXIOMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netgame/allocation.hpp"
#include "netgame/corpus.hpp"
#include "netgame/error.hpp"
#include "netgame/network.hpp"
#include "netgame/value_function.hpp"

namespace netgame {

enum class Axiom {
  kEfficiency,
  kComponentBalance,
  kEqualBargainingPower,
  kBalancedContributions,
  kBalancedComponentContributions,
  kAnonymity,
  kLinearity,
  kAdditivity,
  kSuperfluousProductive,
  kWeakMonotonicity,
  kLocalMonotonicity,
  kStrongDifferentialMonotonicity,
  kIsolatedZero,
};

inline constexpr std::array<Axiom, 13> kAllAxioms = {
    Axiom::kEfficiency,
    Axiom::kComponentBalance,
    Axiom::kEqualBargainingPower,
    Axiom::kBalancedContributions,
    Axiom::kBalancedComponentContributions,
    Axiom::kAnonymity,
    Axiom::kLinearity,
    Axiom::kAdditivity,
    Axiom::kSuperfluousProductive,
    Axiom::kWeakMonotonicity,
    Axiom::kLocalMonotonicity,
    Axiom::kStrongDifferentialMonotonicity,
    Axiom::kIsolatedZero,
};

constexpr std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kEfficiency: return "efficiency";
    case Axiom::kComponentBalance: return "component-balance";
    case Axiom::kEqualBargainingPower: return "equal-bargaining-power";
    case Axiom::kBalancedContributions: return "balanced-contributions";
    case Axiom::kBalancedComponentContributions: return "balanced-component-contributions";
    case Axiom::kAnonymity: return "anonymity";
    case Axiom::kLinearity: return "linearity";
    case Axiom::kAdditivity: return "additivity";
    case Axiom::kSuperfluousProductive: return "superfluous-productive";
    case Axiom::kWeakMonotonicity: return "weak-monotonicity";
    case Axiom::kLocalMonotonicity: return "local-monotonicity";
    case Axiom::kStrongDifferentialMonotonicity: return "strong-differential-monotonicity";
    case Axiom::kIsolatedZero: return "isolated-zero";
  }
  return "unknown";
}

enum class Verdict { kHolds, kViolated, kNotApplicable };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

/// The instance on which an axiom failed.
struct Witness {
  explicit Witness(Network network) : g(std::move(network)) {}

  Network g;
  std::optional<ValueFunction> v;
  std::optional<ValueFunction> w;
  std::optional<Permutation> pi;
  std::optional<Network> h;
  std::optional<PlayerId> i;
  std::optional<PlayerId> j;
  std::string detail;
};

inline std::string describe(const Witness& x) {
  std::string out = "g=" + x.g.to_string();
  if (x.h) out += " h=" + x.h->to_string();
  if (x.i) out += " i=" + std::to_string(*x.i + 1);
  if (x.j) out += " j=" + std::to_string(*x.j + 1);
  if (x.pi) out += " pi=" + x.pi->to_string();
  if (!x.detail.empty()) out += " " + x.detail;
  return out;
}

struct AxiomReport {
  Axiom axiom;
  Verdict verdict = Verdict::kHolds;
  std::optional<Witness> witness;
  double residual = 0.0;
  long checked = 0;
  long applicable = 0;
};

using RuleFn = std::function<Allocation(const Network&, const ValueFunction&)>;

/// A named allocation rule together with the axioms it is expected to satisfy.
struct RuleUnderTest {
  std::string name;
  RuleFn evaluate;
  std::vector<Axiom> claims;

  Allocation operator()(const Network& g, const ValueFunction& v) const {
    return evaluate(g, v);
  }
  bool claims_axiom(Axiom a) const {
    return std::find(claims.begin(), claims.end(), a) != claims.end();
  }
};

namespace detail {

inline Witness witness(const Network& g, const ValueFunction& v) {
  Witness w(g);
  w.v = v;
  return w;
}

inline Witness witness(const Network& g, const ValueFunction& v, const ValueFunction& other) {
  Witness w = witness(g, v);
  w.w = other;
  return w;
}

inline AxiomReport report_for(Axiom a) {
  AxiomReport r;
  r.axiom = a;
  return r;
}

inline AxiomReport instance_report(Axiom a) {
  AxiomReport r = report_for(a);
  r.checked = 1;
  return r;
}

inline void fail(AxiomReport& r, Witness w, double residual) {
  r.verdict = Verdict::kViolated;
  r.residual = residual;
  r.witness = std::move(w);
}

inline void require_component(const Network& g, const Network& h) {
  for (const Component& c : components(g)) {
    if (c.links == h) return;
  }
  throw Error(ErrorCode::kSubsetViolation, h.to_string() + " is not a component of " +
                                               g.to_string());
}

}  // namespace detail

/// sum_{i in N(g)} Y_i(g,v) = v(g).
inline AxiomReport check_efficiency(const RuleUnderTest& rule, const Network& g,
                                    const ValueFunction& v, double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kEfficiency);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  const double gap = std::abs(y.sum_over(g.players()) - v(g));
  if (gap > tol) detail::fail(r, detail::witness(g, v), gap);
  return r;
}

/// sum_{i in N(h)} Y_i(g,v) = v(h) for every component h of g.
inline AxiomReport check_component_balance(const RuleUnderTest& rule, const Network& g,
                                           const ValueFunction& v,
                                           double tol = kDefaultTolerance) {
  const PropertyCheck additive = detail::additivity_within(v, detail::scope_of(g, v), tol);
  if (!additive) {
    throw Error(ErrorCode::kNotComponentAdditive,
                "fails at " + additive.witness->to_string());
  }
  AxiomReport r = detail::instance_report(Axiom::kComponentBalance);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  for (const Component& c : components(g)) {
    const double gap = std::abs(y.sum_over(c.members) - v(c.links));
    if (gap > tol) {
      Witness w = detail::witness(g, v);
      w.h = c.links;
      detail::fail(r, std::move(w), gap);
      break;
    }
  }
  return r;
}

/// Y_i(g) - Y_i(g - ij) = Y_j(g) - Y_j(g - ij) for every link ij of g.
inline AxiomReport check_equal_bargaining_power(const RuleUnderTest& rule, const Network& g,
                                                const ValueFunction& v,
                                                double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kEqualBargainingPower);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  for (const Link& l : g.links()) {
    Network cut = g;
    cut.erase(l);
    const Allocation z = rule(cut, v);
    const double gap = std::abs((y[l.a] - z[l.a]) - (y[l.b] - z[l.b]));
    if (gap > tol) {
      Witness w = detail::witness(g, v);
      w.i = l.a;
      w.j = l.b;
      detail::fail(r, std::move(w), gap);
      break;
    }
  }
  return r;
}

/// Y_i(g) - Y_i(g - L_j(g)) = Y_j(g) - Y_j(g - L_i(g)) for i, j in N(g).
inline AxiomReport check_balanced_contributions(const RuleUnderTest& rule, const Network& g,
                                                const ValueFunction& v,
                                                double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kBalancedContributions);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  const std::vector<PlayerId> members = g.players().members();
  std::vector<Allocation> without(v.universe());
  for (PlayerId i : members) without[i] = rule(g - player_links(g, i), v);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const PlayerId i = members[a], j = members[b];
      const double gap = std::abs((y[i] - without[j][i]) - (y[j] - without[i][j]));
      if (gap > tol) {
        Witness w = detail::witness(g, v);
        w.i = i;
        w.j = j;
        detail::fail(r, std::move(w), gap);
        return r;
      }
    }
  }
  return r;
}

/// Y_i(g) - Y_i(g - h_j) = Y_j(g) - Y_j(g - h_i) for i, j in N(g).
inline AxiomReport check_balanced_component_contributions(const RuleUnderTest& rule,
                                                          const Network& g,
                                                          const ValueFunction& v,
                                                          double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kBalancedComponentContributions);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  const std::vector<PlayerId> members = g.players().members();
  std::vector<Allocation> without(v.universe());
  for (PlayerId i : members) without[i] = rule(g - component_of(g, i)->links, v);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const PlayerId i = members[a], j = members[b];
      const double gap = std::abs((y[i] - without[j][i]) - (y[j] - without[i][j]));
      if (gap > tol) {
        Witness w = detail::witness(g, v);
        w.i = i;
        w.j = j;
        detail::fail(r, std::move(w), gap);
        return r;
      }
    }
  }
  return r;
}

/// Y_i(g,v) = Y_{pi(i)}(pi g, pi v) for i in N(g).
inline AxiomReport check_anonymity(const RuleUnderTest& rule, const Network& g,
                                   const ValueFunction& v, const Permutation& pi,
                                   double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kAnonymity);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  const Allocation z = rule(apply_permutation(g, pi), permute_game(v, pi));
  for (PlayerId i : g.players()) {
    const double gap = std::abs(y[i] - z[pi(i)]);
    if (gap > tol) {
      Witness w = detail::witness(g, v);
      w.pi = pi;
      w.i = i;
      detail::fail(r, std::move(w), gap);
      break;
    }
  }
  return r;
}

/// Y_i(g, av + bw) = a Y_i(g,v) + b Y_i(g,w) for i in N(g). Reported as
/// additivity when a = b = 1.
inline AxiomReport check_linearity(const RuleUnderTest& rule, const Network& g,
                                   const ValueFunction& v, const ValueFunction& w, double a,
                                   double b, double tol = kDefaultTolerance) {
  v.require_same_ground(w);
  AxiomReport r = detail::instance_report(a == 1.0 && b == 1.0 ? Axiom::kAdditivity
                                                               : Axiom::kLinearity);
  r.applicable = 1;
  const Allocation lhs = rule(g, a * v + b * w);
  const Allocation yv = rule(g, v);
  const Allocation yw = rule(g, w);
  const double scale = 1.0 + std::abs(a) + std::abs(b);
  for (PlayerId i : g.players()) {
    const double gap = std::abs(lhs[i] - (a * yv[i] + b * yw[i]));
    if (gap > tol * scale) {
      Witness x = detail::witness(g, v, w);
      x.i = i;
      x.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      detail::fail(r, std::move(x), gap);
      break;
    }
  }
  return r;
}

inline AxiomReport check_additivity(const RuleUnderTest& rule, const Network& g,
                                    const ValueFunction& v, const ValueFunction& w,
                                    double tol = kDefaultTolerance) {
  return check_linearity(rule, g, v, w, 1.0, 1.0, tol);
}

/// Players i in N(g) with v(g') = v(g' - L_i(g')) for every subnetwork g'
/// of the game's ground.
inline PlayerSet find_superfluous_players(const Network& g, const ValueFunction& v,
                                          double tol = kDefaultTolerance) {
  detail::scope_of(g, v);
  PlayerSet out;
  for (PlayerId i : g.players()) {
    const LinkMask own = v.incident(i);
    bool idle = true;
    for (LinkMask m = 0; m < v.size() && idle; ++m) {
      idle = std::abs(v.at(m) - v.at(m & ~own)) <= tol;
    }
    if (idle) out.insert(i);
  }
  return out;
}

/// Superfluous players of a network with v(g) >= 0 get Y_i >= 0.
inline AxiomReport check_superfluous_productive(const RuleUnderTest& rule, const Network& g,
                                                const ValueFunction& v,
                                                double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kSuperfluousProductive);
  const PlayerSet idle = find_superfluous_players(g, v, tol);
  if (idle.empty() || v(g) < -tol) return r;
  r.applicable = 1;
  const Allocation y = rule(g, v);
  for (PlayerId i : idle) {
    if (y[i] < -tol) {
      Witness w = detail::witness(g, v);
      w.i = i;
      detail::fail(r, std::move(w), -y[i]);
      break;
    }
  }
  return r;
}

/// Hypotheses: pi fixes every player outside N(h), v(h) >= w(pi h), and
/// v(g|_S) - v(g|_{S-i}) >= w(pi g|_S) - w(pi g|_{S-i}) for S in N(h) with i
/// in S. Conclusion: Y_i(g,v) >= Y_i(pi g, w). The game w lives on pi g.
inline AxiomReport check_cw_weak_monotonicity(const RuleUnderTest& rule, const Network& g,
                                              const Network& h, PlayerId i,
                                              const Permutation& pi, const ValueFunction& v,
                                              const ValueFunction& w,
                                              double tol = kDefaultTolerance) {
  detail::require_component(g, h);
  const PlayerSet members = h.players();
  if (!members.contains(i)) {
    throw Error(ErrorCode::kInvalidPlayer, "player not in the component");
  }
  if (!pi.fixes_outside(members)) {
    throw Error(ErrorCode::kNotABijection, "permutation moves players outside the component");
  }
  AxiomReport r = detail::instance_report(Axiom::kWeakMonotonicity);
  const Network pg = apply_permutation(g, pi);
  const LinkMask gv = detail::scope_of(g, v);
  const LinkMask gw = detail::scope_of(pg, w);
  if (v(h) < w(apply_permutation(h, pi)) - tol) {
    r.verdict = Verdict::kNotApplicable;
    return r;
  }
  const std::uint32_t full = members.bits();
  const std::uint32_t bit = std::uint32_t{1} << i;
  for (std::uint32_t s = full;; s = (s - 1) & full) {
    if (s & bit) {
      const PlayerSet with(s), without(s & ~bit);
      const double dv = v.at(v.restrict_mask(gv, with)) - v.at(v.restrict_mask(gv, without));
      const double dw = w.at(w.restrict_mask(gw, with)) - w.at(w.restrict_mask(gw, without));
      if (dv < dw - tol) {
        r.verdict = Verdict::kNotApplicable;
        return r;
      }
    }
    if (s == 0) break;
  }
  r.applicable = 1;
  const double gap = rule(pg, w)[i] - rule(g, v)[i];
  if (gap > tol) {
    Witness x = detail::witness(g, v, w);
    x.pi = pi;
    x.h = h;
    x.i = i;
    detail::fail(r, std::move(x), gap);
  }
  return r;
}

/// For i, j in a component h with v(g|_{S+i}) >= v(g|_{S+j}) for every
/// S in N(h) - {i, j}: Y_i(g,v) >= Y_j(g,v).
inline AxiomReport check_cw_local_monotonicity(const RuleUnderTest& rule, const Network& g,
                                               const ValueFunction& v,
                                               double tol = kDefaultTolerance) {
  AxiomReport r = detail::report_for(Axiom::kLocalMonotonicity);
  const LinkMask gm = detail::scope_of(g, v);
  std::optional<Allocation> y;
  for (const Component& c : components(g)) {
    for (PlayerId i : c.members) {
      for (PlayerId j : c.members) {
        if (i == j) continue;
        ++r.checked;
        const std::uint32_t rest = c.members.bits() & ~((1u << i) | (1u << j));
        bool dominated = true;
        for (std::uint32_t s = rest;; s = (s - 1) & rest) {
          const double vi = v.at(v.restrict_mask(gm, PlayerSet(s | (1u << i))));
          const double vj = v.at(v.restrict_mask(gm, PlayerSet(s | (1u << j))));
          if (vi < vj - tol) {
            dominated = false;
            break;
          }
          if (s == 0) break;
        }
        if (!dominated) continue;
        ++r.applicable;
        if (!y) y = rule(g, v);
        const double gap = (*y)[j] - (*y)[i];
        if (gap > tol && r.verdict != Verdict::kViolated) {
          Witness x = detail::witness(g, v);
          x.h = c.links;
          x.i = i;
          x.j = j;
          detail::fail(r, std::move(x), gap);
        }
      }
    }
  }
  if (r.applicable == 0) r.verdict = Verdict::kNotApplicable;
  return r;
}

/// For i, j in a component h with v(g|_{S+i}) - v(g|_{S+j}) >=
/// w(g|_{S+i}) - w(g|_{S+j}) for every S in N(h) - {i, j}:
/// Y_i(g,v) - Y_j(g,v) >= Y_i(g,w) - Y_j(g,w).
inline AxiomReport check_strong_differential_monotonicity(const RuleUnderTest& rule,
                                                          const Network& g,
                                                          const ValueFunction& v,
                                                          const ValueFunction& w,
                                                          double tol = kDefaultTolerance) {
  v.require_same_ground(w);
  AxiomReport r = detail::report_for(Axiom::kStrongDifferentialMonotonicity);
  const LinkMask gm = detail::scope_of(g, v);
  std::optional<Allocation> yv, yw;
  for (const Component& c : components(g)) {
    for (PlayerId i : c.members) {
      for (PlayerId j : c.members) {
        if (i == j) continue;
        ++r.checked;
        const std::uint32_t rest = c.members.bits() & ~((1u << i) | (1u << j));
        bool dominated = true;
        for (std::uint32_t s = rest;; s = (s - 1) & rest) {
          const LinkMask si = v.restrict_mask(gm, PlayerSet(s | (1u << i)));
          const LinkMask sj = v.restrict_mask(gm, PlayerSet(s | (1u << j)));
          if (v.at(si) - v.at(sj) < w.at(si) - w.at(sj) - tol) {
            dominated = false;
            break;
          }
          if (s == 0) break;
        }
        if (!dominated) continue;
        ++r.applicable;
        if (!yv) {
          yv = rule(g, v);
          yw = rule(g, w);
        }
        const double gap = ((*yw)[i] - (*yw)[j]) - ((*yv)[i] - (*yv)[j]);
        if (gap > tol && r.verdict != Verdict::kViolated) {
          Witness x = detail::witness(g, v, w);
          x.h = c.links;
          x.i = i;
          x.j = j;
          detail::fail(r, std::move(x), gap);
        }
      }
    }
  }
  if (r.applicable == 0) r.verdict = Verdict::kNotApplicable;
  return r;
}

/// Players outside N(g) get exactly 0 (up to tol).
inline AxiomReport check_isolated_zero(const RuleUnderTest& rule, const Network& g,
                                       const ValueFunction& v, double tol = kDefaultTolerance) {
  AxiomReport r = detail::instance_report(Axiom::kIsolatedZero);
  r.applicable = 1;
  const Allocation y = rule(g, v);
  if (y.size() != v.universe()) {
    Witness x = detail::witness(g, v);
    x.detail = "wrong payoff vector length";
    detail::fail(r, std::move(x), INFINITY);
    return r;
  }
  const PlayerSet present = g.players();
  for (PlayerId i = 0; i < y.size(); ++i) {
    if (!present.contains(i) && std::abs(y[i]) > tol) {
      Witness x = detail::witness(g, v);
      x.i = i;
      detail::fail(r, std::move(x), std::abs(y[i]));
      break;
    }
  }
  return r;
}

namespace rules {

inline std::vector<Axiom> base_claims() {
  return {Axiom::kEfficiency,        Axiom::kComponentBalance,
          Axiom::kAnonymity,         Axiom::kLinearity,
          Axiom::kAdditivity,        Axiom::kSuperfluousProductive,
          Axiom::kWeakMonotonicity,  Axiom::kLocalMonotonicity,
          Axiom::kStrongDifferentialMonotonicity, Axiom::kIsolatedZero};
}

inline RuleUnderTest myerson() {
  std::vector<Axiom> claims = base_claims();
  claims.push_back(Axiom::kEqualBargainingPower);
  claims.push_back(Axiom::kBalancedContributions);
  return {"mv", [](const Network& g, const ValueFunction& v) { return myerson_subset(g, v); },
          claims};
}

inline RuleUnderTest equal_division() {
  std::vector<Axiom> claims = base_claims();
  claims.push_back(Axiom::kBalancedComponentContributions);
  return {"ce", [](const Network& g, const ValueFunction& v) { return ce_rule(g, v); }, claims};
}

inline RuleUnderTest cem(Alpha alpha) {
  std::vector<Axiom> claims = base_claims();
  if (alpha.value() == 1.0) {
    claims.push_back(Axiom::kEqualBargainingPower);
    claims.push_back(Axiom::kBalancedContributions);
  }
  if (alpha.value() == 0.0) claims.push_back(Axiom::kBalancedComponentContributions);
  char name[48];
  std::snprintf(name, sizeof name, "cem(%.12g)", alpha.value());
  return {name,
          [alpha](const Network& g, const ValueFunction& v) { return alpha_cem(g, v, alpha); },
          claims};
}

/// Y = 0.
inline RuleUnderTest zero() {
  return {"zero",
          [](const Network&, const ValueFunction& v) { return Allocation(v.universe()); },
          {Axiom::kEqualBargainingPower, Axiom::kBalancedContributions,
           Axiom::kBalancedComponentContributions, Axiom::kAnonymity, Axiom::kLinearity,
           Axiom::kAdditivity, Axiom::kSuperfluousProductive, Axiom::kWeakMonotonicity,
           Axiom::kLocalMonotonicity, Axiom::kStrongDifferentialMonotonicity,
           Axiom::kIsolatedZero}};
}

/// Myerson value when v(g) <= limit, equal division otherwise.
inline RuleUnderTest threshold(double limit = 5.0) {
  char name[48];
  std::snprintf(name, sizeof name, "threshold(%.12g)", limit);
  return {name,
          [limit](const Network& g, const ValueFunction& v) {
            return v(g) <= limit ? myerson_subset(g, v) : ce_rule(g, v);
          },
          {Axiom::kEfficiency, Axiom::kComponentBalance, Axiom::kAnonymity,
           Axiom::kSuperfluousProductive, Axiom::kWeakMonotonicity, Axiom::kLocalMonotonicity,
           Axiom::kIsolatedZero}};
}

/// a * Myerson + (1 - a) * equal division for a real a, possibly outside
/// [0, 1]; a = -2 gives -2 MV + 3 CE and a = 2 gives 2 MV - CE.
inline RuleUnderTest affine(double a) {
  std::vector<Axiom> claims = {Axiom::kEfficiency, Axiom::kComponentBalance,
                               Axiom::kAnonymity,  Axiom::kLinearity,
                               Axiom::kAdditivity, Axiom::kIsolatedZero};
  if (a >= 0.0) {
    claims.push_back(Axiom::kLocalMonotonicity);
    claims.push_back(Axiom::kStrongDifferentialMonotonicity);
  }
  if (a <= 1.0) claims.push_back(Axiom::kSuperfluousProductive);
  if (a >= 0.0 && a <= 1.0) claims.push_back(Axiom::kWeakMonotonicity);
  char name[48];
  std::snprintf(name, sizeof name, "affine(%.12g)", a);
  return {name,
          [a](const Network& g, const ValueFunction& v) {
            return mix(myerson_subset(g, v), ce_rule(g, v), a);
          },
          claims};
}

/// Y_i = a_i v(h_i) with distinct weights a_i proportional to the rank of i
/// within its component.
inline RuleUnderTest weighted() {
  return {"weighted",
          [](const Network& g, const ValueFunction& v) {
            Allocation out(v.universe());
            for (const Component& c : components(g)) {
              const double m = c.members.size();
              const double worth = v(c.links);
              int rank = 0;
              for (PlayerId i : c.members) out[i] = 2.0 * (++rank) / (m * (m + 1)) * worth;
            }
            return out;
          },
          {Axiom::kEfficiency, Axiom::kComponentBalance, Axiom::kLinearity, Axiom::kAdditivity,
           Axiom::kSuperfluousProductive, Axiom::kWeakMonotonicity, Axiom::kIsolatedZero}};
}

}  // namespace rules

/// A finite corpus: every network on `players` players, and for each of them
/// `games_per_network` seeded games from each game family.
struct CorpusSpec {
  int players = 3;
  int games_per_network = 4;
  std::uint64_t seed = 20240917;
  /// Permutations tried per game for anonymity when players > 4.
  int anonymity_samples = 24;
};

/// Comparison games w for weak monotonicity checks on component h of g.
struct MonotonicityPair {
  Permutation pi;
  ValueFunction w;
};

inline std::vector<MonotonicityPair> weak_monotonicity_pairs(const Network& g,
                                                             const ValueFunction& v,
                                                             const Network& h) {
  std::vector<MonotonicityPair> out;
  const int n = g.universe();
  const Permutation id = Permutation::identity(n);
  const std::vector<Link> links = h.links();
  for (const Link& l : links) {
    out.push_back({id, v - unanimity_game(v.ground(), Network(n, {l}))});
  }
  for (std::size_t a = 0; a < links.size(); ++a) {
    for (std::size_t b = a + 1; b < links.size(); ++b) {
      const Network pair(n, {links[a], links[b]});
      if (is_connected(pair)) out.push_back({id, v - unanimity_game(v.ground(), pair)});
    }
  }
  for (const Link& x : links) {
    for (const Link& y : links) {
      if (x == y) continue;
      out.push_back({id, v - unanimity_game(v.ground(), Network(n, {x})) +
                             unanimity_game(v.ground(), Network(n, {y}))});
    }
  }
  for (double lambda : {0.0, 0.5, 0.9}) out.push_back({id, lambda * v});
  const std::vector<PlayerId> members = h.players().members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Permutation tau = Permutation::transposition(n, members[a], members[b]);
      const ValueFunction moved = permute_game(v, tau);
      out.push_back({tau, moved});
      out.push_back({tau, 0.5 * moved});
    }
  }
  return out;
}

namespace detail {

inline void absorb(AxiomReport& total, const AxiomReport& one) {
  total.checked += one.checked;
  total.applicable += one.applicable;
  if (one.verdict == Verdict::kViolated) {
    if (total.verdict != Verdict::kViolated) {
      total.verdict = Verdict::kViolated;
      total.witness = one.witness;
    }
    total.residual = std::max(total.residual, one.residual);
  }
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<PlayerId> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace detail

namespace detail {

// Accumulates every requested check on one game v over ground g. `next` is
// the partner game for linearity and strong differential monotonicity.
class AuditSink {
 public:
  AuditSink(const RuleUnderTest& rule, std::vector<Axiom> axioms, double tol)
      : rule_(rule), axioms_(std::move(axioms)), tol_(tol) {
    for (Axiom a : axioms_) totals_.push_back(report_for(a));
  }

  bool wants(Axiom a) const {
    return std::find(axioms_.begin(), axioms_.end(), a) != axioms_.end();
  }

  void game(const Network& g, const ValueFunction& v, const ValueFunction& next,
            const std::vector<Permutation>& perms, double a, double b, bool superfluous) {
    const RuleUnderTest& y = rule_;
    const double tol = tol_;
    if (wants(Axiom::kEfficiency)) add(check_efficiency(y, g, v, tol));
    if (wants(Axiom::kComponentBalance)) add(check_component_balance(y, g, v, tol));
    if (wants(Axiom::kEqualBargainingPower)) add(check_equal_bargaining_power(y, g, v, tol));
    if (wants(Axiom::kBalancedContributions)) add(check_balanced_contributions(y, g, v, tol));
    if (wants(Axiom::kBalancedComponentContributions)) {
      add(check_balanced_component_contributions(y, g, v, tol));
    }
    if (wants(Axiom::kAnonymity)) {
      for (const Permutation& pi : perms) add(check_anonymity(y, g, v, pi, tol));
    }
    if (wants(Axiom::kLinearity)) add(check_linearity(y, g, v, next, a, b, tol));
    if (wants(Axiom::kAdditivity)) add(check_additivity(y, g, v, next, tol));
    if (wants(Axiom::kSuperfluousProductive) && superfluous) {
      add(check_superfluous_productive(y, g, v, tol));
    }
    if (wants(Axiom::kWeakMonotonicity)) {
      for (const Component& c : components(g)) {
        const std::vector<MonotonicityPair> pairs = weak_monotonicity_pairs(g, v, c.links);
        for (PlayerId i : c.members) {
          for (const MonotonicityPair& p : pairs) {
            add(check_cw_weak_monotonicity(y, g, c.links, i, p.pi, v, p.w, tol));
          }
        }
      }
    }
    if (wants(Axiom::kLocalMonotonicity)) add(check_cw_local_monotonicity(y, g, v, tol));
    if (wants(Axiom::kStrongDifferentialMonotonicity)) {
      std::vector<ValueFunction> others = {next, 0.5 * v};
      for (const Link& l : g.links()) {
        others.push_back(v - unanimity_game(v.ground(), Network(g.universe(), {l})));
      }
      for (const ValueFunction& w : others) {
        add(check_strong_differential_monotonicity(y, g, v, w, tol));
      }
    }
    if (wants(Axiom::kIsolatedZero)) add(check_isolated_zero(y, g, v, tol));
  }

  std::vector<AxiomReport> finish() {
    for (AxiomReport& r : totals_) {
      if (r.verdict != Verdict::kViolated && r.applicable == 0) {
        r.verdict = Verdict::kNotApplicable;
      }
    }
    return totals_;
  }

 private:
  void add(const AxiomReport& one) {
    AxiomReport& total =
        totals_[std::find(axioms_.begin(), axioms_.end(), one.axiom) - axioms_.begin()];
    absorb(total, one);
  }

  const RuleUnderTest& rule_;
  std::vector<Axiom> axioms_;
  double tol_;
  std::vector<AxiomReport> totals_;
};

}  // namespace detail

inline std::vector<Axiom> all_axioms() { return {kAllAxioms.begin(), kAllAxioms.end()}; }

/// Runs the requested checkers over the corpus. Superfluous-player checks use
/// only the nonnegative game families.
inline std::vector<AxiomReport> audit(const RuleUnderTest& rule, const CorpusSpec& corpus,
                                      const std::vector<Axiom>& axioms = all_axioms(),
                                      double tol = kDefaultTolerance) {
  const std::vector<Network> networks = all_networks(corpus.players);
  const int n = corpus.players;
  detail::AuditSink sink(rule, axioms, tol);
  std::vector<Permutation> every;
  if (n <= 4) every = detail::all_permutations(n);

  for (const Network& g : networks) {
    GameSampler sampler(g, network_seed(corpus.seed, g));
    for (GameFamily family : {GameFamily::kSignedComponents, GameFamily::kNonnegativeDividends,
                              GameFamily::kSuperfluous}) {
      std::vector<ValueFunction> games;
      for (int k = 0; k < corpus.games_per_network; ++k) games.push_back(sampler.next(family));
      for (std::size_t k = 0; k < games.size(); ++k) {
        std::vector<Permutation> perms = every;
        if (n > 4 && sink.wants(Axiom::kAnonymity)) {
          std::vector<PlayerId> image(n);
          std::iota(image.begin(), image.end(), 0);
          for (int s = 0; s < corpus.anonymity_samples; ++s) {
            std::shuffle(image.begin(), image.end(), sampler.rng());
            perms.emplace_back(image);
          }
        }
        const double a = sampler.uniform(-2.0, 2.0);
        const double b = sampler.uniform(-2.0, 2.0);
        sink.game(g, games[k], games[(k + 1) % games.size()], perms, a, b,
                  family != GameFamily::kSignedComponents);
      }
    }
  }
  return sink.finish();
}

/// Runs the requested checkers on a single game over g. Anonymity uses every
/// permutation up to 6 players and a seeded sample beyond; the linearity
/// partner is a seeded random component game on the same ground.
inline std::vector<AxiomReport> audit_game(const RuleUnderTest& rule, const Network& g,
                                           const ValueFunction& v, std::uint64_t seed = 1,
                                           const std::vector<Axiom>& axioms = all_axioms(),
                                           double tol = kDefaultTolerance) {
  detail::AuditSink sink(rule, axioms, tol);
  GameSampler sampler(v.ground(), seed);
  const ValueFunction next = sampler.next(GameFamily::kSignedComponents);
  const int n = g.universe();
  std::vector<Permutation> perms;
  if (n <= 6) {
    perms = detail::all_permutations(n);
  } else {
    std::vector<PlayerId> image(n);
    std::iota(image.begin(), image.end(), 0);
    for (int s = 0; s < 64; ++s) {
      std::shuffle(image.begin(), image.end(), sampler.rng());
      perms.emplace_back(image);
    }
  }
  const double a = sampler.uniform(-2.0, 2.0);
  const double b = sampler.uniform(-2.0, 2.0);
  sink.game(g, v, next, perms, a, b, true);
  return sink.finish();
}

/// One counterexample rule and the single axiom it is meant to violate.
struct Fixture {
  RuleUnderTest rule;
  Axiom designated;
};

struct FixtureSuite {
  std::string name;
  std::vector<Axiom> axioms;
  std::vector<Fixture> fixtures;
};

/// Independence counterexamples for the characterization by component
/// balance, anonymity, linearity and weak monotonicity.
inline FixtureSuite linearity_suite() {
  return {"balance-anonymity-linearity-weak",
          {Axiom::kComponentBalance, Axiom::kAnonymity, Axiom::kLinearity,
           Axiom::kWeakMonotonicity},
          {{rules::zero(), Axiom::kComponentBalance},
           {rules::threshold(5.0), Axiom::kLinearity},
           {rules::affine(-2.0), Axiom::kWeakMonotonicity},
           {rules::weighted(), Axiom::kAnonymity}}};
}

/// Independence counterexamples for the characterization by component
/// balance, additivity, local monotonicity and superfluous players, with
/// anonymity as the symmetry requirement.
inline FixtureSuite superfluous_suite() {
  return {"balance-additivity-local-superfluous",
          {Axiom::kComponentBalance, Axiom::kAdditivity, Axiom::kLocalMonotonicity,
           Axiom::kSuperfluousProductive, Axiom::kAnonymity},
          {{rules::zero(), Axiom::kComponentBalance},
           {rules::threshold(5.0), Axiom::kAdditivity},
           {rules::affine(2.0), Axiom::kSuperfluousProductive},
           {rules::affine(-2.0), Axiom::kLocalMonotonicity}}};
}

struct FixtureResult {
  std::string suite;
  Fixture fixture;
  std::vector<AxiomReport> reports;

  /// True iff the designated axiom is violated and every other one is not.
  bool exact() const {
    for (const AxiomReport& r : reports) {
      const bool violated = r.verdict == Verdict::kViolated;
      if (violated != (r.axiom == fixture.designated)) return false;
    }
    return true;
  }
};

inline std::vector<FixtureResult> run_fixtures(const FixtureSuite& suite,
                                               const CorpusSpec& corpus,
                                               double tol = kDefaultTolerance) {
  std::vector<FixtureResult> out;
  for (const Fixture& f : suite.fixtures) {
    out.push_back({suite.name, f, audit(f.rule, corpus, suite.axioms, tol)});
  }
  return out;
}

}  // namespace netgame

#endif  // NETGAME_AXIOMS_HPP_
