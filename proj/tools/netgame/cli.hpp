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

// netgame {compute|sweep|audit|bid}. Exit codes:
//   0  success
//   1  a check failed (unexpected axiom violation, mechanism mismatch,
//      profitable deviation)
//   2  unreadable document or bad command line
//   3  alpha outside [0, 1]
//   4  a rule or method precondition failed
//   5  corpus too large
//   6  game is not zero monotonic (bid without --force)

#ifndef NETGAME_TOOLS_CLI_HPP_
#define NETGAME_TOOLS_CLI_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "document.hpp"
#include "json.hpp"
#include "netgame/netgame.hpp"

namespace netgame::cli {

enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitAlpha = 3,
  kExitPrecondition = 4,
  kExitCorpus = 5,
  kExitNotZeroMonotonic = 6,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return kExitParse;
    case ErrorCode::kAlphaOutOfRange: return kExitAlpha;
    case ErrorCode::kCorpusTooLarge: return kExitCorpus;
    case ErrorCode::kNotZeroMonotonic: return kExitNotZeroMonotonic;
    case ErrorCode::kEquilibriumMismatch: return kExitCheckFailed;
    default: return kExitPrecondition;
  }
}

/// 12 significant digits; magnitudes below 1e-12 print as 0.
inline std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double tolerance_from_env() {
  const char* raw = std::getenv("NETGAME_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (*end != '\0' || !(tol >= 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::kParseError, std::string("NETGAME_TOL is not a tolerance: ") + raw);
  }
  return tol;
}

inline io::GameDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream text;
  text << in.rdbuf();
  return io::parse_document(text.str());
}

/// Parses "a..b:step", or a single number.
inline std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(x)) {
      throw Error(ErrorCode::kParseError, "bad alpha grid \"" + text + "\"");
    }
    return x;
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) return {number(text)};
  const std::size_t colon = text.find(':', dots);
  if (colon == std::string::npos) throw Error(ErrorCode::kParseError, "grid needs a step");
  const double a = number(text.substr(0, dots));
  const double b = number(text.substr(dots + 2, colon - dots - 2));
  const double step = number(text.substr(colon + 1));
  if (step <= 0.0 || b < a) throw Error(ErrorCode::kParseError, "empty alpha grid " + text);
  const long count = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long k = 0; k < count; ++k) out.push_back(std::min(b, a + k * step));
  return out;
}

/// Allocation for a rule name and method; ce ignores the method.
inline Allocation allocate(const std::string& rule, const std::string& method,
                           const Network& g, const ValueFunction& v, double alpha) {
  if (rule == "ce") return ce_rule(g, v);
  const Alpha a(rule == "mv" ? 1.0 : alpha);
  if (method == "transform") return alpha_cem_via_transform(g, v, a);
  Allocation mv(v.universe());
  if (method == "subset") {
    mv = myerson_subset(g, v);
  } else if (method == "recursive") {
    mv = myerson_recursive(g, v);
  } else {
    mv = myerson_permutation_oracle(g, v);
  }
  if (rule == "mv") return mv;
  return mix(mv, ce_rule(g, v), a.value());
}

inline void print_allocation(std::ostream& out, const Network& g, const ValueFunction& v,
                             const Allocation& x) {
  out << "player payoff\n";
  for (int i = 0; i < x.size(); ++i) out << i + 1 << ' ' << num(x[i]) << '\n';
  for (const Component& c : components(g)) {
    std::string who;
    for (PlayerId i : c.members) who += (who.empty() ? "" : ",") + std::to_string(i + 1);
    out << "component " << c.links.to_string() << " players " << who << " worth "
        << num(v(c.links)) << " sum " << num(x.sum_over(c.members)) << '\n';
  }
}

struct Options {
  std::string file;
  std::string rule = "mv";
  std::optional<double> alpha;
  std::string method = "subset";
  std::string alphas;
  std::optional<int> corpus;
  bool fixtures = false;
  int games = 4;
  std::uint64_t seed = 20240917;
  std::optional<std::uint64_t> bid_seed;
  double weight = -2.0;
  double limit = 5.0;
  bool trace = false;
  bool deviations = false;
  bool force = false;
  std::string ties;
};

inline int cmd_compute(const Options& o, std::ostream& out) {
  if (o.rule == "cem" && !o.alpha) throw Error(ErrorCode::kParseError, "--rule cem needs --alpha");
  if (o.rule != "cem" && o.alpha) {
    throw Error(ErrorCode::kParseError, "--alpha applies only to --rule cem");
  }
  const io::GameDocument doc = load(o.file);
  const Allocation x = allocate(o.rule, o.method, doc.network, doc.game, o.alpha.value_or(1.0));
  print_allocation(out, doc.network, doc.game, x);
  return kExitOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const std::vector<double> grid = parse_grid(o.alphas);
  for (double a : grid) (void)Alpha(a);
  const io::GameDocument doc = load(o.file);
  const int n = doc.network.universe();
  out << "alpha";
  for (int i = 0; i < n; ++i) out << ",p" << i + 1;
  out << '\n';
  for (double a : grid) {
    const Allocation x = allocate("cem", o.method, doc.network, doc.game, a);
    out << num(a);
    for (int i = 0; i < n; ++i) out << ',' << num(x[i]);
    out << '\n';
  }
  return kExitOk;
}

inline RuleUnderTest rule_by_name(const Options& o) {
  if (o.rule == "mv") return rules::myerson();
  if (o.rule == "ce") return rules::equal_division();
  if (o.rule == "cem") {
    if (!o.alpha) throw Error(ErrorCode::kParseError, "--rule cem needs --alpha");
    return rules::cem(*o.alpha);
  }
  if (o.rule == "zero") return rules::zero();
  if (o.rule == "threshold") return rules::threshold(o.limit);
  if (o.rule == "affine") return rules::affine(o.weight);
  if (o.rule == "weighted") return rules::weighted();
  throw Error(ErrorCode::kParseError, "unknown rule " + o.rule);
}

inline void print_report(std::ostream& out, const AxiomReport& r, bool expected) {
  out << axiom_name(r.axiom) << ' ' << verdict_name(r.verdict);
  if (r.verdict == Verdict::kViolated) {
    out << (expected ? " (expected)" : " (unexpected)") << " residual " << num(r.residual);
  }
  out << " checked " << r.checked << " applicable " << r.applicable;
  if (r.verdict == Verdict::kViolated && r.witness) out << " at " << describe(*r.witness);
  out << '\n';
}

inline int cmd_audit(const Options& o, std::ostream& out, double tol) {
  CorpusSpec corpus;
  corpus.players = o.corpus.value_or(3);
  corpus.games_per_network = o.games;
  corpus.seed = o.seed;
  if (corpus.players < 0 || corpus.players > kMaxCorpusPlayers) {
    throw Error(ErrorCode::kCorpusTooLarge,
                std::to_string(corpus.players) + " players; the corpus stops at " +
                    std::to_string(kMaxCorpusPlayers));
  }
  if (o.games < 1) throw Error(ErrorCode::kParseError, "--games must be positive");

  if (o.fixtures) {
    bool all_exact = true;
    for (const FixtureSuite& suite : {linearity_suite(), superfluous_suite()}) {
      for (const FixtureResult& f : run_fixtures(suite, corpus, tol)) {
        all_exact = all_exact && f.exact();
        out << "fixture " << suite.name << ' ' << f.fixture.rule.name << " designated "
            << axiom_name(f.fixture.designated) << (f.exact() ? " exact" : " NOT-EXACT")
            << '\n';
        for (const AxiomReport& r : f.reports) {
          out << "  ";
          print_report(out, r, r.axiom == f.fixture.designated);
        }
      }
    }
    return all_exact ? kExitOk : kExitCheckFailed;
  }

  const RuleUnderTest rule = rule_by_name(o);
  std::vector<AxiomReport> reports;
  if (!o.file.empty()) {
    const io::GameDocument doc = load(o.file);
    reports = audit_game(rule, doc.network, doc.game, o.seed, all_axioms(), tol);
    out << "audit " << rule.name << " on " << o.file << '\n';
  } else {
    reports = audit(rule, corpus, all_axioms(), tol);
    out << "audit " << rule.name << " on corpus n=" << corpus.players << " games "
        << corpus.games_per_network << " seed " << corpus.seed << '\n';
  }
  bool unexpected = false;
  for (const AxiomReport& r : reports) {
    const bool expected = !rule.claims_axiom(r.axiom);
    unexpected = unexpected || (r.verdict == Verdict::kViolated && !expected);
    print_report(out, r, expected);
  }
  return unexpected ? kExitCheckFailed : kExitOk;
}

inline nlohmann::json trace_json(const TraceEvent& e) {
  std::vector<int> targets;
  for (PlayerId t : e.targets) targets.push_back(t + 1);
  return {{"probability", e.probability},
          {"component", e.component.to_string()},
          {"round", e.round},
          {"stage", e.stage},
          {"actor", e.actor < 0 ? nlohmann::json(nullptr) : nlohmann::json(e.actor + 1)},
          {"action", e.action},
          {"targets", targets},
          {"amounts", e.amounts}};
}

inline int cmd_bid(const Options& o, std::ostream& out, double tol) {
  if (!o.alpha) throw Error(ErrorCode::kParseError, "bid needs --alpha");
  const Alpha alpha(*o.alpha);
  const io::GameDocument doc = load(o.file);
  const Network& g = doc.network;
  const ValueFunction& v = doc.game;
  try {
    detail::require_mechanism_game(g, v, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotZeroMonotonic || !o.force) throw;
  }

  MechanismOptions options;
  options.seed = o.bid_seed;
  options.record_trace = o.trace;
  options.tol = tol;
  if (o.ties == "expectation") {
    options.ties = TieMode::kExpectation;
  } else if (o.ties == "sampled") {
    options.ties = TieMode::kSampled;
  } else if (o.ties == "lowest") {
    options.ties = TieMode::kLowestIndex;
  }
  const MechanismOutcome run = run_mechanism(g, v, alpha, equilibrium_profile(v, tol), options);
  const Allocation cem = alpha_cem(g, v, alpha);
  const double gap = max_abs_difference(run.payoffs, cem);
  const bool match = gap <= tol * detail::worth_scale(v);

  out << "player payoff cem\n";
  for (int i = 0; i < g.universe(); ++i) {
    out << i + 1 << ' ' << num(run.payoffs[i]) << ' ' << num(cem[i]) << '\n';
  }
  out << "terminal " << terminal_name(run.terminal) << '\n';
  out << "match=" << (match ? "true" : "false") << " residual " << num(gap) << '\n';
  bool ok = match;
  if (o.deviations) {
    const DeviationReport d = max_deviation_gain(g, v, alpha, default_deviation_grid(), tol);
    out << "max-deviation-gain " << num(d.max_gain) << " runs " << d.runs;
    if (d.player >= 0) {
      out << " player " << d.player + 1 << ' ' << deviation_name(d.kind) << ' ' << d.worst;
    }
    out << '\n';
    ok = ok && d.max_gain <= 1e-6;
  }
  if (o.trace) {
    for (const TraceEvent& e : run.trace) out << trace_json(e).dump() << '\n';
  }
  return ok || o.force ? kExitOk : kExitCheckFailed;
}

/// Runs one command; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Allocation rules and bidding for network games", "netgame"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> methods = {"subset", "recursive", "transform", "oracle"};
  auto* compute = app.add_subcommand("compute", "Payoffs of one rule");
  compute->add_option("file", o.file, "Game document")->required();
  compute->add_option("--rule", o.rule)->check(CLI::IsMember({"mv", "ce", "cem"}));
  compute->add_option("--alpha", o.alpha, "Weight on the Myerson value (cem only)");
  compute->add_option("--method", o.method)->check(CLI::IsMember(methods));

  auto* sweep = app.add_subcommand("sweep", "CSV of cem payoffs over an alpha grid");
  sweep->add_option("file", o.file, "Game document")->required();
  sweep->add_option("--alphas", o.alphas, "a..b:step or a single value")->required();
  sweep->add_option("--method", o.method)->check(CLI::IsMember(methods));

  auto* audit_cmd = app.add_subcommand("audit", "Axiom checks on a game or the corpus");
  audit_cmd->add_option("file", o.file, "Game document");
  audit_cmd->add_option("--corpus", o.corpus, "Every network on this many players");
  audit_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(
      {"mv", "ce", "cem", "zero", "threshold", "affine", "weighted"}));
  audit_cmd->add_option("--alpha", o.alpha);
  audit_cmd->add_option("--weight", o.weight, "Myerson weight of the affine rule");
  audit_cmd->add_option("--limit", o.limit, "Switch point of the threshold rule");
  audit_cmd->add_flag("--fixtures", o.fixtures, "Run the independence fixtures");
  audit_cmd->add_option("--games", o.games, "Games per network and family");
  audit_cmd->add_option("--seed", o.seed);

  auto* bid = app.add_subcommand("bid", "Run the bidding mechanism");
  bid->add_option("file", o.file, "Game document")->required();
  bid->add_option("--alpha", o.alpha)->required();
  bid->add_option("--seed", o.bid_seed, "Seed for tie breaking");
  bid->add_option("--ties", o.ties)->check(CLI::IsMember({"expectation", "sampled", "lowest"}));
  bid->add_flag("--trace", o.trace, "Print the event trace as JSON lines");
  bid->add_flag("--deviations", o.deviations, "Search single-player deviations");
  bid->add_flag("--force", o.force, "Run even if the game is not zero monotonic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const double tol = tolerance_from_env();
    if (compute->parsed()) return cmd_compute(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (audit_cmd->parsed()) {
      if (!o.file.empty() && o.corpus) {
        throw Error(ErrorCode::kParseError, "give a file or --corpus, not both");
      }
      return cmd_audit(o, out, tol);
    }
    return cmd_bid(o, out, tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace netgame::cli

#endif  // NETGAME_TOOLS_CLI_HPP_
