// Exhaustive property checks over the strict-ordinal 2x2 space, shared by the
// unit suite and the acceptance runner.

#pragma once

#include "extortion/engine.hpp"
#include "extortion/taxonomy.hpp"
#include "oracle.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace properties {

using namespace extortion;

struct Check {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && cases > 0; }
  void expect(bool condition, const std::string& what) {
    ++cases;
    if (!condition && failures.size() < 20) failures.push_back(what);
  }
};

inline std::vector<Game> ordinal_games() {
  std::vector<Game> games;
  for (std::size_t raw = 0; raw < taxonomy::kRawGames; ++raw) {
    games.push_back(taxonomy::game_from_ranks(taxonomy::ranks_for_raw_id(raw)));
  }
  return games;
}

inline std::string where(std::size_t raw, const std::string& detail) {
  return "raw " + std::to_string(raw) + ": " + detail;
}

inline std::vector<Roles> all_roles() {
  std::vector<Roles> roles;
  for (std::size_t p = 0; p < 2; ++p) {
    roles.push_back({p, co_player(p), std::nullopt, Scenario::TwoPlayerExternal});
    roles.push_back({p, p, std::nullopt, Scenario::OnePlayerExternal});
    roles.push_back({p, p, co_player(p), Scenario::OnePlayerInternal});
  }
  return roles;
}

/// Accept-game equilibria equal base equilibria for every fee.
inline Check affine_invariance() {
  Check check;
  const auto games = ordinal_games();
  const Rational fees[] = {Rational(1, 2), Rational(1), Rational(7, 3)};
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto base_eqs = pure_nash_equilibria(games[raw]);
    for (const auto& roles : all_roles()) {
      for (const auto& fee : fees) {
        const auto accept = accept_game(games[raw], {roles, std::nullopt, fee, Rational(1)});
        check.expect(pure_nash_equilibria(accept) == base_eqs, where(raw, "accept equilibria differ at c1=" + to_string(fee)));
      }
    }
  }
  return check;
}

/// The internal extortioner's own payoff changes never move equilibria.
inline Check internal_invariance() {
  Check check;
  const auto games = ordinal_games();
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto& g = games[raw];
    const auto eq = unique_pure_nash(g);
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t target = 0; target < 2; ++target) {
        if (eq && (*eq)[p] == target) continue;
        for (const auto& [fee, pay] : {std::pair{Rational(1), Rational(5, 2)}, std::pair{Rational(3), Rational(1, 3)}}) {
          const BindingThreat external{{p, p, std::nullopt, Scenario::OnePlayerExternal}, target, fee, pay};
          const BindingThreat internal{{p, p, co_player(p), Scenario::OnePlayerInternal}, target, fee, pay};
          check.expect(pure_nash_equilibria(accept_game(g, external)) == pure_nash_equilibria(accept_game(g, internal)),
                       where(raw, "internal accept equilibria differ"));
          check.expect(pure_nash_equilibria(decline_game(g, external)) == pure_nash_equilibria(decline_game(g, internal)),
                       where(raw, "internal decline equilibria differ"));
        }
      }
    }
  }
  return check;
}

/// Above c2_min the decline game has a unique equilibrium containing the
/// target; below the uniqueness threshold the base equilibrium survives; the
/// brute-force payment scan lands on the same infimum.
inline Check theorem_two_soundness() {
  Check check;
  const auto games = ordinal_games();
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto& g = games[raw];
    const auto eq = unique_pure_nash(g);
    if (!eq) continue;
    const auto table = oracle::from_game(g);
    for (std::size_t recipient = 0; recipient < 2; ++recipient) {
      const std::size_t target = 1 - (*eq)[recipient];
      const auto c2_min = min_required_payment(g, recipient, target);
      const auto uniqueness = uniqueness_threshold(g, recipient, target);

      const auto decline = decline_with_payment(g, recipient, target, c2_min.value + 1);
      const auto found = pure_nash_equilibria(decline);
      check.expect(found.size() == 1 && found.front()[recipient] == target,
                   where(raw, "decline game at c2_min + 1 lacks a unique shifted equilibrium"));

      for (const auto& c2 : {uniqueness - Rational(1, 2), uniqueness / 2, uniqueness - Rational(1, 100)}) {
        if (c2 <= 0 || c2 >= uniqueness) continue;
        check.expect(is_nash(decline_with_payment(g, recipient, target, c2), *eq),
                     where(raw, "base equilibrium lost below the uniqueness threshold, c2=" + to_string(c2)));
      }

      const oracle::Threat th{recipient, recipient, std::nullopt, target, Rational(1), Rational(0)};
      check.expect(oracle::scan_payment_infimum(table, th, 4, 6) == c2_min.value,
                   where(raw, "brute-force payment infimum differs from c2_min " + to_string(c2_min.value)));
    }
  }
  return check;
}

/// analyze().decision against the oracle's backward induction on a 3x3 grid
/// straddling (c1_max, c2_min), boundary points included.
inline Check spe_oracle_equivalence() {
  Check check;
  std::size_t accepted = 0;
  const auto games = ordinal_games();
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto& g = games[raw];
    const auto eq = unique_pure_nash(g);
    if (!eq) {
      bool refused = false;
      try {
        analyze(g, {{0, 1, std::nullopt, Scenario::TwoPlayerExternal}, std::nullopt, Rational(1), Rational(1)});
      } catch (const ExtortionError& e) {
        refused = e.condition() == "assumption-1";
      }
      check.expect(refused, where(raw, "game without unique equilibrium was analyzed"));
      continue;
    }
    const auto table = oracle::from_game(g);
    for (const auto& roles : all_roles()) {
      const std::size_t target = 1 - (*eq)[roles.recipient];
      const auto c2_min = min_required_payment(g, roles.recipient, target).value;
      const auto gap = g.payoff(*eq, roles.extorted) -
                       g.payoff(*decline_equilibrium_target(g, roles.recipient, target), roles.extorted);
      for (const auto& c2 : {c2_min - Rational(1, 2), c2_min, c2_min + 1}) {
        if (c2 <= 0) continue;
        const Rational c1_max = is_one_player(roles.scenario) ? gap - c2 : gap;
        for (const auto& c1 : {c1_max - Rational(1, 2), c1_max, c1_max + Rational(1, 2)}) {
          if (c1 <= 0) continue;
          const auto report = analyze(g, {roles, target, c1, c2});
          const bool expected = oracle::accepts(table, {roles.extorted, roles.recipient, roles.extortioner, target, c1, c2});
          accepted += expected;
          std::ostringstream what;
          what << to_string(roles.scenario) << " extorted " << roles.extorted << " c1=" << to_string(c1)
               << " c2=" << to_string(c2);
          check.expect((report.decision == Decision::Accept) == expected, where(raw, "decision mismatch " + what.str()));
          check.expect(report.success == (report.decision == Decision::Accept), where(raw, "success flag " + what.str()));
          if (c1 == c1_max || c2 == c2_min) {
            check.expect(report.decision == Decision::Decline, where(raw, "boundary accepted " + what.str()));
          }
          if (c2 > c2_min) {
            const auto m = make_manipulated_game(g, {roles, target, c1, c2});
            check.expect(spe_decision(m) == report.decision, where(raw, "spe_decision differs " + what.str()));
          }
        }
      }
    }
  }
  check.expect(accepted > 0, "oracle never accepted on the grid");
  return check;
}

/// c1 = c1_max - 1/100 accepts, c1 = c1_max declines; c2 = c2_min fails the
/// shift, c2 = c2_min + 1/100 succeeds.
inline Check bound_sharpness() {
  Check check;
  const Rational delta(1, 100);
  const auto games = ordinal_games();
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto& g = games[raw];
    const auto eq = unique_pure_nash(g);
    if (!eq) continue;
    for (const auto& roles : all_roles()) {
      if (roles.scenario == Scenario::OnePlayerInternal) continue;
      const std::size_t target = 1 - (*eq)[roles.recipient];
      const auto bounds = compute_bounds(g, roles, target, std::nullopt, std::nullopt);
      if (!bounds.feasible) continue;
      const auto c2 = bounds.c2_min.value + delta;
      const auto c1_max = is_one_player(roles.scenario) ? bounds.c1_max.value - delta : bounds.c1_max.value;
      check.expect(analyze(g, {roles, target, c1_max - delta, c2}).decision == Decision::Accept,
                   where(raw, "c1_max - delta declined"));
      check.expect(analyze(g, {roles, target, c1_max, c2}).decision == Decision::Decline,
                   where(raw, "c1_max accepted"));
      const auto at_min = decline_with_payment(g, roles.recipient, target, bounds.c2_min.value);
      const auto eqs = pure_nash_equilibria(at_min);
      const bool shift_holds = eqs.size() == 1 && eqs.front()[roles.recipient] == target && is_strict_nash(at_min, eqs.front());
      check.expect(!shift_holds, where(raw, "shift already holds at c2_min"));
      const auto above = decline_with_payment(g, roles.recipient, target, c2);
      const auto eqs_above = pure_nash_equilibria(above);
      check.expect(eqs_above.size() == 1 && eqs_above.front()[roles.recipient] == target,
                   where(raw, "shift fails at c2_min + delta"));
    }
  }
  return check;
}

/// One-player: c1 < c1_max(c2) iff c2 < c2_max(c1).
inline Check one_player_interdependence() {
  Check check;
  const auto games = ordinal_games();
  for (std::size_t raw = 0; raw < games.size(); ++raw) {
    const auto& g = games[raw];
    if (!unique_pure_nash(g)) continue;
    for (std::size_t p = 0; p < 2; ++p) {
      const Roles roles{p, p, std::nullopt, Scenario::OnePlayerExternal};
      const auto base = compute_bounds(g, roles, std::nullopt, std::nullopt, std::nullopt);
      if (!base.feasible) continue;
      for (int i = 1; i <= 12; ++i) {
        for (int j = 1; j <= 12; ++j) {
          const Rational c1(i, 4);
          const Rational c2 = base.c2_min.value + Rational(j, 4);
          const auto by_c2 = compute_bounds(g, roles, base.target, std::nullopt, c2).c1_max;
          const auto by_c1 = compute_bounds(g, roles, base.target, c1, std::nullopt).c2_max;
          check.expect(by_c2.admits(c1) == by_c1->admits(c2), where(raw, "interdependence broken"));
        }
      }
    }
  }
  return check;
}

/// Two-player susceptibility iff rank 4 at the equilibrium; one-player engine
/// feasibility iff the structural predicate; internal within one-player within two-player.
inline Check characterization() {
  Check check;
  auto records = taxonomy::enumerate_ordinal_games();
  taxonomy::scan_two_player(records);
  taxonomy::scan_one_player(records);
  taxonomy::scan_one_player_internal(records);
  for (const auto& rec : records) {
    for (std::size_t p = 0; p < 2; ++p) {
      const bool best = rec.flags.ne && rec.flags.best_at_ne(p);
      check.expect(rec.two_player[p] == best, where(rec.raw_id, "two-player flag differs from rank-4-at-NE"));
      const bool feasible = taxonomy::engine_feasible(rec.game, taxonomy::one_player_roles(p));
      check.expect(feasible == taxonomy::one_player_structural(rec.flags, p), where(rec.raw_id, "one-player structure"));
      check.expect(!rec.internal[p] || rec.one_player[p], where(rec.raw_id, "internal outside one-player"));
      check.expect(!rec.one_player[p] || rec.two_player[p], where(rec.raw_id, "one-player outside two-player"));
    }
  }
  return check;
}

}  // namespace properties
