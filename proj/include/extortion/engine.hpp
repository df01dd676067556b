// Extortion through binding outcome-contingent payments.
//
// An extortioner tells the extorted player: "either you pay me a fee, or I
// pay the recipient a conditional payment whenever they play the target
// strategy". Accepting turns the base game into the Accept game (fee
// subtracted from the extorted player everywhere); declining turns it into
// the Decline game (payment added to the recipient wherever they play the
// target). The extorted player picks the branch whose equilibrium pays more.
//
// Every threshold and bound here is an open endpoint: a valid parameter is
// strictly above a lower bound and strictly below an upper bound. Payoff
// equality at any comparison resolves to Decline / condition failed.

#pragma once

#include "extortion/game.hpp"
#include "extortion/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extortion {

enum class Scenario { TwoPlayerExternal, OnePlayerExternal, OnePlayerInternal };

inline std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::TwoPlayerExternal: return "two-player-external";
    case Scenario::OnePlayerExternal: return "one-player-external";
    case Scenario::OnePlayerInternal: return "one-player-internal";
  }
  return "unknown";
}

inline bool is_one_player(Scenario scenario) { return scenario != Scenario::TwoPlayerExternal; }

/// Failure of a named analysis condition ("assumption-1", "theorem-2-creation", ...).
class ExtortionError : public std::runtime_error {
 public:
  ExtortionError(std::string condition, const std::string& message)
      : std::runtime_error(condition + ": " + message), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

inline Scenario parse_scenario(std::string_view name) {
  for (auto s : {Scenario::TwoPlayerExternal, Scenario::OnePlayerExternal, Scenario::OnePlayerInternal}) {
    if (to_string(s) == name) return s;
  }
  throw ExtortionError("scenario", "unknown scenario '" + std::string(name) + "'");
}

struct Roles {
  std::size_t extorted = 0;
  std::size_t recipient = 1;
  std::optional<std::size_t> extortioner;  // OnePlayerInternal only
  Scenario scenario = Scenario::TwoPlayerExternal;

  friend bool operator==(const Roles&, const Roles&) = default;
};

struct BindingThreat {
  Roles roles;
  std::optional<std::size_t> target;  // absent: choose the most profitable
  Rational fee;
  Rational payment;

  friend bool operator==(const BindingThreat&, const BindingThreat&) = default;
};

struct ManipulatedGame {
  Game base;
  BindingThreat threat;
  Game accept;
  Game decline;
};

/// Open endpoint on a fee or payment.
struct Bound {
  enum class Side { Upper, Lower };

  Rational value;
  Side side = Side::Upper;

  static constexpr bool exclusive() { return true; }
  static Bound upper(Rational v) { return {v, Side::Upper}; }
  static Bound lower(Rational v) { return {v, Side::Lower}; }
  bool admits(const Rational& x) const { return side == Side::Upper ? x < value : x > value; }

  friend bool operator==(const Bound&, const Bound&) = default;
};

enum class Decision { Accept, Decline };

inline std::string_view to_string(Decision d) { return d == Decision::Accept ? "Accept" : "Decline"; }

inline std::size_t co_player(std::size_t player) { return 1 - player; }

// ---------------------------------------------------------------------------
// Validation

inline void require_two_players(const Game& base) {
  if (base.num_players() != 2) {
    throw ExtortionError("two-player", "threats are defined for two-player base games only, got " +
                                           std::to_string(base.num_players()) + " players");
  }
}

inline void validate_roles(const Game& base, const Roles& roles) {
  require_two_players(base);
  if (roles.extorted >= 2 || roles.recipient >= 2) throw ExtortionError("roles", "player index out of range");
  switch (roles.scenario) {
    case Scenario::TwoPlayerExternal:
      if (roles.extorted == roles.recipient) throw ExtortionError("roles", "two-player scheme needs extorted != recipient");
      if (roles.extortioner) throw ExtortionError("roles", "external scenarios take no extortioner player");
      break;
    case Scenario::OnePlayerExternal:
      if (roles.extorted != roles.recipient) throw ExtortionError("roles", "one-player scheme needs extorted == recipient");
      if (roles.extortioner) throw ExtortionError("roles", "external scenarios take no extortioner player");
      break;
    case Scenario::OnePlayerInternal:
      if (roles.extorted != roles.recipient) throw ExtortionError("roles", "one-player scheme needs extorted == recipient");
      if (!roles.extortioner || *roles.extortioner != co_player(roles.extorted)) {
        throw ExtortionError("roles", "internal scenario needs the co-player as extortioner");
      }
      break;
  }
}

inline Profile base_equilibrium(const Game& base) {
  auto eq = unique_pure_nash(base);
  if (!eq) throw ExtortionError("assumption-1", "base game has no unique pure Nash equilibrium");
  return *eq;
}

inline void validate_target(const Game& base, std::size_t recipient, std::size_t target) {
  if (target >= base.num_strategies(recipient)) throw ExtortionError("target-strategy", "target strategy out of range");
  if (const auto eq = unique_pure_nash(base); eq && (*eq)[recipient] == target) {
    throw ExtortionError("target-strategy", "target strategy must differ from the recipient's equilibrium strategy");
  }
}

// ---------------------------------------------------------------------------
// Accept and Decline games

inline Game accept_game(const Game& base, const BindingThreat& threat) {
  validate_roles(base, threat.roles);
  if (threat.fee <= 0) throw ExtortionError("fee", "fee must be positive");
  const auto fee = threat.fee;
  Game accept = base.transform_payoffs(threat.roles.extorted,
                                       [&](const Profile&, const Rational& u) { return u - fee; });
  if (threat.roles.extortioner) {
    accept = accept.transform_payoffs(*threat.roles.extortioner,
                                      [&](const Profile&, const Rational& u) { return u + fee; });
  }
  return accept;
}

inline Game decline_game(const Game& base, const BindingThreat& threat) {
  validate_roles(base, threat.roles);
  if (threat.payment <= 0) throw ExtortionError("payment", "payment must be positive");
  if (!threat.target) throw ExtortionError("target-strategy", "decline game needs a target strategy");
  const auto recipient = threat.roles.recipient;
  const auto target = *threat.target;
  validate_target(base, recipient, target);
  const auto payment = threat.payment;
  Game decline = base.transform_payoffs(recipient, [&](const Profile& s, const Rational& u) {
    return s[recipient] == target ? u + payment : u;
  });
  if (threat.roles.extortioner) {
    decline = decline.transform_payoffs(*threat.roles.extortioner, [&](const Profile& s, const Rational& u) {
      return s[recipient] == target ? u - payment : u;
    });
  }
  return decline;
}

inline ManipulatedGame make_manipulated_game(const Game& base, const BindingThreat& threat) {
  return {base, threat, accept_game(base, threat), decline_game(base, threat)};
}

// ---------------------------------------------------------------------------
// Equilibrium shift thresholds

/// (target, b) with b the co-player's strict best response to the target;
/// absent when that best response is tied.
inline std::optional<Profile> decline_equilibrium_target(const Game& base, std::size_t recipient,
                                                         std::size_t target) {
  require_two_players(base);
  if (target >= base.num_strategies(recipient)) throw ExtortionError("target-strategy", "target strategy out of range");
  const auto other = co_player(recipient);
  Profile profile(2, 0);
  profile[recipient] = target;
  const auto br = best_responses(base, other, profile);
  if (!br.strict) return std::nullopt;
  profile[other] = br.strategies.front();
  return profile;
}

namespace detail {

inline Profile require_decline_target(const Game& base, std::size_t recipient, std::size_t target) {
  auto shifted = decline_equilibrium_target(base, recipient, target);
  if (!shifted) {
    throw ExtortionError("degenerate-tie", "co-player's best response to " +
                                               base.strategy_name(recipient, target) + " is tied");
  }
  return *shifted;
}

}  // namespace detail

/// Payment the recipient must strictly exceed for the shifted profile to be an equilibrium.
inline Rational creation_threshold(const Game& base, std::size_t recipient, std::size_t target) {
  const auto shifted = detail::require_decline_target(base, recipient, target);
  std::optional<Rational> worst;
  Profile deviation = shifted;
  for (std::size_t s = 0; s < base.num_strategies(recipient); ++s) {
    if (s == target) continue;
    deviation[recipient] = s;
    const Rational gain = base.payoff(deviation, recipient) - base.payoff(shifted, recipient);
    if (!worst || gain > *worst) worst = gain;
  }
  return *worst;
}

/// Payment the recipient must strictly exceed so the base equilibrium stops being one.
inline Rational uniqueness_threshold(const Game& base, std::size_t recipient, std::size_t target) {
  require_two_players(base);
  const auto eq = base_equilibrium(base);
  Profile deviation = eq;
  deviation[recipient] = target;
  return base.payoff(eq, recipient) - base.payoff(deviation, recipient);
}

/// Decline game built directly from a payment, without the threat-level checks.
inline Game decline_with_payment(const Game& base, std::size_t recipient, std::size_t target,
                                 const Rational& payment) {
  return base.transform_payoffs(recipient, [&](const Profile& s, const Rational& u) {
    return s[recipient] == target ? u + payment : u;
  });
}

/// Exclusive lower bound on the payment. The theorem's prediction is
/// re-verified by enumerating the Decline game at a witness payment.
inline Bound min_required_payment(const Game& base, std::size_t recipient, std::size_t target) {
  const auto creation = creation_threshold(base, recipient, target);
  const auto uniqueness = uniqueness_threshold(base, recipient, target);
  const Rational bound = std::max(creation, uniqueness);
  const Rational witness = std::max(bound, Rational(0)) + 1;
  const auto predicted = detail::require_decline_target(base, recipient, target);
  const auto decline = decline_with_payment(base, recipient, target, witness);
  const auto found = pure_nash_equilibria(decline);
  if (found.size() != 1 || found.front() != predicted || !is_strict_nash(decline, predicted)) {
    throw ExtortionError("theorem-2-uniqueness",
                         "enumeration of the decline game at payment " + to_string(witness) +
                             " does not give the unique equilibrium " + base.describe(predicted));
  }
  return Bound::lower(bound);
}

// ---------------------------------------------------------------------------
// Subgame-perfect decision

namespace detail {

inline Profile solved_subgame(const Game& game, const char* which) {
  const auto eq = unique_pure_nash(game);
  if (!eq) {
    throw ExtortionError("theorem-1", std::string(which) + " game has no unique pure equilibrium");
  }
  if (!is_strict_nash(game, *eq)) {
    throw ExtortionError("degenerate-tie", std::string(which) + " game equilibrium " + game.describe(*eq) +
                                               " is not strict");
  }
  return *eq;
}

}  // namespace detail

/// The extorted player's Accept equilibrium payoff strictly exceeds their Decline equilibrium payoff.
inline bool extortion_succeeds(const ManipulatedGame& m) {
  const auto accepted = detail::solved_subgame(m.accept, "accept");
  const auto declined = detail::solved_subgame(m.decline, "decline");
  const auto player = m.threat.roles.extorted;
  return m.accept.payoff(accepted, player) > m.decline.payoff(declined, player);
}

inline Decision spe_decision(const ManipulatedGame& m) {
  return extortion_succeeds(m) ? Decision::Accept : Decision::Decline;
}

// ---------------------------------------------------------------------------
// Susceptibility and scenario bounds

namespace detail {

struct Shift {
  Profile base_eq;
  Profile decline_eq;
  Rational creation;
  Rational uniqueness;
  Bound c2_min;
};

inline Shift shift(const Game& base, std::size_t recipient, std::size_t target) {
  require_two_players(base);
  auto eq = base_equilibrium(base);
  validate_target(base, recipient, target);
  auto shifted = require_decline_target(base, recipient, target);
  const auto creation = creation_threshold(base, recipient, target);
  const auto uniqueness = uniqueness_threshold(base, recipient, target);
  return {std::move(eq), std::move(shifted), creation, uniqueness,
          min_required_payment(base, recipient, target)};
}

/// u_i(s*) - u_i(s*D) in base payoffs.
inline Rational equilibrium_gap(const Game& base, const Shift& sh, std::size_t player) {
  return base.payoff(sh.base_eq, player) - base.payoff(sh.decline_eq, player);
}

}  // namespace detail

/// The shift to the target's equilibrium strictly lowers the extorted player's base payoff.
inline bool is_susceptible(const Game& base, std::size_t extorted, std::size_t recipient, std::size_t target) {
  const auto sh = detail::shift(base, recipient, target);
  return base.payoff(sh.base_eq, extorted) > base.payoff(sh.decline_eq, extorted);
}

/// Exclusive upper bound on the fee. In one-player schemes the extorted
/// player also collects the payment on declining, so it comes off the gap;
/// without a fixed payment the bound is taken in the limit payment -> c2_min.
inline Bound max_extractable_profit(const Game& base, const Roles& roles, std::size_t target,
                                    const std::optional<Rational>& payment = std::nullopt) {
  validate_roles(base, roles);
  const auto sh = detail::shift(base, roles.recipient, target);
  if (payment && !sh.c2_min.admits(*payment)) {
    throw ExtortionError(*payment > sh.creation ? "theorem-2-uniqueness" : "theorem-2-creation",
                         "payment " + to_string(*payment) + " does not exceed c2_min " + to_string(sh.c2_min.value));
  }
  Rational value = detail::equilibrium_gap(base, sh, roles.extorted);
  if (is_one_player(roles.scenario)) value -= payment.value_or(sh.c2_min.value);
  if (value <= 0) {
    throw ExtortionError(is_one_player(roles.scenario) ? "restriction-II" : "corollary-1",
                         "no positive fee is extractable (c1_max = " + to_string(value) + ")");
  }
  return Bound::upper(value);
}

/// Exclusive upper bound on the payment for a fixed fee (one-player schemes).
inline Bound max_allowed_payment(const Game& base, const Roles& roles, std::size_t target, const Rational& fee) {
  validate_roles(base, roles);
  if (!is_one_player(roles.scenario)) throw ExtortionError("scenario", "maximum payment applies to one-player schemes");
  if (fee <= 0) throw ExtortionError("fee", "fee must be positive");
  const auto sh = detail::shift(base, roles.recipient, target);
  const Rational value = detail::equilibrium_gap(base, sh, roles.extorted) - fee;
  if (value <= sh.c2_min.value) {
    throw ExtortionError("restriction-II", "payment interval (" + to_string(sh.c2_min.value) + ", " +
                                               to_string(value) + ") is empty for fee " + to_string(fee));
  }
  return Bound::upper(value);
}

/// Restriction I: the payment must move the co-player off their equilibrium strategy.
/// On 2x2 games this is cross-checked against "co-player has no dominant strategy".
inline bool restriction_one_feasible(const Game& base, std::size_t player, std::size_t target) {
  require_two_players(base);
  const auto eq = base_equilibrium(base);
  validate_target(base, player, target);
  const auto shifted = detail::require_decline_target(base, player, target);
  const auto other = co_player(player);
  const bool feasible = shifted[other] != eq[other];
  const bool two_by_two = base.num_strategies(0) == 2 && base.num_strategies(1) == 2;
  if (two_by_two && best_responses(base, other, eq).strict) {
    const bool no_dominant = !dominant_strategy(base, other).has_value();
    if (no_dominant != feasible) {
      throw ExtortionError("restriction-I", "equilibrium shift and dominance criterion disagree");
    }
  }
  return feasible;
}

/// Restriction II: the equilibrium payoff gap strictly exceeds c2_min.
inline bool restriction_two_feasible(const Game& base, std::size_t player, std::size_t target) {
  const auto sh = detail::shift(base, player, target);
  return detail::equilibrium_gap(base, sh, player) > sh.c2_min.value;
}

/// Payoff-magnitude precondition for an internal extortioner:
/// u_c(s*) - u_c(s*D) > u_e(s*D) - u_e(s*).
inline bool worthwhile_games_precondition(const Game& base, const Roles& roles, std::size_t target) {
  validate_roles(base, roles);
  if (!roles.extortioner) throw ExtortionError("scenario", "worthwhile check needs an extortioner player");
  const auto sh = detail::shift(base, roles.recipient, target);
  const auto e = *roles.extortioner;
  return detail::equilibrium_gap(base, sh, roles.extorted) >
         base.payoff(sh.decline_eq, e) - base.payoff(sh.base_eq, e);
}

struct WorthwhileVerdict {
  bool worthwhile = false;
  bool games_precondition = false;
  Rational accept_payoff;   // extortioner, Accept equilibrium, modified payoffs
  Rational decline_payoff;  // extortioner, Decline equilibrium, modified payoffs
};

inline WorthwhileVerdict worthwhile_for_extortioner(const ManipulatedGame& m) {
  const auto& roles = m.threat.roles;
  if (roles.scenario != Scenario::OnePlayerInternal || !roles.extortioner || !m.threat.target) {
    throw ExtortionError("scenario", "worthwhile check applies to the internal scenario");
  }
  const auto accepted = detail::solved_subgame(m.accept, "accept");
  const auto declined = detail::solved_subgame(m.decline, "decline");
  WorthwhileVerdict verdict;
  verdict.accept_payoff = m.accept.payoff(accepted, *roles.extortioner);
  verdict.decline_payoff = m.decline.payoff(declined, *roles.extortioner);
  verdict.worthwhile = verdict.accept_payoff > verdict.decline_payoff;
  verdict.games_precondition = worthwhile_games_precondition(m.base, roles, *m.threat.target);
  return verdict;
}

/// Exclusive lower bound on the fee an internal extortioner must ask for, clamped at 0.
inline Bound min_profit_internal(const Game& base, const Roles& roles, std::size_t target, const Rational& payment) {
  validate_roles(base, roles);
  if (!roles.extortioner) throw ExtortionError("scenario", "minimum profit applies to the internal scenario");
  const auto sh = detail::shift(base, roles.recipient, target);
  const auto e = *roles.extortioner;
  const Rational raw = base.payoff(sh.decline_eq, e) - base.payoff(sh.base_eq, e) - payment;
  return Bound::lower(std::max(raw, Rational(0)));
}

// ---------------------------------------------------------------------------
// Reports

struct Diagnostic {
  std::string condition;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ExtortionReport {
  std::vector<std::string> player_names;
  std::vector<std::vector<std::string>> strategy_names;

  Roles roles;
  std::size_t target = 0;
  Rational fee;
  Rational payment;
  std::string threat_sentence;

  Profile base_equilibrium;
  std::optional<Profile> accept_equilibrium;
  std::optional<Profile> decline_equilibrium;  // enumerated; absent when not unique
  Profile predicted_decline_equilibrium;

  Rational creation_threshold;
  Rational uniqueness_threshold;
  Bound c2_min;
  std::optional<Bound> c2_max;
  Bound c1_max;
  std::optional<Bound> c1_min;

  std::optional<Rational> extorted_accept_payoff;
  std::optional<Rational> extorted_decline_payoff;
  std::optional<Rational> extortioner_accept_payoff;
  std::optional<Rational> extortioner_decline_payoff;
  std::optional<bool> worthwhile;

  Decision decision = Decision::Decline;
  bool success = false;
  bool feasible = false;
  std::vector<Diagnostic> diagnostics;

  const Diagnostic* find(std::string_view condition) const {
    for (const auto& d : diagnostics) {
      if (d.condition == condition) return &d;
    }
    return nullptr;
  }

  friend bool operator==(const ExtortionReport&, const ExtortionReport&) = default;
};

/// Fee/payment bounds for a role assignment without a concrete decision.
struct BoundsReport {
  std::vector<std::string> player_names;
  std::vector<std::vector<std::string>> strategy_names;

  Roles roles;
  std::size_t target = 0;
  std::optional<Rational> fixed_fee;
  std::optional<Rational> fixed_payment;

  Profile base_equilibrium;
  Profile decline_equilibrium;
  Rational creation_threshold;
  Rational uniqueness_threshold;
  Bound c2_min;
  Bound c1_max;
  std::optional<Bound> c2_max;
  std::optional<Bound> c1_min;

  bool feasible = false;
  std::optional<std::string> failed_condition;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

inline std::string threat_sentence(const Game& base, const Roles& roles, std::size_t target,
                                   const Rational& fee, const Rational& payment) {
  const auto& strategy = base.strategy_name(roles.recipient, target);
  std::string out = "Either you pay me " + to_string(fee) + ", or if you decline, I give " + to_string(payment);
  if (roles.recipient == roles.extorted) {
    out += " to you whenever you play " + strategy + ".";
  } else {
    out += " to player " + base.player_name(roles.recipient) + " whenever they play " + strategy + ".";
  }
  return out;
}

namespace detail {

inline std::string range(const Rational& lo, const Rational& hi) {
  return "(" + to_string(lo) + ", " + to_string(hi) + ")";
}

struct ScenarioChecks {
  std::vector<Diagnostic> diagnostics;
  bool feasible = true;
};

/// Feasibility conditions that depend only on the game and the roles.
inline ScenarioChecks scenario_checks(const Game& base, const Roles& roles, std::size_t target, const Shift& sh) {
  ScenarioChecks out;
  const auto gap = equilibrium_gap(base, sh, roles.extorted);
  auto add = [&](std::string condition, bool passed, std::string detail) {
    out.diagnostics.push_back({std::move(condition), passed, std::move(detail)});
    out.feasible = out.feasible && passed;
  };
  if (!is_one_player(roles.scenario)) {
    add("corollary-1", gap > 0,
        "u_c(s*) - u_c(s*D) = " + to_string(base.payoff(sh.base_eq, roles.extorted)) + " - " +
            to_string(base.payoff(sh.decline_eq, roles.extorted)) + " must be > 0");
    return out;
  }
  const bool r1 = restriction_one_feasible(base, roles.extorted, target);
  add("restriction-I", r1,
      r1 ? "co-player shifts " + base.strategy_name(co_player(roles.extorted), sh.base_eq[co_player(roles.extorted)]) +
               " -> " + base.strategy_name(co_player(roles.extorted), sh.decline_eq[co_player(roles.extorted)])
         : "co-player has dominant strategy; equilibrium shift keeps their strategy");
  add("restriction-II", gap > sh.c2_min.value,
      "gap " + to_string(gap) + " must be > c2_min " + to_string(sh.c2_min.value));
  if (roles.extortioner) {
    const auto e = *roles.extortioner;
    const auto loss = base.payoff(sh.decline_eq, e) - base.payoff(sh.base_eq, e);
    add("worthwhile-games", gap > loss, "gap " + to_string(gap) + " must be > " + to_string(loss));
  }
  return out;
}

inline std::size_t choose_target(const Game& base, const Roles& roles, const std::optional<Rational>& payment) {
  const auto eq = base_equilibrium(base);
  std::optional<std::size_t> best;
  Rational best_value;
  std::optional<ExtortionError> first_error;
  for (std::size_t s = 0; s < base.num_strategies(roles.recipient); ++s) {
    if (s == eq[roles.recipient]) continue;
    try {
      const auto sh = shift(base, roles.recipient, s);
      Rational value = equilibrium_gap(base, sh, roles.extorted);
      if (is_one_player(roles.scenario)) value -= payment.value_or(sh.c2_min.value);
      if (!best || value > best_value) {
        best = s;
        best_value = value;
      }
    } catch (const ExtortionError& e) {
      if (!first_error) first_error = e;
    }
  }
  if (!best) throw *first_error;
  return *best;
}

}  // namespace detail

inline ExtortionReport analyze(const Game& base, const BindingThreat& threat) {
  require_two_players(base);
  validate_roles(base, threat.roles);
  if (threat.fee <= 0) throw ExtortionError("fee", "fee must be positive");
  if (threat.payment <= 0) throw ExtortionError("payment", "payment must be positive");
  const auto& roles = threat.roles;
  const auto eq = base_equilibrium(base);

  const std::size_t target = threat.target ? *threat.target : detail::choose_target(base, roles, threat.payment);
  const auto sh = detail::shift(base, roles.recipient, target);
  BindingThreat resolved = threat;
  resolved.target = target;

  ExtortionReport r;
  r.player_names = base.player_names();
  r.strategy_names = base.strategy_names();
  r.roles = roles;
  r.target = target;
  r.fee = threat.fee;
  r.payment = threat.payment;
  r.threat_sentence = threat_sentence(base, roles, target, threat.fee, threat.payment);
  r.base_equilibrium = eq;
  r.predicted_decline_equilibrium = sh.decline_eq;
  r.creation_threshold = sh.creation;
  r.uniqueness_threshold = sh.uniqueness;
  r.c2_min = sh.c2_min;

  auto add = [&](std::string condition, bool passed, std::string detail) {
    r.diagnostics.push_back({std::move(condition), passed, std::move(detail)});
  };
  add("assumption-1", true, "unique base equilibrium " + base.describe(eq));

  const bool creation_ok = threat.payment > sh.creation;
  const bool uniqueness_ok = threat.payment > sh.uniqueness;
  add("theorem-2-creation", creation_ok,
      "c2 = " + to_string(threat.payment) + " must be > " + to_string(sh.creation));
  add("theorem-2-uniqueness", uniqueness_ok,
      "c2 = " + to_string(threat.payment) + " must be > " + to_string(sh.uniqueness));

  const auto gap = detail::equilibrium_gap(base, sh, roles.extorted);
  const auto e = roles.extortioner;
  if (is_one_player(roles.scenario)) {
    r.c1_max = Bound::upper(gap - threat.payment);
    r.c2_max = Bound::upper(gap - threat.fee);
  } else {
    r.c1_max = Bound::upper(gap);
  }
  if (e) {
    // The internal extortioner's own worthwhile condition also bounds the payment from below.
    const auto loss = base.payoff(sh.decline_eq, *e) - base.payoff(sh.base_eq, *e);
    r.c1_min = Bound::lower(std::max(loss - threat.payment, Rational(0)));
    r.c2_min = Bound::lower(std::max(sh.c2_min.value, loss - threat.fee));
  }

  const auto checks = detail::scenario_checks(base, roles, target, sh);
  r.diagnostics.insert(r.diagnostics.end(), checks.diagnostics.begin(), checks.diagnostics.end());
  r.feasible = checks.feasible;

  const auto m = make_manipulated_game(base, resolved);
  r.accept_equilibrium = unique_pure_nash(m.accept);
  r.decline_equilibrium = unique_pure_nash(m.decline);
  const bool accept_solved = r.accept_equilibrium && is_strict_nash(m.accept, *r.accept_equilibrium);
  const bool decline_solved = r.decline_equilibrium && is_strict_nash(m.decline, *r.decline_equilibrium);
  const bool decline_as_predicted = decline_solved && *r.decline_equilibrium == sh.decline_eq;
  add("decline-enumeration", decline_as_predicted,
      decline_solved ? "unique strict equilibrium " + base.describe(*r.decline_equilibrium)
                     : std::string("no unique strict equilibrium"));

  bool theorem_one = false;
  if (accept_solved && decline_solved) {
    const auto& accepted = *r.accept_equilibrium;
    const auto& declined = *r.decline_equilibrium;
    r.extorted_accept_payoff = m.accept.payoff(accepted, roles.extorted);
    r.extorted_decline_payoff = m.decline.payoff(declined, roles.extorted);
    theorem_one = *r.extorted_accept_payoff > *r.extorted_decline_payoff;
    add("theorem-1", theorem_one,
        "u_c^A(s*A) = " + to_string(*r.extorted_accept_payoff) + " must be > u_c^D(s*D) = " +
            to_string(*r.extorted_decline_payoff));
    if (e) {
      r.extortioner_accept_payoff = m.accept.payoff(accepted, *e);
      r.extortioner_decline_payoff = m.decline.payoff(declined, *e);
      r.worthwhile = *r.extortioner_accept_payoff > *r.extortioner_decline_payoff;
      add("worthwhile", *r.worthwhile,
          "u_e^A(s*A) = " + to_string(*r.extortioner_accept_payoff) + " must be > u_e^D(s*D) = " +
              to_string(*r.extortioner_decline_payoff));
    }
  } else {
    add("theorem-1", false, "subgames lack unique strict equilibria; extorted player declines");
    if (e) {
      r.worthwhile = false;
      add("worthwhile", false, "not evaluated");
    }
  }

  const bool accept = theorem_one && creation_ok && uniqueness_ok && decline_as_predicted;
  r.decision = accept ? Decision::Accept : Decision::Decline;
  r.success = accept;
  return r;
}

/// Bounds for a role assignment with at most one of fee/payment fixed.
inline BoundsReport compute_bounds(const Game& base, const Roles& roles, std::optional<std::size_t> target,
                                   const std::optional<Rational>& fee, const std::optional<Rational>& payment) {
  require_two_players(base);
  validate_roles(base, roles);
  if (fee && payment) throw ExtortionError("bounds-arguments", "fix at most one of c1 and c2");
  if (fee && *fee <= 0) throw ExtortionError("fee", "fee must be positive");
  if (payment && *payment <= 0) throw ExtortionError("payment", "payment must be positive");
  const auto eq = base_equilibrium(base);
  if (!target) target = detail::choose_target(base, roles, payment);
  const auto sh = detail::shift(base, roles.recipient, *target);

  BoundsReport r;
  r.player_names = base.player_names();
  r.strategy_names = base.strategy_names();
  r.roles = roles;
  r.target = *target;
  r.fixed_fee = fee;
  r.fixed_payment = payment;
  r.base_equilibrium = eq;
  r.decline_equilibrium = sh.decline_eq;
  r.creation_threshold = sh.creation;
  r.uniqueness_threshold = sh.uniqueness;
  r.c2_min = sh.c2_min;

  const auto checks = detail::scenario_checks(base, roles, *target, sh);
  r.diagnostics = checks.diagnostics;
  auto add = [&](std::string condition, bool passed, std::string detail) {
    r.diagnostics.push_back({std::move(condition), passed, std::move(detail)});
  };

  const auto gap = detail::equilibrium_gap(base, sh, roles.extorted);
  const bool one = is_one_player(roles.scenario);
  std::optional<Rational> loss;  // internal extortioner's base-payoff loss on decline
  if (roles.extortioner) {
    loss = base.payoff(sh.decline_eq, *roles.extortioner) - base.payoff(sh.base_eq, *roles.extortioner);
  }

  if (payment) {
    add("theorem-2-creation", *payment > sh.creation,
        "c2 = " + to_string(*payment) + " must be > " + to_string(sh.creation));
    add("theorem-2-uniqueness", *payment > sh.uniqueness,
        "c2 = " + to_string(*payment) + " must be > " + to_string(sh.uniqueness));
  }
  if (!one) {
    r.c1_max = Bound::upper(gap);
    if (fee) add("theorem-1", *fee < gap, "c1 = " + to_string(*fee) + " must be < " + to_string(gap));
  } else {
    r.c1_max = Bound::upper(gap - payment.value_or(sh.c2_min.value));
    if (payment) {
      add("theorem-1", r.c1_max.value > 0, "c1 range " + detail::range(Rational(0), r.c1_max.value));
      if (loss) r.c1_min = Bound::lower(std::max(*loss - *payment, Rational(0)));
      if (r.c1_min) {
        add("worthwhile", r.c1_min->value < r.c1_max.value,
            "c1 range " + detail::range(r.c1_min->value, r.c1_max.value));
      }
    }
    if (fee) {
      r.c2_max = Bound::upper(gap - *fee);
      if (loss) r.c2_min = Bound::lower(std::max(sh.c2_min.value, *loss - *fee));
      add("theorem-1", r.c2_min.value < r.c2_max->value,
          "c2 range " + detail::range(r.c2_min.value, r.c2_max->value));
    }
  }

  r.feasible = std::all_of(r.diagnostics.begin(), r.diagnostics.end(), [](const Diagnostic& d) { return d.passed; });
  for (const auto& d : r.diagnostics) {
    if (!d.passed) {
      r.failed_condition = d.condition;
      break;
    }
  }
  return r;
}

}  // namespace extortion
