// JSON documents: game files, threat files, analysis/bounds reports and scan
// summaries. Rationals travel as strings ("3", "7/3"); integer JSON numbers
// are accepted on input, floating-point numbers never are.

#pragma once

#include "extortion/engine.hpp"
#include "extortion/game.hpp"
#include "extortion/rational.hpp"
#include "extortion/taxonomy.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace extortion::io {

using Json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Scalars

inline Rational rational_from_json(const Json& value) {
  if (value.is_number_float()) throw DocumentError("floating-point literal; use p/q");
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const RationalParseError& e) {
      const std::string what = e.what();
      if (what.find("floating-point") != std::string::npos) throw DocumentError("floating-point literal; use p/q");
      throw DocumentError(what);
    }
  }
  throw DocumentError("expected an integer or a \"p/q\" string");
}

inline Json rational_to_json(const Rational& value) { return to_string(value); }

inline Json bound_to_json(const Bound& b) {
  return Json{{"value", to_string(b.value)},
              {"side", b.side == Bound::Side::Upper ? "upper" : "lower"},
              {"exclusive", Bound::exclusive()}};
}

inline Bound bound_from_json(const Json& j) {
  if (!j.at("exclusive").get<bool>()) throw DocumentError("bounds are always exclusive");
  const auto side = j.at("side").get<std::string>();
  if (side != "upper" && side != "lower") throw DocumentError("bound side must be upper or lower");
  return {rational_from_json(j.at("value")), side == "upper" ? Bound::Side::Upper : Bound::Side::Lower};
}

template <typename T, typename F>
Json optional_to_json(const std::optional<T>& value, F&& f) {
  return value ? f(*value) : Json(nullptr);
}

template <typename T, typename F>
std::optional<T> optional_from_json(const Json& j, const char* key, F&& f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw DocumentError("cannot read '" + path + "'");
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw DocumentError("malformed document '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Game files

inline std::size_t index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw DocumentError(std::string("unknown ") + what + " '" + name + "'");
}

inline Game game_from_json(const Json& doc) {
  try {
    const auto players = doc.at("players").get<std::vector<std::string>>();
    const auto strategies = doc.at("strategies").get<std::vector<std::vector<std::string>>>();
    if (strategies.size() != players.size()) throw DocumentError("inconsistent dimensions: strategies per player");
    const auto& payoffs = doc.at("payoffs");
    if (!payoffs.is_array()) throw DocumentError("payoffs must be an array");
    std::vector<PayoffEntry> entries;
    auto read_values = [&](const Json& values) {
      if (!values.is_array() || values.size() != players.size()) {
        throw DocumentError("inconsistent dimensions: payoff vector length");
      }
      std::vector<Rational> out;
      for (const auto& v : values) out.push_back(rational_from_json(v));
      return out;
    };
    if (!payoffs.empty() && payoffs.front().is_object()) {
      for (const auto& entry : payoffs) {
        const auto names = entry.at("profile").get<std::vector<std::string>>();
        if (names.size() != players.size()) throw DocumentError("inconsistent dimensions: profile length");
        Profile profile;
        for (std::size_t p = 0; p < names.size(); ++p) profile.push_back(index_of(strategies[p], names[p], "strategy"));
        entries.push_back({profile, read_values(entry.at("values"))});
      }
    } else {
      if (players.size() != 2) throw DocumentError("nested payoff tables need exactly 2 players; use profile entries");
      if (payoffs.size() != strategies[0].size()) throw DocumentError("inconsistent dimensions: row count");
      for (std::size_t r = 0; r < payoffs.size(); ++r) {
        if (!payoffs[r].is_array() || payoffs[r].size() != strategies[1].size()) {
          throw DocumentError("inconsistent dimensions: column count in row " + std::to_string(r));
        }
        for (std::size_t c = 0; c < payoffs[r].size(); ++c) entries.push_back({{r, c}, read_values(payoffs[r][c])});
      }
    }
    return make_game(players, strategies, entries);
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed game document: ") + e.what());
  } catch (const GameError& e) {
    throw DocumentError(e.what());
  }
}

inline Json game_to_json(const Game& game) {
  Json doc;
  doc["players"] = game.player_names();
  doc["strategies"] = game.strategy_names();
  Json payoffs = Json::array();
  if (game.num_players() == 2) {
    for (std::size_t r = 0; r < game.num_strategies(0); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < game.num_strategies(1); ++c) {
        row.push_back(Json::array({to_string(game.payoff({r, c}, 0)), to_string(game.payoff({r, c}, 1))}));
      }
      payoffs.push_back(row);
    }
  } else {
    for (const auto& profile : game.profiles()) {
      Json names = Json::array();
      Json values = Json::array();
      for (std::size_t p = 0; p < game.num_players(); ++p) {
        names.push_back(game.strategy_name(p, profile[p]));
        values.push_back(to_string(game.payoff(profile, p)));
      }
      payoffs.push_back(Json{{"profile", names}, {"values", values}});
    }
  }
  doc["payoffs"] = payoffs;
  return doc;
}

inline Game parse_game(const std::string& path) { return game_from_json(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Threat files

struct ThreatDocument {
  Roles roles;
  std::optional<std::size_t> target;
  std::optional<Rational> fee;
  std::optional<Rational> payment;
};

inline std::size_t player_by_name(const Game& game, const std::string& name) {
  const auto p = game.find_player(name);
  if (!p) throw DocumentError("unknown player '" + name + "'");
  return *p;
}

/// Builds roles from names; recipient defaults per scenario, extortioner to the co-player.
inline Roles make_roles(const Game& game, Scenario scenario, const std::string& extorted,
                        const std::optional<std::string>& recipient, const std::optional<std::string>& extortioner) {
  require_two_players(game);
  Roles roles;
  roles.scenario = scenario;
  roles.extorted = player_by_name(game, extorted);
  if (recipient) {
    roles.recipient = player_by_name(game, *recipient);
  } else {
    roles.recipient = is_one_player(scenario) ? roles.extorted : co_player(roles.extorted);
  }
  if (extortioner) {
    roles.extortioner = player_by_name(game, *extortioner);
  } else if (scenario == Scenario::OnePlayerInternal) {
    roles.extortioner = co_player(roles.extorted);
  }
  validate_roles(game, roles);
  return roles;
}

inline std::size_t strategy_by_name(const Game& game, std::size_t player, const std::string& name) {
  const auto s = game.find_strategy(player, name);
  if (!s) throw DocumentError("unknown strategy '" + name + "' for player " + game.player_name(player));
  return *s;
}

inline ThreatDocument threat_from_json(const Json& doc, const Game& game) {
  try {
    auto opt_string = [&](const char* key) -> std::optional<std::string> {
      if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
      return doc.at(key).get<std::string>();
    };
    ThreatDocument parsed;
    parsed.roles = make_roles(game, parse_scenario(doc.at("scenario").get<std::string>()),
                            doc.at("extorted").get<std::string>(), opt_string("recipient"), opt_string("extortioner"));
    if (auto t = opt_string("target_strategy")) parsed.target = strategy_by_name(game, parsed.roles.recipient, *t);
    parsed.fee = optional_from_json<Rational>(doc, "c1", rational_from_json);
    parsed.payment = optional_from_json<Rational>(doc, "c2", rational_from_json);
    return parsed;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed threat document: ") + e.what());
  }
}

inline ThreatDocument parse_threat(const std::string& path, const Game& game) {
  return threat_from_json(read_json_file(path), game);
}

// ---------------------------------------------------------------------------
// Reports

namespace detail {

inline Json names_of(const std::vector<std::vector<std::string>>& strategies, const Profile& profile) {
  Json out = Json::array();
  for (std::size_t p = 0; p < profile.size(); ++p) out.push_back(strategies.at(p).at(profile[p]));
  return out;
}

inline Profile profile_of(const std::vector<std::vector<std::string>>& strategies, const Json& names) {
  const auto labels = names.get<std::vector<std::string>>();
  if (labels.size() != strategies.size()) throw DocumentError("profile length differs from player count");
  Profile profile;
  for (std::size_t p = 0; p < labels.size(); ++p) profile.push_back(index_of(strategies[p], labels[p], "strategy"));
  return profile;
}

inline Json roles_to_json(const std::vector<std::string>& players, const Roles& roles) {
  return Json{{"scenario", std::string(to_string(roles.scenario))},
              {"extorted", players.at(roles.extorted)},
              {"recipient", players.at(roles.recipient)},
              {"extortioner", roles.extortioner ? Json(players.at(*roles.extortioner)) : Json(nullptr)}};
}

inline Roles roles_from_json(const std::vector<std::string>& players, const Json& j) {
  Roles roles;
  roles.scenario = parse_scenario(j.at("scenario").get<std::string>());
  roles.extorted = index_of(players, j.at("extorted").get<std::string>(), "player");
  roles.recipient = index_of(players, j.at("recipient").get<std::string>(), "player");
  if (!j.at("extortioner").is_null()) roles.extortioner = index_of(players, j.at("extortioner").get<std::string>(), "player");
  return roles;
}

inline Json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) out.push_back(Json{{"condition", d.condition}, {"passed", d.passed}, {"detail", d.detail}});
  return out;
}

inline std::vector<Diagnostic> diagnostics_from_json(const Json& j) {
  std::vector<Diagnostic> out;
  for (const auto& d : j) out.push_back({d.at("condition").get<std::string>(), d.at("passed").get<bool>(), d.at("detail").get<std::string>()});
  return out;
}

inline Json optional_bound(const std::optional<Bound>& b) { return optional_to_json(b, bound_to_json); }
inline Json optional_rational(const std::optional<Rational>& r) { return optional_to_json(r, rational_to_json); }

}  // namespace detail

inline Json report_to_json(const ExtortionReport& r) {
  const auto& S = r.strategy_names;
  auto profile = [&](const Profile& p) { return detail::names_of(S, p); };
  Json doc;
  doc["kind"] = "extortion-report";
  doc["players"] = r.player_names;
  doc["strategies"] = S;
  doc["roles"] = detail::roles_to_json(r.player_names, r.roles);
  doc["target_strategy"] = S.at(r.roles.recipient).at(r.target);
  doc["c1"] = to_string(r.fee);
  doc["c2"] = to_string(r.payment);
  doc["threat"] = r.threat_sentence;
  doc["equilibria"] = Json{{"base", profile(r.base_equilibrium)},
                           {"accept", optional_to_json(r.accept_equilibrium, profile)},
                           {"decline", optional_to_json(r.decline_equilibrium, profile)},
                           {"predicted_decline", profile(r.predicted_decline_equilibrium)}};
  doc["thresholds"] = Json{{"creation", to_string(r.creation_threshold)}, {"uniqueness", to_string(r.uniqueness_threshold)}};
  doc["bounds"] = Json{{"c1_max", bound_to_json(r.c1_max)},
                       {"c1_min", detail::optional_bound(r.c1_min)},
                       {"c2_min", bound_to_json(r.c2_min)},
                       {"c2_max", detail::optional_bound(r.c2_max)}};
  doc["payoffs"] = Json{{"extorted_accept", detail::optional_rational(r.extorted_accept_payoff)},
                        {"extorted_decline", detail::optional_rational(r.extorted_decline_payoff)},
                        {"extortioner_accept", detail::optional_rational(r.extortioner_accept_payoff)},
                        {"extortioner_decline", detail::optional_rational(r.extortioner_decline_payoff)}};
  doc["worthwhile"] = r.worthwhile ? Json(*r.worthwhile) : Json(nullptr);
  doc["decision"] = std::string(to_string(r.decision));
  doc["success"] = r.success;
  doc["feasible"] = r.feasible;
  doc["diagnostics"] = detail::diagnostics_to_json(r.diagnostics);
  return doc;
}

inline ExtortionReport report_from_json(const Json& doc) {
  try {
    if (doc.at("kind") != "extortion-report") throw DocumentError("not an extortion report");
    ExtortionReport r;
    r.player_names = doc.at("players").get<std::vector<std::string>>();
    r.strategy_names = doc.at("strategies").get<std::vector<std::vector<std::string>>>();
    const auto& S = r.strategy_names;
    auto profile = [&](const Json& j) { return detail::profile_of(S, j); };
    r.roles = detail::roles_from_json(r.player_names, doc.at("roles"));
    r.target = index_of(S.at(r.roles.recipient), doc.at("target_strategy").get<std::string>(), "strategy");
    r.fee = rational_from_json(doc.at("c1"));
    r.payment = rational_from_json(doc.at("c2"));
    r.threat_sentence = doc.at("threat").get<std::string>();
    const auto& eq = doc.at("equilibria");
    r.base_equilibrium = profile(eq.at("base"));
    r.accept_equilibrium = optional_from_json<Profile>(eq, "accept", profile);
    r.decline_equilibrium = optional_from_json<Profile>(eq, "decline", profile);
    r.predicted_decline_equilibrium = profile(eq.at("predicted_decline"));
    r.creation_threshold = rational_from_json(doc.at("thresholds").at("creation"));
    r.uniqueness_threshold = rational_from_json(doc.at("thresholds").at("uniqueness"));
    const auto& b = doc.at("bounds");
    r.c1_max = bound_from_json(b.at("c1_max"));
    r.c1_min = optional_from_json<Bound>(b, "c1_min", bound_from_json);
    r.c2_min = bound_from_json(b.at("c2_min"));
    r.c2_max = optional_from_json<Bound>(b, "c2_max", bound_from_json);
    const auto& pay = doc.at("payoffs");
    r.extorted_accept_payoff = optional_from_json<Rational>(pay, "extorted_accept", rational_from_json);
    r.extorted_decline_payoff = optional_from_json<Rational>(pay, "extorted_decline", rational_from_json);
    r.extortioner_accept_payoff = optional_from_json<Rational>(pay, "extortioner_accept", rational_from_json);
    r.extortioner_decline_payoff = optional_from_json<Rational>(pay, "extortioner_decline", rational_from_json);
    r.worthwhile = optional_from_json<bool>(doc, "worthwhile", [](const Json& j) { return j.get<bool>(); });
    r.decision = doc.at("decision") == "Accept" ? Decision::Accept : Decision::Decline;
    r.success = doc.at("success").get<bool>();
    r.feasible = doc.at("feasible").get<bool>();
    r.diagnostics = detail::diagnostics_from_json(doc.at("diagnostics"));
    return r;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed report: ") + e.what());
  }
}

inline Json bounds_to_json(const BoundsReport& r) {
  const auto& S = r.strategy_names;
  Json doc;
  doc["kind"] = "bounds-report";
  doc["players"] = r.player_names;
  doc["strategies"] = S;
  doc["roles"] = detail::roles_to_json(r.player_names, r.roles);
  doc["target_strategy"] = S.at(r.roles.recipient).at(r.target);
  doc["c1"] = detail::optional_rational(r.fixed_fee);
  doc["c2"] = detail::optional_rational(r.fixed_payment);
  doc["equilibria"] = Json{{"base", detail::names_of(S, r.base_equilibrium)},
                           {"decline", detail::names_of(S, r.decline_equilibrium)}};
  doc["thresholds"] = Json{{"creation", to_string(r.creation_threshold)}, {"uniqueness", to_string(r.uniqueness_threshold)}};
  doc["bounds"] = Json{{"c1_max", bound_to_json(r.c1_max)},
                       {"c1_min", detail::optional_bound(r.c1_min)},
                       {"c2_min", bound_to_json(r.c2_min)},
                       {"c2_max", detail::optional_bound(r.c2_max)}};
  doc["feasible"] = r.feasible;
  doc["failed_condition"] = r.failed_condition ? Json(*r.failed_condition) : Json(nullptr);
  doc["diagnostics"] = detail::diagnostics_to_json(r.diagnostics);
  return doc;
}

inline BoundsReport bounds_from_json(const Json& doc) {
  try {
    if (doc.at("kind") != "bounds-report") throw DocumentError("not a bounds report");
    BoundsReport r;
    r.player_names = doc.at("players").get<std::vector<std::string>>();
    r.strategy_names = doc.at("strategies").get<std::vector<std::vector<std::string>>>();
    const auto& S = r.strategy_names;
    r.roles = detail::roles_from_json(r.player_names, doc.at("roles"));
    r.target = index_of(S.at(r.roles.recipient), doc.at("target_strategy").get<std::string>(), "strategy");
    r.fixed_fee = optional_from_json<Rational>(doc, "c1", rational_from_json);
    r.fixed_payment = optional_from_json<Rational>(doc, "c2", rational_from_json);
    r.base_equilibrium = detail::profile_of(S, doc.at("equilibria").at("base"));
    r.decline_equilibrium = detail::profile_of(S, doc.at("equilibria").at("decline"));
    r.creation_threshold = rational_from_json(doc.at("thresholds").at("creation"));
    r.uniqueness_threshold = rational_from_json(doc.at("thresholds").at("uniqueness"));
    const auto& b = doc.at("bounds");
    r.c1_max = bound_from_json(b.at("c1_max"));
    r.c1_min = optional_from_json<Bound>(b, "c1_min", bound_from_json);
    r.c2_min = bound_from_json(b.at("c2_min"));
    r.c2_max = optional_from_json<Bound>(b, "c2_max", bound_from_json);
    r.feasible = doc.at("feasible").get<bool>();
    r.failed_condition = optional_from_json<std::string>(doc, "failed_condition", [](const Json& j) { return j.get<std::string>(); });
    r.diagnostics = detail::diagnostics_from_json(doc.at("diagnostics"));
    return r;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed bounds report: ") + e.what());
  }
}

inline Json count_to_json(const taxonomy::Count& c) {
  return Json{{"raw", c.raw}, {"canonical", c.canonical}, {"fraction", to_string(c.raw_fraction())}};
}

inline taxonomy::Count count_from_json(const Json& j) {
  taxonomy::Count c{j.at("raw").get<std::size_t>(), j.at("canonical").get<std::size_t>()};
  if (rational_from_json(j.at("fraction")) != c.raw_fraction()) throw DocumentError("count fraction mismatch");
  return c;
}

inline Json summary_to_json(const taxonomy::ScanSummary& s) {
  return Json{{"kind", "scan-summary"},
              {"scheme", std::string(taxonomy::to_string(s.scheme))},
              {"total_raw", s.total_raw},
              {"total_canonical", s.total_canonical},
              {"excluded", count_to_json(s.excluded)},
              {"susceptible", count_to_json(s.susceptible)},
              {"row_only", count_to_json(s.row_only)},
              {"column_only", count_to_json(s.column_only)},
              {"both", count_to_json(s.both)},
              {"extortioner_risk", count_to_json(s.extortioner_risk)}};
}

inline taxonomy::ScanSummary summary_from_json(const Json& doc) {
  try {
    if (doc.at("kind") != "scan-summary") throw DocumentError("not a scan summary");
    taxonomy::ScanSummary s;
    s.scheme = taxonomy::parse_scheme(doc.at("scheme").get<std::string>());
    s.total_raw = doc.at("total_raw").get<std::size_t>();
    s.total_canonical = doc.at("total_canonical").get<std::size_t>();
    s.excluded = count_from_json(doc.at("excluded"));
    s.susceptible = count_from_json(doc.at("susceptible"));
    s.row_only = count_from_json(doc.at("row_only"));
    s.column_only = count_from_json(doc.at("column_only"));
    s.both = count_from_json(doc.at("both"));
    s.extortioner_risk = count_from_json(doc.at("extortioner_risk"));
    return s;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed scan summary: ") + e.what());
  }
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace extortion::io
