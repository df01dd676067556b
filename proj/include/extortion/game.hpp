// Finite normal-form games with exact payoffs and pure-strategy solution
// concepts: best responses, strict dominance and Nash enumeration.

#pragma once

#include "extortion/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extortion {

/// One strategy index per player, ordered by player index.
using Profile = std::vector<std::size_t>;

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PayoffEntry {
  Profile profile;
  std::vector<Rational> values;  // one per player
};

struct BestResponses {
  std::vector<std::size_t> strategies;  // ascending
  bool strict = false;                  // true iff exactly one maximizer
};

class Game {
 public:
  Game(std::vector<std::string> player_names,
       std::vector<std::vector<std::string>> strategy_names,
       const std::vector<PayoffEntry>& entries)
      : player_names_(std::move(player_names)),
        strategy_names_(std::move(strategy_names)) {
    if (player_names_.empty()) throw GameError("game needs at least one player");
    if (strategy_names_.size() != player_names_.size()) {
      throw GameError("strategy lists do not match player count");
    }
    check_distinct(player_names_, "player");
    std::size_t cells = 1;
    for (const auto& names : strategy_names_) {
      if (names.size() < 2) throw GameError("every player needs at least 2 strategies");
      check_distinct(names, "strategy");
      cells *= names.size();
    }
    payoffs_.assign(cells * num_players(), Rational(0));
    std::vector<bool> seen(cells, false);
    for (const auto& entry : entries) {
      check_profile(entry.profile);
      if (entry.values.size() != num_players()) {
        throw GameError("payoff vector length differs from player count");
      }
      const auto cell = cell_index(entry.profile);
      if (seen[cell]) throw GameError("duplicate payoff entry for profile " + describe(entry.profile));
      seen[cell] = true;
      std::copy(entry.values.begin(), entry.values.end(),
                payoffs_.begin() + static_cast<std::ptrdiff_t>(cell * num_players()));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw GameError("incomplete payoff tensor");
    }
  }

  std::size_t num_players() const { return player_names_.size(); }
  std::size_t num_strategies(std::size_t player) const {
    check_player(player);
    return strategy_names_[player].size();
  }
  std::size_t num_profiles() const { return payoffs_.size() / num_players(); }

  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::vector<std::string>>& strategy_names() const { return strategy_names_; }
  const std::string& player_name(std::size_t player) const {
    check_player(player);
    return player_names_[player];
  }
  const std::string& strategy_name(std::size_t player, std::size_t strategy) const {
    check_player(player);
    if (strategy >= strategy_names_[player].size()) throw std::out_of_range("strategy index out of range");
    return strategy_names_[player][strategy];
  }

  std::optional<std::size_t> find_player(const std::string& name) const {
    const auto it = std::find(player_names_.begin(), player_names_.end(), name);
    if (it == player_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - player_names_.begin());
  }
  std::optional<std::size_t> find_strategy(std::size_t player, const std::string& name) const {
    check_player(player);
    const auto& names = strategy_names_[player];
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }

  const Rational& payoff(const Profile& profile, std::size_t player) const {
    check_player(player);
    check_profile(profile);
    return payoffs_[cell_index(profile) * num_players() + player];
  }

  /// Profile at position `index` of the row-major enumeration (last player fastest).
  Profile profile_at(std::size_t index) const {
    Profile profile(num_players());
    for (std::size_t p = num_players(); p-- > 0;) {
      profile[p] = index % strategy_names_[p].size();
      index /= strategy_names_[p].size();
    }
    return profile;
  }

  std::vector<Profile> profiles() const {
    std::vector<Profile> all;
    all.reserve(num_profiles());
    for (std::size_t i = 0; i < num_profiles(); ++i) all.push_back(profile_at(i));
    return all;
  }

  /// Copy with `player`'s payoff replaced by `f(profile, old)` at every profile.
  template <typename Fn>
  Game transform_payoffs(std::size_t player, Fn&& f) const {
    check_player(player);
    Game copy = *this;
    for (std::size_t cell = 0; cell < num_profiles(); ++cell) {
      auto& value = copy.payoffs_[cell * num_players() + player];
      value = f(profile_at(cell), value);
    }
    return copy;
  }

  std::string describe(const Profile& profile) const {
    std::string out = "(";
    for (std::size_t p = 0; p < profile.size(); ++p) {
      if (p) out += ",";
      out += p < num_players() && profile[p] < strategy_names_[p].size()
                 ? strategy_names_[p][profile[p]]
                 : std::to_string(profile[p]);
    }
    return out + ")";
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  static void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size()) throw GameError(std::string("duplicate ") + what + " label");
  }

  void check_player(std::size_t player) const {
    if (player >= num_players()) throw std::out_of_range("player index out of range");
  }

  void check_profile(const Profile& profile) const {
    if (profile.size() != num_players()) throw std::out_of_range("profile length differs from player count");
    for (std::size_t p = 0; p < profile.size(); ++p) {
      if (profile[p] >= strategy_names_[p].size()) throw std::out_of_range("strategy index out of range");
    }
  }

  std::size_t cell_index(const Profile& profile) const {
    std::size_t index = 0;
    for (std::size_t p = 0; p < profile.size(); ++p) {
      index = index * strategy_names_[p].size() + profile[p];
    }
    return index;
  }

  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_names_;
  std::vector<Rational> payoffs_;  // cell-major, one value per player
};

inline Game make_game(std::vector<std::string> player_names,
                      std::vector<std::vector<std::string>> strategy_names,
                      const std::vector<PayoffEntry>& entries) {
  return Game(std::move(player_names), std::move(strategy_names), entries);
}

/// Two-player game from a [row][column] table of (row payoff, column payoff).
inline Game make_bimatrix(std::vector<std::string> row_strategies,
                          std::vector<std::string> column_strategies,
                          const std::vector<std::vector<std::pair<Rational, Rational>>>& table,
                          std::vector<std::string> player_names = {"Row", "Column"}) {
  if (table.size() != row_strategies.size()) throw GameError("inconsistent dimensions: row count");
  std::vector<PayoffEntry> entries;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table[r].size() != column_strategies.size()) throw GameError("inconsistent dimensions: column count");
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      entries.push_back({{r, c}, {table[r][c].first, table[r][c].second}});
    }
  }
  return Game(std::move(player_names), {std::move(row_strategies), std::move(column_strategies)},
              entries);
}

inline const Rational& payoff(const Game& game, const Profile& profile, std::size_t player) {
  return game.payoff(profile, player);
}

/// `others` fixes every player except `player`; its entry for `player` is ignored.
inline BestResponses best_responses(const Game& game, std::size_t player, Profile others) {
  const auto count = game.num_strategies(player);
  if (others.size() != game.num_players()) throw std::out_of_range("partial profile length differs from player count");
  BestResponses result;
  std::optional<Rational> best;
  for (std::size_t s = 0; s < count; ++s) {
    others[player] = s;
    const auto& value = game.payoff(others, player);
    if (!best || value > *best) {
      best = value;
      result.strategies.assign(1, s);
    } else if (value == *best) {
      result.strategies.push_back(s);
    }
  }
  result.strict = result.strategies.size() == 1;
  return result;
}

inline bool is_nash(const Game& game, const Profile& profile) {
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const auto& current = game.payoff(profile, p);
    Profile deviation = profile;
    for (std::size_t s = 0; s < game.num_strategies(p); ++s) {
      deviation[p] = s;
      if (game.payoff(deviation, p) > current) return false;
    }
  }
  return true;
}

/// Nash equilibrium in which every player's strategy is their unique best response.
inline bool is_strict_nash(const Game& game, const Profile& profile) {
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const auto br = best_responses(game, p, profile);
    if (!br.strict || br.strategies.front() != profile[p]) return false;
  }
  return true;
}

/// Weak-inequality pure equilibria, by exhaustive enumeration.
inline std::vector<Profile> pure_nash_equilibria(const Game& game) {
  std::vector<Profile> equilibria;
  for (std::size_t i = 0; i < game.num_profiles(); ++i) {
    auto profile = game.profile_at(i);
    if (is_nash(game, profile)) equilibria.push_back(std::move(profile));
  }
  return equilibria;
}

inline std::optional<Profile> unique_pure_nash(const Game& game) {
  auto equilibria = pure_nash_equilibria(game);
  if (equilibria.size() != 1) return std::nullopt;
  return std::move(equilibria.front());
}

/// Strategy that is the strict best response to every opponent profile.
inline std::optional<std::size_t> dominant_strategy(const Game& game, std::size_t player) {
  std::optional<std::size_t> candidate;
  for (std::size_t i = 0; i < game.num_profiles(); ++i) {
    const auto profile = game.profile_at(i);
    if (profile[player] != 0) continue;  // visit each opponent profile once
    const auto br = best_responses(game, player, profile);
    if (!br.strict) return std::nullopt;
    if (candidate && *candidate != br.strategies.front()) return std::nullopt;
    candidate = br.strategies.front();
  }
  return candidate;
}

}  // namespace extortion
