// The strict-ordinal 2x2 game space: 24 x 24 rank assignments, quotiented
// by row and column relabeling into 144 classes of four.

#pragma once

#include "extortion/engine.hpp"
#include "extortion/game.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extortion::taxonomy {

inline constexpr std::size_t kRawGames = 576;
inline constexpr std::size_t kCanonicalGames = 144;

/// Row player's ranks at cells (0,0),(0,1),(1,0),(1,1), then the column player's.
using Ranks = std::array<int, 8>;

inline int& rank_at(Ranks& r, std::size_t player, std::size_t row, std::size_t col) {
  return r[player * 4 + row * 2 + col];
}
inline int rank_at(const Ranks& r, std::size_t player, std::size_t row, std::size_t col) {
  return r[player * 4 + row * 2 + col];
}

inline Ranks swap_rows(const Ranks& r) {
  Ranks out{};
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t row = 0; row < 2; ++row)
      for (std::size_t col = 0; col < 2; ++col) rank_at(out, p, 1 - row, col) = rank_at(r, p, row, col);
  return out;
}

inline Ranks swap_columns(const Ranks& r) {
  Ranks out{};
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t row = 0; row < 2; ++row)
      for (std::size_t col = 0; col < 2; ++col) rank_at(out, p, row, 1 - col) = rank_at(r, p, row, col);
  return out;
}

inline std::array<Ranks, 4> orbit(const Ranks& r) {
  return {r, swap_rows(r), swap_columns(r), swap_rows(swap_columns(r))};
}

/// Lexicographically smallest image under row swap, column swap and both.
inline Ranks canonical_form(const Ranks& r) {
  const auto images = orbit(r);
  return *std::min_element(images.begin(), images.end());
}

/// The k-th permutation of {1,2,3,4} in lexicographic order.
inline std::array<int, 4> rank_permutation(std::size_t k) {
  std::array<int, 4> perm{1, 2, 3, 4};
  for (std::size_t i = 0; i < k; ++i) std::next_permutation(perm.begin(), perm.end());
  return perm;
}

/// raw_id = 24 * (row player's permutation index) + column player's permutation index.
inline Ranks ranks_for_raw_id(std::size_t raw_id) {
  if (raw_id >= kRawGames) throw std::out_of_range("raw id out of range");
  const auto row = rank_permutation(raw_id / 24);
  const auto col = rank_permutation(raw_id % 24);
  Ranks r{};
  std::copy(row.begin(), row.end(), r.begin());
  std::copy(col.begin(), col.end(), r.begin() + 4);
  return r;
}

inline Game game_from_ranks(const Ranks& r) {
  std::vector<std::vector<std::pair<Rational, Rational>>> table(2, std::vector<std::pair<Rational, Rational>>(2));
  for (std::size_t row = 0; row < 2; ++row)
    for (std::size_t col = 0; col < 2; ++col)
      table[row][col] = {Rational(rank_at(r, 0, row, col)), Rational(rank_at(r, 1, row, col))};
  return make_bimatrix({"T", "B"}, {"L", "R"}, table);
}

struct StructureFlags {
  bool dominant_row = false;
  bool dominant_col = false;
  std::size_t ne_count = 0;
  std::optional<Profile> ne;  // when unique
  bool row_best_at_ne = false;
  bool col_best_at_ne = false;
  bool row_worst_opposite_ne = false;  // rank 1 in the cell diagonally opposite the equilibrium
  bool col_worst_opposite_ne = false;

  bool best_at_ne(std::size_t player) const { return player == 0 ? row_best_at_ne : col_best_at_ne; }
  bool worst_opposite_ne(std::size_t player) const { return player == 0 ? row_worst_opposite_ne : col_worst_opposite_ne; }
  bool dominant(std::size_t player) const { return player == 0 ? dominant_row : dominant_col; }

  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

struct PlayerFlags {
  bool row = false;
  bool col = false;

  bool operator[](std::size_t player) const { return player == 0 ? row : col; }
  void set(std::size_t player, bool value) { (player == 0 ? row : col) = value; }
  bool any() const { return row || col; }

  friend bool operator==(const PlayerFlags&, const PlayerFlags&) = default;
};

struct OrdinalGameRecord {
  std::size_t raw_id = 0;
  Ranks ranks{};
  Game game;
  std::size_t canonical_id = 0;
  Ranks canonical_ranks{};
  StructureFlags flags;
  PlayerFlags two_player;
  PlayerFlags one_player;
  PlayerFlags internal;
  PlayerFlags internal_risk;  // extortioner (co-player of the flagged player) ends below base payoff on decline
};

inline StructureFlags classify(const Game& game) {
  StructureFlags f;
  f.dominant_row = dominant_strategy(game, 0).has_value();
  f.dominant_col = dominant_strategy(game, 1).has_value();
  const auto equilibria = pure_nash_equilibria(game);
  f.ne_count = equilibria.size();
  if (equilibria.size() != 1) return f;
  const auto& ne = equilibria.front();
  f.ne = ne;
  const Profile opposite{1 - ne[0], 1 - ne[1]};
  f.row_best_at_ne = game.payoff(ne, 0) == Rational(4);
  f.col_best_at_ne = game.payoff(ne, 1) == Rational(4);
  f.row_worst_opposite_ne = game.payoff(opposite, 0) == Rational(1);
  f.col_worst_opposite_ne = game.payoff(opposite, 1) == Rational(1);
  return f;
}

inline StructureFlags classify(const OrdinalGameRecord& record) { return classify(record.game); }

/// Canonical class id, numbered in first-seen order over raw ids.
inline std::size_t canonicalize(const Ranks& r) {
  static const std::map<Ranks, std::size_t> ids = [] {
    std::map<Ranks, std::size_t> table;
    for (std::size_t raw = 0; raw < kRawGames; ++raw) {
      table.emplace(canonical_form(ranks_for_raw_id(raw)), table.size());
    }
    return table;
  }();
  return ids.at(canonical_form(r));
}

inline std::size_t canonicalize(const OrdinalGameRecord& record) { return canonicalize(record.ranks); }

inline std::vector<OrdinalGameRecord> enumerate_ordinal_games() {
  std::vector<OrdinalGameRecord> records;
  records.reserve(kRawGames);
  for (std::size_t raw = 0; raw < kRawGames; ++raw) {
    const auto ranks = ranks_for_raw_id(raw);
    OrdinalGameRecord rec{raw, ranks, game_from_ranks(ranks), canonicalize(ranks), canonical_form(ranks), {}, {}, {}, {}, {}};
    rec.flags = classify(rec.game);
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Susceptibility predicates

/// Extorted player dominant, co-player not, equilibrium at their rank 4 with rank 1 diagonally opposite.
inline bool one_player_structural(const StructureFlags& f, std::size_t player) {
  return f.ne && f.dominant(player) && !f.dominant(co_player(player)) && f.best_at_ne(player) &&
         f.worst_opposite_ne(player);
}

/// Corollary-1 susceptibility through the engine, over every candidate target.
inline bool two_player_susceptible(const Game& game, std::size_t player) {
  const auto eq = unique_pure_nash(game);
  if (!eq) return false;
  const auto recipient = co_player(player);
  for (std::size_t s = 0; s < game.num_strategies(recipient); ++s) {
    if (s != (*eq)[recipient] && is_susceptible(game, player, recipient, s)) return true;
  }
  return false;
}

/// Some (c1, c2) open interval exists, with rank payoffs as cardinal values.
inline bool engine_feasible(const Game& game, const Roles& roles) {
  if (!unique_pure_nash(game)) return false;
  return compute_bounds(game, roles, std::nullopt, std::nullopt, std::nullopt).feasible;
}

inline Roles one_player_roles(std::size_t player) { return {player, player, std::nullopt, Scenario::OnePlayerExternal}; }
inline Roles internal_roles(std::size_t player) {
  return {player, player, co_player(player), Scenario::OnePlayerInternal};
}

// ---------------------------------------------------------------------------
// Scans

enum class Scheme { TwoPlayer, OnePlayer, Internal };

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::TwoPlayer: return "two-player";
    case Scheme::OnePlayer: return "one-player";
    case Scheme::Internal: return "internal";
  }
  return "unknown";
}

inline Scheme parse_scheme(std::string_view name) {
  for (auto s : {Scheme::TwoPlayer, Scheme::OnePlayer, Scheme::Internal}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

struct Count {
  std::size_t raw = 0;
  std::size_t canonical = 0;

  Rational raw_fraction() const { return Rational(static_cast<std::int64_t>(raw), kRawGames); }
  Rational canonical_fraction() const { return Rational(static_cast<std::int64_t>(canonical), kCanonicalGames); }

  friend bool operator==(const Count&, const Count&) = default;
};

struct ScanSummary {
  Scheme scheme = Scheme::TwoPlayer;
  std::size_t total_raw = kRawGames;
  std::size_t total_canonical = kCanonicalGames;
  Count excluded;     // no unique pure equilibrium
  Count susceptible;  // at least one player
  Count row_only;
  Count column_only;
  Count both;
  Count extortioner_risk;  // internal scheme only

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

class ScanConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Counts records matching `pred`, raw and by class; every class must match as a whole.
template <typename Pred>
Count count(const std::vector<OrdinalGameRecord>& records, Pred pred) {
  Count c;
  std::map<std::size_t, std::size_t> per_class;
  for (const auto& rec : records) {
    if (!pred(rec)) continue;
    ++c.raw;
    ++per_class[rec.canonical_id];
  }
  for (const auto& [id, n] : per_class) {
    if (n != 4) throw ScanConsistencyError("class " + std::to_string(id) + " is split by a susceptibility flag");
  }
  c.canonical = per_class.size();
  return c;
}

template <typename Get>
ScanSummary summarize(Scheme scheme, const std::vector<OrdinalGameRecord>& records, Get get) {
  ScanSummary s;
  s.scheme = scheme;
  s.excluded = count(records, [](const auto& r) { return r.flags.ne_count != 1; });
  s.susceptible = count(records, [&](const auto& r) { return get(r).any(); });
  s.row_only = count(records, [&](const auto& r) { return get(r).row && !get(r).col; });
  s.column_only = count(records, [&](const auto& r) { return !get(r).row && get(r).col; });
  s.both = count(records, [&](const auto& r) { return get(r).row && get(r).col; });
  if (s.susceptible.raw_fraction() != s.susceptible.canonical_fraction() ||
      s.excluded.raw_fraction() != s.excluded.canonical_fraction()) {
    throw ScanConsistencyError("raw and canonical fractions differ");
  }
  return s;
}

}  // namespace detail

inline ScanSummary scan_two_player(std::vector<OrdinalGameRecord>& records) {
  for (auto& rec : records) {
    for (std::size_t p = 0; p < 2; ++p) rec.two_player.set(p, two_player_susceptible(rec.game, p));
  }
  return detail::summarize(Scheme::TwoPlayer, records, [](const OrdinalGameRecord& r) { return r.two_player; });
}

/// Structural predicate, confirmed record by record against engine feasibility.
inline ScanSummary scan_one_player(std::vector<OrdinalGameRecord>& records) {
  for (auto& rec : records) {
    for (std::size_t p = 0; p < 2; ++p) {
      const bool structural = one_player_structural(rec.flags, p);
      const bool feasible = engine_feasible(rec.game, one_player_roles(p));
      if (structural != feasible) {
        throw ScanConsistencyError("one-player structure and engine feasibility disagree on raw game " +
                                   std::to_string(rec.raw_id));
      }
      rec.one_player.set(p, feasible);
    }
  }
  return detail::summarize(Scheme::OnePlayer, records, [](const OrdinalGameRecord& r) { return r.one_player; });
}

/// Internal extortioner (the co-player of the flagged player), rank payoffs as magnitudes.
/// `extortioner_side` restricts the scan to one extortioner (0 = row, 1 = column).
inline ScanSummary scan_one_player_internal(std::vector<OrdinalGameRecord>& records,
                                            std::optional<std::size_t> extortioner_side = std::nullopt) {
  for (auto& rec : records) {
    for (std::size_t p = 0; p < 2; ++p) {
      const auto e = co_player(p);
      rec.internal.set(p, false);
      rec.internal_risk.set(p, false);
      if (extortioner_side && *extortioner_side != e) continue;
      if (!one_player_structural(rec.flags, p)) continue;
      rec.internal.set(p, engine_feasible(rec.game, internal_roles(p)));
      const auto& ne = *rec.flags.ne;
      const auto shifted = decline_equilibrium_target(rec.game, p, 1 - ne[p]);
      rec.internal_risk.set(p, shifted && rec.game.payoff(*shifted, e) < rec.game.payoff(ne, e));
    }
  }
  auto s = detail::summarize(Scheme::Internal, records, [](const OrdinalGameRecord& r) { return r.internal; });
  s.extortioner_risk = detail::count(records, [](const OrdinalGameRecord& r) { return r.internal_risk.any(); });
  return s;
}

inline ScanSummary scan_two_player() {
  auto records = enumerate_ordinal_games();
  return scan_two_player(records);
}
inline ScanSummary scan_one_player() {
  auto records = enumerate_ordinal_games();
  return scan_one_player(records);
}
inline ScanSummary scan_one_player_internal() {
  auto records = enumerate_ordinal_games();
  return scan_one_player_internal(records);
}

inline ScanSummary run_scan(Scheme scheme, std::vector<OrdinalGameRecord>& records) {
  switch (scheme) {
    case Scheme::TwoPlayer: return scan_two_player(records);
    case Scheme::OnePlayer: return scan_one_player(records);
    case Scheme::Internal: return scan_one_player_internal(records);
  }
  throw std::invalid_argument("unknown scheme");
}

/// "56.25% (324/576, 81/144)"
inline std::string headline(const Count& c) {
  return format_percent(c.raw_fraction()) + "% (" + std::to_string(c.raw) + "/" + std::to_string(kRawGames) +
         ", " + std::to_string(c.canonical) + "/" + std::to_string(kCanonicalGames) + ")";
}

}  // namespace extortion::taxonomy
