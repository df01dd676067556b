#include "extortion/demos.hpp"
#include "extortion/game.hpp"
#include "extortion/taxonomy.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace extortion {
namespace {

using demos::asym_concord_game;
using demos::concord_game;

Game coordination_game() {
  return make_bimatrix({"A", "B"}, {"A", "B"}, {{{2, 2}, {0, 0}}, {{0, 0}, {2, 2}}});
}

Game matching_pennies_ordinal() {
  return make_bimatrix({"H", "T"}, {"H", "T"}, {{{4, 1}, {1, 4}}, {{2, 3}, {3, 2}}});
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational(" 4/2 "), Rational(2));
  EXPECT_EQ(to_string(Rational(14, 6)), "7/3");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
}

TEST(Rational, RejectsFloatsAndGarbage) {
  EXPECT_THROW(parse_rational("0.5"), RationalParseError);
  EXPECT_THROW(parse_rational("1e3"), RationalParseError);
  EXPECT_THROW(parse_rational("1/0"), RationalParseError);
  EXPECT_THROW(parse_rational("x"), RationalParseError);
  EXPECT_THROW(parse_rational(""), RationalParseError);
}

TEST(Rational, PercentFormatting) {
  EXPECT_EQ(format_percent(Rational(324, 576)), "56.25");
  EXPECT_EQ(format_percent(Rational(96, 576)), "16.67");
  EXPECT_EQ(format_percent(Rational(1, 4)), "25");
}

TEST(MakeGame, ConcordTable) {
  const auto g = concord_game();
  EXPECT_EQ(g.num_players(), 2u);
  EXPECT_EQ(payoff(g, {1, 1}, 0), Rational(10));
  EXPECT_EQ(payoff(g, {0, 0}, 1), Rational(4));
  EXPECT_EQ(payoff(g, {0, 1}, 1), Rational(6));
}

TEST(MakeGame, MissingEntryIsIncomplete) {
  try {
    make_game({"Row", "Column"}, {{"T", "B"}, {"L", "R"}},
              {{{0, 0}, {4, 4}}, {{0, 1}, {8, 6}}, {{1, 0}, {6, 8}}});
    FAIL() << "expected GameError";
  } catch (const GameError& e) {
    EXPECT_STREQ(e.what(), "incomplete payoff tensor");
  }
}

TEST(MakeGame, RejectsDuplicatesAndTooFewStrategies) {
  EXPECT_THROW(make_game({"A", "B"}, {{"x", "y"}, {"u", "v"}},
                         {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}, {{1, 1}, {1, 1}}}),
               GameError);
  EXPECT_THROW(make_bimatrix({"T", "T"}, {"L", "R"}, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}}), GameError);
  EXPECT_THROW(make_bimatrix({"T", "B"}, {"L", "R"}, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}}, {"P", "P"}), GameError);
  EXPECT_THROW(make_game({"A", "B"}, {{"x"}, {"u", "v"}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 1}}}), GameError);
}

TEST(MakeGame, ThreePlayerTable) {
  std::vector<PayoffEntry> entries;
  for (std::size_t i = 0; i < 8; ++i) {
    entries.push_back({{i >> 2, (i >> 1) & 1, i & 1}, {Rational(i), Rational(1), Rational(i, 2)}});
  }
  const auto g = make_game({"A", "B", "C"}, {{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}}, entries);
  EXPECT_EQ(g.num_players(), 3u);
  EXPECT_EQ(g.num_profiles(), 8u);
  EXPECT_EQ(payoff(g, {1, 1, 1}, 2), Rational(7, 2));
}

TEST(Payoff, OutOfRange) {
  const auto g = concord_game();
  EXPECT_THROW(payoff(g, {0, 0}, 2), std::out_of_range);
  EXPECT_THROW(payoff(g, {0, 2}, 0), std::out_of_range);
  EXPECT_THROW(payoff(g, {0}, 0), std::out_of_range);
}

TEST(BestResponses, StrictAndTied) {
  const auto concord = concord_game();
  auto br = best_responses(concord, 1, {1, 0});
  EXPECT_EQ(br.strategies, std::vector<std::size_t>{1});
  EXPECT_TRUE(br.strict);

  const auto asym = asym_concord_game();
  br = best_responses(asym, 1, {0, 0});
  EXPECT_EQ(br.strategies, std::vector<std::size_t>{0});
  EXPECT_TRUE(br.strict);

  const auto tied = make_bimatrix({"T", "B"}, {"L", "R"}, {{{1, 3}, {2, 3}}, {{0, 0}, {0, 1}}});
  br = best_responses(tied, 1, {0, 0});
  EXPECT_EQ(br.strategies, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(br.strict);
}

TEST(PureNash, Enumeration) {
  EXPECT_EQ(pure_nash_equilibria(concord_game()), (std::vector<Profile>{{1, 1}}));
  EXPECT_TRUE(pure_nash_equilibria(matching_pennies_ordinal()).empty());
  EXPECT_EQ(pure_nash_equilibria(coordination_game()).size(), 2u);
}

TEST(PureNash, TieStillCountsAsEquilibrium) {
  const auto g = make_bimatrix({"T", "B"}, {"L", "R"}, {{{1, 1}, {1, 1}}, {{0, 0}, {0, 0}}});
  EXPECT_EQ(pure_nash_equilibria(g), (std::vector<Profile>{{0, 0}, {0, 1}}));
}

TEST(UniquePureNash, PresentOnlyWhenSingleton) {
  EXPECT_EQ(unique_pure_nash(concord_game()), Profile({1, 1}));
  EXPECT_FALSE(unique_pure_nash(coordination_game()).has_value());
  const auto decline = make_bimatrix({"T", "B"}, {"L", "R"}, {{{4, 7}, {8, 6}}, {{6, 11}, {10, 10}}});
  EXPECT_EQ(unique_pure_nash(decline), Profile({1, 0}));
}

TEST(DominantStrategy, Cases) {
  EXPECT_EQ(dominant_strategy(concord_game(), 0), std::optional<std::size_t>(1));
  EXPECT_FALSE(dominant_strategy(asym_concord_game(), 1).has_value());
  const auto tie = make_bimatrix({"T", "B"}, {"L", "R"}, {{{1, 0}, {2, 0}}, {{1, 0}, {0, 0}}});
  EXPECT_FALSE(dominant_strategy(tie, 0).has_value());
}

TEST(GameProperties, EquilibriaSurviveDeviationsAndShifts) {
  for (std::size_t raw = 0; raw < taxonomy::kRawGames; raw += 7) {
    const auto g = taxonomy::game_from_ranks(taxonomy::ranks_for_raw_id(raw));
    const auto eqs = pure_nash_equilibria(g);
    for (const auto& eq : eqs) {
      for (std::size_t p = 0; p < 2; ++p) {
        Profile dev = eq;
        for (std::size_t s = 0; s < 2; ++s) {
          dev[p] = s;
          EXPECT_GE(g.payoff(eq, p), g.payoff(dev, p));
        }
      }
    }
    EXPECT_EQ(unique_pure_nash(g).has_value(), eqs.size() == 1);
    for (std::size_t p = 0; p < 2; ++p) {
      const auto shifted = g.transform_payoffs(p, [](const Profile&, const Rational& u) { return u + Rational(17, 3); });
      EXPECT_EQ(pure_nash_equilibria(shifted), eqs);
      for (const auto& profile : g.profiles()) {
        const auto br = best_responses(g, p, profile);
        EXPECT_FALSE(br.strategies.empty());
        EXPECT_EQ(br.strict, br.strategies.size() == 1);
      }
    }
  }
}

// Every strict-ordinal 2x2 game: a unique pure equilibrium exactly when someone has a dominant strategy.
TEST(GameProperties, UniqueEquilibriumIffSomeDominantStrategy) {
  for (std::size_t raw = 0; raw < taxonomy::kRawGames; ++raw) {
    const auto g = taxonomy::game_from_ranks(taxonomy::ranks_for_raw_id(raw));
    const bool dominant = dominant_strategy(g, 0) || dominant_strategy(g, 1);
    EXPECT_EQ(pure_nash_equilibria(g).size() == 1, dominant) << "raw " << raw;
  }
}

}  // namespace
}  // namespace extortion
