// Bundled worked examples. Each demo runs end to end and checks the
// published numbers before returning; any mismatch is a hard error.

#pragma once

#include "extortion/engine.hpp"
#include "extortion/game.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extortion::demos {

class DemoMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric win-win game; both players have dominant strategies.
inline Game concord_game() {
  return make_bimatrix({"T", "B"}, {"L", "R"},
                       {{{4, 4}, {8, 6}},
                        {{6, 8}, {10, 10}}});
}

/// Column player's T-row payoffs swapped: the column player loses dominance.
inline Game asym_concord_game() {
  return make_bimatrix({"T", "B"}, {"L", "R"},
                       {{{4, 6}, {8, 4}},
                        {{6, 8}, {10, 10}}});
}

constexpr std::size_t kRow = 0;
constexpr std::size_t kColumn = 1;
constexpr std::size_t kTop = 0;
constexpr std::size_t kLeft = 0;

inline BindingThreat concord_threat() {
  return {{kRow, kColumn, std::nullopt, Scenario::TwoPlayerExternal}, kLeft, Rational(2), Rational(3)};
}

inline BindingThreat asym_concord_threat() {
  return {{kRow, kRow, std::nullopt, Scenario::OnePlayerExternal}, kTop, Rational(2), Rational(3)};
}

inline BindingThreat internal_threat() {
  return {{kRow, kRow, kColumn, Scenario::OnePlayerInternal}, kTop, Rational(2), Rational(3)};
}

inline const std::vector<std::string_view>& demo_names() {
  static const std::vector<std::string_view> names{"concord", "asym-concord", "internal"};
  return names;
}

namespace detail {

template <typename T>
void expect(const char* what, const T& actual, const T& expected) {
  if (!(actual == expected)) throw DemoMismatch(std::string("demo regression: ") + what);
}

inline void expect_bound(const char* what, const std::optional<Bound>& b, Bound::Side side, const Rational& value) {
  if (!b || b->side != side || b->value != value) throw DemoMismatch(std::string("demo regression: ") + what);
}

}  // namespace detail

inline ExtortionReport run_demo(std::string_view name) {
  using detail::expect;
  using detail::expect_bound;
  const auto upper = Bound::Side::Upper;
  const auto lower = Bound::Side::Lower;
  if (name == "concord") {
    const auto r = analyze(concord_game(), concord_threat());
    expect("decision", r.decision, Decision::Accept);
    expect_bound("c1_max", r.c1_max, upper, Rational(4));
    expect_bound("c2_min", r.c2_min, lower, Rational(2));
    expect("accept equilibrium", r.accept_equilibrium, std::optional<Profile>({1, 1}));
    expect("decline equilibrium", r.decline_equilibrium, std::optional<Profile>({1, 0}));
    return r;
  }
  if (name == "asym-concord") {
    const auto r = analyze(asym_concord_game(), asym_concord_threat());
    expect("decision", r.decision, Decision::Accept);
    expect_bound("c1_max", r.c1_max, upper, Rational(3));
    expect_bound("c2_min", r.c2_min, lower, Rational(2));
    expect_bound("c2_max", r.c2_max, upper, Rational(4));
    expect("decline equilibrium", r.decline_equilibrium, std::optional<Profile>({0, 0}));
    return r;
  }
  if (name == "internal") {
    const auto r = analyze(asym_concord_game(), internal_threat());
    expect("decision", r.decision, Decision::Accept);
    expect("worthwhile", r.worthwhile, std::optional<bool>(true));
    expect_bound("c1_min", r.c1_min, lower, Rational(0));
    expect_bound("c1_max", r.c1_max, upper, Rational(3));
    expect_bound("c2_min", r.c2_min, lower, Rational(2));
    expect_bound("c2_max", r.c2_max, upper, Rational(4));
    expect("extortioner accept payoff", r.extortioner_accept_payoff, std::optional<Rational>(12));
    expect("extortioner decline payoff", r.extortioner_decline_payoff, std::optional<Rational>(3));
    return r;
  }
  throw std::invalid_argument("unknown demo '" + std::string(name) + "'");
}

}  // namespace extortion::demos
