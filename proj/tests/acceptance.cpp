// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "extortion/demos.hpp"
#include "extortion/taxonomy.hpp"
#include "properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using namespace extortion;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string profile_names(const ExtortionReport& r, const std::optional<Profile>& p) {
  if (!p) return "none";
  return "(" + r.strategy_names[0][(*p)[0]] + "," + r.strategy_names[1][(*p)[1]] + ")";
}

Outcome demo(const char* name, double budget) {
  const auto start = Clock::now();
  try {
    const auto r = demos::run_demo(name);
    const double t = seconds_since(start);
    std::string detail = std::string(to_string(r.decision)) + ", c1_max " + to_string(r.c1_max.value) + ", c2_min " +
                         to_string(r.c2_min.value) + ", decline NE " + profile_names(r, r.decline_equilibrium);
    if (r.c2_max) detail += ", c2_max " + to_string(r.c2_max->value);
    if (r.c1_min) detail += ", c1_min " + to_string(r.c1_min->value);
    if (r.extortioner_accept_payoff) {
      detail += ", extortioner " + to_string(*r.extortioner_accept_payoff) + " vs " +
                to_string(*r.extortioner_decline_payoff);
    }
    detail += ", " + std::to_string(t) + " s";
    return {t < budget, detail};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

Outcome population() {
  const auto start = Clock::now();
  auto records = taxonomy::enumerate_ordinal_games();
  const auto two = taxonomy::scan_two_player(records);
  const auto one = taxonomy::scan_one_player(records);
  const auto internal = taxonomy::scan_one_player_internal(records);
  const double t = seconds_since(start);
  const bool counts = two.excluded == taxonomy::Count{144, 36} && one.excluded == two.excluded &&
                      two.susceptible == taxonomy::Count{324, 81} && one.susceptible == taxonomy::Count{96, 24};
  bool fractions = true;
  for (const auto* s : {&two, &one, &internal}) {
    fractions = fractions && s->susceptible.raw_fraction() == s->susceptible.canonical_fraction() &&
                s->excluded.raw_fraction() == s->excluded.canonical_fraction();
  }
  return {counts && fractions && t < 5.0,
          "excluded " + taxonomy::headline(two.excluded) + ", two-player " + taxonomy::headline(two.susceptible) +
              ", one-player " + taxonomy::headline(one.susceptible) + ", " + std::to_string(t) + " s"};
}

Outcome property(const properties::Check& c) {
  std::string detail = std::to_string(c.cases) + " cases";
  if (!c.failures.empty()) detail += ", first failure: " + c.failures.front();
  return {c.ok(), detail};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 concord example", [] { return demo("concord", 1.0); }},
      {"2 one-player external example", [] { return demo("asym-concord", 1.0); }},
      {"3 one-player internal example", [] { return demo("internal", 1.0); }},
      {"4 population figures", population},
      {"5 affine invariance", [] { return property(properties::affine_invariance()); }},
      {"6 equilibrium creation and uniqueness", [] { return property(properties::theorem_two_soundness()); }},
      {"7 backward-induction oracle equivalence", [] { return property(properties::spe_oracle_equivalence()); }},
      {"8 characterization equivalences", [] { return property(properties::characterization()); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
