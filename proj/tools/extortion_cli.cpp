// extortion: command-line front end.
//
//   extortion analyze --game G --threat T [--out R]
//   extortion bounds --game G --scenario S --extorted P [--recipient P] [--extortioner P]
//                    [--target S] [--c1 p/q | --c2 p/q] [--out R]
//   extortion scan --scheme two-player|one-player|internal --csv F [--svg F] [--out R]
//   extortion demo concord|asym-concord|internal [--out R]
//
// Exit status is 0 whenever an analysis completes, whatever its verdict.

#include "extortion/chart.hpp"
#include "extortion/demos.hpp"
#include "extortion/engine.hpp"
#include "extortion/io.hpp"
#include "extortion/taxonomy.hpp"
#include "extortion/text.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <string_view>

namespace {

using namespace extortion;

void write_report(const std::string& path, const io::Json& doc) {
  if (path.empty()) return;
  taxonomy::write_text_file(path, io::dump(doc));
  std::cout << "report written to " << path << '\n';
}

int run_analyze(const std::string& game_path, const std::string& threat_path, const std::string& out) {
  const auto game = io::parse_game(game_path);
  const auto parsed = io::parse_threat(threat_path, game);
  if (!parsed.fee || !parsed.payment) throw ExtortionError("threat", "analyze needs both c1 and c2 in the threat file");
  const auto report = analyze(game, BindingThreat{parsed.roles, parsed.target, *parsed.fee, *parsed.payment});
  std::cout << text::summary(report);
  write_report(out, io::report_to_json(report));
  return 0;
}

struct BoundsArgs {
  std::string game, scenario, extorted, recipient, extortioner, target, c1, c2, out;
};

int run_bounds(const BoundsArgs& a) {
  const auto game = io::parse_game(a.game);
  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  const auto roles = io::make_roles(game, parse_scenario(a.scenario), a.extorted, opt(a.recipient), opt(a.extortioner));
  std::optional<std::size_t> target;
  if (!a.target.empty()) target = io::strategy_by_name(game, roles.recipient, a.target);
  std::optional<Rational> c1, c2;
  if (!a.c1.empty()) c1 = parse_rational(a.c1);
  if (!a.c2.empty()) c2 = parse_rational(a.c2);
  const auto report = compute_bounds(game, roles, target, c1, c2);
  std::cout << text::summary(report);
  write_report(a.out, io::bounds_to_json(report));
  return 0;
}

int run_scan(const std::string& scheme_name, const std::string& csv, const std::string& svg, const std::string& out) {
  const auto scheme = taxonomy::parse_scheme(scheme_name);
  auto records = taxonomy::enumerate_ordinal_games();
  // Every scheme is run so the CSV carries all susceptibility columns.
  const auto two = taxonomy::scan_two_player(records);
  const auto one = taxonomy::scan_one_player(records);
  const auto internal = taxonomy::scan_one_player_internal(records);
  const auto& summary = scheme == taxonomy::Scheme::TwoPlayer ? two : scheme == taxonomy::Scheme::OnePlayer ? one : internal;
  taxonomy::write_text_file(csv, taxonomy::export_csv(summary, records));
  if (!svg.empty()) taxonomy::write_text_file(svg, taxonomy::export_svg(summary, records));
  std::cout << text::summary(summary);
  std::cout << "excluded " << taxonomy::headline(summary.excluded) << '\n';
  std::cout << "susceptible " << taxonomy::headline(summary.susceptible) << '\n';
  write_report(out, io::summary_to_json(summary));
  return 0;
}

int run_demo(const std::string& name, const std::string& out) {
  const auto report = demos::run_demo(name);
  std::cout << "demo " << name << ": published values reproduced\n" << text::summary(report);
  write_report(out, io::report_to_json(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-coercive extortion analysis for finite normal-form games"};
  app.require_subcommand(1);

  std::string game, threat, out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide a concrete threat and report all bounds");
  analyze_cmd->add_option("--game", game, "Game file (JSON)")->required();
  analyze_cmd->add_option("--threat", threat, "Threat file (JSON)")->required();
  analyze_cmd->add_option("--out", out, "Write the JSON report here");

  BoundsArgs b;
  auto* bounds_cmd = app.add_subcommand("bounds", "Fee and payment bounds for a role assignment");
  bounds_cmd->add_option("--game", b.game, "Game file (JSON)")->required();
  bounds_cmd->add_option("--scenario", b.scenario, "two-player-external | one-player-external | one-player-internal")
      ->required();
  bounds_cmd->add_option("--extorted", b.extorted, "Extorted player name")->required();
  bounds_cmd->add_option("--recipient", b.recipient, "Payment recipient name");
  bounds_cmd->add_option("--extortioner", b.extortioner, "Extortioner player (internal scenario)");
  bounds_cmd->add_option("--target", b.target, "Target strategy of the recipient");
  auto* c1_opt = bounds_cmd->add_option("--c1", b.c1, "Fixed fee, p/q");
  auto* c2_opt = bounds_cmd->add_option("--c2", b.c2, "Fixed payment, p/q");
  c1_opt->excludes(c2_opt);
  bounds_cmd->add_option("--out", b.out, "Write the JSON report here");

  std::string scheme, csv, svg;
  auto* scan_cmd = app.add_subcommand("scan", "Classify all strict-ordinal 2x2 games");
  scan_cmd->add_option("--scheme", scheme, "two-player | one-player | internal")->required();
  scan_cmd->add_option("--csv", csv, "CSV chart output")->required();
  scan_cmd->add_option("--svg", svg, "SVG chart output");
  scan_cmd->add_option("--out", out, "Write the JSON summary here");

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Run a bundled worked example");
  demo_cmd->add_option("name", demo_name, "concord | asym-concord | internal")->required();
  demo_cmd->add_option("--out", out, "Write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(game, threat, out);
    if (*bounds_cmd) return run_bounds(b);
    if (*scan_cmd) return run_scan(scheme, csv, svg, out);
    if (*demo_cmd) return run_demo(demo_name, out);
  } catch (const ExtortionError& e) {
    std::cerr << "error [" << e.condition() << "]: " << std::string_view(e.what()).substr(e.condition().size() + 2) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
