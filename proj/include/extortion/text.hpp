// Human-readable summaries printed by the command-line tool.

#pragma once

#include "extortion/engine.hpp"
#include "extortion/taxonomy.hpp"

#include <sstream>
#include <string>

namespace extortion::text {

inline std::string profile_names(const std::vector<std::vector<std::string>>& strategies, const Profile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += strategies.at(i).at(p[i]);
  }
  return out + ")";
}

inline std::string bound(const Bound& b) {
  return (b.side == Bound::Side::Upper ? "< " : "> ") + to_string(b.value) + " (exclusive)";
}

inline void print_diagnostics(std::ostream& out, const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    out << "  [" << (d.passed ? "pass" : "FAIL") << "] " << d.condition << ": " << d.detail << '\n';
  }
}

inline std::string summary(const ExtortionReport& r) {
  const auto& S = r.strategy_names;
  std::ostringstream out;
  out << "scenario: " << to_string(r.roles.scenario) << "; extorted " << r.player_names.at(r.roles.extorted)
      << ", recipient " << r.player_names.at(r.roles.recipient);
  if (r.roles.extortioner) out << ", extortioner " << r.player_names.at(*r.roles.extortioner);
  out << "\nthreat: \"" << r.threat_sentence << "\"\n";
  out << "base equilibrium: " << profile_names(S, r.base_equilibrium) << '\n';
  out << "accept equilibrium: " << (r.accept_equilibrium ? profile_names(S, *r.accept_equilibrium) : "none") << '\n';
  out << "decline equilibrium: " << (r.decline_equilibrium ? profile_names(S, *r.decline_equilibrium) : "none") << '\n';
  out << "c1_max " << bound(r.c1_max) << '\n';
  if (r.c1_min) out << "c1_min " << bound(*r.c1_min) << '\n';
  out << "c2_min " << bound(r.c2_min) << '\n';
  if (r.c2_max) out << "c2_max " << bound(*r.c2_max) << '\n';
  if (r.worthwhile) {
    out << "extortioner payoff: accept " << to_string(*r.extortioner_accept_payoff) << " vs decline "
        << to_string(*r.extortioner_decline_payoff) << " -> worthwhile " << (*r.worthwhile ? "yes" : "no") << '\n';
  }
  out << "decision: " << to_string(r.decision) << " (success " << (r.success ? "true" : "false") << ", feasible "
      << (r.feasible ? "true" : "false") << ")\n";
  print_diagnostics(out, r.diagnostics);
  return out.str();
}

inline std::string summary(const BoundsReport& r) {
  const auto& S = r.strategy_names;
  std::ostringstream out;
  out << "scenario: " << to_string(r.roles.scenario) << "; extorted " << r.player_names.at(r.roles.extorted)
      << ", recipient " << r.player_names.at(r.roles.recipient) << ", target " << S.at(r.roles.recipient).at(r.target)
      << '\n';
  out << "base equilibrium " << profile_names(S, r.base_equilibrium) << " -> decline equilibrium "
      << profile_names(S, r.decline_equilibrium) << '\n';
  out << "c1_max " << bound(r.c1_max) << '\n';
  if (r.c1_min) out << "c1_min " << bound(*r.c1_min) << '\n';
  out << "c2_min " << bound(r.c2_min) << '\n';
  if (r.c2_max) out << "c2_max " << bound(*r.c2_max) << '\n';
  out << (r.feasible ? "feasible" : "infeasible");
  if (r.failed_condition) out << " (failed: " << *r.failed_condition << ")";
  out << '\n';
  print_diagnostics(out, r.diagnostics);
  return out.str();
}

inline std::string summary(const taxonomy::ScanSummary& s) {
  std::ostringstream out;
  out << "scheme: " << taxonomy::to_string(s.scheme) << '\n'
      << "excluded (no unique pure equilibrium): " << taxonomy::headline(s.excluded) << '\n'
      << "susceptible: " << taxonomy::headline(s.susceptible) << '\n'
      << "  row only: " << taxonomy::headline(s.row_only) << '\n'
      << "  column only: " << taxonomy::headline(s.column_only) << '\n'
      << "  both: " << taxonomy::headline(s.both) << '\n';
  if (s.scheme == taxonomy::Scheme::Internal) {
    out << "extortioner worse off on decline: " << taxonomy::headline(s.extortioner_risk) << '\n';
  }
  return out.str();
}

}  // namespace extortion::text
