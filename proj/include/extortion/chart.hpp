// CSV and SVG renderings of a taxonomy scan, one entry per canonical class.
// Border legend: red = row player susceptible, blue = column, black = both.

#pragma once

#include "extortion/taxonomy.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace extortion::taxonomy {

enum class ChartFormat { CSV, SVG };

inline PlayerFlags scheme_flags(Scheme scheme, const OrdinalGameRecord& rec) {
  switch (scheme) {
    case Scheme::TwoPlayer: return rec.two_player;
    case Scheme::OnePlayer: return rec.one_player;
    case Scheme::Internal: return rec.internal;
  }
  return {};
}

inline std::string border_color(const PlayerFlags& f) {
  if (f.row && f.col) return "black";
  if (f.row) return "red";
  if (f.col) return "blue";
  return "none";
}

/// One representative per canonical class, ordered by canonical id: the
/// record whose ranks equal the class's canonical form.
inline std::vector<const OrdinalGameRecord*> class_representatives(const std::vector<OrdinalGameRecord>& records) {
  std::map<std::size_t, const OrdinalGameRecord*> reps;
  for (const auto& rec : records) {
    if (rec.ranks == rec.canonical_ranks) reps.emplace(rec.canonical_id, &rec);
  }
  std::vector<const OrdinalGameRecord*> out;
  out.reserve(reps.size());
  for (const auto& [id, rec] : reps) out.push_back(rec);
  return out;
}

inline std::string export_csv(const ScanSummary& summary, const std::vector<OrdinalGameRecord>& records) {
  std::ostringstream out;
  out << "canonical_id,row_TL,row_TR,row_BL,row_BR,col_TL,col_TR,col_BL,col_BR,"
         "dominant_row,dominant_col,ne_count,row_best_at_ne,col_best_at_ne,"
         "two_player_row,two_player_col,one_player_row,one_player_col,internal_row,internal_col,border\n";
  for (const auto* rec : class_representatives(records)) {
    out << rec->canonical_id;
    for (int rank : rec->canonical_ranks) out << ',' << rank;
    const auto& f = rec->flags;
    out << ',' << f.dominant_row << ',' << f.dominant_col << ',' << f.ne_count << ',' << f.row_best_at_ne << ','
        << f.col_best_at_ne << ',' << rec->two_player.row << ',' << rec->two_player.col << ','
        << rec->one_player.row << ',' << rec->one_player.col << ',' << rec->internal.row << ','
        << rec->internal.col << ',' << border_color(scheme_flags(summary.scheme, *rec)) << '\n';
  }
  return out.str();
}

inline std::string export_svg(const ScanSummary& summary, const std::vector<OrdinalGameRecord>& records) {
  constexpr int kCell = 60;
  constexpr int kMargin = 20;
  constexpr int kColumns = 12;
  const int side = kColumns * kCell + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side + 30
      << "\" viewBox=\"0 0 " << side << ' ' << side + 30 << "\">\n"
      << "<title>2x2 ordinal games susceptible to the " << to_string(summary.scheme) << " scheme: "
      << headline(summary.susceptible) << "</title>\n";
  std::size_t index = 0;
  for (const auto* rec : class_representatives(records)) {
    const int x = kMargin + static_cast<int>(index % kColumns) * kCell;
    const int y = kMargin + static_cast<int>(index / kColumns) * kCell;
    const auto color = border_color(scheme_flags(summary.scheme, *rec));
    const bool marked = color != "none";
    out << "<g class=\"game\" data-canonical-id=\"" << rec->canonical_id << "\">"
        << "<rect x=\"" << x + 2 << "\" y=\"" << y + 2 << "\" width=\"" << kCell - 4 << "\" height=\"" << kCell - 4
        << "\" fill=\"" << (rec->flags.ne_count == 1 ? "#ffffff" : "#dddddd") << "\" stroke=\""
        << (marked ? color : "#999999") << "\" stroke-width=\"" << (marked ? 4 : 1) << "\"/>";
    const auto& r = rec->canonical_ranks;
    for (std::size_t row = 0; row < 2; ++row) {
      for (std::size_t col = 0; col < 2; ++col) {
        out << "<text x=\"" << x + 10 + static_cast<int>(col) * 24 << "\" y=\"" << y + 25 + static_cast<int>(row) * 20
            << "\" font-size=\"11\" font-family=\"monospace\">" << rank_at(r, 0, row, col) << ','
            << rank_at(r, 1, row, col) << "</text>";
      }
    }
    out << "</g>\n";
    ++index;
  }
  out << "<text x=\"" << kMargin << "\" y=\"" << side + 15 << "\" font-size=\"14\">susceptible "
      << headline(summary.susceptible) << "; excluded " << headline(summary.excluded) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

inline std::string export_chart(const ScanSummary& summary, const std::vector<OrdinalGameRecord>& records,
                                 ChartFormat format) {
  return format == ChartFormat::CSV ? export_csv(summary, records) : export_svg(summary, records);
}

inline void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace extortion::taxonomy
