// Catalog assembly over a finished enumeration: one witness mosaic per knot,
// and the comparison document against the reference tile-number lists.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kmos/render.hpp"
#include "kmos/report.hpp"

namespace kmos {

struct CatalogEntry {
  std::string name;
  Mosaic witness;
  int tile_count = 0;
  int crossing_tiles = 0;
  bool extra_crossings = false;  // more crossing tiles than the crossing number
};

inline std::pair<int, long> name_sort_key(const std::string& name) {
  int crossings = crossings_from_name(name);
  std::size_t i = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  int family = 0;  // '_' < 'a' < 'n'
  if (i < name.size() && name[i] == 'a') family = 1;
  if (i < name.size() && name[i] == 'n') family = 2;
  long index = std::atol(name.substr(i + 1).c_str());
  return {crossings, family * 1000000L + index};
}

inline std::vector<CatalogEntry> build_catalog(const EnumerationReport& report) {
  std::vector<CatalogEntry> entries;
  for (const auto& [name, finding] : report.knots) {
    CatalogEntry e;
    e.name = name;
    e.witness = parse_mosaic(finding.witness_text);
    e.tile_count = finding.min_tile;
    e.crossing_tiles = finding.min_crossings;
    e.extra_crossings = finding.min_crossings > crossings_from_name(name);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return name_sort_key(a.name) < name_sort_key(b.name);
  });
  return entries;
}

inline std::string catalog_document(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  out << "# minimally space-efficient 6x6 witness per knot\n";
  out << "# '*' marks witnesses using more crossing tiles than the knot's crossing number\n\n";
  for (const auto& e : entries) {
    out << e.name << (e.extra_crossings ? " *" : "") << "  (tile number " << e.tile_count << ", "
        << e.crossing_tiles << " crossing tiles)\n";
    out << render_text(e.witness) << '\n';
  }
  return out.str();
}

// --- reference lists and the comparison document ---------------------------

// rows name,tile; '#' comments
inline std::map<std::string, int> load_expected_tiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open expected tile list: " + path);
  std::map<std::string, int> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw parse_error("bad expected-tile row: " + line);
    std::string name = line.substr(0, comma);
    out[name] = std::stoi(line.substr(comma + 1));
  }
  return out;
}

struct TheoremDiff {
  int tile = 0;
  std::vector<std::string> expected;
  std::vector<std::string> computed;
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  bool clean() const { return missing.empty() && extra.empty(); }
};

struct TheoremComparison {
  std::vector<TheoremDiff> diffs;         // tiles 22, 24, 27, 32
  std::vector<std::string> never_found;   // table knots never produced: mosaic number > 6
  std::vector<std::string> small_reappearances;  // knots below 22 seen on the layouts (expected)
  std::vector<std::pair<std::vector<std::string>, std::string>> ambiguous;
  std::vector<std::vector<std::string>> collisions;
  bool all_clean() const {
    for (const auto& d : diffs)
      if (!d.clean()) return false;
    return true;
  }

  // a missing name is accounted when it appears in an explicit tie
  bool clean_up_to_ties() const {
    std::set<std::string> tied;
    for (const auto& [names, w] : ambiguous)
      for (const auto& n : names) tied.insert(n);
    for (const auto& d : diffs) {
      if (!d.extra.empty()) return false;
      for (const auto& n : d.missing)
        if (!tied.count(n)) return false;
    }
    return true;
  }
};

inline TheoremComparison compare_with_expected(const EnumerationReport& report,
                                               const std::map<std::string, int>& expected,
                                               const std::vector<std::string>& table_names = {}) {
  TheoremComparison out;
  for (int tile : {22, 24, 27, 32}) {
    TheoremDiff d;
    d.tile = tile;
    for (const auto& [name, exp_tile] : expected)
      if (exp_tile == tile) d.expected.push_back(name);
    for (const auto& [name, finding] : report.knots) {
      if (finding.min_tile != tile) continue;
      auto it = expected.find(name);
      if (it != expected.end() && it->second < 22) continue;  // known smaller knots reappear
      d.computed.push_back(name);
    }
    std::sort(d.expected.begin(), d.expected.end());
    std::sort(d.computed.begin(), d.computed.end());
    std::set_difference(d.expected.begin(), d.expected.end(), d.computed.begin(),
                        d.computed.end(), std::back_inserter(d.missing));
    std::set_difference(d.computed.begin(), d.computed.end(), d.expected.begin(),
                        d.expected.end(), std::back_inserter(d.extra));
    out.diffs.push_back(std::move(d));
  }
  // the corollary: table knots outside every list and never produced must
  // have mosaic number 7 or higher
  std::set<std::string> tied;
  for (const auto& cell : report.cells)
    for (const auto& [names, w] : cell.ambiguous)
      for (const auto& n : names) tied.insert(n);
  for (const auto& name : table_names) {
    if (report.knots.count(name) || tied.count(name)) continue;
    if (expected.count(name)) continue;  // listed knots are handled above
    out.never_found.push_back(name);
  }
  std::sort(out.never_found.begin(), out.never_found.end());
  // knots in the reference table but in no reference list are reported by the
  // caller (the index is needed for that); here we collect the reappearances
  for (const auto& [name, finding] : report.knots) {
    auto it = expected.find(name);
    if (it != expected.end() && it->second < 22) out.small_reappearances.push_back(name);
  }
  for (const auto& cell : report.cells)
    for (const auto& [names, witness] : cell.ambiguous) out.ambiguous.emplace_back(names, witness);
  out.collisions = report.table_collisions;
  return out;
}

inline std::string theorem_diff_document(const TheoremComparison& cmp) {
  std::ostringstream out;
  out << "tile-number list comparison\n";
  out << "===========================\n\n";
  for (const auto& d : cmp.diffs) {
    out << "tile number " << d.tile << ": expected " << d.expected.size() << ", computed "
        << d.computed.size() << (d.clean() ? "  [match]" : "  [MISMATCH]") << '\n';
    auto emit = [&](const char* label, const std::vector<std::string>& names) {
      out << "  " << label << ":";
      if (names.empty()) out << " (none)";
      for (const auto& n : names) out << ' ' << n;
      out << '\n';
    };
    emit("computed", d.computed);
    if (!d.missing.empty()) emit("missing", d.missing);
    if (!d.extra.empty()) emit("extra", d.extra);
    out << '\n';
  }
  out << "table knots outside every list and never produced (mosaic number 7 or higher):";
  if (cmp.never_found.empty()) out << " (none)";
  for (const auto& n : cmp.never_found) out << ' ' << n;
  out << "\n\nknots with smaller tile numbers reappearing on the layouts: ";
  if (cmp.small_reappearances.empty()) out << "(none)";
  for (const auto& n : cmp.small_reappearances) out << ' ' << n;
  out << '\n';
  if (!cmp.ambiguous.empty()) {
    out << "\nambiguous identifications (fingerprint ties, listed explicitly):\n";
    for (const auto& [names, witness] : cmp.ambiguous) {
      out << "  tie:";
      for (const auto& n : names) out << ' ' << n;
      out << '\n';
    }
  }
  if (!cmp.collisions.empty()) {
    out << "\nreference-table fingerprint collisions:\n";
    for (const auto& group : cmp.collisions) {
      out << "  ";
      for (const auto& n : group) out << n << ' ';
      out << '\n';
    }
  }
  out << '\n';
  if (cmp.all_clean())
    out << "RESULT: all lists match\n";
  else if (cmp.clean_up_to_ties())
    out << "RESULT: lists match up to the fingerprint ties listed above\n";
  else
    out << "RESULT: mismatches present\n";
  return out.str();
}

inline void write_catalog_files(const std::vector<CatalogEntry>& entries,
                                const std::string& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(outdir) / "svg");
  std::ofstream doc(fs::path(outdir) / "catalog.txt");
  doc << catalog_document(entries);
  for (const auto& e : entries) {
    std::ofstream svg(fs::path(outdir) / "svg" / (e.name + ".svg"));
    svg << render_svg(e.witness);
  }
}

}  // namespace kmos
