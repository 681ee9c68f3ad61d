// Full enumeration runs: per-layout sweeps aggregated into a report with
// per-knot minima and witness mosaics, plus serialization to disk.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmos/enumerate.hpp"

namespace kmos {

struct RunOptions {
  // masks run in the order given; crossing counts ascending within a mask
  std::map<std::string, std::pair<int, int>> ranges;  // mask id -> [lo, hi]
  bool prune = true;
  int threads = 1;
};

struct CellStats {
  std::string mask_id;
  int tile_count = 0;
  int c = 0;
  GenCounters counts;
  long long placements = 0;
  long long assignments = 0;
  std::set<std::string> knots;
  std::set<std::string> alternating_knots;
  std::map<std::vector<std::string>, std::string> ambiguous;
  long long unknown_assignments = 0;
  long long unknown_classes = 0;
  std::map<std::string, std::pair<long long, std::string>> unknown;  // fp key -> count, sample
};

struct KnotFinding {
  std::string name;
  int min_tile = 0;
  int min_crossings = 0;  // at min_tile
  std::string witness_text;
  bool witness_alternating = false;
};

struct EnumerationReport {
  std::vector<CellStats> cells;
  std::map<std::string, KnotFinding> knots;
  std::vector<std::vector<std::string>> table_collisions;
  bool pruned = true;
};

inline EnumerationReport run_enumeration(const std::vector<LayoutMask>& masks,
                                         const RunOptions& opts, const KnotIndex& index) {
  EnumerationReport report;
  report.pruned = opts.prune;
  report.table_collisions = index.collisions();

  for (const LayoutMask& mask : masks) {
    auto it = opts.ranges.find(mask.id);
    if (it == opts.ranges.end()) continue;
    auto [lo, hi] = it->second;
    hi = std::min(hi, mask.four_count());
    for (int c = lo; c <= hi; ++c) {
      CellStats cell;
      cell.mask_id = mask.id;
      cell.tile_count = mask.tile_count;
      cell.c = c;
      std::vector<Placement> placements =
          generate_placements(mask, c, opts.prune, &cell.counts, opts.threads);
      cell.placements = static_cast<long long>(placements.size());

      std::vector<SweepResult> results(placements.size());
      auto work = [&](std::size_t i) { results[i] = sweep_assignments(placements[i], index); };
      if (opts.threads <= 1 || placements.size() < 2) {
        for (std::size_t i = 0; i < placements.size(); ++i) work(i);
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t)
          pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < placements.size(); i = next.fetch_add(1))
              work(i);
          });
        for (auto& th : pool) th.join();
      }

      // deterministic merge in placement order
      for (const SweepResult& r : results) {
        cell.assignments += r.assignments;
        for (const auto& [name, info] : r.found) {
          cell.knots.insert(name);
          auto& finding = report.knots[name];
          bool better = finding.name.empty();
          if (!better) {
            auto old_key = std::make_tuple(finding.min_tile, finding.min_crossings,
                                           finding.witness_text);
            auto new_key = std::make_tuple(mask.tile_count, info.crossings, info.mosaic_text);
            better = new_key < old_key;
          }
          if (better) {
            finding.name = name;
            finding.min_tile = mask.tile_count;
            finding.min_crossings = info.crossings;
            finding.witness_text = info.mosaic_text;
            finding.witness_alternating = info.alternating;
          }
        }
        for (const auto& name : r.alternating_names) cell.alternating_knots.insert(name);
        for (const auto& [names, witness] : r.ambiguous) {
          auto it2 = cell.ambiguous.find(names);
          if (it2 == cell.ambiguous.end() || witness < it2->second) cell.ambiguous[names] = witness;
        }
        for (const auto& [key, info] : r.unknown) {
          auto& slot = cell.unknown[key];
          if (slot.first == 0 || info.second < slot.second) slot.second = info.second;
          slot.first += info.first;
        }
      }
      for (const auto& [key, info] : cell.unknown) cell.unknown_assignments += info.first;
      cell.unknown_classes = static_cast<long long>(cell.unknown.size());
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

// Pruned and unpruned searches must identify the same knots; the unpruned
// search is the oracle that validates the observation-based pruning.
inline bool cross_check_pruning(const LayoutMask& mask, int c, const KnotIndex& index,
                                int threads = 1) {
  RunOptions opts;
  opts.ranges[mask.id] = {c, c};
  opts.threads = threads;
  opts.prune = true;
  EnumerationReport pruned = run_enumeration({mask}, opts, index);
  opts.prune = false;
  EnumerationReport full = run_enumeration({mask}, opts, index);
  auto names = [](const EnumerationReport& r) {
    std::set<std::string> out;
    for (const auto& [name, f] : r.knots) out.insert(name);
    return out;
  };
  return names(pruned) == names(full);
}

// --- serialization -----------------------------------------------------------

inline nlohmann::json report_to_json(const EnumerationReport& report) {
  nlohmann::json j;
  j["pruned"] = report.pruned;
  j["cells"] = nlohmann::json::array();
  for (const auto& cell : report.cells) {
    nlohmann::json jc;
    jc["mask"] = cell.mask_id;
    jc["tile_number"] = cell.tile_count;
    jc["crossings"] = cell.c;
    jc["raw"] = cell.counts.raw;
    jc["obs_pass"] = cell.counts.obs_pass;
    jc["connected"] = cell.counts.connected;
    jc["unique"] = cell.counts.unique;
    jc["reduced"] = cell.counts.reduced;
    jc["placements"] = cell.placements;
    jc["assignments"] = cell.assignments;
    jc["knots"] = cell.knots;
    jc["alternating_knots"] = cell.alternating_knots;
    jc["unknown_assignments"] = cell.unknown_assignments;
    jc["unknown_classes"] = cell.unknown_classes;
    nlohmann::json amb = nlohmann::json::array();
    for (const auto& [names, witness] : cell.ambiguous) {
      nlohmann::json e;
      e["names"] = names;
      e["witness"] = witness;
      amb.push_back(e);
    }
    jc["ambiguous"] = amb;
    j["cells"].push_back(jc);
  }
  j["knots"] = nlohmann::json::array();
  for (const auto& [name, f] : report.knots) {
    nlohmann::json jk;
    jk["name"] = name;
    jk["min_tile"] = f.min_tile;
    jk["min_crossings"] = f.min_crossings;
    jk["witness"] = f.witness_text;
    jk["witness_alternating"] = f.witness_alternating;
    j["knots"].push_back(jk);
  }
  j["table_collisions"] = report.table_collisions;
  return j;
}

inline EnumerationReport report_from_json(const nlohmann::json& j) {
  EnumerationReport report;
  report.pruned = j.value("pruned", true);
  for (const auto& jc : j.at("cells")) {
    CellStats cell;
    cell.mask_id = jc.at("mask").get<std::string>();
    cell.tile_count = jc.at("tile_number").get<int>();
    cell.c = jc.at("crossings").get<int>();
    cell.counts.raw = jc.at("raw").get<long long>();
    cell.counts.obs_pass = jc.at("obs_pass").get<long long>();
    cell.counts.connected = jc.at("connected").get<long long>();
    cell.counts.unique = jc.at("unique").get<long long>();
    cell.counts.reduced = jc.at("reduced").get<long long>();
    cell.placements = jc.at("placements").get<long long>();
    cell.assignments = jc.at("assignments").get<long long>();
    for (const auto& s : jc.at("knots")) cell.knots.insert(s.get<std::string>());
    for (const auto& s : jc.at("alternating_knots"))
      cell.alternating_knots.insert(s.get<std::string>());
    cell.unknown_assignments = jc.at("unknown_assignments").get<long long>();
    cell.unknown_classes = jc.at("unknown_classes").get<long long>();
    for (const auto& e : jc.at("ambiguous")) {
      std::vector<std::string> names;
      for (const auto& s : e.at("names")) names.push_back(s.get<std::string>());
      cell.ambiguous[names] = e.at("witness").get<std::string>();
    }
    report.cells.push_back(std::move(cell));
  }
  for (const auto& jk : j.at("knots")) {
    KnotFinding f;
    f.name = jk.at("name").get<std::string>();
    f.min_tile = jk.at("min_tile").get<int>();
    f.min_crossings = jk.at("min_crossings").get<int>();
    f.witness_text = jk.at("witness").get<std::string>();
    f.witness_alternating = jk.at("witness_alternating").get<bool>();
    report.knots[f.name] = std::move(f);
  }
  for (const auto& g : j.at("table_collisions")) {
    std::vector<std::string> names;
    for (const auto& s : g) names.push_back(s.get<std::string>());
    report.table_collisions.push_back(std::move(names));
  }
  return report;
}

// Writes summary.json, report.txt, and one witness mosaic file per knot.
inline void write_report_files(const EnumerationReport& report, const std::string& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(outdir) / "witnesses");

  {
    std::ofstream out(fs::path(outdir) / "summary.json");
    out << report_to_json(report).dump(1) << '\n';
  }

  std::ofstream txt(fs::path(outdir) / "report.txt");
  txt << "# knot, minimal tile number, crossing tiles at that tile number, witness file\n";
  for (const auto& [name, f] : report.knots) {
    std::string file = "witnesses/" + name + ".txt";
    txt << name << ", " << f.min_tile << ", " << f.min_crossings << ", " << file << '\n';
    std::ofstream w(fs::path(outdir) / file);
    w << "# " << name << ": tile number " << f.min_tile << ", " << f.min_crossings
      << " crossing tiles\n";
    w << f.witness_text;
  }
  txt << "#\n# per-layout statistics\n";
  for (const auto& cell : report.cells) {
    txt << "# layout " << cell.mask_id << " c=" << cell.c << ": raw " << cell.counts.raw
        << ", pruned " << cell.counts.obs_pass << ", connected " << cell.counts.connected
        << ", unique " << cell.counts.unique << ", reduced " << cell.counts.reduced
        << ", assignments " << cell.assignments << ", unknown classes " << cell.unknown_classes
        << '\n';
  }
}

}  // namespace kmos
