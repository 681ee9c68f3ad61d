// Acceptance suite: reproduces the four tile-number lists and the supporting
// properties end to end, printing one PASS/FAIL line per criterion.
//
// Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "kmos/catalog.hpp"
#include "kmos/report.hpp"

using namespace kmos;

namespace {

int failures = 0;

void report_line(int number, const std::string& what, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string root;  // source tree

std::set<std::string> names_at_tile(const EnumerationReport& r, int tile) {
  std::set<std::string> out;
  for (const auto& [name, f] : r.knots)
    if (f.min_tile == tile) out.insert(name);
  return out;
}

std::set<std::string> tie_names(const EnumerationReport& r, const std::string& mask_id, int c) {
  std::set<std::string> out;
  for (const auto& cell : r.cells) {
    if (cell.mask_id != mask_id && !mask_id.empty()) continue;
    if (c >= 0 && cell.c != c) continue;
    for (const auto& [names, w] : cell.ambiguous)
      for (const auto& n : names) out.insert(n);
  }
  return out;
}

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  root = (argc > 1) ? argv[1] : ".";
  int threads = 1;

  KnotIndex index = KnotIndex::load(root + "/data/knot_table.csv");
  std::vector<LayoutMask> masks;
  for (const char* id : {"22a", "22b", "24", "27", "32"})
    masks.push_back(load_layout_mask_file(root + "/data/masks/mask_" + id + ".txt"));
  auto expected = load_expected_tiles(root + "/data/expected_tile_numbers.csv");

  auto subset = [&](int tile) {
    std::set<std::string> out;
    for (const auto& [n, t] : expected)
      if (t == tile) out.insert(n);
    return out;
  };

  auto start = std::chrono::steady_clock::now();
  RunOptions opts;
  opts.threads = threads;
  opts.ranges["22a"] = {4, 10};
  opts.ranges["22b"] = {4, 10};
  opts.ranges["24"] = {4, 12};
  opts.ranges["27"] = {8, 13};
  opts.ranges["32"] = {9, 13};
  EnumerationReport report = run_enumeration(masks, opts, index);
  double minutes = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60.0;
  std::printf("full enumeration: %.1f minutes, %zu knots identified\n", minutes,
              report.knots.size());

  // ---- criterion 1: the 22-tile lists ----
  {
    std::set<std::string> big;  // knots with >= 8 crossings found at tile 22
    for (const auto& n : names_at_tile(report, 22))
      if (crossings_from_name(n) >= 8) big.insert(n);
    std::set<std::string> want = {"8_1", "8_2", "8_3", "8_4",  "8_7",
                                  "8_8", "8_9", "8_13", "9_5", "9_20"};
    bool pass = big == want;
    bool sevens = report.knots.count("7_3") && report.knots.at("7_3").min_crossings == 8;
    // 7_3 must never appear with seven crossing tiles on the 22-tile layouts
    bool no_seven = true;
    for (const auto& cell : report.cells)
      if (cell.tile_count == 22 && cell.c == 7 && cell.knots.count("7_3")) no_seven = false;
    report_line(1, "tile number 22: >=8-crossing knots and the 7_3 crossing bound",
                pass && sevens && no_seven,
                pass ? "" : "got {" + join(big) + "}");
  }

  // ---- criterion 2: the 24-tile list ----
  {
    auto got = names_at_tile(report, 24);
    auto want = subset(24);
    bool pass = got == want;
    auto need = [&](const char* n, int c) {
      return report.knots.count(n) && report.knots.at(n).min_tile == 24 &&
             report.knots.at(n).min_crossings == c;
    };
    bool minc = need("8_6", 9) && need("9_12", 10) && need("9_19", 10) && need("9_21", 10) &&
                need("9_26", 10);
    report_line(2, "tile number 24: all 37 knots with crossing-tile minima", pass && minc,
                pass ? "" : "diff vs expected");
  }

  // ---- criterion 3: the 27-tile list and alternating spot checks ----
  {
    auto got = names_at_tile(report, 27);
    auto want = subset(27);
    bool pass = got == want;
    std::set<std::string> alt9, alt10;
    for (const auto& cell : report.cells) {
      if (cell.mask_id == "27" && cell.c == 9) alt9 = cell.alternating_knots;
      if (cell.mask_id == "27" && cell.c == 10) alt10 = cell.alternating_knots;
    }
    bool spot9 = alt9 == std::set<std::string>{"9_1", "9_2", "9_8", "9_17", "9_20", "9_28"};
    bool spot10 = alt10 == std::set<std::string>{"10_2", "10_4", "10_28", "10_66", "10_75"};
    report_line(3, "tile number 27: full list plus alternating spot checks",
                pass && spot9 && spot10,
                (spot9 ? "" : "(27,9) alt = {" + join(alt9) + "} ") +
                    (spot10 ? "" : "(27,10) alt = {" + join(alt10) + "}"));
  }

  // ---- criterion 4: the 32-tile list, with fingerprint ties listed ----
  {
    auto got = names_at_tile(report, 32);
    auto want = subset(32);
    auto ties = tie_names(report, "32", -1);
    std::set<std::string> missing, extra, accounted_by_tie;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::inserter(extra, extra.end()));
    for (const auto& n : missing)
      if (ties.count(n)) accounted_by_tie.insert(n);
    bool pass = extra.empty() && missing == accounted_by_tie;

    // 11n71..75 arise at eleven crossing tiles, 11n76..78 only at thirteen
    auto ties11 = tie_names(report, "32", 11);
    auto ties12 = tie_names(report, "32", 12);
    auto ties13 = tie_names(report, "32", 13);
    bool split = true;
    for (const char* n : {"11n71", "11n72", "11n73", "11n74", "11n75"})
      if (!ties11.count(n)) split = false;
    for (const char* n : {"11n76", "11n77", "11n78"})
      if (!ties13.count(n) || ties11.count(n) || ties12.count(n)) split = false;
    for (const char* n : {"13n2399", "13n2400", "13n2401", "13n2402", "13n2403"})
      if (!ties13.count(n)) split = false;

    std::set<std::string> alt13;
    for (const auto& cell : report.cells)
      if (cell.mask_id == "32" && cell.c == 13) alt13 = cell.alternating_knots;
    bool spot13 = alt13 == std::set<std::string>{"13a1230", "13a1236", "13a1461", "13a4573"};

    report_line(4, "minimal mosaic tile number 32: all 64 knots (ties listed explicitly)",
                pass && split && spot13,
                "tie-accounted: {" + join(accounted_by_tie) + "}");
  }

  // ---- criterion 5: absent knots are never produced ----
  {
    std::set<std::string> produced;
    for (const auto& [n, f] : report.knots) produced.insert(n);
    auto all_ties = tie_names(report, "", -1);
    std::set<std::string> violations;
    for (const auto& rec : index.records()) {
      if (rec.crossings > 10) continue;
      if (expected.count(rec.name)) continue;  // in one of the reference lists
      if (produced.count(rec.name) || all_ties.count(rec.name)) violations.insert(rec.name);
    }
    bool has_9_6_row = index.find("9_6") != nullptr && !produced.count("9_6");
    report_line(5, "knots outside the lists (9_6 etc.) never arise", violations.empty() && has_9_6_row,
                violations.empty() ? "" : "produced: {" + join(violations) + "}");
  }

  // ---- criterion 6: the 9_10 pair of fixtures ----
  {
    auto check = [&](const std::string& file, int tiles) {
      std::ifstream in(root + "/data/mosaics/" + file);
      std::stringstream ss;
      ss << in.rdbuf();
      Mosaic m = parse_mosaic(ss.str());
      if (tile_number(m) != tiles) return false;
      auto names = index.identify(to_diagram(m));
      return names == std::vector<std::string>{"9_10"};
    };
    bool pass = check("9_10_6x6_tile32.txt", 32) && check("9_10_7x7_tile27.txt", 27);
    report_line(6, "9_10 fixtures: tile number 32 on the 6-mosaic, 27 on the 7-mosaic", pass);
  }

  // ---- criterion 7: the always-on property suite ----
  {
    bool pass = true;
    std::string why;
    // witnesses re-validate end to end, and their invariants obey the basics
    for (const auto& [name, f] : report.knots) {
      Mosaic w = parse_mosaic(f.witness_text);
      if (!is_suitably_connected(w) || tile_number(w) != f.min_tile || components(w) != 1) {
        pass = false;
        why = "witness re-validation failed for " + name;
        break;
      }
      Diagram d = to_diagram(w);
      if (!is_reduced(d)) {
        pass = false;
        why = "witness not reduced for " + name;
        break;
      }
      LaurentPoly v = jones(d);
      LaurentPoly a = alexander(d);
      if (v.eval(1) != 1 || knot_determinant(d) % 2 == 0 || !(a == a.reversed())) {
        pass = false;
        why = "invariant property failed for " + name;
        break;
      }
      Mosaic canon = canonical_form(w);
      if (canonical_form(canon) != canon) {
        pass = false;
        why = "canonical form not idempotent";
        break;
      }
      auto base_names = index.identify(d);
      for (Sym g : {Sym::Rot90, Sym::FlipH, Sym::FlipD}) {
        if (index.identify(to_diagram(apply_symmetry(w, g))) != base_names) {
          pass = false;
          why = "identification not symmetry-invariant for " + name;
        }
      }
      if (!pass) break;
    }
    // pruned and unpruned searches agree on the 22-tile layouts
    if (pass) {
      for (const char* id : {"22a", "22b"}) {
        LayoutMask m = load_layout_mask_file(root + "/data/masks/mask_" + std::string(id) + ".txt");
        for (int c = 4; c <= 9 && pass; ++c)
          if (!cross_check_pruning(m, c, index)) {
            pass = false;
            why = std::string("pruned/unpruned mismatch on ") + id + " at c=" + std::to_string(c);
          }
      }
    }
    // determinism under a different worker count
    if (pass) {
      RunOptions small;
      small.ranges["22a"] = {8, 9};
      small.threads = 1;
      EnumerationReport r1 = run_enumeration({masks[0]}, small, index);
      small.threads = 3;
      EnumerationReport r2 = run_enumeration({masks[0]}, small, index);
      if (report_to_json(r1).dump() != report_to_json(r2).dump()) {
        pass = false;
        why = "parallel partitioning changed the report";
      }
    }
    report_line(7, "property suite (invariants, witnesses, pruning cross-check, determinism)",
                pass, why);
  }

  // collisions present in the table are surfaced, never silently resolved
  if (!report.table_collisions.empty()) {
    std::printf("note: %zu fingerprint tie group(s) in the reference table:",
                report.table_collisions.size());
    for (const auto& g : report.table_collisions) {
      std::printf(" {");
      for (std::size_t i = 0; i < g.size(); ++i) std::printf("%s%s", i ? " " : "", g[i].c_str());
      std::printf("}");
    }
    std::printf("\n");
  }

  std::printf("%d of 7 criteria failed\n", failures);
  return failures;
}
