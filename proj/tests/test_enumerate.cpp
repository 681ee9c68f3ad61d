#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "kmos/enumerate.hpp"
#include "kmos/layout.hpp"
#include "kmos/report.hpp"
#include "oracles.hpp"

using namespace kmos;

namespace {

LayoutMask load_mask(const std::string& id) {
  return load_layout_mask_file(std::string(KMOS_SOURCE_DIR) + "/data/masks/mask_" + id + ".txt");
}

// a four-knot table, enough to smoke-test identification
std::string tiny_table_path() {
  static std::string path = [] {
    auto dir = std::filesystem::temp_directory_path() / "kmos_test";
    std::filesystem::create_directories(dir);
    std::string p = (dir / "tiny_table.csv").string();
    std::ofstream out(p);
    out << "0_1,0,PD[]\n";
    out << "3_1,3," << pd_to_string(oracle::braid_closure(2, {1, 1, 1})) << "\n";
    out << "4_1,4," << pd_to_string(oracle::braid_closure(3, {1, -2, 1, -2})) << "\n";
    out << "5_1,5," << pd_to_string(oracle::braid_closure(2, {1, 1, 1, 1, 1})) << "\n";
    return p;
  }();
  return path;
}

const KnotIndex& tiny_index() {
  static KnotIndex index = KnotIndex::load(tiny_table_path());
  return index;
}

}  // namespace

TEST_CASE("masks load and validate") {
  struct Expect {
    const char* id;
    int tiles;
    int fours;
  };
  for (auto [id, tiles, fours] : {Expect{"22a", 22, 10}, Expect{"22b", 22, 10},
                                  Expect{"24", 24, 12}, Expect{"27", 27, 13},
                                  Expect{"32", 32, 16}}) {
    LayoutMask m = load_mask(id);
    REQUIRE(m.id == id);
    REQUIRE(m.tile_count == tiles);
    REQUIRE(tile_number(m.grid) == tiles);
    REQUIRE(m.four_count() == fours);
    REQUIRE(is_suitably_connected(m.grid));
  }
  REQUIRE(load_mask("22a").has_blocks);
  REQUIRE(load_mask("27").has_blocks);
  REQUIRE(!load_mask("24").has_blocks);

  // block structure of 22a: filled on the main diagonal, partial off it
  LayoutMask m = load_mask("22a");
  using K = LayoutMask::Block::Kind;
  REQUIRE(m.blocks[0].kind == K::Filled);
  REQUIRE(m.blocks[1].kind == K::Partial);
  REQUIRE(m.blocks[2].kind == K::Partial);
  REQUIRE(m.blocks[3].kind == K::Filled);
  REQUIRE(m.blocks[1].allowed_double == Tile::DoubleNE_SW);
  REQUIRE(m.blocks[2].allowed_double == Tile::DoubleNE_SW);
}

TEST_CASE("placement generation on the 22a layout with eight crossings") {
  LayoutMask mask = load_mask("22a");
  GenCounters counts;
  std::vector<Placement> placements = generate_placements(mask, 8, true, &counts);
  REQUIRE(counts.raw == 180);  // C(10,8) subsets x 2^2 double-arc fills
  REQUIRE(counts.obs_pass <= counts.raw);
  REQUIRE(counts.connected <= counts.obs_pass);
  REQUIRE(counts.unique <= counts.connected);
  REQUIRE(counts.reduced == static_cast<long long>(placements.size()));
  REQUIRE(!placements.empty());
  for (const auto& p : placements) {
    REQUIRE(canonical_form(p.grid) == p.grid);  // stored canonically
    REQUIRE(p.crossing_cells.size() == 8);
    REQUIRE(p.trace.components == 1);
  }
  // generation is the same with a worker pool
  GenCounters counts2;
  std::vector<Placement> p2 = generate_placements(mask, 8, true, &counts2, 3);
  REQUIRE(p2.size() == placements.size());
  for (std::size_t i = 0; i < p2.size(); ++i) REQUIRE(p2[i].grid == placements[i].grid);
}

TEST_CASE("crossing count beyond the four-point cells is an error") {
  LayoutMask mask = load_mask("22a");
  REQUIRE_THROWS_AS(generate_placements(mask, 14, true), validation_error);
}

TEST_CASE("ten crossings never survive on a 22-tile layout") {
  LayoutMask mask = load_mask("22a");
  // pruned: the observation cap rejects them; unpruned: they are all links
  REQUIRE(generate_placements(mask, 10, true).empty());
  REQUIRE(generate_placements(mask, 10, false).empty());
}

TEST_CASE("sweeper matches the reference invariant path on every assignment") {
  for (const char* id : {"22a", "24"}) {
    LayoutMask mask = load_mask(id);
    std::vector<Placement> placements = generate_placements(mask, 8, true);
    std::size_t limit = std::min<std::size_t>(placements.size(), 3);
    for (std::size_t i = 0; i < limit; ++i) {
      AssignmentSweeper sweeper(placements[i]);
      std::uint32_t states = 1u << sweeper.crossing_count();
      for (std::uint32_t tau = 0; tau < states; ++tau) {
        Mosaic assigned = sweeper.mosaic_of(tau);
        Diagram reference = to_diagram(assigned);
        REQUIRE(sweeper.jones_of(tau) == jones(reference));
        REQUIRE(sweeper.writhe_of(tau) == writhe(reference));
        REQUIRE(sweeper.is_alternating_assignment(tau) == is_alternating(reference));
      }
    }
  }
}

TEST_CASE("alternating outcomes at 22 tiles") {
  LayoutMask mask = load_mask("22a");
  // Eight crossings: five distinct alternating classes arise, of which three
  // are prime knots and two are connected sums (the composites are kept by
  // the exact filters and sorted out at identification time).
  {
    std::vector<Placement> placements = generate_placements(mask, 8, true);
    std::set<std::string> folded;
    for (const auto& p : placements) {
      AssignmentSweeper sweeper(p);
      std::uint32_t states = 1u << sweeper.crossing_count();
      for (std::uint32_t tau = 0; tau < states; ++tau)
        if (sweeper.is_alternating_assignment(tau)) {
          LaurentPoly v = fold_jones(sweeper.jones_of(tau));
          REQUIRE(v.span() == 8);  // reduced alternating diagrams realize the span
          folded.insert(v.str());
        }
    }
    REQUIRE(folded.size() == 5);
  }
  // nine crossings: two prime alternating classes plus one connected sum
  {
    std::vector<Placement> placements = generate_placements(mask, 9, true);
    std::set<std::string> folded;
    for (const auto& p : placements) {
      AssignmentSweeper sweeper(p);
      std::uint32_t states = 1u << sweeper.crossing_count();
      for (std::uint32_t tau = 0; tau < states; ++tau)
        if (sweeper.is_alternating_assignment(tau))
          folded.insert(fold_jones(sweeper.jones_of(tau)).str());
    }
    REQUIRE(folded.size() == 3);
  }
}

TEST_CASE("the two 22-tile layouts produce the same knots") {
  LayoutMask a = load_mask("22a");
  LayoutMask b = load_mask("22b");
  auto folded_set = [](const LayoutMask& mask, int c) {
    std::set<std::string> out;
    for (const auto& p : generate_placements(mask, c, true)) {
      AssignmentSweeper sweeper(p);
      std::uint32_t states = 1u << sweeper.crossing_count();
      for (std::uint32_t tau = 0; tau < states; ++tau)
        out.insert(fold_jones(sweeper.jones_of(tau)).str());
    }
    return out;
  };
  REQUIRE(folded_set(a, 8) == folded_set(b, 8));
  REQUIRE(folded_set(a, 9) == folded_set(b, 9));
}

TEST_CASE("observation pruning matches its spec cases") {
  LayoutMask mask = load_mask("22a");
  // two four-crossing filled blocks: rejected
  Mosaic g = mask.grid;
  for (int cell : mask.four_cells) {
    bool in_filled = false;
    for (const auto& b : mask.blocks)
      if (b.kind == LayoutMask::Block::Kind::Filled)
        for (int ic : b.inner)
          if (ic == cell) in_filled = true;
    g.set(cell / 6, cell % 6, in_filled ? Tile::CrossingAny : Tile::DoubleNE_SW);
  }
  REQUIRE(!prune_by_observations(mask, g));

  // a partial block centre with the wrong double arc: rejected
  Mosaic h = mask.grid;
  for (int cell : mask.four_cells) h.set(cell / 6, cell % 6, Tile::CrossingAny);
  h.set(mask.blocks[1].p_center / 6, mask.blocks[1].p_center % 6, Tile::DoubleNW_SE);
  REQUIRE(!prune_by_observations(mask, h));
  h.set(mask.blocks[1].p_center / 6, mask.blocks[1].p_center % 6, Tile::DoubleNE_SW);
  // still two heavy blocks? both filled blocks have 4 crossings -> rejected
  REQUIRE(!prune_by_observations(mask, h));
}

TEST_CASE("enumeration report is deterministic across thread counts") {
  std::vector<LayoutMask> masks = {load_mask("22a")};
  RunOptions opts;
  opts.ranges["22a"] = {8, 8};
  opts.threads = 1;
  EnumerationReport r1 = run_enumeration(masks, opts, tiny_index());
  opts.threads = 3;
  EnumerationReport r2 = run_enumeration(masks, opts, tiny_index());
  REQUIRE(report_to_json(r1).dump() == report_to_json(r2).dump());
  // JSON round trip preserves the report
  EnumerationReport r3 = report_from_json(report_to_json(r1));
  REQUIRE(report_to_json(r3).dump() == report_to_json(r1).dump());
}

TEST_CASE("low crossing counts on 22a recover the small knots") {
  std::vector<LayoutMask> masks = {load_mask("22a")};
  RunOptions opts;
  // c=3 is empty under pruning: each filled block needs two crossings
  opts.ranges["22a"] = {3, 5};
  EnumerationReport r = run_enumeration(masks, opts, tiny_index());
  bool saw_trefoil = false;
  for (const auto& cell : r.cells) {
    if (cell.c == 3) REQUIRE(cell.placements == 0);
    if (cell.c == 4 && cell.knots.count("3_1")) saw_trefoil = true;
  }
  REQUIRE(saw_trefoil);
  REQUIRE(r.knots.count("3_1") == 1);
  REQUIRE(r.knots.count("4_1") == 1);
  REQUIRE(r.knots.count("5_1") == 1);
  REQUIRE(r.knots.at("3_1").min_crossings == 4);
  // witnesses re-validate end to end
  for (const auto& [name, f] : r.knots) {
    Mosaic w = parse_mosaic(f.witness_text);
    REQUIRE(is_suitably_connected(w));
    REQUIRE(tile_number(w) == f.min_tile);
    REQUIRE(components(w) == 1);
    Diagram d = to_diagram(w);
    REQUIRE(is_reduced(d));
    auto ids = tiny_index().identify(d);
    REQUIRE(ids == std::vector<std::string>{name});
  }
}
