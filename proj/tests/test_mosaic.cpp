#include <catch2/catch_amalgamated.hpp>

#include "kmos/mosaic.hpp"

using namespace kmos;

namespace {
Mosaic unknot2() { return parse_mosaic("2 1\n3 4\n"); }
}  // namespace

TEST_CASE("parse decodes the grid") {
  Mosaic m = unknot2();
  REQUIRE(m.size() == 2);
  REQUIRE(m.at(0, 0) == Tile::ArcSE);
  REQUIRE(m.at(0, 1) == Tile::ArcSW);
  REQUIRE(m.at(1, 0) == Tile::ArcNE);
  REQUIRE(m.at(1, 1) == Tile::ArcNW);

  Mosaic blank = parse_mosaic("0 0\n0 0\n");
  REQUIRE(tile_number(blank) == 0);
}

TEST_CASE("parse accepts comments and placeholders") {
  Mosaic m = parse_mosaic("# a comment\n11 12\n12 11\n");
  REQUIRE(m.at(0, 0) == Tile::CrossingAny);
  REQUIRE(m.at(0, 1) == Tile::FourPointAny);
}

TEST_CASE("parse rejects bad input") {
  REQUIRE_THROWS_AS(parse_mosaic("1 2 3\n4 5\n"), parse_error);
  REQUIRE_THROWS_AS(parse_mosaic("13 0\n0 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_mosaic("1 x\n0 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_mosaic(""), parse_error);
}

TEST_CASE("serialize round trips") {
  Mosaic m = unknot2();
  REQUIRE(parse_mosaic(serialize_mosaic(m)) == m);
}

TEST_CASE("suitable connectivity") {
  REQUIRE(is_suitably_connected(unknot2()));
  REQUIRE(is_suitably_connected(parse_mosaic("0 0\n0 0\n")));
  // T1's south port unmatched
  REQUIRE(!is_suitably_connected(parse_mosaic("2 1\n3 0\n")));
  // port facing the boundary
  REQUIRE(!is_suitably_connected(parse_mosaic("5 0\n5 0\n")));
}

TEST_CASE("tile number") {
  REQUIRE(tile_number(unknot2()) == 4);
  REQUIRE(tile_number(parse_mosaic("0 0\n0 0\n")) == 0);
}

TEST_CASE("symmetry group sanity") {
  // composition closure and inverses
  for (Sym g : kAllSyms) {
    REQUIRE(sym_compose(g, sym_inverse(g)) == Sym::Id);
    for (Sym h : kAllSyms) {
      Sym gh = sym_compose(g, h);
      REQUIRE(std::find(kAllSyms.begin(), kAllSyms.end(), gh) != kAllSyms.end());
    }
  }
  // port action respects strand pairing on every tile
  for (Sym g : kAllSyms) {
    for (int code = 1; code <= 10; ++code) {
      Tile t = static_cast<Tile>(code);
      Tile img = sym_tile(g, t);
      for (int p = 0; p < 4; ++p) {
        Port port = static_cast<Port>(p);
        if (!tile_has_port(t, port)) continue;
        REQUIRE(tile_has_port(img, sym_port(g, port)));
        REQUIRE(tile_partner(img, sym_port(g, port)) == sym_port(g, tile_partner(t, port)));
      }
    }
  }
}

TEST_CASE("spec'd tile images") {
  REQUIRE(sym_tile(Sym::Rot90, Tile::ArcSW) == Tile::ArcSE);
  REQUIRE(sym_tile(Sym::Rot90, Tile::LineNS) == Tile::LineEW);
  REQUIRE(sym_tile(Sym::Rot90, Tile::DoubleNE_SW) == Tile::DoubleNW_SE);
  REQUIRE(sym_tile(Sym::Rot90, Tile::CrossHOver) == Tile::CrossVOver);
  // reflections keep the drawn over-strand
  REQUIRE(sym_tile(Sym::FlipH, Tile::CrossHOver) == Tile::CrossHOver);
  REQUIRE(sym_tile(Sym::FlipD, Tile::CrossHOver) == Tile::CrossVOver);
}

TEST_CASE("apply_symmetry basics") {
  Mosaic m = unknot2();
  REQUIRE(apply_symmetry(m, Sym::Id) == m);
  REQUIRE(apply_symmetry(m, Sym::Rot180) == m);  // the unknot mosaic is 180-symmetric
  Mosaic r = m;
  for (int i = 0; i < 4; ++i) r = apply_symmetry(r, Sym::Rot90);
  REQUIRE(r == m);
  // connectivity is preserved by every symmetry
  for (Sym g : kAllSyms) REQUIRE(is_suitably_connected(apply_symmetry(m, g)));
  for (Sym g : kAllSyms) REQUIRE(tile_number(apply_symmetry(m, g)) == tile_number(m));
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
  Mosaic m = parse_mosaic("0 2 1 0\n2 9 7 1\n3 7 10 4\n0 3 4 0\n");
  Mosaic c = canonical_form(m);
  REQUIRE(canonical_form(c) == c);
  for (Sym g : kAllSyms) REQUIRE(canonical_form(apply_symmetry(m, g)) == c);
}
