// Layout masks: the admissible per-cell constraint grids for space-efficient
// 6-mosaics, loaded from data files. Each mask fixes the boundary arcs and
// marks the cells that carry four connection points; enumeration decides
// which of those become crossings and which double arcs.
#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmos/mosaic.hpp"

namespace kmos {

struct LayoutMask {
  std::string id;      // "22a", "22b", "24", "27", "32"
  int tile_count = 0;  // declared tile number of the layout
  Mosaic grid;         // FourPointAny placeholders at the open cells
  std::vector<int> four_cells;  // row-major cell ids of the FourPointAny cells

  // 3x3 corner block structure, when present (not on the 24 layout).
  struct Block {
    enum class Kind { None, Partial, Filled };
    Kind kind = Kind::None;
    std::array<int, 4> inner{-1, -1, -1, -1};  // the block's 2x2 inner cells
    int p_center = -1;                         // four-point cell of a partial block
    Tile allowed_double = Tile::DoubleNE_SW;   // only valid double arc at p_center
  };
  std::array<Block, 4> blocks;  // UL, UR, LL, LR
  bool has_blocks = false;      // true when every corner is Filled or Partial

  int four_count() const { return static_cast<int>(four_cells.size()); }
};

namespace detail {

inline LayoutMask::Block classify_block(const Mosaic& g, int r0, int c0) {
  LayoutMask::Block b;
  int non_blank = 0;
  std::vector<int> fours;
  for (int r = r0; r < r0 + 3; ++r)
    for (int c = c0; c < c0 + 3; ++c) {
      if (g.at(r, c) != Tile::Blank) ++non_blank;
      if (g.at(r, c) == Tile::FourPointAny) fours.push_back(r * g.size() + c);
    }
  // inner 2x2 of the block = the cells on the inner board
  int ir = (r0 == 0) ? 1 : 3;
  int ic = (c0 == 0) ? 1 : 3;
  b.inner = {ir * g.size() + ic, ir * g.size() + ic + 1, (ir + 1) * g.size() + ic,
             (ir + 1) * g.size() + ic + 1};
  if (non_blank == 8 && static_cast<int>(fours.size()) == 4) {
    b.kind = LayoutMask::Block::Kind::Filled;
  } else if (non_blank == 3 && fours.size() == 1) {
    b.kind = LayoutMask::Block::Kind::Partial;
    b.p_center = fours[0];
    // The valid double arc at a partial-block centre hugs the block's own
    // corner of the mosaic: NE/SW corners take the NE-SW double arc,
    // NW/SE corners the NW-SE one.
    bool ne_or_sw = (r0 == 0) != (c0 == 0);
    b.allowed_double = ne_or_sw ? Tile::DoubleNE_SW : Tile::DoubleNW_SE;
  }
  return b;
}

}  // namespace detail

inline LayoutMask load_layout_mask(const std::string& text) {
  LayoutMask mask;
  std::istringstream in(text);
  std::string line, grid_text;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start != std::string::npos && line[start] == '#') {
      auto grab = [&](const char* key) -> std::optional<std::string> {
        std::string tag = std::string("# ") + key + ":";
        std::size_t pos = line.find(tag);
        if (pos == std::string::npos) return std::nullopt;
        std::string v = line.substr(pos + tag.size());
        std::size_t b = v.find_first_not_of(" \t");
        std::size_t e = v.find_last_not_of(" \t\r");
        if (b == std::string::npos) return std::nullopt;
        return v.substr(b, e - b + 1);
      };
      if (auto v = grab("id")) mask.id = *v;
      if (auto v = grab("tiles")) mask.tile_count = std::stoi(*v);
      continue;
    }
    grid_text += line;
    grid_text += '\n';
  }
  mask.grid = parse_mosaic(grid_text);

  if (mask.id.empty()) throw parse_error("layout mask needs an '# id:' header");
  if (mask.tile_count == 0) throw parse_error("layout mask needs a '# tiles:' header");
  if (tile_number(mask.grid) != mask.tile_count)
    throw validation_error("layout " + mask.id + " declares " + std::to_string(mask.tile_count) +
                           " tiles but the grid has " + std::to_string(tile_number(mask.grid)));
  if (!is_suitably_connected(mask.grid))
    throw validation_error("layout " + mask.id + " is not suitably connected");

  int n = mask.grid.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Tile t = mask.grid.at(r, c);
      if (t == Tile::CrossingAny)
        throw validation_error("layout masks use only FourPointAny placeholders");
      bool boundary = (r == 0 || c == 0 || r == n - 1 || c == n - 1);
      if (t == Tile::FourPointAny) {
        if (boundary)
          throw validation_error("four-point cells must lie on the inner board");
        mask.four_cells.push_back(r * n + c);
      }
      if (boundary && t != Tile::Blank && !(tile_code(t) >= 1 && tile_code(t) <= 6))
        throw validation_error("boundary cells must be blank, arcs, or lines");
    }

  if (n == 6) {
    mask.blocks[0] = detail::classify_block(mask.grid, 0, 0);
    mask.blocks[1] = detail::classify_block(mask.grid, 0, 3);
    mask.blocks[2] = detail::classify_block(mask.grid, 3, 0);
    mask.blocks[3] = detail::classify_block(mask.grid, 3, 3);
    mask.has_blocks = true;
    for (const auto& b : mask.blocks)
      if (b.kind == LayoutMask::Block::Kind::None) mask.has_blocks = false;
  }
  return mask;
}

inline LayoutMask load_layout_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open layout mask file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_layout_mask(ss.str());
}

}  // namespace kmos
