// The eleven mosaic tiles plus the two nondeterministic placeholders, their
// connection points (ports), strand pairing, and the action of the dihedral
// group of the square on both cells and tile kinds.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kmos {

// Tile codes match the text file format: 0..10 are the standard tiles,
// 11 is the undetermined crossing, 12 the undetermined four-point tile.
enum class Tile : std::uint8_t {
  Blank = 0,
  ArcSW = 1,       // arc joining the south and west edge midpoints
  ArcSE = 2,
  ArcNE = 3,
  ArcNW = 4,
  LineNS = 5,
  LineEW = 6,
  DoubleNE_SW = 7,  // two arcs: north-east and south-west
  DoubleNW_SE = 8,
  CrossHOver = 9,   // crossing, horizontal (E-W) strand on top
  CrossVOver = 10,  // crossing, vertical (N-S) strand on top
  CrossingAny = 11,
  FourPointAny = 12,
};

constexpr int kNumTiles = 13;

enum Port : std::uint8_t { PortN = 0, PortE = 1, PortS = 2, PortW = 3 };

constexpr std::uint8_t port_bit(Port p) { return static_cast<std::uint8_t>(1u << p); }

constexpr Port opposite(Port p) { return static_cast<Port>((p + 2) & 3); }

inline Tile tile_from_code(int code) {
  if (code < 0 || code >= kNumTiles) throw std::out_of_range("unknown tile code " + std::to_string(code));
  return static_cast<Tile>(code);
}

constexpr int tile_code(Tile t) { return static_cast<int>(t); }

constexpr bool is_blank(Tile t) { return t == Tile::Blank; }
constexpr bool is_crossing(Tile t) { return t == Tile::CrossHOver || t == Tile::CrossVOver; }
constexpr bool is_double_arc(Tile t) { return t == Tile::DoubleNE_SW || t == Tile::DoubleNW_SE; }
constexpr bool is_placeholder(Tile t) { return t == Tile::CrossingAny || t == Tile::FourPointAny; }
constexpr bool is_determinate(Tile t) { return !is_placeholder(t); }

// Port bitmask per tile; bit order N,E,S,W.
constexpr std::array<std::uint8_t, kNumTiles> kTilePorts = {
    /*Blank*/ 0,
    /*ArcSW*/ port_bit(PortS) | port_bit(PortW),
    /*ArcSE*/ port_bit(PortS) | port_bit(PortE),
    /*ArcNE*/ port_bit(PortN) | port_bit(PortE),
    /*ArcNW*/ port_bit(PortN) | port_bit(PortW),
    /*LineNS*/ port_bit(PortN) | port_bit(PortS),
    /*LineEW*/ port_bit(PortE) | port_bit(PortW),
    /*DoubleNE_SW*/ 0b1111,
    /*DoubleNW_SE*/ 0b1111,
    /*CrossHOver*/ 0b1111,
    /*CrossVOver*/ 0b1111,
    /*CrossingAny*/ 0b1111,
    /*FourPointAny*/ 0b1111,
};

constexpr std::uint8_t tile_ports(Tile t) { return kTilePorts[tile_code(t)]; }
constexpr bool tile_has_port(Tile t, Port p) { return (tile_ports(t) & port_bit(p)) != 0; }

// Strand continuation within a tile: entering through `p`, which port does the
// strand leave through? Crossing tiles pass straight through (N<->S, E<->W);
// the over/under choice does not affect the projection. Not defined for Blank
// or FourPointAny.
constexpr Port tile_partner(Tile t, Port p) {
  switch (t) {
    case Tile::ArcSW: return p == PortS ? PortW : PortS;
    case Tile::ArcSE: return p == PortS ? PortE : PortS;
    case Tile::ArcNE: return p == PortN ? PortE : PortN;
    case Tile::ArcNW: return p == PortN ? PortW : PortN;
    case Tile::LineNS:
    case Tile::LineEW:
    case Tile::CrossHOver:
    case Tile::CrossVOver:
    case Tile::CrossingAny: return opposite(p);
    case Tile::DoubleNE_SW: return (p == PortN || p == PortE) ? (p == PortN ? PortE : PortN)
                                                              : (p == PortS ? PortW : PortS);
    case Tile::DoubleNW_SE: return (p == PortN || p == PortW) ? (p == PortN ? PortW : PortN)
                                                              : (p == PortS ? PortE : PortS);
    default: return p;  // Blank / FourPointAny: no pairing
  }
}

// --- dihedral group of the square -----------------------------------------

enum class Sym : std::uint8_t { Id, Rot90, Rot180, Rot270, FlipH, FlipV, FlipD, FlipA };

constexpr std::array<Sym, 8> kAllSyms = {Sym::Id,    Sym::Rot90, Sym::Rot180, Sym::Rot270,
                                         Sym::FlipH, Sym::FlipV, Sym::FlipD,  Sym::FlipA};

constexpr bool is_reflection(Sym g) { return static_cast<int>(g) >= 4; }

// Where each port is sent. Rotations are counterclockwise in the usual
// drawing (row 0 at the top); FlipH mirrors left-right, FlipV top-bottom,
// FlipD is the transpose (NW-SE axis), FlipA the anti-transpose.
constexpr std::array<std::array<Port, 4>, 8> kSymPort = {{
    /*Id*/ {PortN, PortE, PortS, PortW},
    /*Rot90*/ {PortW, PortN, PortE, PortS},
    /*Rot180*/ {PortS, PortW, PortN, PortE},
    /*Rot270*/ {PortE, PortS, PortW, PortN},
    /*FlipH*/ {PortN, PortW, PortS, PortE},
    /*FlipV*/ {PortS, PortE, PortN, PortW},
    /*FlipD*/ {PortW, PortS, PortE, PortN},
    /*FlipA*/ {PortE, PortN, PortW, PortS},
}};

constexpr Port sym_port(Sym g, Port p) { return kSymPort[static_cast<int>(g)][p]; }

// Cell (r,c) of an n x n grid under the symmetry.
constexpr std::pair<int, int> sym_cell(Sym g, int n, int r, int c) {
  int m = n - 1;
  switch (g) {
    case Sym::Id: return {r, c};
    case Sym::Rot90: return {m - c, r};
    case Sym::Rot180: return {m - r, m - c};
    case Sym::Rot270: return {c, m - r};
    case Sym::FlipH: return {r, m - c};
    case Sym::FlipV: return {m - r, c};
    case Sym::FlipD: return {c, r};
    case Sym::FlipA: return {m - c, m - r};
  }
  return {r, c};
}

namespace detail {

// Tile kind images are derived from the port action rather than written out
// by hand: map the port set, map the strand pairing, and for crossings map
// the over-strand axis (reflections preserve which strand is drawn on top).
constexpr Tile transformed_tile(Sym g, Tile t) {
  if (t == Tile::Blank || is_placeholder(t)) return t;
  std::uint8_t ports = 0;
  for (int p = 0; p < 4; ++p)
    if (tile_has_port(t, static_cast<Port>(p))) ports |= port_bit(sym_port(g, static_cast<Port>(p)));

  if (is_crossing(t)) {
    bool over_horizontal = (t == Tile::CrossHOver);
    // The over strand's axis follows the isometry; N/S ports map together.
    bool image_over_horizontal =
        over_horizontal ? (sym_port(g, PortE) == PortE || sym_port(g, PortE) == PortW)
                        : (sym_port(g, PortN) == PortE || sym_port(g, PortN) == PortW);
    return image_over_horizontal ? Tile::CrossHOver : Tile::CrossVOver;
  }
  if (is_double_arc(t)) {
    // Find which source port maps to N in the image, then map its partner:
    // NE_SW pairs N with E, NW_SE pairs N with W.
    for (int p = 0; p < 4; ++p) {
      if (sym_port(g, static_cast<Port>(p)) == PortN) {
        Port partner = sym_port(g, tile_partner(t, static_cast<Port>(p)));
        return partner == PortE ? Tile::DoubleNE_SW : Tile::DoubleNW_SE;
      }
    }
  }
  // Single arc or line: the port set determines the tile.
  for (int k = 1; k <= 6; ++k)
    if (kTilePorts[k] == ports) return static_cast<Tile>(k);
  return t;
}

constexpr std::array<std::array<Tile, kNumTiles>, 8> make_sym_tile_table() {
  std::array<std::array<Tile, kNumTiles>, 8> table{};
  for (int g = 0; g < 8; ++g)
    for (int t = 0; t < kNumTiles; ++t)
      table[g][t] = transformed_tile(static_cast<Sym>(g), static_cast<Tile>(t));
  return table;
}

inline constexpr auto kSymTile = make_sym_tile_table();

}  // namespace detail

constexpr Tile sym_tile(Sym g, Tile t) { return detail::kSymTile[static_cast<int>(g)][tile_code(t)]; }

// Composition g*h = "apply h, then g", derived from the port action.
constexpr Sym sym_compose(Sym g, Sym h) {
  Port n = sym_port(g, sym_port(h, PortN));
  Port e = sym_port(g, sym_port(h, PortE));
  for (auto s : kAllSyms)
    if (sym_port(s, PortN) == n && sym_port(s, PortE) == e) return s;
  return Sym::Id;
}

constexpr Sym sym_inverse(Sym g) {
  for (auto s : kAllSyms)
    if (sym_compose(s, g) == Sym::Id) return s;
  return Sym::Id;
}

inline const char* sym_name(Sym g) {
  switch (g) {
    case Sym::Id: return "id";
    case Sym::Rot90: return "rot90";
    case Sym::Rot180: return "rot180";
    case Sym::Rot270: return "rot270";
    case Sym::FlipH: return "flipH";
    case Sym::FlipV: return "flipV";
    case Sym::FlipD: return "flipD";
    case Sym::FlipA: return "flipA";
  }
  return "?";
}

}  // namespace kmos
