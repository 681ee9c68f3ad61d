// Mosaic rendering: a character-grid form for terminals and an SVG form for
// the catalog. Both are deterministic functions of the mosaic.
#pragma once

#include <string>

#include "kmos/mosaic.hpp"

namespace kmos {

// One glyph per tile. Crossing tiles show which strand runs on top: the
// doubled stroke of the box-drawing glyph is the over-strand.
inline const char* tile_glyph(Tile t) {
  switch (t) {
    case Tile::Blank: return "\xC2\xB7";          // middle dot
    case Tile::ArcSW: return "\xE2\x94\x90";      // corner down-left
    case Tile::ArcSE: return "\xE2\x94\x8C";
    case Tile::ArcNE: return "\xE2\x94\x94";
    case Tile::ArcNW: return "\xE2\x94\x98";
    case Tile::LineNS: return "\xE2\x94\x82";
    case Tile::LineEW: return "\xE2\x94\x80";
    case Tile::DoubleNE_SW: return "\xE2\x95\xB1";  // diagonal NE-SW
    case Tile::DoubleNW_SE: return "\xE2\x95\xB2";
    case Tile::CrossHOver: return "\xE2\x95\xAA";   // horizontal doubled
    case Tile::CrossVOver: return "\xE2\x95\xAB";   // vertical doubled
    case Tile::CrossingAny: return "x";
    case Tile::FourPointAny: return "o";
  }
  return "?";
}

inline std::string render_text(const Mosaic& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (c) out += ' ';
      out += tile_glyph(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline void svg_arc(std::string& out, int cx, int cy, int x1, int y1, int x2, int y2) {
  // quarter circle from (x1,y1) to (x2,y2) around corner (cx,cy)
  (void)cx;
  (void)cy;
  out += "<path d=\"M" + std::to_string(x1) + " " + std::to_string(y1) + " A20 20 0 0 1 " +
         std::to_string(x2) + " " + std::to_string(y2) + "\"/>";
}

inline void svg_tile(std::string& out, Tile t, int x, int y) {
  const int s = 40, h = 20;
  auto line = [&](int x1, int y1, int x2, int y2) {
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>";
  };
  int mx = x + h, my = y + h;  // midpoints of the edges via center offsets
  int nx = x + h, ny = y;      // north port
  int ex = x + s, ey = y + h;
  int sx = x + h, syy = y + s;
  int wx = x, wy = y + h;
  switch (t) {
    case Tile::Blank: break;
    case Tile::ArcSW: svg_arc(out, x, y + s, wx, wy, sx, syy); break;
    case Tile::ArcSE: svg_arc(out, x + s, y + s, sx, syy, ex, ey); break;
    case Tile::ArcNE: svg_arc(out, x + s, y, ex, ey, nx, ny); break;
    case Tile::ArcNW: svg_arc(out, x, y, nx, ny, wx, wy); break;
    case Tile::LineNS: line(nx, ny, sx, syy); break;
    case Tile::LineEW: line(wx, wy, ex, ey); break;
    case Tile::DoubleNE_SW:
      svg_arc(out, x + s, y, ex, ey, nx, ny);
      svg_arc(out, x, y + s, wx, wy, sx, syy);
      break;
    case Tile::DoubleNW_SE:
      svg_arc(out, x, y, nx, ny, wx, wy);
      svg_arc(out, x + s, y + s, sx, syy, ex, ey);
      break;
    case Tile::CrossHOver:  // horizontal on top: vertical strand breaks
      line(nx, ny, sx, my - 6);
      line(sx, my + 6, sx, syy);
      line(wx, wy, ex, ey);
      break;
    case Tile::CrossVOver:
      line(wx, wy, mx - 6, ey);
      line(mx + 6, ey, ex, ey);
      line(nx, ny, sx, syy);
      break;
    case Tile::CrossingAny:
    case Tile::FourPointAny:
      out += "<circle cx=\"" + std::to_string(x + h) + "\" cy=\"" + std::to_string(y + h) +
             "\" r=\"6\" fill=\"none\"/>";
      break;
  }
}

}  // namespace detail

inline std::string render_svg(const Mosaic& m) {
  const int s = 40;
  int size = m.size() * s;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    std::to_string(size) + " " + std::to_string(size) +
                    "\"><g fill=\"none\" stroke=\"black\" stroke-width=\"3\" "
                    "stroke-linecap=\"round\">";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" +
         std::to_string(size) + "\" stroke=\"#ccc\" stroke-width=\"1\"/>";
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) detail::svg_tile(out, m.at(r, c), c * s, r * s);
  out += "</g></svg>\n";
  return out;
}

}  // namespace kmos
