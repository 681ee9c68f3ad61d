// Strand tracing: follow the curve through a suitably connected mosaic to
// count components, orient it, and extract the planar diagram.
//
// The traversal is deterministic: it starts at the lexicographically least
// non-blank cell and exits through its least port (N,E,S,W order), so PD
// output is reproducible for golden tests. Crossing cells may be the
// undetermined CrossingAny while tracing; the projection is the same.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "kmos/diagram.hpp"
#include "kmos/mosaic.hpp"

namespace kmos {

// Counterclockwise successor of a port as drawn (row 0 on top): N,W,S,E.
constexpr Port ccw_port(Port p) {
  switch (p) {
    case PortN: return PortW;
    case PortW: return PortS;
    case PortS: return PortE;
    case PortE: return PortN;
  }
  return PortN;
}

struct CrossingTrace {
  int cell = -1;        // r*n + c
  Port v_entry = PortN; // vertical pass entered through N (southbound) or S
  Port h_entry = PortE; // horizontal pass entered through E (westbound) or W
  int v_in = -1, v_out = -1;  // edge labels of the vertical pass
  int h_in = -1, h_out = -1;
  int v_visit = -1, h_visit = -1;  // positions in traversal order, 0..2c-1
};

struct TraceResult {
  int components = 0;
  // The fields below are populated only for single-component mosaics.
  std::vector<CrossingTrace> crossings;  // sorted by cell index
  int edge_count = 0;                    // 2 * crossings, 0 for the unknot circle
};

namespace detail {

struct Walker {
  const Mosaic& m;
  explicit Walker(const Mosaic& mo) : m(mo) {}

  static constexpr int dr[4] = {-1, 0, 1, 0};
  static constexpr int dc[4] = {0, 1, 0, -1};

  Tile tile_at(int cell) const { return m.cells()[static_cast<std::size_t>(cell)]; }

  // moves from (cell, exit port) to the neighbouring (cell, entry port)
  std::pair<int, Port> step(int cell, Port exit) const {
    int r = cell / m.size(), c = cell % m.size();
    int nr = r + dr[exit], nc = c + dc[exit];
    if (!m.in_bounds(nr, nc))
      throw validation_error("strand runs off the mosaic boundary");
    Port entry = opposite(exit);
    Tile t = m.at(nr, nc);
    if (!tile_has_port(t, entry))
      throw validation_error("strand meets a tile with no matching connection point");
    return {nr * m.size() + nc, entry};
  }
};

}  // namespace detail

// Traces every strand. Tiles must be determinate except that CrossingAny is
// accepted (it has the same projection as a crossing); FourPointAny is
// rejected because its strand pairing is undefined.
inline TraceResult trace_mosaic(const Mosaic& m) {
  for (Tile t : m.cells())
    if (t == Tile::FourPointAny)
      throw validation_error("cannot trace a mosaic with undetermined four-point tiles");

  detail::Walker walk(m);
  int n = m.size();

  // visited passes, keyed by (cell, min(entry, partner(entry)))
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(n) * n * 4, 0);
  auto pass_key = [&](int cell, Port entry) {
    Port x = tile_partner(walk.tile_at(cell), entry);
    return static_cast<std::size_t>(cell) * 4 + std::min<int>(entry, x);
  };

  TraceResult out;
  struct Event {
    int cell;
    Port entry;
  };
  std::vector<Event> events;  // crossing arrivals, first component only

  bool first_component = true;
  for (int start_cell = 0; start_cell < n * n; ++start_cell) {
    Tile t = walk.tile_at(start_cell);
    if (t == Tile::Blank) continue;
    for (int p0 = 0; p0 < 4; ++p0) {
      if (!tile_has_port(t, static_cast<Port>(p0))) continue;
      // begin by exiting this port; the pass being completed is the one that
      // arrives back here at the end of the cycle
      Port exit0 = static_cast<Port>(p0);
      Port entry_of_start_pass = tile_partner(t, exit0);
      if (visited[pass_key(start_cell, entry_of_start_pass)]) continue;

      ++out.components;
      int cell = start_cell;
      Port exit = exit0;
      do {
        auto [ncell, entry] = walk.step(cell, exit);
        if (visited[pass_key(ncell, entry)])
          throw validation_error("strand pass visited twice; invalid mosaic");
        visited[pass_key(ncell, entry)] = 1;
        Tile nt = walk.tile_at(ncell);
        if (is_crossing(nt) || nt == Tile::CrossingAny) {
          if (first_component) events.push_back({ncell, entry});
        }
        cell = ncell;
        exit = tile_partner(nt, entry);
      } while (cell != start_cell || exit != exit0);
      first_component = false;
    }
  }

  if (out.components != 1) return out;

  // Assemble per-crossing data; edge i runs from event i to event i+1 (mod 2c).
  int num_events = static_cast<int>(events.size());
  std::vector<CrossingTrace> sites;
  auto find_site = [&](int cell) -> CrossingTrace& {
    for (auto& s : sites)
      if (s.cell == cell) return s;
    sites.emplace_back();
    sites.back().cell = cell;
    return sites.back();
  };
  for (int i = 0; i < num_events; ++i) {
    int edge_in = (i + num_events - 1) % num_events;
    int edge_out = i;
    CrossingTrace& site = find_site(events[i].cell);
    if (events[i].entry == PortN || events[i].entry == PortS) {
      site.v_entry = events[i].entry;
      site.v_in = edge_in;
      site.v_out = edge_out;
      site.v_visit = i;
    } else {
      site.h_entry = events[i].entry;
      site.h_in = edge_in;
      site.h_out = edge_out;
      site.h_visit = i;
    }
  }
  std::sort(sites.begin(), sites.end(),
            [](const CrossingTrace& a, const CrossingTrace& b) { return a.cell < b.cell; });
  out.crossings = std::move(sites);
  out.edge_count = num_events;
  return out;
}

inline int components(const Mosaic& m) { return trace_mosaic(m).components; }

// Builds the oriented PD for one over/under choice. under_vertical[k] says
// whether the vertical pass goes under at the k-th crossing (in cell order):
// true corresponds to the horizontal-over tile T9.
inline Diagram diagram_from_trace(const TraceResult& tr, const std::vector<bool>& under_vertical) {
  if (tr.components != 1)
    throw validation_error("planar diagram requires a single-component mosaic");
  if (tr.crossings.empty()) return Diagram::unknot();
  std::vector<CrossingPD> crossings;
  crossings.reserve(tr.crossings.size());
  for (std::size_t k = 0; k < tr.crossings.size(); ++k) {
    const CrossingTrace& site = tr.crossings[k];
    auto edge_at_port = [&](Port p) {
      if (p == site.v_entry) return site.v_in;
      if (p == opposite(site.v_entry)) return site.v_out;
      if (p == site.h_entry) return site.h_in;
      return site.h_out;
    };
    Port under_entry = under_vertical[k] ? site.v_entry : site.h_entry;
    Port over_entry = under_vertical[k] ? site.h_entry : site.v_entry;
    CrossingPD x{};
    Port s = under_entry;
    for (int i = 0; i < 4; ++i) {
      x.arcs[i] = edge_at_port(s);
      s = ccw_port(s);
    }
    x.sign = (over_entry == ccw_port(ccw_port(ccw_port(under_entry)))) ? +1 : -1;
    crossings.push_back(x);
  }
  return Diagram(tr.edge_count, std::move(crossings));
}

// PD code of a fully determinate single-component mosaic.
inline Diagram to_diagram(const Mosaic& m) {
  for (Tile t : m.cells())
    if (!is_determinate(t))
      throw validation_error("to_diagram needs determinate tiles");
  TraceResult tr = trace_mosaic(m);
  if (tr.components != 1)
    throw validation_error("mosaic is a link with " + std::to_string(tr.components) +
                           " components, not a knot");
  std::vector<bool> under_vertical;
  under_vertical.reserve(tr.crossings.size());
  for (const auto& site : tr.crossings)
    under_vertical.push_back(m.cells()[static_cast<std::size_t>(site.cell)] == Tile::CrossHOver);
  return diagram_from_trace(tr, under_vertical);
}

}  // namespace kmos
