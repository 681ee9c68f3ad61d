// Mosaic grids: parsing/serialization of the plain-text format, suitable
// connectivity, tile counting, the dihedral symmetry action and canonical
// forms. All values are immutable once built.
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmos/tiles.hpp"

namespace kmos {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

class Mosaic {
 public:
  Mosaic() = default;
  Mosaic(int n, std::vector<Tile> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ <= 0 || cells_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
      throw parse_error("mosaic must be a non-empty square grid");
  }

  static Mosaic filled(int n, Tile t) {
    return Mosaic(n, std::vector<Tile>(static_cast<std::size_t>(n) * n, t));
  }

  int size() const { return n_; }
  Tile at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * n_ + c]; }
  void set(int r, int c, Tile t) { cells_[static_cast<std::size_t>(r) * n_ + c] = t; }
  const std::vector<Tile>& cells() const { return cells_; }

  bool in_bounds(int r, int c) const { return r >= 0 && r < n_ && c >= 0 && c < n_; }

  friend bool operator==(const Mosaic&, const Mosaic&) = default;
  friend auto operator<=>(const Mosaic& a, const Mosaic& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int n_ = 0;
  std::vector<Tile> cells_;
};

// Text format: n rows of n whitespace-separated integer codes, '#' starts a
// comment line. Does not validate connectivity.
inline Mosaic parse_mosaic(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> row;
    int code;
    while (ls >> code) row.push_back(code);
    if (!ls.eof()) throw parse_error("non-numeric token in mosaic row: " + line);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("empty mosaic");
  std::size_t n = rows.size();
  std::vector<Tile> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw parse_error("mosaic is not square: " + std::to_string(n) + " rows but a row of " +
                        std::to_string(row.size()) + " cells");
    for (int code : row) {
      if (code < 0 || code >= kNumTiles)
        throw parse_error("unknown tile code " + std::to_string(code));
      cells.push_back(static_cast<Tile>(code));
    }
  }
  return Mosaic(static_cast<int>(n), std::move(cells));
}

inline std::string serialize_mosaic(const Mosaic& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (c) out += ' ';
      int code = tile_code(m.at(r, c));
      if (code < 10) out += ' ';
      out += std::to_string(code);
    }
    out += '\n';
  }
  return out;
}

// Every port must meet a matching port of the adjacent tile, and no port may
// face the mosaic boundary. Placeholders count as having four ports.
inline bool is_suitably_connected(const Mosaic& m) {
  static constexpr int dr[4] = {-1, 0, 1, 0};
  static constexpr int dc[4] = {0, 1, 0, -1};
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      std::uint8_t ports = tile_ports(m.at(r, c));
      for (int p = 0; p < 4; ++p) {
        if (!(ports & port_bit(static_cast<Port>(p)))) continue;
        int nr = r + dr[p], nc = c + dc[p];
        if (!m.in_bounds(nr, nc)) return false;
        if (!tile_has_port(m.at(nr, nc), opposite(static_cast<Port>(p)))) return false;
      }
    }
  }
  return true;
}

inline int tile_number(const Mosaic& m) {
  int count = 0;
  for (Tile t : m.cells())
    if (t != Tile::Blank) ++count;
  return count;
}

inline int count_tiles(const Mosaic& m, Tile kind) {
  int count = 0;
  for (Tile t : m.cells())
    if (t == kind) ++count;
  return count;
}

inline int count_crossing_tiles(const Mosaic& m) {
  int count = 0;
  for (Tile t : m.cells())
    if (is_crossing(t) || t == Tile::CrossingAny) ++count;
  return count;
}

inline Mosaic apply_symmetry(const Mosaic& m, Sym g) {
  Mosaic out = Mosaic::filled(m.size(), Tile::Blank);
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      auto [nr, nc] = sym_cell(g, m.size(), r, c);
      out.set(nr, nc, sym_tile(g, m.at(r, c)));
    }
  return out;
}

// Lexicographically least cell-code sequence over the eight symmetry images.
inline Mosaic canonical_form(const Mosaic& m) {
  Mosaic best = m;
  for (auto g : kAllSyms) {
    if (g == Sym::Id) continue;
    Mosaic img = apply_symmetry(m, g);
    if (img < best) best = img;
  }
  return best;
}

}  // namespace kmos
