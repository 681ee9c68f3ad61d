// The search: fill each layout with crossing placements and double-arc
// choices, prune, deduplicate up to symmetry, sweep every over/under
// assignment, and identify the resulting knots.
//
// The search is partitioned deterministically: results are merged in
// placement order, so the output is identical for any worker count.
#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "kmos/invariants.hpp"
#include "kmos/knotdb.hpp"
#include "kmos/layout.hpp"
#include "kmos/trace.hpp"

namespace kmos {

struct Placement {
  Mosaic grid;                      // canonical form; CrossingAny at crossings
  std::vector<int> crossing_cells;  // ascending cell ids
  TraceResult trace;                // single-component shadow trace
};

struct GenCounters {
  long long raw = 0;        // crossing subsets x double-arc fills considered
  long long obs_pass = 0;   // surviving the observation-based pruning
  long long connected = 0;  // single-component
  long long unique = 0;     // distinct canonical forms
  long long reduced = 0;    // no nugatory crossing
};

// --- observation-based pruning ---------------------------------------------

namespace detail {

// Per filled block: the inner-corner cell (diagonally opposite the mosaic
// corner) as an index into Block::inner, which is row-major over the 2x2.
inline int inner_corner_slot(int block_index) {
  static constexpr int slot[4] = {3, 2, 1, 0};  // UL, UR, LL, LR
  return slot[block_index];
}

}  // namespace detail

namespace detail {

// Crossing pattern of a filled block's 2x2, relative to its inner corner.
enum class BlockPattern {
  TooFew,      // 0 or 1 crossings: never space-efficient
  TwoInnerL,   // inner corner + an orthogonal neighbour (the heavy pair)
  TwoOuterL,   // outer corner + an orthogonal neighbour
  TwoDiagonal, // both crossings on a diagonal: never space-efficient
  Three,       // three crossings; the double arc's position is kept aside
  Four,
};

struct BlockState {
  BlockPattern pattern = BlockPattern::TooFew;
  int count = 0;
  int double_slot = -1;  // for Three: 2x2 slot of the double arc
};

inline BlockState classify_filled(const LayoutMask::Block& block, int block_index,
                                  const std::vector<char>& is_crossing_cell) {
  BlockState st;
  int mask = 0;
  for (int i = 0; i < 4; ++i)
    if (is_crossing_cell[static_cast<std::size_t>(block.inner[static_cast<std::size_t>(i)])])
      mask |= 1 << i;
  st.count = __builtin_popcount(static_cast<unsigned>(mask));
  int ic = inner_corner_slot(block_index);
  int oc = 3 - ic;
  switch (st.count) {
    case 4: st.pattern = BlockPattern::Four; break;
    case 3:
      st.pattern = BlockPattern::Three;
      st.double_slot = __builtin_ctz(static_cast<unsigned>(~mask & 15));
      break;
    case 2:
      if ((mask >> ic) & 1)
        st.pattern = ((mask >> oc) & 1) ? BlockPattern::TwoDiagonal : BlockPattern::TwoInnerL;
      else
        st.pattern = ((mask >> oc) & 1) ? BlockPattern::TwoOuterL : BlockPattern::TwoDiagonal;
      break;
    default: st.pattern = BlockPattern::TooFew; break;
  }
  return st;
}

// block adjacency in the 2x2 arrangement UL,UR,LL,LR
inline bool blocks_adjacent(int a, int b) { return (a ^ b) == 1 || (a ^ b) == 2; }

}  // namespace detail

// Crossing-position part of the observations, for layouts built from corner
// blocks:
//  * every filled block carries 2..4 crossings, and two-crossing blocks use
//    an L around the inner or outer corner (diagonal pairs are never
//    space-efficient);
//  * at most one block in the mosaic is a four-crossing block or an
//    inner-L two-crossing block (otherwise the result is a link);
//  * a partial block without a crossing admits no adjacent outer-L block,
//    and no diagonal outer-L block when a neighbouring block carries three
//    crossings with its double arc at the inner corner;
//  * a partial block with a crossing admits at most one outer-L block.
// These last two reductions come from the layout analysis for the partial
// corner; every configuration they remove redraws with fewer tiles.
inline bool crossing_positions_admissible(const LayoutMask& mask,
                                          const std::vector<char>& is_crossing_cell) {
  if (!mask.has_blocks) return true;
  int heavy = 0;
  std::array<detail::BlockState, 4> states;
  for (int b = 0; b < 4; ++b) {
    const auto& block = mask.blocks[static_cast<std::size_t>(b)];
    if (block.kind != LayoutMask::Block::Kind::Filled) continue;
    auto st = detail::classify_filled(block, b, is_crossing_cell);
    states[static_cast<std::size_t>(b)] = st;
    if (st.pattern == detail::BlockPattern::TooFew ||
        st.pattern == detail::BlockPattern::TwoDiagonal)
      return false;
    if (st.pattern == detail::BlockPattern::Four ||
        st.pattern == detail::BlockPattern::TwoInnerL)
      ++heavy;
  }
  if (heavy > 1) return false;

  // The partial-corner reductions below are proved for the layout with three
  // filled blocks and one partial block; they do not hold with two partial
  // corners.
  int filled_count = 0;
  for (const auto& block : mask.blocks)
    if (block.kind == LayoutMask::Block::Kind::Filled) ++filled_count;
  if (filled_count != 3) return true;

  for (int b = 0; b < 4; ++b) {
    const auto& block = mask.blocks[static_cast<std::size_t>(b)];
    if (block.kind != LayoutMask::Block::Kind::Partial) continue;
    bool p_has_crossing = is_crossing_cell[static_cast<std::size_t>(block.p_center)];
    int outer_l = 0, adjacent_outer_l = 0, diagonal_outer_l = 0, adjacent_three_inner = 0;
    for (int f = 0; f < 4; ++f) {
      if (mask.blocks[static_cast<std::size_t>(f)].kind != LayoutMask::Block::Kind::Filled)
        continue;
      const auto& st = states[static_cast<std::size_t>(f)];
      if (st.pattern == detail::BlockPattern::TwoOuterL) {
        ++outer_l;
        if (detail::blocks_adjacent(b, f)) ++adjacent_outer_l;
        else ++diagonal_outer_l;
      }
      if (st.pattern == detail::BlockPattern::Three &&
          st.double_slot == detail::inner_corner_slot(f) && detail::blocks_adjacent(b, f))
        ++adjacent_three_inner;
    }
    if (!p_has_crossing) {
      if (adjacent_outer_l > 0) return false;
      if (diagonal_outer_l > 0 && adjacent_three_inner > 0) return false;
    } else {
      if (outer_l >= 2) return false;
    }
  }
  return true;
}

// Full observation check on an assembled placement grid: crossing positions
// as above, plus the partial-block centres carrying only a crossing or the
// one valid double arc. Does not apply to layouts without the block
// structure (the 24-tile layout).
inline bool prune_by_observations(const LayoutMask& mask, const Mosaic& placement_grid) {
  if (!mask.has_blocks) return true;
  std::vector<char> is_x(placement_grid.cells().size(), 0);
  for (std::size_t i = 0; i < placement_grid.cells().size(); ++i) {
    Tile t = placement_grid.cells()[i];
    is_x[i] = (t == Tile::CrossingAny || is_crossing(t)) ? 1 : 0;
  }
  if (!crossing_positions_admissible(mask, is_x)) return false;
  for (const auto& block : mask.blocks) {
    if (block.kind != LayoutMask::Block::Kind::Partial) continue;
    Tile t = placement_grid.cells()[static_cast<std::size_t>(block.p_center)];
    if (!is_x[static_cast<std::size_t>(block.p_center)] && t != block.allowed_double)
      return false;
  }
  return true;
}

// --- placement generation ---------------------------------------------------

inline std::vector<Placement> generate_placements(const LayoutMask& mask, int c, bool prune,
                                                  GenCounters* counters = nullptr,
                                                  int threads = 1) {
  int f_total = mask.four_count();
  if (c < 1 || c > f_total)
    throw validation_error("layout " + mask.id + " has " + std::to_string(f_total) +
                           " four-point cells; cannot place " + std::to_string(c) + " crossings");

  // all c-element subsets of the four-point cells, lexicographic
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> comb(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      subsets.push_back(comb);
      int i = c - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == f_total - c + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < c; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  int free_count = f_total - c;
  struct SubsetResult {
    GenCounters counts;
    std::vector<Mosaic> survivors;  // canonical grids passing the component filter
  };
  std::vector<SubsetResult> results(subsets.size());

  auto process_subset = [&](std::size_t si) {
    SubsetResult& out = results[si];
    const std::vector<int>& comb = subsets[si];
    std::vector<char> is_x(mask.grid.cells().size(), 0);
    std::vector<int> free_cells;
    {
      std::vector<char> chosen(static_cast<std::size_t>(f_total), 0);
      for (int idx : comb) {
        chosen[static_cast<std::size_t>(idx)] = 1;
        is_x[static_cast<std::size_t>(mask.four_cells[static_cast<std::size_t>(idx)])] = 1;
      }
      for (int i = 0; i < f_total; ++i)
        if (!chosen[static_cast<std::size_t>(i)])
          free_cells.push_back(mask.four_cells[static_cast<std::size_t>(i)]);
    }
    long long fills = 1LL << free_count;
    out.counts.raw += fills;
    if (prune && !crossing_positions_admissible(mask, is_x)) return;

    // partial-block centres: under pruning, a non-crossing centre admits only
    // its one valid double arc
    std::vector<Tile> forced(free_cells.size(), Tile::Blank);
    if (prune && mask.has_blocks) {
      for (const auto& block : mask.blocks) {
        if (block.kind != LayoutMask::Block::Kind::Partial) continue;
        for (std::size_t i = 0; i < free_cells.size(); ++i)
          if (free_cells[i] == block.p_center) forced[i] = block.allowed_double;
      }
    }

    Mosaic grid = mask.grid;
    for (int idx : comb)
      grid.set(mask.four_cells[static_cast<std::size_t>(idx)] / mask.grid.size(),
               mask.four_cells[static_cast<std::size_t>(idx)] % mask.grid.size(),
               Tile::CrossingAny);
    for (long long fill = 0; fill < fills; ++fill) {
      bool ok = true;
      for (std::size_t i = 0; i < free_cells.size(); ++i) {
        Tile t = ((fill >> i) & 1) ? Tile::DoubleNW_SE : Tile::DoubleNE_SW;
        if (forced[i] != Tile::Blank && t != forced[i]) {
          ok = false;
          break;
        }
        grid.set(free_cells[i] / mask.grid.size(), free_cells[i] % mask.grid.size(), t);
      }
      if (!ok) continue;
      out.counts.obs_pass++;
      TraceResult tr = trace_mosaic(grid);
      if (tr.components != 1) continue;
      out.counts.connected++;
      out.survivors.push_back(canonical_form(grid));
    }
  };

  if (threads <= 1 || subsets.size() < 2) {
    for (std::size_t si = 0; si < subsets.size(); ++si) process_subset(si);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t si = next.fetch_add(1); si < subsets.size(); si = next.fetch_add(1))
          process_subset(si);
      });
    for (auto& th : pool) th.join();
  }

  GenCounters totals;
  std::unordered_set<std::string> seen;
  std::vector<Placement> placements;
  for (const auto& res : results) {
    totals.raw += res.counts.raw;
    totals.obs_pass += res.counts.obs_pass;
    totals.connected += res.counts.connected;
    for (const Mosaic& grid : res.survivors) {
      if (!seen.insert(serialize_mosaic(grid)).second) continue;
      totals.unique++;
      Placement p;
      p.grid = grid;
      p.trace = trace_mosaic(grid);
      for (const auto& site : p.trace.crossings) p.crossing_cells.push_back(site.cell);
      // reducedness is a property of the projection, checked once per placement
      Diagram shadow = diagram_from_trace(p.trace, std::vector<bool>(p.crossing_cells.size(), true));
      if (!is_reduced(shadow)) continue;
      totals.reduced++;
      placements.push_back(std::move(p));
    }
  }
  if (counters) *counters = totals;
  return placements;
}

// --- assignment sweep --------------------------------------------------------

struct WitnessInfo {
  std::string mosaic_text;  // canonical serialized mosaic
  int crossings = 0;
  bool alternating = false;
};

struct SweepResult {
  long long assignments = 0;  // symmetry-reduced assignments processed
  std::map<std::string, WitnessInfo> found;      // unambiguous identifications
  std::set<std::string> alternating_names;       // names seen with alternating assignments
  std::map<std::vector<std::string>, std::string> ambiguous;  // tied names -> witness
  std::map<std::string, std::pair<long long, std::string>> unknown;  // folded Jones -> count, sample
};

namespace detail {

// symmetries fixing the placement grid, as crossing-cell permutations plus a
// flag for whether the symmetry exchanges the two crossing tile kinds
struct StabilizerElement {
  std::vector<int> perm;  // crossing index -> crossing index
  bool flip = false;
};

inline std::vector<StabilizerElement> placement_stabilizer(const Placement& p) {
  std::vector<StabilizerElement> stab;
  int n = p.grid.size();
  for (Sym g : kAllSyms) {
    if (g == Sym::Id) continue;
    if (apply_symmetry(p.grid, g) != p.grid) continue;
    StabilizerElement el;
    el.flip = (sym_tile(g, Tile::CrossHOver) == Tile::CrossVOver);
    el.perm.resize(p.crossing_cells.size());
    bool ok = true;
    for (std::size_t i = 0; i < p.crossing_cells.size(); ++i) {
      int cell = p.crossing_cells[i];
      auto [nr, nc] = sym_cell(g, n, cell / n, cell % n);
      int image = nr * n + nc;
      auto it = std::lower_bound(p.crossing_cells.begin(), p.crossing_cells.end(), image);
      if (it == p.crossing_cells.end() || *it != image) {
        ok = false;
        break;
      }
      el.perm[i] = static_cast<int>(it - p.crossing_cells.begin());
    }
    if (ok) stab.push_back(std::move(el));
  }
  return stab;
}

inline std::uint32_t apply_stabilizer(const StabilizerElement& el, std::uint32_t tau, int c) {
  std::uint32_t out = 0;
  for (int i = 0; i < c; ++i) {
    std::uint32_t bit = (tau >> i) & 1;
    if (el.flip) bit ^= 1;
    out |= bit << el.perm[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace detail

// Per-placement sweep machinery: precomputes the loop counts of all 2^c
// smoothing resolutions once, then reads off the bracket (and Jones) of any
// over/under assignment without another state sum.
class AssignmentSweeper {
 public:
  explicit AssignmentSweeper(const Placement& p) : p_(p), c_(static_cast<int>(p.crossing_cells.size())) {
    const TraceResult& tr = p_.trace;
    std::uint32_t states = 1u << c_;
    loops_.resize(states);
    std::vector<int> parent(static_cast<std::size_t>(tr.edge_count));
    for (std::uint32_t m = 0; m < states; ++m) {
      for (int i = 0; i < tr.edge_count; ++i) parent[static_cast<std::size_t>(i)] = i;
      int classes = tr.edge_count;
      auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
          x = parent[static_cast<std::size_t>(x)] =
              parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
      };
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[static_cast<std::size_t>(b)] = a;
          --classes;
        }
      };
      for (int k = 0; k < c_; ++k) {
        const CrossingTrace& site = tr.crossings[static_cast<std::size_t>(k)];
        auto edge_at = [&](Port port) {
          if (port == site.v_entry) return site.v_in;
          if (port == opposite(site.v_entry)) return site.v_out;
          if (port == site.h_entry) return site.h_in;
          return site.h_out;
        };
        if ((m >> k) & 1) {  // NW-SE double arc
          unite(edge_at(PortN), edge_at(PortW));
          unite(edge_at(PortS), edge_at(PortE));
        } else {  // NE-SW double arc
          unite(edge_at(PortN), edge_at(PortE));
          unite(edge_at(PortS), edge_at(PortW));
        }
      }
      loops_[m] = static_cast<std::uint8_t>(classes);
      max_loops_ = std::max<int>(max_loops_, classes);
    }

    sigma_.resize(static_cast<std::size_t>(c_));
    for (int k = 0; k < c_; ++k) {
      const CrossingTrace& site = tr.crossings[static_cast<std::size_t>(k)];
      Port s3 = ccw_port(ccw_port(ccw_port(site.v_entry)));
      sigma_[static_cast<std::size_t>(k)] = (site.h_entry == s3) ? +1 : -1;
      if (site.h_visit % 2 != 0) alt0_ |= 1u << k;
    }

    std::vector<LaurentPoly> memo;
    for (int l = 0; l < max_loops_; ++l) {
      const LaurentPoly& d = kmos::detail::delta_power(memo, l);
      std::vector<std::pair<int, std::int64_t>> terms;
      for (int e = d.min_exp(); e <= d.max_exp(); ++e)
        if (d.coeff(e) != 0) terms.emplace_back(e, d.coeff(e));
      delta_pow_.push_back(std::move(terms));
    }
    hist_.resize(static_cast<std::size_t>(max_loops_ * (c_ + 1)));
  }

  int crossing_count() const { return c_; }

  // writhe of the assignment; bit k set = vertical-over tile at crossing k
  int writhe_of(std::uint32_t tau) const {
    int w = 0;
    for (int k = 0; k < c_; ++k)
      w += ((tau >> k) & 1) ? -sigma_[static_cast<std::size_t>(k)]
                            : sigma_[static_cast<std::size_t>(k)];
    return w;
  }

  bool is_alternating_assignment(std::uint32_t tau) const {
    std::uint32_t all = (c_ == 32) ? ~0u : ((1u << c_) - 1);
    return tau == alt0_ || tau == (alt0_ ^ all);
  }

  // The A-smoothing of the horizontal-over tile is the NW-SE resolution
  // (bit 1), of the vertical-over tile the NE-SW one, so the A-state count
  // of state m under assignment tau is popcount(m ^ tau).
  LaurentPoly jones_of(std::uint32_t tau) {
    std::fill(hist_.begin(), hist_.end(), 0);
    std::uint32_t states = 1u << c_;
    for (std::uint32_t m = 0; m < states; ++m)
      hist_[static_cast<std::size_t>((loops_[m] - 1) * (c_ + 1)) +
            static_cast<std::size_t>(__builtin_popcount(m ^ tau))]++;
    LaurentPoly bracket;
    for (int l = 0; l < max_loops_; ++l)
      for (int k = 0; k <= c_; ++k) {
        std::int64_t count = hist_[static_cast<std::size_t>(l * (c_ + 1) + k)];
        if (count == 0) continue;
        int a_exp = 2 * k - c_;
        for (const auto& [e, coeff] : delta_pow_[static_cast<std::size_t>(l)])
          bracket.add_term(checked_mul(count, coeff), a_exp + e);
      }
    int w = writhe_of(tau);
    LaurentPoly v;
    std::int64_t sgn = (w % 2 == 0) ? 1 : -1;
    for (int e = bracket.min_exp(); e <= bracket.max_exp(); ++e) {
      std::int64_t coeff = bracket.coeff(e);
      if (coeff == 0) continue;
      int quarter = -(e - 3 * w);
      if (quarter % 4 != 0) throw diagram_error("non-integral Jones exponent in sweep");
      v.add_term(checked_mul(sgn, coeff), quarter / 4);
    }
    return v;
  }

  Diagram diagram_of(std::uint32_t tau) const {
    std::vector<bool> under_vertical(static_cast<std::size_t>(c_));
    for (int k = 0; k < c_; ++k)
      under_vertical[static_cast<std::size_t>(k)] = ((tau >> k) & 1) == 0;
    return diagram_from_trace(p_.trace, under_vertical);
  }

  Mosaic mosaic_of(std::uint32_t tau) const {
    Mosaic grid = p_.grid;
    int n = grid.size();
    for (int k = 0; k < c_; ++k) {
      int cell = p_.crossing_cells[static_cast<std::size_t>(k)];
      grid.set(cell / n, cell % n, ((tau >> k) & 1) ? Tile::CrossVOver : Tile::CrossHOver);
    }
    return grid;
  }

 private:
  const Placement& p_;
  int c_;
  std::vector<std::uint8_t> loops_;
  int max_loops_ = 0;
  std::vector<int> sigma_;
  std::uint32_t alt0_ = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> delta_pow_;
  std::vector<std::int64_t> hist_;
};

// Sweeps all 2^c over/under assignments of one placement (deduplicated by the
// placement's stabilizer) and identifies every resulting knot.
inline SweepResult sweep_assignments(const Placement& p, const KnotIndex& index) {
  SweepResult out;
  int c = static_cast<int>(p.crossing_cells.size());
  AssignmentSweeper sweeper(p);
  auto stab = detail::placement_stabilizer(p);
  std::uint32_t states = 1u << c;

  for (std::uint32_t tau = 0; tau < states; ++tau) {
    bool canonical = true;
    for (const auto& el : stab) {
      if (detail::apply_stabilizer(el, tau, c) < tau) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    out.assignments++;

    LaurentPoly folded = fold_jones(sweeper.jones_of(tau));
    std::string jones_key = folded.str();
    bool alternating = sweeper.is_alternating_assignment(tau);

    const std::vector<int>* candidates = index.candidates_by_jones(jones_key);
    if (!candidates) {
      auto& slot = out.unknown[jones_key];
      if (slot.first == 0) slot.second = serialize_mosaic(canonical_form(sweeper.mosaic_of(tau)));
      slot.first++;
      continue;
    }

    // confirm with the exact Alexander polynomial and determinant
    Diagram d = sweeper.diagram_of(tau);
    LaurentPoly alex = alexander(d);
    std::int64_t det = knot_determinant(d);
    std::vector<std::string> names;
    for (int ci : *candidates) {
      const KnotRecord& rec = index.record(ci);
      if (rec.fp.det == det && rec.fp.alex == alex) names.push_back(rec.name);
    }

    std::string witness = serialize_mosaic(canonical_form(sweeper.mosaic_of(tau)));
    if (names.empty()) {
      Fingerprint fp;
      fp.jones_folded = folded;
      fp.alex = alex;
      fp.det = det;
      auto& slot = out.unknown[fp.key()];
      if (slot.first == 0 || witness < slot.second) slot.second = witness;
      slot.first++;
    } else if (names.size() == 1) {
      auto& info = out.found[names[0]];
      if (info.mosaic_text.empty() || witness < info.mosaic_text) {
        info.mosaic_text = witness;
        info.crossings = c;
        info.alternating = alternating;
      }
      if (alternating) out.alternating_names.insert(names[0]);
    } else {
      std::sort(names.begin(), names.end());
      auto it = out.ambiguous.find(names);
      if (it == out.ambiguous.end() || witness < it->second) out.ambiguous[names] = witness;
    }
  }
  return out;
}

}  // namespace kmos
