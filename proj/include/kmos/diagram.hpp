// Oriented planar diagrams of knots: the PD representation used by tracing,
// the invariants, and the knot table.
//
// Conventions, fixed once for the whole project:
//   * Each crossing stores its four incident arc labels in counterclockwise
//     planar order starting with the incoming under-strand (slot 0). The
//     under-strand leaves through slot 2; the over-strand occupies slots 1,3.
//   * sign = +1 when the over-strand enters through slot 3, -1 through slot 1.
//   * Arc labels follow the traversal: arc a ends where arc a+1 (mod 2c)
//     begins, at the same crossing.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmos {

struct diagram_error : std::runtime_error {
  explicit diagram_error(const std::string& what) : std::runtime_error(what) {}
};

struct CrossingPD {
  std::array<int, 4> arcs;  // arc ids, slot 0 = under-in, CCW order
  std::int8_t sign;         // +1: over-in at slot 3, -1: over-in at slot 1

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }
  int over_in_slot() const { return sign > 0 ? 3 : 1; }
};

class Diagram {
 public:
  Diagram() = default;
  Diagram(int n_arcs, std::vector<CrossingPD> crossings)
      : n_arcs_(n_arcs), crossings_(std::move(crossings)) {
    build_slots();
  }

  static Diagram unknot() { return Diagram(1, {}); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return n_arcs_; }
  const std::vector<CrossingPD>& crossings() const { return crossings_; }

  // (crossing, slot) pairs where each arc is incident; every arc has exactly
  // two across the diagram.
  struct SlotRef {
    int crossing;
    int slot;
  };
  const std::array<SlotRef, 2>& arc_slots(int arc) const { return arc_slots_[arc]; }

  Diagram mirrored() const {
    // Swap over and under: rotate each crossing's slots by one so the old
    // over-in becomes the new under-in; planar cyclic order is preserved.
    std::vector<CrossingPD> out;
    out.reserve(crossings_.size());
    for (const auto& x : crossings_) {
      CrossingPD m{};
      int s = x.over_in_slot();
      for (int k = 0; k < 4; ++k) m.arcs[k] = x.arcs[(s + k) & 3];
      // Old under-in sits at the new slot (4-s); its role as incoming strand
      // is unchanged, so the new sign is read off from the new slot layout.
      m.sign = (s == 3) ? -1 : +1;
      out.push_back(m);
    }
    return Diagram(n_arcs_, std::move(out));
  }

 private:
  void build_slots() {
    if (n_arcs_ <= 0) throw diagram_error("diagram needs at least one arc");
    arc_slots_.assign(n_arcs_, {SlotRef{-1, -1}, SlotRef{-1, -1}});
    std::vector<int> seen(n_arcs_, 0);
    for (int i = 0; i < crossing_count(); ++i) {
      for (int s = 0; s < 4; ++s) {
        int a = crossings_[i].arcs[s];
        if (a < 0 || a >= n_arcs_) throw diagram_error("arc label out of range");
        if (seen[a] >= 2) throw diagram_error("arc label used more than twice");
        arc_slots_[a][seen[a]++] = SlotRef{i, s};
      }
    }
    if (!crossings_.empty()) {
      for (int a = 0; a < n_arcs_; ++a)
        if (seen[a] != 2) throw diagram_error("arc label must appear exactly twice");
    }
  }

  int n_arcs_ = 0;
  std::vector<CrossingPD> crossings_;
  std::vector<std::array<SlotRef, 2>> arc_slots_;
};

inline int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

// Relabels arcs so they follow the traversal (arc a arrives where arc a+1
// departs), the normal form assumed by the X(...) text format. Requires a
// single-component diagram.
inline Diagram relabeled_along_traversal(const Diagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<int> newlabel(static_cast<std::size_t>(d.arc_count()), -1);
  int a = 0, next = 0;
  do {
    if (newlabel[static_cast<std::size_t>(a)] != -1)
      throw diagram_error("traversal revisited an arc; inconsistent diagram");
    newlabel[static_cast<std::size_t>(a)] = next++;
    // find the incoming end of arc a
    int cx = -1, slot = -1;
    for (const auto& ref : d.arc_slots(a)) {
      const auto& x = d.crossings()[static_cast<std::size_t>(ref.crossing)];
      if (ref.slot == 0 || ref.slot == x.over_in_slot()) {
        cx = ref.crossing;
        slot = ref.slot;
      }
    }
    if (cx < 0) throw diagram_error("arc with no incoming end; inconsistent diagram");
    a = d.crossings()[static_cast<std::size_t>(cx)].arcs[(slot + 2) & 3];
  } while (a != 0);
  if (next != d.arc_count())
    throw diagram_error("traversal did not cover the diagram; not a knot");
  std::vector<CrossingPD> out = d.crossings();
  for (auto& x : out)
    for (int s = 0; s < 4; ++s) x.arcs[s] = newlabel[static_cast<std::size_t>(x.arcs[s])];
  return Diagram(d.arc_count(), std::move(out));
}

// Face structure of the underlying 4-valent planar graph. Faces are traversed
// with darts: the dart arriving at slot s of a crossing continues with the
// dart leaving through slot (s+1) mod 4. For a connected knot diagram Euler's
// formula forces exactly c+2 faces; anything else means the diagram is not
// realizable in the plane as encoded.
struct FaceData {
  int face_count = 0;
  // face id of the corner between slots (k, k+1) at each crossing
  std::vector<std::array<int, 4>> corner_face;
};

inline FaceData compute_faces(const Diagram& d) {
  int c = d.crossing_count();
  FaceData out;
  if (c == 0) {
    out.face_count = 2;
    return out;
  }
  // darts: 2 per arc. dart (a,0) = from arc_slots[a][0] towards [1],
  // dart (a,1) = the reverse.
  std::vector<std::array<int, 2>> dart_face(d.arc_count(), {-1, -1});
  out.corner_face.assign(c, {-1, -1, -1, -1});
  int face_id = 0;
  for (int a0 = 0; a0 < d.arc_count(); ++a0) {
    for (int e0 = 0; e0 < 2; ++e0) {
      if (dart_face[a0][e0] != -1) continue;
      int a = a0, e = e0;
      while (dart_face[a][e] == -1) {
        dart_face[a][e] = face_id;
        auto head = d.arc_slots(a)[e == 0 ? 1 : 0];
        // the face covers the corner between slots (head.slot, head.slot+1)
        out.corner_face[head.crossing][head.slot] = face_id;
        int next_slot = (head.slot + 1) & 3;
        int next_arc = d.crossings()[head.crossing].arcs[next_slot];
        auto ends = d.arc_slots(next_arc);
        // leave through next_slot: pick the dart whose tail is this slot
        int dir = (ends[0].crossing == head.crossing && ends[0].slot == next_slot) ? 0 : 1;
        a = next_arc;
        e = dir;
      }
      ++face_id;
    }
  }
  out.face_count = face_id;
  if (out.face_count != c + 2)
    throw diagram_error("diagram is not planar as encoded (Euler check failed: " +
                        std::to_string(out.face_count) + " faces for " + std::to_string(c) +
                        " crossings)");
  return out;
}

// A crossing is nugatory when two diagonally opposite corners lie in the same
// face; a diagram is reduced when no crossing is nugatory.
inline bool is_reduced(const Diagram& d) {
  if (d.crossing_count() == 0) return true;
  FaceData f = compute_faces(d);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& cf = f.corner_face[i];
    if (cf[0] == cf[2] || cf[1] == cf[3]) return false;
  }
  return true;
}

// True when the traversal alternates over/under. Relies on arc labels being
// traversal-ordered (arc a arrives where arc a+1 departs).
inline bool is_alternating(const Diagram& d) {
  int c = d.crossing_count();
  if (c == 0) return true;
  int prev = -1, first = -1;
  for (int a = 0; a < d.arc_count(); ++a) {
    // the head of arc a: the slot where a is the incoming strand
    const auto& ends = d.arc_slots(a);
    int over = -1;
    for (const auto& ref : ends) {
      const auto& x = d.crossings()[ref.crossing];
      if (ref.slot == 0 && x.arcs[0] == a) over = 0;
      if (ref.slot == x.over_in_slot() && x.arcs[ref.slot] == a) over = 1;
    }
    if (over == -1) throw diagram_error("arc labels are not traversal-ordered");
    if (first == -1) first = over;
    if (prev != -1 && prev == over) return false;
    prev = over;
  }
  return prev != first;  // cyclic closure must alternate too
}

// --- PD text form: X(a,b,c,d);X(...) with 1-based arc labels ---------------

inline std::string pd_to_string(const Diagram& d) {
  if (d.crossing_count() == 0) return "PD[]";
  std::string out = "PD[";
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& x = d.crossings()[i];
    if (i) out += ';';
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += std::to_string(x.arcs[s] + 1);
    }
    out += ')';
  }
  out += ']';
  return out;
}

// Parses the X(a,b,c,d) list form. Slot 0 is the incoming under-strand; the
// over-strand direction is inferred from the traversal numbering (the over
// strand leaves through the label that follows its entry label cyclically).
inline Diagram parse_pd(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("PD[", 0) == 0) {
    if (s.back() != ']') throw diagram_error("unterminated PD[...]");
    s = s.substr(3, s.size() - 4);
  }
  if (s.empty()) return Diagram::unknot();

  std::vector<std::array<int, 4>> quads;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ';' || s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != 'X' || i + 1 >= s.size() || s[i + 1] != '(')
      throw diagram_error("expected X(...) in PD code");
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw diagram_error("unterminated X(...)");
    std::array<int, 4> q{};
    std::size_t pos = i + 2;
    for (int k = 0; k < 4; ++k) {
      std::size_t end = (k < 3) ? s.find(',', pos) : close;
      if (end == std::string::npos || end > close) throw diagram_error("X(...) needs 4 labels");
      q[k] = std::stoi(s.substr(pos, end - pos));
      pos = end + 1;
    }
    quads.push_back(q);
    i = close + 1;
  }

  int n_arcs = static_cast<int>(quads.size()) * 2;
  std::vector<CrossingPD> crossings;
  crossings.reserve(quads.size());
  auto follows = [n_arcs](int next, int prev) {
    return next == (prev % n_arcs) + 1;  // labels are 1-based here
  };
  for (const auto& q : quads) {
    CrossingPD x{};
    for (int k = 0; k < 4; ++k) {
      if (q[k] < 1 || q[k] > n_arcs) throw diagram_error("PD arc label out of range");
      x.arcs[k] = q[k] - 1;
    }
    if (follows(q[3], q[1]))
      x.sign = -1;  // over runs slot1 -> slot3
    else if (follows(q[1], q[3]))
      x.sign = +1;  // over runs slot3 -> slot1
    else
      throw diagram_error("cannot orient over-strand in X(" + std::to_string(q[0]) + ",...)");
    crossings.push_back(x);
  }
  return Diagram(n_arcs, std::move(crossings));
}

}  // namespace kmos
