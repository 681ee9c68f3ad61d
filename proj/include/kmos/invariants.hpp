// Exact polynomial knot invariants: Kauffman bracket, Jones polynomial,
// Alexander polynomial, determinant, and the chirality-folded fingerprint
// used for identification.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "kmos/diagram.hpp"
#include "kmos/laurent.hpp"

namespace kmos {

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns true if the two were in distinct classes
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// delta = -A^2 - A^-2; powers are memoized per call site.
inline const LaurentPoly& delta_power(std::vector<LaurentPoly>& memo, int k) {
  if (memo.empty()) {
    memo.push_back(LaurentPoly::one());
    LaurentPoly delta;
    delta.add_term(-1, 2);
    delta.add_term(-1, -2);
    memo.push_back(delta);
  }
  while (static_cast<int>(memo.size()) <= k) memo.push_back(memo.back() * memo[1]);
  return memo[static_cast<std::size_t>(k)];
}

}  // namespace detail

// Kauffman bracket by direct state sum, exact in the variable A.
// The A-smoothing of a crossing joins slots (0,1) and (2,3); with slot 0 the
// incoming under-strand this is the standard convention (a positive kink
// contributes -A^3).
inline LaurentPoly kauffman_bracket(const Diagram& d, int max_crossings = 16) {
  int c = d.crossing_count();
  if (c > max_crossings)
    throw resource_error("state sum over " + std::to_string(c) +
                         " crossings exceeds the configured limit of " +
                         std::to_string(max_crossings));
  std::vector<LaurentPoly> delta_memo;
  LaurentPoly bracket;
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    detail::UnionFind uf(d.arc_count());
    int loops = d.arc_count();
    for (int i = 0; i < c; ++i) {
      const auto& arcs = d.crossings()[static_cast<std::size_t>(i)].arcs;
      bool b_smoothing = (state >> i) & 1;
      if (b_smoothing) {
        if (uf.unite(arcs[0], arcs[3])) --loops;
        if (uf.unite(arcs[1], arcs[2])) --loops;
      } else {
        if (uf.unite(arcs[0], arcs[1])) --loops;
        if (uf.unite(arcs[2], arcs[3])) --loops;
      }
    }
    int a_minus_b = c - 2 * __builtin_popcount(state);
    LaurentPoly term = detail::delta_power(delta_memo, loops - 1).shifted(a_minus_b);
    bracket += term;
  }
  return bracket;
}

// Jones polynomial V(t) = (-A)^{-3w} <D> with A = t^{-1/4}. For knots every
// exponent is an integer; a non-integral exponent means the input was not a
// single-component diagram.
inline LaurentPoly jones(const Diagram& d, int max_crossings = 16) {
  LaurentPoly bracket = kauffman_bracket(d, max_crossings);
  int w = writhe(d);
  LaurentPoly v;
  if (bracket.is_zero()) return v;
  std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  for (int e = bracket.min_exp(); e <= bracket.max_exp(); ++e) {
    std::int64_t coeff = bracket.coeff(e);
    if (coeff == 0) continue;
    int quarter = -(e - 3 * w);  // t-exponent in quarter units
    if (quarter % 4 != 0)
      throw diagram_error("Jones exponent is not integral; diagram is not a knot");
    v.add_term(checked_mul(sign, coeff), quarter / 4);
  }
  return v;
}

namespace detail {

// Fraction-free Bareiss determinant over an integral domain.
template <typename Ring, typename MulT, typename SubT, typename DivT, typename ZeroT>
Ring bareiss_det(std::vector<std::vector<Ring>>& m, const Ring& one_value, MulT mul, SubT sub,
                 DivT div, ZeroT is_zero_fn) {
  int n = static_cast<int>(m.size());
  if (n == 0) return one_value;
  Ring prev = one_value;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero_fn(m[k][k])) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!is_zero_fn(m[r][k])) {
          pivot = r;
          break;
        }
      if (pivot == -1) return Ring{};  // determinant is zero
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
      m[i][k] = Ring{};
    }
    prev = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  if (sign < 0) det = sub(Ring{}, det);
  return det;
}

// Wirtinger over-arc classes: arcs merged across each crossing's over-strand.
// A knot diagram with c crossings has exactly c of them.
inline std::vector<int> over_arc_classes(const Diagram& d) {
  int c = d.crossing_count();
  UnionFind uf(d.arc_count());
  for (const auto& x : d.crossings()) uf.unite(x.over_in(), x.over_out());
  std::vector<int> root_to_class(d.arc_count(), -1);
  std::vector<int> arc_class(d.arc_count(), -1);
  int next = 0;
  for (int a = 0; a < d.arc_count(); ++a) {
    int r = uf.find(a);
    if (root_to_class[r] == -1) root_to_class[r] = next++;
    arc_class[a] = root_to_class[r];
  }
  if (next != c) throw diagram_error("over-arc count mismatch; not a knot diagram");
  return arc_class;
}

}  // namespace detail

// Alexander polynomial, normalized to symmetric exponents with value +1 at
// t = 1. Computed from the Wirtinger presentation: positive crossings give a
// row (1-t, t, -1) on (over, under-in, under-out), negative (t-1, 1, -t);
// one row and one column are deleted before the determinant.
inline LaurentPoly alexander(const Diagram& d) {
  int c = d.crossing_count();
  if (c == 0) return LaurentPoly::one();
  std::vector<int> arc_class = detail::over_arc_classes(d);

  LaurentPoly t = LaurentPoly::variable();
  LaurentPoly one = LaurentPoly::one();
  int m = c - 1;
  std::vector<std::vector<LaurentPoly>> mat(m, std::vector<LaurentPoly>(m));
  auto add_entry = [&](int row, int col, const LaurentPoly& v) {
    if (row < m && col < m) mat[row][col] += v;
  };
  for (int i = 0; i < c; ++i) {
    const auto& x = d.crossings()[static_cast<std::size_t>(i)];
    int over = arc_class[x.over_in()];
    int uin = arc_class[x.under_in()];
    int uout = arc_class[x.under_out()];
    if (x.sign > 0) {
      add_entry(i, over, one - t);
      add_entry(i, uin, t);
      add_entry(i, uout, one.negated());
    } else {
      add_entry(i, over, t - one);
      add_entry(i, uin, one);
      add_entry(i, uout, t.negated());
    }
  }
  if (m == 0) return LaurentPoly::one();

  LaurentPoly det = detail::bareiss_det<LaurentPoly>(
      mat, one, [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; },
      [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; },
      [](const LaurentPoly& a, const LaurentPoly& b) { return a.divided_exact(b); },
      [](const LaurentPoly& p) { return p.is_zero(); });
  if (det.is_zero()) throw diagram_error("degenerate Alexander matrix; not a knot diagram");

  int shift_twice = det.min_exp() + det.max_exp();
  if (shift_twice % 2 != 0)
    throw diagram_error("Alexander polynomial cannot be symmetrized; not a knot diagram");
  LaurentPoly norm = det.shifted(-shift_twice / 2);
  std::int64_t at_one = norm.eval(1);
  if (at_one != 1 && at_one != -1)
    throw diagram_error("Alexander polynomial has |value| != 1 at t=1");
  if (at_one < 0) norm = norm.negated();
  if (!norm.is_palindromic())
    throw diagram_error("Alexander polynomial failed the symmetry check");
  return norm;
}

// |Delta(-1)|, computed directly over the integers (no polynomial work).
inline std::int64_t knot_determinant(const Diagram& d) {
  int c = d.crossing_count();
  if (c == 0) return 1;
  std::vector<int> arc_class = detail::over_arc_classes(d);
  int m = c - 1;
  if (m == 0) return 1;
  std::vector<std::vector<std::int64_t>> mat(m, std::vector<std::int64_t>(m, 0));
  auto add_entry = [&](int row, int col, std::int64_t v) {
    if (row < m && col < m) mat[row][col] = checked_add(mat[row][col], v);
  };
  for (int i = 0; i < c; ++i) {
    const auto& x = d.crossings()[static_cast<std::size_t>(i)];
    // entries at t = -1
    if (x.sign > 0) {
      add_entry(i, arc_class[x.over_in()], 2);
      add_entry(i, arc_class[x.under_in()], -1);
      add_entry(i, arc_class[x.under_out()], -1);
    } else {
      add_entry(i, arc_class[x.over_in()], -2);
      add_entry(i, arc_class[x.under_in()], 1);
      add_entry(i, arc_class[x.under_out()], 1);
    }
  }
  std::int64_t det = detail::bareiss_det<std::int64_t>(
      mat, 1, checked_mul, [](std::int64_t a, std::int64_t b) { return checked_add(a, -b); },
      [](std::int64_t a, std::int64_t b) { return a / b; },
      [](std::int64_t v) { return v == 0; });
  return det < 0 ? -det : det;
}

// Chirality-folded identification key. Mirroring a knot sends V(t) to V(1/t)
// and fixes the normalized Alexander polynomial, so taking the lexicographic
// minimum of the two Jones readings makes the triple mirror-invariant.
struct Fingerprint {
  LaurentPoly jones_folded;
  LaurentPoly alex;
  std::int64_t det = 0;

  std::string key() const {
    return jones_folded.str() + "|" + alex.str() + "|" + std::to_string(det);
  }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline LaurentPoly fold_jones(const LaurentPoly& v) {
  LaurentPoly r = v.reversed();
  return r < v ? r : v;
}

inline Fingerprint fingerprint(const Diagram& d, int max_crossings = 16) {
  Fingerprint fp;
  fp.jones_folded = fold_jones(jones(d, max_crossings));
  fp.alex = alexander(d);
  fp.det = knot_determinant(d);
  return fp;
}

}  // namespace kmos
