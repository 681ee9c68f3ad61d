#include <catch2/catch_amalgamated.hpp>

#include "kmos/invariants.hpp"
#include "kmos/mosaic.hpp"
#include "kmos/trace.hpp"
#include "oracles.hpp"

using namespace kmos;

namespace {

Mosaic trefoil4() {
  return parse_mosaic(
      "0 2 1 0\n"
      "2 9 10 1\n"
      "3 10 8 4\n"
      "0 3 4 0\n");
}

Mosaic kink4() {
  return parse_mosaic(
      "0 2 1 0\n"
      "2 9 4 0\n"
      "3 4 0 0\n"
      "0 0 0 0\n");
}

LaurentPoly poly(const std::string& s) { return LaurentPoly::parse(s); }

}  // namespace

TEST_CASE("bracket of the unknot and kinks") {
  REQUIRE(kauffman_bracket(Diagram::unknot()) == LaurentPoly::one());
  LaurentPoly b = kauffman_bracket(to_diagram(kink4()));
  bool pos = b == poly("-1*t^3");
  bool neg = b == poly("-1*t^-3");
  REQUIRE((pos || neg));
  // a kink diagram still evaluates to the unknot's Jones polynomial
  REQUIRE(jones(to_diagram(kink4())) == LaurentPoly::one());
}

TEST_CASE("jones of the trefoil, both chiralities") {
  Diagram right = to_diagram(trefoil4());
  REQUIRE(writhe(right) == 3);
  REQUIRE(jones(right) == poly("1*t^1+1*t^3-1*t^4"));

  Diagram left = to_diagram(apply_symmetry(trefoil4(), Sym::FlipH));
  REQUIRE(jones(left) == poly("-1*t^-4+1*t^-3+1*t^-1"));
  REQUIRE(jones(left) == jones(right).reversed());
  REQUIRE(fold_jones(jones(left)) == fold_jones(jones(right)));
}

TEST_CASE("figure-eight from its braid word") {
  Diagram d = oracle::braid_closure(3, {1, -2, 1, -2});
  REQUIRE(d.crossing_count() == 4);
  REQUIRE(writhe(d) == 0);
  REQUIRE(jones(d) == poly("1*t^-2-1*t^-1+1*t^0-1*t^1+1*t^2"));
  REQUIRE(alexander(d) == poly("-1*t^-1+3*t^0-1*t^1"));
  REQUIRE(knot_determinant(d) == 5);
  // amphichiral: folded Jones equals the Jones itself
  REQUIRE(fold_jones(jones(d)) == jones(d));
}

TEST_CASE("alexander and determinant of small knots") {
  Diagram trefoil = to_diagram(trefoil4());
  REQUIRE(alexander(trefoil) == poly("1*t^-1-1*t^0+1*t^1"));
  REQUIRE(knot_determinant(trefoil) == 3);
  REQUIRE(std::abs(alexander(trefoil).eval(-1)) == 3);

  REQUIRE(alexander(Diagram::unknot()) == LaurentPoly::one());
  REQUIRE(knot_determinant(Diagram::unknot()) == 1);
  REQUIRE(alexander(to_diagram(kink4())) == LaurentPoly::one());

  // cinquefoil = closure of sigma_1^5 on two strands
  Diagram cinq = oracle::braid_closure(2, {1, 1, 1, 1, 1});
  REQUIRE(alexander(cinq) == poly("1*t^-2-1*t^-1+1*t^0-1*t^1+1*t^2"));
  REQUIRE(knot_determinant(cinq) == 5);
  REQUIRE(jones(cinq) == poly("1*t^2+1*t^4-1*t^5+1*t^6-1*t^7"));
}

TEST_CASE("braid trefoil matches the mosaic trefoil") {
  Diagram braid = oracle::braid_closure(2, {1, 1, 1});
  Diagram mosaic = to_diagram(trefoil4());
  REQUIRE(writhe(braid) == 3);
  REQUIRE(jones(braid) == jones(mosaic));
  REQUIRE(alexander(braid) == alexander(mosaic));
  REQUIRE(fingerprint(braid) == fingerprint(mosaic));
}

TEST_CASE("state sum agrees with the recursive smoothing oracle") {
  std::vector<Diagram> cases = {
      to_diagram(trefoil4()),
      to_diagram(kink4()),
      oracle::braid_closure(3, {1, -2, 1, -2}),
      oracle::braid_closure(2, {1, 1, 1, 1, 1}),
      oracle::braid_closure(3, {1, 1, -2, 1, -2, -2}),
      oracle::braid_closure(2, {-1, -1, -1}),
  };
  for (const auto& d : cases) REQUIRE(kauffman_bracket(d) == oracle::bracket_recursive(d));
}

TEST_CASE("mirror behaviour of the invariants") {
  Diagram d = oracle::braid_closure(3, {1, 1, -2, 1, -2, -2});  // a 6-crossing knot
  Diagram m = d.mirrored();
  REQUIRE(jones(m) == jones(d).reversed());
  REQUIRE(alexander(m) == alexander(d));
  REQUIRE(knot_determinant(m) == knot_determinant(d));
  REQUIRE(fingerprint(m) == fingerprint(d));
}

TEST_CASE("properties on a bag of diagrams") {
  std::vector<Diagram> cases = {
      Diagram::unknot(),
      to_diagram(trefoil4()),
      to_diagram(kink4()),
      oracle::braid_closure(3, {1, -2, 1, -2}),
      oracle::braid_closure(2, {1, 1, 1, 1, 1, 1, 1}),
      oracle::braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2}),  // (3,4) torus knot
  };
  for (const auto& d : cases) {
    LaurentPoly v = jones(d);
    REQUIRE(v.eval(1) == 1);                          // V(1) = 1 for knots
    REQUIRE(knot_determinant(d) % 2 == 1);            // determinant is odd
    LaurentPoly a = alexander(d);
    REQUIRE(a == a.reversed());                       // symmetric
    REQUIRE(a.eval(1) == 1);
    REQUIRE(knot_determinant(d) == std::abs(a.eval(-1)));
  }
}

TEST_CASE("bracket refuses oversized state sums") {
  Diagram big = oracle::braid_closure(2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  REQUIRE_THROWS_AS(kauffman_bracket(big, 16), resource_error);
}

TEST_CASE("fingerprint keys are stable text") {
  Fingerprint fp = fingerprint(to_diagram(trefoil4()));
  REQUIRE(fp.key() == fingerprint(oracle::braid_closure(2, {-1, -1, -1})).key());
  REQUIRE(fp.det == 3);
}
