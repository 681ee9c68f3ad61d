#include <catch2/catch_amalgamated.hpp>

#include "kmos/laurent.hpp"

using kmos::LaurentPoly;

TEST_CASE("basic arithmetic") {
  LaurentPoly t = LaurentPoly::variable();
  LaurentPoly p = t * t - LaurentPoly::constant(2) * t + LaurentPoly::one();
  REQUIRE(p.coeff(2) == 1);
  REQUIRE(p.coeff(1) == -2);
  REQUIRE(p.coeff(0) == 1);
  REQUIRE(p.eval(1) == 0);
  REQUIRE(p.eval(-1) == 4);
}

TEST_CASE("negative exponents and reversal") {
  LaurentPoly p = LaurentPoly::term(1, -1) + LaurentPoly::term(-1, 0) + LaurentPoly::term(1, 1);
  REQUIRE(p.min_exp() == -1);
  REQUIRE(p.max_exp() == 1);
  REQUIRE(p.reversed() == p);
  REQUIRE(p.is_palindromic());
  REQUIRE(p.eval(1) == 1);
  REQUIRE(p.eval(-1) == -3);
}

TEST_CASE("cancellation trims to zero") {
  LaurentPoly p = LaurentPoly::term(3, 5);
  p.add_term(-3, 5);
  REQUIRE(p.is_zero());
  REQUIRE(p.str() == "0");
}

TEST_CASE("text round trip") {
  LaurentPoly p = LaurentPoly::term(-1, -2) + LaurentPoly::term(3, 0) + LaurentPoly::term(7, 4);
  std::string s = p.str();
  REQUIRE(s == "-1*t^-2+3*t^0+7*t^4");
  REQUIRE(LaurentPoly::parse(s) == p);
  REQUIRE(LaurentPoly::parse("0").is_zero());
}

TEST_CASE("exact division") {
  LaurentPoly t = LaurentPoly::variable();
  LaurentPoly a = (t - LaurentPoly::one()) * (t + LaurentPoly::constant(3)) * LaurentPoly::term(1, -2);
  LaurentPoly q = a.divided_exact(t - LaurentPoly::one());
  REQUIRE(q == (t + LaurentPoly::constant(3)) * LaurentPoly::term(1, -2));
  REQUIRE_THROWS_AS(a.divided_exact(t + LaurentPoly::one()), kmos::poly_error);
}

TEST_CASE("overflow is detected") {
  LaurentPoly big = LaurentPoly::constant(std::numeric_limits<std::int64_t>::max());
  REQUIRE_THROWS_AS(big + LaurentPoly::one(), kmos::overflow_error);
  REQUIRE_THROWS_AS(big * LaurentPoly::constant(2), kmos::overflow_error);
}

TEST_CASE("ordering is total and deterministic") {
  LaurentPoly a = LaurentPoly::term(1, -1);
  LaurentPoly b = LaurentPoly::term(1, 0);
  REQUIRE(a < b);
  REQUIRE(!(b < a));
  REQUIRE(LaurentPoly{} < a);
}
