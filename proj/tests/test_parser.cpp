#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parser.hpp"

using namespace polyfib;

TEST_CASE("basic expressions") {
  BPoly X = BPoly::x(), Y = BPoly::y();
  CHECK(parse_polynomial("x") == X);
  CHECK(parse_polynomial("x*y") == X * Y);
  CHECK(parse_polynomial("x*(x*y+1)") ==
        X * (X * Y + BPoly::constant(FElem(1))));
  CHECK(parse_polynomial("x^3") == X * X * X);
  CHECK(parse_polynomial("-x") == -X);
  CHECK(parse_polynomial("2/3*x - 1/3") ==
        X * FElem(Rat(2, 3)) - BPoly::constant(FElem(Rat(1, 3))));
  CHECK(parse_polynomial("x - - y") == X + Y);
  CHECK(parse_polynomial("(x+y)^2") == X * X + X * Y + X * Y + Y * Y);
  CHECK(parse_polynomial("u*v", "u", "v") == X * Y);
}

TEST_CASE("Briancon expression matches the constructed polynomial") {
  BPoly X = BPoly::x(), Y = BPoly::y();
  BPoly s = X * Y + BPoly::constant(FElem(1));
  BPoly p = X * s + BPoly::constant(FElem(1));
  BPoly f = Y * p * p * p + p * p * s - p * s * BPoly::constant(FElem(Rat(5, 3))) -
            s * BPoly::constant(FElem(Rat(1, 3)));
  BPoly g = parse_polynomial(
      "y*(x*(x*y+1)+1)^3 + (x*(x*y+1)+1)^2*(x*y+1) - "
      "5/3*(x*(x*y+1)+1)*(x*y+1) - 1/3*(x*y+1)");
  CHECK(f == g);
  CHECK(g.total_deg() == 10);
}

TEST_CASE("errors carry a position") {
  CHECK_THROWS_AS(parse_polynomial(""), InputError);
  CHECK_THROWS_AS(parse_polynomial("x+"), InputError);
  CHECK_THROWS_AS(parse_polynomial("x*z"), InputError);
  CHECK_THROWS_AS(parse_polynomial("x y"), InputError);  // implicit product
  CHECK_THROWS_AS(parse_polynomial("x^-2"), InputError);
  CHECK_THROWS_AS(parse_polynomial("1/0"), InputError);
  CHECK_THROWS_AS(parse_polynomial("(x"), InputError);
  try {
    parse_polynomial("x*z");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips") {
  for (const char* t : {"x", "x*y", "x*(x*y+1)", "-x+2/3*y^4-1/3",
                        "y*(x*(x*y+1)+1)^3 + (x*(x*y+1)+1)^2*(x*y+1) - "
                        "5/3*(x*(x*y+1)+1)*(x*y+1) - 1/3*(x*y+1)",
                        "0", "7/2"}) {
    BPoly f = parse_polynomial(t);
    std::string s = poly_to_string(f);
    CHECK(parse_polynomial(s) == f);
    CHECK(poly_to_string(parse_polynomial(s)) == s);
  }
}
