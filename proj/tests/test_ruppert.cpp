#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nffactor.hpp"
#include "ruppert.hpp"

using namespace polyfib;

namespace {

BPoly bp(std::vector<std::tuple<long, int, int>> terms) {
  BPoly g;
  for (auto& [c, ex, ey] : terms) g = g + BPoly::monomial(FElem(c), ex, ey);
  return g;
}

}  // namespace

TEST_CASE("absolute factor counts") {
  // Irreducible over Q but split over C.
  CHECK(absolute_factor_count(bp({{1, 2, 0}, {1, 0, 2}})) == 2);   // x^2+y^2
  CHECK(absolute_factor_count(bp({{1, 2, 0}, {-2, 0, 2}})) == 2);  // x^2-2y^2
  // Absolutely irreducible.
  CHECK(absolute_factor_count(bp({{1, 1, 1}, {-1, 0, 0}})) == 1);  // xy-1
  CHECK(absolute_factor_count(bp({{1, 0, 2}, {-1, 3, 0}})) == 1);  // y^2-x^3
  CHECK(absolute_factor_count(bp({{1, 1, 0}, {1, 0, 1}})) == 1);   // x+y
  // Visible rational factors add up.
  BPoly g = bp({{1, 2, 0}, {1, 0, 2}}) * bp({{1, 0, 1}, {-1, 1, 0}});
  CHECK(absolute_factor_count(g) == 3);  // (x^2+y^2)(y-x)
  // No x at all: splits into deg_y linear factors over C.
  CHECK(absolute_factor_count(bp({{1, 0, 2}, {-1, 0, 1}})) == 2);  // y^2-y
}

TEST_CASE("input validation") {
  BPoly sq = bp({{1, 1, 0}, {1, 0, 1}});
  CHECK_THROWS_AS(absolute_split(sq * sq), InputError);
  CHECK_THROWS_AS(absolute_split(BPoly::constant(FElem(3))), InputError);
}

TEST_CASE("counts over an extension field") {
  // y^2 - s x^2 with s = sqrt(2): factors into two lines over C.
  UPoly q = upoly_from_ints({-2, 0, 1});
  Extension e = adjoin_root(q, nullptr, isolate_roots(q)[1]);
  BPoly g = BPoly::monomial(FElem(1), 0, 2) + BPoly::monomial(-e.root, 2, 0);
  CHECK(absolute_factor_count(g) == 2);
}

TEST_CASE("branch certificates separate components") {
  // x^2 - 2y^2 = (x - s y)(x + s y), s = sqrt(2).
  UPoly q = upoly_from_ints({-2, 0, 1});
  Extension e = adjoin_root(q, nullptr, isolate_roots(q)[1]);
  FElem s = e.root;
  AbsoluteSplit sp = absolute_split(bp({{1, 2, 0}, {-2, 0, 2}}));
  REQUIRE(sp.count() == 2);

  LSeries t = LSeries::monomial(FElem(1), 1);
  auto plus = component_certificate(sp, t * s, t);    // x = s t, y = t
  auto minus = component_certificate(sp, t * (-s), t);
  REQUIRE(plus.size() == 2);
  CHECK(plus != minus);

  // A different parametrization of the same line matches.
  LSeries t2 = t + LSeries::monomial(FElem(1), 2);  // t + t^2
  CHECK(component_certificate(sp, t2 * s, t2) == plus);

  // Truncated parametrizations still decide once the window is long enough.
  LSeries tt = LSeries::monomial(FElem(1), 1, 4);
  CHECK(component_certificate(sp, tt * s, tt) == plus);
}

TEST_CASE("certificates with a vanishing partial") {
  // y^2 - y: both components horizontal, g_x identically zero.
  AbsoluteSplit sp = absolute_split(bp({{1, 0, 2}, {-1, 0, 1}}));
  REQUIRE(sp.count() == 2);
  LSeries t = LSeries::monomial(FElem(1), 1);
  auto c0 = component_certificate(sp, t, LSeries::zero());
  auto c1 = component_certificate(sp, t, LSeries::constant(FElem(1)));
  CHECK(c0 != c1);
}

TEST_CASE("certificates group branches of a reducible curve") {
  // (x^2+y^2)(y-x): the rational line carries branch (t, t); the conic
  // splits over C into y = ix and y = -ix, so three components in all.
  AbsoluteSplit sp =
      absolute_split(bp({{1, 2, 0}, {1, 0, 2}}) * bp({{1, 0, 1}, {-1, 1, 0}}));
  REQUIRE(sp.count() == 3);
  UPoly q = upoly_from_ints({1, 0, 1});  // x^2+1
  Extension e = adjoin_root(q, nullptr, isolate_roots(q)[1]);
  FElem i = e.root;
  LSeries t = LSeries::monomial(FElem(1), 1);
  auto a = component_certificate(sp, t, t);
  auto b = component_certificate(sp, t, t * i);
  auto c = component_certificate(sp, t, t * (-i));
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
}

TEST_CASE("truncation errors are reported") {
  AbsoluteSplit sp = absolute_split(bp({{1, 2, 0}, {-2, 0, 2}}));
  // Zero-to-truncation branch data: nothing to evaluate on.
  LSeries short_zero = LSeries::zero().truncated(1);
  CHECK_THROWS_AS(component_certificate(sp, short_zero, short_zero),
                  TruncationError);
}
