#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "puiseux.hpp"

using namespace polyfib;

namespace {

BPoly bp(std::vector<std::tuple<long, int, int>> terms) {
  BPoly g;
  for (auto& [c, ex, ey] : terms) g = g + BPoly::monomial(FElem(c), ex, ey);
  return g;
}

const FElem kZero(0);

// Milnor-branch consistency at an isolated singular center.
void check_consistency(const BPoly& g, const FElem& cx, const FElem& cy) {
  int mu = local_milnor_number(g, cx, cy);
  auto brs = puiseux_branches(g, cx, cy);
  int r = (int)brs.size();
  CHECK(mu >= r - 1);
  CHECK((mu - (r - 1)) % 2 == 0);
  // Re-expansion changes neither the count nor pairwise contacts.
  auto brs2 = puiseux_branches(g, cx, cy, 4 * kPuiseuxBudget);
  REQUIRE((int)brs2.size() == r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      CHECK(branch_intersection_multiplicity(brs[i], brs[j]) ==
            branch_intersection_multiplicity(brs2[i], brs2[j]));
}

}  // namespace

TEST_CASE("newton polygon basics") {
  BPoly cusp = bp({{1, 0, 2}, {-1, 3, 0}});  // y^2 - x^3
  NewtonPolygon np = newton_polygon(cusp, kZero, kZero);
  REQUIRE(np.segments.size() == 1);
  const NPSegment& s = np.segments[0];
  CHECK(s.i0 == 0);
  CHECK(s.j0 == 2);
  CHECK(s.i1 == 3);
  CHECK(s.j1 == 0);
  CHECK(s.slope() == Rat(-2, 3));
  CHECK(s.p == 2);
  CHECK(s.q == 3);

  NPSegment n2 = newton_polygon(bp({{1, 0, 2}, {-1, 2, 0}}), kZero, kZero).segments[0];
  CHECK(n2.i0 == 0);
  CHECK(n2.j0 == 2);
  CHECK(n2.i1 == 2);
  CHECK(n2.j1 == 0);

  NPSegment n3 = newton_polygon(bp({{1, 0, 1}, {-1, 2, 0}}), kZero, kZero).segments[0];
  CHECK(n3.i0 == 0);
  CHECK(n3.j0 == 1);
  CHECK(n3.i1 == 2);
  CHECK(n3.j1 == 0);

  // Two faces, strictly decreasing slope.
  NewtonPolygon np2 =
      newton_polygon(bp({{1, 0, 3}, {1, 1, 1}, {1, 3, 0}}), kZero, kZero);
  REQUIRE(np2.segments.size() == 2);
  CHECK(np2.segments[0].slope() > np2.segments[1].slope());

  CHECK_THROWS_AS(newton_polygon(BPoly::zero(), kZero, kZero), InputError);
}

TEST_CASE("node: two smooth transverse branches") {
  BPoly g = bp({{1, 0, 2}, {-1, 2, 0}});  // y^2 - x^2
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 2);
  CHECK(brs[0].e == 1);
  CHECK(brs[1].e == 1);
  // Leading terms +-x.
  auto t0 = brs[0].terms(), t1 = brs[1].terms();
  REQUIRE(!t0.empty());
  REQUIRE(!t1.empty());
  CHECK(t0[0].first == 1);
  CHECK(t1[0].first == 1);
  CHECK(t0[0].second.rat() + t1[0].second.rat() == 0);
  CHECK(branch_intersection_multiplicity(brs[0], brs[1]) == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 1);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("cusp y^2 - x^3") {
  BPoly g = bp({{1, 0, 2}, {-1, 3, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].e == 2);
  auto ts = brs[0].terms();
  REQUIRE(!ts.empty());
  CHECK(ts[0].first == Rat(3, 2));
  CHECK(ts[0].second.rat() == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 2);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("tacnode y^2 - x^4") {
  BPoly g = bp({{1, 0, 2}, {-1, 4, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 2);
  CHECK(brs[0].e == 1);
  CHECK(brs[1].e == 1);
  CHECK(branch_intersection_multiplicity(brs[0], brs[1]) == 2);
  CHECK(local_milnor_number(g, kZero, kZero) == 3);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("E6 germ y^3 - x^4") {
  BPoly g = bp({{1, 0, 3}, {-1, 4, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].e == 3);
  CHECK(local_milnor_number(g, kZero, kZero) == 6);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("ordinary triple point y^3 - x^2 y") {
  BPoly g = bp({{1, 0, 3}, {-1, 2, 1}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(branch_intersection_multiplicity(brs[i], brs[j]) == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 4);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("ramphoid cusp y^2 - x^5") {
  BPoly g = bp({{1, 0, 2}, {-1, 5, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].e == 2);
  CHECK(local_milnor_number(g, kZero, kZero) == 4);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("node with full square term y^2 - x^2 - x^3") {
  BPoly g = bp({{1, 0, 2}, {-1, 2, 0}, {-1, 3, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 2);
  CHECK(branch_intersection_multiplicity(brs[0], brs[1]) == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 1);
  // Series beyond the leading term: y = x sqrt(1 + x) = x + x^2/2 - ...
  auto ts = brs[0].terms();
  REQUIRE(ts.size() >= 2);
  CHECK(ts[1].first == 2);
  CHECK((ts[1].second.rat() == Rat(1, 2) || ts[1].second.rat() == Rat(-1, 2)));
  check_consistency(g, kZero, kZero);
}

TEST_CASE("D4 three concurrent lines x^3 - y^3") {
  BPoly g = bp({{1, 3, 0}, {-1, 0, 3}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(branch_intersection_multiplicity(brs[i], brs[j]) == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 4);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("y^3 - x^5: one branch of ramification 3") {
  BPoly g = bp({{1, 0, 3}, {-1, 5, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].e == 3);
  CHECK(local_milnor_number(g, kZero, kZero) == 8);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("two tangent cusps (y^2-x^3)(y^2+x^3)") {
  BPoly g = bp({{1, 0, 2}, {-1, 3, 0}}) * bp({{1, 0, 2}, {1, 3, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 2);
  CHECK(brs[0].e == 2);
  CHECK(brs[1].e == 2);
  CHECK(branch_intersection_multiplicity(brs[0], brs[1]) == 6);
  CHECK(local_milnor_number(g, kZero, kZero) == 15);
  check_consistency(g, kZero, kZero);
}

TEST_CASE("irrational tangents y^2 - 2x^2") {
  BPoly g = bp({{1, 0, 2}, {-2, 2, 0}});
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 2);
  CHECK(branch_intersection_multiplicity(brs[0], brs[1]) == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 1);
  // Leading coefficients are the two square roots of 2.
  auto a0 = algnum_of(brs[0].terms()[0].second);
  auto a1 = algnum_of(brs[1].terms()[0].second);
  CHECK(a0 != a1);
  CHECK(a0.minpoly() == upoly_from_ints({-2, 0, 1}));
  CHECK(a1.minpoly() == upoly_from_ints({-2, 0, 1}));
  check_consistency(g, kZero, kZero);
}

TEST_CASE("vertical line components") {
  // x(xy+1) at (0, a): single branch, the line x = 0.
  BPoly g = bp({{1, 2, 1}, {1, 1, 0}});
  auto brs = puiseux_branches(g, kZero, FElem(5));
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].vertical);
  // At the origin likewise (the hyperbola branch misses x = 0).
  auto b0 = puiseux_branches(g, kZero, kZero);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].vertical);
  // Milnor at a regular point of the curve.
  CHECK(local_milnor_number(g, kZero, kZero) == 0);

  // xy at origin: vertical line plus horizontal line, transverse.
  BPoly xy = bp({{1, 1, 1}});
  auto bxy = puiseux_branches(xy, kZero, kZero);
  REQUIRE(bxy.size() == 2);
  CHECK(bxy[0].vertical);
  CHECK(!bxy[1].vertical);
  CHECK(branch_intersection_multiplicity(bxy[0], bxy[1]) == 1);
  CHECK(local_milnor_number(xy, kZero, kZero) == 1);
}

TEST_CASE("intersection against coordinate axis branches") {
  auto axis = puiseux_branches(bp({{1, 0, 1}}), kZero, kZero);  // y = 0
  REQUIRE(axis.size() == 1);
  auto par = puiseux_branches(bp({{1, 0, 1}, {-1, 2, 0}}), kZero, kZero);
  REQUIRE(par.size() == 1);
  CHECK(branch_intersection_multiplicity(par[0], axis[0]) == 2);
  CHECK(branch_intersection_multiplicity(axis[0], par[0]) == 2);
  auto cub = puiseux_branches(bp({{1, 0, 1}, {-1, 3, 0}}), kZero, kZero);
  CHECK(branch_intersection_multiplicity(cub[0], axis[0]) == 3);
  // Cusp against both axes.
  auto cusp = puiseux_branches(bp({{1, 0, 2}, {-1, 3, 0}}), kZero, kZero);
  CHECK(branch_intersection_multiplicity(cusp[0], axis[0]) == 3);
  auto vert = puiseux_branches(bp({{1, 1, 0}}), kZero, kZero);
  REQUIRE(vert[0].vertical);
  CHECK(branch_intersection_multiplicity(cusp[0], vert[0]) == 2);
}

TEST_CASE("ramification indices sum to the local y-degree") {
  // Local Weierstrass y-degree = vanishing order of g(0, y) at y = 0.
  std::vector<BPoly> germs = {
      bp({{1, 0, 2}, {-1, 3, 0}}),
      bp({{1, 0, 3}, {-1, 4, 0}}),
      bp({{1, 0, 3}, {-1, 2, 1}}),
      bp({{1, 0, 2}, {-1, 2, 0}, {-1, 3, 0}}),
      bp({{1, 0, 2}, {-1, 3, 0}}) * bp({{1, 0, 2}, {1, 3, 0}}),
      bp({{1, 0, 3}, {1, 1, 1}, {1, 2, 0}}),
  };
  for (const BPoly& g : germs) {
    UPoly gy = g.subst_x(FElem(0));
    int n = 0;
    while (gy.coef(n).is_zero()) ++n;
    int se = 0;
    for (const auto& b : puiseux_branches(g, kZero, kZero))
      if (!b.vertical) se += b.e;
    CHECK(se == n);
  }
}

TEST_CASE("error paths") {
  BPoly line = bp({{1, 0, 1}, {-1, 1, 0}});
  CHECK_THROWS_AS(puiseux_branches(line * line, kZero, kZero), InputError);
  CHECK_THROWS_AS(puiseux_branches(line, FElem(1), kZero), InputError);  // off curve
  // Non-isolated: y^2 has critical locus y = 0.
  CHECK_THROWS_AS(local_milnor_number(bp({{1, 0, 2}}), kZero, kZero), InputError);
  // Identical branches: infinite contact.
  auto brs = puiseux_branches(bp({{1, 0, 2}, {-1, 3, 0}}), kZero, kZero);
  CHECK_THROWS_AS(branch_intersection_multiplicity(brs[0], brs[0]), InputError);
  // The same analytic branch reached through two different germs.
  auto c2 = puiseux_branches(bp({{1, 0, 2}, {-1, 3, 0}}) * bp({{1, 0, 1}, {-1, 1, 0}}),
                             kZero, kZero);
  REQUIRE(c2.size() == 2);
  int cusp_idx = c2[0].e == 2 ? 0 : 1;
  CHECK_THROWS_AS(branch_intersection_multiplicity(brs[0], c2[cusp_idx]), InputError);
}

TEST_CASE("smooth points") {
  BPoly g = bp({{1, 0, 1}, {-1, 2, 0}});  // y = x^2
  auto brs = puiseux_branches(g, kZero, kZero);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].e == 1);
  auto ts = brs[0].terms();
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].first == 2);
  CHECK(ts[0].second.rat() == 1);
  CHECK(local_milnor_number(g, kZero, kZero) == 0);
  // Smooth at a shifted center too: same curve at (1, 1).
  auto b1 = puiseux_branches(g, FElem(1), FElem(1));
  REQUIRE(b1.size() == 1);
  auto t1 = b1[0].terms();
  REQUIRE(!t1.empty());
  CHECK(t1[0].first == 1);
  CHECK(t1[0].second.rat() == 2);  // dy/dx at x=1
}
