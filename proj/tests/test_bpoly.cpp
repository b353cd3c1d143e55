#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpoly.hpp"

using namespace polyfib;

static BPoly X() { return BPoly::x(); }
static BPoly Y() { return BPoly::y(); }
static BPoly C(long n) { return BPoly::constant(FElem(n)); }

TEST_CASE("bpoly basics") {
  BPoly f = X() * Y() + C(1);  // xy + 1
  CHECK(f.deg_x() == 1);
  CHECK(f.deg_y() == 1);
  CHECK(f.total_deg() == 2);
  CHECK(f.coef(1, 1) == FElem(1));
  CHECK(f.coef(0, 0) == FElem(1));
  CHECK(f.eval(FElem(2), FElem(3)).rat() == 7);
  CHECK((f - f).is_zero());
  CHECK(f.swap_vars() == f);

  BPoly g = f * f;
  CHECK(g.coef(2, 2) == FElem(1));
  CHECK(g.coef(1, 1) == FElem(2));
  CHECK(g.derivative_x() == Y() * f * FElem(2));
  CHECK((X() * X() + Y()).ord_origin() == 1);
  CHECK((X() * X() * Y()).ord_origin() == 3);
}

TEST_CASE("bpoly substitution") {
  BPoly f = X() * X() - Y();  // x^2 - y
  UPoly fx2 = f.subst_x(FElem(2));
  CHECK(fx2 == upoly_from_ints({4, -1}));
  UPoly fy3 = f.subst_y(FElem(3));
  CHECK(fy3 == upoly_from_ints({-3, 0, 1}));
  // blow-up chart substitution x -> s, y -> s t
  BPoly bl = f.subst(X(), X() * Y());
  CHECK(bl == X() * X() - X() * Y());
  BPoly sh = f.shift(FElem(1), FElem(1));
  CHECK(sh == X() * X() + X() * C(2) - Y());
}

TEST_CASE("bpoly division") {
  BPoly f = (X() * Y() + C(1)) * (X() + Y()) * (X() + Y());
  BPoly q;
  int k = f.remove_factor(X() + Y(), &q);
  CHECK(k == 2);
  CHECK(q == X() * Y() + C(1));
  CHECK(f.divexact(X() + Y()) == (X() * Y() + C(1)) * (X() + Y()));
  CHECK_THROWS_AS(f.divexact(X() + C(1)), ConsistencyError);
}

TEST_CASE("bpoly resultants") {
  // res_y(x*y - 1, y - x) = x^2 - 1 up to sign convention:
  // res of (x)y - 1 and y - x, Sylvester det |x -1; 1 -x| = -x^2 + 1
  UPoly r = BPoly::resultant_y(X() * Y() - C(1), Y() - X());
  CHECK((r == upoly_from_ints({1, 0, -1}) || r == upoly_from_ints({-1, 0, 1})));
  CHECK(r.eval(FElem(1)).is_zero());
  CHECK(r.eval(FElem(-1)).is_zero());

  // Common factor -> zero resultant.
  BPoly a = (Y() - X()) * (Y() + C(1));
  BPoly b = (Y() - X()) * (Y() + X() * X());
  CHECK(BPoly::resultant_y(a, b).is_zero());

  // disc_y(y^2 - x) = 4x (up to convention disc = -res(f,f')/lc = 4x)
  UPoly d = (Y() * Y() - X()).discriminant_y();
  CHECK((d == upoly_from_ints({0, 4}) || d == upoly_from_ints({0, -4})));

  // res_y(c, b) with deg_y c = 0: c^{deg_y b}
  UPoly m = BPoly::resultant_y(C(-3) * X() * X(), C(2) * Y());
  CHECK(m == upoly_from_ints({0, 0, -3}));
}

TEST_CASE("bpoly gcd and squarefree") {
  BPoly p = X() * Y() + C(1);
  BPoly a = p * p * (Y() - X());
  BPoly b = p * (Y() + X());
  BPoly g = BPoly::gcd(a, b);
  CHECK(g.divexact(g) == C(1));
  // gcd is p up to scalar
  CHECK(g.deg_x() == 1);
  CHECK(g.deg_y() == 1);
  CHECK((a.divexact(g), true));
  CHECK((b.divexact(g), true));

  BPoly f = p * p * (Y() - X()) * (Y() - X()) * (Y() - X()) * X();
  BPoly sf = f.squarefree_part();
  CHECK(sf.total_deg() == p.total_deg() + 1 + 1);
  CHECK((sf.remove_factor(p, nullptr)) == 1);
  CHECK((sf.remove_factor(Y() - X(), nullptr)) == 1);
  CHECK((sf.remove_factor(X(), nullptr)) == 1);
}

TEST_CASE("bpoly content") {
  BPoly f = BPoly::from_x(upoly_from_ints({0, 1})) * (Y() * Y() + X());
  CHECK(f.content_y() == upoly_from_ints({0, 1}));
  CHECK(f.primitive_part_y() == Y() * Y() + X());
}
