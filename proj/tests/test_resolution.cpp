#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resolution.hpp"

using namespace polyfib;

namespace {

BPoly X = BPoly::x(), Y = BPoly::y();
BPoly C1 = BPoly::constant(FElem(1));

int count_kind(const Resolution& R, DivisorComponent::Kind k) {
  int n = 0;
  for (auto& dc : R.comps) n += dc.kind == k;
  return n;
}

int dic_degree_sum(const Resolution& R) {
  int n = 0;
  for (auto& dc : R.comps)
    if (dc.kind == DivisorComponent::Dicritical) n += dc.degree;
  return n;
}

}  // namespace

TEST_CASE("f = x: one dicritical of degree 1, no values at infinity") {
  Resolution R = resolve_infinity(X);
  CHECK(count_kind(R, DivisorComponent::Dicritical) == 1);
  CHECK(dic_degree_sum(R) == 1);
  CHECK(count_kind(R, DivisorComponent::Fiber) == 0);
  CHECK(critical_values_at_infinity(R).empty());
  CHECK(is_tree(R.barG_inf));
  // L_inf plus one exceptional: a path.
  CHECK(R.comps.size() == 2);
}

TEST_CASE("f = x*y: two dicriticals, total degree 2") {
  Resolution R = resolve_infinity(X * Y);
  CHECK(count_kind(R, DivisorComponent::Dicritical) == 2);
  CHECK(dic_degree_sum(R) == 2);
  CHECK(critical_values_at_infinity(R).empty());
  CHECK(is_tree(R.barG_inf));
}

TEST_CASE("f = x^2 + y^2: degree-2 dicritical with critical values") {
  // Fibers x^2+y^2 = c are smooth conics; at infinity two points but the
  // pencil behaves like a Morse-free family: B_inf should be empty.
  Resolution R = resolve_infinity(X * X + Y * Y);
  CHECK(dic_degree_sum(R) == 2);
  CHECK(is_tree(R.barG_inf));
  CHECK(critical_values_at_infinity(R).empty());
}

TEST_CASE("Broughton f = x(xy+1): B_inf = {0}") {
  BPoly f = X * (X * Y + C1);
  Resolution R = resolve_infinity(f);
  CHECK(is_tree(R.barG_inf));
  auto B = critical_values_at_infinity(R);
  REQUIRE(B.size() == 1);
  CHECK(B[0] == AlgNum(Rat(0)));
  CHECK(dic_degree_sum(R) >= 1);
}

TEST_CASE("f = x: generic fiber data at infinity") {
  Resolution R = resolve_infinity(X);
  CHECK(generic_branches_at_infinity(R) == 1);
  FiberAtInfinity F = fiber_at_infinity(R, AlgNum(Rat(5)));
  REQUIRE(F.places.size() == 1);
  REQUIRE(F.places[0].n() == 1);
  CHECK(F.places[0].bamboo.empty());
  CHECK(F.places[0].branches[0].m == 1);
  CHECK(F.places[0].branches[0].ell == 1);
  CHECK(F.fcomps.empty());
  REQUIRE(F.touches.size() == 1);
  CHECK(F.touches[0].fcomp == -1);
  InfinityGerms g = infinity_germs(R, AlgNum(Rat(5)));
  CHECK(g.mu == 0);
  CHECK(g.branches == 1);
}

TEST_CASE("Broughton: fiber structure at c = 0 and at a generic value") {
  BPoly f = X * (X * Y + C1);
  Resolution R = resolve_infinity(f);
  CHECK(generic_branches_at_infinity(R) == 2);

  FiberAtInfinity Fg = fiber_at_infinity(R, AlgNum(Rat(1)));
  int ng = 0;
  for (auto& P : Fg.places) ng += P.n();
  CHECK(ng == 2);
  for (auto& P : Fg.places) CHECK(P.n() == 1);
  CHECK(Fg.fcomps.empty());

  FiberAtInfinity F0 = fiber_at_infinity(R, AlgNum(Rat(0)));
  int n0 = 0, big = 0;
  for (auto& P : F0.places) {
    n0 += P.n();
    if (P.n() == 2) ++big;
    for (auto& b : P.branches) CHECK(!b.cert.empty());
  }
  CHECK(n0 == 3);
  CHECK(big == 1);
  CHECK(F0.places.size() == 2);
  // A single divisor component of multiplicity 1 (a one-component bamboo of
  // the weak resolution), met by both branches of the doubled place.
  REQUIRE(F0.fcomps.size() == 1);
  CHECK(F0.fcomps[0].mult == 1);
  CHECK(F0.fcomps[0].from_weak);
  int on_new = 0;
  for (auto& t : F0.touches) on_new += t.fcomp == 0;
  CHECK(on_new == 2);
  // The two branches on the new component lie on distinct affine components.
  std::vector<std::vector<AlgNum>> certs;
  for (auto& t : F0.touches)
    if (t.fcomp == 0) certs.push_back(F0.places[t.place].branches[t.branch].cert);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0] != certs[1]);
}

TEST_CASE("Briancon f: B_inf = {0, -16/9}") {
  BPoly s = X * Y + C1;
  BPoly p = X * s + C1;
  BPoly f = Y * p * p * p + p * p * s - p * s * BPoly::constant(FElem(Rat(5, 3))) -
            s * BPoly::constant(FElem(Rat(1, 3)));
  REQUIRE(f.total_deg() == 10);
  Resolution R = resolve_infinity(f);
  CHECK(is_tree(R.barG_inf));
  auto B = critical_values_at_infinity(R);
  REQUIRE(B.size() == 2);
  CHECK(B[0] == AlgNum(Rat(-16, 9)));
  CHECK(B[1] == AlgNum(Rat(0)));

  // c = 0: irreducible fiber, one place with two branches, both meeting the
  // same multiplicity-1 component (double edge in the completed dual graph).
  FiberAtInfinity F0 = fiber_at_infinity(R, AlgNum(Rat(0)));
  int doubled = -1;
  for (int i = 0; i < (int)F0.places.size(); ++i)
    if (F0.places[i].n() == 2) doubled = i;
  REQUIRE(doubled >= 0);
  for (auto& P : F0.places)
    for (auto& b : P.branches) CHECK(b.cert.empty());
  std::vector<int> hits;
  for (auto& t : F0.touches)
    if (t.place == doubled) hits.push_back(t.fcomp);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0] == hits[1]);
  REQUIRE(hits[0] >= 0);
  CHECK(F0.fcomps[hits[0]].mult == 1);

  // c = -16/9: one place where the strict transform is tangent to the
  // dicritical (m = 2 > 1); the completion hangs the chain 2 - 6 - 3 with
  // the strict transform meeting the multiplicity-6 component.
  FiberAtInfinity Fm = fiber_at_infinity(R, AlgNum(Rat(-16, 9)));
  for (auto& P : Fm.places) CHECK(P.n() == 1);
  int irregular = 0, touched_mult = 0;
  for (auto& t : Fm.touches) {
    auto& b = Fm.places[t.place].branches[t.branch];
    if (b.m * b.ell > 1) {
      ++irregular;
      REQUIRE(t.fcomp >= 0);
      touched_mult = Fm.fcomps[t.fcomp].mult;
    }
  }
  CHECK(irregular == 1);
  CHECK(touched_mult == 6);
  std::vector<int> mults;
  for (auto& fc : Fm.fcomps) {
    CHECK(!fc.from_weak);
    mults.push_back(fc.mult);
  }
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<int>{2, 3, 6});
  CHECK(Fm.dd_edges.size() == 2);
}
