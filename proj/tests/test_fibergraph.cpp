#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibergraph.hpp"

using namespace polyfib;

namespace {

BPoly X = BPoly::x(), Y = BPoly::y();
BPoly C1 = BPoly::constant(FElem(1));

int sum_branch_defect(const AffineFiber& A) {
  int s = 0;
  for (auto& sp : A.sing) s += sp.r_local - 1;
  return s;
}

// r + b1(G_c) = n + sum over singular points of (r_local - 1)
void check_component_identity(const AffineFiber& A) {
  GraphInvariants gi = graph_invariants(A.G);
  CHECK(A.r + gi.betti1 == gi.components + sum_branch_defect(A));
}

// b1(barG_c) - b1(G_c) = sum over places of (n_P - 1) - (n(F_c) - 1)
void check_graph_rank_identity(const AffineFiber& A, const FiberAtInfinity& I,
                               const FiberBundle& B) {
  int snp = 0;
  for (auto& P : I.places) snp += P.n() - 1;
  GraphInvariants g = graph_invariants(B.Gc), gb = graph_invariants(B.barGc);
  CHECK(gb.betti1 - g.betti1 == snp - (g.components - 1));
}

}  // namespace

TEST_CASE("critical points of x^2 - y^3 and of a polynomial without any") {
  auto crit = affine_critical_points(X * X - Y * Y * Y);
  REQUIRE(crit.size() == 1);
  CHECK(crit[0].ax == AlgNum(Rat(0)));
  CHECK(crit[0].ay == AlgNum(Rat(0)));
  CHECK(crit[0].mu == 2);
  CHECK(crit[0].value == AlgNum(Rat(0)));

  CHECK(affine_critical_points(X * (X * Y + C1)).empty());
  CHECK(affine_critical_points(X).empty());
}

TEST_CASE("non-isolated critical locus and non-reduced fibers are rejected") {
  CHECK_THROWS_AS(affine_critical_points(X * X * Y), InputError);
  CHECK_THROWS_AS(affine_critical_points(Y * Y), InputError);
  // f = x^2 y has the non-reduced fiber at 0; reachable with precomputed
  // critical points.
  CHECK_THROWS_AS(affine_fiber(X * X * Y, AlgNum(Rat(0)), {}), InputError);
}

TEST_CASE("f = xy at c = 0: two lines crossing once") {
  BPoly f = X * Y;
  AffineFiber A = affine_fiber(f, AlgNum(Rat(0)));
  CHECK(A.r == 2);
  CHECK(A.G.num_vertices() == 2);
  CHECK(A.G.num_edges() == 1);
  CHECK(A.n() == 1);
  REQUIRE(A.sing.size() == 1);
  CHECK(A.sing[0].mu == 1);
  CHECK(A.sing[0].r_local == 2);
  CHECK(A.sing[0].owners[0] != A.sing[0].owners[1]);
  check_component_identity(A);

  // Both affine components reach their own place at infinity; certificates
  // computed at the crossing match the ones computed along the places.
  Resolution R = resolve_infinity(f);
  FiberAtInfinity I = fiber_at_infinity(R, AlgNum(Rat(0)));
  FiberBundle B = combine_fiber(A, I);
  REQUIRE(B.place_owners.size() == 2);
  CHECK(B.place_owners[0].size() == 1);
  CHECK(B.place_owners[1].size() == 1);
  CHECK(B.place_owners[0][0] != B.place_owners[1][0]);
  CHECK(graph_invariants(B.barGc).betti1 == graph_invariants(B.Gc).betti1);
  check_graph_rank_identity(A, I, B);

  // Generic fiber: smooth irreducible hyperbola.
  AffineFiber Ag = affine_fiber(f, AlgNum(Rat(3)));
  CHECK(Ag.r == 1);
  CHECK(Ag.sing.empty());
  CHECK(Ag.n() == 1);
}

TEST_CASE("nodal cubic at an irrational critical value: loop edge") {
  BPoly f = Y * Y - X * X * X + X;
  auto crit = affine_critical_points(f);
  REQUIRE(crit.size() == 2);
  for (auto& cp : crit) {
    CHECK(cp.mu == 1);
    CHECK(!cp.value.is_rational());
    AffineFiber A = affine_fiber(f, cp.value, crit);
    CHECK(A.r == 1);
    REQUIRE(A.sing.size() == 1);
    CHECK(A.sing[0].r_local == 2);
    CHECK(A.G.num_vertices() == 1);
    CHECK(A.G.num_edges() == 1);  // loop: both branches on the one component
    CHECK(graph_invariants(A.G).betti1 == 1);
    check_component_identity(A);
  }
}

TEST_CASE("Broughton at c = 0: G_0, G_{0,P} and the completed graph") {
  BPoly f = X * (X * Y + C1);
  Resolution R = resolve_infinity(f);
  AffineFiber A = affine_fiber(f, AlgNum(Rat(0)));
  CHECK(A.r == 2);
  CHECK(A.sing.empty());
  CHECK(A.G.num_edges() == 0);
  CHECK(A.n() == 2);

  FiberAtInfinity I = fiber_at_infinity(R, AlgNum(Rat(0)));
  FiberBundle B = combine_fiber(A, I);
  // The doubled place joins the two components: its augmented graph is
  // connected with the same Betti number.
  bool found = false;
  for (size_t p = 0; p < I.places.size(); ++p) {
    GraphInvariants gi = graph_invariants(B.GcP[p]);
    if (I.places[p].n() == 2) {
      found = true;
      CHECK(B.place_owners[p][0] != B.place_owners[p][1]);
      CHECK(gi.components == 1);
      CHECK(gi.betti1 == 0);
    } else {
      CHECK(gi.components == 2);
    }
  }
  CHECK(found);
  // Completed divisor graph: the two components and the one divisor
  // component of multiplicity 1, a path.
  CHECK(B.barGc.num_vertices() == 3);
  CHECK(B.barGc.num_edges() == 2);
  CHECK(is_tree(B.barGc));
  check_graph_rank_identity(A, I, B);

  AffineFiber Ag = affine_fiber(f, AlgNum(Rat(1)));
  CHECK(Ag.r == 1);
  CHECK(Ag.n() == 1);
  FiberAtInfinity Ig = fiber_at_infinity(R, AlgNum(Rat(1)));
  FiberBundle Bg = combine_fiber(Ag, Ig);
  CHECK(graph_invariants(Bg.barGc).betti1 == 0);
  check_graph_rank_identity(Ag, Ig, Bg);
}

TEST_CASE("Briancon polynomial: completed graphs at both values at infinity") {
  BPoly s = X * Y + C1;
  BPoly p = X * s + C1;
  BPoly f = Y * p * p * p + p * p * s - p * s * BPoly::constant(FElem(Rat(5, 3))) -
            s * BPoly::constant(FElem(Rat(1, 3)));
  Resolution R = resolve_infinity(f);
  auto crit = affine_critical_points(f);
  CHECK(crit.empty());

  // c = 0: irreducible smooth fiber, but the completed graph has a cycle
  // (two branches at one place meeting the same divisor component).
  AffineFiber A0 = affine_fiber(f, AlgNum(Rat(0)), crit);
  CHECK(A0.r == 1);
  CHECK(A0.n() == 1);
  FiberAtInfinity I0 = fiber_at_infinity(R, AlgNum(Rat(0)));
  FiberBundle B0 = combine_fiber(A0, I0);
  CHECK(graph_invariants(B0.Gc).betti1 == 0);
  CHECK(graph_invariants(B0.barGc).betti1 == 1);
  check_graph_rank_identity(A0, I0, B0);
  // The doubled place also creates a loop in G_{0,P}.
  int loops = 0;
  for (size_t p = 0; p < I0.places.size(); ++p)
    loops += graph_invariants(B0.GcP[p]).betti1;
  CHECK(loops == 1);

  // c = -16/9: all places simple, the completed graph is a tree.
  AffineFiber Am = affine_fiber(f, AlgNum(Rat(-16, 9)), crit);
  CHECK(Am.r == 1);
  FiberAtInfinity Im = fiber_at_infinity(R, AlgNum(Rat(-16, 9)));
  FiberBundle Bm = combine_fiber(Am, Im);
  CHECK(Bm.barGc.num_vertices() == 4);
  CHECK(is_tree(Bm.barGc));
  check_graph_rank_identity(Am, Im, Bm);
}
