// Dual graphs of the fibers of f: the affine dual graph G_c (one vertex per
// absolutely irreducible component, k-1 edges at every singular point with k
// local branches), its augmentations G_{c,P} by the places at infinity, and
// the dual graph of the completed fiber divisor (affine components plus the
// divisor components over c), assembled from the resolution data.

#pragma once

#include "graph.hpp"
#include "resolution.hpp"

namespace polyfib {

// A critical point of f with its value and Milnor number. `K` carries the
// coordinates; ax/ay/value are the field-free views.
struct CriticalPoint {
  TowerPtr K;
  FElem x, y;
  AlgNum ax, ay, value;
  int mu = 0;
};

// All affine critical points, deterministically ordered. Throws InputError
// when f is constant or when the critical locus has positive dimension.
std::vector<CriticalPoint> affine_critical_points(const BPoly& f);

struct FiberSingularPoint {
  AlgNum x, y;
  int mu = 0;
  int r_local = 0;         // number of local branches
  std::vector<int> owners; // per branch: vertex of G_c owning it
};

struct AffineFiber {
  AlgNum c;
  int r = 1;        // absolutely irreducible components of f - c
  DualGraph G;      // G_c; vertex i = component i
  std::vector<FiberSingularPoint> sing;
  // Per vertex: component certificate; empty for components carrying no
  // singular point until combine_fiber fills them from the places.
  std::vector<std::vector<AlgNum>> comp_cert;
  int n() const;    // connected components of G_c
};

// Throws InputError "non-reduced fiber" when f - c is not squarefree.
AffineFiber affine_fiber(const BPoly& f, const AlgNum& c,
                         const std::vector<CriticalPoint>& crit);
AffineFiber affine_fiber(const BPoly& f, const AlgNum& c);
DualGraph affine_dual_graph(const BPoly& f, const AlgNum& c);

// G_c plus n(F_P) - 1 edges joining the owners of the branches of one place.
DualGraph augment_by_place(const DualGraph& Gc, const std::vector<int>& owners);

// Per-value graphs combining the affine fiber with the data at infinity.
// Fills in the anonymous component certificates of A.
struct FiberBundle {
  DualGraph Gc;
  DualGraph barGc;                             // completed fiber divisor
  std::vector<DualGraph> GcP;                  // one per place at infinity
  std::vector<std::vector<int>> place_owners;  // per place, per branch: G_c vertex
};
FiberBundle combine_fiber(AffineFiber& A, const FiberAtInfinity& I);

}  // namespace polyfib
