// Combinatorial resolution at infinity of the pencil f - c: iterated point
// blow-ups over the line at infinity until the pencil becomes a morphism
// (weak resolution), classification of the divisor components (dicritical
// components with covering degrees, components of finite fibers organized
// into bamboos), the bifurcation values coming from infinity, and the
// per-value data of the places at infinity (branch multiplicities and
// bamboo position factors) together with the normal-crossing completion
// used for the labelled divisor dual graph.

#pragma once

#include "graph.hpp"
#include "nffactor.hpp"
#include "puiseux.hpp"

namespace polyfib {

struct DivisorEq {
  int comp;   // component id
  BPoly eq;   // local equation in the chart coordinates
};

// One coordinate chart of the blown-up surface. Chart polynomials live over
// K. `C` is the strict transform of the closure of {f = 0}; the pullback of
// the numerator is C * prod eq_i^{a_i} and the pullback of the coordinate z
// of the line at infinity is prod eq_i^{b_i} (a_i, b_i stored per component).
struct RChart {
  TowerPtr K;                    // null = Q
  BPoly C;
  BPoly Yp;                      // pullback of the root chart's coordinate along L_inf
  std::vector<DivisorEq> divs;
  bool root_uy = false;          // affine map: x = Yp/Z, y = 1/Z (else x = 1/Z, y = Yp/Z)
  // Points of this chart blown up later: coordinate along the main component
  // (points (0, v)) with the child node id.
  std::vector<std::pair<AlgNum, int>> blown;
  bool blown_origin = false;     // chart B: the single relevant point is the origin
  int origin_child = -1;
  int main_comp = 0;             // the component this chart primarily displays
};

struct RNode {
  int id = -1;
  int parent = -1;               // parent node, -1 when blown from a root chart
  int parent_root_chart = -1;    // valid when parent == -1
  bool from_B = false;           // center was the parent's chart-B origin
  int comp = -1;                 // exceptional component created here
  TowerPtr K;                    // field of both charts (extends the parent chart field)
  FieldEmb emb_parent;           // parent chart field -> K
  FElem center_v;                // center = (0, center_v) in the parent chart, over K
  std::vector<int> comps_through;  // divisor components through the center
  RChart A, B;
  std::vector<int> children;
};

struct DivisorComponent {
  int id = 0;
  int node = -1;                 // creating node; -1 for L_inf
  int a = 0, b = 0;              // ords of the 0-fiber closure and of z along the component
  enum Kind { Inf, Dicritical, Fiber } kind = Inf;
  int degree = 0;                // dicritical: degree of phi restricted to it
  AlgNum value;                  // Fiber: the constant value of phi on it
  FElem value_K;                 // the same value inside the node field
  int mult = 0;                  // Fiber: multiplicity in phi^*(value)
  UPoly rnum, rden;              // balanced comps: reduced residual of phi in the chart-A coordinate
};

struct Resolution {
  BPoly f;
  int d = 0;                     // total degree
  std::vector<RChart> root_charts;  // [0] = chart X=1 (vars z, y); [1] = chart Y=1 (vars z, x), present when needed
  std::vector<RNode> nodes;
  std::vector<DivisorComponent> comps;  // [0] = L_inf
  std::vector<std::pair<int, int>> edges;  // divisor adjacency (component ids)
  DualGraph barG_inf;            // dual graph of the whole divisor, vertex i = comps[i]
  bool minimal = true;
  int blowup_count = 0;
};

// Weak resolution. Throws InputError for constant f.
Resolution resolve_infinity(const BPoly& f);

// B_inf: values of phi on the non-empty bamboos together with the critical
// values of phi restricted to the dicritical components. Sorted, deduplicated.
std::vector<AlgNum> critical_values_at_infinity(const Resolution& R);

struct PlaceBranch {
  int m = 0;          // intersection multiplicity with the divisor
  Int ell = 1;        // bamboo position factor (1 for empty bamboos)
  Int cls = 0;        // class of the branch boundary in H_1(T_P) = m * ell
  std::vector<AlgNum> cert;  // affine component certificate (empty when the fiber is irreducible)
};

struct PlaceAtInfinity {
  int dic_comp = -1;              // the dicritical component carrying P
  std::vector<int> bamboo;        // component ids, attachment first; empty for P on no bamboo
  std::vector<int> bamboo_mult;   // multiplicities of phi^*(c) along the bamboo
  std::vector<PlaceBranch> branches;
  int n() const { return (int)branches.size(); }
};

struct FiberDivisorComp {
  int comp_id;    // weak-resolution id, or a fresh id for total-stage components
  int mult;
  bool from_weak;
};

struct FiberAtInfinity {
  AlgNum c;
  std::vector<PlaceAtInfinity> places;
  std::vector<FiberDivisorComp> fcomps;        // divisor components of phi_t^{-1}(c)
  std::vector<std::pair<int, int>> dd_edges;   // edges among fcomps (indices into fcomps)
  struct Touch {
    int place, branch;  // indices into places / branches
    int fcomp;          // index into fcomps met transversally, or -1 (meets a dicritical)
  };
  std::vector<Touch> touches;     // one per branch at infinity of the fiber
};

FiberAtInfinity fiber_at_infinity(const Resolution& R, const AlgNum& c);

std::vector<PlaceAtInfinity> places_at_infinity(const Resolution& R, const AlgNum& c);

// Milnor numbers and branch counts of the germs of the closure of {f = c}
// at the points at infinity (summed over the base points).
struct InfinityGerms {
  int mu = 0;
  int branches = 0;
};
InfinityGerms infinity_germs(const Resolution& R, const AlgNum& c);

// Number of branches at infinity of the generic fiber; equals the sum of the
// dicritical degrees (asserted).
int generic_branches_at_infinity(const Resolution& R);

}  // namespace polyfib
