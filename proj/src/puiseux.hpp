// Local analytic data of plane curve germs: Newton polygons, Puiseux branch
// expansions (one entry per local irreducible analytic component, with the
// complex embedding of every coefficient fixed), pairwise intersection
// multiplicities, and local Milnor numbers.

#pragma once

#include "nffactor.hpp"
#include "series.hpp"

namespace polyfib {

struct NPSegment {
  int i0, j0, i1, j1;  // endpoints (deg_x, deg_y), j0 > j1, i1 > i0
  int p, q;            // primitive: branches on this face start as Y ~ c X^(q/p)
  UPoly face;          // chi(u) with u = c^p; roots give the leading coefficients
  Rat slope() const { return Rat(j1 - j0) / Rat(i1 - i0); }
};

struct NewtonPolygon {
  std::vector<NPSegment> segments;  // strictly decreasing slope
};

// Lower Newton polygon of the germ translated so that the base point is the
// origin. Throws InputError if the germ is zero.
NewtonPolygon newton_polygon(const BPoly& germ, const FElem& cx, const FElem& cy);

// One local branch at a center: parametrization X(t) = t^e, Y(t) = series
// (centered coordinates), coefficients in `field`. A branch of a vertical
// line component instead has X(t) = 0, Y(t) = t and `vertical` set.
struct PuiseuxBranch {
  FElem cx, cy;   // center
  TowerPtr field; // field of the series coefficients
  FieldEmb emb;   // maps the germ's coefficient field into `field`
  bool vertical = false;
  int e = 1;      // ramification index
  LSeries xs, ys; // parametrization in centered coordinates

  BPoly germ;     // defining polynomial (original coordinates)
  int index = 0;  // position among the siblings, stable across budgets
  int budget = 0; // expansion budget used

  // Known series terms as (exponent in X-units, coefficient), exponents
  // strictly increasing with denominator dividing e.
  std::vector<std::pair<Rat, FElem>> terms() const;
  Rat trunc_order() const;  // series known below this X-order
};

inline constexpr int kPuiseuxBudget = 16;

// All local branches of the curve g = 0 at the center, deterministically
// ordered; the count is the local branch number r. The germ must be reduced
// at the center (error "non-reduced germ") and the center must lie on the
// curve.
std::vector<PuiseuxBranch> puiseux_branches(const BPoly& g, const FElem& cx,
                                            const FElem& cy,
                                            int budget = kPuiseuxBudget);

// The same branch re-expanded with a larger budget.
PuiseuxBranch reexpand(const PuiseuxBranch& b, int budget);

// Order of contact of two distinct branches at a common center; re-expands
// internally as needed. Identical branches → InputError "infinite contact".
int branch_intersection_multiplicity(const PuiseuxBranch& a,
                                     const PuiseuxBranch& b);

// Milnor number at an isolated critical point of g (0 at non-critical
// points); error "non-isolated singularity" when the critical locus has a
// component through the center.
int local_milnor_number(const BPoly& g, const FElem& cx, const FElem& cy);

}  // namespace polyfib
