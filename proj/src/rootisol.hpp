// Complex root isolation by winding numbers on rectangle boundaries.
// Works for polynomials whose coefficients admit refinable interval
// enclosures (rationals and tower elements alike), so embedding decisions
// stay exact: every count is a certified integer winding number.

#pragma once

#include <optional>

#include "upoly.hpp"

namespace polyfib {

// Number of roots of p (with multiplicity) strictly inside box.
// Throws ConsistencyError if a root cannot be pushed off the boundary
// by refinement (callers should pass boxes with no boundary roots).
int winding_count(const UPoly& p, const CBox& box);

// As above but reports failure (likely root on the boundary) instead of
// refining and throwing; for callers with their own retry policy.
std::optional<int> try_winding(const UPoly& p, const CBox& box);

// Isolating boxes for the distinct roots of a squarefree polynomial,
// in a deterministic order. deg(p) boxes are returned.
std::vector<Box> isolate_roots(const UPoly& p);

// Shrink an isolating box (exactly one root of p inside) roughly in half.
Box refine_root_box(const UPoly& p, const Box& box);
// Shrink until width < eps.
Box refine_root_box_to(const UPoly& p, Box box, const Rat& eps);

// A complex algebraic number: monic irreducible minimal polynomial over Q
// plus an isolating box selecting the embedding. Value type; the box only
// shrinks, so refinement is logically const.
class AlgNum {
 public:
  AlgNum() : minpoly_(UPoly::x()), box_(Rat(0), Rat(0)) {}
  explicit AlgNum(const Rat& r);
  // Caller warrants: minpoly monic irreducible over Q, box isolating.
  AlgNum(UPoly minpoly, Box box);

  const UPoly& minpoly() const { return minpoly_; }
  Box box() const { return box_; }
  int degree() const { return minpoly_.deg(); }
  bool is_rational() const { return minpoly_.deg() == 1; }
  Rat rat() const;  // throws unless degree 1
  bool is_real() const;

  void refine() const;
  Box box_refined_to(const Rat& eps) const;

  bool operator==(const AlgNum& o) const;
  bool operator!=(const AlgNum& o) const { return !(*this == o); }
  AlgNum conj() const;

  // Total order, deterministic across runs: by minimal polynomial
  // (degree, then coefficients), then by embedding (real part, then
  // imaginary part; real-part ties decided exactly).
  static int compare(const AlgNum& a, const AlgNum& b);
  bool operator<(const AlgNum& o) const { return compare(*this, o) < 0; }

  std::string str() const;

 private:
  UPoly minpoly_;
  mutable Box box_;
};

// Real roots of a squarefree rational polynomial in [lo, hi], via Sturm
// chains. Used for the exact real-part tie-breaks.
int sturm_count(const UPoly& p, const Rat& lo, const Rat& hi);

}  // namespace polyfib
