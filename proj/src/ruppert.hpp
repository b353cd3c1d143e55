// Absolute factorization data for a squarefree bivariate polynomial via the
// Ruppert/Gao differential equation: the solution space of
//   u_y g - u g_y = v_x g - v g_x,  deg_x u <= m-1, deg_y u <= n,
//                                   deg_x v <= m,   deg_y v <= n-1
// has dimension equal to the number of absolutely irreducible factors of g.
// The same basis yields exact membership certificates: along a branch inside
// one absolute component, u/g_x (or v/g_y) tends to a constant, and that
// vector of constants identifies the component.

#pragma once

#include "rootisol.hpp"
#include "series.hpp"

namespace polyfib {

struct AbsoluteSplit {
  BPoly g, gx, gy;
  std::vector<std::pair<BPoly, BPoly>> basis;  // (u, v) solutions, rref order
  int count() const { return (int)basis.size(); }
};

// g must be non-constant and squarefree (InputError otherwise).
AbsoluteSplit absolute_split(const BPoly& g);
int absolute_factor_count(const BPoly& g);

// Certificate vector of the absolute component containing the branch
// (x(t), y(t)), one entry per basis element. Two branches lie in the same
// component iff their vectors are equal. Throws TruncationError when the
// series are too short to decide.
std::vector<AlgNum> component_certificate(const AbsoluteSplit& s,
                                          const LSeries& x, const LSeries& y);

}  // namespace polyfib
