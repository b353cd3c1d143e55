// Univariate factorization over Q: squarefree decomposition, then
// Zassenhaus (factor mod p, Hensel lift, recombine).

#pragma once

#include "upoly.hpp"

namespace polyfib {

// Monic irreducible factors with multiplicities, sorted (degree, then
// coefficients). Input must have rational coefficients.
std::vector<std::pair<UPoly, int>> factor_rational(const UPoly& f);

bool is_irreducible_rational(const UPoly& f);

}  // namespace polyfib
