// Factorization over number-field towers (Trager's norm method), root
// adjunction, and conversion of tower elements to algebraic numbers.

#pragma once

#include <functional>

#include "bpoly.hpp"
#include "rootisol.hpp"
#include "zfactor.hpp"

namespace polyfib {

// Monic irreducible factors over K (null = Q) with multiplicities,
// deterministically ordered.
std::vector<std::pair<UPoly, int>> factor_over(const UPoly& f, const TowerPtr& K);

bool is_irreducible_over(const UPoly& f, const TowerPtr& K);

// Roots of f that lie in K itself (degree-1 factors), each once.
std::vector<FElem> roots_in_field(const UPoly& f, const TowerPtr& K);

// One entry per complex root of the squarefree part of f: the K-irreducible
// minimal polynomial, a field containing the root with the embedding fixed
// (K itself for degree-1 factors), and the root as an element of it.
struct FieldRoot {
  UPoly minpoly;  // over K, monic irreducible
  TowerPtr field;
  FElem value;
};
std::vector<FieldRoot> roots_over(const UPoly& f, const TowerPtr& K);

// Monic irreducible minimal polynomial over Q of a tower element.
UPoly minpoly_over_Q(const FElem& x);

// The element as an algebraic number (embedding taken from its tower).
AlgNum algnum_of(const FElem& x);

// Adjoin the root of monic irreducible q over K sitting in `which` (one of
// isolate_roots(q)). Extensions of an already-extended field are flattened
// through a primitive element, so towers stay at most two levels deep;
// `embed` maps elements of K into the returned field.
struct Extension {
  TowerPtr field;
  FElem root;
  std::function<FElem(const FElem&)> embed;
};
Extension adjoin_root(const UPoly& q, const TowerPtr& K, const Box& which);

// Field embedding: maps elements of one tower (and its ancestors) into
// another field elementwise.
using FieldEmb = std::function<FElem(const FElem&)>;

UPoly map_upoly(const UPoly& f, const FieldEmb& e);
BPoly map_bpoly(const BPoly& f, const FieldEmb& e);

// Adjoin the specific complex root of q (monic, squarefree over K, but not
// necessarily irreducible) isolated by `box`.
Extension adjoin_value(const UPoly& q, const TowerPtr& K, Box box);

// A common field containing both a and b, with embeddings of each.
struct Compositum {
  TowerPtr field;
  FieldEmb from_a, from_b;
};
Compositum compose_fields(const TowerPtr& a, const TowerPtr& b);

}  // namespace polyfib
