// Sparse bivariate polynomials over an exact field, plus the resultant
// machinery (subresultant PRS) used for elimination.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "upoly.hpp"

namespace polyfib {

class BPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  BPoly() = default;
  static BPoly zero() { return BPoly(); }
  static BPoly constant(const FElem& a);
  static BPoly x() { return monomial(FElem(1), 1, 0); }
  static BPoly y() { return monomial(FElem(1), 0, 1); }
  static BPoly monomial(FElem a, int ex, int ey);
  // Lift a univariate polynomial into x (or y).
  static BPoly from_x(const UPoly& p);
  static BPoly from_y(const UPoly& p);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
  int deg_x() const;
  int deg_y() const;
  int total_deg() const;
  // Order of vanishing at the origin (minimum total degree of a term).
  int ord_origin() const;
  FElem coef(int ex, int ey) const;
  const std::map<Key, FElem>& terms() const { return t_; }

  BPoly operator+(const BPoly& o) const;
  BPoly operator-(const BPoly& o) const;
  BPoly operator*(const BPoly& o) const;
  BPoly operator-() const;
  BPoly operator*(const FElem& s) const;
  bool operator==(const BPoly& o) const { return (*this - o).is_zero(); }

  BPoly derivative_x() const;
  BPoly derivative_y() const;
  BPoly swap_vars() const;
  BPoly homogeneous_part(int d) const;

  FElem eval(const FElem& x, const FElem& y) const;
  UPoly subst_x(const FElem& a) const;  // univariate in y
  UPoly subst_y(const FElem& b) const;  // univariate in x
  // General substitution x -> px(x,y), y -> py(x,y).
  BPoly subst(const BPoly& px, const BPoly& py) const;
  BPoly shift(const FElem& a, const FElem& b) const { return subst(x() + constant(a), y() + constant(b)); }

  // Coefficient of y^k as a polynomial in x (and the transpose).
  UPoly coef_y(int k) const;
  UPoly coef_x(int k) const;
  // Coefficient list indexed by y-degree, entries in F[x].
  std::vector<UPoly> coeffs_wrt_y() const;
  static BPoly from_coeffs_wrt_y(const std::vector<UPoly>& c);

  // Exact division; throws ConsistencyError if not divisible.
  BPoly divexact(const BPoly& d) const;
  // Divide out the highest power of d possible; returns that power.
  int remove_factor(const BPoly& d, BPoly* quotient) const;

  // gcd of the F[x]-coefficients (monic), and *this / content.
  UPoly content_y() const;
  BPoly primitive_part_y() const;

  // Res_y(a, b) as an element of F[x] (subresultant PRS); Res_x likewise.
  static UPoly resultant_y(const BPoly& a, const BPoly& b);
  static UPoly resultant_x(const BPoly& a, const BPoly& b);
  // Res_y(f, f_y) / lc_y(f), with the usual sign.
  UPoly discriminant_y() const;

  static BPoly gcd(const BPoly& a, const BPoly& b);
  BPoly squarefree_part() const;

  void refine_fields() const;
  std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

 private:
  std::map<Key, FElem> t_;
  void add_term(int ex, int ey, const FElem& a);
};

}  // namespace polyfib
