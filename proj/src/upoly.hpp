// Dense univariate polynomials over an exact field (Q or a Tower).
// Degree-indexed coefficient vector; leading coefficient nonzero unless
// the polynomial is zero.

#pragma once

#include <vector>

#include "fields.hpp"

namespace polyfib {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FElem> c) : c_(std::move(c)) { trim(); }
  static UPoly zero() { return UPoly(); }
  static UPoly one() { return constant(FElem(1)); }
  static UPoly constant(FElem a);
  static UPoly x() { return UPoly({FElem(0), FElem(1)}); }
  // c1*x + c0
  static UPoly linear(FElem c1, FElem c0) { return UPoly({std::move(c0), std::move(c1)}); }
  static UPoly monomial(FElem a, int k);

  bool is_zero() const { return c_.empty(); }
  int deg() const { return (int)c_.size() - 1; }  // -1 for zero
  const FElem& lc() const;
  FElem coef(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : FElem(0); }
  const std::vector<FElem>& coefs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const FElem& s) const;
  bool operator==(const UPoly& o) const { return (*this - o).is_zero(); }

  UPoly derivative() const;
  FElem eval(const FElem& x) const;
  CBox eval_box(const CBox& z) const;  // interval evaluation
  UPoly monic() const;
  // substitute x -> a*x (scale) and x -> x + a (shift)
  UPoly scale_arg(const FElem& a) const;
  UPoly shift_arg(const FElem& a) const;
  UPoly compose(const UPoly& inner) const;
  UPoly reverse() const;  // x^deg * p(1/x)

  // Field division: *this = q*d + r with deg r < deg d.
  static void divmod(const UPoly& n, const UPoly& d, UPoly* q, UPoly* r);
  UPoly divexact(const UPoly& d) const;  // throws if remainder nonzero

  static UPoly gcd(UPoly a, UPoly b);  // monic gcd
  // Resultant of a and b (field coefficients).
  static FElem resultant(UPoly a, UPoly b);
  UPoly squarefree_part() const;
  // Yun decomposition: list of (factor, multiplicity), factors squarefree
  // and pairwise coprime; product of factor^mult * unit equals *this.
  std::vector<std::pair<UPoly, int>> squarefree_decomposition() const;

  // Interval enclosures of all coefficients; refine backing fields.
  std::vector<CBox> coef_boxes() const;
  void refine_fields() const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<FElem> c_;
  void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
};

// Convenience: polynomial with rational coefficients from integer list.
UPoly upoly_from_ints(const std::vector<long>& c);

}  // namespace polyfib
