// Exact coefficient fields: the rationals and iterated number-field
// extensions (towers). A Tower node is Q(g_1,...,g_k) presented by the
// monic minimal polynomial of g_k over the parent together with an
// isolating box fixing the complex embedding of g_k.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "interval.hpp"

namespace polyfib {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Errors follow the spec'd classes: bad input vs internal inconsistency.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q or of a Tower. Immutable value type.
class FElem {
 public:
  FElem() : rat_(0) {}
  FElem(Rat r) : rat_(std::move(r)) {}
  FElem(long n) : rat_(n) {}
  FElem(int n) : rat_(n) {}
  // Element of field f with coefficient vector over the parent field
  // (degree-indexed, length <= deg(f); trailing zeros trimmed).
  FElem(TowerPtr f, std::vector<FElem> coef);

  static FElem gen(const TowerPtr& f);

  const TowerPtr& field() const { return field_; }
  bool is_rational() const { return field_ == nullptr; }
  const Rat& rat() const;
  // Coefficient of gen^i as element of the parent field.
  FElem coef(int i) const;
  const std::vector<FElem>& coefs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FElem operator+(const FElem& o) const;
  FElem operator-(const FElem& o) const;
  FElem operator*(const FElem& o) const;
  FElem operator/(const FElem& o) const;
  FElem operator-() const;
  FElem inv() const;
  bool operator==(const FElem& o) const;
  bool operator!=(const FElem& o) const { return !(*this == o); }

  FElem& operator+=(const FElem& o) { return *this = *this + o; }
  FElem& operator-=(const FElem& o) { return *this = *this - o; }
  FElem& operator*=(const FElem& o) { return *this = *this * o; }

  // Lift into a field that has this element's field on its parent chain.
  static FElem promote(const FElem& x, const TowerPtr& f);
  // Deepest of the two fields; throws if neither contains the other.
  static TowerPtr join(const TowerPtr& a, const TowerPtr& b);

  // Interval enclosure at the fields' current refinement state.
  CBox interval() const;
  // Refine every generator box on this element's tower chain.
  void refine_fields() const;

  std::string str() const;

 private:
  TowerPtr field_;       // null => rational
  Rat rat_;              // valid when field_ == null
  std::vector<FElem> c_; // valid when field_ != null; entries in parent field
  void trim();
};

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  // minpoly: monic, length deg+1, coefficients in `parent` (or rational when
  // parent is null). The caller is responsible for irreducibility; the
  // public construction paths in nffactor verify it by factorization.
  static TowerPtr make(TowerPtr parent, std::vector<FElem> monic_minpoly,
                       Box gen_box, std::string gen_name);

  const TowerPtr& parent() const { return parent_; }
  int degree() const { return (int)minpoly_.size() - 1; }
  int abs_degree() const { return abs_degree_; }
  int depth() const { return depth_; }
  const std::vector<FElem>& minpoly() const { return minpoly_; }
  const std::string& gen_name() const { return name_; }

  Box gen_box() const { return box_; }
  // Halve the generator's isolating box (winding-number subdivision).
  void refine_gen() const;

  // True if `anc` appears on the parent chain of `t` (or anc == t, or anc null).
  static bool is_ancestor(const TowerPtr& anc, const TowerPtr& t);

 private:
  Tower() = default;
  TowerPtr parent_;
  std::vector<FElem> minpoly_;
  mutable Box box_;  // monotone shrinking refinement; logically const
  std::string name_;
  int abs_degree_ = 1;
  int depth_ = 0;
};

}  // namespace polyfib
