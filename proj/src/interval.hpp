// Complex rectangular interval arithmetic with exact rational endpoints.
// Used only for root isolation and embedding decisions; every interval
// answer that feeds a decision is backed by an exact refinement loop.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <string>

namespace polyfib {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

// Round r toward -inf (down) / +inf (up) onto the grid Z/2^prec.
Rat dyadic_floor(const Rat& r, int prec);
Rat dyadic_ceil(const Rat& r, int prec);

struct RatIv {
  Rat lo, hi;

  RatIv() : lo(0), hi(0) {}
  RatIv(const Rat& x) : lo(x), hi(x) {}
  RatIv(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) { assert(lo <= hi); }

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  RatIv operator+(const RatIv& o) const { return {lo + o.lo, hi + o.hi}; }
  RatIv operator-(const RatIv& o) const { return {lo - o.hi, hi - o.lo}; }
  RatIv operator-() const { return {-hi, -lo}; }
  RatIv operator*(const RatIv& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }
  // Outward rounding to dyadic endpoints; keeps denominators from exploding.
  RatIv compress(int prec) const { return {dyadic_floor(lo, prec), dyadic_ceil(hi, prec)}; }
  // Open-interval semantics: touching endpoints count as disjoint.
  bool disjoint(const RatIv& o) const { return hi <= o.lo || o.hi <= lo; }
};

// Axis-aligned rectangle in the complex plane.
struct CBox {
  RatIv re, im;

  CBox() = default;
  CBox(RatIv r, RatIv i) : re(std::move(r)), im(std::move(i)) {}
  CBox(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Rat width() const { return std::max(re.width(), im.width()); }

  CBox operator+(const CBox& o) const { return {re + o.re, im + o.im}; }
  CBox operator-(const CBox& o) const { return {re - o.re, im - o.im}; }
  CBox operator-() const { return {-re, -im}; }
  CBox operator*(const CBox& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CBox compress(int prec) const { return {re.compress(prec), im.compress(prec)}; }
  bool disjoint(const CBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
  bool inside(const CBox& o) const {
    return o.re.lo <= re.lo && re.hi <= o.re.hi && o.im.lo <= im.lo && im.hi <= o.im.hi;
  }
  CBox conj() const { return {re, -im}; }
  std::string str() const;
};

// Isolating rectangle for one root; same shape as CBox but kept separate
// to mark intent (open rectangle, exactly one root inside).
using Box = CBox;

// Compression precision that keeps rounding error far below the box scale.
int interval_prec(const CBox& z);

}  // namespace polyfib
