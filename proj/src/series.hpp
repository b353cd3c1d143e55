// Truncated Laurent series over an exact field: coefficients for exponents
// off..trunc-1 are known, everything above trunc is unknown. Used for
// branch parametrizations and evaluations along them.

#pragma once

#include "bpoly.hpp"

namespace polyfib {

// Retryable: a series-based decision ran out of known coefficients; the
// caller should re-expand with a larger truncation window and try again.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LSeries {
  static constexpr int kExact = 1 << 28;  // "known to all orders"

  int off = 0;
  int trunc = kExact;
  std::vector<FElem> c;  // c[i] is the coefficient of t^(off+i)

  LSeries() = default;

  static LSeries zero() { return LSeries(); }

  static LSeries constant(FElem a) { return monomial(std::move(a), 0); }

  static LSeries monomial(FElem a, int e, int trunc = kExact) {
    LSeries s;
    s.off = e;
    s.trunc = trunc;
    if (e < trunc && !a.is_zero()) s.c.push_back(std::move(a));
    return s;
  }

  bool known_zero() const { return c.empty(); }

  FElem coef(int e) const {
    if (e >= trunc) throw ConsistencyError("LSeries::coef beyond truncation");
    if (e < off || e >= off + (int)c.size()) return FElem(0);
    return c[e - off];
  }

  // Lowest exponent with a nonzero coefficient; nullopt if zero to trunc.
  std::optional<int> order() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) return off + (int)i;
    return std::nullopt;
  }

  FElem lead() const {
    auto o = order();
    if (!o) throw ConsistencyError("LSeries::lead of (truncated) zero");
    return coef(*o);
  }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    if (k) {
      c.erase(c.begin(), c.begin() + k);
      off += (int)k;
    }
    if ((int)c.size() > trunc - off) c.resize(trunc - off);
  }

  LSeries truncated(int t) const {
    LSeries s = *this;
    s.trunc = std::min(s.trunc, t);
    s.normalize();
    return s;
  }

  LSeries operator-() const {
    LSeries s = *this;
    for (auto& x : s.c) x = -x;
    return s;
  }

  LSeries operator+(const LSeries& o) const {
    LSeries s;
    s.trunc = std::min(trunc, o.trunc);
    if (c.empty() && o.c.empty()) return s;
    int lo = std::min(c.empty() ? kExact : off, o.c.empty() ? kExact : o.off);
    int hi = std::max(c.empty() ? -kExact : off + (int)c.size(),
                      o.c.empty() ? -kExact : o.off + (int)o.c.size());
    hi = std::min(hi, s.trunc);
    if (hi <= lo) return s;
    s.off = lo;
    s.c.assign(hi - lo, FElem(0));
    for (size_t i = 0; i < c.size(); ++i) {
      int e = off + (int)i;
      if (e < s.trunc) s.c[e - s.off] = c[i];
    }
    for (size_t i = 0; i < o.c.size(); ++i) {
      int e = o.off + (int)i;
      if (e < s.trunc) s.c[e - s.off] = s.c[e - s.off] + o.c[i];
    }
    s.normalize();
    return s;
  }

  LSeries operator-(const LSeries& o) const { return *this + (-o); }

  LSeries operator*(const LSeries& o) const {
    bool az = c.empty(), bz = o.c.empty();
    if ((az && trunc >= kExact) || (bz && o.trunc >= kExact)) return LSeries();
    // Lower bounds for the order of each factor.
    int la = az ? trunc : off;
    int lb = bz ? o.trunc : o.off;
    LSeries s;
    s.trunc = (int)std::min(std::min((long)trunc + lb, (long)o.trunc + la), (long)kExact);
    if (az || bz) return s;
    s.off = off + o.off;
    int len = (int)std::max(0L, std::min((long)c.size() + (long)o.c.size() - 1,
                                         (long)s.trunc - s.off));
    s.c.assign(len, FElem(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (size_t j = 0; j < o.c.size(); ++j) {
        int k = (int)(i + j);
        if (k >= len) break;
        s.c[k] = s.c[k] + c[i] * o.c[j];
      }
    }
    s.normalize();
    return s;
  }

  LSeries operator*(const FElem& a) const {
    LSeries s = *this;
    for (auto& x : s.c) x = x * a;
    s.normalize();
    return s;
  }

  // Multiplicative inverse of a series with known nonzero lead; if the lead
  // has order m and coefficients are known below trunc, the inverse is known
  // below trunc - 2m. Throws TruncationError when no lead is known.
  LSeries inverse() const {
    auto o = order();
    if (!o) throw TruncationError("LSeries::inverse of (truncated) zero");
    int m = *o;
    FElem li = coef(m).inv();
    if (trunc >= kExact / 2 && c.size() == 1) return monomial(li, -m);
    // r = s / (lead * t^m) - 1, order >= 1.
    int rlen = trunc >= kExact / 2 ? 0 : trunc - m;  // known window of 1 + r
    if (trunc >= kExact / 2) {
      rlen = (int)c.size() + (off - m);  // exact: finitely many terms
      // exact series: inverse window still limited by the terms we can emit;
      // produce up to the same number of terms as the input plus a margin.
      rlen = std::max(rlen, 1) + std::max((int)c.size() * 2, 8);
    }
    std::vector<FElem> r(rlen, FElem(0));
    for (int k = 1; k < rlen; ++k) r[k] = coef(m + k) * li;
    std::vector<FElem> d(rlen, FElem(0));
    if (rlen > 0) d[0] = FElem(1);
    for (int k = 1; k < rlen; ++k) {
      FElem acc(0);
      for (int j = 1; j <= k; ++j) acc = acc + r[j] * d[k - j];
      d[k] = -acc;
    }
    LSeries s;
    s.off = -m;
    s.trunc = trunc >= kExact / 2 ? -m + rlen : trunc - 2 * m;
    s.c.resize(std::min<size_t>(d.size(), (size_t)std::max(0, s.trunc - s.off)));
    for (size_t i = 0; i < s.c.size(); ++i) s.c[i] = d[i] * li;
    s.normalize();
    return s;
  }

  // t -> a * t^q (q >= 1): exponents scale by q, coefficient of t^e gains a^e.
  LSeries subst_scale(const FElem& a, int q) const {
    LSeries s;
    s.trunc = trunc >= kExact / 2 ? kExact : trunc * q;
    s.off = off * q;
    s.c.assign(c.size() ? (c.size() - 1) * q + 1 : 0, FElem(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      int e = off + (int)i;
      FElem p(1);
      // a^e with e possibly negative
      if (e >= 0) {
        for (int k = 0; k < e; ++k) p = p * a;
      } else {
        FElem ai = a.inv();
        for (int k = 0; k < -e; ++k) p = p * ai;
      }
      s.c[i * q] = c[i] * p;
    }
    s.normalize();
    return s;
  }
};

// f(x(t), y(t)) for a bivariate polynomial with nonnegative exponents.
inline LSeries series_compose(const BPoly& f, const LSeries& x, const LSeries& y) {
  // Horner in y, inner Horner in x.
  LSeries acc;  // exact zero
  int dy = f.deg_y();
  for (int j = dy; j >= 0; --j) {
    UPoly row = f.coef_y(j);
    LSeries rs;
    for (int i = row.deg(); i >= 0; --i) {
      rs = rs * x + LSeries::constant(row.coef(i));
    }
    acc = acc * y + rs;
  }
  return acc;
}

}  // namespace polyfib
