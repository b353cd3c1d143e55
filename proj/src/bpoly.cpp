#include "bpoly.hpp"

#include <sstream>

namespace polyfib {

void BPoly::add_term(int ex, int ey, const FElem& a) {
  if (a.is_zero()) return;
  auto it = t_.find({ex, ey});
  if (it == t_.end()) {
    t_.emplace(Key{ex, ey}, a);
  } else {
    it->second = it->second + a;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BPoly BPoly::constant(const FElem& a) { return monomial(a, 0, 0); }

BPoly BPoly::monomial(FElem a, int ex, int ey) {
  BPoly p;
  if (!a.is_zero()) p.t_.emplace(Key{ex, ey}, std::move(a));
  return p;
}

BPoly BPoly::from_x(const UPoly& p) {
  BPoly out;
  for (int i = 0; i <= p.deg(); ++i) out.add_term(i, 0, p.coef(i));
  return out;
}

BPoly BPoly::from_y(const UPoly& p) {
  BPoly out;
  for (int i = 0; i <= p.deg(); ++i) out.add_term(0, i, p.coef(i));
  return out;
}

int BPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

int BPoly::deg_y() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

int BPoly::total_deg() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}

int BPoly::ord_origin() const {
  if (t_.empty()) throw ConsistencyError("ord_origin of zero polynomial");
  int d = -1;
  for (const auto& [k, v] : t_)
    d = (d < 0) ? k.first + k.second : std::min(d, k.first + k.second);
  return d;
}

FElem BPoly::coef(int ex, int ey) const {
  auto it = t_.find({ex, ey});
  return it == t_.end() ? FElem(0) : it->second;
}

BPoly BPoly::operator+(const BPoly& o) const {
  BPoly out = *this;
  for (const auto& [k, v] : o.t_) out.add_term(k.first, k.second, v);
  return out;
}

BPoly BPoly::operator-() const {
  BPoly out;
  for (const auto& [k, v] : t_) out.t_.emplace(k, -v);
  return out;
}

BPoly BPoly::operator-(const BPoly& o) const { return *this + (-o); }

BPoly BPoly::operator*(const BPoly& o) const {
  BPoly out;
  for (const auto& [k1, v1] : t_)
    for (const auto& [k2, v2] : o.t_)
      out.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return out;
}

BPoly BPoly::operator*(const FElem& s) const {
  BPoly out;
  if (s.is_zero()) return out;
  for (const auto& [k, v] : t_) out.add_term(k.first, k.second, v * s);
  return out;
}

BPoly BPoly::derivative_x() const {
  BPoly out;
  for (const auto& [k, v] : t_)
    if (k.first > 0) out.add_term(k.first - 1, k.second, v * FElem((long)k.first));
  return out;
}

BPoly BPoly::derivative_y() const {
  BPoly out;
  for (const auto& [k, v] : t_)
    if (k.second > 0) out.add_term(k.first, k.second - 1, v * FElem((long)k.second));
  return out;
}

BPoly BPoly::swap_vars() const {
  BPoly out;
  for (const auto& [k, v] : t_) out.t_.emplace(Key{k.second, k.first}, v);
  return out;
}

BPoly BPoly::homogeneous_part(int d) const {
  BPoly out;
  for (const auto& [k, v] : t_)
    if (k.first + k.second == d) out.t_.emplace(k, v);
  return out;
}

FElem BPoly::eval(const FElem& x, const FElem& y) const {
  return subst_x(x).eval(y);
}

UPoly BPoly::subst_x(const FElem& a) const {
  int dy = deg_y();
  std::vector<FElem> c(dy + 1 > 0 ? dy + 1 : 0, FElem(0));
  for (const auto& [k, v] : t_) {
    FElem p(1);
    for (int i = 0; i < k.first; ++i) p = p * a;
    c[k.second] = c[k.second] + v * p;
  }
  return UPoly(std::move(c));
}

UPoly BPoly::subst_y(const FElem& b) const { return swap_vars().subst_x(b); }

BPoly BPoly::subst(const BPoly& px, const BPoly& py) const {
  // Horner in y over Horner in x.
  int dy = deg_y();
  BPoly acc;
  for (int j = dy; j >= 0; --j) {
    BPoly row;
    UPoly cj = coef_y(j);
    for (int i = cj.deg(); i >= 0; --i) row = row * px + constant(cj.coef(i));
    acc = acc * py + row;
  }
  return acc;
}

UPoly BPoly::coef_y(int k) const {
  int dx = deg_x();
  std::vector<FElem> c(dx + 1 > 0 ? dx + 1 : 0, FElem(0));
  for (const auto& [key, v] : t_)
    if (key.second == k) c[key.first] = v;
  return UPoly(std::move(c));
}

UPoly BPoly::coef_x(int k) const { return swap_vars().coef_y(k); }

std::vector<UPoly> BPoly::coeffs_wrt_y() const {
  int dy = deg_y();
  std::vector<UPoly> out(dy + 1 > 0 ? dy + 1 : 0);
  for (int k = 0; k <= dy; ++k) out[k] = coef_y(k);
  return out;
}

BPoly BPoly::from_coeffs_wrt_y(const std::vector<UPoly>& c) {
  BPoly out;
  for (size_t k = 0; k < c.size(); ++k)
    for (int i = 0; i <= c[k].deg(); ++i) out.add_term(i, (int)k, c[k].coef(i));
  return out;
}

// ---------------------------------------------------------------------------
// Division

BPoly BPoly::divexact(const BPoly& d) const {
  if (d.is_zero()) throw ConsistencyError("BPoly division by zero");
  if (is_zero()) return BPoly();
  if (d.deg_y() == 0) {
    // Divisor lives in F[x]: divide each y-coefficient.
    UPoly dv = d.coef_y(0);
    std::vector<UPoly> c = coeffs_wrt_y();
    for (auto& ci : c) ci = ci.divexact(dv);
    return from_coeffs_wrt_y(c);
  }
  std::vector<UPoly> num = coeffs_wrt_y();
  std::vector<UPoly> den = d.coeffs_wrt_y();
  int dd = (int)den.size() - 1;
  if ((int)num.size() - 1 < dd) throw ConsistencyError("divexact: not divisible");
  std::vector<UPoly> quo(num.size() - dd);
  for (int k = (int)num.size() - 1; k >= dd; --k) {
    if (num[k].is_zero()) continue;
    UPoly q = num[k].divexact(den[dd]);
    quo[k - dd] = q;
    for (int i = 0; i <= dd; ++i) num[k - dd + i] = num[k - dd + i] - q * den[i];
  }
  for (const auto& r : num)
    if (!r.is_zero()) throw ConsistencyError("divexact: nonzero remainder");
  return from_coeffs_wrt_y(quo);
}

int BPoly::remove_factor(const BPoly& d, BPoly* quotient) const {
  if (d.is_constant()) throw ConsistencyError("remove_factor: constant factor");
  BPoly cur = *this;
  int count = 0;
  while (!cur.is_zero()) {
    BPoly q;
    try {
      q = cur.divexact(d);
    } catch (const ConsistencyError&) {
      break;
    }
    cur = q;
    ++count;
  }
  if (quotient) *quotient = cur;
  return count;
}

UPoly BPoly::content_y() const {
  UPoly g;
  for (const auto& c : coeffs_wrt_y()) g = UPoly::gcd(g, c);
  return g;
}

BPoly BPoly::primitive_part_y() const {
  if (is_zero()) return *this;
  return divexact(from_x(content_y()));
}

// ---------------------------------------------------------------------------
// Resultants (subresultant PRS over F[x])

namespace {

using YPoly = std::vector<UPoly>;  // y-degree indexed, entries in F[x]

int ydeg(const YPoly& p) { return (int)p.size() - 1; }

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly yscale(const YPoly& p, const UPoly& s) {
  YPoly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] * s;
  return out;
}

// Pseudo-remainder: prem(A,B) = lc(B)^{degA-degB+1} * A mod B.
YPoly yprem(YPoly a, const YPoly& b) {
  int db = ydeg(b);
  const UPoly& lb = b.back();
  int e = ydeg(a) - db + 1;
  while (ydeg(a) >= db) {
    UPoly la = a.back();
    YPoly next = yscale(a, lb);
    int shift = ydeg(a) - db;
    for (int i = 0; i <= db; ++i) next[shift + i] = next[shift + i] - la * b[i];
    next.pop_back();
    ytrim(next);
    a = std::move(next);
    --e;
  }
  UPoly f = UPoly::one();
  for (int i = 0; i < e; ++i) f = f * lb;
  return yscale(a, f);
}

UPoly upow(const UPoly& b, int e) {
  UPoly out = UPoly::one();
  for (int i = 0; i < e; ++i) out = out * b;
  return out;
}

UPoly subres_resultant(YPoly a, YPoly b) {
  ytrim(a);
  ytrim(b);
  if (a.empty() || b.empty()) return UPoly();
  bool neg = false;
  if (ydeg(a) < ydeg(b)) {
    if ((ydeg(a) & 1) && (ydeg(b) & 1)) neg = true;
    std::swap(a, b);
  }
  if (ydeg(b) == 0) {
    UPoly r = upow(b[0], ydeg(a));
    return neg ? -r : r;
  }
  UPoly g = UPoly::one(), h = UPoly::one();
  while (true) {
    int da = ydeg(a), db = ydeg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) neg = !neg;
    YPoly r = yprem(a, b);
    ytrim(r);
    a = std::move(b);
    UPoly div = g * upow(h, delta);
    b.clear();
    b.reserve(r.size());
    for (const auto& c : r) b.push_back(c.divexact(div));
    g = a.back();
    // h = h^{1-delta} g^delta
    h = (delta == 0) ? h : upow(g, delta).divexact(upow(h, delta - 1));
    if (b.empty()) return UPoly();
    if (ydeg(b) == 0) {
      UPoly res = upow(b[0], ydeg(a)).divexact(upow(h, ydeg(a) - 1));
      return neg ? -res : res;
    }
  }
}

}  // namespace

UPoly BPoly::resultant_y(const BPoly& a, const BPoly& b) {
  return subres_resultant(a.coeffs_wrt_y(), b.coeffs_wrt_y());
}

UPoly BPoly::resultant_x(const BPoly& a, const BPoly& b) {
  return resultant_y(a.swap_vars(), b.swap_vars());
}

UPoly BPoly::discriminant_y() const {
  int n = deg_y();
  if (n <= 0) return UPoly::one();
  UPoly r = resultant_y(*this, derivative_y());
  UPoly d = r.divexact(coef_y(n));
  return ((n * (n - 1) / 2) % 2) ? -d : d;
}

// ---------------------------------------------------------------------------
// gcd / squarefree

BPoly BPoly::gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.deg_y() == 0 && b.deg_y() == 0)
    return from_x(UPoly::gcd(a.coef_y(0), b.coef_y(0)));
  UPoly cont = UPoly::gcd(a.content_y(), b.content_y());
  BPoly A = a.primitive_part_y(), B = b.primitive_part_y();
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  // Primitive PRS in y.
  while (!B.is_zero() && B.deg_y() > 0) {
    YPoly r = yprem(A.coeffs_wrt_y(), B.coeffs_wrt_y());
    ytrim(r);
    A = std::move(B);
    B = from_coeffs_wrt_y(r).primitive_part_y();
  }
  BPoly g = B.is_zero() ? A : constant(FElem(1));
  g = g.primitive_part_y() * from_x(cont);
  // Normalize: monic leading coefficient in lex (y, then x).
  UPoly lead = g.coef_y(g.deg_y());
  return g * lead.lc().inv();
}

BPoly BPoly::squarefree_part() const {
  if (is_zero() || total_deg() <= 0) return *this;
  BPoly g = gcd(gcd(*this, derivative_x()), derivative_y());
  return divexact(g);
}

void BPoly::refine_fields() const {
  for (const auto& [k, v] : t_) v.refine_fields();
}

std::string BPoly::str(const std::string& vx, const std::string& vy) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    os << it->second.str();
    if (it->first.first >= 1) {
      os << "*" << vx;
      if (it->first.first >= 2) os << "^" << it->first.first;
    }
    if (it->first.second >= 1) {
      os << "*" << vy;
      if (it->first.second >= 2) os << "^" << it->first.second;
    }
    first = false;
  }
  return os.str();
}

}  // namespace polyfib
