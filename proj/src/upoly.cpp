#include "upoly.hpp"

#include <sstream>

namespace polyfib {

UPoly UPoly::constant(FElem a) {
  if (a.is_zero()) return UPoly();
  return UPoly(std::vector<FElem>{std::move(a)});
}

UPoly UPoly::monomial(FElem a, int k) {
  if (a.is_zero()) return UPoly();
  std::vector<FElem> c(k + 1, FElem(0));
  c[k] = std::move(a);
  return UPoly(std::move(c));
}

const FElem& UPoly::lc() const {
  if (c_.empty()) throw ConsistencyError("lc of zero polynomial");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<FElem> c(std::max(c_.size(), o.c_.size()), FElem(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  std::vector<FElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly();
  std::vector<FElem> c(c_.size() + o.c_.size() - 1, FElem(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = c[i + j] + c_[i] * o.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const FElem& s) const {
  if (s.is_zero()) return UPoly();
  std::vector<FElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * s);
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<FElem> c(c_.size() - 1, FElem(0));
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * FElem((long)i);
  return UPoly(std::move(c));
}

FElem UPoly::eval(const FElem& x) const {
  FElem acc(0);
  for (int i = (int)c_.size() - 1; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

CBox UPoly::eval_box(const CBox& z) const {
  int prec = interval_prec(z);
  CBox acc(Rat(0), Rat(0));
  for (int i = (int)c_.size() - 1; i >= 0; --i)
    acc = (acc * z + c_[i].interval()).compress(prec);
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

UPoly UPoly::scale_arg(const FElem& a) const {
  std::vector<FElem> c = c_;
  FElem p(1);
  for (size_t i = 1; i < c.size(); ++i) {
    p = p * a;
    c[i] = c[i] * p;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::shift_arg(const FElem& a) const {
  // Horner-style Taylor shift.
  UPoly acc;
  UPoly lin = UPoly::linear(FElem(1), a);  // x + a
  for (int i = (int)c_.size() - 1; i >= 0; --i)
    acc = acc * lin + UPoly::constant(c_[i]);
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (int i = (int)c_.size() - 1; i >= 0; --i)
    acc = acc * inner + UPoly::constant(c_[i]);
  return acc;
}

UPoly UPoly::reverse() const {
  std::vector<FElem> c(c_.rbegin(), c_.rend());
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& n, const UPoly& d, UPoly* q, UPoly* r) {
  if (d.is_zero()) throw ConsistencyError("polynomial division by zero");
  std::vector<FElem> rem = n.c_;
  int dd = d.deg();
  std::vector<FElem> quo(n.deg() >= dd ? n.deg() - dd + 1 : 0, FElem(0));
  FElem lcinv = d.lc().inv();
  for (int k = (int)rem.size() - 1; k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    FElem f = rem[k] * lcinv;
    quo[k - dd] = f;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] = rem[k - dd + i] - f * d.c_[i];
  }
  if (q) *q = UPoly(std::move(quo));
  if (r) *r = UPoly(std::move(rem));
}

UPoly UPoly::divexact(const UPoly& d) const {
  UPoly q, r;
  divmod(*this, d, &q, &r);
  if (!r.is_zero()) throw ConsistencyError("divexact: nonzero remainder");
  return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r;
    divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

FElem UPoly::resultant(UPoly a, UPoly b) {
  if (a.is_zero() || b.is_zero()) return FElem(0);
  FElem acc(1);
  bool neg = false;
  while (true) {
    if (b.deg() == 0) {
      FElem p(1);
      for (int i = 0; i < a.deg(); ++i) p = p * b.lc();
      acc = acc * p;
      break;
    }
    UPoly r;
    divmod(a, b, nullptr, &r);
    if (r.is_zero()) return FElem(0);
    // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
    if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
    FElem p(1);
    for (int i = 0; i < a.deg() - r.deg(); ++i) p = p * b.lc();
    acc = acc * p;
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? -acc : acc;
}

UPoly UPoly::squarefree_part() const {
  if (deg() <= 0) return is_zero() ? *this : UPoly::one();
  UPoly g = gcd(*this, derivative());
  return divexact(g).monic();
}

std::vector<std::pair<UPoly, int>> UPoly::squarefree_decomposition() const {
  std::vector<std::pair<UPoly, int>> out;
  if (deg() <= 0) return out;
  // Yun's algorithm.
  UPoly p = monic();
  UPoly dp = p.derivative();
  UPoly a = gcd(p, dp);
  UPoly b = p.divexact(a);
  UPoly c = dp.divexact(a);
  UPoly d = c - b.derivative();
  int mult = 1;
  while (b.deg() > 0) {
    UPoly t = gcd(b, d);
    if (t.deg() > 0) out.emplace_back(t, mult);
    b = b.divexact(t);
    c = d.divexact(t);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

std::vector<CBox> UPoly::coef_boxes() const {
  std::vector<CBox> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.interval());
  return out;
}

void UPoly::refine_fields() const {
  for (const auto& x : c_) x.refine_fields();
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

UPoly upoly_from_ints(const std::vector<long>& c) {
  std::vector<FElem> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

}  // namespace polyfib
