#include "fields.hpp"

#include <sstream>

#include "upoly.hpp"

namespace polyfib {

Rat dyadic_floor(const Rat& r, int prec) {
  Int num = r.get_num() << prec;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  Rat out(q, Int(1) << prec);
  out.canonicalize();
  return out;
}

Rat dyadic_ceil(const Rat& r, int prec) {
  Int num = r.get_num() << prec;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  Rat out(q, Int(1) << prec);
  out.canonicalize();
  return out;
}

int interval_prec(const CBox& z) {
  Rat w = z.width();
  if (sgn(w) <= 0) return 192;
  int num = (int)mpz_sizeinbase(w.get_num().get_mpz_t(), 2);
  int den = (int)mpz_sizeinbase(w.get_den().get_mpz_t(), 2);
  return std::max(192, den - num + 192);
}

std::string CBox::str() const {
  std::ostringstream os;
  os << "[" << re.lo << "," << re.hi << "]x[" << im.lo << "," << im.hi << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// FElem

FElem::FElem(TowerPtr f, std::vector<FElem> coef)
    : field_(std::move(f)), c_(std::move(coef)) {
  assert(field_);
  assert((int)c_.size() <= field_->degree());
  trim();
}

void FElem::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FElem FElem::gen(const TowerPtr& f) {
  return FElem(f, {FElem(0), FElem(1)});
}

const Rat& FElem::rat() const {
  if (field_) throw ConsistencyError("FElem::rat on non-rational element");
  return rat_;
}

FElem FElem::coef(int i) const {
  if (!field_) throw ConsistencyError("FElem::coef on rational element");
  if (i < 0 || i >= (int)c_.size()) return FElem(0);
  return c_[i];
}

bool FElem::is_zero() const {
  if (!field_) return sgn(rat_) == 0;
  return c_.empty();
}

bool FElem::is_one() const {
  if (!field_) return rat_ == 1;
  return c_.size() == 1 && c_[0].is_one();
}

bool Tower::is_ancestor(const TowerPtr& anc, const TowerPtr& t) {
  if (!anc) return true;
  for (TowerPtr p = t; p; p = p->parent())
    if (p == anc) return true;
  return false;
}

TowerPtr FElem::join(const TowerPtr& a, const TowerPtr& b) {
  if (Tower::is_ancestor(a, b)) return b;
  if (Tower::is_ancestor(b, a)) return a;
  throw ConsistencyError("FElem: elements of unrelated fields combined");
}

FElem FElem::promote(const FElem& x, const TowerPtr& f) {
  if (x.field_ == f) return x;
  if (!f) {
    if (!x.field_) return x;
    throw ConsistencyError("FElem::promote: cannot demote to Q");
  }
  if (!Tower::is_ancestor(x.field_, f))
    throw ConsistencyError("FElem::promote: not an ancestor field");
  // Lift through parent first, then wrap as a constant of f.
  FElem p = (x.field_ == f->parent()) ? x : promote(x, f->parent());
  return FElem(f, {std::move(p)});
}

FElem FElem::operator-() const {
  if (!field_) return FElem(-rat_);
  std::vector<FElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return FElem(field_, std::move(c));
}

FElem FElem::operator+(const FElem& o) const {
  TowerPtr f = join(field_, o.field_);
  if (!f) return FElem(rat_ + o.rat_);
  const FElem a = promote(*this, f), b = promote(o, f);
  std::vector<FElem> c(std::max(a.c_.size(), b.c_.size()), FElem(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return FElem(f, std::move(c));
}

FElem FElem::operator-(const FElem& o) const { return *this + (-o); }

FElem FElem::operator*(const FElem& o) const {
  TowerPtr f = join(field_, o.field_);
  if (!f) return FElem(rat_ * o.rat_);
  const FElem a = promote(*this, f), b = promote(o, f);
  if (a.c_.empty() || b.c_.empty()) return FElem(f, {});
  std::vector<FElem> prod(a.c_.size() + b.c_.size() - 1, FElem(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
  // Reduce modulo the monic minimal polynomial.
  const auto& m = f->minpoly();
  int d = f->degree();
  for (int k = (int)prod.size() - 1; k >= d; --k) {
    FElem lead = prod[k];
    if (lead.is_zero()) continue;
    prod[k] = FElem(0);
    for (int i = 0; i < d; ++i) prod[k - d + i] = prod[k - d + i] - lead * m[i];
  }
  prod.resize(d, FElem(0));
  return FElem(f, std::move(prod));
}

FElem FElem::inv() const {
  if (!field_) {
    if (sgn(rat_) == 0) throw ConsistencyError("division by zero");
    return FElem(1 / rat_);
  }
  if (c_.empty()) throw ConsistencyError("division by zero");
  // Extended Euclid of the representative polynomial against the minpoly,
  // over the parent field: find s with s*rep == 1 (mod minpoly).
  UPoly r0{std::vector<FElem>(field_->minpoly())};
  UPoly r1{std::vector<FElem>(c_)};
  UPoly s0, s1 = UPoly::one();
  while (r1.deg() > 0) {
    UPoly q, r;
    UPoly::divmod(r0, r1, &q, &r);
    if (r.is_zero()) throw ConsistencyError("FElem::inv: minpoly not irreducible");
    UPoly snew = s0 - q * s1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(snew);
  }
  if (r1.is_zero()) throw ConsistencyError("FElem::inv: zero divisor");
  UPoly s = s1 * r1.coef(0).inv();
  std::vector<FElem> c(s.coefs());
  return FElem(field_, std::move(c));
}

FElem FElem::operator/(const FElem& o) const { return *this * o.inv(); }

bool FElem::operator==(const FElem& o) const {
  return (*this - o).is_zero();
}

CBox FElem::interval() const {
  if (!field_) return CBox(rat_, Rat(0));
  CBox g = field_->gen_box();
  int prec = interval_prec(g);
  CBox acc(Rat(0), Rat(0));
  for (int i = (int)c_.size() - 1; i >= 0; --i)
    acc = (acc * g + c_[i].interval()).compress(prec);
  return acc;
}

void FElem::refine_fields() const {
  for (TowerPtr f = field_; f; f = f->parent()) f->refine_gen();
}

std::string FElem::str() const {
  if (!field_) {
    std::ostringstream os;
    os << rat_;
    return os.str();
  }
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*" << field_->gen_name();
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Tower

TowerPtr Tower::make(TowerPtr parent, std::vector<FElem> monic_minpoly,
                     Box gen_box, std::string gen_name) {
  if (monic_minpoly.size() < 3)
    throw ConsistencyError("Tower: extension degree must be >= 2");
  if (!monic_minpoly.back().is_one())
    throw ConsistencyError("Tower: minimal polynomial must be monic");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->parent_ = std::move(parent);
  t->minpoly_ = std::move(monic_minpoly);
  t->box_ = std::move(gen_box);
  t->name_ = std::move(gen_name);
  t->depth_ = t->parent_ ? t->parent_->depth() + 1 : 1;
  t->abs_degree_ =
      (t->parent_ ? t->parent_->abs_degree() : 1) * ((int)t->minpoly_.size() - 1);
  return t;
}

// Tower::refine_gen is implemented in rootisol.cpp (needs the winding engine).

}  // namespace polyfib
