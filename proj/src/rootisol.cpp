#include "rootisol.hpp"

#include <optional>
#include <sstream>

#include "bpoly.hpp"

namespace polyfib {

namespace {

struct BoundaryHit {};

// Open half-plane certificate for an enclosure: 0 Re>0, 1 Im>0, 2 Re<0,
// 3 Im<0; -1 if none applies.
int label_of(const CBox& v) {
  if (sgn(v.re.lo) > 0) return 0;
  if (sgn(v.im.lo) > 0) return 1;
  if (sgn(v.re.hi) < 0) return 2;
  if (sgn(v.im.hi) < 0) return 3;
  return -1;
}

constexpr int kMaxSegDepth = 48;

// Labels along a boundary segment, in traversal order from t0 to t1.
// horizontal: im fixed at `fix`, re runs t0 -> t1 (either direction).
void seg_labels(const UPoly& p, bool horizontal, const Rat& fix, const Rat& t0,
                const Rat& t1, int depth, std::vector<int>& out) {
  RatIv run(std::min(t0, t1), std::max(t0, t1));
  CBox seg = horizontal ? CBox(run, RatIv(fix)) : CBox(RatIv(fix), run);
  CBox v = p.eval_box(seg);
  int l = label_of(v);
  if (l >= 0) {
    out.push_back(l);
    return;
  }
  if (depth >= kMaxSegDepth) throw BoundaryHit{};
  if (depth > 0 && depth % 6 == 0) p.refine_fields();
  Rat m = (t0 + t1) / 2;
  seg_labels(p, horizontal, fix, t0, m, depth + 1, out);
  seg_labels(p, horizontal, fix, m, t1, depth + 1, out);
}

std::optional<int> winding_try(const UPoly& p, const CBox& b) {
  std::vector<int> labels;
  try {
    // Counterclockwise: bottom, right, top, left.
    seg_labels(p, true, b.im.lo, b.re.lo, b.re.hi, 0, labels);
    seg_labels(p, false, b.re.hi, b.im.lo, b.im.hi, 0, labels);
    seg_labels(p, true, b.im.hi, b.re.hi, b.re.lo, 0, labels);
    seg_labels(p, false, b.re.lo, b.im.hi, b.im.lo, 0, labels);
  } catch (const BoundaryHit&) {
    return std::nullopt;
  }
  int n = (int)labels.size();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    int d = (labels[(i + 1) % n] - labels[i] + 4) % 4;
    if (d == 1) ++total;
    else if (d == 3) --total;
    else if (d == 2)
      throw ConsistencyError("winding: opposite half-planes on adjacent segments");
  }
  if (total % 4 != 0) throw ConsistencyError("winding: fractional turn count");
  return total / 4;
}

// Deterministic cut positions, as fractions of the box width.
const std::vector<Rat>& split_offsets() {
  static const std::vector<Rat> k = {
      Rat(1, 2),   Rat(33, 64), Rat(31, 64),  Rat(65, 128), Rat(63, 128),
      Rat(17, 32), Rat(15, 32), Rat(129, 256), Rat(127, 256), Rat(9, 16),
      Rat(7, 16)};
  return k;
}

// Split a box with known root count k >= 1 into two with certified counts.
void split_box(const UPoly& p, const CBox& b, int k, CBox* c1, int* k1,
               CBox* c2, int* k2) {
  bool split_re = b.re.width() >= b.im.width();
  const RatIv& run = split_re ? b.re : b.im;
  for (const Rat& off : split_offsets()) {
    Rat cut = run.lo + run.width() * off;
    CBox a1 = split_re ? CBox(RatIv(run.lo, cut), b.im) : CBox(b.re, RatIv(run.lo, cut));
    CBox a2 = split_re ? CBox(RatIv(cut, run.hi), b.im) : CBox(b.re, RatIv(cut, run.hi));
    auto w1 = winding_try(p, a1);
    if (!w1) continue;
    auto w2 = winding_try(p, a2);
    if (!w2) continue;
    if (*w1 + *w2 != k)
      throw ConsistencyError("winding: subdivision lost roots");
    *c1 = a1; *k1 = *w1;
    *c2 = a2; *k2 = *w2;
    return;
  }
  throw ConsistencyError("root isolation: no admissible cut line");
}

Rat rabs(const Rat& x) { return sgn(x) < 0 ? Rat(-x) : x; }

Rat mag_hi(const CBox& b) {
  Rat r = std::max(rabs(b.re.lo), rabs(b.re.hi));
  Rat i = std::max(rabs(b.im.lo), rabs(b.im.hi));
  return r + i;
}

Rat mag_lo(const CBox& b) {
  Rat r = b.re.contains_zero() ? Rat(0) : std::min(rabs(b.re.lo), rabs(b.re.hi));
  Rat i = b.im.contains_zero() ? Rat(0) : std::min(rabs(b.im.lo), rabs(b.im.hi));
  return std::max(r, i);
}

}  // namespace

std::optional<int> try_winding(const UPoly& p, const CBox& box) {
  return winding_try(p, box);
}

int winding_count(const UPoly& p, const CBox& box) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto w = winding_try(p, box);
    if (w) return *w;
    p.refine_fields();
  }
  throw ConsistencyError("winding: root on or too near box boundary");
}

std::vector<Box> isolate_roots(const UPoly& p) {
  int n = p.deg();
  if (n < 0) throw InputError("isolate_roots: zero polynomial");
  if (n == 0) return {};
  // Cauchy bound 1 + max|a_i| / |a_n| from current enclosures.
  Rat lclo;
  for (;;) {
    lclo = mag_lo(p.coefs().back().interval());
    if (sgn(lclo) > 0) break;
    p.refine_fields();
  }
  Rat m(0);
  for (int i = 0; i < n; ++i) m = std::max(m, mag_hi(p.coefs()[i].interval()));
  Rat R = 1 + m / lclo;

  // Asymmetric bounds keep roots off the cut grid in the common symmetric cases.
  CBox all;
  int found = -1;
  for (int attempt = 0; attempt < 24 && found != n; ++attempt) {
    Rat s = R * Rat(101 + attempt, 100);
    all = CBox(RatIv(-s - s / Rat(97 + attempt), s + s / Rat(89 + attempt)),
               RatIv(-s - s / Rat(83 + attempt), s + s / Rat(79 + attempt)));
    auto w = winding_try(p, all);
    if (w) found = *w;
  }
  if (found != n)
    throw ConsistencyError("root isolation: could not certify the full root count");

  std::vector<Box> out;
  std::vector<std::pair<CBox, int>> work{{all, n}};
  while (!work.empty()) {
    auto [b, k] = work.back();
    work.pop_back();
    if (k == 0) continue;
    if (k == 1) {
      out.push_back(b);
      continue;
    }
    CBox c1, c2;
    int k1, k2;
    split_box(p, b, k, &c1, &k1, &c2, &k2);
    work.push_back({c1, k1});
    work.push_back({c2, k2});
  }
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
    if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
    return a.im.lo < b.im.lo;
  });
  return out;
}

Box refine_root_box(const UPoly& p, const Box& box) {
  CBox c1, c2;
  int k1, k2;
  split_box(p, box, 1, &c1, &k1, &c2, &k2);
  return k1 == 1 ? c1 : c2;
}

Box refine_root_box_to(const UPoly& p, Box box, const Rat& eps) {
  while (box.width() >= eps) box = refine_root_box(p, box);
  return box;
}

void Tower::refine_gen() const {
  UPoly m{std::vector<FElem>(minpoly_)};
  box_ = refine_root_box(m, box_);
}

// ---------------------------------------------------------------------------
// Sturm chains (rational coefficients)

int sturm_count(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (p.deg() <= 0) return 0;
  std::vector<UPoly> chain{p, p.derivative()};
  while (chain.back().deg() > 0) {
    UPoly r;
    UPoly::divmod(chain[chain.size() - 2], chain.back(), nullptr, &r);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&chain](const Rat& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
      int s = q.is_zero() ? 0 : sgn(q.eval(FElem(x)).rat());
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

// ---------------------------------------------------------------------------
// AlgNum

AlgNum::AlgNum(const Rat& r)
    : minpoly_(UPoly::linear(FElem(1), FElem(-r))), box_(r, Rat(0)) {}

AlgNum::AlgNum(UPoly minpoly, Box box)
    : minpoly_(std::move(minpoly)), box_(std::move(box)) {
  if (minpoly_.deg() < 1 || !minpoly_.lc().is_one())
    throw ConsistencyError("AlgNum: minimal polynomial must be monic nonconstant");
}

Rat AlgNum::rat() const {
  if (minpoly_.deg() != 1) throw ConsistencyError("AlgNum::rat on irrational value");
  return -minpoly_.coef(0).rat();
}

bool AlgNum::is_real() const {
  if (minpoly_.deg() == 1) return true;
  if (!box_.im.contains_zero()) return false;
  // Irreducible of degree >= 2 has no rational roots, so the endpoints
  // are safe for a Sturm count; a real root in the rectangle must be ours.
  return sturm_count(minpoly_, box_.re.lo, box_.re.hi) > 0;
}

void AlgNum::refine() const { box_ = refine_root_box(minpoly_, box_); }

Box AlgNum::box_refined_to(const Rat& eps) const {
  while (box_.width() >= eps) refine();
  return box_;
}

bool AlgNum::operator==(const AlgNum& o) const {
  if (!(minpoly_ == o.minpoly_)) return false;
  if (minpoly_.deg() == 1) return true;
  // Shrink only one side: boxes have root-free boundaries, so either this
  // box collapses into the other (same root) or separates from it.
  for (;;) {
    if (box_.disjoint(o.box_)) return false;
    if (box_.inside(o.box_)) return true;
    refine();
  }
}

AlgNum AlgNum::conj() const { return AlgNum(minpoly_, box_.conj()); }

namespace {

int rat_cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

// Sturm count on a slightly widened interval whose endpoints avoid roots.
int sturm_count_safe(const UPoly& p, Rat lo, Rat hi) {
  Rat w = (hi - lo) + Rat(1, 1024);
  while (p.eval(FElem(lo)).is_zero()) lo -= w / 997;
  while (p.eval(FElem(hi)).is_zero()) hi += w / 991;
  return sturm_count(p, lo, hi);
}

// Squarefree rational polynomial whose roots include twice the real part
// of every root of p: res_y(p(y), p(x-y)).
UPoly twice_re_poly(const UPoly& p) {
  BPoly a = BPoly::from_y(p);
  BPoly b = a.subst(BPoly::x(), BPoly::x() - BPoly::y());
  return BPoly::resultant_y(a, b).squarefree_part();
}

// Interval around 2*re(a) isolating exactly one root of s.
RatIv isolate_in(const UPoly& s, const AlgNum& a) {
  for (;;) {
    Box b = a.box();
    Rat lo = 2 * b.re.lo, hi = 2 * b.re.hi;
    Rat w = (hi - lo) + Rat(1, 1024);
    while (s.eval(FElem(lo)).is_zero()) lo -= w / 997;
    while (s.eval(FElem(hi)).is_zero()) hi += w / 991;
    if (sturm_count(s, lo, hi) == 1) return RatIv(lo, hi);
    a.refine();
  }
}

}  // namespace

int AlgNum::compare(const AlgNum& a, const AlgNum& b) {
  if (a.degree() == 1 && b.degree() == 1) return rat_cmp(a.rat(), b.rat());
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = rat_cmp(a.minpoly_.coef(i).rat(), b.minpoly_.coef(i).rat());
    if (c != 0) return c;
  }
  if (a == b) return 0;
  // Same minimal polynomial, distinct roots. Decide the real-part tie
  // exactly: both 2*re values are roots of the same rational polynomial.
  UPoly s = twice_re_poly(a.minpoly_);
  RatIv ib = isolate_in(s, b);
  bool same_re = false;
  for (;;) {
    RatIv ia = isolate_in(s, a);
    if (ia.disjoint(ib)) break;
    if (ib.lo < ia.lo && ia.hi < ib.hi) {
      same_re = true;
      break;
    }
    a.refine();
  }
  if (!same_re) {
    for (;;) {
      if (a.box_.re.disjoint(b.box_.re))
        return a.box_.re.hi <= b.box_.re.lo ? -1 : 1;
      a.refine();
      b.refine();
    }
  }
  for (;;) {
    if (a.box_.im.disjoint(b.box_.im))
      return a.box_.im.hi <= b.box_.im.lo ? -1 : 1;
    a.refine();
    b.refine();
  }
}

std::string AlgNum::str() const {
  if (minpoly_.deg() == 1) {
    std::ostringstream os;
    os << rat();
    return os.str();
  }
  return "root(" + minpoly_.str() + ", " + box_.str() + ")";
}

}  // namespace polyfib
