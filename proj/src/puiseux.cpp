#include "puiseux.hpp"

#include <algorithm>
#include <numeric>

namespace polyfib {

namespace {

FieldEmb id_emb() {
  return [](const FElem& x) { return x; };
}

FieldEmb compose_emb(FieldEmb outer, FieldEmb inner) {
  return [outer, inner](const FElem& x) { return outer(inner(x)); };
}

LSeries map_lseries(const LSeries& s, const FieldEmb& e) {
  LSeries out = s;
  for (auto& c : out.c) c = e(c);
  out.normalize();
  return out;
}

// Deepest coefficient field among a polynomial's terms and extra elements.
TowerPtr base_field_of(const BPoly& g, const FElem& cx, const FElem& cy) {
  TowerPtr K = FElem::join(cx.field(), cy.field());
  for (const auto& [k, c] : g.terms()) K = FElem::join(K, c.field());
  return K;
}

// Lower hull segments of the support, steepest slope first. Faces are the
// compressed polynomials chi(u), u = c^p.
std::vector<NPSegment> hull_of(const BPoly& H) {
  std::vector<std::pair<int, int>> pts;
  for (const auto& [k, c] : H.terms()) pts.emplace_back(k.first, k.second);
  std::sort(pts.begin(), pts.end());
  int jmin = pts[0].second;
  for (auto& [i, j] : pts) jmin = std::min(jmin, j);
  // Start: lexicographically minimal point. End: leftmost point of the
  // bottom row.
  std::pair<int, int> cur = pts[0];
  std::vector<NPSegment> out;
  while (cur.second > jmin) {
    std::pair<int, int> best{-1, -1};
    for (const auto& pt : pts) {
      if (pt.first <= cur.first || pt.second >= cur.second) continue;
      if (best.first < 0) {
        best = pt;
        continue;
      }
      // Compare slopes (pt vs best from cur); pick the steeper, ties by
      // larger x-extent so that segments are maximal faces.
      long lhs = (long)(pt.second - cur.second) * (best.first - cur.first);
      long rhs = (long)(best.second - cur.second) * (pt.first - cur.first);
      if (lhs < rhs || (lhs == rhs && pt.first > best.first)) best = pt;
    }
    if (best.first < 0) throw ConsistencyError("newton polygon: hull stalled");
    NPSegment s;
    s.i0 = cur.first;
    s.j0 = cur.second;
    s.i1 = best.first;
    s.j1 = best.second;
    int dj = s.j0 - s.j1, di = s.i1 - s.i0;
    long g = std::gcd((long)dj, (long)di);
    s.p = dj / (int)g;
    s.q = di / (int)g;
    int d = dj / s.p;
    std::vector<FElem> chi(d + 1, FElem(0));
    for (int k = 0; k <= d; ++k)
      chi[d - k] = H.coef(s.i0 + s.q * k, s.j0 - s.p * k);
    s.face = UPoly(std::move(chi));
    out.push_back(std::move(s));
    cur = best;
  }
  return out;
}

struct RootPack {
  FElem value;
  TowerPtr field;
  FieldEmb emb;  // K -> field
  int mult;
};

std::vector<RootPack> roots_mult(const UPoly& f, const TowerPtr& K) {
  std::vector<RootPack> out;
  for (const auto& [fac, m] : factor_over(f, K)) {
    if (fac.deg() == 1) {
      out.push_back({-fac.coef(0), K, id_emb(), m});
      continue;
    }
    for (const Box& b : isolate_roots(fac)) {
      Extension e = adjoin_root(fac, K, b);
      out.push_back({e.root, e.field, e.embed, m});
    }
  }
  return out;
}

// Unique series solution y(x) = sum_{k>=1} b_k x^k of G(x, y(x)) = 0 for a
// germ with G(0,0) = 0 and dG/dy(0,0) != 0, known below x^A.
LSeries solve_smooth_tail(const BPoly& G, int A) {
  FElem c = G.derivative_y().eval(FElem(0), FElem(0));
  if (c.is_zero()) throw ConsistencyError("puiseux: tail solve not smooth");
  FElem cinv = c.inv();
  LSeries y;  // exact partial sum
  for (int k = 1; k < A; ++k) {
    LSeries xk = LSeries::monomial(FElem(1), 1, k + 1);
    LSeries r = series_compose(G, xk, y);
    FElem bk = -r.coef(k) * cinv;
    if (!bk.is_zero()) y = y + LSeries::monomial(bk, k);
  }
  y.trunc = A;
  y.normalize();
  return y;
}

struct RawBranch {
  int e;
  LSeries ys;
  TowerPtr field;
  FieldEmb emb;  // germ's field -> field
};

// Branch expansion of G (no x-factor) at the origin; K contains all
// coefficients of G. budget is in x-units at this level.
std::vector<RawBranch> expand(const BPoly& G, const TowerPtr& K, int budget,
                              int depth) {
  if (depth > 64) throw ConsistencyError("puiseux: recursion depth exceeded");
  std::vector<RawBranch> out;
  BPoly H;
  int yk = G.remove_factor(BPoly::y(), &H);
  if (yk >= 2) throw ConsistencyError("puiseux: repeated local factor");
  if (yk == 1) out.push_back({1, LSeries::zero(), K, id_emb()});
  if (!H.eval(FElem(0), FElem(0)).is_zero()) return out;
  if (H.is_constant()) throw ConsistencyError("puiseux: vanishing germ");

  for (const NPSegment& seg : hull_of(H)) {
    for (const RootPack& rp : roots_mult(seg.face, K)) {
      // A p-th root of the face root fixes the leading coefficient.
      FElem c0 = rp.value;
      TowerPtr K2 = rp.field;
      FieldEmb lev = rp.emb;
      if (seg.p > 1) {
        UPoly zp = UPoly::monomial(FElem(1), seg.p) - UPoly::constant(rp.value);
        auto zf = factor_over(zp, K2);
        const UPoly& first = zf.front().first;
        if (first.deg() == 1) {
          c0 = -first.coef(0);
        } else {
          Extension ce = adjoin_root(first, K2, isolate_roots(first)[0]);
          c0 = ce.root;
          K2 = ce.field;
          lev = compose_emb(ce.embed, lev);
        }
      }
      BPoly Hm = map_bpoly(H, lev);
      BPoly px = BPoly::monomial(FElem(1), seg.p, 0);
      BPoly py = (BPoly::constant(c0) + BPoly::y()) *
                 BPoly::monomial(FElem(1), seg.q, 0);
      BPoly sub = Hm.subst(px, py), G1;
      sub.remove_factor(BPoly::x(), &G1);

      std::vector<RawBranch> subs;
      if (rp.mult == 1) {
        subs.push_back({1, solve_smooth_tail(G1, std::max(budget, 2)), K2, id_emb()});
      } else {
        subs = expand(G1, K2, budget * seg.p, depth + 1);
      }
      for (RawBranch& sb : subs) {
        RawBranch b;
        b.e = seg.p * sb.e;
        b.ys = (LSeries::constant(sb.emb(c0)) + sb.ys) *
               LSeries::monomial(FElem(1), seg.q * sb.e);
        b.field = sb.field;
        b.emb = compose_emb(sb.emb, lev);
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

BPoly reduced_at(const BPoly& g, const FElem& cx, const FElem& cy) {
  BPoly d = BPoly::gcd(BPoly::gcd(g, g.derivative_x()), g.derivative_y());
  if (d.is_constant()) return g;
  if (d.eval(cx, cy).is_zero()) throw InputError("non-reduced germ");
  return g.squarefree_part();
}

}  // namespace

NewtonPolygon newton_polygon(const BPoly& germ, const FElem& cx,
                             const FElem& cy) {
  if (germ.is_zero()) throw InputError("newton_polygon: zero germ");
  BPoly G = germ.shift(cx, cy);
  NewtonPolygon np;
  np.segments = hull_of(G);
  std::reverse(np.segments.begin(), np.segments.end());
  return np;
}

std::vector<std::pair<Rat, FElem>> PuiseuxBranch::terms() const {
  std::vector<std::pair<Rat, FElem>> out;
  for (size_t i = 0; i < ys.c.size(); ++i)
    if (!ys.c[i].is_zero())
      out.emplace_back(Rat(ys.off + (long)i) / Rat(e), ys.c[i]);
  return out;
}

Rat PuiseuxBranch::trunc_order() const { return Rat(ys.trunc) / Rat(e); }

std::vector<PuiseuxBranch> puiseux_branches(const BPoly& g, const FElem& cx,
                                            const FElem& cy, int budget) {
  if (g.is_constant()) throw InputError("puiseux_branches: constant polynomial");
  BPoly gs = reduced_at(g, cx, cy);
  if (!gs.eval(cx, cy).is_zero())
    throw InputError("puiseux_branches: center is not on the curve");
  TowerPtr K = base_field_of(gs, cx, cy);
  BPoly G = gs.shift(cx, cy);

  std::vector<PuiseuxBranch> out;
  auto finish = [&](PuiseuxBranch b) {
    b.cx = cx;
    b.cy = cy;
    b.germ = g;
    b.index = (int)out.size();
    b.budget = budget;
    out.push_back(std::move(b));
  };

  BPoly H;
  int xk = G.remove_factor(BPoly::x(), &H);
  if (xk >= 2) throw ConsistencyError("puiseux_branches: repeated vertical line");
  if (xk == 1) {
    PuiseuxBranch b;
    b.field = K;
    b.emb = id_emb();
    b.vertical = true;
    b.e = 1;
    b.xs = LSeries::zero();
    b.ys = LSeries::monomial(FElem(1), 1);
    finish(std::move(b));
  }
  if (H.eval(FElem(0), FElem(0)).is_zero() && !H.is_constant()) {
    for (RawBranch& rb : expand(H, K, budget, 0)) {
      PuiseuxBranch b;
      b.field = rb.field;
      b.emb = std::move(rb.emb);
      b.e = rb.e;
      b.xs = LSeries::monomial(FElem(1), rb.e);
      b.ys = std::move(rb.ys);
      finish(std::move(b));
    }
  }
  if (out.empty())
    throw ConsistencyError("puiseux_branches: no branch at a curve point");
  return out;
}

PuiseuxBranch reexpand(const PuiseuxBranch& b, int budget) {
  auto all = puiseux_branches(b.germ, b.cx, b.cy, budget);
  if (b.index >= (int)all.size())
    throw ConsistencyError("reexpand: branch list changed");
  return all[b.index];
}

namespace {

// det of a matrix of truncated series; global sign is not tracked (only the
// vanishing order is used).
LSeries det_lseries(const std::vector<std::vector<LSeries>>& M) {
  int n = (int)M.size();
  if (n == 0) return LSeries::constant(FElem(1));
  std::vector<LSeries> dp(1u << n);
  dp[0] = LSeries::constant(FElem(1));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int col = __builtin_popcount(mask) - 1;
    LSeries acc;
    int sign = 1;
    for (int r = 0; r < n; ++r) {
      if (!(mask >> r & 1)) continue;
      LSeries term = M[r][col] * dp[mask ^ (1u << r)];
      acc = sign > 0 ? acc + term : acc - term;
      sign = -sign;
    }
    dp[mask] = std::move(acc);
  }
  return dp[(1u << n) - 1];
}

// Vanishing order along branch a of the local equation of branch b:
// ord_t Res_s(s^{e_b} - t^{e_a}, Y_a(t) - Y_b(s)); nullopt if the
// truncations cannot decide.
std::optional<int> contact_order(const PuiseuxBranch& a,
                                 const PuiseuxBranch& b) {
  Compositum comp = compose_fields(a.field, b.field);
  LSeries ya = map_lseries(a.ys, comp.from_a);
  LSeries yb = map_lseries(b.ys, comp.from_b);
  int e2 = b.e;
  // Coefficients of B(s) = Y_a(t) - Y_b(s) as series in t, plus unknown
  // markers covering Y_b's truncation tail (one per residue mod e2).
  int top = yb.trunc >= LSeries::kExact ? yb.off + (int)yb.c.size()
                                        : yb.trunc + e2;
  std::vector<LSeries> beta(std::max(top, 1));
  beta[0] = ya - LSeries::constant(yb.coef(0));
  for (int k = 1; k < top; ++k) {
    if (k < yb.trunc) {
      FElem c = yb.coef(k);
      if (!c.is_zero()) beta[k] = LSeries::constant(-c);
    } else {
      beta[k].trunc = 0;  // unknown beyond Y_b's truncation
    }
  }
  // Multiplication-by-B matrix on basis 1, s, ..., s^(e2-1) modulo
  // s^e2 = t^(e_a).
  std::vector<std::vector<LSeries>> M(e2, std::vector<LSeries>(e2));
  for (int j = 0; j < e2; ++j)
    for (int k = 0; k < (int)beta.size(); ++k) {
      if (beta[k].known_zero() && beta[k].trunc >= LSeries::kExact) continue;
      int K = k + j;
      M[K % e2][j] = M[K % e2][j] +
                     beta[k] * LSeries::monomial(FElem(1), a.e * (K / e2));
    }
  return det_lseries(M).order();
}

}  // namespace

int branch_intersection_multiplicity(const PuiseuxBranch& a,
                                     const PuiseuxBranch& b) {
  if (algnum_of(a.cx) != algnum_of(b.cx) || algnum_of(a.cy) != algnum_of(b.cy))
    throw InputError("branch_intersection_multiplicity: different centers");
  bool same_germ = false;
  try {
    same_germ = (a.germ == b.germ);
  } catch (const ConsistencyError&) {
    same_germ = false;
  }
  if (same_germ && a.index == b.index) throw InputError("infinite contact");
  if (a.vertical && b.vertical) throw InputError("infinite contact");
  if (a.vertical) return b.e;
  if (b.vertical) return a.e;

  PuiseuxBranch ea = a, eb = b;
  for (int round = 0;; ++round) {
    auto ord = contact_order(ea, eb);
    if (ord) return *ord;
    // Bound: the order of b's full germ along a dominates the contact of
    // any pair of distinct branches; exceeding it means identical branches.
    Compositum comp = compose_fields(ea.field, eb.field);
    BPoly gb = map_bpoly(eb.germ.shift(eb.cx, eb.cy),
                         compose_emb(comp.from_b, eb.emb));
    LSeries along = series_compose(gb, map_lseries(ea.xs, comp.from_a),
                                   map_lseries(ea.ys, comp.from_a));
    if (auto bound = along.order()) {
      // contact_order would have resolved below the bound; keep expanding
      // until its window covers it.
      if (ea.ys.trunc > *bound + ea.e && eb.ys.trunc > *bound + eb.e)
        throw ConsistencyError(
            "branch_intersection_multiplicity: order above germ bound");
    } else if (along.trunc >= LSeries::kExact || round >= 7) {
      throw InputError("infinite contact");
    }
    if (round >= 7)
      throw ConsistencyError("branch_intersection_multiplicity: no separation");
    ea = reexpand(a, a.budget << (round + 1));
    eb = reexpand(b, b.budget << (round + 1));
  }
}

int local_milnor_number(const BPoly& g, const FElem& cx, const FElem& cy) {
  BPoly fx = g.derivative_x(), fy = g.derivative_y();
  if (!fx.eval(cx, cy).is_zero() || !fy.eval(cx, cy).is_zero()) return 0;
  if (fx.is_zero() && fy.is_zero())
    throw InputError("non-isolated singularity");
  BPoly d = BPoly::gcd(fx, fy);
  if (!d.is_constant() && d.eval(cx, cy).is_zero())
    throw InputError("non-isolated singularity");

  // Split fx into squarefree layers s_1 ⊇ s_2 ⊇ ...; each prime factor of
  // multiplicity m appears in exactly m layers, so summing branch orders of
  // fy over all layers weights branches correctly.
  int mu = 0;
  BPoly h = fx;
  BPoly fyt = fy.shift(cx, cy);
  while (!h.is_constant()) {
    BPoly s = h.squarefree_part();
    h = h.divexact(s);
    if (!s.eval(cx, cy).is_zero()) continue;
    for (const PuiseuxBranch& br : puiseux_branches(s, cx, cy)) {
      PuiseuxBranch bb = br;
      for (int round = 0;; ++round) {
        LSeries v = series_compose(map_bpoly(fyt, bb.emb), bb.xs, bb.ys);
        if (auto o = v.order()) {
          mu += *o;
          break;
        }
        if (v.trunc >= LSeries::kExact)
          throw InputError("non-isolated singularity");
        if (round >= 7)
          throw ConsistencyError("local_milnor_number: order not determined");
        bb = reexpand(br, br.budget << (round + 1));
      }
    }
  }
  return mu;
}

}  // namespace polyfib
