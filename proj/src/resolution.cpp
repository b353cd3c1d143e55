#include "resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ruppert.hpp"
#include "series.hpp"

namespace polyfib {

namespace {

FieldEmb id_emb() {
  return [](const FElem& x) { return x; };
}

FieldEmb compose_emb(FieldEmb outer, FieldEmb inner) {
  return [outer = std::move(outer), inner = std::move(inner)](const FElem& x) {
    return outer(inner(x));
  };
}

RChart map_chart(const RChart& ch, const FieldEmb& e, const TowerPtr& K) {
  RChart r;
  r.K = K;
  r.C = map_bpoly(ch.C, e);
  r.Yp = map_bpoly(ch.Yp, e);
  for (auto& dv : ch.divs) r.divs.push_back({dv.comp, map_bpoly(dv.eq, e)});
  r.root_uy = ch.root_uy;
  r.main_comp = ch.main_comp;
  return r;
}

// Full pullbacks in a chart, reconstructed from the factored storage.
BPoly chart_G(const Resolution& R, const RChart& ch) {
  BPoly g = ch.C;
  for (auto& dv : ch.divs) {
    int a = R.comps[dv.comp].a;
    for (int k = 0; k < a; ++k) g = g * dv.eq;
  }
  return g;
}

BPoly chart_Z(const Resolution& R, const RChart& ch) {
  BPoly z = BPoly::constant(FElem(1));
  for (auto& dv : ch.divs) {
    int b = R.comps[dv.comp].b;
    for (int k = 0; k < b; ++k) z = z * dv.eq;
  }
  return z;
}

struct RootEmb {
  TowerPtr field;
  FElem value;
  FieldEmb emb;
};

// All distinct roots of a univariate polynomial over K, each with a field
// fixing the embedding. Deterministic order.
std::vector<RootEmb> all_roots(const UPoly& p, const TowerPtr& K) {
  std::vector<RootEmb> out;
  if (p.deg() < 1) return out;
  UPoly sf = p.squarefree_part();
  for (auto& [fac, mult] : factor_over(sf, K)) {
    (void)mult;
    if (fac.deg() == 1) {
      out.push_back({K, -fac.coef(0), id_emb()});
    } else {
      for (auto& box : isolate_roots(fac)) {
        Extension ext = adjoin_root(fac, K, box);
        out.push_back({ext.field, ext.root, ext.embed});
      }
    }
  }
  return out;
}

int side_sign(const Resolution& R, int comp) {
  long s = (long)R.comps[comp].a - (long)R.d * R.comps[comp].b;
  return s > 0 ? 1 : s < 0 ? -1 : 0;
}

void drop_edge(Resolution& R, int a, int b) {
  auto key = std::minmax(a, b);
  for (size_t i = 0; i < R.edges.size(); ++i) {
    if (std::minmax(R.edges[i].first, R.edges[i].second) == key) {
      R.edges.erase(R.edges.begin() + i);
      return;
    }
  }
  throw ConsistencyError("resolution: expected divisor adjacency missing");
}

constexpr int kMaxBlowups = 4096;

// Blow up the point (0, v0) of pchart (already mapped into K); returns the
// new node id. Recurses on the base points of the new exceptional curve.
int blow_up(Resolution& R, const RChart& pchart, const TowerPtr& K,
            const FieldEmb& emb_parent, const FElem& v0, int parent_node,
            int parent_root_chart, bool from_B, int depth) {
  if (++R.blowup_count > kMaxBlowups || depth > 128)
    throw ConsistencyError("resolution: blow-up budget exceeded");

  BPoly Csh = pchart.C.shift(FElem(0), v0);
  BPoly Ypsh = pchart.Yp.shift(FElem(0), v0);
  std::vector<DivisorEq> dsh;
  for (auto& dv : pchart.divs) dsh.push_back({dv.comp, dv.eq.shift(FElem(0), v0)});

  std::vector<int> through;
  for (auto& dv : dsh)
    if (dv.eq.coef(0, 0).is_zero()) {
      if (dv.eq.ord_origin() != 1)
        throw ConsistencyError("resolution: singular divisor local equation");
      through.push_back(dv.comp);
    }
  if (through.empty())
    throw ConsistencyError("resolution: blow-up center off the divisor");
  if (through.size() > 2)
    throw ConsistencyError("resolution: divisor not normal crossing at center");

  int mC = Csh.is_zero() ? 0 : Csh.ord_origin();
  if (!Csh.coef(0, 0).is_zero()) mC = 0;
  int a_new = mC, b_new = 0;
  for (int cid : through) {
    a_new += R.comps[cid].a;
    b_new += R.comps[cid].b;
  }

  int cid_new = (int)R.comps.size();
  {
    DivisorComponent dc;
    dc.id = cid_new;
    dc.a = a_new;
    dc.b = b_new;
    R.comps.push_back(dc);
  }
  int nid = (int)R.nodes.size();
  {
    RNode nd;
    nd.id = nid;
    nd.parent = parent_node;
    nd.parent_root_chart = parent_root_chart;
    nd.from_B = from_B;
    nd.comp = cid_new;
    nd.K = K;
    nd.emb_parent = emb_parent;
    nd.center_v = v0;
    nd.comps_through = through;
    R.nodes.push_back(std::move(nd));
  }
  R.comps[cid_new].node = nid;
  if (parent_node >= 0) R.nodes[parent_node].children.push_back(nid);

  // Update divisor adjacency.
  if (through.size() == 2) drop_edge(R, through[0], through[1]);
  for (int cid : through) R.edges.emplace_back(std::min(cid, cid_new), std::max(cid, cid_new));

  BPoly X = BPoly::x(), Y = BPoly::y();
  // Chart A: (x, y) -> (x, x*y); E_new = {x = 0}.
  {
    RChart A;
    A.K = K;
    A.root_uy = pchart.root_uy;
    A.main_comp = cid_new;
    BPoly t = Csh.subst(X, X * Y), q;
    int k = t.remove_factor(X, &q);
    if (k != mC) throw ConsistencyError("resolution: curve multiplicity mismatch");
    A.C = q;
    A.Yp = Ypsh.subst(X, X * Y);
    for (auto& dv : dsh) {
      BPoly e = dv.eq.subst(X, X * Y), st;
      int p = e.remove_factor(X, &st);
      bool thr = std::find(through.begin(), through.end(), dv.comp) != through.end();
      if (p != (thr ? 1 : 0))
        throw ConsistencyError("resolution: divisor transform mismatch");
      if (!st.is_constant()) A.divs.push_back({dv.comp, st});
    }
    A.divs.push_back({cid_new, X});
    R.nodes[nid].A = std::move(A);
  }
  // Chart B: (x, y) -> (x*y, y); E_new = {y = 0}.
  {
    RChart B;
    B.K = K;
    B.root_uy = pchart.root_uy;
    B.main_comp = cid_new;
    BPoly t = Csh.subst(X * Y, Y), q;
    int k = t.remove_factor(Y, &q);
    if (k != mC) throw ConsistencyError("resolution: curve multiplicity mismatch");
    B.C = q;
    B.Yp = Ypsh.subst(X * Y, Y);
    for (auto& dv : dsh) {
      BPoly e = dv.eq.subst(X * Y, Y), st;
      int p = e.remove_factor(Y, &st);
      bool thr = std::find(through.begin(), through.end(), dv.comp) != through.end();
      if (p != (thr ? 1 : 0))
        throw ConsistencyError("resolution: divisor transform mismatch");
      if (!st.is_constant()) B.divs.push_back({dv.comp, st});
    }
    B.divs.push_back({cid_new, Y});
    R.nodes[nid].B = std::move(B);
  }

  int s_new = a_new - R.d * b_new;
  s_new = s_new > 0 ? 1 : s_new < 0 ? -1 : 0;

  // Base points on the new exceptional curve, chart A part.
  {
    RChart A = R.nodes[nid].A;  // copy: recursion reallocates R.nodes
    UPoly P0 = A.C.subst_x(FElem(0));
    UPoly Pinf = UPoly::one();
    for (auto& dv : A.divs) {
      if (dv.comp == cid_new) continue;
      int s = side_sign(R, dv.comp);
      if (s > 0) P0 = P0 * dv.eq.subst_x(FElem(0));
      if (s < 0) Pinf = Pinf * dv.eq.subst_x(FElem(0));
    }
    UPoly target;
    if (s_new > 0)
      target = Pinf;
    else if (s_new < 0)
      target = P0;
    else
      target = UPoly::gcd(P0, Pinf);
    for (auto& r : all_roots(target, K)) {
      RChart mapped = map_chart(A, r.emb, r.field);
      int child = blow_up(R, mapped, r.field, r.emb, r.value, nid, -1, false, depth + 1);
      R.nodes[nid].A.blown.emplace_back(algnum_of(r.value), child);
    }
  }
  // Chart B origin.
  {
    RChart B = R.nodes[nid].B;
    bool c0 = !B.C.coef(0, 0).is_zero() ? false : true;
    bool z0 = c0, zi = false;
    for (auto& dv : B.divs) {
      if (!dv.eq.coef(0, 0).is_zero()) continue;
      int s = dv.comp == cid_new ? s_new : side_sign(R, dv.comp);
      if (s > 0) z0 = true;
      if (s < 0) zi = true;
    }
    if (s_new > 0) z0 = true;
    if (s_new < 0) zi = true;
    if (z0 && zi) {
      int child = blow_up(R, B, K, id_emb(), FElem(0), nid, -1, true, depth + 1);
      R.nodes[nid].B.blown_origin = true;
      R.nodes[nid].B.origin_child = child;
    }
  }
  return nid;
}

// Residual of phi on a balanced component, in its chart-A coordinate.
void residual_fraction(const Resolution& R, const RChart& A, int cid,
                       UPoly* num, UPoly* den) {
  *num = A.C.subst_x(FElem(0));
  *den = UPoly::one();
  for (auto& dv : A.divs) {
    if (dv.comp == cid) continue;
    UPoly e = dv.eq.subst_x(FElem(0));
    for (int k = 0; k < R.comps[dv.comp].a; ++k) *num = *num * e;
    for (int k = 0; k < R.d * R.comps[dv.comp].b; ++k) *den = *den * e;
  }
  UPoly g = UPoly::gcd(*num, *den);
  if (g.deg() >= 1) {
    *num = num->divexact(g);
    *den = den->divexact(g);
  }
}

void classify_components(Resolution& R) {
  for (auto& dc : R.comps) {
    if (dc.node < 0) {  // L_inf
      dc.kind = DivisorComponent::Inf;
      continue;
    }
    long s = (long)dc.a - (long)R.d * dc.b;
    if (s < 0) {
      dc.kind = DivisorComponent::Inf;
      continue;
    }
    const RChart& A = R.nodes[dc.node].A;
    if (s > 0) {
      dc.kind = DivisorComponent::Fiber;
      dc.value = AlgNum(Rat(0));
      dc.value_K = FElem(0);
      dc.mult = (int)s;
      continue;
    }
    UPoly num, den;
    residual_fraction(R, A, dc.id, &num, &den);
    int dn = num.deg(), dd = den.deg();
    if (dn <= 0 && dd <= 0) {
      dc.kind = DivisorComponent::Fiber;
      FElem val = num.coef(0) / den.coef(0);
      dc.value_K = val;
      dc.value = algnum_of(val);
      // mult = ord of (G - val Z^d) along the component minus d*b.
      BPoly H = chart_G(R, A);
      BPoly Zd = chart_Z(R, A), Zp = BPoly::constant(FElem(1));
      for (int k = 0; k < R.d; ++k) Zp = Zp * Zd;
      H = H - Zp * val;
      BPoly q;
      int ord = H.remove_factor(BPoly::x(), &q);
      dc.mult = ord - R.d * dc.b;
      if (dc.mult < 1) throw ConsistencyError("resolution: nonpositive fiber multiplicity");
    } else {
      dc.kind = DivisorComponent::Dicritical;
      dc.degree = std::max(dn, dd);
      dc.rnum = num;
      dc.rden = den;
    }
  }
}

}  // namespace

Resolution resolve_infinity(const BPoly& f) {
  Resolution R;
  R.f = f;
  R.d = f.total_deg();
  if (R.d < 1) throw InputError("resolve_infinity: constant polynomial");
  TowerPtr K0;
  for (auto& [k, c] : f.terms()) {
    (void)k;
    K0 = FElem::join(K0, c.field());
  }

  DivisorComponent linf;
  linf.id = 0;
  linf.node = -1;
  linf.a = 0;
  linf.b = 1;
  linf.kind = DivisorComponent::Inf;
  R.comps.push_back(linf);

  // Root chart X=1: coordinates (w, y); projective point (1 : y : w).
  {
    RChart U;
    U.K = K0;
    for (auto& [k, c] : f.terms())
      U.C = U.C + BPoly::monomial(c, R.d - k.first - k.second, k.second);
    U.Yp = BPoly::y();
    U.divs.push_back({0, BPoly::x()});
    U.root_uy = false;
    U.main_comp = 0;
    R.root_charts.push_back(std::move(U));
  }
  // Root chart Y=1: coordinates (w, x); needed only for the point (0:1:0).
  bool need_uy = f.coef(0, R.d).is_zero();
  if (need_uy) {
    RChart U;
    U.K = K0;
    for (auto& [k, c] : f.terms())
      U.C = U.C + BPoly::monomial(c, R.d - k.first - k.second, k.first);
    U.Yp = BPoly::y();
    U.divs.push_back({0, BPoly::x()});
    U.root_uy = true;
    U.main_comp = 0;
    R.root_charts.push_back(std::move(U));
  }

  {
    // Base points with Y/X finite: roots of the top form at X=1.
    const RChart UX = R.root_charts[0];
    UPoly top = UX.C.subst_x(FElem(0));
    for (auto& r : all_roots(top, K0)) {
      RChart mapped = map_chart(UX, r.emb, r.field);
      int child = blow_up(R, mapped, r.field, r.emb, r.value, -1, 0, false, 0);
      R.root_charts[0].blown.emplace_back(algnum_of(r.value), child);
    }
  }
  if (need_uy) {
    const RChart UY = R.root_charts[1];
    int child = blow_up(R, UY, K0, id_emb(), FElem(0), -1, 1, false, 0);
    R.root_charts[1].blown.emplace_back(AlgNum(Rat(0)), child);
  }

  classify_components(R);

  for (auto& dc : R.comps) {
    int mult = dc.kind == DivisorComponent::Inf ? R.d * dc.b - dc.a
               : dc.kind == DivisorComponent::Fiber ? dc.mult
                                                    : 0;
    R.barG_inf.add_vertex(dc.kind == DivisorComponent::Dicritical
                              ? VertexKind::Dicritical
                              : VertexKind::Divisor,
                          std::max(mult, 0),
                          dc.node < 0 ? "Linf" : "E" + std::to_string(dc.id));
  }
  for (auto& e : R.edges) R.barG_inf.add_edge(e.first, e.second);
  if (!is_tree(R.barG_inf))
    throw ConsistencyError("resolution: divisor dual graph is not a tree");

  bool any_dic = false;
  for (auto& dc : R.comps) any_dic |= dc.kind == DivisorComponent::Dicritical;
  if (!any_dic) throw ConsistencyError("resolution: no dicritical component");
  return R;
}

namespace {

// ---------- per-value machinery ----------

struct Walk {
  RChart chart;   // over F
  TowerPtr F;
  FieldEmb embK;  // stored chart field -> F
  FieldEmb emb0;  // input coefficient field -> F
  FElem chat;     // the value c inside F
  BPoly H;        // strict transform of the closure of {f = c}
};

struct ValueCtx {
  const Resolution* R = nullptr;
  AlgNum c;
  std::map<int, Walk> wA, wB;  // per node id
  std::map<int, Walk> wRoot;   // per root chart index
  std::map<int, int> ordH;     // ord of the (f-c)-closure pullback along each comp
};

FElem value_in(const AlgNum& c, const TowerPtr& K, TowerPtr* Kout, FieldEmb* emb) {
  if (c.is_rational()) {
    *Kout = K;
    *emb = id_emb();
    return FElem(c.rat());
  }
  Extension e = adjoin_value(c.minpoly(), K, c.box());
  *Kout = e.field;
  *emb = e.embed;
  return e.root;
}

void walk_node(ValueCtx& ctx, int nid, const Walk& pw);

void walk_children(ValueCtx& ctx, const RChart& stored, const Walk& w) {
  for (auto& [alg, child] : stored.blown) {
    (void)alg;
    walk_node(ctx, child, w);
  }
}

void walk_node(ValueCtx& ctx, int nid, const Walk& pw) {
  const Resolution& R = *ctx.R;
  const RNode& nd = R.nodes[nid];
  TowerPtr F;
  FieldEmb mapH, mapK;
  FElem chat;
  if (ctx.c.is_rational()) {
    F = nd.K;
    mapH = nd.emb_parent;
    mapK = id_emb();
    chat = pw.chat;
  } else {
    Compositum cp = compose_fields(pw.F, nd.K);
    F = cp.field;
    mapH = cp.from_a;
    mapK = cp.from_b;
    chat = cp.from_a(pw.chat);
  }
  FElem center = mapK(nd.center_v);
  BPoly Hs = map_bpoly(pw.H, mapH).shift(FElem(0), center);
  int m = Hs.coef(0, 0).is_zero() ? Hs.ord_origin() : 0;
  int tot = m;
  for (int cid : nd.comps_through) tot += ctx.ordH.at(cid);
  ctx.ordH[nd.comp] = tot;

  FieldEmb emb0 = compose_emb(mapH, pw.emb0);
  BPoly X = BPoly::x(), Y = BPoly::y();
  {
    Walk wa;
    wa.F = F;
    wa.embK = mapK;
    wa.emb0 = emb0;
    wa.chat = chat;
    wa.chart = ctx.c.is_rational() ? nd.A : map_chart(nd.A, mapK, F);
    BPoly t = Hs.subst(X, X * Y), q;
    if (t.remove_factor(X, &q) != m)
      throw ConsistencyError("resolution: fiber transform multiplicity mismatch");
    wa.H = q;
    ctx.wA[nid] = wa;
    walk_children(ctx, nd.A, ctx.wA[nid]);
  }
  {
    Walk wb;
    wb.F = F;
    wb.embK = mapK;
    wb.emb0 = emb0;
    wb.chat = chat;
    wb.chart = ctx.c.is_rational() ? nd.B : map_chart(nd.B, mapK, F);
    BPoly t = Hs.subst(X * Y, Y), q;
    if (t.remove_factor(Y, &q) != m)
      throw ConsistencyError("resolution: fiber transform multiplicity mismatch");
    wb.H = q;
    ctx.wB[nid] = wb;
    if (nd.B.blown_origin) walk_node(ctx, nd.B.origin_child, ctx.wB[nid]);
  }
}

void build_walks(ValueCtx& ctx) {
  const Resolution& R = *ctx.R;
  for (int rc = 0; rc < (int)R.root_charts.size(); ++rc) {
    const RChart& U = R.root_charts[rc];
    Walk w;
    FieldEmb emb;
    w.chat = value_in(ctx.c, U.K, &w.F, &emb);
    w.embK = emb;
    w.emb0 = emb;
    w.chart = ctx.c.is_rational() ? U : map_chart(U, emb, w.F);
    w.H = w.chart.C - BPoly::monomial(w.chat, R.d, 0);
    ctx.ordH[0] = 0;
    ctx.wRoot[rc] = w;
    walk_children(ctx, U, ctx.wRoot[rc]);
  }
}

constexpr int kBranchRounds = 10;

// Branch/divisor intersection multiplicity: ord of the local equation along
// the branch. Throws TruncationError when the window is too short.
int branch_comp_ord(const BPoly& eq_shifted, const PuiseuxBranch& b) {
  LSeries s = series_compose(map_bpoly(eq_shifted, b.emb), b.xs, b.ys);
  auto o = s.order();
  if (o) return *o;
  if (s.trunc >= LSeries::kExact / 2)
    throw ConsistencyError("resolution: branch lies inside a divisor component");
  throw TruncationError("resolution: branch window too short");
}

// Integer Smith normal form check: all invariant factors of M are units.
bool smith_all_units(std::vector<std::vector<Int>> M) {
  int rows = (int)M.size();
  if (!rows) return true;
  int cols = (int)M[0].size();
  int r = 0, c = 0;
  while (r < rows && c < cols) {
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = r; i < rows; ++i)
      for (int j = c; j < cols; ++j)
        if (M[i][j] != 0 && (best == 0 || abs(M[i][j]) < abs(best))) {
          best = M[i][j];
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(M[pr], M[r]);
    for (int i = 0; i < rows; ++i) std::swap(M[i][pc], M[i][c]);
    bool again = true;
    while (again) {
      again = false;
      for (int i = r + 1; i < rows; ++i)
        if (M[i][c] != 0) {
          Int q = M[i][c] / M[r][c];
          for (int j = c; j < cols; ++j) M[i][j] -= q * M[r][j];
          if (M[i][c] != 0) {
            std::swap(M[i], M[r]);
            again = true;
          }
        }
      for (int j = c + 1; j < cols; ++j)
        if (M[r][j] != 0) {
          Int q = M[r][j] / M[r][c];
          for (int i = r; i < rows; ++i) M[i][j] -= q * M[i][c];
          if (M[r][j] != 0) {
            for (int i = 0; i < rows; ++i) std::swap(M[i][j], M[i][c]);
            again = true;
          }
        }
    }
    if (abs(M[r][c]) != 1) return false;
    ++r;
    ++c;
  }
  return true;
}

RChart shift_chart(const RChart& ch, const FElem& a, const FElem& b) {
  RChart r;
  r.K = ch.K;
  r.root_uy = ch.root_uy;
  r.main_comp = ch.main_comp;
  r.C = ch.C.shift(a, b);
  r.Yp = ch.Yp.shift(a, b);
  for (auto& dv : ch.divs) r.divs.push_back({dv.comp, dv.eq.shift(a, b)});
  return r;
}

// One point where the strict fiber transform meets the divisor, shifted so
// that the point is the chart origin.
struct Contact {
  int host = -1;           // component whose chart hosts the point
  TowerPtr F;
  FieldEmb emb0;           // input coefficient field -> F
  FElem chat;              // the value c inside F
  RChart chart;            // over F
  BPoly H;                 // strict fiber transform, over F
  std::vector<int> comps;  // divisor components through the point
  int place = -1;
  std::vector<PuiseuxBranch> branches;
  std::vector<std::map<int, int>> imults;  // per branch: comp -> intersection mult
  std::vector<int> place_idx;              // per branch: index inside the place
};

const BPoly& chart_eq(const RChart& ch, int comp) {
  for (auto& dv : ch.divs)
    if (dv.comp == comp) return dv.eq;
  throw ConsistencyError("resolution: component equation missing from chart");
}

// Intersection multiplicities of each branch with the components through the
// contact point, with re-expansion on short windows.
void branch_mults(Contact& ct) {
  ct.imults.resize(ct.branches.size());
  for (size_t bi = 0; bi < ct.branches.size(); ++bi) {
    if (ct.branches[bi].vertical)
      throw ConsistencyError("resolution: vertical strict branch");
    int budget = ct.branches[bi].budget;
    for (int round = 0;; ++round) {
      try {
        std::map<int, int> im;
        for (int cid : ct.comps)
          im[cid] = branch_comp_ord(chart_eq(ct.chart, cid), ct.branches[bi]);
        ct.imults[bi] = std::move(im);
        break;
      } catch (const TruncationError&) {
        if (round >= kBranchRounds) throw;
        budget *= 2;
        ct.branches[bi] = reexpand(ct.branches[bi], budget);
      }
    }
  }
}

AbsoluteSplit map_split(const AbsoluteSplit& s, const FieldEmb& e) {
  AbsoluteSplit r;
  r.g = map_bpoly(s.g, e);
  r.gx = map_bpoly(s.gx, e);
  r.gy = map_bpoly(s.gy, e);
  for (auto& [u, v] : s.basis) r.basis.emplace_back(map_bpoly(u, e), map_bpoly(v, e));
  return r;
}

// Affine component certificate of a branch at infinity: follow the branch in
// affine coordinates (Laurent series) and evaluate the Ruppert certificate.
std::vector<AlgNum> branch_cert(const Resolution& R, Contact& ct, size_t bi,
                                const AbsoluteSplit& split) {
  int budget = ct.branches[bi].budget;
  for (int round = 0;; ++round) {
    try {
      const PuiseuxBranch& b = ct.branches[bi];
      BPoly Zb = map_bpoly(chart_Z(R, ct.chart), b.emb);
      BPoly Yb = map_bpoly(ct.chart.Yp, b.emb);
      LSeries z = series_compose(Zb, b.xs, b.ys);
      LSeries yp = series_compose(Yb, b.xs, b.ys);
      LSeries zi = z.inverse();
      LSeries xs = ct.chart.root_uy ? yp * zi : zi;
      LSeries ys = ct.chart.root_uy ? zi : yp * zi;
      return component_certificate(map_split(split, b.emb), xs, ys);
    } catch (const TruncationError&) {
      if (round >= kBranchRounds) throw;
      budget *= 2;
      ct.branches[bi] = reexpand(ct.branches[bi], budget);
    }
  }
}

// ---------- normal-crossing completion of one fiber ----------

struct TComp {
  int b = 0;      // ord of z along the component
  int ordH = 0;   // ord of the fiber closure pullback
  int fidx = -1;  // index into fcomps; -1 for dicritical components
};

struct TotalCtx {
  const Resolution* R = nullptr;
  FiberAtInfinity* out = nullptr;
  std::map<int, TComp> info;
  int next_id = 0;
  int place = -1;
  int guard = 0;
};

// A strict fiber branch being followed through the completion blow-ups.
struct TBranch {
  PuiseuxBranch pb0;  // branch at the weak-stage contact point
  int idx_in_place = -1;
  int budget = 0;
  std::vector<std::pair<bool, int>> steps;  // (chart B?, new component id)
  TowerPtr F;
  LSeries lx, ly;  // centered parametrization in the current chart
  RChart chart;    // over F, point of interest at the origin
  BPoly H;
};

FElem series_const(const LSeries& s) {
  if (s.trunc <= 0) throw TruncationError("resolution: window below constant term");
  return s.coef(0);
}

// Apply one completion blow-up to the branch state. `S` lists the components
// through the origin, `m` the fiber multiplicity there, `nid` the id of the
// exceptional component. Returns the chart-A coordinate of the branch on the
// new component (unused for chart B).
FElem apply_step(TBranch& tb, bool toB, const std::vector<int>& S, int m, int nid) {
  BPoly X = BPoly::x(), Y = BPoly::y();
  auto tr = [&](const BPoly& p, int pow) {
    BPoly t = toB ? p.subst(X * Y, Y) : p.subst(X, X * Y), q;
    if (t.remove_factor(toB ? Y : X, &q) != pow)
      throw ConsistencyError("resolution: completion transform mismatch");
    return q;
  };
  RChart nc;
  nc.K = tb.F;
  nc.root_uy = tb.chart.root_uy;
  nc.main_comp = nid;
  {
    BPoly t = toB ? tb.chart.C.subst(X * Y, Y) : tb.chart.C.subst(X, X * Y), q;
    t.remove_factor(toB ? Y : X, &q);
    nc.C = q;
  }
  nc.Yp = toB ? tb.chart.Yp.subst(X * Y, Y) : tb.chart.Yp.subst(X, X * Y);
  for (auto& dv : tb.chart.divs) {
    bool thr = std::find(S.begin(), S.end(), dv.comp) != S.end();
    BPoly st = tr(dv.eq, thr ? 1 : 0);
    if (!st.is_constant()) nc.divs.push_back({dv.comp, st});
  }
  nc.divs.push_back({nid, toB ? Y : X});
  BPoly H2 = tr(tb.H, m);
  FElem v0(0);
  if (!toB) {
    LSeries v = tb.ly * tb.lx.inverse();
    v0 = series_const(v);
    tb.ly = v - LSeries::constant(v0);
    nc = shift_chart(nc, FElem(0), v0);
    H2 = H2.shift(FElem(0), v0);
  } else {
    tb.lx = tb.lx * tb.ly.inverse();
  }
  tb.chart = std::move(nc);
  tb.H = std::move(H2);
  return v0;
}

// Rebuild the branch state from the weak-stage contact, replaying the
// recorded completion steps (used after re-expansion).
void rebuild(TBranch& tb, const Contact& ct) {
  PuiseuxBranch pb = tb.budget == tb.pb0.budget ? tb.pb0 : reexpand(tb.pb0, tb.budget);
  tb.F = pb.field;
  tb.lx = pb.xs;
  tb.ly = pb.ys;
  tb.chart = map_chart(ct.chart, pb.emb, pb.field);
  tb.H = map_bpoly(ct.H, pb.emb);
  auto steps = tb.steps;
  for (auto& [toB, nid] : steps) {
    std::vector<int> S;
    for (auto& dv : tb.chart.divs)
      if (dv.eq.coef(0, 0).is_zero()) S.push_back(dv.comp);
    int m = tb.H.coef(0, 0).is_zero() ? tb.H.ord_origin() : 0;
    apply_step(tb, toB, S, m, nid);
  }
}

// Decide which chart of the next blow-up the branch lands in; TruncationError
// when the window cannot tell.
bool lift_to_B(const TBranch& tb) {
  auto ox = tb.lx.order();
  if (!ox) {
    if (tb.lx.trunc >= LSeries::kExact / 2)
      throw ConsistencyError("resolution: branch inside a divisor component");
    throw TruncationError("resolution: branch window too short");
  }
  auto oy = tb.ly.order();
  if (oy) return *oy < *ox;
  if (tb.ly.trunc >= LSeries::kExact / 2)
    throw ConsistencyError("resolution: branch inside a divisor component");
  if (tb.ly.trunc > *ox) return false;
  throw TruncationError("resolution: branch window too short");
}

void drop_dd_edge(FiberAtInfinity& out, int a, int b) {
  auto key = std::minmax(a, b);
  for (size_t i = 0; i < out.dd_edges.size(); ++i)
    if (std::minmax(out.dd_edges[i].first, out.dd_edges[i].second) == key) {
      out.dd_edges.erase(out.dd_edges.begin() + i);
      return;
    }
  throw ConsistencyError("resolution: expected fiber adjacency missing");
}

int branch_main_ord(TBranch& tb, const Contact& ct, int comp) {
  for (int round = 0;; ++round) {
    try {
      LSeries s = series_compose(chart_eq(tb.chart, comp), tb.lx, tb.ly);
      auto o = s.order();
      if (o) return *o;
      if (s.trunc >= LSeries::kExact / 2)
        throw ConsistencyError("resolution: branch inside a divisor component");
      throw TruncationError("resolution: branch window too short");
    } catch (const TruncationError&) {
      if (round >= kBranchRounds) throw;
      tb.budget *= 2;
      rebuild(tb, ct);
    }
  }
}

// Blow up until every strict branch meets a single component of the
// completed fiber divisor transversally at a smooth divisor point.
void total_point(TotalCtx& tc, std::vector<TBranch*> brs, const std::vector<int>& S,
                 const Contact& ct, int depth) {
  if (S.size() == 1 && brs.size() == 1 && branch_main_ord(*brs[0], ct, S[0]) == 1) {
    tc.out->touches.push_back({tc.place, brs[0]->idx_in_place, tc.info.at(S[0]).fidx});
    return;
  }
  if (++tc.guard > 2048 || depth > 64)
    throw ConsistencyError("resolution: completion budget exceeded");

  if (!brs[0]->H.coef(0, 0).is_zero())
    throw ConsistencyError("resolution: completion point off the fiber");
  int m = brs[0]->H.ord_origin();
  int b_new = 0, ordH_new = m;
  for (int cid : S) {
    b_new += tc.info.at(cid).b;
    ordH_new += tc.info.at(cid).ordH;
  }
  int mult = ordH_new - tc.R->d * b_new;
  if (mult < 1) throw ConsistencyError("resolution: nonpositive completion multiplicity");
  int nid = tc.next_id++;
  int fidx_new = (int)tc.out->fcomps.size();
  tc.out->fcomps.push_back({nid, mult, false});
  tc.info[nid] = {b_new, ordH_new, fidx_new};

  std::vector<int> fS;
  for (int cid : S)
    if (tc.info.at(cid).fidx >= 0) fS.push_back(cid);
  if (fS.size() == 2)
    drop_dd_edge(*tc.out, tc.info.at(fS[0]).fidx, tc.info.at(fS[1]).fidx);
  for (int cid : fS) {
    auto key = std::minmax(fidx_new, tc.info.at(cid).fidx);
    tc.out->dd_edges.emplace_back(key.first, key.second);
  }

  std::map<std::pair<int, AlgNum>, std::vector<TBranch*>> groups;
  for (TBranch* tb : brs) {
    for (int round = 0;; ++round) {
      try {
        bool toB = lift_to_B(*tb);
        FElem v0 = apply_step(*tb, toB, S, m, nid);
        tb->steps.emplace_back(toB, nid);
        groups[{toB ? 1 : 0, toB ? AlgNum(Rat(0)) : algnum_of(v0)}].push_back(tb);
        break;
      } catch (const TruncationError&) {
        if (round >= kBranchRounds) throw;
        tb->budget *= 2;
        rebuild(*tb, ct);
      }
    }
  }
  for (auto& [key, grp] : groups) {
    (void)key;
    std::vector<int> S2;
    for (auto& dv : grp[0]->chart.divs)
      if (dv.eq.coef(0, 0).is_zero()) S2.push_back(dv.comp);
    total_point(tc, grp, S2, ct, depth + 1);
  }
}

}  // namespace

std::vector<AlgNum> critical_values_at_infinity(const Resolution& R) {
  std::vector<AlgNum> vals;
  for (auto& dc : R.comps)
    if (dc.kind == DivisorComponent::Fiber) vals.push_back(dc.value);

  for (auto& dc : R.comps) {
    if (dc.kind != DivisorComponent::Dicritical || dc.degree < 2) continue;
    const TowerPtr& K = R.nodes[dc.node].K;
    int n = dc.degree, dn = dc.rnum.deg(), dd = dc.rden.deg();
    // Candidates: values with a repeated finite preimage...
    BPoly S = BPoly::from_x(dc.rnum) - BPoly::y() * BPoly::from_x(dc.rden);
    UPoly W = BPoly::resultant_x(S, S.derivative_x());
    std::vector<RootEmb> cand = all_roots(W, K);
    // ...and the value at the chart's missing point when that point ramifies.
    if (dn == dd)
      cand.push_back({K, dc.rnum.lc() / dc.rden.lc(), id_emb()});
    else if (dn < dd)
      cand.push_back({K, FElem(0), id_emb()});
    for (auto& cv : cand) {
      UPoly q = map_upoly(dc.rnum, cv.emb) - map_upoly(dc.rden, cv.emb) * cv.value;
      int distinct = q.deg() >= 1 ? q.squarefree_part().deg() : 0;
      if (q.deg() < n) ++distinct;  // the missing point is a preimage
      if (distinct < n) vals.push_back(algnum_of(cv.value));
    }
  }

  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

FiberAtInfinity fiber_at_infinity(const Resolution& R, const AlgNum& c) {
  FiberAtInfinity out;
  out.c = c;
  ValueCtx ctx;
  ctx.R = &R;
  ctx.c = c;
  build_walks(ctx);

  // Fiber divisor components of this value coming from the weak resolution.
  std::vector<int> wc;
  std::map<int, int> fidx;
  for (auto& dc : R.comps)
    if (dc.kind == DivisorComponent::Fiber && dc.value == c) {
      fidx[dc.id] = (int)out.fcomps.size();
      out.fcomps.push_back({dc.id, dc.mult, true});
      wc.push_back(dc.id);
    }
  for (auto& e : R.edges)
    if (fidx.count(e.first) && fidx.count(e.second)) {
      auto key = std::minmax(fidx.at(e.first), fidx.at(e.second));
      out.dd_edges.emplace_back(key.first, key.second);
    }

  // Bamboos: connected chains of these components, each attached to exactly
  // one dicritical component.
  std::map<int, std::vector<int>> nbr;         // adjacency within wc
  std::map<int, std::vector<int>> dic_touch;   // comp -> adjacent dicriticals
  for (auto& e : R.edges) {
    for (int flip = 0; flip < 2; ++flip) {
      int u = flip ? e.second : e.first, v = flip ? e.first : e.second;
      if (!fidx.count(u)) continue;
      if (fidx.count(v))
        nbr[u].push_back(v);
      else if (R.comps[v].kind == DivisorComponent::Dicritical)
        dic_touch[u].push_back(v);
      else if (R.comps[v].kind != DivisorComponent::Inf)
        throw ConsistencyError("resolution: adjacent fiber components of distinct values");
      else
        throw ConsistencyError("resolution: fiber component adjacent to the infinite part");
    }
  }
  struct Bamboo {
    int dic = -1;
    std::vector<int> chain;  // attachment first
  };
  std::vector<Bamboo> bamboos;
  std::map<int, int> in_bamboo;  // comp -> bamboo index
  {
    std::set<int> seen;
    for (int start : wc) {
      if (seen.count(start)) continue;
      std::vector<int> grp{start};
      seen.insert(start);
      for (size_t i = 0; i < grp.size(); ++i)
        for (int v : nbr[grp[i]])
          if (seen.insert(v).second) grp.push_back(v);
      Bamboo bb;
      int attach = -1;
      for (int u : grp) {
        if (nbr[u].size() > 2)
          throw ConsistencyError("resolution: fiber component chain is not a bamboo");
        for (int d0 : dic_touch[u]) {
          if (bb.dic >= 0)
            throw ConsistencyError("resolution: bamboo attached to several dicritical components");
          bb.dic = d0;
          attach = u;
        }
      }
      if (bb.dic < 0)
        throw ConsistencyError("resolution: bamboo not attached to a dicritical component");
      if (nbr[attach].size() > 1)
        throw ConsistencyError("resolution: bamboo attached off its extremity");
      int prev = -1, cur = attach;
      while (cur >= 0) {
        bb.chain.push_back(cur);
        int nxt = -1;
        for (int v : nbr[cur])
          if (v != prev) nxt = v;
        prev = cur;
        cur = nxt;
      }
      if (bb.chain.size() != grp.size())
        throw ConsistencyError("resolution: fiber component chain is not a bamboo");
      bamboos.push_back(std::move(bb));
    }
  }
  std::sort(bamboos.begin(), bamboos.end(),
            [](const Bamboo& a, const Bamboo& b) { return a.chain[0] < b.chain[0]; });
  for (int i = 0; i < (int)bamboos.size(); ++i) {
    for (int u : bamboos[i].chain) in_bamboo[u] = i;
    PlaceAtInfinity P;
    P.dic_comp = bamboos[i].dic;
    P.bamboo = bamboos[i].chain;
    for (int u : bamboos[i].chain) P.bamboo_mult.push_back(R.comps[u].mult);
    out.places.push_back(std::move(P));
  }

  // Contact points of the strict fiber transform with the divisor.
  std::vector<int> care = wc;
  for (auto& dc : R.comps)
    if (dc.kind == DivisorComponent::Dicritical) care.push_back(dc.id);
  std::sort(care.begin(), care.end());

  std::vector<Contact> contacts;
  for (int host : care) {
    int nid = R.comps[host].node;
    const Walk& wa = ctx.wA.at(nid);
    UPoly h0 = wa.H.subst_x(FElem(0));
    for (auto& r : all_roots(h0, wa.F)) {
      AlgNum ra = algnum_of(r.value);
      bool isblown = false;
      for (auto& [bv, ch] : R.nodes[nid].A.blown) {
        (void)ch;
        isblown |= bv == ra;
      }
      if (isblown) continue;
      Contact ct;
      ct.host = host;
      ct.F = r.field;
      ct.emb0 = compose_emb(r.emb, wa.emb0);
      ct.chat = r.emb(wa.chat);
      ct.chart = shift_chart(map_chart(wa.chart, r.emb, r.field), FElem(0), r.value);
      ct.H = map_bpoly(wa.H, r.emb).shift(FElem(0), r.value);
      contacts.push_back(std::move(ct));
    }
    const Walk& wb = ctx.wB.at(nid);
    if (!R.nodes[nid].B.blown_origin && wb.H.coef(0, 0).is_zero()) {
      Contact ct;
      ct.host = host;
      ct.F = wb.F;
      ct.emb0 = wb.emb0;
      ct.chat = wb.chat;
      ct.chart = wb.chart;
      ct.chart.blown.clear();
      ct.H = wb.H;
      contacts.push_back(std::move(ct));
    }
  }
  for (auto& ct : contacts)
    for (auto& dv : ct.chart.divs)
      if (dv.eq.coef(0, 0).is_zero()) ct.comps.push_back(dv.comp);

  // Assign each contact to a place; create the free places.
  for (auto& ct : contacts) {
    int dic = -1;
    std::vector<int> fibs;
    for (int cid : ct.comps) {
      switch (R.comps[cid].kind) {
        case DivisorComponent::Inf:
          throw ConsistencyError("resolution: fiber meets the infinite part of the divisor");
        case DivisorComponent::Dicritical:
          if (dic >= 0)
            throw ConsistencyError("resolution: dicritical crossing unsupported");
          dic = cid;
          break;
        case DivisorComponent::Fiber:
          if (!(R.comps[cid].value == c))
            throw ConsistencyError("resolution: contact on a fiber component of another value");
          fibs.push_back(cid);
          break;
      }
    }
    if (fibs.empty()) {
      PlaceAtInfinity P;
      P.dic_comp = dic;
      ct.place = (int)out.places.size();
      out.places.push_back(std::move(P));
    } else {
      int bb = in_bamboo.at(fibs[0]);
      for (int u : fibs)
        if (in_bamboo.at(u) != bb)
          throw ConsistencyError("resolution: contact spans two bamboos");
      if (dic >= 0 && dic != bamboos[bb].dic)
        throw ConsistencyError("resolution: bamboo attachment mismatch");
      ct.place = bb;
    }
  }

  // Strict fiber branches at every contact, with intersection multiplicities.
  for (auto& ct : contacts) {
    ct.branches = puiseux_branches(ct.H, FElem(0), FElem(0));
    if (ct.branches.empty())
      throw ConsistencyError("resolution: contact point without branches");
    branch_mults(ct);
  }

  // Bamboo meridian factors: beta_j = total strict intersection with comp j.
  std::map<int, Int> beta;
  for (auto& ct : contacts)
    for (auto& im : ct.imults)
      for (auto& [cid, i] : im)
        if (fidx.count(cid)) beta[cid] += i;
  std::vector<std::map<int, Int>> lambda(bamboos.size());  // comp (or dic) -> factor
  for (size_t bi = 0; bi < bamboos.size(); ++bi) {
    const auto& bb = bamboos[bi];
    int k = (int)bb.chain.size();
    std::vector<Int> mlt, e(k);
    for (int u : bb.chain) mlt.push_back(R.comps[u].mult);
    for (int j = 0; j < k; ++j) {
      Int s = beta.count(bb.chain[j]) ? beta[bb.chain[j]] : Int(0);
      if (j > 0) s += mlt[j - 1];
      if (j + 1 < k) s += mlt[j + 1];
      if (s % mlt[j] != 0)
        throw ConsistencyError("resolution: bamboo self-intersection not integral");
      e[j] = -s / mlt[j];
    }
    std::vector<Int> lam(k);
    lam[k - 1] = 1;
    for (int j = k - 1; j >= 1; --j)
      lam[j - 1] = -e[j] * lam[j] - (j + 1 < k ? lam[j + 1] : Int(0));
    Int lamD = -e[0] * lam[0] - (k >= 2 ? lam[1] : Int(0));
    for (Int& l : lam)
      if (l < 1) throw ConsistencyError("resolution: nonpositive bamboo factor");
    if (lamD < 1) throw ConsistencyError("resolution: nonpositive bamboo factor");
    // H_1 of the place neighborhood must be Z.
    std::vector<std::vector<Int>> M(k, std::vector<Int>(k + 1, Int(0)));
    for (int j = 0; j < k; ++j) {
      M[j][j + 1] = e[j];
      M[j][j] = 1;  // mu_{j-1}, with column 0 = mu_D
      if (j + 2 <= k) M[j][j + 2] = 1;
    }
    if (!smith_all_units(M))
      throw ConsistencyError("resolution: place neighborhood homology not Z");
    for (int j = 0; j < k; ++j) lambda[bi][bb.chain[j]] = lam[j];
    lambda[bi][bb.dic] = lamD;
  }

  // Per-branch place records.
  for (auto& ct : contacts) {
    bool attach = ct.place < (int)bamboos.size();
    for (size_t bj = 0; bj < ct.branches.size(); ++bj) {
      PlaceBranch pb;
      Int cls = 0;
      int m = 0;
      for (auto& [cid, i] : ct.imults[bj]) {
        m += i;
        cls += (attach ? lambda[ct.place].at(cid) : Int(1)) * i;
      }
      pb.m = m;
      pb.cls = cls;
      if (cls % m != 0)
        throw ConsistencyError("resolution: branch class not a multiple of its multiplicity");
      pb.ell = cls / m;
      if (pb.ell < 1) throw ConsistencyError("resolution: nonpositive branch factor");
      ct.place_idx.push_back((int)out.places[ct.place].branches.size());
      out.places[ct.place].branches.push_back(std::move(pb));
    }
  }

  // Affine component certificates (needed only for reducible fibers).
  {
    TowerPtr Kc;
    FieldEmb embc;
    TowerPtr K0 = R.root_charts[0].K;
    FElem chat0 = value_in(c, K0, &Kc, &embc);
    BPoly g0 = map_bpoly(R.f, embc) - BPoly::constant(chat0);
    if (absolute_factor_count(g0) > 1) {
      std::map<const Tower*, AbsoluteSplit> cache;
      for (auto& ct : contacts) {
        auto it = cache.find(ct.F.get());
        if (it == cache.end()) {
          BPoly g = map_bpoly(R.f, ct.emb0) - BPoly::constant(ct.chat);
          it = cache.emplace(ct.F.get(), absolute_split(g)).first;
        }
        for (size_t bj = 0; bj < ct.branches.size(); ++bj)
          out.places[ct.place].branches[ct.place_idx[bj]].cert =
              branch_cert(R, ct, bj, it->second);
      }
    }
  }

  // Normal-crossing completion: follow every branch until it meets a single
  // component of the completed fiber divisor transversally.
  {
    TotalCtx tc;
    tc.R = &R;
    tc.out = &out;
    tc.next_id = (int)R.comps.size();
    for (auto& dc : R.comps) {
      if (dc.kind == DivisorComponent::Dicritical)
        tc.info[dc.id] = {dc.b, ctx.ordH.at(dc.id), -1};
      else if (fidx.count(dc.id))
        tc.info[dc.id] = {dc.b, ctx.ordH.at(dc.id), fidx.at(dc.id)};
    }
    for (auto& ct : contacts) {
      tc.place = ct.place;
      std::vector<TBranch> tbs(ct.branches.size());
      std::vector<TBranch*> ptrs;
      for (size_t bj = 0; bj < ct.branches.size(); ++bj) {
        TBranch& tb = tbs[bj];
        tb.pb0 = ct.branches[bj];
        tb.idx_in_place = ct.place_idx[bj];
        tb.budget = tb.pb0.budget;
        rebuild(tb, ct);
        ptrs.push_back(&tb);
      }
      total_point(tc, ptrs, ct.comps, ct, 0);
    }
  }
  std::sort(out.touches.begin(), out.touches.end(),
            [](const FiberAtInfinity::Touch& a, const FiberAtInfinity::Touch& b) {
              return std::tie(a.place, a.branch) < std::tie(b.place, b.branch);
            });
  size_t nbr_total = 0;
  for (auto& P : out.places) nbr_total += P.branches.size();
  if (out.touches.size() != nbr_total)
    throw ConsistencyError("resolution: branch/touch count mismatch");
  return out;
}

std::vector<PlaceAtInfinity> places_at_infinity(const Resolution& R, const AlgNum& c) {
  return fiber_at_infinity(R, c).places;
}

InfinityGerms infinity_germs(const Resolution& R, const AlgNum& c) {
  InfinityGerms out;
  for (auto& U : R.root_charts) {
    for (auto& [alg, child] : U.blown) {
      (void)alg;
      const RNode& nd = R.nodes[child];
      BPoly CK = map_bpoly(U.C, nd.emb_parent);
      TowerPtr F;
      FieldEmb embc;
      FElem chat = value_in(c, nd.K, &F, &embc);
      BPoly germ = map_bpoly(CK, embc) - BPoly::monomial(chat, R.d, 0);
      FElem center = embc(nd.center_v);
      out.mu += local_milnor_number(germ, FElem(0), center);
      out.branches += (int)puiseux_branches(germ, FElem(0), center).size();
    }
  }
  return out;
}

int generic_branches_at_infinity(const Resolution& R) {
  int expect = 0;
  for (auto& dc : R.comps)
    if (dc.kind == DivisorComponent::Dicritical) expect += dc.degree;
  std::vector<AlgNum> B = critical_values_at_infinity(R);
  for (int t = 0; t < 16; ++t) {
    AlgNum ct{Rat(t)};
    if (std::find(B.begin(), B.end(), ct) != B.end()) continue;
    InfinityGerms g = infinity_germs(R, ct);
    if (g.branches != expect)
      throw ConsistencyError("resolution: generic branch count mismatch");
    return expect;
  }
  throw ConsistencyError("resolution: no generic value found");
}

}  // namespace polyfib
