#include "fibergraph.hpp"

#include <algorithm>
#include <map>

#include "ruppert.hpp"

namespace polyfib {

namespace {

FieldEmb id_emb() {
  return [](const FElem& x) { return x; };
}

struct RootEmb {
  TowerPtr field;
  FElem value;
  FieldEmb emb;
};

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

AbsoluteSplit map_split(const AbsoluteSplit& s, const FieldEmb& e) {
  AbsoluteSplit r;
  r.g = map_bpoly(s.g, e);
  r.gx = map_bpoly(s.gx, e);
  r.gy = map_bpoly(s.gy, e);
  for (auto& [u, v] : s.basis)
    r.basis.emplace_back(map_bpoly(u, e), map_bpoly(v, e));
  return r;
}

// Certificate of the affine component containing a local branch, with
// re-expansion on truncation.
std::vector<AlgNum> branch_cert(const AbsoluteSplit& s, const PuiseuxBranch& b0) {
  PuiseuxBranch b = b0;
  for (int round = 0;; ++round) {
    try {
      AbsoluteSplit sb = map_split(s, b.emb);
      LSeries xs = LSeries::constant(b.emb(b.cx)) + b.xs;
      LSeries ys = LSeries::constant(b.emb(b.cy)) + b.ys;
      return component_certificate(sb, xs, ys);
    } catch (const TruncationError&) {
      if (round >= 9) throw;
      b = reexpand(b, b.budget * 2);
    }
  }
}

// k - 1 edges over the branch owners: path pattern (returned) checked
// against the star pattern for the same Betti number.
void add_point_edges(DualGraph& g, std::vector<int> owners) {
  std::sort(owners.begin(), owners.end());
  for (size_t j = 0; j + 1 < owners.size(); ++j)
    g.add_edge(owners[j], owners[j + 1]);
}

}  // namespace

std::vector<CriticalPoint> affine_critical_points(const BPoly& f) {
  if (f.is_constant()) throw InputError("constant polynomial");
  BPoly fx = f.derivative_x(), fy = f.derivative_y();
  std::vector<CriticalPoint> out;
  if (fx.is_zero() || fy.is_zero()) {
    // f depends on a single variable; any critical point lies on a line of
    // critical points.
    const BPoly& g = fx.is_zero() ? fy : fx;
    UPoly u = fx.is_zero() ? g.coef_x(0) : g.coef_y(0);
    if (u.deg() >= 1) throw InputError("affine critical locus is not isolated");
    return out;
  }
  if (!BPoly::gcd(fx, fy).is_constant())
    throw InputError("affine critical locus is not isolated");
  UPoly W;
  if (fx.deg_y() == 0 && fy.deg_y() == 0) {
    // Equations free of y: a common root would give a vertical critical line,
    // excluded by the gcd check above.
    if (UPoly::gcd(fx.coef_y(0), fy.coef_y(0)).deg() >= 1)
      throw ConsistencyError("critical elimination: unexpected common factor");
    return out;
  }
  if (fx.deg_y() == 0)
    W = fx.coef_y(0);
  else if (fy.deg_y() == 0)
    W = fy.coef_y(0);
  else
    W = BPoly::resultant_y(fx, fy);
  if (W.is_zero())
    throw ConsistencyError("critical elimination: vanishing resultant");
  for (auto& rx : all_roots(W, nullptr)) {
    UPoly a = fx.subst_x(rx.value);
    UPoly b = fy.subst_x(rx.value);
    if (a.is_zero() && b.is_zero())
      throw ConsistencyError("critical elimination: vertical critical line");
    UPoly h = a.is_zero() ? b : b.is_zero() ? a : UPoly::gcd(a, b);
    if (h.deg() < 1) continue;  // spurious elimination root
    for (auto& ry : all_roots(h, rx.field)) {
      CriticalPoint cp;
      cp.K = ry.field;
      cp.x = ry.emb(rx.value);
      cp.y = ry.value;
      cp.ax = algnum_of(cp.x);
      cp.ay = algnum_of(cp.y);
      cp.value = algnum_of(f.eval(cp.x, cp.y));
      cp.mu = local_milnor_number(f, cp.x, cp.y);
      if (cp.mu < 1)
        throw ConsistencyError("critical point with zero Milnor number");
      out.push_back(std::move(cp));
    }
  }
  return out;
}

int AffineFiber::n() const { return graph_invariants(G).components; }

AffineFiber affine_fiber(const BPoly& f, const AlgNum& c,
                         const std::vector<CriticalPoint>& crit) {
  AffineFiber A;
  A.c = c;

  // Field of the value.
  TowerPtr Qc;
  FElem chat;
  if (c.is_rational()) {
    chat = FElem(c.rat());
  } else {
    Extension ext = adjoin_value(c.minpoly(), nullptr, c.box());
    Qc = ext.field;
    chat = ext.root;
  }
  BPoly g = f - BPoly::constant(chat);

  // Reduced fiber check: a repeated factor divides g and both derivatives.
  {
    BPoly h = g;
    if (!g.derivative_x().is_zero()) h = BPoly::gcd(h, g.derivative_x());
    if (!g.derivative_y().is_zero()) h = BPoly::gcd(h, g.derivative_y());
    if (!h.is_constant()) throw InputError("non-reduced fiber");
  }

  A.r = absolute_factor_count(g);
  AbsoluteSplit split;
  if (A.r > 1) split = absolute_split(g);

  // Singular points of the fiber and their local branches.
  std::map<std::vector<AlgNum>, int> cert_id;
  std::vector<std::vector<std::vector<AlgNum>>> point_certs;
  for (auto& cp : crit) {
    if (!(cp.value == c)) continue;
    FieldEmb from_pt = id_emb(), from_c = id_emb();
    if (Qc && cp.K) {
      Compositum co = compose_fields(cp.K, Qc);
      from_pt = co.from_a;
      from_c = co.from_b;
    }
    FElem x0 = from_pt(cp.x), y0 = from_pt(cp.y);
    BPoly gF = f - BPoly::constant(from_c(chat));
    auto brs = puiseux_branches(gF, x0, y0);
    FiberSingularPoint sp;
    sp.x = cp.ax;
    sp.y = cp.ay;
    sp.mu = cp.mu;
    sp.r_local = (int)brs.size();
    point_certs.emplace_back();
    if (A.r == 1) {
      sp.owners.assign(brs.size(), 0);
    } else {
      AbsoluteSplit sF = Qc ? map_split(split, from_c) : split;
      for (auto& b : brs) {
        auto cert = branch_cert(sF, b);
        cert_id.emplace(cert, -1);
        point_certs.back().push_back(std::move(cert));
      }
    }
    A.sing.push_back(std::move(sp));
  }

  // Assign component ids: certificates in sorted order first, anonymous
  // components after.
  if ((int)cert_id.size() > A.r)
    throw ConsistencyError("more certificates than components");
  {
    int next = 0;
    for (auto& [cert, id] : cert_id) id = next++;
  }
  A.comp_cert.assign(A.r, {});
  for (auto& [cert, id] : cert_id) A.comp_cert[id] = cert;
  if (A.r > 1)
    for (size_t i = 0; i < A.sing.size(); ++i)
      for (auto& cert : point_certs[i])
        A.sing[i].owners.push_back(cert_id.at(cert));

  // The graph: path pattern, with the star pattern as a cross-check.
  for (int i = 0; i < A.r; ++i)
    A.G.add_vertex(VertexKind::Affine, 0, "A" + std::to_string(i));
  DualGraph star = A.G;
  for (auto& sp : A.sing) {
    add_point_edges(A.G, sp.owners);
    std::vector<int> o = sp.owners;
    std::sort(o.begin(), o.end());
    for (size_t j = 1; j < o.size(); ++j) star.add_edge(o[0], o[j]);
  }
  GraphInvariants gp = graph_invariants(A.G), gs = graph_invariants(star);
  if (gp.components != gs.components || gp.betti1 != gs.betti1)
    throw ConsistencyError("edge pattern changed the graph invariants");
  return A;
}

AffineFiber affine_fiber(const BPoly& f, const AlgNum& c) {
  return affine_fiber(f, c, affine_critical_points(f));
}

DualGraph affine_dual_graph(const BPoly& f, const AlgNum& c) {
  return affine_fiber(f, c).G;
}

DualGraph augment_by_place(const DualGraph& Gc, const std::vector<int>& owners) {
  DualGraph g = Gc;
  add_point_edges(g, owners);
  return g;
}

FiberBundle combine_fiber(AffineFiber& A, const FiberAtInfinity& I) {
  FiberBundle B;
  B.Gc = A.G;

  // Resolve the owners of the branches at infinity against the affine
  // components; new certificates claim the anonymous components.
  std::map<std::vector<AlgNum>, int> cert_id;
  int used = 0;
  for (int i = 0; i < A.r; ++i)
    if (!A.comp_cert[i].empty()) {
      cert_id[A.comp_cert[i]] = i;
      ++used;
    }
  std::map<std::vector<AlgNum>, int> fresh;
  if (A.r > 1) {
    for (auto& P : I.places)
      for (auto& b : P.branches) {
        if (b.cert.empty())
          throw ConsistencyError("missing branch certificate at infinity");
        if (!cert_id.count(b.cert)) fresh.emplace(b.cert, -1);
      }
    if (used + (int)fresh.size() != A.r)
      throw ConsistencyError("components at infinity do not match the fiber");
  }
  for (auto& [cert, id] : fresh) {
    id = used++;
    cert_id[cert] = id;
    A.comp_cert[id] = cert;
  }

  for (auto& P : I.places) {
    std::vector<int> owners;
    for (auto& b : P.branches)
      owners.push_back(A.r == 1 ? 0 : cert_id.at(b.cert));
    B.GcP.push_back(augment_by_place(A.G, owners));
    B.place_owners.push_back(std::move(owners));
  }

  // Completed fiber divisor: affine components plus the divisor components
  // over c, glued along the transversal meetings.
  B.barGc = A.G;
  std::vector<int> fvert;
  for (auto& fc : I.fcomps)
    fvert.push_back(B.barGc.add_vertex(VertexKind::Divisor, fc.mult,
                                       "D" + std::to_string(fc.comp_id)));
  for (auto& e : I.dd_edges) B.barGc.add_edge(fvert[e.first], fvert[e.second]);
  for (auto& t : I.touches) {
    if (t.fcomp < 0) continue;
    B.barGc.add_edge(B.place_owners[t.place][t.branch], fvert[t.fcomp]);
  }
  return B;
}

}  // namespace polyfib
