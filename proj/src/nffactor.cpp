#include "nffactor.hpp"

#include <algorithm>

#include "bpoly.hpp"

namespace polyfib {

namespace {

// f in K[t] rewritten as a bivariate over K's parent: x is K's generator,
// y is t.
BPoly to_bivar(const UPoly& f, const TowerPtr& K) {
  BPoly out;
  for (int j = 0; j <= f.deg(); ++j) {
    FElem c = FElem::promote(f.coef(j), K);
    if (c.is_rational()) {
      out = out + BPoly::monomial(c, 0, j);
      continue;
    }
    const auto& cc = c.coefs();
    for (size_t i = 0; i < cc.size(); ++i)
      out = out + BPoly::monomial(cc[i], (int)i, j);
  }
  return out;
}

BPoly minpoly_bivar(const TowerPtr& K) {
  BPoly out;
  const auto& m = K->minpoly();
  for (size_t i = 0; i < m.size(); ++i)
    out = out + BPoly::monomial(m[i], (int)i, 0);
  return out;
}

// Shrink the element's enclosure until it isolates a single root of p.
Box isolating_box_for(const UPoly& p, const FElem& x) {
  for (int i = 0; i < 4096; ++i) {
    CBox b = x.interval();
    auto w = try_winding(p, b);
    if (w) {
      if (*w == 1) return b;
      if (*w == 0) throw ConsistencyError("isolating_box_for: element is not a root");
    }
    x.refine_fields();
  }
  throw ConsistencyError("isolating_box_for: refinement stalled");
}

std::string gen_name_for(const TowerPtr& parent) {
  int depth = parent ? parent->depth() : 0;
  return std::string(1, (char)('a' + depth));
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    FElem ca = a.coef(i), cb = b.coef(i);
    if (ca.is_rational() && cb.is_rational()) {
      Rat ra = ca.rat(), rb = cb.rat();
      if (ra != rb) return ra < rb;
    } else {
      std::string sa = ca.str(), sb = cb.str();
      if (sa != sb) return sa < sb;
    }
  }
  return false;
}

// Trager: monic squarefree f over tower K.
std::vector<UPoly> factor_sqfree(const UPoly& f, const TowerPtr& K);

std::vector<UPoly> trager(const UPoly& f, const TowerPtr& K) {
  if (f.deg() == 1) return {f};
  FElem g = FElem::gen(K);
  int dm = K->degree();
  BPoly M = minpoly_bivar(K);
  for (int k = 0; k <= 60; ++k) {
    long s = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
    UPoly h = f.shift_arg(FElem(-s) * g);  // h(t) = f(t - s*g)
    UPoly N = BPoly::resultant_x(M, to_bivar(h, K));
    if (N.deg() != f.deg() * dm) continue;
    if (UPoly::gcd(N, N.derivative()).deg() != 0) continue;
    auto parts = factor_sqfree(N.monic(), K->parent());
    if (parts.size() == 1) return {f};
    std::vector<UPoly> out;
    for (const auto& q : parts) {
      UPoly qs = q.shift_arg(FElem(s) * g);  // roots back at the roots of f
      UPoly fi = UPoly::gcd(f, qs);
      if (fi.deg() > 0) out.push_back(fi);
    }
    int degsum = 0;
    for (const auto& fi : out) degsum += fi.deg();
    if (degsum != f.deg())
      throw ConsistencyError("trager: factor degrees do not add up");
    return out;
  }
  throw ConsistencyError("trager: no squarefree norm shift found");
}

std::vector<UPoly> factor_sqfree(const UPoly& f, const TowerPtr& K) {
  if (!K) {
    std::vector<UPoly> out;
    for (const auto& [q, m] : factor_rational(f)) out.push_back(q);
    return out;
  }
  return trager(f.monic(), K);
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_over(const UPoly& f, const TowerPtr& K) {
  for (const auto& c : f.coefs())
    if (!Tower::is_ancestor(c.field(), K))
      throw ConsistencyError("factor_over: coefficient outside the field");
  std::vector<std::pair<UPoly, int>> out;
  if (f.deg() <= 0) return out;
  for (const auto& [part, mult] : f.squarefree_decomposition())
    for (const auto& q : factor_sqfree(part, K)) out.emplace_back(q, mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return upoly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_over(const UPoly& f, const TowerPtr& K) {
  auto fs = factor_over(f, K);
  return fs.size() == 1 && fs[0].second == 1 && fs[0].first.deg() == f.deg();
}

std::vector<FElem> roots_in_field(const UPoly& f, const TowerPtr& K) {
  std::vector<FElem> out;
  for (const auto& [q, m] : factor_over(f, K))
    if (q.deg() == 1) out.push_back(-q.coef(0));
  return out;
}

std::vector<FieldRoot> roots_over(const UPoly& f, const TowerPtr& K) {
  std::vector<FieldRoot> out;
  for (const auto& [q, m] : factor_over(f.squarefree_part(), K)) {
    if (q.deg() == 1) {
      out.push_back({q, K, -q.coef(0)});
      continue;
    }
    for (const Box& b : isolate_roots(q)) {
      Extension e = adjoin_root(q, K, b);
      out.push_back({q, e.field, e.root});
    }
  }
  return out;
}

UPoly minpoly_over_Q(const FElem& x) {
  if (x.is_rational()) return UPoly::linear(FElem(1), FElem(-x.rat()));
  // Eliminate the tower generators top-down with resultants; then pick the
  // rational irreducible factor that vanishes at x.
  UPoly q({-x, FElem(1)});
  for (TowerPtr T = x.field(); T; T = T->parent())
    q = BPoly::resultant_x(minpoly_bivar(T), to_bivar(q, T));
  q = q.monic();
  for (const auto& [p, m] : factor_rational(q)) {
    UPoly pk(p.coefs());
    if (pk.eval(x).is_zero()) return p;
  }
  throw ConsistencyError("minpoly_over_Q: no factor vanishes");
}

AlgNum algnum_of(const FElem& x) {
  if (x.is_rational()) return AlgNum(x.rat());
  UPoly m = minpoly_over_Q(x);
  if (m.deg() == 1) return AlgNum(-m.coef(0).rat());
  return AlgNum(m, isolating_box_for(m, x));
}

namespace {

struct Flattened {
  TowerPtr field;
  FElem alpha;  // image of K->parent()'s generator
  FElem beta;   // image of K's generator
};

// Replace K = Q(a)(b) by a simple extension Q(g), g = b + s*a primitive.
Flattened flatten(const TowerPtr& K) {
  TowerPtr A = K->parent();
  if (!A || A->parent())
    throw ConsistencyError("flatten: expected a depth-two tower");
  UPoly ma(std::vector<FElem>(A->minpoly()));  // over Q
  BPoly Ma = BPoly::from_x(ma);
  // m_b as a bivariate over Q: x the generator of A, y the variable.
  BPoly Mb;
  {
    UPoly mb(std::vector<FElem>(K->minpoly()));
    Mb = to_bivar(mb, A);
  }
  FElem a = FElem::gen(A), b = FElem::gen(K);
  for (int s = 1; s <= 60; ++s) {
    // Norm of y - (b + s a): eliminate a from Mb(x, y - s x).
    BPoly shifted = Mb.subst(BPoly::x(), BPoly::y() - BPoly::x() * FElem((long)s));
    UPoly N = BPoly::resultant_x(Ma, shifted).monic();
    if (N.deg() != A->degree() * K->degree()) continue;
    if (UPoly::gcd(N, N.derivative()).deg() != 0) continue;
    FElem gamma = b + FElem((long)s) * a;
    Box box = isolating_box_for(N, gamma);
    TowerPtr F = Tower::make(nullptr, N.coefs(), box, gen_name_for(nullptr));
    FElem gf = FElem::gen(F);
    // Recover a inside F: common root of m_a(x) and m_b(g - s x).
    UPoly d = shifted.swap_vars().subst_x(gf);  // m_b(gf - s x) in x
    UPoly ma_f(ma.coefs());
    UPoly lin = UPoly::gcd(ma_f, d);
    if (lin.deg() != 1)
      throw ConsistencyError("flatten: generator recovery failed");
    FElem af = -lin.coef(0);
    FElem bf = gf - FElem((long)s) * af;
    return {F, af, bf};
  }
  throw ConsistencyError("flatten: no primitive shift found");
}

}  // namespace

Extension adjoin_root(const UPoly& q, const TowerPtr& K, const Box& which) {
  if (K && K->depth() >= 2) {
    Flattened fl = flatten(K);
    // Re-express q over the flattened field, then adjoin there.
    auto embed_elem = [K, fl](const FElem& x) -> FElem {
      std::function<FElem(const FElem&)> rec = [&](const FElem& v) -> FElem {
        if (v.is_rational()) return v;
        FElem g = (v.field() == K) ? fl.beta
                  : (v.field() == K->parent())
                      ? fl.alpha
                      : throw ConsistencyError("adjoin_root: foreign element");
        FElem acc(0);
        for (int i = (int)v.coefs().size() - 1; i >= 0; --i)
          acc = acc * g + rec(v.coefs()[i]);
        return acc;
      };
      return rec(x);
    };
    std::vector<FElem> qc;
    for (const auto& c : q.coefs()) qc.push_back(embed_elem(c));
    Extension inner = adjoin_root(UPoly(std::move(qc)), fl.field, which);
    auto outer_embed = [embed_elem, inner](const FElem& x) {
      return inner.embed(embed_elem(x));
    };
    return {inner.field, inner.root, outer_embed};
  }
  std::vector<FElem> mp;
  for (const auto& c : q.coefs()) mp.push_back(FElem::promote(c, K));
  TowerPtr T = Tower::make(K, std::move(mp), which, gen_name_for(K));
  return {T, FElem::gen(T), [](const FElem& x) { return x; }};
}

UPoly map_upoly(const UPoly& f, const FieldEmb& e) {
  std::vector<FElem> c;
  c.reserve(f.coefs().size());
  for (const auto& a : f.coefs()) c.push_back(e(a));
  return UPoly(std::move(c));
}

BPoly map_bpoly(const BPoly& f, const FieldEmb& e) {
  BPoly out;
  for (const auto& [k, a] : f.terms()) {
    FElem b = e(a);
    if (!b.is_zero()) out = out + BPoly::monomial(b, k.first, k.second);
  }
  return out;
}

Extension adjoin_value(const UPoly& q, const TowerPtr& K, Box box) {
  auto facs = factor_over(q, K);
  for (int round = 0; round < 4096; ++round) {
    for (const auto& [fac, mult] : facs) {
      auto w = try_winding(fac, box);
      if (!w) continue;
      if (*w == 0) continue;
      if (*w != 1) throw ConsistencyError("adjoin_value: box is not isolating");
      if (fac.deg() == 1)
        return {K, -fac.coef(0), [](const FElem& x) { return x; }};
      return adjoin_root(fac, K, box);
    }
    // Ambiguous with a root near the boundary of some factor's enclosure:
    // shrink the box against the full polynomial.
    box = refine_root_box(q, box);
    for (const auto& [fac, mult] : facs) fac.refine_fields();
  }
  throw ConsistencyError("adjoin_value: refinement stalled");
}

Compositum compose_fields(const TowerPtr& a, const TowerPtr& b) {
  FieldEmb id = [](const FElem& x) { return x; };
  if (Tower::is_ancestor(b, a)) return {a, id, id};
  if (Tower::is_ancestor(a, b)) return {b, id, id};
  // Adjoin b's generator chain (bottom-up) over a, preserving embeddings
  // via each generator's isolating box.
  std::vector<TowerPtr> chain;
  for (TowerPtr t = b; t; t = t->parent()) chain.push_back(t);
  std::reverse(chain.begin(), chain.end());

  TowerPtr field = a;
  FieldEmb from_a = id;
  // Images of the processed generators of b's chain, in `field`.
  auto images = std::make_shared<std::vector<std::pair<TowerPtr, FElem>>>();
  auto from_b = [images](const FElem& x) -> FElem {
    std::function<FElem(const FElem&)> rec = [&](const FElem& v) -> FElem {
      if (v.is_rational()) return v;
      for (const auto& [t, img] : *images) {
        if (t != v.field()) continue;
        FElem acc(0);
        for (int i = (int)v.coefs().size() - 1; i >= 0; --i)
          acc = acc * img + rec(v.coefs()[i]);
        return acc;
      }
      throw ConsistencyError("compose_fields: element outside source tower");
    };
    return rec(x);
  };
  for (const TowerPtr& t : chain) {
    UPoly q = map_upoly(UPoly(std::vector<FElem>(t->minpoly())), from_b);
    Extension ext = adjoin_value(q, field, t->gen_box());
    if (ext.field != field) {
      FieldEmb prev = from_a;
      from_a = [prev, ext](const FElem& x) { return ext.embed(prev(x)); };
      for (auto& [tt, img] : *images) img = ext.embed(img);
      field = ext.field;
    }
    images->emplace_back(t, ext.root);
  }
  return {field, from_a, from_b};
}

}  // namespace polyfib
