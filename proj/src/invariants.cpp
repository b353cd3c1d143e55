#include "invariants.hpp"

#include <algorithm>

namespace polyfib {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ConsistencyError(what);
}

bool contains(const std::vector<AlgNum>& v, const AlgNum& c) {
  for (auto& x : v)
    if (x == c) return true;
  return false;
}

// Report ordering: minimal-polynomial degree, then coefficients from the
// leading one down, then the embedding order.
bool report_less(const AlgNum& a, const AlgNum& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Rat ca = a.minpoly().coef(i).rat(), cb = b.minpoly().coef(i).rat();
    if (ca != cb) return ca < cb;
  }
  return AlgNum::compare(a, b) < 0;
}

Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Distinct points of the projective closure of a fiber on the line at
// infinity: distinct roots of the top homogeneous form (c-independent).
int count_points_at_infinity(const BPoly& f) {
  int d = f.total_deg();
  BPoly top = f.homogeneous_part(d);
  UPoly t = top.subst_y(FElem(1));
  if (t.is_zero()) throw ConsistencyError("zero top form");
  int n = t.deg() >= 1 ? t.squarefree_part().deg() : 0;
  if (t.deg() < d) ++n;  // the point in the second chart
  return n;
}

struct EulerParts {
  int chi = 0;
  int mu_aff = 0;
  int mu_inf = 0;     // Milnor numbers of the closure germs at infinity
  int n_inf = 0;      // branches at infinity
};

// chi(F_c) from the component data: degrees, genera via the adjunction
// defect of every singular point (affine and at infinity), punctures.
EulerParts euler_parts(const Analyzer& an, const AffineFiber& A,
                       const FiberAtInfinity& I, const InfinityGerms& germs) {
  EulerParts e;
  for (auto& P : I.places) e.n_inf += P.n();
  require(germs.branches == e.n_inf,
          "branch count at infinity: germs vs places disagree");
  int branch_defect = 0;
  int delta2_aff = 0;
  for (auto& sp : A.sing) {
    e.mu_aff += sp.mu;
    branch_defect += sp.r_local - 1;
    require((sp.mu + sp.r_local - 1) % 2 == 0, "odd local adjunction defect");
    delta2_aff += sp.mu + sp.r_local - 1;
  }
  e.mu_inf = germs.mu;
  int delta2_inf = germs.mu + e.n_inf - an.points_at_infinity;
  require(delta2_inf >= 0 && delta2_inf % 2 == 0,
          "odd adjunction defect at infinity");
  // Twice the total geometric genus of the components.
  int g2 = (an.d - 1) * (an.d - 2) - delta2_aff - delta2_inf + 2 * (A.r - 1);
  require(g2 >= 0 && g2 % 2 == 0, "invalid total genus");
  e.chi = 2 * A.r - g2 - e.n_inf - branch_defect;
  return e;
}

FiberReport make_report(const Analyzer& an, const AlgNum& c, bool with_generic) {
  FiberReport v;
  v.c = c;
  v.in_Baff = contains(an.B_aff, c);
  v.in_Binf = contains(an.B_inf, c);
  v.in_B = v.in_Baff || v.in_Binf;

  v.fiber = affine_fiber(an.f, c, an.crit);
  v.inf = fiber_at_infinity(an.R, c);
  v.graphs = combine_fiber(v.fiber, v.inf);
  v.r = v.fiber.r;

  GraphInvariants g = graph_invariants(v.graphs.Gc);
  GraphInvariants gb = graph_invariants(v.graphs.barGc);
  v.n = g.components;

  // Euler characteristic, component route.
  InfinityGerms germs = infinity_germs(an.R, c);
  EulerParts e = euler_parts(an, v.fiber, v.inf, germs);
  v.chi = e.chi;
  v.mu_aff = e.mu_aff;

  // Suzuki route: chi(F_c) = chi(F_gen) + mu_c + lambda_c with the jump at
  // infinity read from the local germ data at the base points.
  if (with_generic) {
    v.lambda = e.mu_inf - an.mu_inf_generic;
    require(v.lambda >= 0, "negative jump at infinity");
    require(v.chi == an.chi_generic + v.mu_aff + v.lambda,
            "Euler characteristic: Suzuki route disagrees");
    require((v.lambda > 0) == v.in_Binf,
            "jump at infinity inconsistent with B_inf");
    require((v.mu_aff > 0) == v.in_Baff,
            "affine Milnor sum inconsistent with B_aff");
  }

  // Acyclicity, by graphs and by the counting identity.
  int sum_np = 0, sum_np_defect = 0;
  for (auto& P : v.inf.places) {
    sum_np += P.n();
    sum_np_defect += P.n() - 1;
  }
  bool acyclic_graphs = true;
  for (auto& gp : v.graphs.GcP)
    acyclic_graphs = acyclic_graphs && graph_invariants(gp).betti1 == g.betti1;
  bool acyclic_count =
      sum_np - 1 == (int)v.inf.places.size() - 1 + v.n - 1;
  require(acyclic_graphs == acyclic_count,
          "acyclicity: graph route and counting identity disagree");
  bool acyclic = acyclic_graphs;
  bool strongly = gb.betti1 == g.betti1;
  require(!strongly || acyclic, "strong acyclicity without acyclicity");
  if (v.n == 1) require(strongly == acyclic, "acyclicity notions split on a connected fiber");
  require((sum_np_defect == 0) == (v.n == 1 && acyclic),
          "kernel vanishing criterion violated");
  require(gb.betti1 - g.betti1 == sum_np_defect - (v.n - 1),
          "graph rank identity violated");

  // j diagnostics.
  v.j.acyclic = acyclic;
  v.j.strongly_acyclic = strongly;
  v.j.injective = v.n == 1 && acyclic;
  bool jinf_surjective = true;
  for (auto& P : v.inf.places) {
    Int gcls(0);
    for (auto& b : P.branches) gcls = igcd(gcls, b.cls);
    jinf_surjective = jinf_surjective && gcls == 1;
  }
  v.j.surjective = jinf_surjective && acyclic;
  v.j.isomorphism = v.j.injective && v.j.surjective;
  v.j.rk_ker_jinf = sum_np_defect;
  v.j.rk_ker_jc = v.n - 1 + gb.betti1 - g.betti1;
  require(v.j.rk_ker_jc == v.j.rk_ker_jinf,
          "kernel rank: the two formulas disagree");
  require(v.j.isomorphism == !v.in_Binf,
          "isomorphism flag disagrees with B_inf");

  // Monodromy ranks.
  v.monodromy.rk_inv = v.r - v.chi;
  v.monodromy.rk_K1 = v.r - 1 + gb.betti1;
  v.monodromy.jordan2_eigen1 = gb.betti1;
  v.monodromy.w_minus1 = v.r - 1;
  v.monodromy.w0 = gb.betti1;
  require(v.monodromy.w_minus1 + v.monodromy.w0 == v.monodromy.rk_K1,
          "vanishing-cycle distribution total");
  require(v.monodromy.rk_inv - v.monodromy.rk_K1 >= 0,
          "invariant cycles fewer than invariant vanishing cycles");
  if (with_generic && v.r == 1 && v.in_B)
    require(v.monodromy.rk_inv < 1 - an.chi_generic,
            "irreducible irregular fiber with trivial monodromy");
  if (!v.in_B) {
    require(v.r == 1 && v.n == 1 && v.j.rk_ker_jc == 0 &&
                v.monodromy.rk_K1 == 0 && gb.betti1 == 0,
            "regular value with nontrivial invariants");
  }
  return v;
}

}  // namespace

std::vector<AlgNum> affine_critical_values(
    const std::vector<CriticalPoint>& crit) {
  std::vector<AlgNum> vals;
  for (auto& cp : crit)
    if (!contains(vals, cp.value)) vals.push_back(cp.value);
  std::sort(vals.begin(), vals.end(), report_less);
  return vals;
}

Analyzer prepare(const BPoly& f) {
  if (f.is_constant()) throw InputError("constant polynomial");
  Analyzer an;
  an.f = f;
  an.d = f.total_deg();
  an.crit = affine_critical_points(f);
  an.R = resolve_infinity(f);
  an.B_aff = affine_critical_values(an.crit);
  an.B_inf = critical_values_at_infinity(an.R);
  std::sort(an.B_inf.begin(), an.B_inf.end(), report_less);
  an.B = an.B_aff;
  for (auto& c : an.B_inf)
    if (!contains(an.B, c)) an.B.push_back(c);
  std::sort(an.B.begin(), an.B.end(), report_less);
  an.points_at_infinity = count_points_at_infinity(f);

  // Rational probe outside B for the generic fiber data.
  for (long t = 0;; ++t) {
    AlgNum c((Rat(t)));
    if (contains(an.B, c)) continue;
    an.generic_c = c;
    break;
  }
  InfinityGerms germs = infinity_germs(an.R, an.generic_c);
  an.mu_inf_generic = germs.mu;
  AffineFiber A = affine_fiber(f, an.generic_c, an.crit);
  FiberAtInfinity I = fiber_at_infinity(an.R, an.generic_c);
  EulerParts e = euler_parts(an, A, I, germs);
  require(e.mu_aff == 0, "critical point on the generic fiber");
  an.chi_generic = e.chi;
  return an;
}

FiberReport fiber_report(const Analyzer& an, const AlgNum& c) {
  return make_report(an, c, true);
}

int euler_characteristic(const BPoly& f, const AlgNum& c) {
  Analyzer an = prepare(f);
  return fiber_report(an, c).chi;
}

Analysis analyze(const BPoly& f) {
  Analysis out;
  out.shared = prepare(f);
  for (auto& c : out.shared.B)
    out.fibers.push_back(fiber_report(out.shared, c));
  return out;
}

}  // namespace polyfib
