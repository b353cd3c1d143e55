// Top-level invariants of a polynomial map f: C^2 -> C: the bifurcation set
// B = B_aff ∪ B_inf, Euler characteristics of the fibers (computed two ways),
// the diagnostics of the comparison morphisms j_c / j_inf, and the rank data
// of the monodromy around each irregular value. Every identity relating these
// quantities is asserted before a report is returned.

#pragma once

#include "fibergraph.hpp"

namespace polyfib {

struct JDiagnostics {
  bool injective = true;
  bool surjective = true;
  bool isomorphism = true;
  int rk_ker_jc = 0;
  int rk_ker_jinf = 0;
  bool acyclic = true;
  bool strongly_acyclic = true;
};

struct MonodromyRanks {
  int rk_inv = 0;         // rk Ker(h_c - id)
  int rk_K1 = 0;          // invariant vanishing cycles
  int jordan2_eigen1 = 0; // Jordan 2-blocks for the eigenvalue 1
  int w_minus1 = 0, w0 = 0, w1 = 0, w2 = 0;  // vanishing-cycle weights
};

struct FiberReport {
  AlgNum c;
  bool in_B = false, in_Baff = false, in_Binf = false;
  AffineFiber fiber;      // r, G_c, singular points
  FiberAtInfinity inf;    // places, completed divisor data
  FiberBundle graphs;     // G_c, Gbar_c, G_{c,P}
  int n = 1, r = 1;
  int chi = 0;
  int mu_aff = 0;         // sum of the Milnor numbers on the fiber
  int lambda = 0;         // jump at infinity
  JDiagnostics j;
  MonodromyRanks monodromy;
};

// Shared artifacts reused by every per-value report.
struct Analyzer {
  BPoly f;
  int d = 0;
  Resolution R;
  std::vector<CriticalPoint> crit;
  std::vector<AlgNum> B_aff, B_inf, B;  // sorted by (minpoly degree, coefficients)
  int points_at_infinity = 0;           // distinct points of the closure on L_inf
  AlgNum generic_c;                     // rational probe outside B
  int chi_generic = 0;
  int mu_inf_generic = 0;
};

struct Analysis {
  Analyzer shared;
  std::vector<FiberReport> fibers;  // one per c in B
};

// Distinct affine critical values, sorted.
std::vector<AlgNum> affine_critical_values(const std::vector<CriticalPoint>& crit);

Analyzer prepare(const BPoly& f);

// Full report for one value (not necessarily in B); asserts every identity.
FiberReport fiber_report(const Analyzer& an, const AlgNum& c);

// chi(F_c), computed by the component/genus route and checked against the
// Suzuki route inside fiber_report. Standalone two-route entry point.
int euler_characteristic(const BPoly& f, const AlgNum& c);

Analysis analyze(const BPoly& f);

}  // namespace polyfib
