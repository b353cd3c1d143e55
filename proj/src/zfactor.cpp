#include "zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace polyfib {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic mod a word-size prime

struct Fp {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (uint64_t)((unsigned __int128)a * b % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<uint64_t>;  // degree-indexed, trimmed

void ftrim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fdeg(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly fmul(const Fp& K, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
  }
  return c;
}

FpPoly fsub(const Fp& K, const FpPoly& a, const FpPoly& b) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = K.sub(c[i], b[i]);
  ftrim(c);
  return c;
}

void fdivmod(const Fp& K, const FpPoly& n, const FpPoly& d, FpPoly* q, FpPoly* r) {
  FpPoly rem = n;
  int dd = fdeg(d);
  FpPoly quo(fdeg(n) >= dd ? fdeg(n) - dd + 1 : 0, 0);
  uint64_t li = K.inv(d.back());
  for (int k = (int)rem.size() - 1; k >= dd; --k) {
    if (!rem[k]) continue;
    uint64_t f = K.mul(rem[k], li);
    quo[k - dd] = f;
    for (int i = 0; i <= dd; ++i)
      rem[k - dd + i] = K.sub(rem[k - dd + i], K.mul(f, d[i]));
  }
  ftrim(rem);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

FpPoly fmod(const Fp& K, const FpPoly& n, const FpPoly& d) {
  FpPoly r;
  fdivmod(K, n, d, nullptr, &r);
  return r;
}

FpPoly fmonic(const Fp& K, FpPoly f) {
  if (f.empty()) return f;
  uint64_t li = K.inv(f.back());
  for (auto& c : f) c = K.mul(c, li);
  return f;
}

FpPoly fgcd(const Fp& K, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    FpPoly r = fmod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(K, a);
}

// Extended gcd: s*a + t*b = 1 for coprime a, b.
void fbezout(const Fp& K, const FpPoly& a, const FpPoly& b, FpPoly* s, FpPoly* t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    FpPoly q, r;
    fdivmod(K, r0, r1, &q, &r);
    FpPoly s2 = fsub(K, s0, fmul(K, q, s1));
    FpPoly t2 = fsub(K, t0, fmul(K, q, t1));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (fdeg(r0) != 0) throw ConsistencyError("fbezout: inputs not coprime");
  uint64_t li = K.inv(r0[0]);
  for (auto& c : s0) c = K.mul(c, li);
  for (auto& c : t0) c = K.mul(c, li);
  *s = std::move(s0);
  *t = std::move(t0);
}

FpPoly fderiv(const Fp& K, const FpPoly& f) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i)
    d[i - 1] = K.mul(f[i], i % K.p);
  ftrim(d);
  return d;
}

FpPoly fpowmod(const Fp& K, FpPoly base, const Int& e, const FpPoly& m) {
  FpPoly r = {1};
  base = fmod(K, base, m);
  long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = bits - 1; i >= 0; --i) {
    r = fmod(K, fmul(K, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fmod(K, fmul(K, r, base), m);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Factorization mod p (distinct degree + Cantor-Zassenhaus)

struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

void edf(const Fp& K, const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
  if (fdeg(f) == d) {
    out.push_back(f);
    return;
  }
  Int half;
  mpz_ui_pow_ui(half.get_mpz_t(), (unsigned long)K.p, (unsigned long)d);
  half = (half - 1) / 2;
  for (;;) {
    FpPoly r(fdeg(f));
    for (auto& c : r) c = rng.next() % K.p;
    ftrim(r);
    if (r.empty()) continue;
    FpPoly u = fpowmod(K, r, half, f);
    if (u.empty()) continue;
    u.resize(std::max<size_t>(u.size(), 1), 0);
    u[0] = K.sub(u[0], 1);
    ftrim(u);
    FpPoly g = fgcd(K, u, f);
    if (fdeg(g) > 0 && fdeg(g) < fdeg(f)) {
      FpPoly q;
      fdivmod(K, f, g, &q, nullptr);
      edf(K, g, d, rng, out);
      edf(K, fmonic(K, q), d, rng, out);
      return;
    }
  }
}

// Monic squarefree f mod p -> monic irreducible factors.
std::vector<FpPoly> factor_modp(const Fp& K, FpPoly f) {
  std::vector<FpPoly> out;
  Rng rng;
  FpPoly xp = {0, 1};
  FpPoly h = xp;  // x^{p^d} mod f
  for (int d = 1; 2 * d <= fdeg(f); ++d) {
    h = fpowmod(K, h, Int((unsigned long)K.p), f);
    FpPoly diff = fsub(K, h, xp);
    FpPoly g = fgcd(K, diff, f);
    if (fdeg(g) > 0) {
      edf(K, g, d, rng, out);
      FpPoly q;
      fdivmod(K, f, g, &q, nullptr);
      f = fmonic(K, q);
      h = fmod(K, h, f);
    }
  }
  if (fdeg(f) > 0) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials and Hensel lifting

using ZPoly = std::vector<Int>;  // degree-indexed, trimmed

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return (int)f.size() - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

ZPoly zmod(ZPoly f, const Int& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(f);
  return f;
}

// Symmetric representative in (-m/2, m/2].
ZPoly zsym(ZPoly f, const Int& m) {
  Int half = m / 2;
  for (auto& c : f) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(f);
  return f;
}

// Division by a monic polynomial, coefficients mod m.
void zdivmod_monic(const ZPoly& n, const ZPoly& d, const Int& m, ZPoly* q, ZPoly* r) {
  ZPoly rem = zmod(n, m);
  int dd = zdeg(d);
  ZPoly quo(zdeg(rem) >= dd ? zdeg(rem) - dd + 1 : 0, Int(0));
  for (int k = (int)rem.size() - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Int f = rem[k];
    quo[k - dd] = f;
    for (int i = 0; i <= dd; ++i) {
      rem[k - dd + i] -= f * d[i];
      mpz_mod(rem[k - dd + i].get_mpz_t(), rem[k - dd + i].get_mpz_t(), m.get_mpz_t());
    }
  }
  ztrim(rem);
  if (q) *q = zmod(std::move(quo), m);
  if (r) *r = std::move(rem);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

// One quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m),
// f, g, h monic; updates everything to hold mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
  ZPoly q, r;
  zdivmod_monic(zmul(s, e), h, m2, &q, &r);
  ZPoly gstar = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
  ZPoly hstar = zmod(zadd(h, r), m2);

  ZPoly b = zmod(zsub(zadd(zmul(s, gstar), zmul(t, hstar)), ZPoly{Int(1)}), m2);
  ZPoly c, d;
  zdivmod_monic(zmul(s, b), hstar, m2, &c, &d);
  ZPoly sstar = zmod(zsub(s, d), m2);
  ZPoly tstar = zmod(zsub(t, zadd(zmul(t, b), zmul(c, gstar))), m2);

  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

ZPoly fp_to_z(const FpPoly& f) {
  ZPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = Int((unsigned long)f[i]);
  return out;
}

// Lift a pairwise factorization tree: monic f over Z, monic coprime
// factors mod p multiplying to f mod p; returns factors mod target >= p^k.
void lift_tree(const Fp& K, const ZPoly& f, const std::vector<FpPoly>& parts,
               const Int& target, std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    out.push_back(zmod(f, target));
    return;
  }
  size_t mid = parts.size() / 2;
  FpPoly gp = {1}, hp = {1};
  for (size_t i = 0; i < mid; ++i) gp = fmul(K, gp, parts[i]);
  for (size_t i = mid; i < parts.size(); ++i) hp = fmul(K, hp, parts[i]);
  FpPoly sp, tp;
  fbezout(K, gp, hp, &sp, &tp);
  ZPoly g = fp_to_z(gp), h = fp_to_z(hp), s = fp_to_z(sp), t = fp_to_z(tp);
  Int m = Int((unsigned long)K.p);
  while (m < target) {
    hensel_step(zmod(f, m * m), g, h, s, t, m);
    m = m * m;
  }
  lift_tree(K, g, std::vector<FpPoly>(parts.begin(), parts.begin() + mid), target, out);
  lift_tree(K, h, std::vector<FpPoly>(parts.begin() + mid, parts.end()), target, out);
}

// Exact division test in Z[x] with monic divisor.
bool zdivides_monic(const ZPoly& d, const ZPoly& f, ZPoly* quotient) {
  ZPoly rem = f;
  int dd = zdeg(d);
  if (dd < 0 || zdeg(rem) < dd) return false;
  ZPoly quo(zdeg(rem) - dd + 1, Int(0));
  for (int k = (int)rem.size() - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Int c = rem[k];
    quo[k - dd] = c;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d[i];
  }
  ztrim(rem);
  if (!rem.empty()) return false;
  if (quotient) *quotient = std::move(quo);
  return true;
}

// Zassenhaus on a monic squarefree integer polynomial; monic irreducible
// integer factors.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  int n = zdeg(f);
  if (n <= 1) return {f};
  // Prime with f squarefree mod p.
  Fp K{0};
  Int pz(1000003);
  for (;;) {
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    K.p = mpz_get_ui(pz.get_mpz_t());
    FpPoly fp(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      Int c = f[i];
      mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
      fp[i] = mpz_get_ui(c.get_mpz_t());
    }
    ftrim(fp);
    if (fdeg(fp) != n) continue;
    if (fdeg(fgcd(K, fp, fderiv(K, fp))) != 0) continue;
    FpPoly fmon = fmonic(K, fp);
    std::vector<FpPoly> parts = factor_modp(K, fmon);
    if (parts.size() == 1) return {f};
    std::sort(parts.begin(), parts.end());

    // Mignotte-style bound: factors of f have coefficients bounded by
    // 2^n * (1 + 2-norm of f).
    Int norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Int norm(0);
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Int bound = (norm << n) * 2 + 1;
    Int target = pz;
    while (target < bound) target = target * target;

    std::vector<ZPoly> lifted;
    lift_tree(K, zmod(f, target), parts, target, lifted);

    // Recombine subsets of modular factors.
    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::vector<bool> used(lifted.size(), false);
    int remaining = (int)lifted.size();
    for (int sz = 1; sz <= remaining; ++sz) {
      bool progress = true;
      while (progress && sz <= remaining - sz) {
        progress = false;
        std::vector<int> avail;
        for (size_t i = 0; i < lifted.size(); ++i)
          if (!used[i]) avail.push_back((int)i);
        std::vector<int> pick(sz);
        std::function<bool(int, int)> go = [&](int start, int k) -> bool {
          if (k == sz) {
            ZPoly prod = {Int(1)};
            for (int idx : pick) prod = zmod(zmul(prod, lifted[idx]), target);
            prod = zsym(prod, target);
            ZPoly quo;
            if (zdivides_monic(prod, rest, &quo)) {
              result.push_back(prod);
              rest = std::move(quo);
              for (int idx : pick) used[idx] = true;
              remaining -= sz;
              return true;
            }
            return false;
          }
          for (int i = start; i < (int)avail.size(); ++i) {
            pick[k] = avail[i];
            if (go(i + 1, k + 1)) return true;
          }
          return false;
        };
        progress = go(0, 0);
      }
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
  }
}

UPoly z_to_upoly(const ZPoly& f) {
  std::vector<FElem> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = FElem(Rat(f[i]));
  return UPoly(std::move(c));
}

// Monic irreducible rational factors of a squarefree rational polynomial.
std::vector<UPoly> factor_squarefree(const UPoly& f) {
  int n = f.deg();
  if (n <= 0) return {};
  if (n == 1) return {f.monic()};
  // Clear denominators, then monicize: F(x) = a^{n-1} f(x/a), a = lc.
  Int den(1);
  for (int i = 0; i <= n; ++i) den = lcm(den, f.coef(i).rat().get_den());
  ZPoly zf(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rat c = f.coef(i).rat() * Rat(den);
    zf[i] = c.get_num();
  }
  Int cont(0);
  for (const auto& c : zf) cont = gcd(cont, c);
  if (cont > 1)
    for (auto& c : zf) c /= cont;
  Int a = zf[n];
  if (a < 0) {
    for (auto& c : zf) c = -c;
    a = -a;
  }
  ZPoly F(n + 1);
  F[n] = 1;
  Int apow(1);
  for (int i = n - 1; i >= 0; --i) {
    F[i] = zf[i] * apow;
    apow *= a;
  }
  auto zfactors = factor_monic_squarefree(F);
  std::vector<UPoly> out;
  for (const auto& G : zfactors) {
    // Map back x -> a x and normalize to monic over Q.
    int m = zdeg(G);
    std::vector<FElem> c(m + 1);
    Int ap(1);
    for (int i = 0; i <= m; ++i) {
      c[i] = FElem(Rat(G[i] * ap));
      ap *= a;
    }
    out.push_back(UPoly(std::move(c)).monic());
  }
  std::sort(out.begin(), out.end(), [](const UPoly& x, const UPoly& y) {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    for (int i = x.deg(); i >= 0; --i) {
      Rat a2 = x.coef(i).rat(), b2 = y.coef(i).rat();
      if (a2 != b2) return a2 < b2;
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_rational(const UPoly& f) {
  for (const auto& c : f.coefs())
    if (!c.is_rational())
      throw ConsistencyError("factor_rational: coefficients must be rational");
  std::vector<std::pair<UPoly, int>> out;
  if (f.deg() <= 0) return out;
  for (const auto& [part, mult] : f.squarefree_decomposition())
    for (const auto& irr : factor_squarefree(part)) out.emplace_back(irr, mult);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.deg() != y.first.deg()) return x.first.deg() < y.first.deg();
    for (int i = x.first.deg(); i >= 0; --i) {
      Rat a = x.first.coef(i).rat(), b = y.first.coef(i).rat();
      if (a != b) return a < b;
    }
    return x.second < y.second;
  });
  return out;
}

bool is_irreducible_rational(const UPoly& f) {
  auto fs = factor_rational(f);
  return fs.size() == 1 && fs[0].second == 1 && fs[0].first.deg() == f.deg();
}

}  // namespace polyfib
