#include "ruppert.hpp"

#include <algorithm>
#include <map>

#include "nffactor.hpp"

namespace polyfib {

namespace {

// Dense matrix over FElem with reduced row echelon form and null space.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<FElem> a;

  FElem& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const FElem& at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// Canonical null-space basis: rref with first-nonzero pivoting, then the
// standard free-variable vectors. Deterministic for a fixed column order.
std::vector<std::vector<FElem>> null_space(Mat m) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, j).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(p, k), m.at(r, k));
    FElem inv = m.at(r, j).inv();
    for (int k = j; k < m.cols; ++k) m.at(r, k) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, j).is_zero()) continue;
      FElem f = m.at(i, j);
      for (int k = j; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (int j : pivot_col) is_pivot[j] = true;
  std::vector<std::vector<FElem>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<FElem> v(m.cols, FElem(0));
    v[j] = FElem(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.at((int)i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

AbsoluteSplit absolute_split(const BPoly& g) {
  if (g.is_constant()) throw InputError("absolute_split: constant polynomial");
  BPoly gx = g.derivative_x(), gy = g.derivative_y();
  if (!BPoly::gcd(BPoly::gcd(g, gx), gy).is_constant())
    throw InputError("absolute_split: squarefree polynomial required");

  int m = g.deg_x(), n = g.deg_y();
  // Unknowns: coefficients of u (ex <= m-1, ey <= n) then v (ex <= m, ey <= n-1).
  int nu = m * (n + 1), nv = (m + 1) * n;
  auto ucol = [&](int ex, int ey) { return ex * (n + 1) + ey; };
  auto vcol = [&](int ex, int ey) { return nu + ex * n + ey; };

  // Rows are indexed by the monomials of u_y g - u g_y - v_x g + v g_x.
  std::map<BPoly::Key, int> rowof;
  auto addrows = [&](const BPoly& p, int dx, int dy) {
    for (const auto& [k, c] : p.terms()) {
      BPoly::Key kk{k.first + dx, k.second + dy};
      if (kk.first >= 0 && kk.second >= 0) rowof.emplace(kk, 0);
    }
  };
  // u_y g and u g_y reach (m-1 + m, n-1 + n) etc.; enumerating from the
  // supports of g, gx, gy shifted by every unknown monomial keeps it sparse.
  for (int ex = 0; ex < m; ++ex)
    for (int ey = 0; ey <= n; ++ey) {
      addrows(g, ex, ey - 1);
      addrows(gy, ex, ey);
    }
  for (int ex = 0; ex <= m; ++ex)
    for (int ey = 0; ey < n; ++ey) {
      addrows(g, ex - 1, ey);
      addrows(gx, ex, ey);
    }
  int nr = 0;
  for (auto& [k, idx] : rowof) idx = nr++;

  Mat M;
  M.rows = nr;
  M.cols = nu + nv;
  M.a.assign((size_t)nr * M.cols, FElem(0));
  auto add = [&](int ex, int ey, int col, const FElem& c) {
    if (ex < 0 || ey < 0) return;
    auto it = rowof.find({ex, ey});
    if (it == rowof.end()) throw ConsistencyError("absolute_split: missed row");
    M.at(it->second, col) += c;
  };
  for (int ex = 0; ex < m; ++ex)
    for (int ey = 0; ey <= n; ++ey) {
      int col = ucol(ex, ey);
      // (u_y) g: d/dy of x^ex y^ey is ey x^ex y^(ey-1)
      for (const auto& [k, c] : g.terms())
        if (ey > 0) add(k.first + ex, k.second + ey - 1, col, c * FElem((long)ey));
      for (const auto& [k, c] : gy.terms())
        add(k.first + ex, k.second + ey, col, -c);
    }
  for (int ex = 0; ex <= m; ++ex)
    for (int ey = 0; ey < n; ++ey) {
      int col = vcol(ex, ey);
      for (const auto& [k, c] : g.terms())
        if (ex > 0) add(k.first + ex - 1, k.second + ey, col, -c * FElem((long)ex));
      for (const auto& [k, c] : gx.terms())
        add(k.first + ex, k.second + ey, col, c);
    }

  AbsoluteSplit out;
  out.g = g;
  out.gx = gx;
  out.gy = gy;
  for (const auto& vec : null_space(std::move(M))) {
    BPoly u, v;
    for (int ex = 0; ex < m; ++ex)
      for (int ey = 0; ey <= n; ++ey)
        if (!vec[ucol(ex, ey)].is_zero())
          u = u + BPoly::monomial(vec[ucol(ex, ey)], ex, ey);
    for (int ex = 0; ex <= m; ++ex)
      for (int ey = 0; ey < n; ++ey)
        if (!vec[vcol(ex, ey)].is_zero())
          v = v + BPoly::monomial(vec[vcol(ex, ey)], ex, ey);
    out.basis.emplace_back(std::move(u), std::move(v));
  }
  if (out.basis.empty())
    throw ConsistencyError("absolute_split: empty solution space");
  return out;
}

int absolute_factor_count(const BPoly& g) { return absolute_split(g).count(); }

std::vector<AlgNum> component_certificate(const AbsoluteSplit& s,
                                          const LSeries& x, const LSeries& y) {
  LSeries gxs = series_compose(s.gx, x, y);
  LSeries gys = series_compose(s.gy, x, y);
  bool use_x;
  LSeries den;
  if (gxs.order()) {
    use_x = true;
    den = gxs;
  } else if (gys.order()) {
    use_x = false;
    den = gys;
  } else if (gxs.trunc < LSeries::kExact || gys.trunc < LSeries::kExact) {
    throw TruncationError("component_certificate: both partials truncate to zero");
  } else {
    throw ConsistencyError("component_certificate: branch inside singular locus");
  }
  int d = *den.order();
  FElem dinv = den.coef(d).inv();
  std::vector<AlgNum> out;
  for (const auto& [u, v] : s.basis) {
    LSeries num = series_compose(use_x ? u : v, x, y);
    if (d >= num.trunc)
      throw TruncationError("component_certificate: numerator too short");
    out.push_back(algnum_of(num.coef(d) * dinv));
  }
  return out;
}

}  // namespace polyfib
