#include "scc/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scc/divided_diff.hpp"
#include "scc/index.hpp"

namespace scc {

namespace {

ModelElement conj_frame(const ModelElement& x, const SuperMatrix& u, bool into) {
  ModelElement r(x.dim_even(), x.dim_odd(), x.generators());
  for (const auto& [mono, a] : x.components())
    r.add_term(mono, into ? u.adjoint() * a * u : u * a * u.adjoint());
  return r;
}

void symb_accumulate(SymbElement& dst, const std::vector<int>& nodes,
                     const ModelElement& x) {
  auto it = dst.terms.find(nodes);
  if (it == dst.terms.end())
    dst.terms.emplace(nodes, x);
  else
    it->second += x;
}

void symb_prune(SymbElement& x) {
  std::erase_if(x.terms, [](const auto& kv) { return kv.second.is_zero(0.0); });
}

SymbElement symb_lmul(const ModelElement& a, const SymbElement& x) {
  SymbElement r;
  for (const auto& [nodes, me] : x.terms) symb_accumulate(r, nodes, a * me);
  symb_prune(r);
  return r;
}

SymbElement symb_rmul(const SymbElement& x, const ModelElement& a) {
  SymbElement r;
  for (const auto& [nodes, me] : x.terms) symb_accumulate(r, nodes, me * a);
  symb_prune(r);
  return r;
}

SymbElement symb_add(const SymbElement& a, const SymbElement& b) {
  SymbElement r = a;
  for (const auto& [nodes, me] : b.terms) symb_accumulate(r, nodes, me);
  return r;
}

SymbElement symb_scale(const SymbElement& a, cx s) {
  SymbElement r = a;
  for (auto& [nodes, me] : r.terms) me = me * s;
  return r;
}

SymbElement symb_mul(const SymbElement& a, const SymbElement& b) {
  SymbElement r;
  for (const auto& [na, xa] : a.terms)
    for (const auto& [nb, xb] : b.terms) {
      ModelElement prod = xa * xb;
      if (prod.is_zero(0.0)) continue;
      std::vector<int> merged;
      merged.reserve(na.size() + nb.size());
      std::merge(na.begin(), na.end(), nb.begin(), nb.end(),
                 std::back_inserter(merged));
      symb_accumulate(r, merged, prod);
    }
  symb_prune(r);
  return r;
}

SymbElement symb_nabla(const ModelElement& eta, const SymbElement& x) {
  SymbElement r;
  for (const auto& [nodes, me] : x.terms)
    symb_accumulate(r, nodes, eta * me - me.alpha() * eta);
  symb_prune(r);
  return r;
}

/// Convolution with a fresh leading e^{-s H^2}: every matrix row picks up
/// its eigenvalue as a new node.
SymbElement node_on_rows(const SymbElement& x) {
  SymbElement r;
  for (const auto& [nodes, me] : x.terms) {
    int d = me.dim();
    for (int row = 0; row < d; ++row) {
      ModelElement sel(me.dim_even(), me.dim_odd(), me.generators());
      bool nz = false;
      for (const auto& [mono, a] : me.components()) {
        SuperMatrix ra(me.dim_even(), me.dim_odd());
        for (int j = 0; j < d; ++j) ra(row, j) = a(row, j);
        if (!ra.is_zero(0.0)) {
          sel.add_term(mono, ra);
          nz = true;
        }
      }
      if (!nz) continue;
      std::vector<int> key = nodes;
      key.insert(std::lower_bound(key.begin(), key.end(), row), row);
      symb_accumulate(r, key, sel);
    }
  }
  return r;
}

/// Mirror of node_on_rows for the right-handed recurrence.
SymbElement node_on_cols(const SymbElement& x) {
  SymbElement r;
  for (const auto& [nodes, me] : x.terms) {
    int d = me.dim();
    for (int col = 0; col < d; ++col) {
      ModelElement sel(me.dim_even(), me.dim_odd(), me.generators());
      bool nz = false;
      for (const auto& [mono, a] : me.components()) {
        SuperMatrix ca(me.dim_even(), me.dim_odd());
        for (int j = 0; j < d; ++j) ca(j, col) = a(j, col);
        if (!ca.is_zero(0.0)) {
          sel.add_term(mono, ca);
          nz = true;
        }
      }
      if (!nz) continue;
      std::vector<int> key = nodes;
      key.insert(std::lower_bound(key.begin(), key.end(), col), col);
      symb_accumulate(r, key, sel);
    }
  }
  return r;
}

ModelElement eval_frame(const HeatFrame& f, const SymbElement& x, double t) {
  ModelElement acc(f.cyc.pdim, f.cyc.qdim, f.cyc.k);
  for (const auto& [nodes, me] : x.terms) {
    std::vector<double> mu;
    mu.reserve(nodes.size());
    for (int r : nodes) mu.push_back(f.lambda[r]);
    acc += me * cx(duhamel_coeff({mu, t}));
  }
  return acc;
}

SymbElement diag_seed(const HeatFrame& f) {
  SymbElement w;
  int d = f.h.dim();
  for (int r = 0; r < d; ++r) {
    SuperMatrix e(f.cyc.pdim, f.cyc.qdim);
    e(r, r) = 1.0;
    w.terms[{r}] = ModelElement::from_matrix(e, f.cyc.k, 0);
  }
  return w;
}

std::vector<SymbElement> omega_symbols(const HeatFrame& f, int n, bool right) {
  std::vector<SymbElement> w(n + 1);
  w[0] = diag_seed(f);
  for (int m = 0; m < n; ++m) {
    SymbElement s = right ? symb_rmul(w[m], f.c_f) : symb_lmul(f.c_f, w[m]);
    if (m >= 1)
      s = symb_add(s, right ? symb_rmul(w[m - 1], f.omega_f)
                            : symb_lmul(f.omega_f, w[m - 1]));
    w[m + 1] = symb_scale(right ? node_on_cols(s) : node_on_rows(s), cx(-1.0));
    symb_prune(w[m + 1]);
  }
  return w;
}

/// Spectral projector times a power of H, in the original frame.
SuperMatrix path_slot(const HeatFrame& f, const std::vector<SuperMatrix>& hpow,
                      int r, int i) {
  int d = f.h.dim();
  SuperMatrix sel(f.cyc.pdim, f.cyc.qdim);
  const SuperMatrix& p = hpow[i];
  for (int j = 0; j < d; ++j) sel(r, j) = p(r, j);
  return SuperMatrix(f.cyc.pdim, f.cyc.qdim,
                     f.u.mat() * sel.mat() * f.u.adjoint().mat());
}

std::vector<SuperMatrix> frame_powers(const HeatFrame& f) {
  SuperMatrix one = SuperMatrix::identity(f.cyc.pdim, f.cyc.qdim);
  return {one, f.h_f, f.h_f * f.h_f};
}

}  // namespace

HeatFrame heat_frame(const CycleDescriptor& cyc, const SuperMatrix& h) {
  if (h.dim_even() != cyc.pdim || h.dim_odd() != cyc.qdim)
    throw std::invalid_argument("heat_frame: dimension mismatch with cycle");
  if (!h.is_hermitian())
    throw std::invalid_argument("heat_frame: H must be Hermitian");
  if (h.parity() != 1 && !h.is_zero(0.0))
    throw std::invalid_argument("heat_frame: H must be odd");
  HeatFrame f;
  f.cyc = cyc;
  f.h = h;
  SuperMatrix h2 = h * h;
  HermitianEig eig = jacobi_hermitian(h2.mat());
  f.u = SuperMatrix(cyc.pdim, cyc.qdim, eig.u);
  if (f.u.parity() != 0)
    throw std::runtime_error("heat_frame: frame rotation is not even");
  f.lambda = eig.eval;
  f.h_f = SuperMatrix(cyc.pdim, cyc.qdim,
                      eig.u.adjoint() * h.mat() * eig.u);
  f.eta_f = conj_frame(cyc.eta, f.u, true);
  f.omega_f = conj_frame(cyc.omega, f.u, true);
  f.c_f = conj_frame(cyc.nabla(cyc.lift(h)), f.u, true);
  return f;
}

ModelElement omega_recurrence(const HeatFrame& f, int n, double t,
                              bool right_handed) {
  if (n < 0) throw std::invalid_argument("omega_recurrence: n must be >= 0");
  auto w = omega_symbols(f, n, right_handed);
  return conj_frame(eval_frame(f, w[n], t), f.u, false);
}

ModelElement heat_oracle(const HeatFrame& f, double s, double t) {
  ModelElement nil = f.c_f * cx(s) + f.omega_f * cx(s * s);
  SymbElement g = diag_seed(f);
  ModelElement acc = eval_frame(f, g, t);
  double sign = -1.0;
  for (int j = 1; j <= f.cyc.k + 1; ++j) {
    g = node_on_rows(symb_lmul(nil, g));
    symb_prune(g);
    if (g.terms.empty()) break;
    acc += eval_frame(f, g, t) * cx(sign);
    sign = -sign;
  }
  return conj_frame(acc, f.u, false);
}

ModelElement omega_comb(const HeatFrame& f, int n, double t) {
  ModelElement acc(f.cyc.pdim, f.cyc.qdim, f.cyc.k);
  int d = f.h.dim();
  for (const CombClass& cls : enumerate_classes(n)) {
    std::vector<bool> in_k(n + 1, false);
    for (int p : cls.K) in_k[p] = true;
    auto slot = [&](int p) {
      SymbElement s;
      if (!in_k[p]) {
        s.terms[{}] = ModelElement::unit(f.cyc.pdim, f.cyc.qdim, f.cyc.k);
        return s;
      }
      for (int r = 0; r < d; ++r) {
        SuperMatrix sel(f.cyc.pdim, f.cyc.qdim);
        const SuperMatrix& pw = (cls.i[p] == 0)
                                    ? SuperMatrix::identity(f.cyc.pdim, f.cyc.qdim)
                                    : (cls.i[p] == 1 ? f.h_f : f.h_f * f.h_f);
        for (int j = 0; j < d; ++j) sel(r, j) = pw(r, j);
        if (!sel.is_zero(0.0))
          s.terms[{r}] = ModelElement::from_matrix(sel, f.cyc.k, 0);
      }
      return s;
    };
    // rho(a_0) d rho(a_1) ... d rho(a_n) in the X-extension: starting on the
    // carrier only the components A + B X survive, with
    //   A_j = A_{j-1} nabla(a_j) + B_{j-1} omega a_j,  B_j = A_{j-1} alpha(a_j).
    // This keeps d(unit) = X + X alive where nabla alone would kill it.
    SymbElement a_acc = slot(0);
    SymbElement b_acc;
    for (int p = 1; p <= n; ++p) {
      SymbElement sp = slot(p);
      SymbElement sp_alpha;
      for (const auto& [nodes, me] : sp.terms) sp_alpha.terms[nodes] = me.alpha();
      SymbElement next_a =
          symb_add(symb_mul(a_acc, symb_nabla(f.eta_f, sp)),
                   symb_mul(b_acc, symb_lmul(f.omega_f, sp)));
      SymbElement next_b = symb_mul(a_acc, sp_alpha);
      a_acc = std::move(next_a);
      b_acc = std::move(next_b);
    }
    const SymbElement& tprod = a_acc;
    int mu = 0;
    for (int p = 0; p <= n; ++p) mu += (n - p) * (cls.i[p] & 1);
    double sgn = ((cls.sign + mu) & 1) ? -1.0 : 1.0;
    acc += eval_frame(f, tprod, t) * cx(sgn);
  }
  return conj_frame(acc, f.u, false);
}

Chain<SuperMatrix> chi_realized(const HeatFrame& f, const CombClass& cls,
                                double t, bool tilde) {
  int d = f.h.dim();
  auto hpow = frame_powers(f);
  std::vector<int> timed;  // slot positions carrying a time variable
  if (tilde) timed.push_back(-1);
  timed.insert(timed.end(), cls.K.begin(), cls.K.end());
  int nt = static_cast<int>(timed.size());
  std::vector<bool> in_k(cls.n + 1, false);
  for (int p : cls.K) in_k[p] = true;
  SuperMatrix one = SuperMatrix::identity(f.cyc.pdim, f.cyc.qdim);

  Chain<SuperMatrix> c;
  std::map<std::vector<int>, double> memo;
  std::vector<int> idx(nt, 0);
  double base = cls.sign ? -1.0 : 1.0;
  while (true) {
    std::vector<SuperMatrix> factors;
    factors.reserve(cls.n + 1 + (tilde ? 1 : 0));
    bool dead = false;
    int s = 0;
    for (int p = tilde ? -1 : 0; p <= cls.n && !dead; ++p) {
      bool is_timed = (p < 0) || in_k[p];
      if (!is_timed) {  // i_p = 0 outside K: identity at time 0
        factors.push_back(one);
        continue;
      }
      int power = (p < 0) ? 0 : cls.i[p];
      SuperMatrix m = path_slot(f, hpow, idx[s], power);
      if (m.is_zero(1e-250))
        dead = true;
      else
        factors.push_back(m);
      ++s;
    }
    if (!dead) {
      std::vector<int> nodes = idx;
      std::sort(nodes.begin(), nodes.end());
      auto it = memo.find(nodes);
      double e;
      if (it != memo.end())
        e = it->second;
      else {
        std::vector<double> mu;
        mu.reserve(nodes.size());
        for (int r : nodes) mu.push_back(f.lambda[r]);
        e = duhamel_coeff({mu, t});
        memo.emplace(nodes, e);
      }
      if (e != 0.0) c.terms.push_back({cx(base * e), std::move(factors)});
    }
    int j = nt - 1;
    for (; j >= 0; --j) {
      if (++idx[j] < d) break;
      idx[j] = 0;
    }
    if (j < 0) break;
  }
  return c;
}

Chain<SuperMatrix> psi_chain(const HeatFrame& f, int n, double t, bool tilde) {
  Chain<SuperMatrix> c;
  int deg = tilde ? n - 1 : n;
  if (deg < 0) return c;
  for (const CombClass& cls : enumerate_classes(deg))
    c = chain_add(c, chi_realized(f, cls, t, tilde));
  return c;
}

Thm412Report verify_thm412(const HeatFrame& f, int n, double t) {
  Thm412Report r;
  Chain<SuperMatrix> psi = psi_chain(f, n + 1, t, false);
  Chain<SuperMatrix> psit = psi_chain(f, n, t, true);
  Chain<SuperMatrix> res =
      psi.terms.empty() ? psit
                        : chain_add(boundary(psi, BoundaryVariant::graded), psit);
  r.boundary_residual =
      res.terms.empty() ? 0.0 : chain_tensor(res).norm_max();
  r.cyclic_residual =
      psit.terms.empty() ? 0.0 : chain_tensor(norm_operator(psit)).norm_max();
  return r;
}

Chain<SuperMatrix> claim2_zeta(const HeatFrame& f, int n,
                               const std::vector<int>& L,
                               const std::vector<int>& M, double t) {
  int d = f.h.dim();
  auto hpow = frame_powers(f);
  SuperMatrix one = SuperMatrix::identity(f.cyc.pdim, f.cyc.qdim);
  auto contains = [](const std::vector<int>& v, int p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  for (int p : M)
    if (contains(L, p))
      throw std::invalid_argument("claim2_zeta: L and M must be disjoint");

  std::vector<int> rest;  // candidates for the untimed set M_1
  for (int p = -1; p <= n; ++p)
    if (!contains(L, p) && !contains(M, p)) rest.push_back(p);

  Chain<SuperMatrix> c;
  for (uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
    std::vector<int> m1, timed;
    for (size_t j = 0; j < rest.size(); ++j)
      if ((mask >> j) & 1) m1.push_back(rest[j]);
    for (int p = -1; p <= n; ++p)
      if (!contains(m1, p)) timed.push_back(p);
    double sgn = (m1.size() & 1) ? -1.0 : 1.0;

    int nt = static_cast<int>(timed.size());
    std::vector<int> idx(nt, 0);
    std::map<std::vector<int>, double> memo;
    while (true) {
      std::vector<SuperMatrix> factors;
      bool dead = false;
      int s = 0;
      for (int p = -1; p <= n && !dead; ++p) {
        if (contains(m1, p)) {
          factors.push_back(one);
          continue;
        }
        int power = contains(L, p) ? 1 : (contains(M, p) ? 0 : 2);
        SuperMatrix m = path_slot(f, hpow, idx[s], power);
        if (m.is_zero(1e-250))
          dead = true;
        else
          factors.push_back(m);
        ++s;
      }
      if (!dead) {
        std::vector<int> nodes = idx;
        std::sort(nodes.begin(), nodes.end());
        auto it = memo.find(nodes);
        double e;
        if (it != memo.end())
          e = it->second;
        else {
          std::vector<double> mu;
          for (int r : nodes) mu.push_back(f.lambda[r]);
          e = duhamel_coeff({mu, t});
          memo.emplace(nodes, e);
        }
        if (e != 0.0) c.terms.push_back({cx(sgn * e), std::move(factors)});
      }
      int j = nt - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < d) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
  }
  return c;
}

MainReport verify_main(const CycleDescriptor& cyc, const SuperMatrix& h,
                       const std::vector<double>& st) {
  if (cyc.k % 2 != 0)
    throw std::invalid_argument("verify_main: cycle degree k must be even");
  int m = cyc.k / 2;
  int deg = 2 * m;
  if (static_cast<int>(st.size()) < deg + 1)
    throw std::invalid_argument("verify_main: not enough sample points");
  for (size_t i = 0; i < st.size(); ++i)
    for (size_t j = i + 1; j < st.size(); ++j)
      if (std::abs(st[i] - st[j]) < 1e-6)
        throw std::invalid_argument("verify_main: sample points too close");

  HeatFrame f = heat_frame(cyc, h);
  int np = static_cast<int>(st.size());
  Mat v(np, deg + 1);
  Mat y(np, 1);
  for (int i = 0; i < np; ++i) {
    double pw = 1.0;
    for (int j = 0; j <= deg; ++j) {
      v(i, j) = pw;
      pw *= st[i];
    }
    y(i, 0) = cyc.tau(heat_oracle(f, 1.0, st[i]));
  }
  Mat va = v.adjoint();
  Mat coef = solve(va * v, va * y);

  MainReport r;
  r.coeffs.resize(deg + 1);
  for (int j = 0; j <= deg; ++j) r.coeffs[j] = coef(j, 0);
  r.top = r.coeffs[deg];
  r.max_lower = 0.0;
  for (int j = 0; j < deg; ++j)
    r.max_lower = std::max(r.max_lower, std::abs(r.coeffs[j]));
  FredholmRealization fr = FredholmRealization::from_odd(h);
  r.reference = k_pair(cyc, crossed_e0(cyc.pdim, cyc.qdim), m) -
                k_pair(cyc, crossed_graph_projection(fr), m);
  return r;
}

}  // namespace scc
