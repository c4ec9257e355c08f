#include "scc/cycle.hpp"

#include <cmath>
#include <stdexcept>

#include "scc/rng.hpp"

namespace scc {

ModelElement CycleDescriptor::nabla(const ModelElement& a) const {
  return eta * a - a.alpha() * eta;
}

cx CycleDescriptor::tau(const ModelElement& a) const {
  uint32_t top = (k == 0) ? 0u : ((1u << k) - 1u);
  return a.coeff(top).supertrace();
}

namespace {

double scale_of(const ModelElement& a, const ModelElement& b) {
  return std::max(1.0, a.norm_max() * b.norm_max());
}

}  // namespace

CycleDescriptor matrix_model_build(int p, int q, int k,
                                   const std::vector<SuperMatrix>& gens,
                                   uint64_t check_seed) {
  if (k % 2 != 0) throw std::invalid_argument("matrix_model_build: k must be even");
  if (static_cast<int>(gens.size()) != k)
    throw std::invalid_argument("matrix_model_build: need one generator per theta");
  CycleDescriptor cyc;
  cyc.pdim = p;
  cyc.qdim = q;
  cyc.k = k;
  cyc.n_max = k;
  cyc.eta = ModelElement(p, q, k);
  for (int i = 0; i < k; ++i) {
    if (gens[i].parity() == 1 || gens[i].parity() == -1)
      throw std::invalid_argument("matrix_model_build: generators must be even");
    cyc.eta.add_term(1u << i, gens[i]);
  }
  cyc.omega = cyc.eta * cyc.eta;

  // Cycle axioms, verified on random samples before the descriptor escapes.
  Rng rng(check_seed, "matrix-model-build");
  for (int rep = 0; rep < 20; ++rep) {
    ModelElement a = rng.model_element(p, q, k);
    ModelElement b = rng.model_element(p, q, k);
    double sc = scale_of(a, b);

    ModelElement leib = cyc.nabla(a * b) - (cyc.nabla(a) * b + a.alpha() * cyc.nabla(b));
    if (!leib.is_zero(1e-12 * sc))
      throw std::runtime_error("matrix_model_build: nabla is not a graded derivation");

    ModelElement sq = cyc.nabla(cyc.nabla(a)) - (cyc.omega * a - a * cyc.omega);
    if (!sq.is_zero(1e-12 * sc))
      throw std::runtime_error("matrix_model_build: nabla^2 != ad(omega)");

    if (std::abs(cyc.tau(cyc.nabla(a))) > 1e-12 * sc)
      throw std::runtime_error("matrix_model_build: tau not closed");

    // parity shift and filtration shift of the connection
    ModelElement ne = cyc.nabla(a.even_part());
    if (!(ne.parity() == 1 || ne.is_zero(1e-14)))
      throw std::runtime_error("matrix_model_build: nabla not odd");
    if (cyc.nabla(a).theta_degree(1e-14) < std::min(a.theta_degree(1e-14) + 1, k + 1))
      throw std::runtime_error("matrix_model_build: nabla does not lower filtration");

    // graded trace on homogeneous parts
    for (int pa = 0; pa < 2; ++pa)
      for (int pb = 0; pb < 2; ++pb) {
        ModelElement ha = pa ? a.odd_part() : a.even_part();
        ModelElement hb = pb ? b.odd_part() : b.even_part();
        cx lhs = cyc.tau(ha * hb);
        cx rhs = cyc.tau(hb * ha) * (((pa & pb) & 1) ? -1.0 : 1.0);
        if (std::abs(lhs - rhs) > 1e-12 * sc)
          throw std::runtime_error("matrix_model_build: tau not a graded trace");
      }
  }
  return cyc;
}

XExt xext_from_carrier(const CycleDescriptor& cyc, const ModelElement& a) {
  ModelElement z(cyc.pdim, cyc.qdim, cyc.k);
  return XExt{a, z, z, z};
}

XExt xext_add(const XExt& x, const XExt& y) {
  return XExt{x.c00 + y.c00, x.c01 + y.c01, x.c10 + y.c10, x.c11 + y.c11};
}

XExt xext_scale(const XExt& x, cx s) {
  return XExt{x.c00 * s, x.c01 * s, x.c10 * s, x.c11 * s};
}

XExt xext_mul(const CycleDescriptor& cyc, const XExt& x, const XExt& y) {
  const ModelElement& w = cyc.omega;
  return XExt{x.c00 * y.c00 + x.c01 * (w * y.c10),
              x.c00 * y.c01 + x.c01 * (w * y.c11),
              x.c10 * y.c00 + x.c11 * (w * y.c10),
              x.c10 * y.c01 + x.c11 * (w * y.c11)};
}

XExt xext_d(const CycleDescriptor& cyc, const XExt& x) {
  const ModelElement& w = cyc.omega;
  XExt r;
  r.c00 = cyc.nabla(x.c00) + x.c01.alpha() * w - w * x.c10;
  r.c01 = x.c00.alpha() + cyc.nabla(x.c01) - w * x.c11;
  r.c10 = x.c00 - cyc.nabla(x.c10) - x.c11.alpha() * w;
  r.c11 = x.c01 - x.c10.alpha() - cyc.nabla(x.c11);
  return r;
}

cx xext_trace(const CycleDescriptor& cyc, const XExt& x) {
  return cyc.tau(x.c00) - cyc.tau(cyc.omega * x.c11.alpha());
}

double xext_norm_max(const XExt& x) {
  return std::max(std::max(x.c00.norm_max(), x.c01.norm_max()),
                  std::max(x.c10.norm_max(), x.c11.norm_max()));
}

XExt realize_chain(const CycleDescriptor& cyc, const Chain<SuperMatrix>& c,
                   const std::function<ModelElement(const SuperMatrix&)>* lift) {
  auto lf = [&](const SuperMatrix& m) { return lift ? (*lift)(m) : cyc.lift(m); };
  XExt total = xext_from_carrier(cyc, ModelElement(cyc.pdim, cyc.qdim, cyc.k));
  for (const auto& t : c.terms) {
    XExt x = xext_from_carrier(cyc, lf(t.factors[0]));
    for (size_t j = 1; j < t.factors.size(); ++j)
      x = xext_mul(cyc, x, xext_d(cyc, xext_from_carrier(cyc, lf(t.factors[j]))));
    total = xext_add(total, xext_scale(x, t.coeff));
  }
  return total;
}

cx cocycle_phi_tau(const CycleDescriptor& cyc, const std::vector<SuperMatrix>& a,
                   const std::function<ModelElement(const SuperMatrix&)>* lift) {
  if (a.empty()) throw std::invalid_argument("cocycle_phi_tau: empty argument list");
  const int n = static_cast<int>(a.size()) - 1;
  if (n > cyc.n_max) throw std::invalid_argument("cocycle_phi_tau: degree exceeds n_max");
  auto lf = [&](const SuperMatrix& m) { return lift ? (*lift)(m) : cyc.lift(m); };

  cx total = 0.0;
  for (uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
    std::vector<SuperMatrix> part;
    bool dead = false;
    int mu = 0;
    for (int j = 0; j <= n; ++j) {
      SuperMatrix h = (mask >> j) & 1 ? a[j].odd_part() : a[j].even_part();
      if (h.is_zero(0.0)) { dead = true; break; }
      mu += (n - j) * ((mask >> j) & 1);
      part.push_back(std::move(h));
    }
    if (dead) continue;
    XExt x = xext_from_carrier(cyc, lf(part[0]));
    for (int j = 1; j <= n; ++j)
      x = xext_mul(cyc, x, xext_d(cyc, xext_from_carrier(cyc, lf(part[j]))));
    total += ((mu & 1) ? -1.0 : 1.0) * xext_trace(cyc, x);
  }
  return total;
}

CrossedElement crossed_mul(const CrossedElement& x, const CrossedElement& y) {
  // v a = alpha(a) v, v^2 = 1
  return CrossedElement{x.a * y.a + x.b * y.b.alpha(),
                        x.a * y.b + x.b * y.a.alpha()};
}

CrossedElement crossed_add(const CrossedElement& x, const CrossedElement& y) {
  return CrossedElement{x.a + y.a, x.b + y.b};
}

CrossedElement crossed_scale(const CrossedElement& x, cx s) {
  return CrossedElement{x.a * s, x.b * s};
}

double crossed_norm_max(const CrossedElement& x) {
  return std::max(x.a.norm_max(), x.b.norm_max());
}

cx cocycle_psi(const CycleDescriptor& cyc,
               const std::vector<std::pair<SuperMatrix, int>>& b) {
  if (b.empty()) throw std::invalid_argument("cocycle_psi: empty argument list");
  const int n = static_cast<int>(b.size()) - 1;
  int psum = 0, isum = 0;
  std::vector<int> par(n + 1);
  for (int j = 0; j <= n; ++j) {
    par[j] = b[j].first.parity();
    if (par[j] < 0)
      throw std::invalid_argument("cocycle_psi: slots must be parity-homogeneous");
    psum += par[j];
    isum += b[j].second;
  }
  if (psum % 2 != 0 || isum % 2 != 1) return 0.0;
  int nu = 0;
  for (int j = 0; j < n; ++j) {
    if ((b[j].second & 1) == 0) continue;
    for (int l = j + 1; l <= n; ++l) nu += par[l];
  }
  std::vector<SuperMatrix> a;
  for (const auto& [m, i] : b) a.push_back(m);
  cx phi = cocycle_phi_tau(cyc, a);
  return 0.5 * ((nu & 1) ? -1.0 : 1.0) * phi;
}

cx k_pair(const CycleDescriptor& cyc, const CrossedElement& e, int m,
          double calibration) {
  CrossedElement resid = crossed_add(crossed_mul(e, e), crossed_scale(e, cx(-1.0)));
  if (crossed_norm_max(resid) > 1e-8 * std::max(1.0, crossed_norm_max(e)))
    throw std::invalid_argument("k_pair: input is not idempotent");
  const int slots = 2 * m + 1;
  if (2 * m > cyc.n_max) throw std::invalid_argument("k_pair: 2m exceeds n_max");

  cx total = 0.0;
  for (uint32_t vm = 0; vm < (1u << slots); ++vm) {
    // choose the a- or b v-part per slot, then split into parities
    for (uint32_t pm = 0; pm < (1u << slots); ++pm) {
      std::vector<std::pair<SuperMatrix, int>> arg;
      bool dead = false;
      for (int j = 0; j < slots; ++j) {
        const SuperMatrix& base = ((vm >> j) & 1) ? e.b : e.a;
        SuperMatrix h = ((pm >> j) & 1) ? base.odd_part() : base.even_part();
        if (h.is_zero(0.0)) { dead = true; break; }
        arg.emplace_back(std::move(h), (vm >> j) & 1);
      }
      if (dead) continue;
      total += 2.0 * cocycle_psi(cyc, arg);
    }
  }
  double mfact = 1.0;
  for (int j = 2; j <= m; ++j) mfact *= j;
  return calibration * total / mfact;
}

}  // namespace scc
