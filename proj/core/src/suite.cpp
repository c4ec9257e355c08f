#include "scc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "scc/chain.hpp"
#include "scc/comb.hpp"
#include "scc/cycle.hpp"
#include "scc/divided_diff.hpp"
#include "scc/heat.hpp"
#include "scc/index.hpp"
#include "scc/model_element.hpp"
#include "scc/rng.hpp"
#include "scc/sphere.hpp"

namespace scc {

namespace {

struct Case {
  std::string id;
  double tol;
  std::function<std::pair<cx, cx>(Rng&)> fn;  // (computed, reference)
};

const std::map<std::string, double> kDefaultTol = {
    {"signs", 1e-12},  {"xext", 1e-10}, {"cocycles", 1e-10},
    {"index", 1e-8},   {"duhamel", 1e-10}, {"comb", 1e-12},
    {"heat", 1e-8},    {"thm412", 1e-8},   {"main", 1e-8},
    {"sphere", 1e-10}};

Chain<ModelElement> random_chain(Rng& rng, int n, int p = 1, int q = 1,
                                 int k = 1, bool integer = true) {
  std::vector<ModelElement> f;
  for (int i = 0; i <= n; ++i) {
    ModelElement e;
    do e = rng.model_element(p, q, k, 2, integer);
    while (e.is_zero(0.0));
    f.push_back(e);
  }
  return make_chain(cx(1.0), f);
}

CycleDescriptor random_model(Rng& rng, int p, int q, int k) {
  std::vector<SuperMatrix> gens;
  for (int i = 0; i < k; ++i) gens.push_back(rng.hermitian(p, q).even_part());
  return matrix_model_build(p, q, k, gens);
}

XExt homog_xext(Rng& rng, const CycleDescriptor& cyc, int& parity_out) {
  int slot = rng.uniform_int(0, 3);
  int par = rng.uniform_int(0, 1);
  ModelElement a;
  do {
    a = rng.model_element(cyc.pdim, cyc.qdim, cyc.k);
    a = par ? a.odd_part() : a.even_part();
  } while (a.is_zero(0.0));
  XExt x = xext_from_carrier(cyc, ModelElement(cyc.pdim, cyc.qdim, cyc.k));
  (slot == 0 ? x.c00 : slot == 1 ? x.c01 : slot == 2 ? x.c10 : x.c11) = a;
  parity_out = (par + (slot == 1 || slot == 2 ? 1 : 0)) & 1;
  return x;
}

std::pair<cx, cx> residual_pair(double r) { return {cx(r), cx(0.0)}; }

// ---- signs --------------------------------------------------------------

void build_signs(std::vector<Case>& cases, double tol) {
  const int blocks = 25, reps = 20;
  for (int b = 0; b < blocks; ++b) {
    cases.push_back({"bsq/block" + std::to_string(b), tol, [](Rng& rng) {
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        Chain<ModelElement> c = random_chain(rng, rng.uniform_int(2, 4));
        for (auto v : {BoundaryVariant::graded, BoundaryVariant::ev})
          worst = std::max(worst,
                           chain_residual_norm(boundary(boundary(c, v), v)));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"tcyc/block" + std::to_string(b), tol, [](Rng& rng) {
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        int n = rng.uniform_int(1, 4);
        Chain<ModelElement> c = random_chain(rng, n);
        Chain<ModelElement> it = c;
        for (int j = 0; j <= n; ++j) it = cyclic_t(it);
        worst = std::max(
            worst, chain_residual_norm(chain_add(it, chain_scale(c, cx(-1.0)))));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"dsq/block" + std::to_string(b), tol, [](Rng& rng) {
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        Form<ModelElement> w = phi_map(random_chain(rng, rng.uniform_int(0, 3)));
        worst = std::max(worst, form_residual_norm(form_d(form_d(w))));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"leibniz/block" + std::to_string(b), tol, [](Rng& rng) {
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        Chain<ModelElement> cx_ = random_chain(rng, rng.uniform_int(0, 2));
        Chain<ModelElement> cy_ = random_chain(rng, rng.uniform_int(0, 2));
        const auto& tx = cx_.terms[rng.uniform_int(0, (int)cx_.terms.size() - 1)];
        const auto& ty = cy_.terms[rng.uniform_int(0, (int)cy_.terms.size() - 1)];
        Form<ModelElement> x = phi_map(Chain<ModelElement>{{tx}});
        Form<ModelElement> y = phi_map(Chain<ModelElement>{{ty}});
        int px = x.terms.front().parity();
        Form<ModelElement> lhs = form_d(form_mul(x, y));
        Form<ModelElement> rhs = form_add(
            form_mul(form_d(x), y),
            form_scale(form_mul(x, form_d(y)), cx(px & 1 ? -1.0 : 1.0)));
        worst = std::max(worst, form_difference_norm(lhs, rhs));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"assoc/block" + std::to_string(b), tol, [](Rng& rng) {
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        Form<ModelElement> x = phi_map(random_chain(rng, rng.uniform_int(0, 1)));
        Form<ModelElement> y = phi_map(random_chain(rng, rng.uniform_int(0, 2)));
        Form<ModelElement> z = phi_map(random_chain(rng, rng.uniform_int(0, 1)));
        worst = std::max(worst,
                         form_difference_norm(form_mul(form_mul(x, y), z),
                                              form_mul(x, form_mul(y, z))));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"phib/block" + std::to_string(b), tol, [](Rng& rng) {
      // Phi(b(c' (x) a_n)) = (-1)^{n-1} [Phi(c'), a_n]
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        int n = rng.uniform_int(1, 3);
        Chain<ModelElement> c = random_chain(rng, n);
        const auto& t = c.terms[rng.uniform_int(0, (int)c.terms.size() - 1)];
        Chain<ModelElement> single{{t}};
        Form<ModelElement> lhs =
            phi_map(boundary(single, BoundaryVariant::graded));
        ChainTerm<ModelElement> head = t;
        ModelElement an = head.factors.back();
        head.factors.pop_back();
        Form<ModelElement> phic = phi_map(Chain<ModelElement>{{head}});
        Form<ModelElement> aform;
        aform.terms.push_back({cx(1.0), true, an, {}});
        int pw = phic.terms.front().parity();
        int pa = an.parity();
        Form<ModelElement> comm = form_add(
            form_mul(phic, aform),
            form_scale(form_mul(aform, phic), cx((pw * pa) & 1 ? 1.0 : -1.0)));
        Form<ModelElement> rhs = form_scale(comm, cx((n - 1) & 1 ? -1.0 : 1.0));
        worst = std::max(worst, form_difference_norm(lhs, rhs));
      }
      return residual_pair(worst);
    }});
  }
}

// ---- xext ---------------------------------------------------------------

void build_xext(std::vector<Case>& cases, const SuiteConfig& cfg, double tol) {
  const int blocks = 10, reps = 50;
  int p = cfg.pdim, q = cfg.qdim, k = cfg.k;
  for (int b = 0; b < blocks; ++b) {
    cases.push_back({"dsq/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        int px;
        XExt x = homog_xext(rng, cyc, px);
        worst = std::max(worst, xext_norm_max(xext_d(cyc, xext_d(cyc, x))) /
                                    std::max(1.0, xext_norm_max(x)));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"trace_d/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        int px;
        XExt x = homog_xext(rng, cyc, px);
        worst = std::max(worst, std::abs(xext_trace(cyc, xext_d(cyc, x))) /
                                    std::max(1.0, xext_norm_max(x)));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"graded_trace/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        int px, py;
        XExt x = homog_xext(rng, cyc, px);
        XExt y = homog_xext(rng, cyc, py);
        cx lhs = xext_trace(cyc, xext_mul(cyc, x, y));
        cx rhs = xext_trace(cyc, xext_mul(cyc, y, x)) *
                 (((px & py) & 1) ? -1.0 : 1.0);
        worst = std::max(worst,
                         std::abs(lhs - rhs) /
                             std::max(1.0, xext_norm_max(x) * xext_norm_max(y)));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"table/block" + std::to_string(b), tol, [=](Rng& rng) {
      // (aX)(Xb) = a omega b in the corner component
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < reps; ++r) {
        ModelElement a = rng.model_element(p, q, k);
        ModelElement bb = rng.model_element(p, q, k);
        ModelElement z(p, q, k);
        XExt prod = xext_mul(cyc, XExt{z, a, z, z}, XExt{z, z, bb, z});
        double m = (prod.c00 - a * (cyc.omega * bb)).norm_max();
        m = std::max({m, prod.c01.norm_max(), prod.c10.norm_max(),
                      prod.c11.norm_max()});
        worst = std::max(worst, m);
      }
      return residual_pair(worst);
    }});
  }
}

// ---- cocycles -----------------------------------------------------------

void build_cocycles(std::vector<Case>& cases, const SuiteConfig& cfg,
                    double tol) {
  const int blocks = 10;
  int p = cfg.pdim, q = cfg.qdim, k = cfg.k;
  for (int b = 0; b < blocks; ++b) {
    cases.push_back({"hochschild/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < 8; ++r) {
        std::vector<SuperMatrix> f;
        for (int j = 0; j <= cyc.n_max + 1; ++j)
          f.push_back(rng.gauss_matrix(p, q));
        cx acc = 0.0;
        Chain<SuperMatrix> c = make_chain(cx(1.0), f);
        for (const auto& t : boundary(c, BoundaryVariant::graded).terms)
          acc += t.coeff * cocycle_phi_tau(cyc, t.factors);
        worst = std::max(worst, std::abs(acc));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"cyclic/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      double worst = 0.0;
      for (int r = 0; r < 8; ++r) {
        std::vector<SuperMatrix> f;
        for (int j = 0; j <= cyc.n_max; ++j) f.push_back(rng.gauss_matrix(p, q));
        Chain<SuperMatrix> c = make_chain(cx(1.0), f);
        cx lhs = 0.0, rhs = 0.0;
        for (const auto& t : cyclic_t(c).terms)
          lhs += t.coeff * cocycle_phi_tau(cyc, t.factors);
        for (const auto& t : c.terms)
          rhs += t.coeff * cocycle_phi_tau(cyc, t.factors);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      return residual_pair(worst);
    }});
    cases.push_back({"lifting/block" + std::to_string(b), tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      SuperMatrix g = rng.odd_hermitian(p, q);
      std::function<ModelElement(const SuperMatrix&)> lift2 =
          [&](const SuperMatrix& a) {
            ModelElement r = cyc.lift(a);
            r.add_term(1u, g * a - a.alpha() * g);
            return r;
          };
      double worst = 0.0;
      for (int r = 0; r < 8; ++r) {
        std::vector<SuperMatrix> f;
        for (int j = 0; j <= cyc.n_max; ++j) f.push_back(rng.gauss_matrix(p, q));
        cx v0 = cocycle_phi_tau(cyc, f);
        cx v1 = cocycle_phi_tau(cyc, f, &lift2);
        worst = std::max(worst, std::abs(v0 - v1) / std::max(1.0, std::abs(v0)));
      }
      return residual_pair(worst);
    }});
  }
  cases.push_back({"unit", tol, [=](Rng& rng) {
    CycleDescriptor cyc = random_model(rng, p, q, 2);
    SuperMatrix one = SuperMatrix::identity(p, q);
    return std::pair<cx, cx>{cocycle_phi_tau(cyc, {one, one, one}), cx(0.0)};
  }});
}

// ---- index --------------------------------------------------------------

void build_index(std::vector<Case>& cases, double tol) {
  for (int dim : {4, 10, 20, 40}) {
    cases.push_back({"idempotent/dim" + std::to_string(dim), tol * 0.01,
                     [=](Rng& rng) {
      FredholmRealization r =
          FredholmRealization::from_odd(rng.odd_hermitian(dim / 2, dim / 2));
      SuperMatrix p = graph_projection(r);
      double m = std::max((p * p - p).norm_max(), (p - p.adjoint()).norm_max());
      return residual_pair(m);
    }});
  }
  for (int rep = 0; rep < 6; ++rep) {
    cases.push_back({"mckean_singer/rep" + std::to_string(rep), tol,
                     [](Rng& rng) {
      int p = rng.uniform_int(1, 4), q = rng.uniform_int(1, 4);
      FredholmRealization r =
          FredholmRealization::from_odd(rng.odd_hermitian(p, q));
      cx idx(double(analytic_index(r.block())));
      double worst = 0.0;
      cx last = idx;
      for (double t : {0.1, 1.0, 10.0}) {
        last = mckean_singer(r, t);
        worst = std::max(worst, std::abs(last - idx));
      }
      return std::pair<cx, cx>{idx + cx(worst), idx};
    }});
    cases.push_back({"kpair_m0/rep" + std::to_string(rep), tol * 0.1,
                     [](Rng& rng) {
      int p = rng.uniform_int(1, 3), q = rng.uniform_int(1, 3);
      FredholmRealization r =
          FredholmRealization::from_odd(rng.odd_hermitian(p, q));
      CycleDescriptor flat = matrix_model_build(p, q, 0, {});
      cx pairing = k_pair(flat, crossed_e0(p, q), 0) -
                   k_pair(flat, crossed_graph_projection(r), 0);
      return std::pair<cx, cx>{pairing, cx(double(analytic_index(r.block())))};
    }});
  }
}

// ---- duhamel ------------------------------------------------------------

void build_duhamel(std::vector<Case>& cases, double tol) {
  for (int n = 0; n <= 3; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      cases.push_back({"quadrature/n" + std::to_string(n) + "/rep" +
                           std::to_string(rep),
                       tol, [=](Rng& rng) {
        DuhamelRequest req;
        for (int j = 0; j <= n; ++j) req.nodes.push_back(rng.uniform(0.0, 4.0));
        req.t = rng.uniform(0.2, 2.0);
        return std::pair<cx, cx>{cx(duhamel_coeff(req)),
                                 cx(duhamel_quadrature(req))};
      }});
    }
  for (int n = 1; n <= 3; ++n) {
    cases.push_back({"cluster/n" + std::to_string(n), tol, [=](Rng& rng) {
      DuhamelRequest req;
      double base = rng.uniform(0.5, 2.0);
      for (int j = 0; j <= n; ++j) req.nodes.push_back(base + j * 1e-8);
      req.t = 1.0;
      return std::pair<cx, cx>{cx(duhamel_coeff(req)),
                               cx(duhamel_quadrature(req))};
    }});
  }
}

// ---- comb ---------------------------------------------------------------

void build_comb(std::vector<Case>& cases, double tol) {
  for (int n = 0; n <= 10; ++n) {
    cases.push_back({"exponent_sum/n" + std::to_string(n), tol, [=](Rng&) {
      int bad = 0;
      for (const auto& c : enumerate_classes(n)) {
        int isum = 0;
        for (int v : c.i) isum += v;
        int m = static_cast<int>(c.L.size());
        if (m != isum || m != 2 * static_cast<int>(c.K.size()) - n - 2) ++bad;
      }
      return residual_pair(double(bad));
    }});
  }
  for (int n = 0; n <= 8; ++n) {
    cases.push_back({"claim1/n" + std::to_string(n), tol, [=](Rng&) {
      int bad = 0;
      std::map<std::vector<int>, std::set<std::vector<int>>> attained;
      for (const auto& c : enumerate_classes(n)) {
        auto phi = phi_set(c);
        if ((n - static_cast<int>(phi.size())) % 2 != 0) ++bad;
        if (attained[c.K].count(phi)) ++bad;
        attained[c.K].insert(phi);
      }
      for (const auto& K : enumerate_S(n))
        for (uint32_t m = 0; m < (1u << K.size()); ++m) {
          std::vector<int> L;
          for (size_t j = 0; j < K.size(); ++j)
            if ((m >> j) & 1) L.push_back(K[j]);
          if ((n - static_cast<int>(L.size())) % 2 != 0) continue;
          if (claim1_solvable(K, L, n) != (attained[K].count(L) > 0)) ++bad;
        }
      return residual_pair(double(bad));
    }});
  }
  cases.push_back({"c2_patterns", tol, [](Rng&) {
    auto classes = enumerate_classes(2);
    std::multiset<std::vector<int>> pats;
    for (const auto& c : classes) pats.insert(c.i);
    std::multiset<std::vector<int>> expect{
        {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 0}};
    return std::pair<cx, cx>{cx(double(classes.size() + (pats == expect ? 0 : 1))),
                             cx(5.0)};
  }});
}

// ---- heat ---------------------------------------------------------------

void build_heat(std::vector<Case>& cases, const SuiteConfig& cfg, double tol) {
  int p = cfg.pdim, q = cfg.qdim, k = cfg.k;
  int n_top = std::min(4, cfg.n_max);
  for (double t : cfg.t_grid) {
    std::string ts = "/t" + std::to_string(t);
    cases.push_back({"omega0" + ts, tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      SuperMatrix h = rng.odd_hermitian(p, q);
      HeatFrame f = heat_frame(cyc, h);
      SmoothFunction fe([t](double x) { return std::exp(-t * x * x); },
                        Parity::even, DecayClass::rapid_decay);
      ModelElement ref =
          ModelElement::from_matrix(functional_calculus(fe, h), k, 0);
      return residual_pair((omega_recurrence(f, 0, t) - ref).norm_max());
    }});
    cases.push_back({"triple" + ts, tol, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      HeatFrame f = heat_frame(cyc, rng.odd_hermitian(p, q));
      double worst = 0.0;
      for (int n = 0; n <= n_top; ++n) {
        ModelElement wl = omega_recurrence(f, n, t);
        worst = std::max(worst, (omega_comb(f, n, t) - wl).norm_max());
        worst = std::max(worst,
                         (omega_recurrence(f, n, t, true) - wl).norm_max());
      }
      return residual_pair(worst);
    }});
    for (double s : cfg.s_grid) {
      cases.push_back({"oracle" + ts + "/s" + std::to_string(s), tol,
                       [=](Rng& rng) {
        CycleDescriptor cyc = random_model(rng, p, q, k);
        HeatFrame f = heat_frame(cyc, rng.odd_hermitian(p, q));
        ModelElement sum(p, q, k);
        double sp = 1.0;
        for (int n = 0; n <= k; ++n) {
          sum += omega_recurrence(f, n, t) * cx(sp);
          sp *= s;
        }
        return residual_pair((heat_oracle(f, s, t) - sum).norm_max());
      }});
    }
    cases.push_back({"heat_eq" + ts, tol * 100.0, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      SuperMatrix h = rng.odd_hermitian(p, q);
      HeatFrame f = heat_frame(cyc, h);
      double s = 0.7, hh = 1e-4;
      ModelElement fd = (heat_oracle(f, s, t + hh) - heat_oracle(f, s, t - hh)) *
                        cx(1.0 / (2 * hh));
      ModelElement gen = cyc.lift(h * h) + cyc.nabla(cyc.lift(h)) * cx(s) +
                         cyc.omega * cx(s * s);
      return residual_pair((fd + gen * heat_oracle(f, s, t)).norm_max());
    }});
    cases.push_back({"transport" + ts, tol * 0.1, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, p, q, k);
      SuperMatrix h = rng.odd_hermitian(p, q);
      HeatFrame f = heat_frame(cyc, h);
      ModelElement lh = cyc.lift(h);
      double worst = 0.0;
      for (int n = 1; n <= k; ++n) {
        ModelElement wn = omega_recurrence(f, n, t);
        ModelElement res =
            lh * wn - wn * lh + cyc.nabla(omega_recurrence(f, n - 1, t));
        worst = std::max(worst, res.norm_max());
      }
      return residual_pair(worst);
    }});
  }
}

// ---- thm412 -------------------------------------------------------------

void build_thm412(std::vector<Case>& cases, const SuiteConfig& cfg,
                  double tol) {
  // chain tensors grow as dim^{2(n+2)}; cap the model size for these cases
  int p = std::min(cfg.pdim, 2), q = std::min(cfg.qdim, 2);
  int n_top = std::min(2, cfg.n_max);
  for (double t : cfg.t_grid)
    for (int n = 0; n <= n_top; ++n) {
      std::string id =
          "/n" + std::to_string(n) + "/t" + std::to_string(t);
      cases.push_back({"residuals" + id, tol, [=](Rng& rng) {
        CycleDescriptor cyc = random_model(rng, p, q, 2);
        HeatFrame f = heat_frame(cyc, rng.odd_hermitian(p, q));
        Thm412Report r = verify_thm412(f, n, t);
        return residual_pair(std::max(r.boundary_residual, r.cyclic_residual));
      }});
    }
  for (int n : {2, 3}) {
    cases.push_back({"claim2/n" + std::to_string(n), tol * 0.1, [=](Rng& rng) {
      CycleDescriptor cyc = random_model(rng, 1, 1, 2);
      HeatFrame f = heat_frame(cyc, rng.odd_hermitian(1, 1));
      std::vector<int> L = (n == 2) ? std::vector<int>{} : std::vector<int>{1};
      std::vector<std::vector<int>> ms;
      for (int m = -1; m <= n; ++m)
        if (std::find(L.begin(), L.end(), m) == L.end()) ms.push_back({m});
      DenseTensor first = chain_tensor(claim2_zeta(f, n, L, ms[0], 0.8));
      double worst = 0.0;
      for (size_t j = 1; j < ms.size(); ++j) {
        DenseTensor dt = chain_tensor(claim2_zeta(f, n, L, ms[j], 0.8));
        dt.axpy(cx(-1.0), first);
        worst = std::max(worst, dt.norm_max());
      }
      return residual_pair(worst);
    }});
  }
}

// ---- main ---------------------------------------------------------------

void build_main(std::vector<Case>& cases, const SuiteConfig& cfg, double tol) {
  std::vector<double> st = cfg.st_grid;
  for (int rep = 0; rep < 5; ++rep) {
    std::string id = "/rep" + std::to_string(rep);
    cases.push_back({"lower" + id, tol, [=](Rng& rng) {
      int p = rng.uniform_int(1, 3), q = rng.uniform_int(1, 3);
      CycleDescriptor cyc = random_model(rng, p, q, 2);
      MainReport mr = verify_main(cyc, rng.odd_hermitian(p, q), st);
      return residual_pair(mr.max_lower);
    }});
    cases.push_back({"top" + id, tol * 100.0, [=](Rng& rng) {
      int p = rng.uniform_int(1, 3), q = rng.uniform_int(1, 3);
      CycleDescriptor cyc = random_model(rng, p, q, 2);
      MainReport mr = verify_main(cyc, rng.odd_hermitian(p, q), st);
      return std::pair<cx, cx>{mr.top, mr.reference};
    }});
  }
}

// ---- sphere -------------------------------------------------------------

void build_sphere(std::vector<Case>& cases, double tol) {
  constexpr double kPi = 3.14159265358979323846;
  cases.push_back({"area", tol, [](Rng&) {
    SphereFormAmbient w;
    for (int i = 0; i < 3; ++i) w.d2[i] = SpherePoly::variable(i);
    return std::pair<cx, cx>{integrate2(w), cx(4.0 * kPi)};
  }});
  cases.push_back({"chern_bott", tol * 10.0, [](Rng&) {
    return std::pair<cx, cx>{chern_number(bott(), 1) / cx(0.0, 2.0 * kPi),
                             cx(1.0)};
  }});
  cases.push_back({"chern_constant", tol, [](Rng&) {
    SphereMat c1(2);
    c1.at(0, 0) = SpherePoly::constant(1.0);
    return std::pair<cx, cx>{chern_number(c1, 1), cx(0.0)};
  }});
  for (int rep = 0; rep < 5; ++rep) {
    cases.push_back({"stokes/rep" + std::to_string(rep), tol, [](Rng& rng) {
      SphereFormAmbient a;
      for (int i = 0; i < 3; ++i) {
        std::map<std::array<int, 3>, cx> raw;
        for (int aa = 0; aa <= 2; ++aa)
          for (int bb = 0; aa + bb <= 2; ++bb)
            for (int cc = 0; aa + bb + cc <= 2; ++cc)
              raw[{aa, bb, cc}] = cx(rng.gauss(), rng.gauss());
        a.d1[i] = reduce(raw);
      }
      return std::pair<cx, cx>{integrate2(ext_d(a)), cx(0.0)};
    }});
  }
  cases.push_back({"example", tol, [](Rng&) {
    SphereMat c1(2);
    c1.at(0, 0) = SpherePoly::constant(1.0);
    std::vector<std::array<double, 2>> pairs{
        {0.0, 1.3}, {0.5, 0.5}, {1.0, 1.0}, {0.7, 1.9}, {2.0, 0.3}};
    SphereExampleReport rep = verify_sphere_example(bott(), c1, pairs);
    return residual_pair(rep.max_residual);
  }});
}

std::vector<Case> build_cases(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Case> cases;
  double tol = cfg.tol_for(name);
  if (name == "signs") build_signs(cases, tol);
  else if (name == "xext") build_xext(cases, cfg, tol);
  else if (name == "cocycles") build_cocycles(cases, cfg, tol);
  else if (name == "index") build_index(cases, tol);
  else if (name == "duhamel") build_duhamel(cases, tol);
  else if (name == "comb") build_comb(cases, tol);
  else if (name == "heat") build_heat(cases, cfg, tol);
  else if (name == "thm412") build_thm412(cases, cfg, tol);
  else if (name == "main") build_main(cases, cfg, tol);
  else if (name == "sphere") build_sphere(cases, tol);
  else throw std::invalid_argument("unknown suite: " + name);
  return cases;
}

std::vector<ReportRecord> execute(const std::string& suite,
                                  const std::vector<Case>& cases,
                                  const SuiteConfig& cfg, int jobs) {
  std::vector<ReportRecord> out(cases.size());
  auto worker = [&](int offset, int stride) {
    for (size_t i = offset; i < cases.size(); i += stride) {
      const Case& c = cases[i];
      Rng rng(cfg.seed, suite + "/" + c.id);
      auto t0 = std::chrono::steady_clock::now();
      auto [computed, reference] = c.fn(rng);
      auto t1 = std::chrono::steady_clock::now();
      ReportRecord& r = out[i];
      r.suite = suite;
      r.case_id = c.id;
      r.computed = computed;
      r.reference = reference;
      r.abs_residual = std::abs(computed - reference);
      r.rel_residual = r.abs_residual / std::max(1.0, std::abs(reference));
      r.tolerance = c.tol;
      r.pass = r.abs_residual <= c.tol;
      r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
    for (auto& th : pool) th.join();
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<std::string> kSuiteNames = {
    "signs", "xext", "cocycles", "index", "duhamel",
    "comb",  "heat", "thm412",   "main",  "sphere"};

double SuiteConfig::tol_for(const std::string& suite) const {
  auto it = tol.find(suite);
  if (it != tol.end()) return it->second;
  auto dit = kDefaultTol.find(suite);
  if (dit == kDefaultTol.end())
    throw std::invalid_argument("unknown suite: " + suite);
  return dit->second;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.n_max < 0 || cfg.n_max > 6)
    throw std::invalid_argument("config: n_max must lie in [0, 6]");
  if (cfg.pdim < 1 || cfg.qdim < 1)
    throw std::invalid_argument("config: dims must be positive");
  if (cfg.k < 0 || cfg.k % 2 != 0)
    throw std::invalid_argument("config: k must be even and >= 0");
  for (const auto& [key, v] : cfg.tol) {
    if (v <= 0.0)
      throw std::invalid_argument("config: tolerance for " + key +
                                  " must be positive");
    if (!kDefaultTol.count(key))
      throw std::invalid_argument("config: unknown suite in tol." + key);
  }
  if (cfg.t_grid.empty() || cfg.s_grid.empty() || cfg.st_grid.empty())
    throw std::invalid_argument("config: sample grids must be nonempty");
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  auto parse_grid = [&](const std::string& v) {
    std::vector<double> g;
    std::istringstream gs(v);
    std::string item;
    while (std::getline(gs, item, ',')) g.push_back(std::stod(trim(item)));
    return g;
  };
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got: " + s);
    std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "n_max") cfg.n_max = std::stoi(val);
    else if (key == "p") cfg.pdim = std::stoi(val);
    else if (key == "q") cfg.qdim = std::stoi(val);
    else if (key == "k") cfg.k = std::stoi(val);
    else if (key == "t_grid") cfg.t_grid = parse_grid(val);
    else if (key == "s_grid") cfg.s_grid = parse_grid(val);
    else if (key == "st_grid") cfg.st_grid = parse_grid(val);
    else if (key.rfind("tol.", 0) == 0) cfg.tol[key.substr(4)] = std::stod(val);
    else throw std::invalid_argument("config: unknown key: " + key);
  }
  validate_config(cfg);
  return cfg;
}

std::vector<ReportRecord> run_suite(const std::string& name,
                                    const SuiteConfig& cfg, int jobs) {
  validate_config(cfg);
  if (name == "all") {
    std::vector<ReportRecord> out;
    for (const std::string& s : kSuiteNames) {
      std::vector<ReportRecord> part = run_suite(s, cfg, jobs);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  return execute(name, build_cases(name, cfg), cfg, jobs);
}

std::string report_json(const std::vector<ReportRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("report: no records");
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRecord& r : records) {
    nlohmann::ordered_json o;
    o["suite"] = r.suite;
    o["case"] = r.case_id;
    o["computed"] = {r.computed.real(), r.computed.imag()};
    o["reference"] = {r.reference.real(), r.reference.imag()};
    o["abs_residual"] = r.abs_residual;
    o["rel_residual"] = r.rel_residual;
    o["tolerance"] = r.tolerance;
    o["pass"] = r.pass;
    o["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<ReportRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("report: no records");
  std::string out =
      "suite,case,computed_re,computed_im,reference_re,reference_im,"
      "abs_residual,rel_residual,tolerance,pass,wall_ms\n";
  for (const ReportRecord& r : records) {
    out += r.suite + "," + r.case_id + "," + fmt_double(r.computed.real()) +
           "," + fmt_double(r.computed.imag()) + "," +
           fmt_double(r.reference.real()) + "," +
           fmt_double(r.reference.imag()) + "," + fmt_double(r.abs_residual) +
           "," + fmt_double(r.rel_residual) + "," + fmt_double(r.tolerance) +
           "," + (r.pass ? "1" : "0") + "," + fmt_double(r.wall_ms) + "\n";
  }
  return out;
}

std::vector<ReportRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ReportRecord> out;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string item;
    while (std::getline(ls, item, ',')) f.push_back(item);
    if (f.size() != 11)
      throw std::invalid_argument("csv: malformed line: " + line);
    ReportRecord r;
    r.suite = f[0];
    r.case_id = f[1];
    r.computed = cx(std::stod(f[2]), std::stod(f[3]));
    r.reference = cx(std::stod(f[4]), std::stod(f[5]));
    r.abs_residual = std::stod(f[6]);
    r.rel_residual = std::stod(f[7]);
    r.tolerance = std::stod(f[8]);
    r.pass = f[9] == "1";
    r.wall_ms = std::stod(f[10]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace scc
