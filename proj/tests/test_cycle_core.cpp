#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scc/cycle.hpp"
#include "scc/rng.hpp"

using namespace scc;

namespace {

CycleDescriptor test_cycle(Rng& rng, int p = 1, int q = 1, int k = 2) {
  std::vector<SuperMatrix> gens;
  for (int i = 0; i < k; ++i) gens.push_back(rng.hermitian(p, q).even_part());
  return matrix_model_build(p, q, k, gens);
}

// homogeneous X-extension element concentrated in one component
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

}  // namespace

TEST_CASE("build-time cycle invariants and rejections") {
  Rng rng(51, "build");
  CycleDescriptor cyc = test_cycle(rng);
  CHECK(cyc.n_max == 2);
  CHECK(cyc.eta.parity() == 1);
  CHECK(cyc.omega.theta_degree() >= 2);

  std::vector<SuperMatrix> one{rng.hermitian(1, 1).even_part()};
  CHECK_THROWS_AS(matrix_model_build(1, 1, 1, one), std::invalid_argument);
  std::vector<SuperMatrix> odd2{rng.odd_hermitian(1, 1), rng.odd_hermitian(1, 1)};
  CHECK_THROWS_AS(matrix_model_build(1, 1, 2, odd2), std::invalid_argument);
}

TEST_CASE("zero-curvature model") {
  SuperMatrix z(1, 1);
  CycleDescriptor cyc = matrix_model_build(1, 1, 2, {z, z});
  CHECK(cyc.omega.is_zero(0.0));
  Rng rng(52, "flat");
  ModelElement a = rng.model_element(1, 1, 2);
  CHECK(cyc.nabla(a).is_zero(0.0));
}

TEST_CASE("xext product table") {
  Rng rng(53, "table");
  CycleDescriptor cyc = test_cycle(rng);
  ModelElement a = rng.model_element(1, 1, 2);
  ModelElement b = rng.model_element(1, 1, 2);
  ModelElement z(1, 1, 2);

  XExt ax{z, a, z, z};   // aX
  XExt xb{z, z, b, z};   // Xb
  XExt prod = xext_mul(cyc, ax, xb);
  CHECK((prod.c00 - a * (cyc.omega * b)).is_zero(1e-13));
  CHECK(prod.c01.is_zero(0.0));
  CHECK(prod.c10.is_zero(0.0));
  CHECK(prod.c11.is_zero(0.0));

  XExt bx{z, b, z, z};
  XExt zero = xext_mul(cyc, ax, bx);
  CHECK(xext_norm_max(zero) == 0.0);
  // (aX) b = 0 likewise
  XExt bc = xext_from_carrier(cyc, b);
  CHECK(xext_norm_max(xext_mul(cyc, ax, bc)) == 0.0);
}

TEST_CASE("xext product associativity") {
  Rng rng(54, "xassoc");
  CycleDescriptor cyc = test_cycle(rng);
  for (int rep = 0; rep < 500; ++rep) {
    int px;
    XExt x = homog_xext(rng, cyc, px);
    XExt y = homog_xext(rng, cyc, px);
    XExt z = homog_xext(rng, cyc, px);
    XExt lhs = xext_mul(cyc, xext_mul(cyc, x, y), z);
    XExt rhs = xext_mul(cyc, x, xext_mul(cyc, y, z));
    CHECK(xext_norm_max(xext_add(lhs, xext_scale(rhs, cx(-1.0)))) <= 1e-12);
  }
}

TEST_CASE("xext differential: displayed values") {
  Rng rng(55, "xd");
  CycleDescriptor cyc = test_cycle(rng);
  ModelElement one = cyc.unit();

  XExt du = xext_d(cyc, xext_from_carrier(cyc, one));
  CHECK(du.c00.is_zero(1e-14));
  CHECK((du.c01 - one).is_zero(0.0));
  CHECK((du.c10 - one).is_zero(0.0));
  CHECK(du.c11.is_zero(0.0));

  ModelElement a = rng.model_element(1, 1, 2).even_part();
  XExt da = xext_d(cyc, xext_from_carrier(cyc, a));
  CHECK((da.c00 - cyc.nabla(a)).is_zero(1e-13));
  CHECK((da.c01 - a).is_zero(0.0));
  CHECK((da.c10 - a).is_zero(0.0));
  CHECK(da.c11.is_zero(0.0));
}

TEST_CASE("xext d^2 = 0 and Leibniz") {
  Rng rng(56, "xdsq");
  CycleDescriptor cyc = test_cycle(rng);
  for (int rep = 0; rep < 500; ++rep) {
    int px, py;
    XExt x = homog_xext(rng, cyc, px);
    XExt dd = xext_d(cyc, xext_d(cyc, x));
    CHECK(xext_norm_max(dd) <= 1e-11 * std::max(1.0, xext_norm_max(x)));

    XExt y = homog_xext(rng, cyc, py);
    XExt lhs = xext_d(cyc, xext_mul(cyc, x, y));
    XExt rhs = xext_add(xext_mul(cyc, xext_d(cyc, x), y),
                        xext_scale(xext_mul(cyc, x, xext_d(cyc, y)),
                                   cx(px & 1 ? -1.0 : 1.0)));
    CHECK(xext_norm_max(xext_add(lhs, xext_scale(rhs, cx(-1.0)))) <= 1e-11);
  }
}

TEST_CASE("xext trace: displayed values, closedness, graded trace") {
  Rng rng(57, "xtr");
  CycleDescriptor cyc = test_cycle(rng);
  ModelElement z(1, 1, 2);

  ModelElement a = rng.model_element(1, 1, 2);
  CHECK(xext_trace(cyc, XExt{z, a, z, z}) == cx(0.0));
  ModelElement ae = a.even_part();
  CHECK(std::abs(xext_trace(cyc, XExt{z, z, z, ae}) + cyc.tau(cyc.omega * ae)) < 1e-14);

  for (int rep = 0; rep < 500; ++rep) {
    int px, py;
    XExt x = homog_xext(rng, cyc, px);
    CHECK(std::abs(xext_trace(cyc, xext_d(cyc, x))) <= 1e-10 * std::max(1.0, xext_norm_max(x)));

    XExt y = homog_xext(rng, cyc, py);
    cx lhs = xext_trace(cyc, xext_mul(cyc, x, y));
    cx rhs = xext_trace(cyc, xext_mul(cyc, y, x)) * (((px & py) & 1) ? -1.0 : 1.0);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, xext_norm_max(x) * xext_norm_max(y)));
  }
}

TEST_CASE("realize_chain basics") {
  Rng rng(58, "realize");
  CycleDescriptor cyc = test_cycle(rng);
  SuperMatrix a = rng.gauss_matrix(1, 1);
  Chain<SuperMatrix> c0 = make_chain(cx(1.0), std::vector<SuperMatrix>{a});
  XExt r = realize_chain(cyc, c0);
  CHECK((r.c00 - cyc.lift(a)).is_zero(1e-14));
  CHECK(r.c01.is_zero(0.0));
  CHECK(r.c10.is_zero(0.0));
  CHECK(r.c11.is_zero(0.0));

  SuperMatrix one = SuperMatrix::identity(1, 1);
  Chain<SuperMatrix> cu = make_chain(cx(1.0), std::vector<SuperMatrix>{one, one, one});
  CHECK(std::abs(xext_trace(cyc, realize_chain(cyc, cu))) < 1e-13);
}

TEST_CASE("phi^tau is a cyclic Hochschild cocycle") {
  Rng rng(59, "phicoc");
  CycleDescriptor cyc = test_cycle(rng, 2, 1, 2);
  for (int rep = 0; rep < 40; ++rep) {
    // phi vanishes on boundaries of degree-3 chains
    std::vector<SuperMatrix> f;
    for (int j = 0; j < 4; ++j) f.push_back(rng.gauss_matrix(2, 1));
    Chain<SuperMatrix> c = make_chain(cx(1.0), f);
    cx acc = 0.0;
    for (const auto& t : boundary(c, BoundaryVariant::graded).terms)
      acc += t.coeff * cocycle_phi_tau(cyc, t.factors);
    CHECK(std::abs(acc) <= 1e-10);

    // cyclicity: phi(t(c)) = phi(c) on degree-2 chains
    Chain<SuperMatrix> c2 =
        make_chain(cx(1.0), std::vector<SuperMatrix>{f[0], f[1], f[2]});
    cx lhs = 0.0, rhs = 0.0;
    for (const auto& t : cyclic_t(c2).terms) lhs += t.coeff * cocycle_phi_tau(cyc, t.factors);
    for (const auto& t : c2.terms) rhs += t.coeff * cocycle_phi_tau(cyc, t.factors);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("phi^tau special values") {
  Rng rng(60, "phival");
  // k = 0: phi at n = 0 is the supertrace itself
  CycleDescriptor flat = matrix_model_build(2, 1, 0, {});
  SuperMatrix a = rng.gauss_matrix(2, 1);
  CHECK(std::abs(cocycle_phi_tau(flat, {a}) - a.supertrace()) < 1e-14);

  CycleDescriptor cyc = test_cycle(rng, 2, 1, 2);
  SuperMatrix one = SuperMatrix::identity(2, 1);
  CHECK(std::abs(cocycle_phi_tau(cyc, {one, one, one})) < 1e-13);
  CHECK_THROWS_AS(cocycle_phi_tau(cyc, {one, one, one, one}), std::invalid_argument);
}

TEST_CASE("phi^tau is independent of the lifting") {
  Rng rng(61, "philift");
  CycleDescriptor cyc = test_cycle(rng, 2, 1, 2);
  SuperMatrix g = rng.odd_hermitian(2, 1);
  // rho'(a) = rho(a) + theta_0 (g a - alpha(a) g): parity-preserving, F_{-1}-valued
  std::function<ModelElement(const SuperMatrix&)> lift2 =
      [&](const SuperMatrix& a) {
        ModelElement r = cyc.lift(a);
        r.add_term(1u, g * a - a.alpha() * g);
        return r;
      };
  // independence holds at top degree n = n_max, where the perturbation
  // terms sink below filtration -n_max-1 and the trace kills them
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<SuperMatrix> f;
    int n = cyc.n_max;
    for (int j = 0; j <= n; ++j) f.push_back(rng.gauss_matrix(2, 1));
    cx v0 = cocycle_phi_tau(cyc, f);
    cx v1 = cocycle_phi_tau(cyc, f, &lift2);
    CHECK(std::abs(v0 - v1) <= 1e-10 * std::max(1.0, std::abs(v0)));
  }
}

TEST_CASE("psi^tau zero branches and base value") {
  Rng rng(62, "psi");
  CycleDescriptor flat = matrix_model_build(2, 1, 0, {});
  SuperMatrix a = rng.gauss_matrix(2, 1).even_part();
  // v-power even -> 0
  CHECK(cocycle_psi(flat, {{a, 0}}) == cx(0.0));
  // odd total matrix parity -> 0
  SuperMatrix o = rng.gauss_matrix(2, 1).odd_part();
  CHECK(cocycle_psi(flat, {{o, 1}}) == cx(0.0));
  // n=0, b = a v, a even: psi = tau(a)/2
  CHECK(std::abs(cocycle_psi(flat, {{a, 1}}) - 0.5 * a.supertrace()) < 1e-14);
  CHECK_THROWS_AS(cocycle_psi(flat, {{rng.gauss_matrix(2, 1), 1}}), std::invalid_argument);
}

TEST_CASE("k_pair base cases and invariances") {
  Rng rng(63, "kpair");
  CycleDescriptor flat = matrix_model_build(2, 1, 0, {});
  SuperMatrix one = SuperMatrix::identity(2, 1);
  CrossedElement e0{one * cx(0.5), one * cx(0.5)};  // (1+v)/2
  CHECK(std::abs(k_pair(flat, e0, 0) - cx(0.5 * (2 - 1))) < 1e-12);

  // non-idempotent rejected
  CrossedElement bad{one, one};
  CHECK_THROWS_AS(k_pair(flat, bad, 0), std::invalid_argument);

  // conjugation invariance by an even invertible u (u e u^{-1}, u = exp-free pick)
  SuperMatrix u = one + (rng.gauss_matrix(2, 1).even_part() * cx(0.3));
  Mat uinv = solve(u.mat(), Mat::identity(3));
  CrossedElement ue = crossed_mul(CrossedElement{u, SuperMatrix(2, 1)}, e0);
  CrossedElement f = crossed_mul(ue, CrossedElement{SuperMatrix(2, 1, uinv), SuperMatrix(2, 1)});
  CHECK(std::abs(k_pair(flat, f, 0) - k_pair(flat, e0, 0)) <= 1e-8);
}

TEST_CASE("k_pair is additive over block-diagonal sums") {
  Rng rng(64, "kblock");
  // two (1|1) idempotents e0 embedded block-diagonally into (2|2)
  CycleDescriptor flat = matrix_model_build(2, 2, 0, {});
  CycleDescriptor small = matrix_model_build(1, 1, 0, {});
  SuperMatrix s1 = SuperMatrix::identity(1, 1);
  CrossedElement es{s1 * cx(0.5), s1 * cx(0.5)};
  SuperMatrix big(2, 2);
  // embed 1|1 identity twice: rows/cols {0,2} and {1,3}
  for (int c : {0, 1})
    for (int i : {0, 2}) big(i + c, i + c) = 1.0;
  CrossedElement eb{big * cx(0.5), big * cx(0.5)};
  CHECK(std::abs(k_pair(flat, eb, 0) - 2.0 * k_pair(small, es, 0)) < 1e-12);
}
