#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scc/chain.hpp"
#include "scc/model_element.hpp"
#include "scc/rng.hpp"

using namespace scc;

namespace {

Chain<ModelElement> random_chain(Rng& rng, int n, int p = 1, int q = 1, int k = 1) {
  std::vector<ModelElement> f;
  for (int i = 0; i <= n; ++i) {
    ModelElement e;
    do e = rng.model_element(p, q, k, 2, true); while (e.is_zero(0.0));
    f.push_back(e);
  }
  return make_chain(cx(1.0), f);
}

}  // namespace

TEST_CASE("b^2 = 0, both boundary variants") {
  Rng rng(41, "bsq");
  for (int rep = 0; rep < 120; ++rep) {
    int n = rng.uniform_int(2, 4);
    Chain<ModelElement> c = random_chain(rng, n);
    for (auto variant : {BoundaryVariant::graded, BoundaryVariant::ev}) {
      Chain<ModelElement> bb = boundary(boundary(c, variant), variant);
      CHECK(chain_residual_norm(bb) == 0.0);
    }
  }
}

TEST_CASE("t^{n+1} = id on degree-n chains") {
  Rng rng(42, "tcyc");
  for (int rep = 0; rep < 100; ++rep) {
    int n = rng.uniform_int(1, 4);
    Chain<ModelElement> c = random_chain(rng, n);
    Chain<ModelElement> r = c;
    for (int j = 0; j <= n; ++j) r = cyclic_t(r);
    Chain<ModelElement> diff = chain_add(r, chain_scale(c, cx(-1.0)));
    CHECK(chain_residual_norm(diff) == 0.0);
  }
}

TEST_CASE("N (1 - t) = 0 and (1 - t) N = 0") {
  Rng rng(43, "norm");
  for (int rep = 0; rep < 60; ++rep) {
    int n = rng.uniform_int(1, 3);
    Chain<ModelElement> c = random_chain(rng, n);
    Chain<ModelElement> one_minus_t = chain_add(c, chain_scale(cyclic_t(c), cx(-1.0)));
    CHECK(chain_residual_norm(norm_operator(one_minus_t)) == 0.0);
    Chain<ModelElement> nc = norm_operator(c);
    Chain<ModelElement> r = chain_add(nc, chain_scale(cyclic_t(nc), cx(-1.0)));
    CHECK(chain_residual_norm(r) == 0.0);
  }
}

TEST_CASE("d^2 = 0 on forms") {
  Rng rng(44, "dsq");
  for (int rep = 0; rep < 60; ++rep) {
    Form<ModelElement> w = phi_map(random_chain(rng, rng.uniform_int(0, 3)));
    CHECK(form_residual_norm(form_d(form_d(w))) == 0.0);
  }
}

TEST_CASE("graded Leibniz rule d(xy) = dx y + (-1)^{|x|} x dy") {
  Rng rng(45, "leibniz");
  for (int rep = 0; rep < 60; ++rep) {
    int nx = rng.uniform_int(0, 2), ny = rng.uniform_int(0, 2);
    // homogeneous x: single chain term, sampled
    Chain<ModelElement> cx_ = random_chain(rng, nx);
    Chain<ModelElement> cy_ = random_chain(rng, ny);
    const auto& tx = cx_.terms[rng.uniform_int(0, (int)cx_.terms.size() - 1)];
    const auto& ty = cy_.terms[rng.uniform_int(0, (int)cy_.terms.size() - 1)];
    Form<ModelElement> x = phi_map(Chain<ModelElement>{{tx}});
    Form<ModelElement> y = phi_map(Chain<ModelElement>{{ty}});
    int px = x.terms.front().parity();
    Form<ModelElement> lhs = form_d(form_mul(x, y));
    Form<ModelElement> rhs = form_add(
        form_mul(form_d(x), y),
        form_scale(form_mul(x, form_d(y)), cx(px & 1 ? -1.0 : 1.0)));
    CHECK(form_difference_norm(lhs, rhs) == 0.0);
  }
}

TEST_CASE("form product is associative") {
  Rng rng(46, "fassoc");
  for (int rep = 0; rep < 20; ++rep) {
    Form<ModelElement> x = phi_map(random_chain(rng, rng.uniform_int(0, 1)));
    Form<ModelElement> y = phi_map(random_chain(rng, rng.uniform_int(0, 2)));
    Form<ModelElement> z = phi_map(random_chain(rng, rng.uniform_int(0, 1)));
    CHECK(form_difference_norm(form_mul(form_mul(x, y), z),
                               form_mul(x, form_mul(y, z))) == 0.0);
  }
}

TEST_CASE("unit-led forms multiply by plain concatenation") {
  Rng rng(47, "unitlead");
  ModelElement a = rng.model_element(1, 1, 2, 2, true).even_part();
  ModelElement b = rng.model_element(1, 1, 2, 2, true).odd_part();
  Form<ModelElement> da;  // 1 * da
  da.terms.push_back({cx(1.0), false, std::nullopt, {a}});
  Form<ModelElement> bform;
  bform.terms.push_back({cx(1.0), true, b, {}});
  // (da) b = d(ab) - (-1)^{|a|} a db, a even
  Form<ModelElement> prod = form_mul(da, bform);
  Form<ModelElement> expect;
  expect.terms.push_back({cx(1.0), false, std::nullopt, {a * b}});
  expect.terms.push_back({cx(-1.0), true, a, {b}});
  CHECK(form_difference_norm(prod, expect) == 0.0);
}

TEST_CASE("Phi intertwines b with a graded commutator") {
  // For c = c' (x) a_n of degree n:
  //   Phi(b(c)) = (-1)^{n-1} [Phi(c'), a_n].
  Rng rng(48, "phib");
  for (int rep = 0; rep < 40; ++rep) {
    int n = rng.uniform_int(1, 3);
    Chain<ModelElement> c = random_chain(rng, n);
    for (const auto& t : c.terms) {
      Chain<ModelElement> single{{t}};
      Form<ModelElement> lhs = phi_map(boundary(single, BoundaryVariant::graded));

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
      CHECK(form_difference_norm(lhs, rhs) == 0.0);
    }
  }
}

TEST_CASE("canonicalization merges duplicate terms") {
  Rng rng(49, "canon");
  ModelElement a = rng.model_element(1, 1, 2, 2, true).even_part();
  Form<ModelElement> w;
  w.terms.push_back({cx(1.0), true, a, {a}});
  w.terms.push_back({cx(2.0), true, a, {a}});
  w.terms.push_back({cx(-3.0), true, a, {a}});
  form_canonicalize(w);
  CHECK(w.terms.empty());
}
