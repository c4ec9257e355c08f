#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scc/model_element.hpp"
#include "scc/rng.hpp"
#include "scc/super_matrix.hpp"

using namespace scc;

TEST_CASE("supertrace and grading basics") {
  SuperMatrix v = SuperMatrix::grading(2, 3);
  CHECK(v.supertrace() == cx(5.0));
  CHECK(SuperMatrix::identity(2, 3).supertrace() == cx(-1.0));

  SuperMatrix a(1, 1);
  a(0, 0) = 2.0; a(0, 1) = cx(0, 1); a(1, 0) = 7.0; a(1, 1) = -3.0;
  CHECK(a.supertrace() == cx(5.0));
  CHECK(a.even_part()(0, 1) == cx(0.0));
  CHECK(a.odd_part()(0, 0) == cx(0.0));
  CHECK((a.even_part() + a.odd_part() - a).is_zero(0.0));
  CHECK(a.alpha()(0, 1) == cx(0, -1));
  CHECK(a.parity() == -1);
  CHECK(a.even_part().parity() == 0);
  CHECK(a.odd_part().parity() == 1);
}

TEST_CASE("supertrace kills graded commutators") {
  Rng rng(11, "str-comm");
  for (int rep = 0; rep < 200; ++rep) {
    SuperMatrix a = rng.homogeneous(2, 2, rng.uniform_int(0, 1));
    SuperMatrix b = rng.homogeneous(2, 2, rng.uniform_int(0, 1));
    CHECK(std::abs(graded_commutator(a, b).supertrace()) < 1e-12);
  }
}

TEST_CASE("alpha is a product-preserving involution") {
  Rng rng(12, "alpha");
  for (int rep = 0; rep < 50; ++rep) {
    SuperMatrix a = rng.gauss_matrix(2, 3), b = rng.gauss_matrix(2, 3);
    CHECK((a.alpha().alpha() - a).is_zero(0.0));
    CHECK(((a * b).alpha() - a.alpha() * b.alpha()).is_zero(1e-12));
  }
}

TEST_CASE("grading mismatch is rejected") {
  CHECK_THROWS_AS(SuperMatrix(1, 2) + SuperMatrix(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SuperMatrix(1, 2) * SuperMatrix(1, 1), std::invalid_argument);
}

TEST_CASE("functional calculus: x^2 on an involution") {
  SuperMatrix h(1, 1);
  h(0, 1) = 1.0; h(1, 0) = 1.0;
  SmoothFunction sq([](double x) { return x * x; }, Parity::even);
  SuperMatrix r = functional_calculus(sq, h);
  CHECK((r - SuperMatrix::identity(1, 1)).is_zero(1e-13));
}

TEST_CASE("functional calculus: diagonal input reproduces pointwise values") {
  SuperMatrix h(2, 1);
  h(0, 0) = -1.5; h(1, 1) = 0.0; h(2, 2) = 2.0;
  SmoothFunction f([](double x) { return std::exp(-x * x); }, Parity::even,
                   DecayClass::rapid_decay);
  SuperMatrix r = functional_calculus(f, h);
  CHECK(std::abs(r(0, 0) - cx(std::exp(-2.25))) < 1e-14);
  CHECK(std::abs(r(1, 1) - cx(1.0)) < 1e-14);
  CHECK(std::abs(r(2, 2) - cx(std::exp(-4.0))) < 1e-14);
  CHECK(std::abs(r(0, 1)) < 1e-14);
}

TEST_CASE("functional calculus matches the Taylor exponential") {
  Rng rng(21, "fc-exp");
  for (int rep = 0; rep < 20; ++rep) {
    SuperMatrix h = rng.hermitian(2, 2);
    SmoothFunction f([](double x) { return std::exp(-x * x); }, Parity::even,
                     DecayClass::rapid_decay);
    SuperMatrix viaeig = functional_calculus(f, h);
    Mat hs = h.mat() * h.mat();
    Mat direct = expm(hs * cx(-1.0));
    CHECK((viaeig.mat() - direct).norm_max() < 1e-10);
  }
}

TEST_CASE("functional calculus parity transport") {
  // f even: f(H) commutes with v; f odd and H odd: f(H) stays odd.
  Rng rng(22, "fc-par");
  for (int rep = 0; rep < 20; ++rep) {
    SuperMatrix h = rng.odd_hermitian(2, 2);
    SmoothFunction fe([](double x) { return std::cos(x); }, Parity::even);
    SmoothFunction fo([](double x) { return std::sin(x); }, Parity::odd);
    CHECK(functional_calculus(fe, h).parity() == 0);
    SuperMatrix so = functional_calculus(fo, h);
    CHECK((so.parity() == 1 || so.is_zero(1e-12)));
  }
}

TEST_CASE("functional calculus is an algebra morphism on fixed H") {
  Rng rng(23, "fc-hom");
  for (int rep = 0; rep < 10; ++rep) {
    SuperMatrix h = rng.hermitian(3, 2);
    SmoothFunction f([](double x) { return std::exp(-x * x); }, Parity::even);
    SmoothFunction g([](double x) { return x / (1.0 + x * x); }, Parity::odd);
    SmoothFunction fg([](double x) { return std::exp(-x * x) * x / (1.0 + x * x); },
                      Parity::odd);
    SmoothFunction fpg([](double x) { return std::exp(-x * x) + x / (1.0 + x * x); },
                       Parity::none);
    SuperMatrix lhs = functional_calculus(f, h) * functional_calculus(g, h);
    CHECK((lhs - functional_calculus(fg, h)).is_zero(1e-10));
    SuperMatrix sum = functional_calculus(f, h) + functional_calculus(g, h);
    CHECK((sum - functional_calculus(fpg, h)).is_zero(1e-10));
  }
}

TEST_CASE("functional calculus rejects non-Hermitian input") {
  SuperMatrix h(1, 1);
  h(0, 1) = 1.0;  // h != h^*
  SmoothFunction f([](double x) { return x; }, Parity::odd);
  CHECK_THROWS_AS(functional_calculus(f, h), std::invalid_argument);
}

TEST_CASE("declared parity is validated") {
  CHECK_THROWS_AS(SmoothFunction([](double x) { return x; }, Parity::even),
                  std::invalid_argument);
  CHECK_THROWS_AS(SmoothFunction([](double x) { return x * x; }, Parity::odd),
                  std::invalid_argument);
}

TEST_CASE("shuffle sign examples") {
  CHECK(shuffle_sign(0b001, 0b010) == 1);   // theta0 theta1, sorted
  CHECK(shuffle_sign(0b010, 0b001) == -1);  // theta1 theta0, one swap
  CHECK(shuffle_sign(0b101, 0b010) == -1);  // {0,2},{1}: 2>1 one inversion
  CHECK(shuffle_sign(0b011, 0b100) == 1);
  CHECK(shuffle_sign(0, 0b111) == 1);
}

TEST_CASE("theta generators anticommute, matrices pass with Koszul sign") {
  int k = 3;
  SuperMatrix id = SuperMatrix::identity(1, 1);
  ModelElement t0 = ModelElement::from_matrix(id, k, 0b001);
  ModelElement t1 = ModelElement::from_matrix(id, k, 0b010);
  CHECK((t0 * t1 + t1 * t0).is_zero(0.0));
  CHECK((t0 * t0).is_zero(0.0));

  // (A theta_S)(B theta_T) = +/- AB theta_{S u T}: odd B past theta0 flips.
  SuperMatrix b(1, 1);
  b(0, 1) = 1.0; b(1, 0) = 2.0;
  ModelElement bt = ModelElement::from_matrix(b, k, 0);
  ModelElement lhs = t0 * bt;
  CHECK((lhs.coeff(0b001) + b).is_zero(0.0));
  ModelElement rhs = bt * t0;
  CHECK((rhs.coeff(0b001) - b).is_zero(0.0));
}

TEST_CASE("model product associativity on integer samples") {
  Rng rng(31, "assoc");
  for (int rep = 0; rep < 1000; ++rep) {
    int k = rng.uniform_int(1, 3);
    ModelElement a = rng.model_element(1, 1, k, 2, true);
    ModelElement b = rng.model_element(1, 1, k, 2, true);
    ModelElement c = rng.model_element(1, 1, k, 2, true);
    CHECK(((a * b) * c - a * (b * c)).is_zero(0.0));
  }
}

TEST_CASE("model unit and parity structure") {
  Rng rng(32, "unit");
  ModelElement one = ModelElement::unit(2, 1, 2);
  for (int rep = 0; rep < 50; ++rep) {
    ModelElement a = rng.model_element(2, 1, 2);
    CHECK((one * a - a).is_zero(0.0));
    CHECK((a * one - a).is_zero(0.0));
    CHECK((a.even_part() + a.odd_part() - a).is_zero(0.0));
    // parity of a product of homogeneous parts
    ModelElement p = a.even_part() * a.odd_part();
    CHECK((p.parity() == 1 || p.is_zero(1e-14)));
  }
}

TEST_CASE("theta degree tracks the filtration level") {
  SuperMatrix id = SuperMatrix::identity(1, 1);
  ModelElement e(1, 1, 3);
  CHECK(e.theta_degree() == 4);  // zero element sits below every level
  e.add_term(0b110, id);
  CHECK(e.theta_degree() == 2);
  e.add_term(0b001, id);
  CHECK(e.theta_degree() == 1);
  ModelElement f = ModelElement::from_matrix(id, 3, 0b010);
  CHECK((f * f).theta_degree() == 4);
}

TEST_CASE("graded commutator sign convention on the model algebra") {
  Rng rng(33, "gcomm");
  for (int rep = 0; rep < 100; ++rep) {
    ModelElement a = rng.model_element(1, 1, 2, 2, true).odd_part();
    ModelElement b = rng.model_element(1, 1, 2, 2, true).odd_part();
    // odd-odd: [a,b] = ab + ba is symmetric
    CHECK((graded_commutator(a, b) - graded_commutator(b, a)).is_zero(0.0));
  }
}
