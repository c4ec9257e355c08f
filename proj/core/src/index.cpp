#include "scc/index.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scc {

FredholmRealization FredholmRealization::from_odd(const SuperMatrix& h) {
  if (h.parity() != 1 && !h.is_zero(0.0))
    throw std::invalid_argument("FredholmRealization: operator must be odd");
  if (!h.is_hermitian())
    throw std::invalid_argument("FredholmRealization: operator must be Hermitian");
  return FredholmRealization{h};
}

FredholmRealization FredholmRealization::from_block(const Mat& P) {
  int p = P.cols(), q = P.rows();
  SuperMatrix h(p, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) {
      h(p + i, j) = P(i, j);
      h(j, p + i) = std::conj(P(i, j));
    }
  return FredholmRealization{h};
}

Mat FredholmRealization::block() const {
  int p = h.dim_even(), q = h.dim_odd();
  Mat P(q, p);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) P(i, j) = h(p + i, j);
  return P;
}

double tau_weight(double x) {
  double u = x * x;
  // (1 - e^{-u})/u stays accurate through u = 0
  double ratio = (u < 1e-300) ? 1.0 : -std::expm1(-u) / u;
  return std::exp(-u / 2.0) * std::sqrt(ratio);
}

SuperMatrix graph_projection(const FredholmRealization& r) {
  int p = r.h.dim_even(), q = r.h.dim_odd();
  SuperMatrix v = SuperMatrix::grading(p, q);
  SuperMatrix e0 = (SuperMatrix::identity(p, q) + v) * cx(0.5);
  SmoothFunction f1([](double x) { return -std::exp(-x * x); }, Parity::even,
                    DecayClass::symbol);
  SmoothFunction f2([](double x) { return tau_weight(x) * x; }, Parity::odd,
                    DecayClass::rapid_decay);
  SuperMatrix proj = e0 + functional_calculus(f1, r.h) * v + functional_calculus(f2, r.h);
  double resid = (proj * proj - proj).norm_max();
  if (resid > 1e-9)
    throw std::runtime_error("graph_projection: idempotency residual " +
                             std::to_string(resid));
  return proj;
}

namespace {

int kernel_dim(const Mat& sq, double thresh) {
  if (sq.rows() == 0) return 0;
  HermitianEig eig = jacobi_hermitian(sq);
  int dim = 0;
  for (double ev : eig.eval) {
    if (ev <= thresh) {
      ++dim;
    } else if (ev <= 100.0 * thresh) {
      throw std::runtime_error(
          "analytic_index: eigenvalue " + std::to_string(ev) +
          " ill-separated from kernel threshold " + std::to_string(thresh));
    }
  }
  return dim;
}

}  // namespace

int analytic_index(const Mat& P) {
  Mat Pa = P.adjoint();
  Mat PtP = Pa * P, PPt = P * Pa;
  double scale = 0.0;
  for (int i = 0; i < PtP.rows(); ++i) scale = std::max(scale, std::abs(PtP(i, i).real()));
  for (int i = 0; i < PPt.rows(); ++i) scale = std::max(scale, std::abs(PPt(i, i).real()));
  double thresh = 1e-10 * scale;
  return kernel_dim(PtP, thresh) - kernel_dim(PPt, thresh);
}

cx mckean_singer(const FredholmRealization& r, double t) {
  if (t <= 0.0) throw std::invalid_argument("mckean_singer: t must be positive");
  SmoothFunction f([t](double x) { return std::exp(-t * x * x); }, Parity::even,
                   DecayClass::rapid_decay);
  return functional_calculus(f, r.h).supertrace();
}

CrossedElement crossed_graph_projection(const FredholmRealization& r) {
  int p = r.h.dim_even(), q = r.h.dim_odd();
  SuperMatrix one = SuperMatrix::identity(p, q);
  SmoothFunction fexp([](double x) { return std::exp(-x * x); }, Parity::even,
                      DecayClass::rapid_decay);
  SmoothFunction fw([](double x) { return tau_weight(x) * x; }, Parity::odd,
                    DecayClass::rapid_decay);
  SuperMatrix a = one * cx(0.5) + functional_calculus(fw, r.h);
  SuperMatrix b = one * cx(0.5) - functional_calculus(fexp, r.h);
  return CrossedElement{a, b};
}

CrossedElement crossed_e0(int p, int q) {
  SuperMatrix one = SuperMatrix::identity(p, q);
  return CrossedElement{one * cx(0.5), one * cx(0.5)};
}

}  // namespace scc
