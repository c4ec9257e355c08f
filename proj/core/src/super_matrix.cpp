#include "scc/super_matrix.hpp"

#include <cmath>
#include <cstring>

namespace scc {

SuperMatrix::SuperMatrix(int dim_even, int dim_odd, Mat m)
    : p_(dim_even), q_(dim_odd), m_(std::move(m)) {
  if (m_.rows() != p_ + q_ || m_.cols() != p_ + q_)
    throw std::invalid_argument("SuperMatrix: entries do not match declared (p,q)");
}

SuperMatrix SuperMatrix::identity(int p, int q) {
  return SuperMatrix(p, q, Mat::identity(p + q));
}

SuperMatrix SuperMatrix::grading(int p, int q) {
  Mat v(p + q, p + q);
  for (int i = 0; i < p; ++i) v(i, i) = 1.0;
  for (int i = p; i < p + q; ++i) v(i, i) = -1.0;
  return SuperMatrix(p, q, std::move(v));
}

cx SuperMatrix::supertrace() const {
  cx t = 0.0;
  for (int i = 0; i < p_; ++i) t += m_(i, i);
  for (int i = p_; i < p_ + q_; ++i) t -= m_(i, i);
  return t;
}

SuperMatrix SuperMatrix::even_part() const {
  SuperMatrix r(p_, q_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (even_index(i) == even_index(j)) r(i, j) = m_(i, j);
  return r;
}

SuperMatrix SuperMatrix::odd_part() const {
  SuperMatrix r(p_, q_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (even_index(i) != even_index(j)) r(i, j) = m_(i, j);
  return r;
}

SuperMatrix SuperMatrix::alpha() const {
  SuperMatrix r = *this;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (even_index(i) != even_index(j)) r(i, j) = -r(i, j);
  return r;
}

int SuperMatrix::parity(double tol) const {
  double scale = std::max(norm_max(), 1.0);
  bool has_even = !even_part().is_zero(tol * scale);
  bool has_odd = !odd_part().is_zero(tol * scale);
  if (has_even && has_odd) return -1;
  return has_odd ? 1 : 0;
}

bool SuperMatrix::is_hermitian(double tol_scale) const {
  return (m_ - m_.adjoint()).norm_max() <= tol_scale * (1.0 + m_.norm_max());
}

std::string SuperMatrix::key() const {
  std::string s;
  s.reserve(m_.data().size() * sizeof(cx) + 8);
  s.append(reinterpret_cast<const char*>(&p_), sizeof(p_));
  s.append(reinterpret_cast<const char*>(&q_), sizeof(q_));
  for (const cx& v : m_.data()) {
    double re = v.real() == 0.0 ? 0.0 : v.real();  // normalize -0.0
    double im = v.imag() == 0.0 ? 0.0 : v.imag();
    s.append(reinterpret_cast<const char*>(&re), sizeof(re));
    s.append(reinterpret_cast<const char*>(&im), sizeof(im));
  }
  return s;
}

SuperMatrix graded_commutator(const SuperMatrix& a, const SuperMatrix& b) {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0)
    throw std::invalid_argument("graded_commutator: operands must be homogeneous");
  double sign = (pa == 1 && pb == 1) ? 1.0 : -1.0;
  return a * b + (b * a) * cx(sign);
}

SmoothFunction::SmoothFunction(std::function<double(double)> f, Parity par,
                               DecayClass dc)
    : eval(std::move(f)), parity(par), decay(dc) {
  if (parity == Parity::none) return;
  const double sample[] = {0.17, 0.83, 1.6, 2.9, 4.2};
  for (double x : sample) {
    double fp = eval(x), fm = eval(-x);
    double want = parity == Parity::even ? fm : -fm;
    double scale = std::max({std::abs(fp), std::abs(fm), 1e-12});
    if (std::abs(fp - want) > 1e-9 * scale)
      throw std::invalid_argument("SmoothFunction: parity flag inconsistent with evaluation");
  }
}

SuperMatrix functional_calculus(const SmoothFunction& f, const SuperMatrix& h) {
  if (!h.is_hermitian())
    throw std::invalid_argument("functional_calculus: input is not Hermitian");
  // Symmetrize residual round-off before the eigensolve.
  Mat sym = (h.mat() + h.mat().adjoint()) * cx(0.5);
  HermitianEig e = jacobi_hermitian(sym);
  const int n = h.dim();
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cx s = 0.0;
      for (int k = 0; k < n; ++k)
        s += e.u(i, k) * f(e.eval[k]) * std::conj(e.u(j, k));
      r(i, j) = s;
    }
  return SuperMatrix(h.dim_even(), h.dim_odd(), std::move(r));
}

}  // namespace scc
