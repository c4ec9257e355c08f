#include "scc/linalg.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace scc {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      cx aik = a_[i * cols_ + k];
      if (aik == cx(0.0)) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) += aik * o(k, j);
    }
  return r;
}

Mat Mat::operator*(cx s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(cx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Mat Mat::adjoint() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

cx Mat::trace() const {
  assert(rows_ == cols_);
  cx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::norm_max() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Mat::norm_fro() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Mat::norm_one() const {
  double m = 0.0;
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    m = std::max(m, s);
  }
  return m;
}

Mat expm(const Mat& a) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  double nrm = a.norm_one();
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const double scale = std::ldexp(1.0, -s);
  Mat b = a * cx(scale);

  // Taylor to machine precision on the scaled matrix (||b|| <= 1/2).
  Mat result = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = term * b * cx(1.0 / k);
    result += term;
    if (term.norm_max() < 1e-18 * (1.0 + result.norm_max())) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

HermitianEig jacobi_hermitian(const Mat& h) {
  assert(h.rows() == h.cols());
  const int n = h.rows();
  Mat a = h;
  Mat u = Mat::identity(n);
  const double thresh = 1e-13 * std::max(h.norm_fro(), 1e-300);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 200 && off_norm() > thresh; ++sweep) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cx apq = a(p, q);
        double b = std::abs(apq);
        if (b < 1e-300) continue;
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        // Phase out a(p,q), then a real Jacobi rotation on the 2x2 block.
        cx phase = apq / b;
        double theta = 0.5 * std::atan2(2.0 * b, app - aqq);
        double c = std::cos(theta), sn = std::sin(theta);
        // 2x2 unitary V = diag(phase,1) * [[c,-sn],[sn,c]]
        cx vpp = phase * c, vpq = -phase * sn;
        cx vqp = sn, vqq = c;

        for (int i = 0; i < n; ++i) {  // A <- A V on columns p,q
          cx aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * vpp + aiq * vqp;
          a(i, q) = aip * vpq + aiq * vqq;
        }
        for (int j = 0; j < n; ++j) {  // A <- V^* A on rows p,q
          cx apj = a(p, j), aqj = a(q, j);
          a(p, j) = std::conj(vpp) * apj + std::conj(vqp) * aqj;
          a(q, j) = std::conj(vpq) * apj + std::conj(vqq) * aqj;
        }
        for (int i = 0; i < n; ++i) {  // U <- U V
          cx uip = u(i, p), uiq = u(i, q);
          u(i, p) = uip * vpp + uiq * vqp;
          u(i, q) = uip * vpq + uiq * vqq;
        }
      }
  }

  HermitianEig e;
  e.u = std::move(u);
  e.eval.resize(n);
  for (int i = 0; i < n; ++i) e.eval[i] = a(i, i).real();
  return e;
}

Mat solve(Mat a, Mat b) {
  assert(a.rows() == a.cols() && a.rows() == b.rows());
  const int n = a.rows(), m = b.cols();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (std::abs(a(piv, col)) < 1e-300)
      throw std::runtime_error("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (int j = 0; j < m; ++j) std::swap(b(col, j), b(piv, j));
    }
    cx d = a(col, col);
    for (int i = col + 1; i < n; ++i) {
      cx f = a(i, col) / d;
      if (f == cx(0.0)) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      for (int j = 0; j < m; ++j) b(i, j) -= f * b(col, j);
    }
  }
  Mat x(n, m);
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < m; ++j) {
      cx s = b(i, j);
      for (int k = i + 1; k < n; ++k) s -= a(i, k) * x(k, j);
      x(i, j) = s / a(i, i);
    }
  return x;
}

}  // namespace scc
