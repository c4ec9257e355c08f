#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "scc/linalg.hpp"

namespace scc {

/// Z2-graded complex matrix with declared block sizes (p even | q odd).
/// The grading operator is v = diag(1_p, -1_q); an element is even when
/// it commutes with v (diagonal blocks) and odd when it anticommutes
/// (off-diagonal blocks).
class SuperMatrix {
public:
  SuperMatrix() = default;
  SuperMatrix(int dim_even, int dim_odd)
      : p_(dim_even), q_(dim_odd), m_(dim_even + dim_odd, dim_even + dim_odd) {}
  SuperMatrix(int dim_even, int dim_odd, Mat m);

  static SuperMatrix identity(int p, int q);
  static SuperMatrix grading(int p, int q);  // v = diag(1_p, -1_q)

  int dim_even() const { return p_; }
  int dim_odd() const { return q_; }
  int dim() const { return p_ + q_; }
  const Mat& mat() const { return m_; }
  Mat& mat() { return m_; }
  cx& operator()(int i, int j) { return m_(i, j); }
  const cx& operator()(int i, int j) const { return m_(i, j); }

  /// true when row index i belongs to the even subspace
  bool even_index(int i) const { return i < p_; }

  SuperMatrix operator+(const SuperMatrix& o) const { return with(m_ + o.check(*this).m_); }
  SuperMatrix operator-(const SuperMatrix& o) const { return with(m_ - o.check(*this).m_); }
  SuperMatrix operator-() const { return with(-m_); }
  SuperMatrix operator*(const SuperMatrix& o) const { return with(m_ * o.check(*this).m_); }
  SuperMatrix operator*(cx s) const { return with(m_ * s); }
  SuperMatrix adjoint() const { return with(m_.adjoint()); }

  /// tr(even block) - tr(odd block)
  cx supertrace() const;

  /// diagonal-block part (commutes with v)
  SuperMatrix even_part() const;
  /// off-diagonal-block part (anticommutes with v)
  SuperMatrix odd_part() const;
  /// grading morphism alpha = even_part - odd_part = v m v
  SuperMatrix alpha() const;
  /// 0 even, 1 odd, -1 mixed (relative to tol * scale)
  int parity(double tol = 1e-13) const;

  bool is_hermitian(double tol_scale = 1e-10) const;
  double norm_max() const { return m_.norm_max(); }
  double norm_fro() const { return m_.norm_fro(); }
  bool is_zero(double tol) const { return m_.is_zero(tol); }

  /// entries flattened row-major (for tensor realizations)
  std::vector<cx> flat() const { return m_.data(); }
  /// byte-exact key for canonical term merging
  std::string key() const;

private:
  SuperMatrix with(Mat m) const { return SuperMatrix(p_, q_, std::move(m)); }
  const SuperMatrix& check(const SuperMatrix& o) const {
    if (p_ != o.p_ || q_ != o.q_)
      throw std::invalid_argument("SuperMatrix: grading (p,q) mismatch");
    return *this;
  }

  int p_ = 0, q_ = 0;
  Mat m_;
};

inline SuperMatrix operator*(cx s, const SuperMatrix& m) { return m * s; }

/// graded commutator [a,b] = ab - (-1)^{da db} ba for homogeneous a, b
SuperMatrix graded_commutator(const SuperMatrix& a, const SuperMatrix& b);

enum class Parity { even, odd, none };
enum class DecayClass { rapid_decay, symbol };

/// Scalar function used as functional-calculus input.  The parity flag is
/// validated against sampled evaluations at construction.
struct SmoothFunction {
  std::function<double(double)> eval;
  Parity parity = Parity::none;
  DecayClass decay = DecayClass::symbol;

  SmoothFunction(std::function<double(double)> f, Parity par,
                 DecayClass dc = DecayClass::symbol);
  double operator()(double x) const { return eval(x); }
};

/// U f(Lambda) U^* from a Hermitian eigendecomposition.  Rejects inputs with
/// ||H - H^*||_max > 1e-10 * (1 + ||H||_max).
SuperMatrix functional_calculus(const SmoothFunction& f, const SuperMatrix& h);

}  // namespace scc
