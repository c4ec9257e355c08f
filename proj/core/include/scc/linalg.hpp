#pragma once

#include <complex>
#include <vector>

namespace scc {

using cx = std::complex<double>;

/// Dense complex matrix, row-major.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cx& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const cx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  const std::vector<cx>& data() const { return a_; }
  std::vector<cx>& data() { return a_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat operator*(cx s) const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cx s);

  Mat adjoint() const;
  Mat transpose() const;
  cx trace() const;

  /// max |entry|
  double norm_max() const;
  double norm_fro() const;
  /// max column sum of |entry|
  double norm_one() const;

  bool is_zero(double tol) const { return norm_max() <= tol; }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<cx> a_;
};

inline Mat operator*(cx s, const Mat& m) { return m * s; }

/// exp(A) by scaling-and-squaring with a truncated Taylor series.
Mat expm(const Mat& a);

/// Hermitian eigendecomposition by cyclic Jacobi sweeps.
/// On return h = u * diag(eval) * u^*.  Converges when the off-diagonal
/// Frobenius norm drops below 1e-13 * ||h||_F.
struct HermitianEig {
  std::vector<double> eval;
  Mat u;
};
HermitianEig jacobi_hermitian(const Mat& h);

/// Solves a * x = b for square a by partial-pivot LU.
Mat solve(Mat a, Mat b);

}  // namespace scc
