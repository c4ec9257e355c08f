#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "scc/linalg.hpp"

namespace scc {

/// Polynomial in x, y, z with complex coefficients, kept canonical with
/// z-degree <= 1 by rewriting z^2 -> 1 - x^2 - y^2.  Two canonical forms that
/// differ represent different ambient polynomials, but all contractual
/// outputs (integrals, tangential values) only see the restriction to S^2.
struct SpherePoly {
  std::map<std::array<int, 3>, cx> coef;  // exponent triple -> coefficient

  static SpherePoly constant(cx v);
  static SpherePoly variable(int i);  // 0 -> x, 1 -> y, 2 -> z

  SpherePoly operator+(const SpherePoly& o) const;
  SpherePoly operator-(const SpherePoly& o) const;
  SpherePoly operator*(const SpherePoly& o) const;
  SpherePoly operator*(cx s) const;
  SpherePoly& operator+=(const SpherePoly& o);

  SpherePoly deriv(int i) const;  // ambient partial; never raises z-degree
  cx eval(const std::array<double, 3>& pt) const;
  double norm_max() const;
  bool is_zero(double tol = 0.0) const { return norm_max() <= tol; }
};

/// Canonicalize an arbitrary exponent map.  The difference from the input is
/// a multiple of x^2 + y^2 + z^2 - 1.
SpherePoly reduce(const std::map<std::array<int, 3>, cx>& raw);

/// Substitute the rotated coordinates R^T (x,y,z) and re-canonicalize.
SpherePoly rotate(const SpherePoly& p, const std::array<std::array<double, 3>, 3>& r);

/// Exact even-moment integral over S^2:
/// int x^a y^b z^c dA = 4 pi (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!,
/// zero when any exponent is odd.
double sphere_moment(int a, int b, int c);

/// int_{S^2} p dA via sphere_moment.
cx sphere_integral(const SpherePoly& p);

/// Seeded Monte Carlo estimate of the same integral (cross-check only).
cx sphere_integral_mc(const SpherePoly& p, uint64_t seed, int samples);

/// Mixed-degree ambient form with polynomial coefficients.  Degree-1 parts
/// are stored on (dx, dy, dz); degree-2 parts on (dy^dz, dz^dx, dx^dy).
struct SphereFormAmbient {
  SpherePoly d0;
  std::array<SpherePoly, 3> d1;
  std::array<SpherePoly, 3> d2;
  SpherePoly d3;

  static SphereFormAmbient from_poly(const SpherePoly& p);

  SphereFormAmbient operator+(const SphereFormAmbient& o) const;
  SphereFormAmbient operator-(const SphereFormAmbient& o) const;
  SphereFormAmbient operator*(cx s) const;
  bool is_zero(double tol = 0.0) const;
};

/// Graded-commutative wedge; components of total degree > 3 vanish.
SphereFormAmbient wedge(const SphereFormAmbient& a, const SphereFormAmbient& b);

/// Ambient exterior derivative of the stored representative.  Canonical
/// coefficients stay canonical, so d is a plain polynomial operation and
/// d(d(w)) vanishes up to coefficient roundoff.
SphereFormAmbient ext_d(const SphereFormAmbient& w);

/// Pairing with the integration current: for the degree-2 component
/// A dy^dz + B dz^dx + C dx^dy returns int (Ax + By + Cz) dA.  Throws when a
/// component of any other degree is nonzero.
cx integrate2(const SphereFormAmbient& w);

/// Square matrix over SpherePoly.
struct SphereMat {
  int n = 0;
  std::vector<SpherePoly> e;  // row-major

  explicit SphereMat(int n_ = 0) : n(n_), e(n_ * n_) {}
  SpherePoly& at(int i, int j) { return e[i * n + j]; }
  const SpherePoly& at(int i, int j) const { return e[i * n + j]; }

  static SphereMat identity(int n);
  SphereMat operator+(const SphereMat& o) const;
  SphereMat operator-(const SphereMat& o) const;
  SphereMat operator*(const SphereMat& o) const;
  SpherePoly trace() const;
  double norm_max() const;
};

SphereMat block_diag(const SphereMat& a, const SphereMat& b);
SphereMat rotate(const SphereMat& m, const std::array<std::array<double, 3>, 3>& r);

/// Square matrix over ambient forms; products use the wedge.
struct SphereFormMat {
  int n = 0;
  std::vector<SphereFormAmbient> e;

  explicit SphereFormMat(int n_ = 0) : n(n_), e(n_ * n_) {}
  SphereFormAmbient& at(int i, int j) { return e[i * n + j]; }
  const SphereFormAmbient& at(int i, int j) const { return e[i * n + j]; }

  static SphereFormMat from_mat(const SphereMat& m);
  SphereFormMat operator+(const SphereFormMat& o) const;
  SphereFormMat operator*(const SphereFormMat& o) const;
  SphereFormMat operator*(cx s) const;
  SphereFormAmbient trace() const;
};

SphereFormMat ext_d(const SphereFormMat& m);

/// Bott projection p = (1 + x s1 + y s2 + z s3) / 2; p^2 = p exactly.
SphereMat bott();

/// (1/m!) int tr((p dp dp)^m); divided by (2 pi i)^m this is an integer for a
/// projection class.  Throws unless p^2 = p.
cx chern_number(const SphereMat& p, int m = 1);

struct SphereExampleReport {
  cx reference;                    // <tr(p0 dp0 dp0) - tr(p1 dp1 dp1), c> / m!
  std::vector<double> residuals;   // |lhs(s,t) - (st)^2 reference| per pair
  double max_residual = 0.0;
};

/// Heat form of the closing example: exp(-t(D + s nabla)^2) expands to
/// exp(s^2 t^2 p dp dp) p blockwise, the exponential terminating at the
/// degree-2 term.  Pairs the supertrace with the integration current and
/// compares against (st)^2 times the Chern pairing of [p0] - [p1].
SphereExampleReport verify_sphere_example(
    const SphereMat& p0, const SphereMat& p1,
    const std::vector<std::array<double, 2>>& st_pairs);

}  // namespace scc
