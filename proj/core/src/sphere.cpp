#include "scc/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "scc/rng.hpp"

namespace scc {

namespace {

constexpr double kPi = 3.14159265358979323846;

void accumulate(std::map<std::array<int, 3>, cx>& m,
                const std::array<int, 3>& key, cx v) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (v != cx(0.0)) m.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second == cx(0.0)) m.erase(it);
}

// one z^2 -> 1 - x^2 - y^2 rewrite per level until z-degree <= 1
void reduce_into(std::map<std::array<int, 3>, cx>& out,
                 const std::array<int, 3>& key, cx v) {
  if (key[2] <= 1) {
    accumulate(out, key, v);
    return;
  }
  std::array<int, 3> base{key[0], key[1], key[2] - 2};
  reduce_into(out, base, v);
  reduce_into(out, {base[0] + 2, base[1], base[2]}, -v);
  reduce_into(out, {base[0], base[1] + 2, base[2]}, -v);
}

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

SpherePoly reduce(const std::map<std::array<int, 3>, cx>& raw) {
  SpherePoly p;
  for (const auto& [key, v] : raw) reduce_into(p.coef, key, v);
  return p;
}

SpherePoly SpherePoly::constant(cx v) {
  SpherePoly p;
  if (v != cx(0.0)) p.coef[{0, 0, 0}] = v;
  return p;
}

SpherePoly SpherePoly::variable(int i) {
  SpherePoly p;
  std::array<int, 3> key{0, 0, 0};
  key[i] = 1;
  p.coef[key] = 1.0;
  return p;
}

SpherePoly SpherePoly::operator+(const SpherePoly& o) const {
  SpherePoly r = *this;
  for (const auto& [key, v] : o.coef) accumulate(r.coef, key, v);
  return r;
}

SpherePoly SpherePoly::operator-(const SpherePoly& o) const {
  SpherePoly r = *this;
  for (const auto& [key, v] : o.coef) accumulate(r.coef, key, -v);
  return r;
}

SpherePoly SpherePoly::operator*(const SpherePoly& o) const {
  SpherePoly r;
  for (const auto& [ka, va] : coef)
    for (const auto& [kb, vb] : o.coef)
      reduce_into(r.coef, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]},
                  va * vb);
  return r;
}

SpherePoly SpherePoly::operator*(cx s) const {
  SpherePoly r;
  if (s == cx(0.0)) return r;
  for (const auto& [key, v] : coef) r.coef[key] = v * s;
  return r;
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
  for (const auto& [key, v] : o.coef) accumulate(coef, key, v);
  return *this;
}

SpherePoly SpherePoly::deriv(int i) const {
  SpherePoly r;
  for (const auto& [key, v] : coef) {
    if (key[i] == 0) continue;
    std::array<int, 3> k = key;
    --k[i];
    accumulate(r.coef, k, v * cx(double(key[i])));
  }
  return r;
}

cx SpherePoly::eval(const std::array<double, 3>& pt) const {
  cx r = 0.0;
  for (const auto& [key, v] : coef)
    r += v * std::pow(pt[0], key[0]) * std::pow(pt[1], key[1]) *
         std::pow(pt[2], key[2]);
  return r;
}

double SpherePoly::norm_max() const {
  double m = 0.0;
  for (const auto& [key, v] : coef) m = std::max(m, std::abs(v));
  return m;
}

SpherePoly rotate(const SpherePoly& p,
                  const std::array<std::array<double, 3>, 3>& r) {
  // substitute x_i -> sum_j r[j][i] x_j (pullback along the rotation)
  std::array<SpherePoly, 3> sub;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      sub[i] += SpherePoly::variable(j) * cx(r[j][i]);
  SpherePoly out;
  for (const auto& [key, v] : p.coef) {
    SpherePoly term = SpherePoly::constant(v);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < key[i]; ++e) term = term * sub[i];
    out += term;
  }
  return out;
}

double sphere_moment(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("sphere_moment: negative exponent");
  if ((a | b | c) & 1) return 0.0;
  return 4.0 * kPi * double_factorial(a - 1) * double_factorial(b - 1) *
         double_factorial(c - 1) / double_factorial(a + b + c + 1);
}

cx sphere_integral(const SpherePoly& p) {
  cx r = 0.0;
  for (const auto& [key, v] : p.coef)
    r += v * sphere_moment(key[0], key[1], key[2]);
  return r;
}

cx sphere_integral_mc(const SpherePoly& p, uint64_t seed, int samples) {
  Rng rng(seed, "sphere_mc");
  cx acc = 0.0;
  for (int i = 0; i < samples; ++i) {
    std::array<double, 3> pt{rng.gauss(), rng.gauss(), rng.gauss()};
    double n = std::sqrt(pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2]);
    if (n < 1e-12) {
      --i;
      continue;
    }
    for (double& c : pt) c /= n;
    acc += p.eval(pt);
  }
  return acc * cx(4.0 * kPi / samples);
}

SphereFormAmbient SphereFormAmbient::from_poly(const SpherePoly& p) {
  SphereFormAmbient w;
  w.d0 = p;
  return w;
}

SphereFormAmbient SphereFormAmbient::operator+(const SphereFormAmbient& o) const {
  SphereFormAmbient r = *this;
  r.d0 += o.d0;
  for (int i = 0; i < 3; ++i) {
    r.d1[i] += o.d1[i];
    r.d2[i] += o.d2[i];
  }
  r.d3 += o.d3;
  return r;
}

SphereFormAmbient SphereFormAmbient::operator-(const SphereFormAmbient& o) const {
  return *this + o * cx(-1.0);
}

SphereFormAmbient SphereFormAmbient::operator*(cx s) const {
  SphereFormAmbient r;
  r.d0 = d0 * s;
  for (int i = 0; i < 3; ++i) {
    r.d1[i] = d1[i] * s;
    r.d2[i] = d2[i] * s;
  }
  r.d3 = d3 * s;
  return r;
}

bool SphereFormAmbient::is_zero(double tol) const {
  if (!d0.is_zero(tol) || !d3.is_zero(tol)) return false;
  for (int i = 0; i < 3; ++i)
    if (!d1[i].is_zero(tol) || !d2[i].is_zero(tol)) return false;
  return true;
}

SphereFormAmbient wedge(const SphereFormAmbient& a, const SphereFormAmbient& b) {
  SphereFormAmbient r;
  r.d0 = a.d0 * b.d0;
  for (int i = 0; i < 3; ++i) {
    r.d1[i] = a.d0 * b.d1[i] + a.d1[i] * b.d0;
    r.d2[i] = a.d0 * b.d2[i] + a.d2[i] * b.d0;
    // 1^1 cross product on the (dy^dz, dz^dx, dx^dy) basis
    int j = (i + 1) % 3, k = (i + 2) % 3;
    r.d2[i] += a.d1[j] * b.d1[k] - a.d1[k] * b.d1[j];
    // 1^2 and 2^1 both contract to the volume coefficient
    r.d3 += a.d1[i] * b.d2[i] + a.d2[i] * b.d1[i];
  }
  r.d3 += a.d0 * b.d3 + a.d3 * b.d0;
  return r;
}

SphereFormAmbient ext_d(const SphereFormAmbient& w) {
  SphereFormAmbient r;
  for (int i = 0; i < 3; ++i) {
    r.d1[i] = w.d0.deriv(i);
    int j = (i + 1) % 3, k = (i + 2) % 3;
    r.d2[i] = w.d1[k].deriv(j) - w.d1[j].deriv(k);
    r.d3 += w.d2[i].deriv(i);
  }
  return r;
}

cx integrate2(const SphereFormAmbient& w) {
  if (!w.d0.is_zero() || !w.d3.is_zero())
    throw std::invalid_argument("integrate2: nonzero degree-0/3 component");
  for (int i = 0; i < 3; ++i)
    if (!w.d1[i].is_zero())
      throw std::invalid_argument("integrate2: nonzero degree-1 component");
  SpherePoly flux;
  for (int i = 0; i < 3; ++i) flux += w.d2[i] * SpherePoly::variable(i);
  return sphere_integral(flux);
}

SphereMat SphereMat::identity(int n) {
  SphereMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SpherePoly::constant(1.0);
  return m;
}

SphereMat SphereMat::operator+(const SphereMat& o) const {
  SphereMat r = *this;
  for (int i = 0; i < n * n; ++i) r.e[i] += o.e[i];
  return r;
}

SphereMat SphereMat::operator-(const SphereMat& o) const {
  SphereMat r = *this;
  for (int i = 0; i < n * n; ++i) r.e[i] = r.e[i] - o.e[i];
  return r;
}

SphereMat SphereMat::operator*(const SphereMat& o) const {
  SphereMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) r.at(i, j) += at(i, l) * o.at(l, j);
  return r;
}

SpherePoly SphereMat::trace() const {
  SpherePoly t;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

double SphereMat::norm_max() const {
  double m = 0.0;
  for (const SpherePoly& p : e) m = std::max(m, p.norm_max());
  return m;
}

SphereMat block_diag(const SphereMat& a, const SphereMat& b) {
  SphereMat r(a.n + b.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) r.at(a.n + i, a.n + j) = b.at(i, j);
  return r;
}

SphereMat rotate(const SphereMat& m,
                 const std::array<std::array<double, 3>, 3>& r) {
  SphereMat out(m.n);
  for (int i = 0; i < m.n * m.n; ++i) out.e[i] = rotate(m.e[i], r);
  return out;
}

SphereFormMat SphereFormMat::from_mat(const SphereMat& m) {
  SphereFormMat r(m.n);
  for (int i = 0; i < m.n * m.n; ++i)
    r.e[i] = SphereFormAmbient::from_poly(m.e[i]);
  return r;
}

SphereFormMat SphereFormMat::operator+(const SphereFormMat& o) const {
  SphereFormMat r = *this;
  for (int i = 0; i < n * n; ++i) r.e[i] = r.e[i] + o.e[i];
  return r;
}

SphereFormMat SphereFormMat::operator*(const SphereFormMat& o) const {
  SphereFormMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        r.at(i, j) = r.at(i, j) + wedge(at(i, l), o.at(l, j));
  return r;
}

SphereFormMat SphereFormMat::operator*(cx s) const {
  SphereFormMat r = *this;
  for (int i = 0; i < n * n; ++i) r.e[i] = r.e[i] * s;
  return r;
}

SphereFormAmbient SphereFormMat::trace() const {
  SphereFormAmbient t;
  for (int i = 0; i < n; ++i) t = t + at(i, i);
  return t;
}

SphereFormMat ext_d(const SphereFormMat& m) {
  SphereFormMat r(m.n);
  for (int i = 0; i < m.n * m.n; ++i) r.e[i] = ext_d(m.e[i]);
  return r;
}

SphereMat bott() {
  SphereMat p(2);
  SpherePoly x = SpherePoly::variable(0), y = SpherePoly::variable(1),
             z = SpherePoly::variable(2);
  cx half(0.5), ih(0.0, 0.5);
  p.at(0, 0) = SpherePoly::constant(0.5) + z * half;
  p.at(1, 1) = SpherePoly::constant(0.5) - z * half;
  p.at(0, 1) = x * half - y * ih;
  p.at(1, 0) = x * half + y * ih;
  return p;
}

namespace {

// p dp dp as a matrix of (mostly degree-2) forms
SphereFormMat curvature(const SphereMat& p) {
  SphereFormMat pf = SphereFormMat::from_mat(p);
  SphereFormMat dp = ext_d(pf);
  return pf * dp * dp;
}

void require_projection(const SphereMat& p) {
  if ((p * p - p).norm_max() > 1e-12)
    throw std::invalid_argument("chern_number: input is not a projection");
}

double factorial(int m) {
  double r = 1.0;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

}  // namespace

cx chern_number(const SphereMat& p, int m) {
  if (m < 1) throw std::invalid_argument("chern_number: m must be >= 1");
  require_projection(p);
  SphereFormMat f = curvature(p);
  SphereFormMat acc = f;
  for (int j = 1; j < m; ++j) acc = acc * f;
  SphereFormAmbient t = acc.trace();
  // degrees above 2 cannot pair with the integration current
  t.d0 = SpherePoly();
  for (int i = 0; i < 3; ++i) t.d1[i] = SpherePoly();
  t.d3 = SpherePoly();
  return integrate2(t) * cx(1.0 / factorial(m));
}

SphereExampleReport verify_sphere_example(
    const SphereMat& p0, const SphereMat& p1,
    const std::vector<std::array<double, 2>>& st_pairs) {
  require_projection(p0);
  require_projection(p1);
  SphereExampleReport rep;
  rep.reference = chern_number(p0, 1) - chern_number(p1, 1);
  SphereFormMat f0 = curvature(p0), f1 = curvature(p1);
  SphereFormMat q0 = SphereFormMat::from_mat(p0),
                q1 = SphereFormMat::from_mat(p1);
  for (const auto& [s, t] : st_pairs) {
    // exp(s^2 t^2 p dp dp) p = p + s^2 t^2 (p dp dp) p; higher terms exceed
    // degree 3 and vanish ambiently
    cx u(s * s * t * t);
    SphereFormAmbient str =
        (q0 + (f0 * q0) * u).trace() - (q1 + (f1 * q1) * u).trace();
    str.d0 = SpherePoly();
    for (int i = 0; i < 3; ++i) str.d1[i] = SpherePoly();
    str.d3 = SpherePoly();
    double res = std::abs(integrate2(str) - u * rep.reference);
    rep.residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  return rep;
}

}  // namespace scc
