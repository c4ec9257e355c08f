#include "scc/divided_diff.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "scc/linalg.hpp"

namespace scc {

double duhamel_coeff(const DuhamelRequest& req) {
  if (req.t < 0.0) throw std::invalid_argument("duhamel_coeff: t must be >= 0");
  if (req.nodes.empty()) throw std::invalid_argument("duhamel_coeff: no nodes");
  const int n = static_cast<int>(req.nodes.size()) - 1;
  if (n == 0) return std::exp(-req.t * req.nodes[0]);
  if (req.t == 0.0) return 0.0;
  // Opitz: f applied to the bidiagonal node matrix puts the divided
  // difference f[mu_0..mu_n] in the corner.  With f = exp this is the
  // exponential of (-t mu_i) on the diagonal, -t on the superdiagonal.
  Mat z(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    z(i, i) = -req.t * req.nodes[i];
    if (i < n) z(i, i + 1) = -req.t;
  }
  double dd = expm(z)(0, n).real();
  return (n & 1) ? -dd : dd;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence.  Order 24 resolves these entire integrands to
// machine precision on a single panel; bisection handles the rest.
constexpr int kGlOrder = 24;

struct GlRule {
  double x[kGlOrder];
  double w[kGlOrder];
  GlRule() {
    for (int i = 0; i < kGlOrder; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (kGlOrder + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < kGlOrder; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = kGlOrder * (z * p0 - p1) / (z * z - 1.0);
        double dz = p0 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
};

double gl_panel(const std::function<double(double)>& f, double a, double b) {
  static const GlRule rule;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a), acc = 0.0;
  for (int i = 0; i < kGlOrder; ++i)
    acc += rule.w[i] * f(mid + half * rule.x[i]);
  return half * acc;
}

double gl_adaptive(const std::function<double(double)>& f, double a, double b,
                   double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double left = gl_panel(f, a, m), right = gl_panel(f, m, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
  return gl_adaptive(f, a, m, left, 0.5 * tol, depth - 1) +
         gl_adaptive(f, m, b, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  return gl_adaptive(f, a, b, gl_panel(f, a, b), tol, 8);
}

}  // namespace

double duhamel_quadrature(const DuhamelRequest& req, double tol) {
  if (req.t < 0.0) throw std::invalid_argument("duhamel_quadrature: t must be >= 0");
  if (req.nodes.size() == 1) return std::exp(-req.t * req.nodes[0]);
  if (req.t == 0.0) return 0.0;
  std::vector<double> rest(req.nodes.begin() + 1, req.nodes.end());
  double mu0 = req.nodes[0];
  auto integrand = [&](double s) {
    return std::exp(-s * mu0) * duhamel_quadrature({rest, req.t - s}, tol * 0.1);
  };
  return integrate(integrand, 0.0, req.t, tol);
}

}  // namespace scc
