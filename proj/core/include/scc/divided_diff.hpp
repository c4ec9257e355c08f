#pragma once

#include <vector>

namespace scc {

/// Simplex-ordered exponential integral
///   E_n(mu; t) = int_{t Delta_n} prod_i e^{-t_i mu_i} dV,
/// normalized so that Vol(t Delta_n) = t^n / n!.
struct DuhamelRequest {
  std::vector<double> nodes;  // mu_0..mu_n, multiplicities allowed
  double t = 0.0;
};

/// E_n as (-1)^n times the divided difference of lambda -> e^{-t lambda},
/// evaluated by the bidiagonal-matrix exponential (corner entry).  Stable
/// for clustered nodes.
double duhamel_coeff(const DuhamelRequest& req);

/// Independent oracle: the convolution recurrence
/// E_n = int_0^t e^{-s mu_0} E_{n-1}(mu_1..; t-s) ds via nested adaptive
/// Gauss-Legendre panels.
double duhamel_quadrature(const DuhamelRequest& req, double tol = 1e-12);

}  // namespace scc
