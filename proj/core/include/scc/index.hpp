#pragma once

#include "scc/cycle.hpp"
#include "scc/super_matrix.hpp"

namespace scc {

/// Finite Hermitian realization of an odd operator D = [[0, P*], [P, 0]].
struct FredholmRealization {
  SuperMatrix h;

  /// validates oddness and Hermiticity
  static FredholmRealization from_odd(const SuperMatrix& h);
  static FredholmRealization from_block(const Mat& P);
  /// the lower-left block P (odd x even)
  Mat block() const;
};

/// Even weight with tau_w(x)^2 x^2 = e^{-x^2}(1 - e^{-x^2}), tau_w(0) = 1.
/// Representative tau_w(x) = e^{-x^2/2} sqrt((1-e^{-x^2})/x^2).
double tau_weight(double x);

/// p = (1+v)/2 - e^{-H^2} v + tau_w(H) H.  Throws when the idempotency
/// residual exceeds 1e-9.
SuperMatrix graph_projection(const FredholmRealization& r);

/// dim ker P - dim ker P*, kernels counted by eigenvalues of P*P and PP*
/// below 1e-10 ||P||^2.  Ill-separated spectra near the threshold throw.
int analytic_index(const Mat& P);

/// supertrace of e^{-t H^2}
cx mckean_singer(const FredholmRealization& r, double t);

/// crossed-product decomposition a + b v of the graph projection:
/// a = 1/2 + tau_w(H) H, b = 1/2 - e^{-H^2}
CrossedElement crossed_graph_projection(const FredholmRealization& r);

/// e_0 = (1 + v)/2 as a crossed-product element
CrossedElement crossed_e0(int p, int q);

}  // namespace scc
