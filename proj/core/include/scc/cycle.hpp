#pragma once

#include <functional>
#include <vector>

#include "scc/chain.hpp"
#include "scc/model_element.hpp"

namespace scc {

/// A finite-summable cycle over the model algebra M_N (x) Lambda_k:
/// connection nabla = ad(eta) for an odd eta of theta-degree 1, curvature
/// omega = eta^2, trace tau = supertrace of the top theta-coefficient.
struct CycleDescriptor {
  int pdim = 0, qdim = 0, k = 0;
  ModelElement eta;
  ModelElement omega;
  int n_max = 0;  // summability order; tau vanishes below filtration -n_max

  ModelElement unit() const { return ModelElement::unit(pdim, qdim, k); }
  /// constant-form lift of the quotient A = Omega / F_{-1}
  ModelElement lift(const SuperMatrix& a) const {
    return ModelElement::from_matrix(a, k, 0);
  }

  /// nabla a = eta a - (-1)^{da} a eta, extended linearly via alpha
  ModelElement nabla(const ModelElement& a) const;
  /// closed graded trace
  cx tau(const ModelElement& a) const;
};

/// Verifies the cycle axioms on random samples at build time; throws on
/// violation.  Generators must be even and k even.
CycleDescriptor matrix_model_build(int p, int q, int k,
                                   const std::vector<SuperMatrix>& gens,
                                   uint64_t check_seed = 7);

/// Element of the X-extension Omega~ = Omega + Omega X + X Omega + X Omega X.
struct XExt {
  ModelElement c00, c01, c10, c11;
};

XExt xext_from_carrier(const CycleDescriptor& cyc, const ModelElement& a);
XExt xext_add(const XExt& x, const XExt& y);
XExt xext_scale(const XExt& x, cx s);
/// 2x2-style product with the curvature inserted between X-slots:
/// (xy)_{ij} = x_{i0} y_{0j} + x_{i1} omega y_{1j}
XExt xext_mul(const CycleDescriptor& cyc, const XExt& x, const XExt& y);
/// differential: da = nabla a + Xa + (-1)^{da} aX on the carrier, dX = 0,
/// extended by graded Leibniz with the contraction XX -> omega
XExt xext_d(const CycleDescriptor& cyc, const XExt& x);
/// tau~(a00 + a01 X + X a10 + X a11 X) = tau(a00) - (-1)^{da11} tau(omega a11)
cx xext_trace(const CycleDescriptor& cyc, const XExt& x);
double xext_norm_max(const XExt& x);

/// rho(a0) d rho(a1) ... d rho(a_n) evaluated with the xext ops, extended
/// linearly over the chain
XExt realize_chain(const CycleDescriptor& cyc, const Chain<SuperMatrix>& c,
                   const std::function<ModelElement(const SuperMatrix&)>* lift = nullptr);

/// phi^tau(a_0,...,a_n) = (-1)^mu tau~(rho(a_0) d rho(a_1) ... d rho(a_n)),
/// mu = sum_j (n-j) da_j, expanded multilinearly over parities.  An
/// alternative lift may be supplied (must agree with the constant lift
/// modulo F_{-1}).
cx cocycle_phi_tau(const CycleDescriptor& cyc, const std::vector<SuperMatrix>& a,
                   const std::function<ModelElement(const SuperMatrix&)>* lift = nullptr);

/// Crossed-product element a + b v over A = M_N, v the grading generator.
struct CrossedElement {
  SuperMatrix a, b;
};
CrossedElement crossed_mul(const CrossedElement& x, const CrossedElement& y);
CrossedElement crossed_add(const CrossedElement& x, const CrossedElement& y);
CrossedElement crossed_scale(const CrossedElement& x, cx s);
double crossed_norm_max(const CrossedElement& x);

/// psi^tau on crossed-product slots (a_j, i_j), a_j homogeneous:
/// 2 psi = (-1)^nu phi^tau(a_0,...,a_n) when sum da_j is even and sum i_j
/// is odd, 0 otherwise; nu = sum_{k<n} i_k (da_{k+1}+...+da_n).
cx cocycle_psi(const CycleDescriptor& cyc,
               const std::vector<std::pair<SuperMatrix, int>>& b);

/// K-pairing of an idempotent e in A x| Z2 with the cyclic cocycle of order
/// 2m: (1/m!) * 2 psi^tau(e,...,e) over 2m+1 slots.  calibration is a global
/// normalization scalar, 1 by default.
cx k_pair(const CycleDescriptor& cyc, const CrossedElement& e, int m,
          double calibration = 1.0);

}  // namespace scc
