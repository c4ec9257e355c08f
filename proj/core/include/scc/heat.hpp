#pragma once

#include <map>
#include <vector>

#include "scc/chain.hpp"
#include "scc/comb.hpp"
#include "scc/cycle.hpp"

namespace scc {

/// Eigenframe of H^2 for a fixed odd Hermitian H.  In this frame every heat
/// slot e^{-t_p H^2} is diagonal, so simplex integrals collapse to divided
/// differences over eigenvalue multisets (duhamel_coeff).
struct HeatFrame {
  CycleDescriptor cyc;
  SuperMatrix h;                     // original frame
  SuperMatrix u;                     // even unitary with H^2 = u diag(lambda) u*
  std::vector<double> lambda;        // eigenvalues of H^2
  SuperMatrix h_f;                   // u* H u
  ModelElement eta_f, omega_f, c_f;  // frame images of eta, eta^2, nabla(H)
};

/// Throws unless H is odd, Hermitian, and sized for the cycle.
HeatFrame heat_frame(const CycleDescriptor& cyc, const SuperMatrix& h);

/// Sum of node-multiset terms.  A term (r_0..r_j) |-> X stands for
/// E({lambda_{r_0}..lambda_{r_j}}; t) * X once a time is supplied; products
/// concatenate multisets, which realizes the Duhamel convolution rules.
struct SymbElement {
  std::map<std::vector<int>, ModelElement> terms;
};

/// omega_n(t) from the heat recurrence
/// omega_{n+1}(t) = -int_0^t e^{-s H^2} (nabla(H) omega_n(t-s)
///                                        + eta^2 omega_{n-1}(t-s)) ds,
/// or its right-handed mirror when right_handed is set.
ModelElement omega_recurrence(const HeatFrame& f, int n, double t,
                              bool right_handed = false);

/// omega_n(t) as the signed sum over combinatorial classes, i.e. the image
/// under Phi of psi_chain(n, t).
ModelElement omega_comb(const HeatFrame& f, int n, double t);

/// exp(-t (H + s eta)^2), summed as a finite Duhamel series in the nilpotent
/// part s nabla(H) + s^2 eta^2.  Equals sum_n s^n omega_n(t).
ModelElement heat_oracle(const HeatFrame& f, double s, double t);

/// Realized chi_{K,sigma}(t): one chain term per eigen-path, slot p carrying
/// the projected power P_r H^{i_p}.  Slots outside K are identity factors.
/// tilde prepends the extra e^{-t_{-1} H^2} slot.
Chain<SuperMatrix> chi_realized(const HeatFrame& f, const CombClass& cls,
                                double t, bool tilde = false);

/// psi_n(t) = sum over C_n of chi; the tilde variant sums C_{n-1} classes
/// with the extra leading slot (empty chain for n = 0).
Chain<SuperMatrix> psi_chain(const HeatFrame& f, int n, double t,
                             bool tilde = false);

struct Thm412Report {
  double boundary_residual = 0.0;  // || b psi_{n+1}(t) + psi~_n(t) ||
  double cyclic_residual = 0.0;    // || N psi~_n(t) ||, N = sum t^k
};

Thm412Report verify_thm412(const HeatFrame& f, int n, double t);

/// zeta_{L,M}(t) realized over slots -1..n: sum over untimed subsets M_1 of
/// the complement of L u M, signed by (-1)^{|M_1|}.  Independent of the
/// admissible M.
Chain<SuperMatrix> claim2_zeta(const HeatFrame& f, int n,
                               const std::vector<int>& L,
                               const std::vector<int>& M, double t);

struct MainReport {
  std::vector<cx> coeffs;   // fitted polynomial in st, ascending powers
  cx top;                   // coefficient of (st)^{2m}
  double max_lower = 0.0;   // max |coeffs[j]| over j < 2m
  cx reference;             // k_pair of [e_0] - [graph_projection(H)] at order m
};

/// Fits tau(exp(-t (H + eta)^2)) at the sampled st values to a degree-2m
/// polynomial (2m = k) and compares the top coefficient against the K-pairing
/// of the index class.  Throws when sample points nearly coincide.
MainReport verify_main(const CycleDescriptor& cyc, const SuperMatrix& h,
                       const std::vector<double>& st);

}  // namespace scc
