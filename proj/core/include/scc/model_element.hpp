#pragma once

#include <cstdint>
#include <map>

#include "scc/super_matrix.hpp"

namespace scc {

/// Parity of the exterior monomial theta_S, |S| mod 2.
inline int popcount_parity(uint32_t s) { return __builtin_popcount(s) & 1; }

/// Sign of sorting the concatenation (S, T) for disjoint monomials:
/// (-1)^{#{(s,t) in S x T : s > t}}.
int shuffle_sign(uint32_t s, uint32_t t);

/// Element of M_N tensor Lambda_k: a finite sum  sum_S  A_S theta_S with
/// A_S a SuperMatrix.  Total parity of a homogeneous term is
/// (matrix parity of A_S) + |S| mod 2.
class ModelElement {
public:
  ModelElement() = default;
  ModelElement(int dim_even, int dim_odd, int k)
      : p_(dim_even), q_(dim_odd), k_(k) {}

  static ModelElement unit(int p, int q, int k);
  static ModelElement from_matrix(const SuperMatrix& a, int k, uint32_t mono = 0);

  int dim_even() const { return p_; }
  int dim_odd() const { return q_; }
  int dim() const { return p_ + q_; }
  int generators() const { return k_; }

  const std::map<uint32_t, SuperMatrix>& components() const { return comps_; }
  /// coefficient of theta_S (zero matrix if absent)
  SuperMatrix coeff(uint32_t mono) const;
  void add_term(uint32_t mono, const SuperMatrix& a);

  ModelElement operator+(const ModelElement& o) const;
  ModelElement operator-(const ModelElement& o) const;
  ModelElement operator-() const;
  ModelElement operator*(const ModelElement& o) const;  // model_mul
  ModelElement operator*(cx s) const;
  ModelElement& operator+=(const ModelElement& o);

  /// min |S| over nonzero components (theta-degree filtration level);
  /// returns k+1 for zero elements
  int theta_degree(double tol = 0.0) const;
  /// part of total parity 0 / 1
  ModelElement even_part() const;
  ModelElement odd_part() const;
  ModelElement alpha() const;  // grading morphism
  int parity(double tol = 1e-13) const;

  double norm_max() const;
  bool is_zero(double tol) const { return norm_max() <= tol; }
  void prune(double tol = 0.0);

  std::vector<cx> flat() const;  // fixed-layout flattening over all monomials
  std::string key() const;

private:
  const ModelElement& check(const ModelElement& o) const;

  int p_ = 0, q_ = 0, k_ = 0;
  std::map<uint32_t, SuperMatrix> comps_;
};

inline ModelElement operator*(cx s, const ModelElement& m) { return m * s; }

ModelElement graded_commutator(const ModelElement& a, const ModelElement& b);

}  // namespace scc
