#pragma once

#include <cstdint>
#include <vector>

namespace scc {

/// Combinatorial class (K, sigma) indexing one term of the heat expansion.
/// K holds the exponential slots; sigma (indexed by L(K) = {p in K : p+1 in K})
/// resolves derivative placements; i_p are the slot exponents.
struct CombClass {
  int n = 0;
  std::vector<int> K;      // sorted, contains 0 and n
  std::vector<int> L;      // L(K)
  uint32_t sigma = 0;      // bit j is sigma_{L[j]}
  std::vector<int> i;      // exponents i_0..i_n, in {0,1,2}
  int nu = 0;              // nu_K
  int sign = 0;            // |(K,sigma)| mod 2

  int sigma_at(int p) const;  // sigma_p for p in L(K)
};

/// All K in S_n: 0,n in K and the complement has no consecutive integers.
std::vector<std::vector<int>> enumerate_S(int n);

/// nu_K by the recursion nu_{{0}} = 0; nu_K = nu_{K^p} + 1 when 1 is absent
/// (K^p = (K \ {0}) - 2), nu_K = nu_{K^p} + n + 1 when 1 is present
/// (K^p = (K \ {0}) - 1).
int nu_of(const std::vector<int>& K, int n);

/// All classes of C_n with exponents and signs filled in.
std::vector<CombClass> enumerate_classes(int n);

/// phi(K, sigma) = {p : i_p = 1}
std::vector<int> phi_set(const CombClass& cls);

/// Predicted solvability of phi(K, sigma) = L for given K: order
/// {0..n} \ L = {p_0 < ... < p_{2l}}; solvable iff M(L) = {p_0, p_2, ...}
/// is contained in K.
bool claim1_solvable(const std::vector<int>& K, const std::vector<int>& L, int n);

}  // namespace scc
