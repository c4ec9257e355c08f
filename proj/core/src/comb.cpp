#include "scc/comb.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

int CombClass::sigma_at(int p) const {
  for (size_t j = 0; j < L.size(); ++j)
    if (L[j] == p) return (sigma >> j) & 1;
  throw std::invalid_argument("CombClass: sigma queried outside L(K)");
}

std::vector<std::vector<int>> enumerate_S(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({0});
    return out;
  }
  // choose the interior; reject complements with consecutive integers
  for (uint32_t m = 0; m < (1u << (n - 1)); ++m) {
    bool ok = true;
    for (int j = 0; j + 1 <= n - 2; ++j)
      if (!((m >> j) & 1) && !((m >> (j + 1)) & 1)) ok = false;
    if (n >= 2 && !ok) continue;
    std::vector<int> K{0};
    for (int j = 0; j < n - 1; ++j)
      if ((m >> j) & 1) K.push_back(j + 1);
    K.push_back(n);
    out.push_back(std::move(K));
  }
  return out;
}

int nu_of(const std::vector<int>& K, int n) {
  if (K.size() == 1) return 0;  // K = {0}, n = 0
  bool has1 = std::find(K.begin(), K.end(), 1) != K.end();
  std::vector<int> kp;
  int shift = has1 ? 1 : 2;
  for (int p : K)
    if (p != 0) kp.push_back(p - shift);
  return nu_of(kp, n - shift) + (has1 ? n + 1 : 1);
}

std::vector<CombClass> enumerate_classes(int n) {
  std::vector<CombClass> out;
  for (auto& K : enumerate_S(n)) {
    std::vector<int> L;
    for (int p : K)
      if (std::find(K.begin(), K.end(), p + 1) != K.end()) L.push_back(p);
    int nu = nu_of(K, n);
    for (uint32_t sigma = 0; sigma < (1u << L.size()); ++sigma) {
      CombClass cls;
      cls.n = n;
      cls.K = K;
      cls.L = L;
      cls.sigma = sigma;
      cls.nu = nu;
      int ssum = 0;
      for (size_t j = 0; j < L.size(); ++j) ssum += (sigma >> j) & 1;
      cls.sign = (ssum + nu) & 1;
      cls.i.assign(n + 1, 0);
      for (size_t j = 0; j < L.size(); ++j) {
        int p = L[j];
        // p, p+1 in K; sigma_p = 0 feeds k_p, sigma_p = 1 feeds j_{p+1}
        if ((sigma >> j) & 1)
          cls.i[p + 1] += 1;
        else
          cls.i[p] += 1;
      }
      out.push_back(std::move(cls));
    }
  }
  return out;
}

std::vector<int> phi_set(const CombClass& cls) {
  std::vector<int> out;
  for (int p = 0; p <= cls.n; ++p)
    if (cls.i[p] == 1) out.push_back(p);
  return out;
}

bool claim1_solvable(const std::vector<int>& K, const std::vector<int>& L, int n) {
  std::vector<int> comp;
  for (int p = 0; p <= n; ++p)
    if (std::find(L.begin(), L.end(), p) == L.end()) comp.push_back(p);
  if (comp.size() % 2 != 1) return false;  // n - |L| must be even
  for (size_t j = 0; j < comp.size(); j += 2)
    if (std::find(K.begin(), K.end(), comp[j]) == K.end()) return false;
  return true;
}

}  // namespace scc
