#include "scc/rng.hpp"

#include <functional>

namespace scc {

Rng::Rng(uint64_t seed, const std::string& case_id)
    : eng_(seed ^ (std::hash<std::string>{}(case_id) * 0x9e3779b97f4a7c15ull)) {}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(eng_);
}

int Rng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

SuperMatrix Rng::int_matrix(int p, int q, int range, bool complex_entries) {
  SuperMatrix m(p, q);
  for (int i = 0; i < p + q; ++i)
    for (int j = 0; j < p + q; ++j) {
      double re = uniform_int(-range, range);
      double im = complex_entries ? uniform_int(-range, range) : 0.0;
      m(i, j) = cx(re, im);
    }
  return m;
}

SuperMatrix Rng::gauss_matrix(int p, int q) {
  SuperMatrix m(p, q);
  for (int i = 0; i < p + q; ++i)
    for (int j = 0; j < p + q; ++j) m(i, j) = cx(gauss(), gauss());
  return m;
}

SuperMatrix Rng::hermitian(int p, int q) {
  SuperMatrix m = gauss_matrix(p, q);
  return (m + m.adjoint()) * cx(0.5);
}

SuperMatrix Rng::odd_hermitian(int p, int q) {
  return hermitian(p, q).odd_part();
}

SuperMatrix Rng::homogeneous(int p, int q, int parity, bool integer, int range) {
  SuperMatrix m = integer ? int_matrix(p, q, range) : gauss_matrix(p, q);
  return parity ? m.odd_part() : m.even_part();
}

ModelElement Rng::model_element(int p, int q, int k, int max_terms, bool integer,
                                int range) {
  ModelElement e(p, q, k);
  int terms = uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    uint32_t mono = static_cast<uint32_t>(uniform_int(0, (1 << k) - 1));
    SuperMatrix m = integer ? int_matrix(p, q, range) : gauss_matrix(p, q);
    e.add_term(mono, m);
  }
  return e;
}

}  // namespace scc
