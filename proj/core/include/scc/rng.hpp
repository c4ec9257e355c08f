#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "scc/model_element.hpp"
#include "scc/super_matrix.hpp"

namespace scc {

/// Deterministic per-case randomness: the stream depends only on
/// (seed, case id), never on scheduling.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  Rng(uint64_t seed, const std::string& case_id);

  double uniform(double lo, double hi);
  double gauss() { return normal_(eng_); }
  int uniform_int(int lo, int hi);  // inclusive

  /// entries: independent small integers in [-range, range]
  SuperMatrix int_matrix(int p, int q, int range = 3, bool complex_entries = false);
  /// entries: standard complex gaussians
  SuperMatrix gauss_matrix(int p, int q);
  SuperMatrix hermitian(int p, int q);
  /// odd Hermitian (off-diagonal blocks only)
  SuperMatrix odd_hermitian(int p, int q);
  /// homogeneous of requested parity
  SuperMatrix homogeneous(int p, int q, int parity, bool integer = false, int range = 3);

  ModelElement model_element(int p, int q, int k, int max_terms = 3,
                             bool integer = false, int range = 2);

private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace scc
