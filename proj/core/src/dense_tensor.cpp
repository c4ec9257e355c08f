#include "scc/chain.hpp"

#include <stdexcept>

namespace scc {

void DenseTensor::accumulate(cx coeff, const std::vector<std::vector<cx>>& slot_vectors) {
  size_t total = 1;
  for (const auto& s : slot_vectors) total *= s.size();
  if (a_.empty()) a_.assign(total, cx(0.0));
  if (a_.size() != total)
    throw std::invalid_argument("DenseTensor: inconsistent slot shapes");

  // Kronecker accumulation, outermost slot varies slowest.
  std::vector<cx> cur{coeff};
  for (const auto& s : slot_vectors) {
    std::vector<cx> next(cur.size() * s.size());
    size_t idx = 0;
    for (const cx& c : cur)
      for (const cx& v : s) next[idx++] = c * v;
    cur = std::move(next);
  }
  for (size_t i = 0; i < total; ++i) a_[i] += cur[i];
}

double DenseTensor::norm_max() const {
  double m = 0.0;
  for (const cx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

void DenseTensor::axpy(cx s, const DenseTensor& o) {
  if (a_.empty()) a_.assign(o.a_.size(), cx(0.0));
  if (a_.size() != o.a_.size())
    throw std::invalid_argument("DenseTensor: size mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += s * o.a_[i];
}

}  // namespace scc
