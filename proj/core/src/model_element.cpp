#include "scc/model_element.hpp"

#include <algorithm>

namespace scc {

int shuffle_sign(uint32_t s, uint32_t t) {
  int inv = 0;
  for (int i = 0; i < 32; ++i)
    if (t & (1u << i)) inv += __builtin_popcount(s >> (i + 1));
  return (inv & 1) ? -1 : 1;
}

ModelElement ModelElement::unit(int p, int q, int k) {
  ModelElement e(p, q, k);
  e.comps_.emplace(0u, SuperMatrix::identity(p, q));
  return e;
}

ModelElement ModelElement::from_matrix(const SuperMatrix& a, int k, uint32_t mono) {
  ModelElement e(a.dim_even(), a.dim_odd(), k);
  e.add_term(mono, a);
  return e;
}

SuperMatrix ModelElement::coeff(uint32_t mono) const {
  auto it = comps_.find(mono);
  if (it != comps_.end()) return it->second;
  return SuperMatrix(p_, q_);
}

void ModelElement::add_term(uint32_t mono, const SuperMatrix& a) {
  auto it = comps_.find(mono);
  if (it == comps_.end())
    comps_.emplace(mono, a);
  else
    it->second = it->second + a;
}

const ModelElement& ModelElement::check(const ModelElement& o) const {
  if (p_ != o.p_ || q_ != o.q_ || k_ != o.k_)
    throw std::invalid_argument("ModelElement: shape mismatch");
  return *this;
}

ModelElement ModelElement::operator+(const ModelElement& o) const {
  check(o);
  ModelElement r = *this;
  for (const auto& [mono, a] : o.comps_) r.add_term(mono, a);
  return r;
}

ModelElement ModelElement::operator-(const ModelElement& o) const {
  return *this + (-o);
}

ModelElement ModelElement::operator-() const {
  ModelElement r(p_, q_, k_);
  for (const auto& [mono, a] : comps_) r.comps_.emplace(mono, -a);
  return r;
}

ModelElement ModelElement::operator*(const ModelElement& o) const {
  check(o);
  ModelElement r(p_, q_, k_);
  for (const auto& [s, a] : comps_)
    for (const auto& [t, b] : o.comps_) {
      if (s & t) continue;  // nilpotent generators
      int sh = shuffle_sign(s, t);
      // theta_S moves past the matrix part of b: sign (-1)^{|S| db}
      SuperMatrix be = b.even_part(), bo = b.odd_part();
      int sp = popcount_parity(s);
      SuperMatrix prod = a * be * cx(double(sh)) +
                         a * bo * cx(double(sp ? -sh : sh));
      r.add_term(s | t, prod);
    }
  return r;
}

ModelElement ModelElement::operator*(cx c) const {
  ModelElement r(p_, q_, k_);
  for (const auto& [mono, a] : comps_) r.comps_.emplace(mono, a * c);
  return r;
}

ModelElement& ModelElement::operator+=(const ModelElement& o) {
  *this = *this + o;
  return *this;
}

int ModelElement::theta_degree(double tol) const {
  int deg = k_ + 1;
  for (const auto& [mono, a] : comps_)
    if (a.norm_max() > tol) deg = std::min(deg, __builtin_popcount(mono));
  return deg;
}

ModelElement ModelElement::even_part() const {
  ModelElement r(p_, q_, k_);
  for (const auto& [mono, a] : comps_) {
    SuperMatrix part = popcount_parity(mono) ? a.odd_part() : a.even_part();
    r.comps_.emplace(mono, part);
  }
  r.prune();
  return r;
}

ModelElement ModelElement::odd_part() const {
  ModelElement r(p_, q_, k_);
  for (const auto& [mono, a] : comps_) {
    SuperMatrix part = popcount_parity(mono) ? a.even_part() : a.odd_part();
    r.comps_.emplace(mono, part);
  }
  r.prune();
  return r;
}

ModelElement ModelElement::alpha() const {
  return even_part() - odd_part();
}

int ModelElement::parity(double tol) const {
  double scale = std::max(norm_max(), 1.0);
  bool he = !even_part().is_zero(tol * scale);
  bool ho = !odd_part().is_zero(tol * scale);
  if (he && ho) return -1;
  return ho ? 1 : 0;
}

double ModelElement::norm_max() const {
  double m = 0.0;
  for (const auto& [mono, a] : comps_) m = std::max(m, a.norm_max());
  return m;
}

void ModelElement::prune(double tol) {
  for (auto it = comps_.begin(); it != comps_.end();)
    it = it->second.is_zero(tol) ? comps_.erase(it) : std::next(it);
}

std::vector<cx> ModelElement::flat() const {
  const int n = dim();
  std::vector<cx> v;
  v.reserve((size_t(1) << k_) * n * n);
  for (uint32_t mono = 0; mono < (1u << k_); ++mono) {
    auto it = comps_.find(mono);
    if (it == comps_.end()) {
      v.insert(v.end(), size_t(n) * n, cx(0.0));
    } else {
      const auto& d = it->second.mat().data();
      v.insert(v.end(), d.begin(), d.end());
    }
  }
  return v;
}

std::string ModelElement::key() const {
  std::string s;
  for (const cx& v : flat()) {
    double re = v.real() == 0.0 ? 0.0 : v.real();
    double im = v.imag() == 0.0 ? 0.0 : v.imag();
    s.append(reinterpret_cast<const char*>(&re), sizeof(re));
    s.append(reinterpret_cast<const char*>(&im), sizeof(im));
  }
  return s;
}

ModelElement graded_commutator(const ModelElement& a, const ModelElement& b) {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0)
    throw std::invalid_argument("graded_commutator: operands must be homogeneous");
  double sign = (pa == 1 && pb == 1) ? 1.0 : -1.0;
  return a * b + (b * a) * cx(sign);
}

}  // namespace scc
