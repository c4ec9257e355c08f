#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scc/linalg.hpp"

namespace scc {

// Tensor chains a_0 (x) ... (x) a_n over a graded algebra E and the
// universal differential algebra Omega(E) = sum A+ (x) A^{(x)n}.  E must
// provide: ring ops, parity()/even_part()/odd_part()/alpha(), norm_max(),
// is_zero(tol), flat(), key().

template <class E>
struct ChainTerm {
  cx coeff;
  std::vector<E> factors;  // n+1 homogeneous factors
};

template <class E>
struct Chain {
  std::vector<ChainTerm<E>> terms;

  int degree() const {
    return terms.empty() ? -1 : static_cast<int>(terms.front().factors.size()) - 1;
  }
};

enum class BoundaryVariant { graded, ev };

namespace detail {

template <class E>
int require_parity(const E& e) {
  int p = e.parity();
  if (p < 0) throw std::invalid_argument("chain factor is not homogeneous");
  return p;
}

}  // namespace detail

/// Splits every factor into homogeneous parts, expanding multilinearly.
template <class E>
Chain<E> make_chain(cx coeff, const std::vector<E>& factors) {
  Chain<E> c;
  c.terms.push_back({coeff, {}});
  for (const E& f : factors) {
    std::vector<ChainTerm<E>> next;
    E ev = f.even_part(), od = f.odd_part();
    for (const auto& t : c.terms) {
      if (!ev.is_zero(0.0)) {
        auto t2 = t;
        t2.factors.push_back(ev);
        next.push_back(std::move(t2));
      }
      if (!od.is_zero(0.0)) {
        auto t2 = t;
        t2.factors.push_back(od);
        next.push_back(std::move(t2));
      }
    }
    c.terms = std::move(next);
  }
  // Degenerate case: some factor was exactly zero.
  std::erase_if(c.terms, [&](const ChainTerm<E>& t) {
    return t.factors.size() != factors.size();
  });
  return c;
}

template <class E>
Chain<E> chain_add(const Chain<E>& a, const Chain<E>& b) {
  Chain<E> r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

template <class E>
Chain<E> chain_scale(const Chain<E>& a, cx s) {
  Chain<E> r = a;
  for (auto& t : r.terms) t.coeff *= s;
  return r;
}

/// Hochschild boundary.  graded: wrap term (-1)^{n+nu} a_n a_0 (x) ... with
/// nu = da_n (da_0 + ... + da_{n-1});  ev: wrap term (-1)^n alpha(a_n) a_0 (x) ...
template <class E>
Chain<E> boundary(const Chain<E>& c, BoundaryVariant variant) {
  if (c.degree() < 1)
    throw std::invalid_argument("boundary: degree-0 chain has no boundary");
  Chain<E> r;
  for (const auto& t : c.terms) {
    const int n = static_cast<int>(t.factors.size()) - 1;
    for (int j = 0; j < n; ++j) {
      ChainTerm<E> nt;
      nt.coeff = t.coeff * ((j & 1) ? -1.0 : 1.0);
      for (int i = 0; i < j; ++i) nt.factors.push_back(t.factors[i]);
      nt.factors.push_back(t.factors[j] * t.factors[j + 1]);
      for (int i = j + 2; i <= n; ++i) nt.factors.push_back(t.factors[i]);
      r.terms.push_back(std::move(nt));
    }
    ChainTerm<E> wrap;
    if (variant == BoundaryVariant::graded) {
      int nu = 0;
      int pn = detail::require_parity(t.factors[n]);
      for (int i = 0; i < n; ++i) nu += pn * detail::require_parity(t.factors[i]);
      wrap.coeff = t.coeff * (((n + nu) & 1) ? -1.0 : 1.0);
      wrap.factors.push_back(t.factors[n] * t.factors[0]);
    } else {
      wrap.coeff = t.coeff * ((n & 1) ? -1.0 : 1.0);
      wrap.factors.push_back(t.factors[n].alpha() * t.factors[0]);
    }
    for (int i = 1; i < n; ++i) wrap.factors.push_back(t.factors[i]);
    r.terms.push_back(std::move(wrap));
  }
  return r;
}

/// t(a_0 (x) ... (x) a_n) = (-1)^{n+nu} a_n (x) a_0 (x) ... (x) a_{n-1}
template <class E>
Chain<E> cyclic_t(const Chain<E>& c) {
  Chain<E> r;
  for (const auto& t : c.terms) {
    const int n = static_cast<int>(t.factors.size()) - 1;
    int nu = 0;
    int pn = detail::require_parity(t.factors[n]);
    for (int i = 0; i < n; ++i) nu += pn * detail::require_parity(t.factors[i]);
    ChainTerm<E> nt;
    nt.coeff = t.coeff * (((n + nu) & 1) ? -1.0 : 1.0);
    nt.factors.push_back(t.factors[n]);
    for (int i = 0; i < n; ++i) nt.factors.push_back(t.factors[i]);
    r.terms.push_back(std::move(nt));
  }
  return r;
}

/// N = 1 + t + ... + t^n
template <class E>
Chain<E> norm_operator(const Chain<E>& c) {
  Chain<E> r = c;
  Chain<E> cur = c;
  const int n = c.degree();
  for (int j = 0; j < n; ++j) {
    cur = cyclic_t(cur);
    r = chain_add(r, cur);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Universal forms.  A term is  coeff * a0 da1 ... dan  with a0 in the
// unitized algebra: has_a0 == false means the adjoined formal unit.

template <class E>
struct FormTerm {
  cx coeff;
  bool has_a0;
  std::optional<E> a0;       // engaged iff has_a0
  std::vector<E> dfactors;   // a1..an, homogeneous

  int degree() const { return static_cast<int>(dfactors.size()); }
  int parity() const {
    int p = has_a0 ? detail::require_parity(*a0) : 0;
    for (const E& f : dfactors) p += detail::require_parity(f);
    return (p + degree()) & 1;
  }
};

template <class E>
struct Form {
  std::vector<FormTerm<E>> terms;
};

template <class E>
Form<E> form_add(const Form<E>& a, const Form<E>& b) {
  Form<E> r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

template <class E>
Form<E> form_scale(const Form<E>& a, cx s) {
  Form<E> r = a;
  for (auto& t : r.terms) t.coeff *= s;
  return r;
}

/// Phi(a_0 (x) ... (x) a_n) = (-1)^mu a_0 da_1 ... da_n,
/// mu = sum_j (n-j) da_j mod 2.
template <class E>
Form<E> phi_map(const Chain<E>& c) {
  Form<E> r;
  for (const auto& t : c.terms) {
    const int n = static_cast<int>(t.factors.size()) - 1;
    int mu = 0;
    for (int j = 0; j <= n; ++j)
      mu += (n - j) * detail::require_parity(t.factors[j]);
    FormTerm<E> ft;
    ft.coeff = t.coeff * ((mu & 1) ? -1.0 : 1.0);
    ft.has_a0 = true;
    ft.a0 = t.factors[0];
    ft.dfactors.assign(t.factors.begin() + 1, t.factors.end());
    r.terms.push_back(std::move(ft));
  }
  return r;
}

namespace detail {

// da * Y, using (da)b = d(ab) - (-1)^{da} a db.
template <class E>
void mul_d_front(const E& a, const FormTerm<E>& y, std::vector<FormTerm<E>>& out) {
  if (!y.has_a0) {
    FormTerm<E> t;
    t.coeff = y.coeff;
    t.has_a0 = false;
    t.dfactors.reserve(y.dfactors.size() + 1);
    t.dfactors.push_back(a);
    t.dfactors.insert(t.dfactors.end(), y.dfactors.begin(), y.dfactors.end());
    out.push_back(std::move(t));
    return;
  }
  {
    FormTerm<E> t;  // d(a b0) db1 ...
    t.coeff = y.coeff;
    t.has_a0 = false;
    t.dfactors.push_back(a * *y.a0);
    t.dfactors.insert(t.dfactors.end(), y.dfactors.begin(), y.dfactors.end());
    out.push_back(std::move(t));
  }
  {
    FormTerm<E> t;  // -(-1)^{da} a db0 db1 ...
    int pa = require_parity(a);
    t.coeff = y.coeff * ((pa & 1) ? 1.0 : -1.0);
    t.has_a0 = true;
    t.a0 = a;
    t.dfactors.push_back(*y.a0);
    t.dfactors.insert(t.dfactors.end(), y.dfactors.begin(), y.dfactors.end());
    out.push_back(std::move(t));
  }
}

template <class E>
void mul_terms(const FormTerm<E>& x, const FormTerm<E>& y, std::vector<FormTerm<E>>& out) {
  if (x.dfactors.empty()) {
    FormTerm<E> t = y;
    t.coeff *= x.coeff;
    if (x.has_a0) {
      if (y.has_a0)
        t.a0 = *x.a0 * *y.a0;
      else {
        t.has_a0 = true;
        t.a0 = *x.a0;
      }
    }
    out.push_back(std::move(t));
    return;
  }
  FormTerm<E> head = x;
  E last = head.dfactors.back();
  head.dfactors.pop_back();
  std::vector<FormTerm<E>> mid;
  mul_d_front(last, y, mid);
  for (auto& m : mid) mul_terms(head, m, out);
}

}  // namespace detail

/// Product of universal forms (Leibniz rewriting with Koszul signs).
template <class E>
Form<E> form_mul(const Form<E>& x, const Form<E>& y) {
  Form<E> r;
  for (const auto& tx : x.terms)
    for (const auto& ty : y.terms) detail::mul_terms(tx, ty, r.terms);
  return r;
}

/// d(a0 da1 ... dan) = da0 da1 ... dan; kills unit-led terms.
template <class E>
Form<E> form_d(const Form<E>& x) {
  Form<E> r;
  for (const auto& t : x.terms) {
    if (!t.has_a0) continue;
    FormTerm<E> nt;
    nt.coeff = t.coeff;
    nt.has_a0 = false;
    nt.dfactors.push_back(*t.a0);
    nt.dfactors.insert(nt.dfactors.end(), t.dfactors.begin(), t.dfactors.end());
    r.terms.push_back(std::move(nt));
  }
  return r;
}

/// Canonical form: lexicographic order on factor identities, coefficients
/// merged, small coefficients dropped.
template <class E>
void form_canonicalize(Form<E>& x, double coeff_tol = 1e-14) {
  std::map<std::string, FormTerm<E>> merged;
  double scale = 0.0;
  for (const auto& t : x.terms) scale = std::max(scale, std::abs(t.coeff));
  for (auto& t : x.terms) {
    std::string k;
    k.push_back(t.has_a0 ? '1' : '0');
    if (t.has_a0) k += t.a0->key();
    for (const E& f : t.dfactors) k += f.key();
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(std::move(k), std::move(t));
    else
      it->second.coeff += t.coeff;
  }
  x.terms.clear();
  for (auto& [k, t] : merged)
    if (std::abs(t.coeff) > coeff_tol * std::max(scale, 1.0)) x.terms.push_back(std::move(t));
}

// ---------------------------------------------------------------------------
// Dense tensor realizations, used to measure residuals of identities that
// only cancel across terms.

class DenseTensor {
public:
  void accumulate(cx coeff, const std::vector<std::vector<cx>>& slot_vectors);
  double norm_max() const;
  void axpy(cx s, const DenseTensor& o);

private:
  std::vector<cx> a_;
};

template <class E>
DenseTensor chain_tensor(const Chain<E>& c) {
  DenseTensor t;
  for (const auto& term : c.terms) {
    std::vector<std::vector<cx>> slots;
    for (const E& f : term.factors) slots.push_back(f.flat());
    t.accumulate(term.coeff, slots);
  }
  return t;
}

template <class E>
double chain_residual_norm(const Chain<E>& c) {
  return chain_tensor(c).norm_max();
}

/// Realizes a form as one tensor per (degree, unit-flag) sector and takes
/// the max-entry norm over all sectors.
template <class E>
double form_residual_norm(const Form<E>& x) {
  std::map<std::pair<int, bool>, DenseTensor> sectors;
  for (const auto& term : x.terms) {
    std::vector<std::vector<cx>> slots;
    if (term.has_a0) slots.push_back(term.a0->flat());
    for (const E& f : term.dfactors) slots.push_back(f.flat());
    if (slots.empty()) slots.push_back({cx(1.0)});  // pure unit scalar
    sectors[{term.degree(), term.has_a0}].accumulate(term.coeff, slots);
  }
  double m = 0.0;
  for (const auto& [k, t] : sectors) m = std::max(m, t.norm_max());
  return m;
}

template <class E>
double form_difference_norm(const Form<E>& x, const Form<E>& y) {
  return form_residual_norm(form_add(x, form_scale(y, cx(-1.0))));
}

}  // namespace scc
