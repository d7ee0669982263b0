#include "holospin/spinor.hpp"

#include <sstream>
#include <stdexcept>

namespace holospin {

EpsilonTuple::EpsilonTuple(std::vector<int> eps) : eps_(std::move(eps)) {
  if (eps_.empty()) throw std::invalid_argument("EpsilonTuple: empty");
  for (int e : eps_)
    if (e != 1 && e != -1) throw std::invalid_argument("EpsilonTuple: signs must be +1 or -1");
}

EpsilonTuple EpsilonTuple::from_index(std::size_t index, std::size_t m) {
  if (m == 0 || index >= (std::size_t{1} << m))
    throw std::invalid_argument("EpsilonTuple::from_index: out of range");
  std::vector<int> eps(m);
  for (std::size_t j = 1; j <= m; ++j)
    eps[m - j] = (index >> (j - 1)) & 1 ? -1 : 1;
  return EpsilonTuple(std::move(eps));
}

std::size_t EpsilonTuple::index() const {
  std::size_t idx = 0;
  for (std::size_t j = 1; j <= m(); ++j)
    if (eps(j) == -1) idx |= std::size_t{1} << (j - 1);
  return idx;
}

int EpsilonTuple::product() const {
  int p = 1;
  for (int e : eps_) p *= e;
  return p;
}

EpsilonTuple EpsilonTuple::negated() const {
  std::vector<int> eps(eps_);
  for (int& e : eps) e = -e;
  return EpsilonTuple(std::move(eps));
}

std::string EpsilonTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < eps_.size(); ++k) {
    if (k) os << ",";
    os << eps_[k];
  }
  os << ")";
  return os.str();
}

Spinor u_spinor(const EpsilonTuple& e) {
  FieldVector coords(std::size_t{1} << e.m());
  coords[e.index()] = FieldScalar(1);
  return {SpinorBasis::u_tensor, std::move(coords)};
}

namespace {

std::size_t log2_size(const FieldVector& v) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < v.size()) ++m;
  if ((std::size_t{1} << m) != v.size())
    throw std::invalid_argument("Spinor: coordinate length must be a power of two");
  return m;
}

// In-place tensor application of a 2x2 block at one bit position.
void butterfly(FieldVector& v, std::size_t bit, const FieldScalar& a00, const FieldScalar& a01,
               const FieldScalar& a10, const FieldScalar& a11) {
  std::size_t step = std::size_t{1} << bit;
  for (std::size_t base = 0; base < v.size(); base += 2 * step)
    for (std::size_t q = base; q < base + step; ++q) {
      FieldScalar x0 = v[q], x1 = v[q + step];
      v[q] = a00 * x0 + a01 * x1;
      v[q + step] = a10 * x0 + a11 * x1;
    }
}

}  // namespace

Spinor u_to_standard(const Spinor& v) {
  if (v.basis == SpinorBasis::standard) return v;
  // per slot: columns u(+1) = (1,-i)/sqrt2 and u(-1) = (1,i)/sqrt2
  FieldVector c = v.coords;
  std::size_t m = log2_size(c);
  FieldScalar h = FieldScalar::inv_sqrt2();
  FieldScalar hi = h * FieldScalar::i();
  for (std::size_t bit = 0; bit < m; ++bit) butterfly(c, bit, h, h, -hi, hi);
  return {SpinorBasis::standard, std::move(c)};
}

Spinor standard_to_u(const Spinor& v) {
  if (v.basis == SpinorBasis::u_tensor) return v;
  // inverse slot transform, the conjugate transpose of the above
  FieldVector c = v.coords;
  std::size_t m = log2_size(c);
  FieldScalar h = FieldScalar::inv_sqrt2();
  FieldScalar hi = h * FieldScalar::i();
  for (std::size_t bit = 0; bit < m; ++bit) butterfly(c, bit, h, hi, h, -hi);
  return {SpinorBasis::u_tensor, std::move(c)};
}

Spinor in_basis(const Spinor& v, SpinorBasis basis) {
  if (v.basis == basis) return v;
  return basis == SpinorBasis::standard ? u_to_standard(v) : standard_to_u(v);
}

Chirality chirality(const Signature& sig, const Spinor& v) {
  if (sig.n() % 2 != 0) throw std::domain_error("chirality: undefined for odd n");
  Spinor uv = in_basis(v, SpinorBasis::u_tensor);
  if (uv.coords.size() != std::size_t{1} << (sig.n() / 2))
    throw std::invalid_argument("chirality: dimension mismatch");
  bool plus = false, minus = false;
  for (std::size_t q = 0; q < uv.coords.size(); ++q) {
    if (uv.coords[q].is_zero()) continue;
    // product of signs is the bit-count parity of the index
    (__builtin_popcountll(q) % 2 == 0 ? plus : minus) = true;
  }
  if (plus && minus) return Chirality::mixed;
  if (plus) return Chirality::plus;
  if (minus) return Chirality::minus;
  throw std::invalid_argument("chirality: zero spinor");
}

FieldScalar inner(const CliffordRep& rep, const Spinor& u, const Spinor& v) {
  std::size_t r = rep.signature().r();
  if (r == 0)
    throw std::domain_error("inner: no timelike direction; use the definite Hermitian product");
  if (u.basis != v.basis) throw std::invalid_argument("inner: operands in different bases");
  FieldVector us = in_basis(u, SpinorBasis::standard).coords;
  FieldVector vs = in_basis(v, SpinorBasis::standard).coords;
  std::vector<std::size_t> tl = rep.signature().timelike_indices();
  // apply Phi(e_i1)...Phi(e_ir) to u, rightmost factor first
  for (auto it = tl.rbegin(); it != tl.rend(); ++it) us = rep.action(*it).apply(us);
  FieldScalar pref(1);
  for (std::size_t k = 0; k < (r * (r - 1) / 2) % 4; ++k) pref *= FieldScalar::i();
  return pref * vec_dot_herm(us, vs);
}

FieldMatrix inner_form_matrix(const CliffordRep& rep) {
  std::size_t r = rep.signature().r();
  if (r == 0)
    throw std::domain_error("inner: no timelike direction; use the definite Hermitian product");
  GeneratorAction prod(rep.dim());
  for (std::size_t idx : rep.signature().timelike_indices()) prod = prod * rep.action(idx);
  FieldScalar pref(1);
  for (std::size_t k = 0; k < (r * (r - 1) / 2) % 4; ++k) pref *= FieldScalar::i();
  return prod.to_matrix() * pref;
}

FieldScalar inner_closed_standard(std::size_t r, std::size_t s, const EpsilonTuple& a,
                                  const EpsilonTuple& b) {
  if (r % 2 != 0 || r == 0) throw std::domain_error("inner_closed_standard: r must be even");
  if (a.m() != b.m() || a.m() != (r + s) / 2)
    throw std::invalid_argument("inner_closed_standard: tuple length mismatch");
  if (a != b) return FieldScalar(0);
  int p = 1;
  for (std::size_t j = 1; j <= r / 2; ++j) p *= a.eps(j);
  return FieldScalar(p);
}

FieldScalar inner_closed_interleaved(std::size_t r, const EpsilonTuple& a, const EpsilonTuple& b) {
  if (a.m() != b.m() || a.m() != r)
    throw std::invalid_argument("inner_closed_interleaved: tuple length mismatch");
  if (b != a.negated()) return FieldScalar(0);
  FieldScalar i = FieldScalar::i();
  FieldScalar out(1);
  if (r % 2 == 0) {
    for (std::size_t k = 0; k < r / 2; ++k) out *= -i;
    for (std::size_t j = 1; j <= r - 1; j += 2) out *= FieldScalar(a.eps(j));
  } else {
    out = -out;
    for (std::size_t k = 0; k < r / 2; ++k) out *= i;
    for (std::size_t j = 2; j <= r - 1; j += 2) out *= FieldScalar(a.eps(j));
  }
  return out;
}

CausalTag causal_tag(const FieldScalar& norm) {
  if (norm.is_zero()) return CausalTag::isotropic;
  if (!norm.is_rational()) return CausalTag::non_real_norm;
  return sgn(norm.rational_value()) > 0 ? CausalTag::spacelike : CausalTag::timelike;
}

const char* causal_tag_name(CausalTag t) {
  switch (t) {
    case CausalTag::spacelike: return "spacelike";
    case CausalTag::timelike: return "timelike";
    case CausalTag::isotropic: return "isotropic";
    case CausalTag::non_real_norm: return "non-real-norm";
  }
  return "?";
}

const char* chirality_name(Chirality c) {
  switch (c) {
    case Chirality::plus: return "plus";
    case Chirality::minus: return "minus";
    case Chirality::mixed: return "mixed";
  }
  return "?";
}

GramReport gram_report(const CliffordRep& rep, const std::vector<Spinor>& basis) {
  std::size_t k = basis.size();
  GramReport rep_out{FieldMatrix(k, k), {}};
  std::vector<Spinor> std_basis;
  std_basis.reserve(k);
  for (const Spinor& v : basis) std_basis.push_back(in_basis(v, SpinorBasis::standard));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      rep_out.gram.at(i, j) = inner(rep, std_basis[i], std_basis[j]);
  rep_out.tags.reserve(k);
  for (std::size_t i = 0; i < k; ++i) rep_out.tags.push_back(causal_tag(rep_out.gram.at(i, i)));
  return rep_out;
}

}  // namespace holospin
