#include "holospin/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace holospin {

Signature::Signature(std::vector<int> kappa) : kappa_(std::move(kappa)), r_(0) {
  if (kappa_.empty()) throw std::invalid_argument("Signature: empty");
  for (int k : kappa_) {
    if (k != 1 && k != -1) throw std::invalid_argument("Signature: entries must be +1 or -1");
    if (k == -1) ++r_;
  }
}

Signature Signature::standard(std::size_t r, std::size_t s) {
  std::vector<int> kappa(r + s, 1);
  for (std::size_t j = 0; j < r; ++j) kappa[j] = -1;
  return Signature(std::move(kappa));
}

Signature Signature::interleaved(std::size_t p) {
  std::vector<int> kappa(2 * p);
  for (std::size_t j = 0; j < p; ++j) {
    kappa[2 * j] = -1;
    kappa[2 * j + 1] = 1;
  }
  return Signature(std::move(kappa));
}

std::vector<std::size_t> Signature::timelike_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < kappa_.size(); ++j)
    if (kappa_[j] == -1) out.push_back(j + 1);
  return out;
}

std::vector<std::size_t> Signature::spacelike_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < kappa_.size(); ++j)
    if (kappa_[j] == 1) out.push_back(j + 1);
  return out;
}

bool Signature::is_standard() const {
  for (std::size_t j = 1; j < kappa_.size(); ++j)
    if (kappa_[j - 1] == 1 && kappa_[j] == -1) return false;
  return true;
}

std::string Signature::str() const {
  std::ostringstream os;
  os << "(" << r() << "," << s() << ")";
  if (!is_standard()) {
    os << "[";
    for (int k : kappa_) os << (k == -1 ? '-' : '+');
    os << "]";
  }
  return os.str();
}

GeneratorAction::GeneratorAction(std::size_t dim) : col_(dim), val_(dim, FieldScalar(1)) {
  for (std::size_t k = 0; k < dim; ++k) col_[k] = k;
}

GeneratorAction::GeneratorAction(std::vector<std::size_t> col, std::vector<FieldScalar> val)
    : col_(std::move(col)), val_(std::move(val)) {
  if (col_.size() != val_.size()) throw std::invalid_argument("GeneratorAction: size mismatch");
  std::vector<bool> seen(col_.size(), false);
  for (std::size_t c : col_) {
    if (c >= col_.size() || seen[c])
      throw std::invalid_argument("GeneratorAction: columns must be a permutation");
    seen[c] = true;
  }
}

FieldVector GeneratorAction::apply(const FieldVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("GeneratorAction::apply: length mismatch");
  FieldVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!v[col_[i]].is_zero()) out[i] = val_[i] * v[col_[i]];
  return out;
}

GeneratorAction GeneratorAction::operator*(const GeneratorAction& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("GeneratorAction: dim mismatch");
  // (this*o)[i][j] = this[i][col_[i]] * o[col_[i]][j]
  std::vector<std::size_t> col(dim());
  std::vector<FieldScalar> val(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    col[i] = o.col_[col_[i]];
    val[i] = val_[i] * o.val_[col_[i]];
  }
  return GeneratorAction(std::move(col), std::move(val));
}

GeneratorAction GeneratorAction::operator*(const FieldScalar& s) const {
  std::vector<FieldScalar> val(dim());
  for (std::size_t i = 0; i < dim(); ++i) val[i] = val_[i] * s;
  return GeneratorAction(col_, std::move(val));
}

GeneratorAction GeneratorAction::operator-() const { return *this * FieldScalar(-1); }

bool GeneratorAction::operator==(const GeneratorAction& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    // a zero value makes the column index immaterial
    if (val_[i] != o.val_[i]) return false;
    if (!val_[i].is_zero() && col_[i] != o.col_[i]) return false;
  }
  return true;
}

FieldMatrix GeneratorAction::to_matrix() const {
  FieldMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m.at(i, col_[i]) = val_[i];
  return m;
}

GeneratorAction kron(const GeneratorAction& a, const GeneratorAction& b) {
  std::size_t db = b.dim();
  std::vector<std::size_t> col(a.dim() * db);
  std::vector<FieldScalar> val(a.dim() * db);
  for (std::size_t ia = 0; ia < a.dim(); ++ia)
    for (std::size_t ib = 0; ib < db; ++ib) {
      col[ia * db + ib] = a.col(ia) * db + b.col(ib);
      val[ia * db + ib] = a.val(ia) * b.val(ib);
    }
  return GeneratorAction(std::move(col), std::move(val));
}

namespace {

GeneratorAction base2(char which) {
  FieldScalar i = FieldScalar::i();
  switch (which) {
    case 'E': return GeneratorAction({0, 1}, {FieldScalar(1), FieldScalar(1)});
    case 'T': return GeneratorAction({1, 0}, {-i, i});
    case 'U': return GeneratorAction({0, 1}, {i, -i});
    case 'V': return GeneratorAction({1, 0}, {i, i});
    default: throw std::logic_error("base2");
  }
}

// E x..x E x M x T x..x T with the marked factor in slot m-k+1 from the left.
GeneratorAction slot_product(std::size_t m, std::size_t k, char mark) {
  GeneratorAction acc(1);
  for (std::size_t s = 0; s < m - k; ++s) acc = kron(acc, base2('E'));
  acc = kron(acc, base2(mark));
  for (std::size_t s = 0; s + 1 < k; ++s) acc = kron(acc, base2('T'));
  return acc;
}

}  // namespace

CliffordRep::CliffordRep(Signature sig) : sig_(std::move(sig)) {
  std::size_t n = sig_.n();
  std::size_t mm = n / 2;
  tau_.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    tau_.push_back(sig_.kappa(k) == -1 ? FieldScalar::i() : FieldScalar(1));

  gens_.reserve(n);
  for (std::size_t k = 1; k <= mm; ++k) {
    gens_.push_back(slot_product(mm, k, 'U') * tau_[2 * k - 2]);
    gens_.push_back(slot_product(mm, k, 'V') * tau_[2 * k - 1]);
  }
  if (n % 2 == 1) {
    GeneratorAction acc(1);
    for (std::size_t s = 0; s < mm; ++s) acc = kron(acc, base2('T'));
    gens_.push_back(acc * (tau_[n - 1] * FieldScalar::i()));
  }
}

CliffordRep build_rep(Signature sig) { return CliffordRep(std::move(sig)); }

FieldVector clifford_mult(const CliffordRep& rep, std::size_t k, const FieldVector& v) {
  return rep.action(k).apply(v);
}

SoMatrix so_matrix(FieldMatrix x, Signature sig) {
  std::size_t n = sig.n();
  if (x.rows() != n || x.cols() != n) throw std::invalid_argument("so_matrix: shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!x.at(i, j).is_rational()) throw std::invalid_argument("so_matrix: entries must be rational");
      // (X^t G + G X)[i][j] = X[j][i] kappa_j + kappa_i X[i][j], kappa 1-based
      FieldScalar skew = x.at(j, i) * FieldScalar(sig.kappa(j + 1)) +
                         FieldScalar(sig.kappa(i + 1)) * x.at(i, j);
      if (!skew.is_zero()) throw std::invalid_argument("so_matrix: not metric-skew");
    }
  return SoMatrix{std::move(x), std::move(sig)};
}

SoMatrix e_matrix(const Signature& sig, std::size_t k, std::size_t l) {
  if (k < 1 || l <= k || l > sig.n()) throw std::out_of_range("e_matrix: need 1 <= k < l <= n");
  FieldMatrix m(sig.n(), sig.n());
  m.at(k - 1, l - 1) = FieldScalar(-sig.kappa(l));
  m.at(l - 1, k - 1) = FieldScalar(sig.kappa(k));
  return SoMatrix{std::move(m), sig};
}

std::vector<LiftTerm> lift_terms(const SoMatrix& x) {
  std::vector<LiftTerm> terms;
  std::size_t n = x.sig.n();
  FieldScalar half(rational(1, 2));
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) {
      const FieldScalar& entry = x.mat.at(k - 1, l - 1);
      if (entry.is_zero()) continue;
      terms.push_back({entry * FieldScalar(-x.sig.kappa(l)) * half, k, l});
    }
  return terms;
}

SpinMatrix lift(const CliffordRep& rep, const SoMatrix& x) {
  if (x.sig != rep.signature()) throw std::invalid_argument("lift: signature mismatch");
  FieldMatrix out(rep.dim(), rep.dim());
  for (const LiftTerm& t : lift_terms(x)) {
    GeneratorAction prod = rep.action(t.k) * rep.action(t.l);
    for (std::size_t i = 0; i < prod.dim(); ++i) out.at(i, prod.col(i)) += t.coeff * prod.val(i);
  }
  return out;
}

FieldVector lift_apply(const CliffordRep& rep, const std::vector<LiftTerm>& terms,
                       const FieldVector& v) {
  FieldVector out(v.size());
  for (const LiftTerm& t : terms) {
    FieldVector w = rep.action(t.k).apply(rep.action(t.l).apply(v));
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!w[i].is_zero()) out[i] += t.coeff * w[i];
  }
  return out;
}

}  // namespace holospin
