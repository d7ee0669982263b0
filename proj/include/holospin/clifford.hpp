#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holospin/numfield.hpp"

namespace holospin {

/// Diagonal signature of a nondegenerate form. kappa(j) = <e_j, e_j> is -1
/// on timelike directions, +1 on spacelike ones; r counts the -1 entries.
class Signature {
 public:
  explicit Signature(std::vector<int> kappa);

  /// r entries of -1 followed by s entries of +1.
  static Signature standard(std::size_t r, std::size_t s);
  /// p blocks of (-1, +1), n = 2p.
  static Signature interleaved(std::size_t p);

  std::size_t n() const { return kappa_.size(); }
  std::size_t r() const { return r_; }
  std::size_t s() const { return kappa_.size() - r_; }
  int kappa(std::size_t k) const { return kappa_.at(k - 1); }  // 1-based
  const std::vector<int>& kappas() const { return kappa_; }
  /// 1-based positions with kappa = -1, ascending.
  std::vector<std::size_t> timelike_indices() const;
  std::vector<std::size_t> spacelike_indices() const;
  bool is_standard() const;

  bool operator==(const Signature& o) const { return kappa_ == o.kappa_; }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<int> kappa_;
  std::size_t r_;
};

/// Square matrix with exactly one nonzero entry per row and per column,
/// stored as that column index and value per row. Clifford generators and
/// their products stay in this class, so composition and vector application
/// cost O(dim) instead of O(dim^2).
class GeneratorAction {
 public:
  explicit GeneratorAction(std::size_t dim);  // identity
  GeneratorAction(std::vector<std::size_t> col, std::vector<FieldScalar> val);

  std::size_t dim() const { return col_.size(); }
  std::size_t col(std::size_t row) const { return col_[row]; }
  const FieldScalar& val(std::size_t row) const { return val_[row]; }

  FieldVector apply(const FieldVector& v) const;
  /// Matrix product this * o.
  GeneratorAction operator*(const GeneratorAction& o) const;
  GeneratorAction operator*(const FieldScalar& s) const;
  GeneratorAction operator-() const;
  bool operator==(const GeneratorAction& o) const;
  bool operator!=(const GeneratorAction& o) const { return !(*this == o); }

  FieldMatrix to_matrix() const;

 private:
  std::vector<std::size_t> col_;
  std::vector<FieldScalar> val_;
};

/// Kronecker product; rightmost factor varies fastest, matching kron() on
/// dense matrices.
GeneratorAction kron(const GeneratorAction& a, const GeneratorAction& b);

/// Spinor representation of the Clifford algebra of a signature, acting on
/// C^(2^m) with m = floor(n/2). Generator k is the action of e_k.
///
/// Even n = 2m: e_(2k-1) and e_(2k) map to tau * E x..x E x U x T x..x T
/// and tau * E x..x E x V x T x..x T with k-1 trailing T factors, where
/// E = Id, T = [[0,-i],[i,0]], U = [[i,0],[0,-i]], V = [[0,i],[i,0]] and
/// tau_k = i when kappa_k = -1, else 1. Odd n: the first n-1 generators are
/// those of the length n-1 prefix signature and e_n maps to tau_n * i * T^xm
/// (the first component of the split; the second is dropped).
class CliffordRep {
 public:
  explicit CliffordRep(Signature sig);

  const Signature& signature() const { return sig_; }
  std::size_t m() const { return sig_.n() / 2; }
  std::size_t dim() const { return std::size_t{1} << m(); }
  const FieldScalar& tau(std::size_t k) const { return tau_.at(k - 1); }   // 1-based
  const GeneratorAction& action(std::size_t k) const { return gens_.at(k - 1); }
  FieldMatrix generator(std::size_t k) const { return action(k).to_matrix(); }

 private:
  Signature sig_;
  std::vector<GeneratorAction> gens_;
  std::vector<FieldScalar> tau_;
};

CliffordRep build_rep(Signature sig);

/// Phi(e_k) . v
FieldVector clifford_mult(const CliffordRep& rep, std::size_t k, const FieldVector& v);

/// Element of the orthogonal Lie algebra of a signature: rational entries
/// and X^t G + G X = 0 for G = diag(kappa). Construct through so_matrix(),
/// which validates both.
struct SoMatrix {
  FieldMatrix mat;
  Signature sig;
};

SoMatrix so_matrix(FieldMatrix x, Signature sig);

/// Standard basis element E_kl = -kappa_l D_kl + kappa_k D_lk, 1 <= k < l <= n.
SoMatrix e_matrix(const Signature& sig, std::size_t k, std::size_t l);

using SpinMatrix = FieldMatrix;

/// One summand coeff * Phi(e_k) Phi(e_l) of a lifted Lie algebra element.
struct LiftTerm {
  FieldScalar coeff;
  std::size_t k, l;  // 1-based, k < l
};

/// Decomposition X = sum a_kl E_kl read off entrywise (a_kl = -kappa_l X[k,l]),
/// halved: lift(X) = sum (a_kl / 2) Phi(e_k) Phi(e_l). Zero terms omitted.
std::vector<LiftTerm> lift_terms(const SoMatrix& x);

/// Image of X under the differential of the spin double cover.
SpinMatrix lift(const CliffordRep& rep, const SoMatrix& x);

/// lift(X) . v without materializing the matrix.
FieldVector lift_apply(const CliffordRep& rep, const std::vector<LiftTerm>& terms,
                       const FieldVector& v);

}  // namespace holospin
