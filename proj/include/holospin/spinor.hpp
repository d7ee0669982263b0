#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holospin/clifford.hpp"
#include "holospin/numfield.hpp"

namespace holospin {

/// Sign tuple (eps_m, ..., eps_1) indexing the tensor basis u(eps_m) x ... x
/// u(eps_1) of the spinor module, stored most significant first. Coordinate
/// index: sum of 2^(j-1) over the j with eps_j = -1, so u(+1,...,+1) is
/// coordinate 0 and eps_1 drives the lowest bit.
class EpsilonTuple {
 public:
  explicit EpsilonTuple(std::vector<int> eps);
  static EpsilonTuple from_index(std::size_t index, std::size_t m);

  std::size_t m() const { return eps_.size(); }
  std::size_t index() const;
  int eps(std::size_t j) const { return eps_.at(eps_.size() - j); }  // 1-based from the right
  const std::vector<int>& signs() const { return eps_; }             // eps_m first
  int product() const;
  EpsilonTuple negated() const;

  bool operator==(const EpsilonTuple& o) const { return eps_ == o.eps_; }
  bool operator!=(const EpsilonTuple& o) const { return !(*this == o); }

  std::string str() const;  // "(1,-1,...)" with eps_m first

 private:
  std::vector<int> eps_;
};

enum class SpinorBasis { u_tensor, standard };

/// Coordinate vector of a spinor, tagged with the basis the coordinates
/// refer to. The u_tensor basis is u(eps) = u(eps_m) x ... x u(eps_1) with
/// u(eps) = (1/sqrt2)(1, -eps i); standard is the plain coordinate basis.
struct Spinor {
  SpinorBasis basis;
  FieldVector coords;
};

/// Unit coordinate vector for u(eps), tagged u_tensor.
Spinor u_spinor(const EpsilonTuple& e);

Spinor u_to_standard(const Spinor& v);
Spinor standard_to_u(const Spinor& v);
/// Convert to the requested basis (identity when already there).
Spinor in_basis(const Spinor& v, SpinorBasis basis);

enum class Chirality { plus, minus, mixed };

/// Chirality grading for even n: plus when the spinor is supported only on
/// tuples with product +1, minus when only on product -1. Throws for odd n
/// and for the zero spinor.
Chirality chirality(const Signature& sig, const Spinor& v);

/// Indefinite scalar product i^(r(r-1)/2) (Phi(e_i1)...Phi(e_ir) u, v) with
/// i1 < ... < ir the timelike indices and (.,.) the Hermitian coordinate
/// product, conjugate linear in the second slot. Requires r >= 1.
FieldScalar inner(const CliffordRep& rep, const Spinor& u, const Spinor& v);

/// Dense matrix M of the product in standard coordinates:
/// inner(x, y) = conj(y)^t M x. Used for matrix-level invariance checks.
FieldMatrix inner_form_matrix(const CliffordRep& rep);

/// Closed form of the product on basis spinors for standard(r,s), r = 2r'
/// even: 0 for distinct tuples, else eps_1 ... eps_r'. Throws for odd r.
FieldScalar inner_closed_standard(std::size_t r, std::size_t s, const EpsilonTuple& a,
                                  const EpsilonTuple& b);

/// Closed form for interleaved(r): 0 unless b = -a; else (-i)^r' eps_1
/// eps_3 ... eps_(r-1) when r = 2r', and -i^r' eps_2 eps_4 ... eps_(r-1)
/// when r = 2r'+1, signs read from a.
FieldScalar inner_closed_interleaved(std::size_t r, const EpsilonTuple& a, const EpsilonTuple& b);

enum class CausalTag { spacelike, timelike, isotropic, non_real_norm };

/// Tag from a self-product: positive rational is spacelike, negative
/// timelike, zero isotropic, anything else non_real_norm.
CausalTag causal_tag(const FieldScalar& norm);

const char* causal_tag_name(CausalTag t);
const char* chirality_name(Chirality c);

/// Pairwise products of a spinor list plus per-vector causal tags.
struct GramReport {
  FieldMatrix gram;
  std::vector<CausalTag> tags;
};

GramReport gram_report(const CliffordRep& rep, const std::vector<Spinor>& basis);

}  // namespace holospin
