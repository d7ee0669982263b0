#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "holospin/clifford.hpp"

namespace holospin {

/// The holonomy groups whose fixed-spinor spaces the engine computes: the
/// classical series over R, C and H together with their indefinite real
/// forms, and the exceptional form stabilizers.
enum class Family {
  SO0,
  U,
  SU,
  Sp,
  SpSp1,
  SpR_SL2R,
  SpC_SL2C,
  SOC,
  G2,
  G2star,
  G2C,
  Spin7,
  Spin43,
  Spin7C,
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
/// Parses the lower-case mnemonic ("su", "spr_sl2r", ...); throws
/// std::invalid_argument on unknown names.
Family family_from_name(std::string name);
/// Free parameters of the family: 2 for the (p,q) series, 1 for the
/// single-parameter series, 0 for the exceptional groups.
int family_arity(Family f);

/// A group from the list with its parameters; unused parameters stay 0.
struct HolonomyId {
  Family family;
  int p = 0;
  int q = 0;
};

/// Throws std::invalid_argument naming the violated parameter bound.
void validate(const HolonomyId& id);
Signature signature_of(const HolonomyId& id);
/// "SU(1,2)", "Sp(1,1)*Sp(1)", "Spin(4,3)", ...
std::string display_name(const HolonomyId& id);

/// Entrywise x + iy -> [[x, -y], [y, x]], doubling both dimensions. Entries
/// must lie in Q(i).
FieldMatrix realify(const FieldMatrix& a);

/// Quaternion matrix A = Z + W j held as two complex parts of one shape.
struct QuaternionMatrix {
  FieldMatrix z, w;
};

/// Validates matching shapes and Q(i) entries.
QuaternionMatrix quaternion_matrix(FieldMatrix z, FieldMatrix w);

/// Entrywise z + w j -> [[z, -w], [conj w, conj z]], doubling both
/// dimensions.
FieldMatrix complexify_quaternion(const QuaternionMatrix& a);

enum class Route { embedding, form_stabilizer, tensor_metric };
std::string route_name(Route r);

/// A Lie algebra handed to the engine: metric-skew generators in a fixed
/// signature. The generator list spans the algebra; expected_dim is its
/// rank.
struct AlgebraPresentation {
  Signature signature;
  std::vector<SoMatrix> generators;
  std::size_t expected_dim;
  Route route;
};

AlgebraPresentation algebra(const HolonomyId& id);

/// Alternating k-form on R^n. Coefficients are stored on strictly
/// increasing 1-based index tuples only; evaluation on arbitrary tuples
/// antisymmetrizes. Zero coefficients are never stored, so terms() is the
/// exact support.
class ExteriorForm {
 public:
  ExteriorForm(std::size_t degree, std::size_t dim);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }

  /// idx must be strictly increasing within [1, dim]; a zero value erases.
  void set(const std::vector<std::size_t>& idx, const FieldScalar& c);
  /// Coefficient on an arbitrary tuple: sorts, applies the permutation
  /// sign, returns 0 on repeated indices.
  FieldScalar coeff(std::vector<std::size_t> idx) const;

  const std::map<std::vector<std::size_t>, FieldScalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  bool operator==(const ExteriorForm& o) const;
  bool operator!=(const ExteriorForm& o) const { return !(*this == o); }

 private:
  std::size_t degree_, dim_;
  std::map<std::vector<std::size_t>, FieldScalar> c_;
};

/// The generic 3-forms on R^7 (w0 definite, w1 split) and 4-forms on R^8
/// (sigma0 definite, sigma1 split) whose stabilizers are the exceptional
/// algebras.
enum class NiceForm { w0, w1, sigma0, sigma1 };
ExteriorForm nice_form(NiceForm which);

/// Derivative of the pullback action at the identity:
/// (X . w)(v_1, ..., v_k) = -sum_i w(v_1, ..., X v_i, ..., v_k).
ExteriorForm form_action(const SoMatrix& x, const ExteriorForm& w);

enum class Scalars { real, complex };

/// Basis of {X metric-skew for sig : X . w = 0}, found by assembling the
/// linear map X -> X . w over the E_kl coordinates and taking its kernel.
/// With real scalars the kernel is taken over Q (each field component of
/// the constraint is a separate row); with complex scalars over the span
/// allowing i. Either way the returned basis is rational.
std::vector<SoMatrix> stabilizer_algebra(const ExteriorForm& w, const Signature& sig,
                                         Scalars scalars);

}  // namespace holospin
