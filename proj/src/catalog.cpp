#include "holospin/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace holospin {

namespace {

const std::vector<Family> kFamilies = {
    Family::SO0,    Family::U,        Family::SU,       Family::Sp,
    Family::SpSp1,  Family::SpR_SL2R, Family::SpC_SL2C, Family::SOC,
    Family::G2,     Family::G2star,   Family::G2C,      Family::Spin7,
    Family::Spin43, Family::Spin7C,
};

const char* kFamilyNames[] = {
    "SO0", "U",  "SU",     "Sp",  "SpSp1",  "SpR_SL2R", "SpC_SL2C",
    "SOC", "G2", "G2star", "G2C", "Spin7",  "Spin43",   "Spin7C",
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// All strictly increasing k-tuples from [1, n] in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(k);
  for (std::size_t j = 0; j < k; ++j) t[j] = j + 1;
  if (k > n) return out;
  while (true) {
    out.push_back(t);
    std::size_t j = k;
    while (j > 0 && t[j - 1] == n - k + j) --j;
    if (j == 0) break;
    ++t[j - 1];
    for (std::size_t l = j; l < k; ++l) t[l] = t[l - 1] + 1;
  }
  return out;
}

FieldMatrix mat_times_i(const FieldMatrix& m) { return m * FieldScalar::i(); }

/// Skew-Hermitian basis of u(p,q) (su: traceless variant) as complex
/// matrices, metric diag(-1 x p, +1 x q). Off-diagonal pairs first in
/// lexicographic order, diagonal elements last.
std::vector<FieldMatrix> unitary_complex_basis(int p, int q, bool traceless) {
  const int m = p + q;
  const FieldScalar I = FieldScalar::i();
  auto sign = [&](int k) { return k < p ? -1 : 1; };
  std::vector<FieldMatrix> out;
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      const int s = sign(k) * sign(l);
      FieldMatrix b1(m, m), b2(m, m);
      b1.at(k, l) = FieldScalar(1);
      b1.at(l, k) = FieldScalar(-s);
      b2.at(k, l) = I;
      b2.at(l, k) = I * FieldScalar(s);
      out.push_back(std::move(b1));
      out.push_back(std::move(b2));
    }
  }
  if (traceless) {
    for (int k = 0; k + 1 < m; ++k) {
      FieldMatrix d(m, m);
      d.at(k, k) = I;
      d.at(k + 1, k + 1) = -I;
      out.push_back(std::move(d));
    }
  } else {
    for (int k = 0; k < m; ++k) {
      FieldMatrix d(m, m);
      d.at(k, k) = I;
      out.push_back(std::move(d));
    }
  }
  return out;
}

/// Skew-Hermitian basis of sp(p,q) over the quaternions: c D_kl - s c* D_lk
/// for c in {1, i, j, k} off the diagonal, imaginary c D_kk on it.
std::vector<QuaternionMatrix> symplectic_quaternion_basis(int p, int q) {
  const int m = p + q;
  const FieldScalar I = FieldScalar::i();
  auto sign = [&](int k) { return k < p ? -1 : 1; };
  std::vector<QuaternionMatrix> out;
  auto zero = [&] { return FieldMatrix(m, m); };
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      const FieldScalar s(sign(k) * sign(l));
      FieldMatrix z1 = zero(), z2 = zero(), w3 = zero(), w4 = zero();
      z1.at(k, l) = FieldScalar(1);
      z1.at(l, k) = -s;
      z2.at(k, l) = I;
      z2.at(l, k) = I * s;
      w3.at(k, l) = FieldScalar(1);
      w3.at(l, k) = s;
      w4.at(k, l) = I;
      w4.at(l, k) = I * s;
      out.push_back(quaternion_matrix(std::move(z1), zero()));
      out.push_back(quaternion_matrix(std::move(z2), zero()));
      out.push_back(quaternion_matrix(zero(), std::move(w3)));
      out.push_back(quaternion_matrix(zero(), std::move(w4)));
    }
  }
  for (int k = 0; k < m; ++k) {
    FieldMatrix zi = zero(), wj = zero(), wk = zero();
    zi.at(k, k) = I;
    wj.at(k, k) = FieldScalar(1);
    wk.at(k, k) = I;
    out.push_back(quaternion_matrix(std::move(zi), zero()));
    out.push_back(quaternion_matrix(zero(), std::move(wj)));
    out.push_back(quaternion_matrix(zero(), std::move(wk)));
  }
  return out;
}

// Right multiplication by the quaternion units on H = R^4 in the realified
// coordinate order (Re z, Im z, Re w, Im w).
const int kRightI[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
const int kRightJ[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
const int kRightK[4][4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};

FieldMatrix sp1_right_mult(int m, const int block[4][4]) {
  FieldMatrix out(4 * m, 4 * m);
  for (int b = 0; b < m; ++b)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (block[r][c] != 0) out.at(4 * b + r, 4 * b + c) = FieldScalar(block[r][c]);
  return out;
}

/// Symplectic Gram matrix on R^2p with omega(e_i, e_{p+i}) = 1.
FieldMatrix omega_matrix(int p) {
  FieldMatrix out(2 * p, 2 * p);
  for (int i = 0; i < p; ++i) {
    out.at(i, p + i) = FieldScalar(1);
    out.at(p + i, i) = FieldScalar(-1);
  }
  return out;
}

/// Basis of sp(p, R): omega^{-1} M over the symmetric matrix basis.
std::vector<FieldMatrix> symplectic_real_basis(int p) {
  const int d = 2 * p;
  const FieldMatrix omega_inv = -omega_matrix(p);
  std::vector<FieldMatrix> out;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      FieldMatrix m(d, d);
      m.at(a, b) = FieldScalar(1);
      if (a != b) m.at(b, a) = FieldScalar(1);
      out.push_back(omega_inv * m);
    }
  return out;
}

std::vector<FieldMatrix> sl2_basis() {
  FieldMatrix h(2, 2), e(2, 2), f(2, 2);
  h.at(0, 0) = FieldScalar(1);
  h.at(1, 1) = FieldScalar(-1);
  e.at(0, 1) = FieldScalar(1);
  f.at(1, 0) = FieldScalar(1);
  return {h, e, f};
}

/// A hyperbolic coordinate pair: both basis vectors null, <e_a, e_b> = v.
struct HypPair {
  std::size_t a, b;
  int v;
};

/// Orthogonal change of basis splitting each pair into a timelike and a
/// spacelike unit vector, (e_a -+ v e_b)/sqrt2. Columns: all timelike
/// vectors in pair order, then all spacelike ones. The matrix is Euclidean
/// orthogonal, so conjugation is P^t X P.
FieldMatrix hyperbolic_change(std::size_t dim, const std::vector<HypPair>& pairs) {
  if (2 * pairs.size() != dim) throw std::logic_error("hyperbolic_change: pair count");
  const FieldScalar h = FieldScalar::inv_sqrt2();
  const std::size_t np = pairs.size();
  FieldMatrix out(dim, dim);
  for (std::size_t t = 0; t < np; ++t) {
    const auto& pr = pairs[t];
    const FieldScalar vh = FieldScalar(pr.v) * h;
    out.at(pr.a, t) = h;
    out.at(pr.b, t) = -vh;
    out.at(pr.a, np + t) = h;
    out.at(pr.b, np + t) = vh;
  }
  return out;
}

std::vector<FieldMatrix> tensor_generators(int p) {
  const int d = 2 * p;
  std::vector<FieldMatrix> out;
  const FieldMatrix id_d = FieldMatrix::identity(d);
  const FieldMatrix id_2 = FieldMatrix::identity(2);
  for (const auto& s : symplectic_real_basis(p)) out.push_back(kron(s, id_2));
  for (const auto& b : sl2_basis()) out.push_back(kron(id_d, b));
  return out;
}

AlgebraPresentation spr_sl2r(int p) {
  std::vector<HypPair> pairs;
  for (int i = 0; i < p; ++i) {
    pairs.push_back({std::size_t(2 * i), std::size_t(2 * (p + i) + 1), +1});
    pairs.push_back({std::size_t(2 * i + 1), std::size_t(2 * (p + i)), -1});
  }
  const FieldMatrix pm = hyperbolic_change(std::size_t(4) * p, pairs);
  const FieldMatrix pt = pm.transpose();
  const Signature sig = Signature::standard(2 * p, 2 * p);
  std::vector<SoMatrix> gens;
  for (const auto& x : tensor_generators(p)) gens.push_back(so_matrix(pt * x * pm, sig));
  return {sig, std::move(gens), std::size_t(p) * (2 * p + 1) + 3, Route::tensor_metric};
}

AlgebraPresentation spc_sl2c(int p) {
  // Real hyperbolic pairs of Re(det x omega): the x- and y-copies of each
  // complex pair, the y-copy with flipped sign.
  std::vector<HypPair> pairs;
  for (int i = 0; i < p; ++i) {
    const std::size_t m1a = std::size_t(2) * (2 * i), m2a = std::size_t(2) * (2 * (p + i) + 1);
    const std::size_t m1b = std::size_t(2) * (2 * i + 1), m2b = std::size_t(2) * (2 * (p + i));
    pairs.push_back({m1a, m2a, +1});
    pairs.push_back({m1a + 1, m2a + 1, -1});
    pairs.push_back({m1b, m2b, -1});
    pairs.push_back({m1b + 1, m2b + 1, +1});
  }
  const FieldMatrix pm = hyperbolic_change(std::size_t(8) * p, pairs);
  const FieldMatrix pt = pm.transpose();
  const Signature sig = Signature::standard(4 * p, 4 * p);
  std::vector<SoMatrix> gens;
  for (const auto& x : tensor_generators(p)) {
    gens.push_back(so_matrix(pt * realify(x) * pm, sig));
    gens.push_back(so_matrix(pt * realify(mat_times_i(x)) * pm, sig));
  }
  return {sig, std::move(gens), std::size_t(2) * p * (2 * p + 1) + 6, Route::tensor_metric};
}

AlgebraPresentation exceptional_real(NiceForm form, Signature sig, std::size_t dim) {
  auto gens = stabilizer_algebra(nice_form(form), sig, Scalars::real);
  return {std::move(sig), std::move(gens), dim, Route::form_stabilizer};
}

AlgebraPresentation exceptional_complex(NiceForm form, const Signature& definite,
                                        Signature split, std::size_t dim) {
  auto basis = stabilizer_algebra(nice_form(form), definite, Scalars::complex);
  std::vector<SoMatrix> gens;
  for (const auto& x : basis) {
    gens.push_back(so_matrix(realify(x.mat), split));
    gens.push_back(so_matrix(realify(mat_times_i(x.mat)), split));
  }
  return {std::move(split), std::move(gens), dim, Route::form_stabilizer};
}

}  // namespace

const std::vector<Family>& all_families() { return kFamilies; }

std::string family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_name(std::string name) {
  name = lower(std::move(name));
  for (Family f : kFamilies)
    if (lower(family_name(f)) == name) return f;
  throw std::invalid_argument("unknown group: " + name);
}

int family_arity(Family f) {
  switch (f) {
    case Family::SO0:
    case Family::U:
    case Family::SU:
    case Family::Sp:
    case Family::SpSp1:
      return 2;
    case Family::SpR_SL2R:
    case Family::SpC_SL2C:
    case Family::SOC:
      return 1;
    default:
      return 0;
  }
}

void validate(const HolonomyId& id) {
  if (id.p < 0 || id.q < 0)
    throw std::invalid_argument(family_name(id.family) + ": parameters must be non-negative");
  const int arity = family_arity(id.family);
  if (arity == 0 && (id.p != 0 || id.q != 0))
    throw std::invalid_argument(family_name(id.family) + " takes no parameters");
  if (arity == 1 && id.q != 0)
    throw std::invalid_argument(family_name(id.family) + " takes parameter p only (q must be 0)");
  const int m = id.p + id.q;
  switch (id.family) {
    case Family::SO0:
      if (m < 2) throw std::invalid_argument("SO0(p,q) needs n = p+q >= 2");
      break;
    case Family::U:
      if (m < 2) throw std::invalid_argument("U(p,q) needs n = 2(p+q) >= 4");
      break;
    case Family::SU:
      if (m < 2) throw std::invalid_argument("SU(p,q) needs n = 2(p+q) >= 4");
      break;
    case Family::Sp:
      if (m < 2) throw std::invalid_argument("Sp(p,q) needs n = 4(p+q) >= 8");
      break;
    case Family::SpSp1:
      if (m < 2) throw std::invalid_argument("Sp(p,q)*Sp(1) needs n = 4(p+q) >= 8");
      break;
    case Family::SpR_SL2R:
      if (id.p < 2) throw std::invalid_argument("Sp(p,R)*SL(2,R) needs n = 4p >= 8");
      break;
    case Family::SpC_SL2C:
      if (id.p < 2) throw std::invalid_argument("Sp(p,C)*SL(2,C) needs n = 8p >= 16");
      break;
    case Family::SOC:
      if (id.p < 2) throw std::invalid_argument("SO(p,C) needs n = 2p >= 4");
      break;
    default:
      break;
  }
}

Signature signature_of(const HolonomyId& id) {
  validate(id);
  const std::size_t p = std::size_t(id.p), q = std::size_t(id.q);
  switch (id.family) {
    case Family::SO0:
      return Signature::standard(p, q);
    case Family::U:
    case Family::SU:
      return Signature::standard(2 * p, 2 * q);
    case Family::Sp:
    case Family::SpSp1:
      return Signature::standard(4 * p, 4 * q);
    case Family::SpR_SL2R:
      return Signature::standard(2 * p, 2 * p);
    case Family::SpC_SL2C:
      return Signature::standard(4 * p, 4 * p);
    case Family::SOC:
      return Signature::interleaved(p);
    case Family::G2:
      return Signature::standard(0, 7);
    case Family::G2star:
      return Signature::standard(4, 3);
    case Family::G2C:
      return Signature::interleaved(7);
    case Family::Spin7:
      return Signature::standard(0, 8);
    case Family::Spin43:
      return Signature::standard(4, 4);
    case Family::Spin7C:
      return Signature::interleaved(8);
  }
  throw std::logic_error("signature_of: unreachable");
}

std::string display_name(const HolonomyId& id) {
  const std::string p = std::to_string(id.p), q = std::to_string(id.q);
  switch (id.family) {
    case Family::SO0:
      return "SO0(" + p + "," + q + ")";
    case Family::U:
      return "U(" + p + "," + q + ")";
    case Family::SU:
      return "SU(" + p + "," + q + ")";
    case Family::Sp:
      return "Sp(" + p + "," + q + ")";
    case Family::SpSp1:
      return "Sp(" + p + "," + q + ")*Sp(1)";
    case Family::SpR_SL2R:
      return "Sp(" + p + ",R)*SL(2,R)";
    case Family::SpC_SL2C:
      return "Sp(" + p + ",C)*SL(2,C)";
    case Family::SOC:
      return "SO(" + p + ",C)";
    case Family::G2:
      return "G2";
    case Family::G2star:
      return "G2*";
    case Family::G2C:
      return "G2(C)";
    case Family::Spin7:
      return "Spin(7)";
    case Family::Spin43:
      return "Spin(4,3)";
    case Family::Spin7C:
      return "Spin(7,C)";
  }
  throw std::logic_error("display_name: unreachable");
}

FieldMatrix realify(const FieldMatrix& a) {
  FieldMatrix out(2 * a.rows(), 2 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const FieldScalar& e = a.at(r, c);
      if (!e.is_gaussian()) throw std::invalid_argument("realify: entry outside Q(i)");
      const FieldScalar x(e.a().re), y(e.a().im);
      out.at(2 * r, 2 * c) = x;
      out.at(2 * r, 2 * c + 1) = -y;
      out.at(2 * r + 1, 2 * c) = y;
      out.at(2 * r + 1, 2 * c + 1) = x;
    }
  return out;
}

QuaternionMatrix quaternion_matrix(FieldMatrix z, FieldMatrix w) {
  if (z.rows() != w.rows() || z.cols() != w.cols())
    throw std::invalid_argument("quaternion_matrix: shape mismatch");
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c)
      if (!z.at(r, c).is_gaussian() || !w.at(r, c).is_gaussian())
        throw std::invalid_argument("quaternion_matrix: entry outside Q(i)");
  return {std::move(z), std::move(w)};
}

FieldMatrix complexify_quaternion(const QuaternionMatrix& a) {
  FieldMatrix out(2 * a.z.rows(), 2 * a.z.cols());
  for (std::size_t r = 0; r < a.z.rows(); ++r)
    for (std::size_t c = 0; c < a.z.cols(); ++c) {
      const FieldScalar &z = a.z.at(r, c), &w = a.w.at(r, c);
      out.at(2 * r, 2 * c) = z;
      out.at(2 * r, 2 * c + 1) = -w;
      out.at(2 * r + 1, 2 * c) = w.conj_i();
      out.at(2 * r + 1, 2 * c + 1) = z.conj_i();
    }
  return out;
}

std::string route_name(Route r) {
  switch (r) {
    case Route::embedding:
      return "embedding";
    case Route::form_stabilizer:
      return "form-stabilizer";
    case Route::tensor_metric:
      return "tensor-metric";
  }
  throw std::logic_error("route_name: unreachable");
}

AlgebraPresentation algebra(const HolonomyId& id) {
  validate(id);
  const std::size_t m = std::size_t(id.p) + std::size_t(id.q);
  switch (id.family) {
    case Family::SO0: {
      const Signature sig = signature_of(id);
      std::vector<SoMatrix> gens;
      for (std::size_t k = 1; k <= sig.n(); ++k)
        for (std::size_t l = k + 1; l <= sig.n(); ++l) gens.push_back(e_matrix(sig, k, l));
      return {sig, std::move(gens), sig.n() * (sig.n() - 1) / 2, Route::embedding};
    }
    case Family::U:
    case Family::SU: {
      const Signature sig = signature_of(id);
      const bool traceless = id.family == Family::SU;
      std::vector<SoMatrix> gens;
      for (const auto& b : unitary_complex_basis(id.p, id.q, traceless))
        gens.push_back(so_matrix(realify(b), sig));
      return {sig, std::move(gens), traceless ? m * m - 1 : m * m, Route::embedding};
    }
    case Family::Sp:
    case Family::SpSp1: {
      const Signature sig = signature_of(id);
      std::vector<SoMatrix> gens;
      for (const auto& b : symplectic_quaternion_basis(id.p, id.q))
        gens.push_back(so_matrix(realify(complexify_quaternion(b)), sig));
      std::size_t dim = m * (2 * m + 1);
      if (id.family == Family::SpSp1) {
        for (const auto* block : {kRightI, kRightJ, kRightK})
          gens.push_back(so_matrix(sp1_right_mult(int(m), block), sig));
        dim += 3;
      }
      return {sig, std::move(gens), dim, Route::embedding};
    }
    case Family::SpR_SL2R:
      return spr_sl2r(id.p);
    case Family::SpC_SL2C:
      return spc_sl2c(id.p);
    case Family::SOC: {
      const Signature sig = signature_of(id);
      std::vector<SoMatrix> gens;
      const std::size_t pp = std::size_t(id.p);
      for (std::size_t k = 0; k < pp; ++k)
        for (std::size_t l = k + 1; l < pp; ++l) {
          FieldMatrix a(pp, pp);
          a.at(k, l) = FieldScalar(1);
          a.at(l, k) = FieldScalar(-1);
          gens.push_back(so_matrix(realify(a), sig));
          gens.push_back(so_matrix(realify(mat_times_i(a)), sig));
        }
      return {sig, std::move(gens), pp *(pp - 1), Route::embedding};
    }
    case Family::G2:
      return exceptional_real(NiceForm::w0, Signature::standard(0, 7), 14);
    case Family::G2star:
      return exceptional_real(NiceForm::w1, Signature::standard(4, 3), 14);
    case Family::Spin7:
      return exceptional_real(NiceForm::sigma0, Signature::standard(0, 8), 21);
    case Family::Spin43:
      return exceptional_real(NiceForm::sigma1, Signature::standard(4, 4), 21);
    case Family::G2C:
      return exceptional_complex(NiceForm::w0, Signature::standard(0, 7),
                                 Signature::interleaved(7), 28);
    case Family::Spin7C:
      return exceptional_complex(NiceForm::sigma0, Signature::standard(0, 8),
                                 Signature::interleaved(8), 42);
  }
  throw std::logic_error("algebra: unreachable");
}

ExteriorForm::ExteriorForm(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {
  if (degree == 0 || degree > dim) throw std::invalid_argument("ExteriorForm: bad degree");
}

void ExteriorForm::set(const std::vector<std::size_t>& idx, const FieldScalar& c) {
  if (idx.size() != degree_) throw std::invalid_argument("ExteriorForm::set: tuple length");
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < 1 || idx[j] > dim_) throw std::invalid_argument("ExteriorForm::set: index range");
    if (j > 0 && idx[j - 1] >= idx[j])
      throw std::invalid_argument("ExteriorForm::set: tuple must be strictly increasing");
  }
  if (c.is_zero())
    c_.erase(idx);
  else
    c_[idx] = c;
}

FieldScalar ExteriorForm::coeff(std::vector<std::size_t> idx) const {
  if (idx.size() != degree_) throw std::invalid_argument("ExteriorForm::coeff: tuple length");
  // insertion sort, tracking the permutation sign
  int sign = 1;
  for (std::size_t j = 1; j < idx.size(); ++j)
    for (std::size_t l = j; l > 0 && idx[l - 1] >= idx[l]; --l) {
      if (idx[l - 1] == idx[l]) return FieldScalar(0);
      std::swap(idx[l - 1], idx[l]);
      sign = -sign;
    }
  const auto it = c_.find(idx);
  if (it == c_.end()) return FieldScalar(0);
  return sign == 1 ? it->second : -it->second;
}

bool ExteriorForm::operator==(const ExteriorForm& o) const {
  return degree_ == o.degree_ && dim_ == o.dim_ && c_ == o.c_;
}

ExteriorForm nice_form(NiceForm which) {
  struct Term {
    std::vector<std::size_t> idx;
    int c;
  };
  std::vector<Term> terms;
  std::size_t degree = 3, dim = 7;
  switch (which) {
    case NiceForm::w0:
      terms = {{{1, 2, 7}, 1},  {{1, 3, 5}, 1},  {{1, 4, 6}, -1}, {{2, 3, 6}, -1},
               {{2, 4, 5}, -1}, {{3, 4, 7}, 1},  {{5, 6, 7}, 1}};
      break;
    case NiceForm::w1:
      terms = {{{1, 2, 7}, -1}, {{1, 3, 5}, -1}, {{1, 4, 6}, 1},  {{2, 3, 6}, 1},
               {{2, 4, 5}, 1},  {{3, 4, 7}, -1}, {{5, 6, 7}, 1}};
      break;
    case NiceForm::sigma0:
      degree = 4;
      dim = 8;
      terms = {{{1, 2, 3, 4}, 1},  {{1, 2, 5, 6}, 1},  {{1, 2, 7, 8}, -1}, {{1, 3, 5, 7}, 1},
               {{1, 3, 6, 8}, 1},  {{1, 4, 5, 8}, 1},  {{1, 4, 6, 7}, -1}, {{2, 3, 5, 8}, -1},
               {{2, 3, 6, 7}, 1},  {{2, 4, 5, 7}, 1},  {{2, 4, 6, 8}, 1},  {{3, 4, 5, 6}, -1},
               {{3, 4, 7, 8}, 1},  {{5, 6, 7, 8}, 1}};
      break;
    case NiceForm::sigma1:
      degree = 4;
      dim = 8;
      terms = {{{1, 2, 3, 4}, 1},  {{1, 2, 5, 6}, -1}, {{1, 2, 7, 8}, 1},  {{1, 3, 5, 7}, -1},
               {{1, 3, 6, 8}, -1}, {{1, 4, 5, 8}, -1}, {{1, 4, 6, 7}, 1},  {{2, 3, 5, 8}, 1},
               {{2, 3, 6, 7}, -1}, {{2, 4, 5, 7}, -1}, {{2, 4, 6, 8}, -1}, {{3, 4, 5, 6}, 1},
               {{3, 4, 7, 8}, -1}, {{5, 6, 7, 8}, 1}};
      break;
  }
  ExteriorForm out(degree, dim);
  for (const auto& t : terms) out.set(t.idx, FieldScalar(t.c));
  return out;
}

ExteriorForm form_action(const SoMatrix& x, const ExteriorForm& w) {
  const std::size_t n = w.dim();
  if (x.mat.rows() != n) throw std::invalid_argument("form_action: dimension mismatch");
  ExteriorForm out(w.degree(), n);
  for (const auto& target : increasing_tuples(n, w.degree())) {
    FieldScalar acc;
    for (std::size_t slot = 0; slot < w.degree(); ++slot) {
      // X e_{target[slot]} = sum_a X[a][target[slot]] e_a
      for (std::size_t a = 1; a <= n; ++a) {
        const FieldScalar& xe = x.mat.at(a - 1, target[slot] - 1);
        if (xe.is_zero()) continue;
        auto t = target;
        t[slot] = a;
        const FieldScalar c = w.coeff(std::move(t));
        if (!c.is_zero()) acc -= xe * c;
      }
    }
    if (!acc.is_zero()) out.set(target, acc);
  }
  return out;
}

std::vector<SoMatrix> stabilizer_algebra(const ExteriorForm& w, const Signature& sig,
                                         Scalars scalars) {
  const std::size_t n = sig.n();
  if (w.dim() != n) throw std::invalid_argument("stabilizer_algebra: dimension mismatch");
  std::vector<SoMatrix> basis;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) basis.push_back(e_matrix(sig, k, l));
  const auto tuples = increasing_tuples(n, w.degree());

  FieldMatrix constraints(tuples.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExteriorForm acted = form_action(basis[j], w);
    for (std::size_t i = 0; i < tuples.size(); ++i) constraints.at(i, j) = acted.coeff(tuples[i]);
  }

  std::vector<FieldVector> kernel;
  if (scalars == Scalars::real) {
    // separate the four field components so the solution is rational
    FieldMatrix split(4 * tuples.size(), basis.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const FieldScalar& e = constraints.at(i, j);
        split.at(4 * i, j) = FieldScalar(e.a().re);
        split.at(4 * i + 1, j) = FieldScalar(e.a().im);
        split.at(4 * i + 2, j) = FieldScalar(e.b().re);
        split.at(4 * i + 3, j) = FieldScalar(e.b().im);
      }
    kernel = kernel_basis(split);
  } else {
    kernel = kernel_basis(constraints);
  }

  std::vector<SoMatrix> out;
  for (const auto& v : kernel) {
    FieldMatrix x(n, n);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) x = x + basis[j].mat * v[j];
    out.push_back(so_matrix(std::move(x), sig));
  }
  return out;
}

}  // namespace holospin
