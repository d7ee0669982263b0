#include "holospin/verify.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holospin/catalog.hpp"
#include "holospin/clifford.hpp"
#include "holospin/engine.hpp"
#include "holospin/numfield.hpp"
#include "holospin/spinor.hpp"

namespace holospin {

namespace {

SuiteResult make_suite(std::string name, std::vector<CheckResult> checks) {
  SuiteResult s;
  s.name = std::move(name);
  s.pass = true;
  for (const CheckResult& c : checks) s.pass = s.pass && c.pass;
  s.checks = std::move(checks);
  return s;
}

CheckResult passed(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = true;
  return c;
}

CheckResult failed(std::string name, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.detail = std::move(detail);
  return c;
}

void append(std::vector<Signature>& sigs, Signature s) {
  for (const Signature& t : sigs)
    if (t == s) return;
  sigs.push_back(std::move(s));
}

// Every signature with n <= 10, interleaved up to p = 5, and every signature
// a cataloged group lives in (which reaches n = 16).
std::vector<Signature> relation_signatures() {
  std::vector<Signature> sigs;
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t r = 0; r <= n; ++r) sigs.push_back(Signature::standard(r, n - r));
  for (std::size_t p = 1; p <= 5; ++p) append(sigs, Signature::interleaved(p));
  for (const HolonomyId& id : admissible_ids(16)) append(sigs, signature_of(id));
  return sigs;
}

std::vector<Signature> small_signatures(bool skip_definite) {
  std::vector<Signature> sigs;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t r = skip_definite ? 1 : 0; r <= n; ++r)
      sigs.push_back(Signature::standard(r, n - r));
  for (std::size_t p = 1; p <= 4; ++p) sigs.push_back(Signature::interleaved(p));
  return sigs;
}

// dense * one-entry-per-row action, O(dim^2)
FieldMatrix mul_dense_gen(const FieldMatrix& l, const GeneratorAction& g) {
  FieldMatrix out(l.rows(), g.dim());
  for (std::size_t m = 0; m < g.dim(); ++m) {
    const std::size_t c = g.col(m);
    for (std::size_t i = 0; i < l.rows(); ++i)
      out.at(i, c) = out.at(i, c) + l.at(i, m) * g.val(m);
  }
  return out;
}

FieldMatrix mul_gen_dense(const GeneratorAction& g, const FieldMatrix& r) {
  FieldMatrix out(g.dim(), r.cols());
  for (std::size_t row = 0; row < g.dim(); ++row)
    for (std::size_t k = 0; k < r.cols(); ++k) out.at(row, k) = g.val(row) * r.at(g.col(row), k);
  return out;
}

std::vector<SoMatrix> standard_generators(const Signature& sig) {
  std::vector<SoMatrix> gens;
  for (std::size_t k = 1; k <= sig.n(); ++k)
    for (std::size_t l = k + 1; l <= sig.n(); ++l) gens.push_back(e_matrix(sig, k, l));
  return gens;
}

std::string pair_str(std::size_t j, std::size_t k) {
  return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

// --- clifford ---------------------------------------------------------------

CheckResult check_relations(const Signature& sig) {
  const std::string name = "relations " + sig.str();
  const CliffordRep rep = build_rep(sig);
  for (std::size_t j = 1; j <= sig.n(); ++j) {
    const GeneratorAction want = GeneratorAction(rep.dim()) * FieldScalar(-sig.kappa(j));
    if (rep.action(j) * rep.action(j) != want)
      return failed(name, sig.str() + ": e_" + std::to_string(j) + "^2 != " +
                              std::to_string(-sig.kappa(j)) + " id");
    for (std::size_t k = j + 1; k <= sig.n(); ++k)
      if (rep.action(j) * rep.action(k) != -(rep.action(k) * rep.action(j)))
        return failed(name, sig.str() + ": anticommutator nonzero at " + pair_str(j, k));
  }
  return passed(name);
}

// Phi_sig(e_k) = tau_k Phi_definite(e_k): the signature only twists the
// definite generators by scalars.
CheckResult check_factorization(const Signature& sig) {
  const std::string name = "tau factorization " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const CliffordRep def = build_rep(Signature::standard(0, sig.n()));
  for (std::size_t k = 1; k <= sig.n(); ++k)
    if (rep.action(k) != def.action(k) * rep.tau(k))
      return failed(name, sig.str() + ": generator " + std::to_string(k) +
                              " is not tau_k times the definite generator");
  return passed(name);
}

std::vector<CheckResult> clifford_checks() {
  std::vector<CheckResult> out;
  for (const Signature& sig : relation_signatures()) {
    out.push_back(check_relations(sig));
    out.push_back(check_factorization(sig));
  }
  return out;
}

// --- inner ------------------------------------------------------------------

CheckResult check_closed_standard(const Signature& sig) {
  const std::string name = "closed form " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const std::size_t m = rep.m();
  for (std::size_t a = 0; a < rep.dim(); ++a)
    for (std::size_t b = 0; b < rep.dim(); ++b) {
      const EpsilonTuple ea = EpsilonTuple::from_index(a, m);
      const EpsilonTuple eb = EpsilonTuple::from_index(b, m);
      const FieldScalar got = inner(rep, u_spinor(ea), u_spinor(eb));
      const FieldScalar want = inner_closed_standard(sig.r(), sig.s(), ea, eb);
      if (got != want)
        return failed(name, sig.str() + ": <u" + ea.str() + ", u" + eb.str() + "> = " +
                                got.str() + ", closed form says " + want.str());
    }
  return passed(name);
}

// Index pairs for the big interleaved modules: every sampled index against
// itself, its negation (the only nonzero combination), and a shifted mate.
std::vector<std::pair<std::size_t, std::size_t>> sampled_pairs(std::size_t dim) {
  const std::size_t picks[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, dim / 2, dim - 2, dim - 1};
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a : picks) {
    if (a >= dim) continue;
    out.emplace_back(a, a);
    out.emplace_back(a, (dim - 1) ^ a);
    out.emplace_back(a, (a * 5 + 7) % dim);
  }
  return out;
}

CheckResult check_closed_interleaved(std::size_t p, bool exhaustive) {
  const Signature sig = Signature::interleaved(p);
  const std::string name =
      std::string("closed form ") + sig.str() + (exhaustive ? "" : " sampled");
  const CliffordRep rep = build_rep(sig);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    for (std::size_t a = 0; a < rep.dim(); ++a)
      for (std::size_t b = 0; b < rep.dim(); ++b) pairs.emplace_back(a, b);
  } else {
    pairs = sampled_pairs(rep.dim());
  }
  for (const auto& [a, b] : pairs) {
    const EpsilonTuple ea = EpsilonTuple::from_index(a, p);
    const EpsilonTuple eb = EpsilonTuple::from_index(b, p);
    const FieldScalar got = inner(rep, u_spinor(ea), u_spinor(eb));
    const FieldScalar want = inner_closed_interleaved(p, ea, eb);
    if (got != want)
      return failed(name, sig.str() + ": <u" + ea.str() + ", u" + eb.str() + "> = " + got.str() +
                              ", closed form says " + want.str());
  }
  return passed(name);
}

// M lift(X) + lift(X)^H M = 0: the product is infinitesimally spin-invariant.
CheckResult check_invariance(const Signature& sig) {
  const std::string name = "invariance " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const FieldMatrix m = inner_form_matrix(rep);
  for (std::size_t k = 1; k <= sig.n(); ++k)
    for (std::size_t l = k + 1; l <= sig.n(); ++l) {
      const FieldMatrix lx = lift(rep, e_matrix(sig, k, l));
      if (!(m * lx + lx.conj_i().transpose() * m).is_zero())
        return failed(name, sig.str() + ": M L + L^H M != 0 for E" + pair_str(k, l));
    }
  return passed(name);
}

std::vector<CheckResult> inner_checks() {
  std::vector<CheckResult> out;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t r = 2; r <= n; r += 2) out.push_back(check_closed_standard(Signature::standard(r, n - r)));
  for (std::size_t p = 1; p <= 4; ++p) out.push_back(check_closed_interleaved(p, true));
  out.push_back(check_closed_interleaved(7, false));
  out.push_back(check_closed_interleaved(8, false));
  for (const Signature& sig : small_signatures(true)) out.push_back(check_invariance(sig));
  return out;
}

// --- equivariance -----------------------------------------------------------

CheckResult check_lift_linearity(const Signature& sig) {
  const std::string name = "lift linearity " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const std::vector<SoMatrix> gens = standard_generators(sig);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const SoMatrix& x = gens[i];
    const SoMatrix& y = gens[(i + 1) % gens.size()];
    const SoMatrix z = so_matrix(x.mat * FieldScalar(3) - y.mat * FieldScalar(2), sig);
    if (lift(rep, z) != lift(rep, x) * FieldScalar(3) - lift(rep, y) * FieldScalar(2))
      return failed(name, sig.str() + ": lift(3X - 2Y) mismatch at generator pair " +
                              pair_str(i, (i + 1) % gens.size()));
  }
  return passed(name);
}

CheckResult check_lift_bracket(const Signature& sig) {
  const std::string name = "lift bracket " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const std::vector<SoMatrix> gens = standard_generators(sig);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const SoMatrix& x = gens[i];
    const SoMatrix& y = gens[(i + 1) % gens.size()];
    const SoMatrix b = so_matrix(x.mat * y.mat - y.mat * x.mat, sig);
    const FieldMatrix lx = lift(rep, x);
    const FieldMatrix ly = lift(rep, y);
    if (lift(rep, b) != lx * ly - ly * lx)
      return failed(name, sig.str() + ": lift([X,Y]) != [lift X, lift Y] at pair " +
                              pair_str(i, (i + 1) % gens.size()));
  }
  return passed(name);
}

// [lift X, Phi(e_j)] = Phi(X e_j), the defining property of the lift.
CheckResult check_equivariance(const Signature& sig) {
  const std::string name = "equivariance " + sig.str();
  const CliffordRep rep = build_rep(sig);
  const std::size_t dim = rep.dim();
  const std::vector<SoMatrix> gens = standard_generators(sig);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const SoMatrix& x = gens[gi];
    const FieldMatrix lx = lift(rep, x);
    for (std::size_t j = 1; j <= sig.n(); ++j) {
      const FieldMatrix lhs =
          mul_dense_gen(lx, rep.action(j)) - mul_gen_dense(rep.action(j), lx);
      FieldMatrix rhs(dim, dim);
      for (std::size_t i = 1; i <= sig.n(); ++i) {
        const FieldScalar& c = x.mat.at(i - 1, j - 1);
        if (c.is_zero()) continue;
        const GeneratorAction& g = rep.action(i);
        for (std::size_t row = 0; row < dim; ++row)
          rhs.at(row, g.col(row)) = rhs.at(row, g.col(row)) + g.val(row) * c;
      }
      if (lhs != rhs)
        return failed(name, sig.str() + ": [lift X, e_" + std::to_string(j) +
                                "] != X e_j at generator " + std::to_string(gi));
    }
  }
  return passed(name);
}

std::vector<CheckResult> equivariance_checks() {
  std::vector<CheckResult> out;
  for (const Signature& sig : small_signatures(false)) {
    out.push_back(check_lift_linearity(sig));
    out.push_back(check_lift_bracket(sig));
    out.push_back(check_equivariance(sig));
  }
  return out;
}

// --- forms ------------------------------------------------------------------

std::vector<FieldVector> flatten(const std::vector<SoMatrix>& xs) {
  std::vector<FieldVector> rows;
  for (const SoMatrix& x : xs) {
    FieldVector v;
    v.reserve(x.mat.rows() * x.mat.cols());
    for (std::size_t i = 0; i < x.mat.rows(); ++i)
      for (std::size_t j = 0; j < x.mat.cols(); ++j) v.push_back(x.mat.at(i, j));
    rows.push_back(std::move(v));
  }
  return rows;
}

std::size_t flat_rank(const std::vector<SoMatrix>& xs) {
  const std::vector<FieldVector> rows = flatten(xs);
  if (rows.empty()) return 0;
  FieldMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return rank(m);
}

CheckResult check_form_support() {
  const std::string name = "form support";
  const struct {
    NiceForm which;
    std::size_t degree, dim, terms;
  } table[] = {
      {NiceForm::w0, 3, 7, 7},
      {NiceForm::w1, 3, 7, 7},
      {NiceForm::sigma0, 4, 8, 14},
      {NiceForm::sigma1, 4, 8, 14},
  };
  for (const auto& row : table) {
    const ExteriorForm w = nice_form(row.which);
    if (w.degree() != row.degree || w.dim() != row.dim || w.terms().size() != row.terms)
      return failed(name, "form " + std::to_string(static_cast<int>(row.which)) +
                              ": degree " + std::to_string(w.degree()) + ", dim " +
                              std::to_string(w.dim()) + ", " + std::to_string(w.terms().size()) +
                              " terms");
  }
  return passed(name);
}

CheckResult check_stabilizer(const std::string& label, NiceForm which, const Signature& sig,
                             Scalars scalars, std::size_t want_dim) {
  const std::string name = "stabilizer " + label;
  const ExteriorForm w = nice_form(which);
  const std::vector<SoMatrix> stab = stabilizer_algebra(w, sig, scalars);
  if (stab.size() != want_dim)
    return failed(name, label + ": expected " + std::to_string(want_dim) + " generators, got " +
                            std::to_string(stab.size()));
  if (flat_rank(stab) != want_dim)
    return failed(name, label + ": generators dependent, rank " + std::to_string(flat_rank(stab)));
  for (std::size_t i = 0; i < stab.size(); ++i)
    if (!form_action(stab[i], w).is_zero())
      return failed(name, label + ": generator " + std::to_string(i) +
                              " does not annihilate the form");
  return passed(name);
}

CheckResult check_catalog_route(const std::string& label, Family family, NiceForm which,
                                Scalars scalars) {
  const std::string name = "catalog stabilizer " + label;
  const AlgebraPresentation pres = algebra(HolonomyId{family});
  if (pres.generators.size() != pres.expected_dim)
    return failed(name, label + ": " + std::to_string(pres.generators.size()) +
                            " generators, expected " + std::to_string(pres.expected_dim));
  if (flat_rank(pres.generators) != pres.expected_dim)
    return failed(name, label + ": generators dependent");
  if (scalars == Scalars::real) {
    // same signature and dimension, so spans must agree with the direct
    // stabilizer computation
    const std::vector<SoMatrix> stab =
        stabilizer_algebra(nice_form(which), pres.signature, scalars);
    if (!span_equal(flatten(pres.generators), flatten(stab)))
      return failed(name, label + ": catalog generators span a different algebra");
  }
  return passed(name);
}

std::vector<CheckResult> forms_checks() {
  std::vector<CheckResult> out;
  out.push_back(check_form_support());
  out.push_back(check_stabilizer("g2 (0,7)", NiceForm::w0, Signature::standard(0, 7),
                                 Scalars::real, 14));
  out.push_back(check_stabilizer("g2* (4,3)", NiceForm::w1, Signature::standard(4, 3),
                                 Scalars::real, 14));
  out.push_back(check_stabilizer("spin7 (0,8)", NiceForm::sigma0, Signature::standard(0, 8),
                                 Scalars::real, 21));
  out.push_back(check_stabilizer("spin43 (4,4)", NiceForm::sigma1, Signature::standard(4, 4),
                                 Scalars::real, 21));
  out.push_back(check_stabilizer("g2 complex", NiceForm::w0, Signature::standard(0, 7),
                                 Scalars::complex, 14));
  out.push_back(check_stabilizer("spin7 complex", NiceForm::sigma0, Signature::standard(0, 8),
                                 Scalars::complex, 21));
  out.push_back(check_catalog_route("g2", Family::G2, NiceForm::w0, Scalars::real));
  out.push_back(check_catalog_route("g2*", Family::G2star, NiceForm::w1, Scalars::real));
  out.push_back(check_catalog_route("spin7", Family::Spin7, NiceForm::sigma0, Scalars::real));
  out.push_back(check_catalog_route("spin43", Family::Spin43, NiceForm::sigma1, Scalars::real));
  out.push_back(check_catalog_route("g2 complex realified", Family::G2C, NiceForm::w0,
                                    Scalars::complex));
  out.push_back(check_catalog_route("spin7 complex realified", Family::Spin7C, NiceForm::sigma0,
                                    Scalars::complex));
  return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"clifford", "inner", "equivariance", "forms"};
}

std::vector<SuiteResult> run_verify(const std::string& suite) {
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "clifford") out.push_back(make_suite("clifford", clifford_checks()));
  if (all || suite == "inner") out.push_back(make_suite("inner", inner_checks()));
  if (all || suite == "equivariance")
    out.push_back(make_suite("equivariance", equivariance_checks()));
  if (all || suite == "forms") out.push_back(make_suite("forms", forms_checks()));
  if (out.empty())
    throw std::invalid_argument("unknown verify suite: " + suite +
                                " (expected clifford, inner, equivariance, forms or all)");
  return out;
}

}  // namespace holospin
