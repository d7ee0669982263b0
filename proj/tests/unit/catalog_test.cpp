#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "holospin/catalog.hpp"

using namespace holospin;

namespace {

FieldVector flatten(const FieldMatrix& m) {
  FieldVector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

std::vector<FieldVector> flatten_all(const std::vector<SoMatrix>& gens) {
  std::vector<FieldVector> out;
  for (const auto& g : gens) out.push_back(flatten(g.mat));
  return out;
}

std::size_t span_rank(const std::vector<FieldVector>& vs) { return rref_rows(vs).size(); }

// sum of signed E_kl basis elements, terms as {sign, k, l}
FieldMatrix ecombo(const Signature& sig, const std::vector<std::array<int, 3>>& terms) {
  FieldMatrix out(sig.n(), sig.n());
  for (const auto& t : terms)
    out = out + e_matrix(sig, std::size_t(t[1]), std::size_t(t[2])).mat * FieldScalar(t[0]);
  return out;
}

FieldMatrix gauss(std::size_t n, std::size_t m,
                  const std::vector<std::array<long, 4>>& entries) {
  // entries: {row, col, re, im}
  FieldMatrix out(n, m);
  for (const auto& e : entries)
    out.at(std::size_t(e[0]), std::size_t(e[1])) =
        FieldScalar(GaussianRational(rational(e[2]), rational(e[3])));
  return out;
}

QuaternionMatrix qmul(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  return quaternion_matrix(a.z * b.z - a.w * b.w.conj_i(), a.z * b.w + a.w * b.z.conj_i());
}

}  // namespace

TEST_CASE("realify pins the complex structure") {
  FieldMatrix i1(1, 1);
  i1.at(0, 0) = FieldScalar::i();
  const FieldMatrix j = realify(i1);
  CHECK(j == gauss(2, 2, {{0, 1, -1, 0}, {1, 0, 1, 0}}));

  CHECK(realify(FieldMatrix::identity(3)) == FieldMatrix::identity(6));

  const FieldMatrix a = gauss(2, 2, {{0, 0, 1, 2}, {0, 1, 0, -1}, {1, 0, 3, 0}, {1, 1, 0, 1}});
  const FieldMatrix b = gauss(2, 2, {{0, 0, 0, 5}, {0, 1, -2, 1}, {1, 1, 1, 1}});
  CHECK(realify(a * b) == realify(a) * realify(b));
  CHECK(realify(a + b) == realify(a) + realify(b));
  CHECK(realify(a.conj_i().transpose()) == realify(a).transpose());

  FieldMatrix i2(2, 2);
  i2.at(0, 0) = FieldScalar::i();
  i2.at(1, 1) = FieldScalar::i();
  const FieldMatrix jr = realify(i2);
  CHECK(realify(a) * jr == jr * realify(a));

  FieldMatrix bad(1, 1);
  bad.at(0, 0) = FieldScalar::sqrt2();
  CHECK_THROWS_AS(realify(bad), std::invalid_argument);
}

TEST_CASE("quaternion matrices complexify entrywise") {
  const FieldMatrix zero1(1, 1);
  FieldMatrix one1(1, 1), i1(1, 1);
  one1.at(0, 0) = FieldScalar(1);
  i1.at(0, 0) = FieldScalar::i();

  const QuaternionMatrix qi = quaternion_matrix(i1, zero1);
  const QuaternionMatrix qj = quaternion_matrix(zero1, one1);
  const QuaternionMatrix qk = quaternion_matrix(zero1, i1);

  CHECK(complexify_quaternion(qj) == gauss(2, 2, {{0, 1, -1, 0}, {1, 0, 1, 0}}));
  CHECK(complexify_quaternion(qi) == gauss(2, 2, {{0, 0, 0, 1}, {1, 1, 0, -1}}));

  // unit relations carried through the embedding
  const FieldMatrix ci = complexify_quaternion(qi), cj = complexify_quaternion(qj),
                    ck = complexify_quaternion(qk);
  CHECK(ci * ci == -FieldMatrix::identity(2));
  CHECK(cj * cj == -FieldMatrix::identity(2));
  CHECK(ci * cj == ck);
  CHECK(qmul(qi, qj).z == qk.z);
  CHECK(qmul(qi, qj).w == qk.w);

  const QuaternionMatrix a =
      quaternion_matrix(gauss(2, 2, {{0, 0, 1, 1}, {1, 0, 2, 0}, {1, 1, 0, -3}}),
                        gauss(2, 2, {{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, -1, 2}}));
  const QuaternionMatrix b =
      quaternion_matrix(gauss(2, 2, {{0, 0, 0, 2}, {0, 1, -1, 1}}),
                        gauss(2, 2, {{0, 0, 3, 0}, {1, 1, 1, -1}}));
  CHECK(complexify_quaternion(qmul(a, b)) ==
        complexify_quaternion(a) * complexify_quaternion(b));

  // quaternionic conjugate transpose maps to the Hermitian transpose
  const QuaternionMatrix ah =
      quaternion_matrix(a.z.conj_i().transpose(), -(a.w.transpose()));
  CHECK(complexify_quaternion(ah) == complexify_quaternion(a).conj_i().transpose());

  CHECK_THROWS_AS(quaternion_matrix(FieldMatrix(1, 2), FieldMatrix(2, 1)),
                  std::invalid_argument);
  FieldMatrix bad(1, 1);
  bad.at(0, 0) = FieldScalar::sqrt2();
  CHECK_THROWS_AS(quaternion_matrix(bad, zero1), std::invalid_argument);
}

TEST_CASE("holonomy ids validate their parameter bounds") {
  CHECK_NOTHROW(validate({Family::SO0, 1, 1}));
  CHECK_NOTHROW(validate({Family::U, 1, 1}));
  CHECK_NOTHROW(validate({Family::SU, 2, 0}));
  CHECK_NOTHROW(validate({Family::Sp, 1, 1}));
  CHECK_NOTHROW(validate({Family::SpSp1, 0, 2}));
  CHECK_NOTHROW(validate({Family::SpR_SL2R, 2, 0}));
  CHECK_NOTHROW(validate({Family::SpC_SL2C, 2, 0}));
  CHECK_NOTHROW(validate({Family::SOC, 2, 0}));
  CHECK_NOTHROW(validate({Family::G2, 0, 0}));
  CHECK_NOTHROW(validate({Family::Spin7C, 0, 0}));

  CHECK_THROWS_WITH_AS(validate({Family::SO0, 1, 0}), "SO0(p,q) needs n = p+q >= 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate({Family::Sp, 1, 0}), "Sp(p,q) needs n = 4(p+q) >= 8",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate({Family::SU, 0, 1}), "SU(p,q) needs n = 2(p+q) >= 4",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate({Family::SpR_SL2R, 1, 0}), "Sp(p,R)*SL(2,R) needs n = 4p >= 8",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate({Family::SpC_SL2C, 1, 0}), "Sp(p,C)*SL(2,C) needs n = 8p >= 16",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate({Family::SOC, 1, 0}), "SO(p,C) needs n = 2p >= 4",
                       std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::SO0, -1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::G2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::SOC, 2, 1}), std::invalid_argument);

  CHECK(signature_of({Family::U, 1, 1}) == Signature::standard(2, 2));
  CHECK(signature_of({Family::Sp, 1, 1}) == Signature::standard(4, 4));
  CHECK(signature_of({Family::SpR_SL2R, 2, 0}) == Signature::standard(4, 4));
  CHECK(signature_of({Family::SpC_SL2C, 2, 0}) == Signature::standard(8, 8));
  CHECK(signature_of({Family::SOC, 3, 0}) == Signature::interleaved(3));
  CHECK(signature_of({Family::G2, 0, 0}) == Signature::standard(0, 7));
  CHECK(signature_of({Family::G2star, 0, 0}) == Signature::standard(4, 3));
  CHECK(signature_of({Family::G2C, 0, 0}) == Signature::interleaved(7));
  CHECK(signature_of({Family::Spin43, 0, 0}) == Signature::standard(4, 4));
  CHECK(signature_of({Family::Spin7C, 0, 0}) == Signature::interleaved(8));

  for (Family f : all_families()) CHECK(family_from_name(family_name(f)) == f);
  CHECK(family_from_name("su") == Family::SU);
  CHECK(family_from_name("spr_sl2r") == Family::SpR_SL2R);
  CHECK_THROWS_AS(family_from_name("e8"), std::invalid_argument);

  CHECK(family_arity(Family::U) == 2);
  CHECK(family_arity(Family::SOC) == 1);
  CHECK(family_arity(Family::G2C) == 0);

  CHECK(display_name({Family::SU, 1, 2}) == "SU(1,2)");
  CHECK(display_name({Family::SpSp1, 1, 1}) == "Sp(1,1)*Sp(1)");
  CHECK(display_name({Family::SOC, 3, 0}) == "SO(3,C)");
  CHECK(display_name({Family::G2star, 0, 0}) == "G2*");
  CHECK(display_name({Family::Spin7C, 0, 0}) == "Spin(7,C)");
}

TEST_CASE("exterior forms antisymmetrize on evaluation") {
  ExteriorForm f(3, 7);
  f.set({1, 2, 7}, FieldScalar(1));
  CHECK(f.coeff({1, 2, 7}) == FieldScalar(1));
  CHECK(f.coeff({2, 1, 7}) == FieldScalar(-1));
  CHECK(f.coeff({7, 1, 2}) == FieldScalar(1));
  CHECK(f.coeff({1, 1, 7}) == FieldScalar(0));
  CHECK(f.coeff({3, 4, 5}) == FieldScalar(0));
  CHECK_FALSE(f.is_zero());
  f.set({1, 2, 7}, FieldScalar(0));
  CHECK(f.is_zero());

  CHECK_THROWS_AS(f.set({2, 1, 7}, FieldScalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.set({1, 2, 8}, FieldScalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.set({1, 2}, FieldScalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.coeff({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ExteriorForm(5, 4), std::invalid_argument);
}

TEST_CASE("nice forms carry the pinned coefficients") {
  const ExteriorForm w0 = nice_form(NiceForm::w0);
  CHECK(w0.degree() == 3);
  CHECK(w0.dim() == 7);
  CHECK(w0.terms().size() == 7);
  CHECK(w0.coeff({1, 2, 7}) == FieldScalar(1));
  CHECK(w0.coeff({1, 4, 6}) == FieldScalar(-1));

  const ExteriorForm w1 = nice_form(NiceForm::w1);
  CHECK(w1.terms().size() == 7);
  CHECK(w1.coeff({5, 6, 7}) == FieldScalar(1));
  CHECK(w1.coeff({1, 2, 7}) == FieldScalar(-1));

  const ExteriorForm s0 = nice_form(NiceForm::sigma0);
  CHECK(s0.degree() == 4);
  CHECK(s0.dim() == 8);
  CHECK(s0.terms().size() == 14);
  CHECK(s0.coeff({1, 2, 7, 8}) == FieldScalar(-1));
  CHECK(s0.coeff({5, 6, 7, 8}) == FieldScalar(1));

  const ExteriorForm s1 = nice_form(NiceForm::sigma1);
  CHECK(s1.terms().size() == 14);
  CHECK(s1.coeff({1, 2, 3, 4}) == FieldScalar(1));
  CHECK(s1.coeff({3, 4, 7, 8}) == FieldScalar(-1));
}

TEST_CASE("form action differentiates the pullback") {
  const Signature so7 = Signature::standard(0, 7);
  const ExteriorForm w0 = nice_form(NiceForm::w0);

  const SoMatrix zero = so_matrix(FieldMatrix(7, 7), so7);
  CHECK(form_action(zero, w0).is_zero());

  const SoMatrix e12 = e_matrix(so7, 1, 2);
  CHECK_FALSE(form_action(e12, w0).is_zero());

  for (const auto& g : algebra({Family::G2, 0, 0}).generators)
    CHECK(form_action(g, nice_form(NiceForm::w0)).is_zero());
  for (const auto& g : algebra({Family::G2star, 0, 0}).generators)
    CHECK(form_action(g, nice_form(NiceForm::w1)).is_zero());
  for (const auto& g : algebra({Family::Spin7, 0, 0}).generators)
    CHECK(form_action(g, nice_form(NiceForm::sigma0)).is_zero());
  for (const auto& g : algebra({Family::Spin43, 0, 0}).generators)
    CHECK(form_action(g, nice_form(NiceForm::sigma1)).is_zero());
}

TEST_CASE("stabilizer dimensions of the nice forms") {
  CHECK(stabilizer_algebra(nice_form(NiceForm::w0), Signature::standard(0, 7), Scalars::real)
            .size() == 14);
  CHECK(stabilizer_algebra(nice_form(NiceForm::w1), Signature::standard(4, 3), Scalars::real)
            .size() == 14);
  CHECK(stabilizer_algebra(nice_form(NiceForm::sigma0), Signature::standard(0, 8), Scalars::real)
            .size() == 21);
  CHECK(stabilizer_algebra(nice_form(NiceForm::sigma1), Signature::standard(4, 4), Scalars::real)
            .size() == 21);
  CHECK(stabilizer_algebra(nice_form(NiceForm::w0), Signature::standard(0, 7), Scalars::complex)
            .size() == 14);
  CHECK(stabilizer_algebra(nice_form(NiceForm::sigma0), Signature::standard(0, 8),
                           Scalars::complex)
            .size() == 21);
}

TEST_CASE("algebras have independent generators of the right count") {
  struct Case {
    HolonomyId id;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {{Family::SO0, 1, 1}, 1},      {{Family::SO0, 2, 1}, 3},
      {{Family::U, 1, 1}, 4},        {{Family::U, 2, 0}, 4},
      {{Family::SU, 1, 1}, 3},       {{Family::SU, 2, 1}, 8},
      {{Family::Sp, 1, 1}, 10},      {{Family::SpSp1, 1, 1}, 13},
      {{Family::SpR_SL2R, 2, 0}, 13}, {{Family::SpC_SL2C, 2, 0}, 26},
      {{Family::SOC, 2, 0}, 2},      {{Family::SOC, 3, 0}, 6},
      {{Family::G2, 0, 0}, 14},      {{Family::G2star, 0, 0}, 14},
      {{Family::G2C, 0, 0}, 28},     {{Family::Spin7, 0, 0}, 21},
      {{Family::Spin43, 0, 0}, 21},  {{Family::Spin7C, 0, 0}, 42},
  };
  for (const auto& c : cases) {
    CAPTURE(display_name(c.id));
    const AlgebraPresentation pres = algebra(c.id);
    CHECK(pres.expected_dim == c.dim);
    CHECK(pres.signature == signature_of(c.id));
    CHECK(span_rank(flatten_all(pres.generators)) == c.dim);
  }
  CHECK(algebra({Family::SU, 1, 1}).generators.size() == 3);
  CHECK(algebra({Family::SO0, 1, 1}).route == Route::embedding);
  CHECK(algebra({Family::SpR_SL2R, 2, 0}).route == Route::tensor_metric);
  CHECK(algebra({Family::Spin43, 0, 0}).route == Route::form_stabilizer);
}

TEST_CASE("exceptional algebras close under the bracket") {
  for (Family f : {Family::G2, Family::G2star, Family::Spin7, Family::Spin43, Family::G2C,
                   Family::Spin7C}) {
    CAPTURE(family_name(f));
    const AlgebraPresentation pres = algebra({f, 0, 0});
    std::vector<FieldVector> all = flatten_all(pres.generators);
    for (std::size_t i = 0; i < pres.generators.size(); ++i)
      for (std::size_t j = i + 1; j < pres.generators.size(); ++j) {
        const FieldMatrix &x = pres.generators[i].mat, &y = pres.generators[j].mat;
        all.push_back(flatten(x * y - y * x));
      }
    CHECK(span_rank(all) == pres.expected_dim);
  }
}

namespace {

using Combo = std::vector<std::array<int, 3>>;

// 14 combinations spanning the compact 3-form stabilizer in so(7)
const std::vector<Combo> kG2Span = {
    {{1, 1, 2}, {-1, 3, 4}}, {{1, 1, 2}, {-1, 5, 6}}, {{1, 1, 3}, {1, 2, 4}},
    {{1, 1, 3}, {-1, 6, 7}}, {{1, 1, 4}, {-1, 2, 3}}, {{1, 1, 4}, {-1, 5, 7}},
    {{1, 1, 5}, {1, 2, 6}},  {{1, 1, 5}, {1, 4, 7}},  {{1, 1, 6}, {-1, 2, 5}},
    {{1, 1, 6}, {1, 3, 7}},  {{1, 1, 7}, {-1, 3, 6}}, {{1, 1, 7}, {-1, 4, 5}},
    {{1, 2, 7}, {-1, 3, 5}}, {{1, 2, 7}, {1, 4, 6}},
};

// 24 combinations spanning the compact 4-form stabilizer in so(8); the list
// is a spanning set of rank 21, not a basis.
const std::vector<Combo> kSpin7Span = {
    {{1, 1, 2}, {1, 3, 4}},  {{1, 1, 3}, {-1, 2, 4}}, {{1, 1, 4}, {1, 2, 3}},
    {{1, 5, 6}, {1, 7, 8}},  {{-1, 5, 7}, {1, 6, 8}}, {{1, 5, 8}, {1, 6, 7}},
    {{-1, 1, 5}, {1, 2, 6}}, {{1, 1, 2}, {1, 5, 6}},  {{1, 1, 6}, {1, 2, 5}},
    {{1, 3, 7}, {-1, 4, 8}}, {{1, 3, 4}, {1, 7, 8}},  {{1, 3, 8}, {1, 4, 7}},
    {{1, 1, 2}, {-1, 7, 8}}, {{1, 1, 7}, {1, 2, 8}},  {{1, 1, 8}, {-1, 2, 7}},
    {{1, 3, 4}, {-1, 5, 6}}, {{1, 3, 5}, {1, 4, 6}},  {{1, 3, 6}, {-1, 4, 5}},
    {{1, 1, 8}, {1, 3, 6}},  {{1, 1, 7}, {1, 3, 5}},  {{1, 2, 6}, {-1, 4, 8}},
    {{1, 2, 5}, {1, 3, 8}},  {{1, 2, 3}, {1, 6, 7}},  {{1, 2, 4}, {1, 5, 7}},
};

// the same spanning set with the three dependent elements dropped
const std::vector<Combo> kSpin7Basis21 = {
    {{1, 1, 2}, {1, 3, 4}},  {{1, 1, 3}, {-1, 2, 4}}, {{1, 1, 4}, {1, 2, 3}},
    {{1, 5, 6}, {1, 7, 8}},  {{-1, 5, 7}, {1, 6, 8}}, {{1, 5, 8}, {1, 6, 7}},
    {{-1, 1, 5}, {1, 2, 6}}, {{1, 1, 2}, {1, 5, 6}},  {{1, 1, 6}, {1, 2, 5}},
    {{1, 3, 7}, {-1, 4, 8}}, {{1, 3, 8}, {1, 4, 7}},  {{1, 1, 7}, {1, 2, 8}},
    {{1, 1, 8}, {-1, 2, 7}}, {{1, 3, 5}, {1, 4, 6}},  {{1, 3, 6}, {-1, 4, 5}},
    {{1, 1, 8}, {1, 3, 6}},  {{1, 1, 7}, {1, 3, 5}},  {{1, 2, 6}, {-1, 4, 8}},
    {{1, 2, 5}, {1, 3, 8}},  {{1, 2, 3}, {1, 6, 7}},  {{1, 2, 4}, {1, 5, 7}},
};

std::vector<FieldVector> combo_span(const Signature& sig, const std::vector<Combo>& combos) {
  std::vector<FieldVector> out;
  for (const auto& c : combos) out.push_back(flatten(ecombo(sig, c)));
  return out;
}

// realified versions X and iX of each combination, for the complex algebras
std::vector<FieldVector> combo_span_complexified(const Signature& compact,
                                                 const std::vector<Combo>& combos) {
  std::vector<FieldVector> out;
  for (const auto& c : combos) {
    const FieldMatrix x = ecombo(compact, c);
    out.push_back(flatten(realify(x)));
    out.push_back(flatten(realify(x * FieldScalar::i())));
  }
  return out;
}

}  // namespace

TEST_CASE("exceptional algebras match hand-listed spanning sets") {
  const Signature so7 = Signature::standard(0, 7), so8 = Signature::standard(0, 8);

  CHECK(span_equal(flatten_all(algebra({Family::G2, 0, 0}).generators),
                   combo_span(so7, kG2Span)));

  const auto spin7_list = combo_span(so8, kSpin7Span);
  CHECK(span_rank(spin7_list) == 21);
  CHECK(span_equal(flatten_all(algebra({Family::Spin7, 0, 0}).generators), spin7_list));

  CHECK(span_equal(flatten_all(algebra({Family::G2C, 0, 0}).generators),
                   combo_span_complexified(so7, kG2Span)));
  CHECK(span_equal(flatten_all(algebra({Family::Spin7C, 0, 0}).generators),
                   combo_span_complexified(so8, kSpin7Basis21)));
}

TEST_CASE("compact unitary and symplectic algebras match their hand lists") {
  const Signature so4 = Signature::standard(0, 4);
  const std::vector<Combo> su2 = {
      {{1, 1, 3}, {1, 2, 4}}, {{1, 1, 4}, {-1, 2, 3}}, {{1, 1, 2}, {-1, 3, 4}}};
  CHECK(span_equal(flatten_all(algebra({Family::SU, 0, 2}).generators), combo_span(so4, su2)));

  const Signature so6 = Signature::standard(0, 6);
  const std::vector<Combo> su3 = {
      {{1, 1, 3}, {1, 2, 4}},  {{1, 1, 5}, {1, 2, 6}},  {{1, 3, 5}, {1, 4, 6}},
      {{1, 1, 4}, {-1, 2, 3}}, {{1, 1, 6}, {-1, 2, 5}}, {{1, 3, 6}, {-1, 4, 5}},
      {{1, 1, 2}, {-1, 3, 4}}, {{1, 1, 2}, {-1, 5, 6}}};
  CHECK(span_equal(flatten_all(algebra({Family::SU, 0, 3}).generators), combo_span(so6, su3)));

  const Signature so8 = Signature::standard(0, 8);
  const std::vector<Combo> sp2 = {
      {{1, 1, 5}, {1, 2, 6}, {1, 3, 7}, {1, 4, 8}},
      {{1, 1, 6}, {-1, 2, 5}, {-1, 3, 8}, {1, 4, 7}},
      {{1, 1, 7}, {1, 2, 8}, {-1, 3, 5}, {-1, 4, 6}},
      {{1, 1, 8}, {-1, 2, 7}, {1, 3, 6}, {-1, 4, 5}},
      {{1, 1, 3}, {1, 2, 4}},
      {{1, 1, 4}, {-1, 2, 3}},
      {{1, 5, 7}, {1, 6, 8}},
      {{1, 5, 8}, {-1, 6, 7}},
      {{1, 1, 2}, {-1, 3, 4}},
      {{1, 5, 6}, {-1, 7, 8}}};
  CHECK(span_equal(flatten_all(algebra({Family::Sp, 0, 2}).generators), combo_span(so8, sp2)));
}

TEST_CASE("the scalar factor commutes with the quaternion-linear part") {
  const AlgebraPresentation pres = algebra({Family::SpSp1, 1, 1});
  REQUIRE(pres.generators.size() == 13);
  const FieldMatrix &ri = pres.generators[10].mat, &rj = pres.generators[11].mat,
                    &rk = pres.generators[12].mat;
  for (std::size_t i = 0; i < 10; ++i) {
    const FieldMatrix& x = pres.generators[i].mat;
    CHECK(x * ri == ri * x);
    CHECK(x * rj == rj * x);
    CHECK(x * rk == rk * x);
  }
  CHECK(ri * ri == -FieldMatrix::identity(8));
  CHECK(rj * rj == -FieldMatrix::identity(8));
  CHECK(rk * rk == -FieldMatrix::identity(8));
  CHECK(ri * rj == -rk);
  CHECK(ri * rj - rj * ri == rk * FieldScalar(-2));
}
