#include <doctest.h>

#include <stdexcept>

#include "holospin/spinor.hpp"

using namespace holospin;

namespace {

const FieldScalar I = FieldScalar::i();

Spinor u_of(std::vector<int> signs) { return u_spinor(EpsilonTuple(std::move(signs))); }

Spinor u_sum(std::size_t m, std::initializer_list<std::pair<FieldScalar, std::vector<int>>> terms) {
  FieldVector coords(std::size_t{1} << m);
  for (const auto& [c, signs] : terms) coords[EpsilonTuple(signs).index()] += c;
  return {SpinorBasis::u_tensor, std::move(coords)};
}

}  // namespace

TEST_CASE("epsilon tuple indexing") {
  // u(+1,...,+1) is coordinate 0, eps_1 drives the lowest bit
  CHECK(EpsilonTuple({1, 1}).index() == 0);
  CHECK(EpsilonTuple({1, -1}).index() == 1);
  CHECK(EpsilonTuple({-1, 1}).index() == 2);
  CHECK(EpsilonTuple({-1, -1}).index() == 3);
  CHECK(EpsilonTuple({1, -1, -1, 1}).index() == 6);
  CHECK(EpsilonTuple({-1, 1, 1, -1}).index() == 9);

  EpsilonTuple t({1, -1, 1});
  CHECK(t.m() == 3);
  CHECK(t.eps(1) == 1);   // rightmost
  CHECK(t.eps(2) == -1);
  CHECK(t.eps(3) == 1);   // leftmost
  CHECK(t.product() == -1);
  CHECK(t.negated() == EpsilonTuple({-1, 1, -1}));
  CHECK(t.str() == "(1,-1,1)");

  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t q = 0; q < (std::size_t{1} << m); ++q)
      CHECK(EpsilonTuple::from_index(q, m).index() == q);

  CHECK_THROWS_AS(EpsilonTuple({0}), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonTuple::from_index(4, 2), std::invalid_argument);
}

TEST_CASE("basis change matches the tensor definition") {
  FieldScalar h = FieldScalar::inv_sqrt2();
  SUBCASE("single slot") {
    Spinor plus = u_to_standard(u_of({1}));
    CHECK(plus.coords == FieldVector{h, -h * I});
    Spinor minus = u_to_standard(u_of({-1}));
    CHECK(minus.coords == FieldVector{h, h * I});
  }
  SUBCASE("two slots agree with an explicit kronecker column") {
    // u(-1,1) = u(-1) x u(1)
    Spinor v = u_to_standard(u_of({-1, 1}));
    FieldVector expect{h * h, h * (-h * I), (h * I) * h, (h * I) * (-h * I)};
    CHECK(v.coords == expect);
  }
  SUBCASE("round trip and idempotent tagging") {
    for (std::size_t q = 0; q < 8; ++q) {
      Spinor v = u_spinor(EpsilonTuple::from_index(q, 3));
      Spinor back = standard_to_u(u_to_standard(v));
      CHECK(back.basis == SpinorBasis::u_tensor);
      CHECK(back.coords == v.coords);
    }
    Spinor w = u_of({1, -1});
    CHECK(in_basis(w, SpinorBasis::u_tensor).coords == w.coords);
  }
  SUBCASE("u columns are orthonormal for the definite Hermitian product") {
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t a = 0; a < (std::size_t{1} << m); ++a)
        for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
          Spinor ua = u_to_standard(u_spinor(EpsilonTuple::from_index(a, m)));
          Spinor ub = u_to_standard(u_spinor(EpsilonTuple::from_index(b, m)));
          CHECK(vec_dot_herm(ua.coords, ub.coords) == FieldScalar(a == b ? 1 : 0));
        }
  }
}

TEST_CASE("two by two blocks act on u(eps) as pinned") {
  // T u(e) = -e u(e); U u(e) = i u(-e); V u(e) = e u(-e)
  CliffordRep rep = build_rep(Signature::standard(0, 2));
  for (int e : {1, -1}) {
    Spinor ue = u_to_standard(u_of({e}));
    FieldVector via_u = standard_to_u({SpinorBasis::standard, rep.action(1).apply(ue.coords)}).coords;
    // Phi(e_1) = U
    FieldVector expect(2);
    expect[EpsilonTuple({-e}).index()] = I;
    CHECK(via_u == expect);
    // Phi(e_2) = V
    via_u = standard_to_u({SpinorBasis::standard, rep.action(2).apply(ue.coords)}).coords;
    expect = FieldVector(2);
    expect[EpsilonTuple({-e}).index()] = FieldScalar(e);
    CHECK(via_u == expect);
  }
}

TEST_CASE("chirality grading") {
  Signature sig4 = Signature::standard(2, 2);
  CHECK(chirality(sig4, u_of({1, 1})) == Chirality::plus);
  CHECK(chirality(sig4, u_of({1, -1})) == Chirality::minus);
  CHECK(chirality(sig4, u_sum(2, {{FieldScalar(1), {1, 1}}, {I, {-1, -1}}})) == Chirality::plus);
  CHECK(chirality(sig4, u_sum(2, {{FieldScalar(1), {1, 1}}, {I, {-1, 1}}})) == Chirality::mixed);

  // psi = u(1,-1,-1,1) - u(-1,1,1,-1) is a positive spinor
  Signature sig8 = Signature::standard(4, 4);
  Spinor psi = u_sum(4, {{FieldScalar(1), {1, -1, -1, 1}}, {FieldScalar(-1), {-1, 1, 1, -1}}});
  CHECK(chirality(sig8, psi) == Chirality::plus);

  // works on standard coordinates too
  CHECK(chirality(sig4, u_to_standard(u_of({1, -1}))) == Chirality::minus);

  CHECK_THROWS_AS(chirality(Signature::standard(0, 3), u_of({1})), std::domain_error);
  CHECK_THROWS_AS(chirality(sig4, Spinor{SpinorBasis::u_tensor, FieldVector(4)}),
                  std::invalid_argument);
}

TEST_CASE("inner product pinned values") {
  SUBCASE("standard(2,2) diagonal") {
    CliffordRep rep = build_rep(Signature::standard(2, 2));
    CHECK(inner(rep, u_of({1, 1}), u_of({1, 1})) == FieldScalar(1));
  }
  SUBCASE("standard(4,3): <phi,phi> = 2") {
    CliffordRep rep = build_rep(Signature::standard(4, 3));
    Spinor phi = u_sum(3, {{FieldScalar(1), {1, 1, 1}}, {I, {-1, -1, -1}}});
    CHECK(inner(rep, phi, phi) == FieldScalar(2));
  }
  SUBCASE("r = 0 is rejected") {
    CliffordRep rep = build_rep(Signature::standard(0, 2));
    CHECK_THROWS_AS(inner(rep, u_of({1}), u_of({1})), std::domain_error);
  }
  SUBCASE("mixed bases are rejected") {
    CliffordRep rep = build_rep(Signature::standard(2, 2));
    CHECK_THROWS_AS(inner(rep, u_of({1, 1}), u_to_standard(u_of({1, 1}))),
                    std::invalid_argument);
  }
}

TEST_CASE("closed form, standard signatures") {
  EpsilonTuple pp({1, 1}), pm({1, -1}), mp({-1, 1}), mm({-1, -1});
  CHECK(inner_closed_standard(2, 2, pp, pm) == FieldScalar(0));
  CHECK(inner_closed_standard(2, 2, pm, pm) == FieldScalar(-1));
  CHECK(inner_closed_standard(2, 2, mm, mm) == FieldScalar(-1));
  CHECK(inner_closed_standard(2, 2, mp, mp) == FieldScalar(1));
  EpsilonTuple w({1, -1, -1, 1});
  CHECK(inner_closed_standard(4, 4, w, w) == FieldScalar(-1));
  CHECK_THROWS_AS(inner_closed_standard(1, 1, pp, pp), std::domain_error);
  CHECK_THROWS_AS(inner_closed_standard(2, 2, pp, EpsilonTuple({1})), std::invalid_argument);
}

TEST_CASE("closed form, interleaved signatures") {
  EpsilonTuple pp({1, 1}), mm({-1, -1}), pm({1, -1}), mp({-1, 1});
  CHECK(inner_closed_interleaved(2, pp, pp) == FieldScalar(0));
  CHECK(inner_closed_interleaved(2, pp, mm) == -I);
  CHECK(inner_closed_interleaved(2, pm, mp) == I);   // eps_1 = -1, read from the first tuple
  CHECK(inner_closed_interleaved(2, mp, pm) == -I);  // eps_1 = +1
  EpsilonTuple t3({1, 1, 1});
  CHECK(inner_closed_interleaved(3, t3, t3.negated()) == -I);
  // r = 1 hyperbolic pair
  EpsilonTuple p1({1});
  CHECK(inner_closed_interleaved(1, p1, p1.negated()) == FieldScalar(-1));
  CHECK(inner_closed_interleaved(1, p1, p1) == FieldScalar(0));
}

TEST_CASE("oracle agreement between inner and the closed forms") {
  SUBCASE("standard, even r, exhaustive to n = 8") {
    for (std::size_t r = 2; r <= 8; r += 2)
      for (std::size_t s = 0; r + s <= 8; ++s) {
        if (r + s < 2) continue;
        CliffordRep rep = build_rep(Signature::standard(r, s));
        std::size_t m = (r + s) / 2;
        for (std::size_t a = 0; a < (std::size_t{1} << m); ++a)
          for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
            EpsilonTuple ta = EpsilonTuple::from_index(a, m);
            EpsilonTuple tb = EpsilonTuple::from_index(b, m);
            CAPTURE(r); CAPTURE(s); CAPTURE(a); CAPTURE(b);
            CHECK(inner(rep, u_spinor(ta), u_spinor(tb)) == inner_closed_standard(r, s, ta, tb));
          }
      }
  }
  SUBCASE("interleaved, exhaustive to r = 4") {
    for (std::size_t r = 1; r <= 4; ++r) {
      CliffordRep rep = build_rep(Signature::interleaved(r));
      for (std::size_t a = 0; a < (std::size_t{1} << r); ++a)
        for (std::size_t b = 0; b < (std::size_t{1} << r); ++b) {
          EpsilonTuple ta = EpsilonTuple::from_index(a, r);
          EpsilonTuple tb = EpsilonTuple::from_index(b, r);
          CAPTURE(r); CAPTURE(a); CAPTURE(b);
          CHECK(inner(rep, u_spinor(ta), u_spinor(tb)) == inner_closed_interleaved(r, ta, tb));
        }
    }
  }
  SUBCASE("interleaved, spot tuples at r = 7 and 8") {
    for (std::size_t r : {std::size_t{7}, std::size_t{8}}) {
      CliffordRep rep = build_rep(Signature::interleaved(r));
      EpsilonTuple all_plus = EpsilonTuple::from_index(0, r);
      EpsilonTuple alt = EpsilonTuple::from_index(0x55 & ((1 << r) - 1), r);
      for (const EpsilonTuple& a : {all_plus, alt}) {
        CHECK(inner(rep, u_spinor(a), u_spinor(a.negated())) ==
              inner_closed_interleaved(r, a, a.negated()));
        CHECK(inner(rep, u_spinor(a), u_spinor(a)) == FieldScalar(0));
      }
    }
  }
}

TEST_CASE("form is hermitian and infinitesimally invariant") {
  std::vector<Signature> sigs;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t r = 1; r <= n; ++r) sigs.push_back(Signature::standard(r, n - r));
  sigs.push_back(Signature::standard(2, 6));
  sigs.push_back(Signature::standard(4, 4));
  sigs.push_back(Signature::standard(1, 7));
  sigs.push_back(Signature::interleaved(4));

  for (const Signature& sig : sigs) {
    CliffordRep rep = build_rep(sig);
    FieldMatrix form = inner_form_matrix(rep);
    // hermitian: M = M^H
    CHECK(form == form.conj_i().transpose());
    // invariance: M L + L^H M = 0 for every lifted E_kl, equivalent by
    // sesquilinearity to <Lu,v> + <u,Lv> = 0 on all pairs
    for (std::size_t k = 1; k <= sig.n(); ++k)
      for (std::size_t l = k + 1; l <= sig.n(); ++l) {
        SpinMatrix lx = lift(rep, e_matrix(sig, k, l));
        CAPTURE(sig.str()); CAPTURE(k); CAPTURE(l);
        CHECK((form * lx + lx.conj_i().transpose() * form).is_zero());
      }
  }

  // spot exhaustive pair check on one signature
  Signature sig = Signature::standard(2, 2);
  CliffordRep rep = build_rep(sig);
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t l = k + 1; l <= 4; ++l) {
      SpinMatrix lx = lift(rep, e_matrix(sig, k, l));
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          Spinor ua = u_to_standard(u_spinor(EpsilonTuple::from_index(a, 2)));
          Spinor ub = u_to_standard(u_spinor(EpsilonTuple::from_index(b, 2)));
          Spinor lua{SpinorBasis::standard, lx.apply(ua.coords)};
          Spinor lub{SpinorBasis::standard, lx.apply(ub.coords)};
          CHECK(inner(rep, lua, ub) + inner(rep, ua, lub) == FieldScalar(0));
        }
    }
}

TEST_CASE("inner form matrix reproduces inner()") {
  for (const Signature& sig : {Signature::standard(2, 3), Signature::interleaved(2)}) {
    CliffordRep rep = build_rep(sig);
    FieldMatrix form = inner_form_matrix(rep);
    std::size_t dim = rep.dim();
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        FieldVector xa(dim), xb(dim);
        xa[a] = FieldScalar(1);
        xb[b] = FieldScalar(1);
        Spinor sa{SpinorBasis::standard, xa}, sb{SpinorBasis::standard, xb};
        // conj(y)^t M x with x = e_a, y = e_b picks entry (b,a)
        CHECK(inner(rep, sa, sb) == form.at(b, a));
      }
  }
}

TEST_CASE("chirality orthogonality structure of the form") {
  // r, s both even: opposite chiralities are orthogonal
  for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 4}, {4, 4}, {2, 6}, {4, 2}, {6, 2}}) {
    CliffordRep rep = build_rep(Signature::standard(r, s));
    std::size_t m = (r + s) / 2;
    for (std::size_t a = 0; a < (std::size_t{1} << m); ++a)
      for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
        EpsilonTuple ta = EpsilonTuple::from_index(a, m);
        EpsilonTuple tb = EpsilonTuple::from_index(b, m);
        if (ta.product() != tb.product())
          CHECK(inner(rep, u_spinor(ta), u_spinor(tb)) == FieldScalar(0));
      }
  }
  // r, s both odd: each chirality half is totally isotropic
  for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {3, 1}, {3, 3}, {1, 5}, {3, 5}}) {
    CliffordRep rep = build_rep(Signature::standard(r, s));
    std::size_t m = (r + s) / 2;
    for (std::size_t a = 0; a < (std::size_t{1} << m); ++a)
      for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
        EpsilonTuple ta = EpsilonTuple::from_index(a, m);
        EpsilonTuple tb = EpsilonTuple::from_index(b, m);
        if (ta.product() == tb.product())
          CHECK(inner(rep, u_spinor(ta), u_spinor(tb)) == FieldScalar(0));
      }
  }
}

TEST_CASE("causal tags") {
  CHECK(causal_tag(FieldScalar(3)) == CausalTag::spacelike);
  CHECK(causal_tag(FieldScalar(rational(-1, 7))) == CausalTag::timelike);
  CHECK(causal_tag(FieldScalar(0)) == CausalTag::isotropic);
  CHECK(causal_tag(I) == CausalTag::non_real_norm);
  CHECK(causal_tag(FieldScalar::sqrt2() * FieldScalar(-2)) == CausalTag::non_real_norm);
  CHECK(std::string(causal_tag_name(CausalTag::timelike)) == "timelike");
  CHECK(std::string(chirality_name(Chirality::mixed)) == "mixed");
}

TEST_CASE("gram reports") {
  SUBCASE("quaternionic fixed basis in signature (4,4)") {
    CliffordRep rep = build_rep(Signature::standard(4, 4));
    std::vector<Spinor> basis{
        u_of({1, 1, 1, 1}),
        u_sum(4, {{FieldScalar(1), {1, 1, -1, -1}}, {FieldScalar(1), {-1, -1, 1, 1}}}),
        u_of({-1, -1, -1, -1})};
    GramReport g = gram_report(rep, basis);
    CHECK(g.gram.at(0, 0) == FieldScalar(1));
    CHECK(g.gram.at(1, 1) == FieldScalar(2));
    CHECK(g.gram.at(2, 2) == FieldScalar(1));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(g.tags[i] == CausalTag::spacelike);
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(g.gram.at(i, j).is_zero());
    }
  }
  SUBCASE("timelike psi in signature (4,4)") {
    CliffordRep rep = build_rep(Signature::standard(4, 4));
    Spinor psi = u_sum(4, {{FieldScalar(1), {1, -1, -1, 1}}, {FieldScalar(-1), {-1, 1, 1, -1}}});
    GramReport g = gram_report(rep, {psi});
    CHECK(g.gram.at(0, 0) == FieldScalar(-2));
    CHECK(g.tags[0] == CausalTag::timelike);
  }
}
