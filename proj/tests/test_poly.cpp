#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "opdcat/poly.hpp"

using namespace opdcat;

TEST_CASE("truncated symmetric polynomial") {
  TruncatedS S = truncated_s(2);
  CHECK(S.poly.B->n_objects() == 3);
  CHECK(S.poly.B->n_arrows() == 4);  // sum over n of n!
  CHECK(S.poly.E->n_objects() == 3);  // sum over n of n
  CHECK(validate_polynomial(S.poly).empty());
  Permutation sw = Permutation::from_one_indexed({2, 1});
  CHECK(S.b_arrow(2, sw) >= 0);
  CHECK(S.b_perm[S.b_arrow(2, sw)] == sw);
  CHECK(S.e_obj(2, 1) >= 0);
}

TEST_CASE("identity polynomial and monad data") {
  CatPtr I = fx::disc({"i", "j"});
  Polynomial P = identity_poly(I);
  CHECK(validate_polynomial(P).empty());
  PolyMonadData M = identity_monad_data(I);
  CHECK(validate_poly_morphism(M.unit).empty());
  CHECK(validate_poly_morphism(M.mult).empty());
  CHECK(M.coverage_B == 1.0);
}

TEST_CASE("composition of associated polynomials") {
  Polynomial P = to_polynomial(ass_operad(2)).M.carrier;
  ComposeResult C = compose_polynomials(P, P);
  CHECK(validate_polynomial(C.comp).empty());
  CHECK(is_equiv_discrete(*C.comp.B));
}

TEST_CASE("pi0 polynomial exists iff sigma-free") {
  Pi0PolyResult bad = pi0_polynomial(to_polynomial(com_operad(2)).M.carrier);
  CHECK(!bad.ok);
  CHECK(bad.error == "NotSigmaFree");
  Pi0PolyResult good = pi0_polynomial(to_polynomial(ass_operad(2)).M.carrier);
  REQUIRE(good.ok);
  CHECK(validate_polynomial(good.P).empty());
  CHECK(good.P.B->n_objects() == 3);  // one component per arity
  CHECK(good.P.B->is_discrete());
}

TEST_CASE("classification over S") {
  OperadToPoly a = to_polynomial(ass_operad(2));
  Classification ca = classify_over_S(a.M.carrier, a.intoS);
  CHECK(ca.operad);
  CHECK(ca.sigma_free);
  CHECK(ca.club);  // one colour
  OperadToPoly c = to_polynomial(com_operad(2));
  Classification cc = classify_over_S(c.M.carrier, c.intoS);
  CHECK(cc.operad);
  CHECK(!cc.sigma_free);
  OperadToPoly f = to_polynomial(free_binary_operad());
  Classification cf = classify_over_S(f.M.carrier, f.intoS);
  CHECK(cf.operad);
  CHECK(cf.sigma_free);
  CHECK(!cf.club);  // two colours
}

TEST_CASE("restriction is a sub-polynomial") {
  Polynomial P = to_polynomial(com_operad(2)).M.carrier;
  std::vector<char> keep(P.B->n_objects(), 1);
  keep.back() = 0;
  SubPoly S = restrict_poly(P, keep);
  CHECK(validate_polynomial(S.P).empty());
  CHECK(S.P.B->n_objects() == P.B->n_objects() - 1);
}
