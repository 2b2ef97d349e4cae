#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "opdcat/tmonad.hpp"

using namespace opdcat;

TEST_CASE("TX sizes") {
  TruncatedOperad a2 = ass_operad(2);
  LabelledOpCategory TX = apply_T(a2, fx::disc_over(a2, 2));
  CHECK(TX.TX->n_objects() == 11);  // 1 + 2 + 2 * 4
  TruncatedOperad c2 = com_operad(2);
  LabelledOpCategory TC = apply_T(c2, fx::disc_over(c2, 1));
  CHECK(TC.TX->n_objects() == 3);
  CHECK(TC.TX->n_arrows() == 4);  // identities plus the swap
}

TEST_CASE("factorization into levelwise then permutative") {
  TruncatedOperad c2 = com_operad(2);
  ObjOverI X = over_discrete(c2, fx::z2cat(), {0});
  LabelledOpCategory TX = apply_T(c2, X);
  for (int f = 0; f < TX.TX->n_arrows(); ++f) {
    auto [lev, per] = TX.factor(f);
    CHECK(TX.levelwise[lev]);
    CHECK(TX.permutative[per]);
    CHECK(TX.TX->compose(lev, per) == f);
  }
}

TEST_CASE("unit and multiplication closed forms") {
  TruncatedOperad c2 = com_operad(2);
  TruncatedOperad a2 = ass_operad(2);
  TruncatedOperad fb = free_binary_operad();
  auto run = [](const TruncatedOperad& T, const ObjOverI& X) {
    fx::EtaMuCheck r = fx::check_eta_mu_formulas(T, X);
    CHECK(r.ok);
    CHECK(r.checked > 0);
  };
  run(c2, fx::disc_over(c2, 1));
  run(c2, over_discrete(c2, fx::z2cat(), {0}));
  run(a2, fx::disc_over(a2, 2));
  run(a2, over_discrete(a2, fx::walking_arrow(), {0, 0}));
  run(fb, fx::disc_over(fb, 3, {0, 1, 0}));
}

TEST_CASE("monad laws on small fixtures") {
  TruncatedOperad c2 = com_operad(2);
  MonadLawReport r = check_monad_laws(c2, fx::disc_over(c2, 1));
  CHECK(r.ok);
  CHECK(r.assoc_coverage > 0);
  TruncatedOperad a2 = ass_operad(2);
  MonadLawReport r2 = check_monad_laws(a2, fx::disc_over(a2, 2));
  CHECK(r2.ok);
  CHECK(r2.assoc_coverage > 0);
}

TEST_CASE("permutative sub-bundle") {
  TruncatedOperad c2 = com_operad(2);
  LabelledOpCategory TX = apply_T(c2, fx::disc_over(c2, 1));
  T1SigmaResult t = t1_sigma(TX);
  CHECK(t.cat->n_objects() == 4);  // three identities and the swap
  CHECK(check_functor(t.incl).empty());
  CHECK(check_functor(t.section).empty());
  CHECK(check_nat(t.alpha).empty());
}

TEST_CASE("quotient object counts") {
  TruncatedOperad c2 = com_operad(2);
  LabelledOpCategory TX = apply_T(c2, fx::disc_over(c2, 2));
  QuotientResult Q = quotient(TX);
  CHECK(Q.Q->n_objects() == 6);  // 1 + 2 + multisets {xx, xy, yy}
  CHECK(Q.Q->is_discrete());
  CHECK(Q.Q->n_objects() == fx::orbit_count_discrete(c2, fx::disc_over(c2, 2)));
}

TEST_CASE("Ass mod Sigma is the free-monoid monad at desk scale") {
  TruncatedOperad a4 = ass_operad(4);
  LabelledOpCategory TX = apply_T(a4, fx::disc_over(a4, 2));
  QuotientResult Q = quotient(TX);
  CHECK(Q.Q->n_objects() == 31);  // words of length at most 4 in two letters
  CHECK(Q.Q->is_discrete());
}

TEST_CASE("quotient agrees with the congruence closure") {
  TruncatedOperad a2 = ass_operad(2);
  ObjOverI X = over_discrete(a2, fx::z2cat(), {0});
  LabelledOpCategory TX = apply_T(a2, X);
  QuotientResult Q = quotient(TX);
  std::vector<int> kill;
  for (int f = 0; f < TX.TX->n_arrows(); ++f)
    if (TX.permutative[f] && !TX.TX->is_identity(f)) kill.push_back(f);
  CoidentResult C = coidentify(TX.TX, kill);
  REQUIRE(C.ok);
  CHECK(find_isomorphism(Q.Q, C.C).has_value());
}

TEST_CASE("quotient monad structure descends") {
  TruncatedOperad c2 = com_operad(2);
  TmodSigmaResult r = tmodsigma_monad(c2, fx::disc_over(c2, 2));
  REQUIRE(r.ok);
  CHECK(check_functor(r.unit).empty());
  CHECK(check_functor(r.mult).empty());
}

TEST_CASE("T on functors and natural transformations") {
  TruncatedOperad c2 = com_operad(2);
  ObjOverI X = over_discrete(c2, fx::z2cat(), {0});
  LabelledOpCategory TX = apply_T(c2, X);
  FinFunctor id = identity_functor(X.X);
  FinFunctor Tid = apply_T_arrow(TX, TX, id);
  CHECK(functors_equal(Tid, identity_functor(TX.TX)));
  FinNatTrans one = identity_nat(id);
  FinNatTrans Tone = apply_T_2cell(TX, TX, one);
  CHECK(check_nat(Tone).empty());
}
