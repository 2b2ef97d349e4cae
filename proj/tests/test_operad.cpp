#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "opdcat/operad.hpp"

using namespace opdcat;

TEST_CASE("stock operads validate") {
  CHECK(validate_operad(com_operad(3)).empty());
  CHECK(validate_operad(ass_operad(3)).empty());
  CHECK(validate_operad(free_binary_operad()).empty());
  CHECK(validate_operad(category_as_operad(fx::walking_arrow())).empty());
  CHECK(validate_operad(category_as_operad(fx::z2cat())).empty());
}

TEST_CASE("operad sizes") {
  CHECK(com_operad(3).ops.size() == 4);
  CHECK(ass_operad(3).ops.size() == 10);  // 1 + 1 + 2 + 6
  TruncatedOperad a2 = ass_operad(2);
  Permutation sw = Permutation::from_one_indexed({2, 1});
  int m = a2.op("a2[1,2]");
  REQUIRE(m >= 0);
  CHECK(a2.act(m, sw) == a2.op("a2[2,1]"));
  CHECK(a2.comp(m, {a2.unit[0], a2.unit[0]}) == m);
  CHECK(a2.comp(m, {m, m}) == -1);  // over the arity bound
}

TEST_CASE("json roundtrip of operads") {
  for (const auto& T : {com_operad(2), ass_operad(2), free_binary_operad()}) {
    TruncatedOperad U = read_operad(write_operad(T));
    CHECK(validate_operad(U).empty());
    CHECK(operad_isomorphic(T, U));
    CHECK(write_operad(U) == write_operad(T));
  }
}

TEST_CASE("associated polynomial of ass3") {
  OperadToPoly P = to_polynomial(ass_operad(3));
  CHECK(validate_polynomial(P.M.carrier).empty());
  CHECK(P.M.carrier.B->n_objects() == 10);
  CHECK(P.M.carrier.B->n_arrows() == 42);  // sum over n of (n!)^2
  CHECK(pi0(P.M.carrier.B).comp->n_objects() == 4);  // one per arity
  CHECK(validate_poly_morphism(P.M.unit).empty());
  CHECK(validate_poly_morphism(P.M.mult).empty());
  CHECK(classify_over_S(P.M.carrier, P.intoS).operad);
}

TEST_CASE("polynomial roundtrip reconstructs the operad") {
  for (const auto& T :
       {com_operad(3), ass_operad(3), free_binary_operad(),
        category_as_operad(fx::walking_arrow()),
        category_as_operad(fx::z2cat())}) {
    OperadToPoly P = to_polynomial(T);
    TruncatedOperad U = from_polynomial(P.M, P.S, P.intoS);
    CHECK(operad_isomorphic(T, U));
  }
}

TEST_CASE("sigma-freeness criteria agree") {
  SigmaFreeReport a = sigma_free(ass_operad(3));
  CHECK(a.direct);
  CHECK(a.via_B);
  CHECK(a.via_pullback);
  SigmaFreeReport c = sigma_free(com_operad(3));
  CHECK(!c.direct);
  CHECK(c.agree());
  SigmaFreeReport f = sigma_free(free_binary_operad());
  CHECK(f.direct);
  CHECK(f.agree());
  SigmaFreeReport g = sigma_free(category_as_operad(fx::z2cat()));
  CHECK(g.direct);
  CHECK(g.agree());
}

TEST_CASE("morphism enumeration finds the fold map") {
  TruncatedOperad A = ass_operad(2), C = com_operad(2);
  auto hs = enumerate_operad_morphisms(A, C);
  bool found = false;
  for (const auto& h : hs)
    if (validate_operad_morphism(h).empty()) found = true;
  CHECK(found);
}
