#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "opdcat/catio.hpp"
#include "opdcat/catops.hpp"
#include "opdcat/perm.hpp"

using namespace opdcat;

TEST_CASE("builder composes in diagrammatic order") {
  FinCatBuilder b;
  int x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
  int f = b.add_arrow("f", x, y);
  int g = b.add_arrow("g", y, z);
  int h = b.add_arrow("h", x, z);
  b.set_comp(f, g, h);
  std::vector<Violation> errs;
  CatPtr C = b.finalize(&errs);
  CHECK(errs.empty());
  CHECK(C->compose(f, g) == h);
  CHECK(C->compose(C->identity[x], f) == f);
  CHECK(C->compose(f, C->identity[y]) == f);
  CHECK(C->n_arrows() == 6);
}

TEST_CASE("z2 category is a group") {
  CatPtr z2 = fx::z2cat();
  int s = z2->arr("s");
  CHECK(z2->compose(s, s) == z2->identity[0]);
  CHECK(z2->inverse(s) == s);
  CHECK(validate_category(*z2).empty());
}

TEST_CASE("opposite keeps indices") {
  CatPtr C = fx::walking_arrow();
  CatPtr O = opposite(C);
  CHECK(O->objects == C->objects);
  CHECK(O->n_arrows() == C->n_arrows());
  int u = C->arr("u");
  CHECK(O->arrows[u].src == C->arrows[u].tgt);
  CHECK(validate_category(*O).empty());
}

TEST_CASE("permutation conventions") {
  Permutation a = Permutation::from_one_indexed({2, 1, 3});
  Permutation b = Permutation::from_one_indexed({1, 3, 2});
  // (a b)(j) = a(b(j)); b sends 2 -> 3, a keeps 3
  CHECK(compose(a, b).one_indexed() == std::vector<int>{2, 3, 1});
  CHECK(shuffle_perm(2).one_indexed() == std::vector<int>{1, 3, 2, 4});
  // output block 1 of block_perm(swap; id_1, id_2) is input block 2
  Permutation sw = Permutation::from_one_indexed({2, 1});
  Permutation th = block_perm(
      sw, {Permutation::identity(1), Permutation::identity(2)});
  CHECK(th.one_indexed() == std::vector<int>{2, 3, 1});
  // with a twist inside the moved block
  Permutation tw = block_perm(sw, {Permutation::identity(1),
                                   Permutation::from_one_indexed({2, 1})});
  CHECK(tw.one_indexed() == std::vector<int>{3, 2, 1});
  CHECK(block_substitute(sw, {Permutation::identity(1),
                              Permutation::identity(2)})
            .is_valid());
}

TEST_CASE("pullback of cospan") {
  CatPtr A = fx::disc({"a1", "a2"});
  CatPtr I = fx::disc({"i"});
  FinFunctor f{A, I, {0, 0}, {0, 0}};
  PullbackResult P = pullback(f, f);
  CHECK(P.P->n_objects() == 4);
  CHECK(check_functor(P.toA).empty());
}

TEST_CASE("pi0 of the z2 category") {
  Pi0Result r = pi0(fx::z2cat());
  CHECK(r.comp->n_objects() == 1);
  CHECK(is_equiv_discrete(*fx::disc({"a", "b"})));
  CHECK(!is_equiv_discrete(*fx::walking_arrow()));
}

TEST_CASE("coidentify kills a loop") {
  CatPtr z2 = fx::z2cat();
  CoidentResult r = coidentify(z2, {z2->arr("s")});
  REQUIRE(r.ok);
  CHECK(r.C->n_objects() == 1);
  CHECK(r.C->n_arrows() == 1);  // s forced to the identity
  // coidentifying nothing is the identity quotient
  CoidentResult id = coidentify(z2, {});
  REQUIRE(id.ok);
  CHECK(id.C->n_arrows() == 2);
}

TEST_CASE("product categories use canonical tuple ids") {
  CatPtr a = fx::disc({"x", "y"});
  ProductCat P = product_cat({a, a});
  CHECK(P.C->n_objects() == 4);
  CHECK(P.C->obj("tup(x|y)") >= 0);
  ProductCat E = product_cat({});
  CHECK(E.C->n_objects() == 1);
  CHECK(E.C->objects[0] == "tup()");
}

TEST_CASE("functor enumeration respects forced identities") {
  CatPtr z2 = fx::z2cat();
  FunctorSearch s;
  s.dom = z2;
  s.cod = z2;
  CHECK(enumerate_functors(s).size() == 2);
  s.force_identity = {z2->arr("s")};
  CHECK(enumerate_functors(s).size() == 1);
}

TEST_CASE("category json roundtrip") {
  CatPtr C = fx::z2cat();
  std::vector<Violation> errs;
  CatPtr D = read_category(write_category(*C), &errs);
  REQUIRE(D);
  CHECK(errs.empty());
  CHECK(D->objects == C->objects);
  CHECK(D->n_arrows() == C->n_arrows());
  CHECK(write_category(*D) == write_category(*C));
}
