#pragma once
// Constructions on finite categories: pullbacks, arrow categories, pi0,
// discrete (op)fibration predicates, distributivity pullbacks along
// discrete opfibrations, coidentifier quotients by congruence closure,
// bounded functor enumeration and isomorphism search.
#include <functional>
#include <optional>

#include "opdcat/fincat.hpp"

namespace opdcat {

bool is_discrete_fibration(const FinFunctor& f);
bool is_discrete_opfibration(const FinFunctor& f);

// true iff every hom-set has at most one element and every arrow is
// invertible (Lemma: equivalent to the quotient q_X being fully faithful)
bool is_equiv_discrete(const FinCategory& x);
// oracle variant via full faithfulness of q_X : X -> pi0(X)
bool is_equiv_discrete_via_pi0(const CatPtr& x);

struct PullbackResult {
  CatPtr P;
  FinFunctor toA, toB;                       // projections
  std::vector<std::pair<int, int>> obj_pairs;  // P object -> (A obj, B obj)
  std::vector<std::pair<int, int>> arr_pairs;  // P arrow  -> (A arr, B arr)
  int obj_of(int a, int b) const;            // -1 if absent
  int arr_of(int f, int g) const;
  // the functor induced by hA : Z -> A, hB : Z -> B with F hA = G hB
  FinFunctor mediate(const FinFunctor& hA, const FinFunctor& hB) const;

  std::unordered_map<std::uint64_t, int> oidx_, aidx_;
};
PullbackResult pullback(const FinFunctor& F, const FinFunctor& G);

struct ArrowCatBundle {
  CatPtr base;
  CatPtr arrowCat;                      // object k = arrow k of base
  FinFunctor d, c;                      // domain / codomain projections
  FinNatTrans alpha;                    // d => c, component at f is f
  std::vector<std::pair<int, int>> squares;  // arrow -> (u, v) in base
  int obj_of_arrow(int f) const { return f; }
};
ArrowCatBundle arrow_category(const CatPtr& x);
// the image of F : X -> Y on arrow categories
FinFunctor arrow_functor(const FinFunctor& F, const ArrowCatBundle& ax,
                         const ArrowCatBundle& ay);

struct Pi0Result {
  CatPtr comp;                 // discrete category of components
  FinFunctor q;                // X -> comp
  std::vector<int> comp_of;    // object -> component index
};
Pi0Result pi0(const CatPtr& x);

struct DpbResult {
  FinFunctor f, g;             // inputs f : X -> Y, g : W -> X
  CatPtr Q, P;
  FinFunctor r;                // Q -> Y
  FinFunctor q;                // P -> Q
  FinFunctor p;                // P -> W
  // decode: Q object -> (Y object, W objects indexed by the fibre order)
  struct Sec { int y; std::vector<int> ws; };
  std::vector<Sec> sections;
  // Q arrow -> (Y arrow a, W arrows per fibre element of src(a))
  struct Fam { int a; int src; int dst; std::vector<int> gammas; };
  std::vector<Fam> families;
  std::vector<std::vector<int>> fibre;  // Y object -> X objects over it
  PullbackResult pb;                    // P = pullback(r, f)
};
// requires f to be a discrete opfibration; throws std::invalid_argument
// with "NotOpfibration" otherwise.  An optional predicate restricts the
// construction to the full subcategory on the sections it accepts
// (receives the Y object and the chosen W objects in fibre order).
using SectionKeep = std::function<bool(int y, const std::vector<int>& ws)>;
DpbResult dpb_along_dopfib(const FinFunctor& f, const FinFunctor& g,
                           const SectionKeep& keep = nullptr);

// Bounded terminality of the dpb: checks that the competing
// pullback-around-(f,g) given by (p2 : P2 -> W, q2 : P2 -> Q2, r2 : Q2 -> Y)
// admits exactly one morphism into the DpbResult.  Enumeration of the
// mediating pair is exhaustive; cap bounds the functor search.
bool dpb_terminal_against(const DpbResult& d, const FinFunctor& p2,
                          const FinFunctor& q2, const FinFunctor& r2,
                          std::string* why = nullptr);

// Smallest categorical congruence on x that makes every arrow in `kill`
// an identity, computed by fixed-point saturation.  All arrows in `kill`
// must be invertible; otherwise ok=false with error "KillNotInvertible".
struct CoidentResult {
  CatPtr C;
  FinFunctor q;
  std::vector<int> ocls, acls;   // object / arrow -> class index
  bool ok = true;
  std::string error;
};
CoidentResult coidentify(const CatPtr& x, const std::vector<int>& kill);

// Exhaustive functor enumeration dom -> cod subject to optional
// constraints; intended for small categories only.
struct FunctorSearch {
  CatPtr dom, cod;
  // arrows of dom that must map to identities
  std::vector<int> force_identity;
  // anchor square: require anchor_cod . h = anchor_dom (both given)
  std::optional<FinFunctor> anchor_dom, anchor_cod;
  // partial object assignment (-1 = free)
  std::vector<int> fixed_obj;
  std::size_t limit = 1u << 22;  // safety cap on explored nodes
};
std::vector<FinFunctor> enumerate_functors(const FunctorSearch& s);

// Isomorphism search (backtracking with degree invariants).  If anchors
// are given the isomorphism must commute with them.
std::optional<FinFunctor> find_isomorphism(
    const CatPtr& x, const CatPtr& y,
    const std::optional<FinFunctor>& anchor_x = std::nullopt,
    const std::optional<FinFunctor>& anchor_y = std::nullopt);

// Product of finitely many categories with canonical tuple ids
// "tup(a|b|...)".
struct ProductCat {
  CatPtr C;
  std::vector<CatPtr> factors;
  std::vector<std::vector<int>> obj_tuple, arr_tuple;
  int obj_of(const std::vector<int>& t) const;
  int arr_of(const std::vector<int>& t) const;
  std::unordered_map<std::string, int> oidx_, aidx_;
};
ProductCat product_cat(const std::vector<CatPtr>& factors);
FinFunctor product_proj(const ProductCat& p, int k);
// tuple of functors with common domain into the factors
FinFunctor into_product(const ProductCat& p, const std::vector<FinFunctor>& fs);
// componentwise product of functors Fi : dom.factors[i] -> cod.factors[i]
FinFunctor product_functor(const ProductCat& dom, const ProductCat& cod,
                           const std::vector<FinFunctor>& fs);

// Full subcategory on the kept objects, with inclusion and old->new
// index maps (-1 for dropped objects/arrows).
struct FullSubcat {
  CatPtr C;
  FinFunctor incl;
  std::vector<int> omap, amap;
};
FullSubcat full_subcat(const CatPtr& c, const std::vector<char>& keep);

CatPtr terminal_cat();
CatPtr discrete_cat(const std::vector<std::string>& objects);

}  // namespace opdcat
