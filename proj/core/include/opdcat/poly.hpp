#pragma once
// Polynomials in Cat whose middle map is a discrete fibration and
// opfibration with finite fibres, their composition by the
// pullback / distributivity-pullback / pullback pipeline, morphisms,
// the truncated symmetric polynomial and classification over it.
#include "opdcat/catops.hpp"
#include "opdcat/perm.hpp"

namespace opdcat {

struct Polynomial {
  CatPtr I, E, B;
  FinFunctor s;  // E -> I
  FinFunctor p;  // E -> B
  FinFunctor t;  // B -> I
};

std::vector<Violation> validate_polynomial(const Polynomial& P);
Polynomial identity_poly(const CatPtr& I);

struct PolyMorphism {
  Polynomial dom, cod;
  FinFunctor f0;  // I -> I'
  FinFunctor f1;  // B -> B'
  FinFunctor f2;  // E -> E'
};
PolyMorphism identity_poly_morphism(const Polynomial& P);
// commutativity of the three squares plus the middle square being a
// pullback; error codes NotCommuting / NotPullback
std::vector<Violation> validate_poly_morphism(const PolyMorphism& m);

struct ComposeResult {
  Polynomial comp;      // composite P2 . P1 (P1 applied first)
  Polynomial p1, p2;
  PullbackResult mid;   // B1 x_J E2
  DpbResult dpb;        // around (p2, proj : mid -> E2); Q is the new B
  PullbackResult left;  // new E = F x_B1 E1
};
// keep, when given, restricts the composite to the full sub-polynomial
// on the accepted B objects; it receives the B2 object and the chosen
// mid-pullback objects (decode B1 components via ComposeResult::mid)
ComposeResult compose_polynomials(const Polynomial& P2, const Polynomial& P1,
                                  const SectionKeep& keep = nullptr);

// the pair of functors induced on composites by componentwise morphisms
std::pair<FinFunctor, FinFunctor> induced_on_composite(
    const ComposeResult& cr, const ComposeResult& cr2, const PolyMorphism& m2,
    const PolyMorphism& m1);

struct SubPoly {
  Polynomial P;            // restriction of the ambient polynomial
  FinFunctor incl_B, incl_E;
};
// full sub-polynomial on the given B objects (E restricted over them)
SubPoly restrict_poly(const Polynomial& P, const std::vector<char>& keep_B);

struct PolyMonadData {
  Polynomial carrier;
  PolyMorphism unit;               // from identity_poly(I)
  ComposeResult selfcomp;          // carrier . carrier
  SubPoly mult_dom;                // defined part of the self-composite
  PolyMorphism mult;               // mult_dom.P -> carrier
  double coverage_B = 1.0;         // fraction of B^(2) objects covered
};
PolyMonadData identity_monad_data(const CatPtr& I);

struct TruncatedS {
  int N = 0;
  Polynomial poly;                         // 1 <- P* <= N -> P <= N -> 1
  std::vector<int> pn_obj;                 // n -> B object
  std::vector<int> b_arity;                // B object -> n
  std::vector<Permutation> b_perm;         // B arrow -> permutation
  std::vector<std::pair<int, int>> e_slot; // E object -> (n, j) 0-indexed j
  std::vector<std::pair<Permutation, int>> e_arr;  // E arrow -> (rho, j)
  int b_arrow(int n, const Permutation& r) const;
  int e_obj(int n, int j) const;
  int e_arrow(int n, const Permutation& r, int j) const;
};
TruncatedS truncated_s(int N);

struct Classification {
  bool operad = false;     // I discrete and f1 a discrete fibration
  bool sigma_free = false; // additionally B equivalent to discrete
  bool club = false;       // I terminal
};
Classification classify_over_S(const Polynomial& P, const PolyMorphism& intoS);

struct Pi0PolyResult {
  bool ok = false;
  std::string error;       // "NotSigmaFree" when the square fails
  Polynomial P;            // componentwise pi0 polynomial
  FinFunctor q_B, q_E;
};
Pi0PolyResult pi0_polynomial(const Polynomial& P);

// PFun applied to an object of Cat/I presented by its anchor X -> I
struct PFunResult {
  CatPtr TX;
  FinFunctor anchor;       // TX -> I
  PullbackResult xe;       // X x_I E  (legs: toA = E side, toB = X side)
  DpbResult dpb;           // TX = Q of the dpb around (p, proj to E)
};
PFunResult apply_polynomial(const Polynomial& P, const FinFunctor& x_anchor);

}  // namespace opdcat
