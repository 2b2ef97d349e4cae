#pragma once
// Coherence data for categorified operad actions: morphisms into the
// operad of categories (lax / pseudo / strict / commutative), their
// transformations and modifications, the translation to and from lax
// actions of the labelled-operations monad, algebras in a symmetric
// monoidal category, and commutativization of strict algebras.
#include <map>
#include <memory>

#include <nlohmann/json.hpp>

#include "opdcat/catops.hpp"
#include "opdcat/tmonad.hpp"

namespace opdcat {

// H sends colour i to the category fibres[i] and each operation
// alpha : (i_1..i_n) -> i to a functor doms[alpha].C -> fibres[i], where
// doms[alpha] is the materialized product of the source fibres (empty
// product = terminal category).  The coherence cells are stored as raw
// component tables:
//   symmetries[(alpha,rho)][x]   : H_{alpha rho}(c_rho x) -> H_alpha(x)
//   units[i][x]                  : x -> H_{1_i}(x)
//   substitutions[(alpha,(beta_j))][x] : H_alpha((H_beta_j x_j)_j)
//                                        -> H_{alpha(beta_j)}(x)
// indexed by objects of the relevant product category; entries absent
// from the maps default to identity components.
struct LaxMorphismData {
  TruncatedOperad T;
  std::vector<CatPtr> fibres;
  std::vector<ProductCat> doms;
  std::vector<FinFunctor> products;
  std::map<std::pair<int, Permutation>, std::vector<int>> symmetries;
  std::vector<std::vector<int>> units;
  std::map<std::pair<int, std::vector<int>>, std::vector<int>> substitutions;

  // the factor-permuting functor doms[op].C -> doms[act(op,rho)].C,
  // (c_rho x)_j = x_{rho j}
  FinFunctor c_rho(int op, const Permutation& rho) const;
  // component accessors with the identity default
  int xi(int op, const Permutation& rho, int x) const;
  int nu(int colour, int x) const;
  int sig(int outer, const std::vector<int>& inners, int x) const;
  // whether an explicit table is present
  bool has_sig(int outer, const std::vector<int>& inners) const;
};

// builds the doms/products skeleton with every product functor given by
// the object/arrow tables in `on_objects`/`on_arrows` callbacks
LaxMorphismData make_lax_skeleton(const TruncatedOperad& T,
                                  std::vector<CatPtr> fibres);

struct AxiomIssue {
  std::string axiom;   // axiom family, e.g. "substitution-pentagon"
  std::string loc;     // normalized location, shared with the action side
  std::string detail;
};

struct CoherenceReport {
  bool ok = true;
  std::vector<AxiomIssue> issues;
  bool lax = false, pseudo = false, strict = false, commutative = false;
  long long checked = 0, skipped = 0;  // composition-bounded instances
  double coverage() const {
    return checked + skipped ? (double)checked / (double)(checked + skipped)
                             : 1.0;
  }
};

CoherenceReport validate_lax_morphism(const LaxMorphismData& D);
// the same data read with all coherence cells reversed, checked by
// passing to opposite categories
LaxMorphismData dualize(const LaxMorphismData& D);
CoherenceReport validate_colax_morphism(const LaxMorphismData& D);

// X together with a (possibly truncation-restricted) action of T
struct StrictTAlgebra {
  ObjOverI carrier;
  std::shared_ptr<LabelledOpCategory> dom;  // T carrier, maybe restricted
  FinFunctor action;                        // dom->TX -> carrier.X
};
// the free algebra (TZ, mu) on Z, action defined where composites exist
StrictTAlgebra free_algebra(const TruncatedOperad& T, const ObjOverI& Z);

struct AlgebraLawReport {
  bool ok = true;
  std::vector<Violation> issues;
  double assoc_coverage = 0.0;
};
AlgebraLawReport validate_strict_algebra(const TruncatedOperad& T,
                                         const StrictTAlgebra& A);

// disjoint union of fibres with objects tagged "c<i>:<id>"
struct FibredCat {
  CatPtr X;
  std::vector<CatPtr> fibres;
  std::vector<std::vector<int>> obj_in, arr_in;       // fibre-local -> X
  std::vector<std::pair<int, int>> obj_out, arr_out;  // X -> (fibre, local)
};
FibredCat coproduct_fibres(const std::vector<CatPtr>& fibres);

// action of T on the glued carrier, with unit and multiplication
// comparison cells; for strict data both cell tables are identities
struct LaxActionData {
  TruncatedOperad T;
  FibredCat glued;
  ObjOverI carrier;
  std::shared_ptr<LabelledOpCategory> TX;   // T carrier
  std::shared_ptr<LabelledOpCategory> T2d;  // defined part of T(T carrier)
  FinFunctor a;                             // TX -> carrier
  std::vector<int> abar0;  // per object x of the carrier: x -> a(eta x)
  std::vector<int> abar2;  // per object of T2d: a(Ta -) -> a(mu -)
};

// throws std::invalid_argument("ShapeMismatch") on inconsistent shapes
LaxActionData data_to_action(const LaxMorphismData& D);
LaxMorphismData action_to_data(const LaxActionData& A);
// the lax-algebra coherence laws for (a, abar0, abar2), reported with
// the same axiom/loc vocabulary as validate_lax_morphism
CoherenceReport validate_lax_action(const LaxActionData& A);

// transformation data (f_i, fbar_alpha); coherence entries absent from
// the map default to identity components
struct LaxNatData {
  const LaxMorphismData* dom = nullptr;  // H
  const LaxMorphismData* cod = nullptr;  // K
  std::vector<FinFunctor> components;    // f_i : H_i -> K_i
  // per op alpha, per object x of dom->doms[alpha].C:
  //   K_alpha((f x_j)_j) -> f_i(H_alpha x)
  std::map<int, std::vector<int>> coherences;

  int fbar(int op, int x) const;  // identity default
};
CoherenceReport validate_lax_natural(const LaxNatData& N);
CoherenceReport validate_colax_natural(const LaxNatData& N);

struct ModificationData {
  const LaxNatData* dom = nullptr;  // (f, fbar)
  const LaxNatData* cod = nullptr;  // (g, gbar)
  // per colour, per object x of H_i: f_i x -> g_i x
  std::vector<std::vector<int>> components;
};
CoherenceReport validate_modification(const ModificationData& M);

// a symmetric monoidal category presented as pseudo data over the
// one-colour commutative operad: fibre = V, products = iterated tensor
struct SymMonCatData {
  LaxMorphismData V;
};

// candidate algebra of T in V: an object of V per colour and a
// multiplication arrow tensor(A_{i_j}) -> A_i per operation
struct AlgebraInVCandidate {
  std::vector<int> objects;
  std::map<int, int> mult;  // absent entries default to identities
};

struct AlgebraInVResult {
  CoherenceReport vreport;  // V as a pseudo morphism
  CoherenceReport report;   // the candidate as a transformation 1 -> V_bullet
  std::shared_ptr<LaxMorphismData> one, vbullet;
  std::shared_ptr<LaxNatData> nat;
};
AlgebraInVResult algebra_in_V(const TruncatedOperad& T,
                              const SymMonCatData& V,
                              const AlgebraInVCandidate& cand);

// coidentifies the images of the permutative arrows, descends the
// action, and checks commutativity of the result (every permutative
// arrow acts as an identity)
struct CommutativizeResult {
  StrictTAlgebra CA;
  CoidentResult r;  // carrier -> CA carrier
  bool commutative = false;
  bool ok = true;
  std::string error;
};
CommutativizeResult commutativize(const TruncatedOperad& T,
                                  const StrictTAlgebra& A);

// strict maps A -> B (functors over the colours commuting with the
// actions where both are defined), enumerated exhaustively
std::vector<FinFunctor> enumerate_algebra_maps(const TruncatedOperad& T,
                                               const StrictTAlgebra& A,
                                               const StrictTAlgebra& B);
// bounded universal property of r : A -> C_T A: every strict map from A
// into a commutative algebra B factors uniquely through r
struct UniversalReport {
  bool ok = true;
  long long maps = 0;
  std::vector<Violation> issues;
};
UniversalReport commutativize_universal(const TruncatedOperad& T,
                                        const StrictTAlgebra& A,
                                        const CommutativizeResult& CR,
                                        const StrictTAlgebra& B);

// JSON tables for the coherence data; the operad and the fibre
// categories are loaded separately and passed in
LaxMorphismData read_lax_morphism(const nlohmann::json& j,
                                  const TruncatedOperad& T,
                                  const std::vector<CatPtr>& fibres,
                                  std::vector<Violation>* out);
nlohmann::json write_lax_morphism(const LaxMorphismData& D);

}  // namespace opdcat
