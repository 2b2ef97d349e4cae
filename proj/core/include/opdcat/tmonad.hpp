#pragma once
// The 2-monad of labelled operations on Cat over a discrete colour set:
// the category TX, its action on functors and natural transformations,
// unit and (truncation-partial) multiplication, monad-law checking, the
// permutative arrow sub-bundle, and the quotient T/Sigma with its monad
// structure.
#include <functional>
#include <unordered_map>

#include "opdcat/operad.hpp"

namespace opdcat {

struct ObjOverI {
  CatPtr X;
  FinFunctor anchor;  // X -> discrete category on the colours
};
ObjOverI over_discrete(const TruncatedOperad& T, const CatPtr& X,
                       const std::vector<int>& colour_of);
std::vector<Violation> validate_over(const TruncatedOperad& T,
                                     const ObjOverI& X);

// optional restriction: keep only objects satisfying the predicate
// (the result is the full subcategory, hence still a category)
using KeepFn = std::function<bool(int op, const std::vector<int>& labels)>;

struct LabelledOpCategory {
  const TruncatedOperad* T = nullptr;
  ObjOverI base;
  CatPtr TX;
  FinFunctor anchor;  // by target colour
  struct Obj {
    int op;
    std::vector<int> labels;  // objects of the base
  };
  struct Arr {
    Permutation rho;
    std::vector<int> gammas;  // arrows of the base, indexed by source slot
  };
  std::vector<Obj> objs;
  std::vector<Arr> arrs;
  std::vector<char> permutative, levelwise;  // per arrow
  std::unordered_map<std::string, int> oidx_, aidx_;

  int obj_of(int op, const std::vector<int>& labels) const;
  // the arrow (rho, gammas) out of src; -1 when absent
  int arr_of(int src, const Permutation& rho,
             const std::vector<int>& gammas) const;
  ObjOverI as_over() const { return {TX, anchor}; }
  // unique factorization f = permutative . levelwise; returns the pair
  std::pair<int, int> factor(int f) const;  // (levelwise part, permutative part)
};

// keep_prefix, when given, prunes the object enumeration: it receives
// partial label tuples and must be monotone (false on a prefix means
// false on every extension)
LabelledOpCategory apply_T(const TruncatedOperad& T, const ObjOverI& X,
                           const KeepFn& keep = nullptr,
                           const KeepFn& keep_prefix = nullptr);

// Tf and Tphi by the pointwise formulas; throws invalid_argument
// ("ColourMismatch") when f is not over the colours
FinFunctor apply_T_arrow(const LabelledOpCategory& TX,
                         const LabelledOpCategory& TY, const FinFunctor& f);
FinNatTrans apply_T_2cell(const LabelledOpCategory& TX,
                          const LabelledOpCategory& TY, const FinNatTrans& phi);

FinFunctor unit_T(const LabelledOpCategory& TX);

// the defined part of T(TX): inner composites within the arity bound
LabelledOpCategory apply_T_defined(const TruncatedOperad& T,
                                   const LabelledOpCategory& TX);

struct MultResult {
  FinFunctor m;        // defined part of T(TX) -> TX
  double coverage;     // defined objects / all objects of T(TX)
};
MultResult mult_T(const LabelledOpCategory& TTXd, const LabelledOpCategory& TX);

struct MonadLawReport {
  bool ok = true;
  std::vector<Violation> issues;  // LawViolation with witnesses
  long long assoc_objects = 0, assoc_arrows = 0;
  double assoc_coverage = 0.0;  // checked objects / all objects of T^3 X
};
MonadLawReport check_monad_laws(const TruncatedOperad& T, const ObjOverI& X);

// full sub-bundle of the arrow category on the permutative arrows
struct T1SigmaResult {
  ArrowCatBundle full;     // arrow category of TX
  CatPtr cat;              // full subcategory on permutative arrows
  FinFunctor incl, d, c;   // inclusion and restricted endpoints
  FinNatTrans alpha;       // component at a permutative arrow is itself
  FinFunctor section;      // TX -> cat, x |-> identity of x
};
T1SigmaResult t1_sigma(const LabelledOpCategory& TX);

struct QuotientResult {
  CatPtr Q;
  FinFunctor q;               // TX -> Q
  FinFunctor anchor;          // Q -> discrete colours
  std::vector<int> orbit_of;  // TX object -> Q object
};
// orbit construction through the levelwise/permutative factorization
QuotientResult quotient(const LabelledOpCategory& TX);

struct TmodSigmaResult {
  QuotientResult QX;
  FinFunctor unit;      // X -> T/Sigma X
  QuotientResult Q2;    // quotient of the defined part of T(T/Sigma X)
  FinFunctor mult;      // Q2.Q -> QX.Q (descended)
  bool ok = true;
  std::string error;    // "DescentFail" (never expected)
};
TmodSigmaResult tmodsigma_monad(const TruncatedOperad& T, const ObjOverI& X);

}  // namespace opdcat
