#pragma once
// Arity-truncated coloured symmetric operads: validation, JSON I/O,
// stock examples, the associated polynomial with its monad data over the
// truncated symmetric polynomial, and reconstruction from such data.
#include <map>

#include "opdcat/poly.hpp"

namespace opdcat {

struct TruncatedOperad {
  std::vector<std::string> colours;
  int N = 0;  // arity bound
  struct Op {
    std::string id;
    std::vector<int> source;  // colour indices
    int target = -1;
  };
  std::vector<Op> ops;
  std::vector<int> unit;  // colour -> op index
  std::map<std::pair<int, std::string>, int> action_;      // (op, perm) -> op
  std::map<std::pair<int, std::vector<int>>, int> compo_;  // (op, ops) -> op

  int arity(int a) const { return (int)ops[a].source.size(); }
  int op(const std::string& id) const;
  int act(int a, const Permutation& r) const;          // total when valid
  int comp(int outer, const std::vector<int>& inners) const;  // -1 undefined
  bool comp_in_range(int outer, const std::vector<int>& inners) const;
  void set_act(int a, const Permutation& r, int b);
  void set_comp(int outer, const std::vector<int>& inners, int b);
};

std::vector<Violation> validate_operad(const TruncatedOperad& T);

TruncatedOperad read_operad(const std::string& text);
std::string write_operad(const TruncatedOperad& T);

TruncatedOperad com_operad(int N);
TruncatedOperad ass_operad(int N);
TruncatedOperad category_as_operad(const CatPtr& C);
TruncatedOperad free_binary_operad();  // 2 colours, one binary generator

struct OperadMorphism {
  const TruncatedOperad* dom = nullptr;
  const TruncatedOperad* cod = nullptr;
  std::vector<int> cmap;  // colour -> colour
  std::vector<int> omap;  // op -> op
};
std::vector<Violation> validate_operad_morphism(const OperadMorphism& h);
std::vector<OperadMorphism> enumerate_operad_morphisms(const TruncatedOperad& S,
                                                       const TruncatedOperad& T);
bool operad_isomorphic(const TruncatedOperad& S, const TruncatedOperad& T);

struct OperadToPoly {
  PolyMonadData M;        // carrier, unit, mult over the arity-truncated base
  TruncatedS S;
  PolyMorphism intoS;
  // decode tables for the carrier
  std::vector<int> b_op;                          // B object -> op
  std::vector<std::pair<int, Permutation>> b_arr; // B arrow -> (target op, rho)
  std::vector<std::pair<int, int>> e_slot;        // E object -> (op, j)
  int b_obj(int op) const;
  int b_arrow(int op, const Permutation& r) const;  // arrow act(op;r)
  int e_obj(int op, int j) const;
};
OperadToPoly to_polynomial(const TruncatedOperad& T);

// rebuilds an operad from polynomial-monad data classified over the
// truncated symmetric polynomial; throws invalid_argument("NotOperadShape")
TruncatedOperad from_polynomial(const PolyMonadData& M, const TruncatedS& S,
                                const PolyMorphism& intoS);

struct SigmaFreeReport {
  bool direct = false;        // free actions on profile-fixing permutations
  bool via_B = false;         // B equivalent to a discrete category
  bool via_pullback = false;  // pi0 square of the polynomial is a pullback
  bool agree() const { return direct == via_B && via_B == via_pullback; }
};
SigmaFreeReport sigma_free(const TruncatedOperad& T);

}  // namespace opdcat
