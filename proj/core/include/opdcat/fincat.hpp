#pragma once
// Finite categories with explicit composition tables, functors between
// them and natural transformations.  Identities are implicit in raw
// descriptions and generated with ids "1(<obj>)" on finalize.
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace opdcat {

struct Violation {
  std::string code;     // e.g. "MissingComposite", "NonAssociative"
  std::string detail;
};

struct FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

struct FinCategory {
  struct Arrow {
    std::string id;
    int src = -1, tgt = -1;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;       // includes identities
  std::vector<int> identity;       // per object, index into arrows
  std::vector<char> ident_flag;    // per arrow

  int n_objects() const { return (int)objects.size(); }
  int n_arrows() const { return (int)arrows.size(); }
  int obj(const std::string& id) const;   // -1 if absent
  int arr(const std::string& id) const;   // -1 if absent
  bool is_identity(int f) const { return ident_flag[f]; }
  bool composable(int first, int then) const {
    return arrows[first].tgt == arrows[then].src;
  }
  // then . first; -1 when the pair is not composable or the entry is missing
  int compose(int first, int then) const;
  const std::vector<int>& hom(int a, int b) const;  // arrows a -> b
  const std::vector<int>& out_of(int a) const;
  const std::vector<int>& into(int b) const;
  int inverse(int f) const;  // -1 if f is not invertible
  bool is_discrete() const;

  // Internal indexes, built on finalize.
  std::unordered_map<std::string, int> obj_idx_, arr_idx_;
  std::unordered_map<std::uint64_t, int> comp_;
  std::unordered_map<std::uint64_t, std::vector<int>> hom_;
  std::vector<std::vector<int>> out_, in_;
};

// Incremental construction.  finalize() adds identities, fills the
// identity rows of the composition table, builds indexes and (optionally)
// validates totality/associativity.  Violations found are returned via
// the out-parameter; the category is returned regardless so callers can
// report several problems at once.
struct FinCatBuilder {
  int add_object(const std::string& id);
  int add_arrow(const std::string& id, int src, int tgt);
  // result = then . first (all indices of non-identity arrows added above;
  // a result that is an identity is written as ident_of(obj))
  void set_comp(int first, int then, int result);
  static int ident_of(int obj) { return -(obj + 2); }

  CatPtr finalize(std::vector<Violation>* out = nullptr, bool validate = true);

  std::vector<std::string> objects_;
  std::vector<FinCategory::Arrow> arrows_;
  std::vector<std::tuple<int, int, int>> comps_;
  std::unordered_map<std::string, int> oidx_, aidx_;
};

// Checks the category axioms on an already-built value (totality of the
// table on composable pairs, endpoints of composites, associativity,
// identity laws).
std::vector<Violation> validate_category(const FinCategory& c);

struct FinFunctor {
  CatPtr dom, cod;
  std::vector<int> omap;  // object index -> object index
  std::vector<int> amap;  // arrow index -> arrow index

  int on_obj(int a) const { return omap[a]; }
  int on_arr(int f) const { return amap[f]; }
};

FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& then);
std::vector<Violation> check_functor(const FinFunctor& f);
bool functors_equal(const FinFunctor& f, const FinFunctor& g);

struct FinNatTrans {
  FinFunctor dom, cod;        // parallel functors
  std::vector<int> comp;      // per object of dom.dom: arrow of dom.cod
};

std::vector<Violation> check_nat(const FinNatTrans& t);
FinNatTrans identity_nat(const FinFunctor& f);
// vertical composition (t2 after t1)
FinNatTrans vcomp(const FinNatTrans& t1, const FinNatTrans& t2);

CatPtr opposite(const CatPtr& c);
FinFunctor opposite_functor(const FinFunctor& f, const CatPtr& odom,
                            const CatPtr& ocod);

}  // namespace opdcat
