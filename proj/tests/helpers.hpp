#pragma once
// shared fixture builders for the test binaries
#include <numeric>
#include <string>
#include <vector>

#include "opdcat/algebra.hpp"
#include "opdcat/operad.hpp"
#include "opdcat/tmonad.hpp"

namespace fx {

using namespace opdcat;

// one object "*", one non-identity arrow s with s.s = 1
inline CatPtr z2cat() {
  FinCatBuilder b;
  int o = b.add_object("*");
  int s = b.add_arrow("s", o, o);
  b.set_comp(s, s, FinCatBuilder::ident_of(o));
  return b.finalize();
}

inline CatPtr walking_arrow() {
  FinCatBuilder b;
  int a = b.add_object("a"), bb = b.add_object("b");
  b.add_arrow("u", a, bb);
  return b.finalize();
}

inline CatPtr disc(const std::vector<std::string>& names) {
  FinCatBuilder b;
  for (const auto& n : names) b.add_object(n);
  return b.finalize();
}

inline ObjOverI disc_over(const TruncatedOperad& T, int n,
                          const std::vector<int>& colours = {}) {
  std::vector<std::string> names;
  std::vector<int> cs;
  for (int i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    cs.push_back(colours.empty() ? 0 : colours[i % colours.size()]);
  }
  return over_discrete(T, disc(names), cs);
}

// strict commutative data on a one-object discrete fibre
inline LaxMorphismData trivial_data(const TruncatedOperad& T) {
  LaxMorphismData D = make_lax_skeleton(T, {disc({"o"})});
  for (size_t a = 0; a < T.ops.size(); ++a) {
    D.products[a].omap.assign(D.doms[a].C->n_objects(), 0);
    D.products[a].amap.assign(D.doms[a].C->n_arrows(), 0);
  }
  return D;
}

// pseudo data on the one-object Z/2 fibre: H multiplies the arrow
// tuples, nu = s, sigma_{a,(b_j)} = s^(number of inner slots); every
// coherence axiom reduces to an equation in Z/2 that the exponents solve
inline LaxMorphismData cob_data(const TruncatedOperad& T) {
  CatPtr z2 = z2cat();
  int s = z2->arr("s");
  LaxMorphismData D = make_lax_skeleton(T, {z2});
  for (size_t a = 0; a < T.ops.size(); ++a) {
    D.products[a].omap.assign(D.doms[a].C->n_objects(), 0);
    D.products[a].amap.resize(D.doms[a].C->n_arrows());
    for (int t = 0; t < D.doms[a].C->n_arrows(); ++t) {
      int c = 0;
      for (int g : D.doms[a].arr_tuple[t])
        if (g == s) ++c;
      D.products[a].amap[t] = c % 2 ? s : z2->identity[0];
    }
  }
  D.units[0] = {s};
  for (const auto& [key, g] : T.compo_) {
    (void)g;
    int n = (int)key.second.size();
    D.substitutions[key] = {n % 2 ? s : z2->identity[0]};
  }
  return D;
}

// strict commutative data on the discrete two-object fibre {e,a}:
// H takes the parity of the slots (the Z/2 monoid, written additively)
inline LaxMorphismData monoid_data(const TruncatedOperad& T) {
  CatPtr m = disc({"e", "a"});
  LaxMorphismData D = make_lax_skeleton(T, {m});
  for (size_t a = 0; a < T.ops.size(); ++a) {
    D.products[a].omap.resize(D.doms[a].C->n_objects());
    D.products[a].amap.resize(D.doms[a].C->n_arrows());
    for (int x = 0; x < D.doms[a].C->n_objects(); ++x) {
      int sum = 0;
      for (int o : D.doms[a].obj_tuple[x]) sum += o;
      D.products[a].omap[x] = sum % 2;
    }
    for (int t = 0; t < D.doms[a].C->n_arrows(); ++t)
      D.products[a].amap[t] =
          m->identity[D.products[a].omap[D.doms[a].C->arrows[t].src]];
  }
  return D;
}

// the Z/2 monoid as a strict algebra on a discrete carrier
inline StrictTAlgebra z2monoid_algebra(const TruncatedOperad& T) {
  StrictTAlgebra A;
  A.carrier = over_discrete(T, disc({"e", "a"}), {0, 0});
  A.dom = std::make_shared<LabelledOpCategory>(apply_T(T, A.carrier));
  A.action.dom = A.dom->TX;
  A.action.cod = A.carrier.X;
  A.action.omap.resize(A.dom->TX->n_objects());
  A.action.amap.resize(A.dom->TX->n_arrows());
  for (size_t o = 0; o < A.dom->objs.size(); ++o) {
    int sum = 0;
    for (int l : A.dom->objs[o].labels) sum += l;
    A.action.omap[o] = sum % 2;
  }
  for (int f = 0; f < A.dom->TX->n_arrows(); ++f)
    A.action.amap[f] =
        A.carrier.X->identity[A.action.omap[A.dom->TX->arrows[f].src]];
  return A;
}

// the Z/2 group category as a strict algebra: an arrow tuple acts by
// its total exponent
inline StrictTAlgebra z2group_algebra(const TruncatedOperad& T) {
  StrictTAlgebra A;
  CatPtr z2 = z2cat();
  int s = z2->arr("s");
  A.carrier = over_discrete(T, z2, {0});
  A.dom = std::make_shared<LabelledOpCategory>(apply_T(T, A.carrier));
  A.action.dom = A.dom->TX;
  A.action.cod = z2;
  A.action.omap.assign(A.dom->TX->n_objects(), 0);
  A.action.amap.resize(A.dom->TX->n_arrows());
  for (size_t f = 0; f < A.dom->arrs.size(); ++f) {
    int c = 0;
    for (int g : A.dom->arrs[f].gammas)
      if (g == s) ++c;
    A.action.amap[f] = c % 2 ? s : z2->identity[0];
  }
  return A;
}

// the one-object discrete algebra (terminal algebra)
inline StrictTAlgebra point_algebra(const TruncatedOperad& T) {
  StrictTAlgebra A;
  A.carrier = over_discrete(T, disc({"o"}), {0});
  A.dom = std::make_shared<LabelledOpCategory>(apply_T(T, A.carrier));
  A.action.dom = A.dom->TX;
  A.action.cod = A.carrier.X;
  A.action.omap.assign(A.dom->TX->n_objects(), 0);
  A.action.amap.assign(A.dom->TX->n_arrows(), A.carrier.X->identity[0]);
  return A;
}

// verifies the pointwise formulas for the unit and the multiplication by
// decoding every object and arrow of TX / the defined part of T(TX)
struct EtaMuCheck {
  long long checked = 0;
  bool ok = true;
};

inline EtaMuCheck check_eta_mu_formulas(const TruncatedOperad& T,
                                        const ObjOverI& X) {
  EtaMuCheck R;
  LabelledOpCategory TX = apply_T(T, X);
  FinFunctor eta = unit_T(TX);
  for (int x = 0; x < X.X->n_objects(); ++x) {
    const auto& o = TX.objs[eta.omap[x]];
    ++R.checked;
    if (o.op != T.unit[X.anchor.omap[x]] || o.labels != std::vector<int>{x})
      R.ok = false;
  }
  for (int f = 0; f < X.X->n_arrows(); ++f) {
    const auto& a = TX.arrs[eta.amap[f]];
    ++R.checked;
    if (!a.rho.is_identity() || a.gammas != std::vector<int>{f}) R.ok = false;
  }
  LabelledOpCategory T2 = apply_T_defined(T, TX);
  MultResult mu = mult_T(T2, TX);
  for (size_t o = 0; o < T2.objs.size(); ++o) {
    std::vector<int> ops, flat;
    for (int l : T2.objs[o].labels) {
      ops.push_back(TX.objs[l].op);
      for (int z : TX.objs[l].labels) flat.push_back(z);
    }
    ++R.checked;
    if (mu.m.omap[o] != TX.obj_of(T.comp(T2.objs[o].op, ops), flat))
      R.ok = false;
  }
  for (size_t f = 0; f < T2.arrs.size(); ++f) {
    const auto& ar = T2.arrs[f];
    int n = (int)ar.gammas.size();
    std::vector<Permutation> rhos(n);
    std::vector<int> gflat;
    for (int k = 0; k < n; ++k) {
      rhos[ar.rho(k)] = TX.arrs[ar.gammas[k]].rho;
      for (int g : TX.arrs[ar.gammas[k]].gammas) gflat.push_back(g);
    }
    int src = T2.TX->arrows[f].src;
    int expect = TX.arr_of(mu.m.omap[src], block_perm(ar.rho, rhos), gflat);
    ++R.checked;
    if (mu.m.amap[f] != expect) R.ok = false;
  }
  return R;
}

// independent count of the orbits of the permutation action on the
// objects of TX, for discrete X
inline int orbit_count_discrete(const TruncatedOperad& T, const ObjOverI& X) {
  LabelledOpCategory TX = apply_T(T, X);
  int n = TX.TX->n_objects();
  std::vector<int> par(n);
  for (int i = 0; i < n; ++i) par[i] = i;
  std::function<int(int)> find = [&](int a) {
    return par[a] == a ? a : par[a] = find(par[a]);
  };
  for (int o = 0; o < n; ++o) {
    int ar = T.arity(TX.objs[o].op);
    for (const auto& rho : all_perms(ar)) {
      // source of the permutative arrow into (op, y): (act(op,rho), x) with
      // x_j = y_{rho(j)}
      std::vector<int> x(ar);
      for (int j = 0; j < ar; ++j) x[j] = TX.objs[o].labels[rho(j)];
      int src = TX.obj_of(T.act(TX.objs[o].op, rho), x);
      if (src >= 0) par[find(src)] = find(o);
    }
  }
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++c;
  return c;
}

}  // namespace fx
