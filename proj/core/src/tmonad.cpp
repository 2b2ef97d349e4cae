#include "opdcat/tmonad.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <stdexcept>

namespace opdcat {

namespace {

std::string label_list(const FinCategory& base, const std::vector<int>& xs,
                       bool arrows) {
  std::string s = "[";
  for (size_t j = 0; j < xs.size(); ++j)
    s += (j ? "," : "") +
         (arrows ? base.arrows[xs[j]].id : base.objects[xs[j]]);
  return s + "]";
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

ObjOverI over_discrete(const TruncatedOperad& T, const CatPtr& X,
                       const std::vector<int>& colour_of) {
  ObjOverI r;
  r.X = X;
  CatPtr I = discrete_cat(T.colours);
  r.anchor.dom = X;
  r.anchor.cod = I;
  r.anchor.omap = colour_of;
  for (int a = 0; a < X->n_arrows(); ++a)
    r.anchor.amap.push_back(I->identity[colour_of[X->arrows[a].src]]);
  return r;
}

std::vector<Violation> validate_over(const TruncatedOperad& T,
                                     const ObjOverI& X) {
  std::vector<Violation> out;
  if (X.anchor.cod->objects != T.colours || !X.anchor.cod->is_discrete())
    out.push_back({"ColourMismatch", "anchor does not land in the colours"});
  for (auto& v : check_functor(X.anchor))
    out.push_back({"ColourMismatch", v.code + " " + v.detail});
  return out;
}

int LabelledOpCategory::obj_of(int op, const std::vector<int>& labels) const {
  auto it = oidx_.find("op(" + T->ops[op].id + ";" +
                       label_list(*base.X, labels, false) + ")");
  return it == oidx_.end() ? -1 : it->second;
}

int LabelledOpCategory::arr_of(int src, const Permutation& rho,
                               const std::vector<int>& gammas) const {
  int sop = objs[src].op;
  int top = T->act(sop, rho.inverse());
  if (top < 0) return -1;
  bool ident = rho.is_identity();
  if (ident)
    for (int g : gammas)
      if (!base.X->is_identity(g)) ident = false;
  if (ident) return TX->identity[src];
  auto it = aidx_.find("mor(" + rho.str() + ";" +
                       label_list(*base.X, gammas, true) + ";" + T->ops[top].id +
                       ")");
  return it == aidx_.end() ? -1 : it->second;
}

std::pair<int, int> LabelledOpCategory::factor(int f) const {
  const Arr& a = arrs[f];
  int src = TX->arrows[f].src;
  int n = a.rho.n();
  int lev = arr_of(src, Permutation::identity(n), a.gammas);
  int mid = TX->arrows[lev].tgt;
  // the permutative part has at slot j the identity of mid's label j
  std::vector<int> pid(n);
  for (int j = 0; j < n; ++j)
    pid[j] = base.X->identity[objs[mid].labels[j]];
  int perm = arr_of(mid, a.rho, pid);
  return {lev, perm};
}

LabelledOpCategory apply_T(const TruncatedOperad& T, const ObjOverI& X,
                           const KeepFn& keep, const KeepFn& keep_prefix) {
  if (X.anchor.cod->objects != T.colours)
    throw std::invalid_argument("ColourMismatch");
  LabelledOpCategory R;
  R.T = &T;
  R.base = X;
  const FinCategory& B = *X.X;
  CatPtr I = X.anchor.cod;

  std::vector<std::vector<int>> by_colour(T.colours.size());
  for (int o = 0; o < B.n_objects(); ++o)
    by_colour[X.anchor.omap[o]].push_back(o);

  FinCatBuilder bld;
  std::unordered_map<std::string, int> arr_bld;
  // objects: every well-typed labelling of every operation
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    std::vector<int> cur(n);
    std::function<void(int)> rec = [&](int j) {
      if (j == n) {
        if (keep && !keep(a, cur)) return;
        R.objs.push_back({a, cur});
        bld.add_object("op(" + T.ops[a].id + ";" + label_list(B, cur, false) +
                       ")");
        return;
      }
      for (int x : by_colour[T.ops[a].source[j]]) {
        cur[j] = x;
        if (keep_prefix) {
          std::vector<int> pre(cur.begin(), cur.begin() + j + 1);
          if (!keep_prefix(a, pre)) continue;
        }
        rec(j + 1);
      }
    };
    rec(0);
  }
  auto oid = [&](int o) { return bld.objects_[o]; };
  std::unordered_map<std::string, int> obj_idx;
  for (int o = 0; o < (int)R.objs.size(); ++o) obj_idx[oid(o)] = o;

  // arrows into each target, per permutation and per tuple of base arrows
  struct Pending {
    int src, tgt;
    Permutation rho;
    std::vector<int> gammas;
  };
  std::vector<Pending> pend;
  for (int t = 0; t < (int)R.objs.size(); ++t) {
    int alpha = R.objs[t].op;
    int n = T.arity(alpha);
    for (const auto& rho : all_perms(n)) {
      int sop = T.act(alpha, rho);
      if (sop < 0) continue;
      std::vector<int> cur(n), xs(n);
      std::function<void(int)> rec = [&](int j) {
        if (j == n) {
          bool ident = rho.is_identity();
          if (ident)
            for (int g : cur)
              if (!B.is_identity(g)) ident = false;
          if (ident) return;  // generated automatically
          auto it = obj_idx.find("op(" + T.ops[sop].id + ";" +
                                 label_list(B, xs, false) + ")");
          if (it == obj_idx.end()) return;  // source not kept
          std::string id = "mor(" + rho.str() + ";" + label_list(B, cur, true) +
                           ";" + T.ops[alpha].id + ")";
          arr_bld[id] = bld.add_arrow(id, it->second, t);
          pend.push_back({it->second, t, rho, cur});
          R.arrs.push_back({rho, cur});
          return;
        }
        // gamma_j : x_j -> y_{rho(j)}
        for (int g : B.into(R.objs[t].labels[rho(j)])) {
          cur[j] = g;
          xs[j] = B.arrows[g].src;
          rec(j + 1);
        }
      };
      rec(0);
    }
  }

  // composition
  std::vector<std::vector<int>> out_of(R.objs.size()), into(R.objs.size());
  for (int m = 0; m < (int)pend.size(); ++m) {
    out_of[pend[m].src].push_back(m);
    into[pend[m].tgt].push_back(m);
  }
  for (int mid = 0; mid < (int)R.objs.size(); ++mid)
    for (int m2 : into[mid])
      for (int m1 : out_of[mid]) {
        const Pending& f2 = pend[m2];  // first
        const Pending& f1 = pend[m1];  // then
        Permutation rho = compose(f1.rho, f2.rho);
        int n = rho.n();
        std::vector<int> gs(n);
        bool ident = rho.is_identity();
        for (int j = 0; j < n; ++j) {
          gs[j] = B.compose(f2.gammas[j], f1.gammas[f2.rho(j)]);
          if (!B.is_identity(gs[j])) ident = false;
        }
        if (ident) {
          bld.set_comp(m2, m1, FinCatBuilder::ident_of(f2.src));
          continue;
        }
        int top = R.objs[f1.tgt].op;
        std::string id = "mor(" + rho.str() + ";" + label_list(B, gs, true) +
                         ";" + T.ops[top].id + ")";
        bld.set_comp(m2, m1, arr_bld.at(id));
      }

  R.TX = bld.finalize(nullptr, false);
  // append identity decode entries
  for (int m = (int)R.arrs.size(); m < R.TX->n_arrows(); ++m) {
    int o = R.TX->arrows[m].src;
    int n = T.arity(R.objs[o].op);
    std::vector<int> gs;
    for (int x : R.objs[o].labels) gs.push_back(B.identity[x]);
    R.arrs.push_back({Permutation::identity(n), gs});
  }
  for (int o = 0; o < R.TX->n_objects(); ++o) R.oidx_[R.TX->objects[o]] = o;
  for (int m = 0; m < R.TX->n_arrows(); ++m) R.aidx_[R.TX->arrows[m].id] = m;
  R.permutative.assign(R.TX->n_arrows(), 1);
  R.levelwise.assign(R.TX->n_arrows(), 1);
  for (int m = 0; m < R.TX->n_arrows(); ++m) {
    for (int g : R.arrs[m].gammas)
      if (!B.is_identity(g)) R.permutative[m] = 0;
    if (!R.arrs[m].rho.is_identity()) R.levelwise[m] = 0;
  }
  R.anchor.dom = R.TX;
  R.anchor.cod = I;
  for (int o = 0; o < R.TX->n_objects(); ++o)
    R.anchor.omap.push_back(T.ops[R.objs[o].op].target);
  for (int m = 0; m < R.TX->n_arrows(); ++m)
    R.anchor.amap.push_back(
        I->identity[T.ops[R.objs[R.TX->arrows[m].tgt].op].target]);
  return R;
}

FinFunctor apply_T_arrow(const LabelledOpCategory& TX,
                         const LabelledOpCategory& TY, const FinFunctor& f) {
  if (f.dom != TX.base.X || f.cod != TY.base.X ||
      !functors_equal(compose_functors(f, TY.base.anchor), TX.base.anchor))
    throw std::invalid_argument("ColourMismatch");
  FinFunctor r;
  r.dom = TX.TX;
  r.cod = TY.TX;
  for (const auto& o : TX.objs) {
    std::vector<int> ys;
    for (int x : o.labels) ys.push_back(f.omap[x]);
    r.omap.push_back(TY.obj_of(o.op, ys));
  }
  for (int m = 0; m < TX.TX->n_arrows(); ++m) {
    std::vector<int> gs;
    for (int g : TX.arrs[m].gammas) gs.push_back(f.amap[g]);
    r.amap.push_back(
        TY.arr_of(r.omap[TX.TX->arrows[m].src], TX.arrs[m].rho, gs));
  }
  return r;
}

FinNatTrans apply_T_2cell(const LabelledOpCategory& TX,
                          const LabelledOpCategory& TY,
                          const FinNatTrans& phi) {
  FinNatTrans r;
  r.dom = apply_T_arrow(TX, TY, phi.dom);
  r.cod = apply_T_arrow(TX, TY, phi.cod);
  for (int o = 0; o < (int)TX.objs.size(); ++o) {
    const auto& ob = TX.objs[o];
    std::vector<int> cs;
    for (int x : ob.labels) cs.push_back(phi.comp[x]);
    r.comp.push_back(TY.arr_of(r.dom.omap[o],
                               Permutation::identity((int)ob.labels.size()),
                               cs));
  }
  return r;
}

FinFunctor unit_T(const LabelledOpCategory& TX) {
  const TruncatedOperad& T = *TX.T;
  const FinCategory& X = *TX.base.X;
  FinFunctor r;
  r.dom = TX.base.X;
  r.cod = TX.TX;
  for (int x = 0; x < X.n_objects(); ++x)
    r.omap.push_back(TX.obj_of(T.unit[TX.base.anchor.omap[x]], {x}));
  for (int g = 0; g < X.n_arrows(); ++g)
    r.amap.push_back(
        TX.arr_of(r.omap[X.arrows[g].src], Permutation::identity(1), {g}));
  return r;
}

LabelledOpCategory apply_T_defined(const TruncatedOperad& T,
                                   const LabelledOpCategory& TX) {
  KeepFn keep = [&T, &TX](int op, const std::vector<int>& labels) {
    std::vector<int> ops;
    for (int t : labels) ops.push_back(TX.objs[t].op);
    return T.comp_in_range(op, ops) && T.comp(op, ops) >= 0;
  };
  // partial tuples already exceeding the arity bound cannot recover
  KeepFn prefix = [&T, &TX](int, const std::vector<int>& labels) {
    int total = 0;
    for (int t : labels) total += T.arity(TX.objs[t].op);
    return total <= T.N;
  };
  return apply_T(T, TX.as_over(), keep, prefix);
}

namespace {

double count_all_objects(const TruncatedOperad& T,
                         const std::vector<double>& per_colour) {
  double tot = 0;
  for (const auto& o : T.ops) {
    double p = 1;
    for (int c : o.source) p *= per_colour[c];
    tot += p;
  }
  return tot;
}

std::vector<double> objects_by_colour(const FinFunctor& anchor, int ncolours) {
  std::vector<double> r(ncolours, 0);
  for (int o : anchor.omap) r[o] += 1;
  return r;
}

}  // namespace

MultResult mult_T(const LabelledOpCategory& TTXd,
                  const LabelledOpCategory& TX) {
  const TruncatedOperad& T = *TX.T;
  MultResult R;
  R.m.dom = TTXd.TX;
  R.m.cod = TX.TX;
  for (const auto& o : TTXd.objs) {
    std::vector<int> ops, labels;
    for (int t : o.labels) {
      ops.push_back(TX.objs[t].op);
      labels.insert(labels.end(), TX.objs[t].labels.begin(),
                    TX.objs[t].labels.end());
    }
    R.m.omap.push_back(TX.obj_of(T.comp(o.op, ops), labels));
  }
  for (int m = 0; m < TTXd.TX->n_arrows(); ++m) {
    const auto& ar = TTXd.arrs[m];
    int n = ar.rho.n();
    std::vector<Permutation> rhos(n);
    std::vector<int> deltas;
    for (int k = 0; k < n; ++k) {
      rhos[ar.rho(k)] = TX.arrs[ar.gammas[k]].rho;
      deltas.insert(deltas.end(), TX.arrs[ar.gammas[k]].gammas.begin(),
                    TX.arrs[ar.gammas[k]].gammas.end());
    }
    R.m.amap.push_back(TX.arr_of(R.m.omap[TTXd.TX->arrows[m].src],
                                 block_perm(ar.rho, rhos), deltas));
  }
  double all = count_all_objects(
      T, objects_by_colour(TX.anchor, (int)T.colours.size()));
  R.coverage = all > 0 ? TTXd.objs.size() / all : 1.0;
  return R;
}

MonadLawReport check_monad_laws(const TruncatedOperad& T, const ObjOverI& X) {
  MonadLawReport rep;
  LabelledOpCategory TX = apply_T(T, X);
  LabelledOpCategory D2 = apply_T_defined(T, TX);
  MultResult mu = mult_T(D2, TX);

  FinFunctor Teta = apply_T_arrow(TX, D2, unit_T(TX));
  FinFunctor etaT = unit_T(D2);
  FinFunctor idTX = identity_functor(TX.TX);
  if (!functors_equal(compose_functors(Teta, mu.m), idTX)) {
    rep.ok = false;
    rep.issues.push_back({"LawViolation", "mu . T eta is not the identity"});
  }
  if (!functors_equal(compose_functors(etaT, mu.m), idTX)) {
    rep.ok = false;
    rep.issues.push_back({"LawViolation", "mu . eta T is not the identity"});
  }

  // associativity on the part of T^3 X where both flattenings are defined
  KeepFn keep = [&](int op, const std::vector<int>& labels) {
    std::vector<int> mids;
    int leaves = 0;
    for (int u : labels) {
      mids.push_back(D2.objs[u].op);
      for (int t : D2.objs[u].labels) leaves += TX.T->arity(TX.objs[t].op);
    }
    if (leaves > T.N) return false;
    return T.comp_in_range(op, mids) && T.comp(op, mids) >= 0;
  };
  KeepFn prefix = [&](int, const std::vector<int>& labels) {
    int leaves = 0;
    for (int u : labels)
      for (int t : D2.objs[u].labels) leaves += TX.T->arity(TX.objs[t].op);
    return leaves <= T.N;
  };
  // the full defined part of T^3 X can have millions of arrows (the arrow
  // count into a target scales with the product of the in-degrees of its
  // labels), so cap that product adaptively: keep the largest cap whose
  // estimated arrow count fits a fixed work budget.  the cap is monotone
  // under extending a label tuple, so it prunes prefixes too.
  std::vector<long long> indeg(D2.objs.size(), 0);
  for (int f = 0; f < D2.TX->n_arrows(); ++f) indeg[D2.TX->arrows[f].tgt]++;
  auto degprod = [&](const std::vector<int>& labels) {
    long long p = 1;
    for (int u : labels) {
      p *= std::max<long long>(1, indeg[u]);
      if (p > (1LL << 40)) return 1LL << 40;
    }
    return p;
  };
  long long cap = 1LL << 40;
  {
    ObjOverI D2over = D2.as_over();
    std::vector<std::vector<int>> by_col(T.colours.size());
    for (int u = 0; u < (int)D2.objs.size(); ++u)
      by_col[D2over.anchor.omap[u]].push_back(u);
    std::vector<std::pair<long long, long long>> fans;  // (degprod, fan)
    for (int a = 0; a < (int)T.ops.size(); ++a) {
      int n = T.arity(a);
      long long nf = 1;
      for (int k = 2; k <= n; ++k) nf *= k;
      std::vector<int> cur(n);
      std::function<void(int)> rec = [&](int j) {
        if (j < n) {
          std::vector<int> pre(cur.begin(), cur.begin() + j);
          if (j > 0 && !prefix(a, pre)) return;
          for (int u : by_col[T.ops[a].source[j]]) {
            cur[j] = u;
            rec(j + 1);
          }
          return;
        }
        if (!keep(a, cur)) return;
        long long d = degprod(cur);
        fans.push_back({d, nf * d});
      };
      rec(0);
    }
    std::sort(fans.begin(), fans.end());
    const long long budget = 30000;
    long long sum = 0;
    for (auto& [d, f] : fans) {
      sum += f;
      if (sum > budget && cap == (1LL << 40)) cap = std::max<long long>(1, d - 1);
    }
    if (sum <= budget) cap = 1LL << 40;
  }
  KeepFn keepB = [&](int op, const std::vector<int>& labels) {
    return degprod(labels) <= cap && keep(op, labels);
  };
  KeepFn prefixB = [&](int op, const std::vector<int>& labels) {
    return degprod(labels) <= cap && prefix(op, labels);
  };
  LabelledOpCategory D3 = apply_T(T, D2.as_over(), keepB, prefixB);
  FinFunctor Tmu = apply_T_arrow(D3, D2, mu.m);
  MultResult mu32 = mult_T(D3, D2);
  FinFunctor lhs = compose_functors(Tmu, mu.m);
  FinFunctor rhs = compose_functors(mu32.m, mu.m);
  for (int o = 0; o < (int)D3.objs.size(); ++o)
    if (lhs.omap[o] != rhs.omap[o]) {
      rep.ok = false;
      rep.issues.push_back(
          {"LawViolation", "associativity at " + D3.TX->objects[o]});
      if (rep.issues.size() > 20) break;
    }
  for (int m = 0; m < D3.TX->n_arrows() && rep.issues.size() <= 20; ++m)
    if (lhs.amap[m] != rhs.amap[m]) {
      rep.ok = false;
      rep.issues.push_back(
          {"LawViolation", "associativity at " + D3.TX->arrows[m].id});
    }
  rep.assoc_objects = (long long)D3.objs.size();
  rep.assoc_arrows = D3.TX->n_arrows();
  std::vector<double> c1 =
      objects_by_colour(TX.as_over().anchor, (int)T.colours.size());
  std::vector<double> c2((int)T.colours.size(), 0);
  for (const auto& o : T.ops) {
    double p = 1;
    for (int c : o.source) p *= c1[c];
    c2[o.target] += p;
  }
  double tot3 = 0;
  for (const auto& o : T.ops) {
    double p = 1;
    for (int c : o.source) p *= c2[c];
    tot3 += p;
  }
  rep.assoc_coverage = tot3 > 0 ? rep.assoc_objects / tot3 : 1.0;
  return rep;
}

T1SigmaResult t1_sigma(const LabelledOpCategory& TX) {
  T1SigmaResult R;
  R.full = arrow_category(TX.TX);
  std::vector<char> keep(R.full.arrowCat->n_objects(), 0);
  for (int f = 0; f < TX.TX->n_arrows(); ++f) keep[f] = TX.permutative[f];
  FullSubcat sub = full_subcat(R.full.arrowCat, keep);
  R.cat = sub.C;
  R.incl = sub.incl;
  R.d = compose_functors(sub.incl, R.full.d);
  R.c = compose_functors(sub.incl, R.full.c);
  R.alpha.dom = R.d;
  R.alpha.cod = R.c;
  for (int k = 0; k < R.cat->n_objects(); ++k)
    R.alpha.comp.push_back(sub.incl.omap[k]);
  // section picking identity arrows
  R.section.dom = TX.TX;
  R.section.cod = R.cat;
  for (int x = 0; x < TX.TX->n_objects(); ++x)
    R.section.omap.push_back(sub.omap[TX.TX->identity[x]]);
  std::unordered_map<std::uint64_t, int> sq;
  auto key = [&](int u, int v, int s) {
    return ((std::uint64_t)u << 40) ^ ((std::uint64_t)v << 20) ^ (std::uint64_t)s;
  };
  for (int m = 0; m < R.full.arrowCat->n_arrows(); ++m)
    sq[key(R.full.squares[m].first, R.full.squares[m].second,
           R.full.arrowCat->arrows[m].src)] = m;
  for (int f = 0; f < TX.TX->n_arrows(); ++f) {
    int src = TX.TX->arrows[f].src;
    int full_m = sq.at(key(f, f, TX.TX->identity[src]));
    R.section.amap.push_back(sub.amap[full_m]);
  }
  return R;
}

QuotientResult quotient(const LabelledOpCategory& TX) {
  const FinCategory& C = *TX.TX;
  int no = C.n_objects(), na = C.n_arrows();
  UF ouf(no);
  std::vector<int> perm_arrows;
  for (int m = 0; m < na; ++m)
    if (TX.permutative[m]) {
      perm_arrows.push_back(m);
      ouf.unite(C.arrows[m].src, C.arrows[m].tgt);
    }

  // levelwise part of every arrow
  std::vector<int> lev(na);
  for (int m = 0; m < na; ++m) lev[m] = TX.factor(m).first;

  // arrow classes: every arrow is identified with its levelwise part and
  // every permutative arrow with an identity; saturate so that composition
  // descends to a well-defined operation on classes
  UF auf(na);
  std::vector<std::vector<int>> pout(no), pin(no);
  for (int p : perm_arrows) {
    pout[C.arrows[p].src].push_back(p);
    pin[C.arrows[p].tgt].push_back(p);
  }
  for (int m = 0; m < na; ++m) auf.unite(m, lev[m]);
  for (int p : perm_arrows) auf.unite(p, C.identity[C.arrows[p].src]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < no; ++x)
      changed |= auf.unite(C.identity[x], C.identity[ouf.find(x)]);
    // equal factors must give equal composites
    std::unordered_map<std::uint64_t, int> table;
    for (int m = 0; m < na; ++m)
      for (int g : C.out_of(C.arrows[m].tgt)) {
        int c = C.compose(m, g);
        if (c < 0) continue;
        std::uint64_t k =
            ((std::uint64_t)auf.find(m) << 32) | (std::uint32_t)auf.find(g);
        auto it = table.find(k);
        if (it == table.end())
          table[k] = auf.find(c);
        else
          changed |= auf.unite(it->second, c);
      }
  }

  // orbit roots and permutative transports to/from them
  std::vector<int> root(no, -1), to_root(no, -1), from_root(no, -1);
  for (int x = 0; x < no; ++x) {
    int r = ouf.find(x);
    if (root[r] < 0) root[r] = r;
  }
  for (int r = 0; r < no; ++r) {
    if (ouf.find(r) != r) continue;
    std::queue<int> bfs;
    bfs.push(r);
    to_root[r] = C.identity[r];
    from_root[r] = C.identity[r];
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      auto visit = [&](int y, int fwd, int bwd) {
        // fwd : x -> y, bwd : y -> x
        if (to_root[y] >= 0) return;
        to_root[y] = C.compose(bwd, to_root[x]);
        from_root[y] = C.compose(from_root[x], fwd);
        bfs.push(y);
      };
      for (int p : pout[x]) visit(C.arrows[p].tgt, p, C.inverse(p));
      for (int p : pin[x]) visit(C.arrows[p].src, C.inverse(p), p);
    }
  }

  // normalized representative (root-to-root arrow) per levelwise class
  std::vector<int> na_of(na, -1);
  for (int l = 0; l < na; ++l) {
    if (!TX.levelwise[l]) continue;
    int c = auf.find(l);
    if (na_of[c] >= 0) continue;
    int a1 = C.compose(from_root[C.arrows[l].src], l);
    na_of[c] = C.compose(a1, to_root[C.arrows[l].tgt]);
  }
  // classes that contain an identity become identities of the quotient
  std::vector<char> is_id_class(na, 0);
  for (int x = 0; x < no; ++x) is_id_class[auf.find(C.identity[x])] = 1;

  QuotientResult R;
  FinCatBuilder bld;
  R.orbit_of.assign(no, -1);
  std::vector<int> orb_obj;  // new object -> root
  for (int x = 0; x < no; ++x) {
    int r = ouf.find(x);
    if (R.orbit_of[r] < 0) {
      R.orbit_of[r] = bld.add_object("orb(" + std::to_string((int)orb_obj.size()) + ")");
      orb_obj.push_back(r);
    }
    R.orbit_of[x] = R.orbit_of[r];
  }
  std::vector<int> cls_arrow(na, -1);  // levelwise class -> new arrow
  std::vector<int> qa_cls;             // new arrow -> class
  std::vector<int> qmap(na, -1);       // TX arrow -> builder arrow (or -1 = identity)
  int k = 0;
  for (int m = 0; m < na; ++m) {
    int c = auf.find(lev[m]);
    if (is_id_class[c]) continue;
    if (cls_arrow[c] < 0) {
      cls_arrow[c] = bld.add_arrow("qmor(" + std::to_string(k++) + ")",
                                   R.orbit_of[C.arrows[m].src],
                                   R.orbit_of[C.arrows[m].tgt]);
      qa_cls.push_back(c);
    }
    qmap[m] = cls_arrow[c];
  }
  // composition via the normalized representatives
  for (int i = 0; i < (int)qa_cls.size(); ++i)
    for (int j = 0; j < (int)qa_cls.size(); ++j) {
      int ai = na_of[qa_cls[i]], aj = na_of[qa_cls[j]];
      if (C.arrows[ai].tgt != C.arrows[aj].src) continue;
      int comp = C.compose(ai, aj);
      int c = auf.find(lev[comp]);
      if (is_id_class[c])
        bld.set_comp(i, j,
                     FinCatBuilder::ident_of(R.orbit_of[C.arrows[ai].src]));
      else
        bld.set_comp(i, j, cls_arrow[c]);
    }
  R.Q = bld.finalize(nullptr, false);
  R.q.dom = TX.TX;
  R.q.cod = R.Q;
  R.q.omap = R.orbit_of;
  for (int m = 0; m < na; ++m)
    R.q.amap.push_back(qmap[m] >= 0
                           ? qmap[m]
                           : R.Q->identity[R.orbit_of[C.arrows[m].src]]);
  R.anchor.dom = R.Q;
  R.anchor.cod = TX.anchor.cod;
  R.anchor.omap.assign(R.Q->n_objects(), -1);
  for (int x = 0; x < no; ++x) R.anchor.omap[R.orbit_of[x]] = TX.anchor.omap[x];
  for (int m = 0; m < R.Q->n_arrows(); ++m)
    R.anchor.amap.push_back(
        TX.anchor.cod->identity[R.anchor.omap[R.Q->arrows[m].src]]);
  return R;
}

TmodSigmaResult tmodsigma_monad(const TruncatedOperad& T, const ObjOverI& X) {
  TmodSigmaResult R;
  LabelledOpCategory TX = apply_T(T, X);
  R.QX = quotient(TX);
  R.unit = compose_functors(unit_T(TX), R.QX.q);

  LabelledOpCategory D2 = apply_T_defined(T, TX);
  MultResult mu = mult_T(D2, TX);

  ObjOverI QXover{R.QX.Q, R.QX.anchor};
  // orbit arity = arity of any representative's operation
  std::vector<int> orb_op(R.QX.Q->n_objects(), -1);
  for (int x = 0; x < TX.TX->n_objects(); ++x)
    if (orb_op[R.QX.orbit_of[x]] < 0)
      orb_op[R.QX.orbit_of[x]] = TX.objs[x].op;
  KeepFn keep = [&](int op, const std::vector<int>& labels) {
    std::vector<int> ops;
    for (int u : labels) ops.push_back(orb_op[u]);
    return T.comp_in_range(op, ops) && T.comp(op, ops) >= 0;
  };
  LabelledOpCategory TQd = apply_T(T, QXover, keep);
  FinFunctor Tq = apply_T_arrow(D2, TQd, R.QX.q);
  R.Q2 = quotient(TQd);
  FinFunctor k = compose_functors(Tq, R.Q2.q);          // D2 -> Q2
  FinFunctor h = compose_functors(mu.m, R.QX.q);        // D2 -> QX

  R.mult.dom = R.Q2.Q;
  R.mult.cod = R.QX.Q;
  R.mult.omap.assign(R.Q2.Q->n_objects(), -1);
  R.mult.amap.assign(R.Q2.Q->n_arrows(), -1);
  for (int o = 0; o < D2.TX->n_objects(); ++o) {
    int& slot = R.mult.omap[k.omap[o]];
    if (slot >= 0 && slot != h.omap[o]) {
      R.ok = false;
      R.error = "DescentFail";
    }
    slot = h.omap[o];
  }
  for (int m = 0; m < D2.TX->n_arrows(); ++m) {
    int& slot = R.mult.amap[k.amap[m]];
    if (slot >= 0 && slot != h.amap[m]) {
      R.ok = false;
      R.error = "DescentFail";
    }
    slot = h.amap[m];
  }
  for (int o : R.mult.omap)
    if (o < 0) {
      R.ok = false;
      R.error = "DescentFail";
    }
  for (int m : R.mult.amap)
    if (m < 0) {
      R.ok = false;
      R.error = "DescentFail";
    }
  return R;
}

}  // namespace opdcat
