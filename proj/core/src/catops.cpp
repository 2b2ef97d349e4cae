#include "opdcat/catops.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace opdcat {

static std::uint64_t pkey(int a, int b) {
  return (std::uint64_t)(std::uint32_t)a << 32 | (std::uint32_t)b;
}

bool is_discrete_fibration(const FinFunctor& F) {
  const auto& E = *F.dom;
  const auto& B = *F.cod;
  for (int e = 0; e < E.n_objects(); ++e) {
    std::unordered_map<int, int> lifts;  // B arrow into F(e) -> count
    for (int u : E.into(e)) lifts[F.amap[u]]++;
    for (int m : B.into(F.omap[e]))
      if (lifts[m] != 1) return false;
  }
  return true;
}

bool is_discrete_opfibration(const FinFunctor& F) {
  const auto& E = *F.dom;
  const auto& B = *F.cod;
  for (int e = 0; e < E.n_objects(); ++e) {
    std::unordered_map<int, int> lifts;
    for (int u : E.out_of(e)) lifts[F.amap[u]]++;
    for (int m : B.out_of(F.omap[e]))
      if (lifts[m] != 1) return false;
  }
  return true;
}

bool is_equiv_discrete(const FinCategory& x) {
  for (int a = 0; a < x.n_objects(); ++a)
    for (int b = 0; b < x.n_objects(); ++b)
      if (x.hom(a, b).size() > 1) return false;
  for (int f = 0; f < x.n_arrows(); ++f)
    if (x.inverse(f) < 0) return false;
  return true;
}

bool is_equiv_discrete_via_pi0(const CatPtr& x) {
  auto p = pi0(x);
  // q fully faithful: hom(a,b) in X must biject with hom(qa,qb) in pi0,
  // i.e. exactly one arrow between objects in the same component and the
  // image of each hom map injective (trivially, sizes suffice).
  for (int a = 0; a < x->n_objects(); ++a)
    for (int b = 0; b < x->n_objects(); ++b) {
      std::size_t want = p.comp_of[a] == p.comp_of[b] ? 1 : 0;
      if (x->hom(a, b).size() != want) return false;
    }
  return true;
}

int PullbackResult::obj_of(int a, int b) const {
  auto it = oidx_.find(pkey(a, b));
  return it == oidx_.end() ? -1 : it->second;
}

int PullbackResult::arr_of(int f, int g) const {
  auto it = aidx_.find(pkey(f, g));
  return it == aidx_.end() ? -1 : it->second;
}

FinFunctor PullbackResult::mediate(const FinFunctor& hA,
                                   const FinFunctor& hB) const {
  FinFunctor u;
  u.dom = hA.dom;
  u.cod = P;
  u.omap.resize(hA.dom->n_objects());
  u.amap.resize(hA.dom->n_arrows());
  for (int z = 0; z < hA.dom->n_objects(); ++z) {
    u.omap[z] = obj_of(hA.omap[z], hB.omap[z]);
    if (u.omap[z] < 0) throw std::invalid_argument("mediate: legs do not agree");
  }
  for (int m = 0; m < hA.dom->n_arrows(); ++m) {
    u.amap[m] = arr_of(hA.amap[m], hB.amap[m]);
    if (u.amap[m] < 0) throw std::invalid_argument("mediate: legs do not agree");
  }
  return u;
}

PullbackResult pullback(const FinFunctor& F, const FinFunctor& G) {
  if (F.cod.get() != G.cod.get())
    throw std::invalid_argument("pullback: codomains differ");
  const auto& A = *F.dom;
  const auto& B = *G.dom;
  PullbackResult res;
  FinCatBuilder bld;
  for (int a = 0; a < A.n_objects(); ++a)
    for (int b = 0; b < B.n_objects(); ++b)
      if (F.omap[a] == G.omap[b]) {
        res.oidx_[pkey(a, b)] = bld.add_object("(" + A.objects[a] + "|" +
                                               B.objects[b] + ")");
        res.obj_pairs.emplace_back(a, b);
      }
  for (int f = 0; f < A.n_arrows(); ++f)
    for (int g = 0; g < B.n_arrows(); ++g) {
      if (F.amap[f] != G.amap[g]) continue;
      if (A.is_identity(f) && B.is_identity(g)) continue;  // implicit
      res.aidx_[pkey(f, g)] =
          bld.add_arrow("(" + A.arrows[f].id + "|" + B.arrows[g].id + ")",
                        res.oidx_.at(pkey(A.arrows[f].src, B.arrows[g].src)),
                        res.oidx_.at(pkey(A.arrows[f].tgt, B.arrows[g].tgt)));
      res.arr_pairs.emplace_back(f, g);
    }
  // composition
  auto arr_index = [&](int f, int g) -> int {
    if (A.is_identity(f) && B.is_identity(g))
      return FinCatBuilder::ident_of(res.oidx_.at(pkey(A.arrows[f].src,
                                                       B.arrows[g].src)));
    return res.aidx_.at(pkey(f, g));
  };
  std::unordered_map<std::uint64_t, std::vector<int>> pairs_by_src;
  for (size_t j = 0; j < res.arr_pairs.size(); ++j) {
    auto [f2, g2] = res.arr_pairs[j];
    pairs_by_src[pkey(A.arrows[f2].src, B.arrows[g2].src)].push_back((int)j);
  }
  static const std::vector<int> no_pairs;
  for (size_t i = 0; i < res.arr_pairs.size(); ++i) {
    auto [f1, g1] = res.arr_pairs[i];
    auto it = pairs_by_src.find(pkey(A.arrows[f1].tgt, B.arrows[g1].tgt));
    for (int j : it == pairs_by_src.end() ? no_pairs : it->second) {
      auto [f2, g2] = res.arr_pairs[j];
      int cf = A.compose(f1, f2), cg = B.compose(g1, g2);
      if (cf < 0 || cg < 0) continue;
      bld.set_comp((int)i, (int)j, arr_index(cf, cg));
    }
  }
  res.P = bld.finalize();
  const auto& P = *res.P;
  // identity pairs for decode
  {
    std::vector<std::pair<int, int>> full(P.n_arrows());
    for (size_t i = 0; i < res.arr_pairs.size(); ++i) full[i] = res.arr_pairs[i];
    for (int o = 0; o < P.n_objects(); ++o) {
      auto [a, b] = res.obj_pairs[o];
      full[P.identity[o]] = {A.identity[a], B.identity[b]};
      res.aidx_[pkey(A.identity[a], B.identity[b])] = P.identity[o];
    }
    res.arr_pairs = std::move(full);
  }
  res.toA.dom = res.P; res.toA.cod = F.dom;
  res.toB.dom = res.P; res.toB.cod = G.dom;
  for (int o = 0; o < P.n_objects(); ++o) {
    res.toA.omap.push_back(res.obj_pairs[o].first);
    res.toB.omap.push_back(res.obj_pairs[o].second);
  }
  for (int m = 0; m < P.n_arrows(); ++m) {
    res.toA.amap.push_back(res.arr_pairs[m].first);
    res.toB.amap.push_back(res.arr_pairs[m].second);
  }
  return res;
}

ArrowCatBundle arrow_category(const CatPtr& x) {
  const auto& X = *x;
  ArrowCatBundle res;
  res.base = x;
  FinCatBuilder bld;
  for (int f = 0; f < X.n_arrows(); ++f) bld.add_object(X.arrows[f].id);
  std::vector<std::tuple<int, int, int, int>> sq;  // (u,v,f,f') per arrow
  std::unordered_map<std::string, int> sqidx;
  for (int f = 0; f < X.n_arrows(); ++f)
    for (int f2 = 0; f2 < X.n_arrows(); ++f2)
      for (int u : X.hom(X.arrows[f].src, X.arrows[f2].src))
        for (int v : X.hom(X.arrows[f].tgt, X.arrows[f2].tgt)) {
          if (X.compose(u, f2) != X.compose(f, v)) continue;
          if (X.is_identity(u) && X.is_identity(v)) continue;
          std::string id = "sq(" + X.arrows[u].id + "|" + X.arrows[v].id +
                           ";" + X.arrows[f].id + ";" + X.arrows[f2].id + ")";
          sqidx[id] = bld.add_arrow(id, f, f2);
          sq.emplace_back(u, v, f, f2);
        }
  for (size_t i = 0; i < sq.size(); ++i) {
    auto [u1, v1, s1, t1] = sq[i];
    for (size_t j = 0; j < sq.size(); ++j) {
      auto [u2, v2, s2, t2] = sq[j];
      if (t1 != s2) continue;
      int u = X.compose(u1, u2), v = X.compose(v1, v2);
      if (u < 0 || v < 0) continue;
      if (X.is_identity(u) && X.is_identity(v))
        bld.set_comp((int)i, (int)j, FinCatBuilder::ident_of(s1));
      else {
        std::string id = "sq(" + X.arrows[u].id + "|" + X.arrows[v].id + ";" +
                         X.arrows[s1].id + ";" + X.arrows[t2].id + ")";
        bld.set_comp((int)i, (int)j, sqidx.at(id));
      }
    }
  }
  res.arrowCat = bld.finalize();
  const auto& AC = *res.arrowCat;
  res.squares.resize(AC.n_arrows());
  for (size_t i = 0; i < sq.size(); ++i)
    res.squares[i] = {std::get<0>(sq[i]), std::get<1>(sq[i])};
  for (int o = 0; o < AC.n_objects(); ++o)
    res.squares[AC.identity[o]] = {X.identity[X.arrows[o].src],
                                   X.identity[X.arrows[o].tgt]};
  res.d.dom = res.c.dom = res.arrowCat;
  res.d.cod = res.c.cod = x;
  for (int o = 0; o < AC.n_objects(); ++o) {
    res.d.omap.push_back(X.arrows[o].src);
    res.c.omap.push_back(X.arrows[o].tgt);
  }
  for (int m = 0; m < AC.n_arrows(); ++m) {
    res.d.amap.push_back(res.squares[m].first);
    res.c.amap.push_back(res.squares[m].second);
  }
  res.alpha.dom = res.d;
  res.alpha.cod = res.c;
  for (int o = 0; o < AC.n_objects(); ++o) res.alpha.comp.push_back(o);
  return res;
}

FinFunctor arrow_functor(const FinFunctor& F, const ArrowCatBundle& ax,
                         const ArrowCatBundle& ay) {
  const auto& AX = *ax.arrowCat;
  const auto& AY = *ay.arrowCat;
  const auto& Y = *F.cod;
  FinFunctor g;
  g.dom = ax.arrowCat;
  g.cod = ay.arrowCat;
  g.omap.resize(AX.n_objects());
  g.amap.resize(AX.n_arrows());
  for (int o = 0; o < AX.n_objects(); ++o) g.omap[o] = F.amap[o];
  for (int m = 0; m < AX.n_arrows(); ++m) {
    auto [u, v] = ax.squares[m];
    int fu = F.amap[u], fv = F.amap[v];
    int so = g.omap[AX.arrows[m].src];
    if (Y.is_identity(fu) && Y.is_identity(fv)) {
      g.amap[m] = AY.identity[so];
    } else {
      int to = g.omap[AX.arrows[m].tgt];
      std::string id = "sq(" + Y.arrows[fu].id + "|" + Y.arrows[fv].id + ";" +
                       Y.arrows[so].id + ";" + Y.arrows[to].id + ")";
      g.amap[m] = ay.arrowCat->arr(id);
      if (g.amap[m] < 0)
        throw std::runtime_error("arrow_functor: missing square " + id);
    }
  }
  return g;
}

namespace {
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;  // keep the smaller index as root
    return true;
  }
};
}  // namespace

Pi0Result pi0(const CatPtr& x) {
  const auto& X = *x;
  UF uf(X.n_objects());
  for (int f = 0; f < X.n_arrows(); ++f)
    uf.unite(X.arrows[f].src, X.arrows[f].tgt);
  Pi0Result res;
  res.comp_of.assign(X.n_objects(), -1);
  FinCatBuilder bld;
  for (int a = 0; a < X.n_objects(); ++a) {
    int r = uf.find(a);
    if (res.comp_of[r] < 0)
      res.comp_of[r] = bld.add_object("cmp(" + X.objects[r] + ")");
    res.comp_of[a] = res.comp_of[r];
  }
  res.comp = bld.finalize();
  res.q.dom = x;
  res.q.cod = res.comp;
  res.q.omap = res.comp_of;
  res.q.amap.resize(X.n_arrows());
  for (int f = 0; f < X.n_arrows(); ++f)
    res.q.amap[f] = res.comp->identity[res.comp_of[X.arrows[f].src]];
  return res;
}

DpbResult dpb_along_dopfib(const FinFunctor& f, const FinFunctor& g,
                           const SectionKeep& keep) {
  if (g.cod.get() != f.dom.get())
    throw std::invalid_argument("dpb: g must land in dom(f)");
  if (!is_discrete_opfibration(f))
    throw std::invalid_argument("NotOpfibration");
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  const auto& W = *g.dom;
  DpbResult res;
  res.f = f;
  res.g = g;
  res.fibre.assign(Y.n_objects(), {});
  std::vector<int> pos_in_fibre(X.n_objects(), -1);
  for (int x = 0; x < X.n_objects(); ++x) {
    pos_in_fibre[x] = (int)res.fibre[f.omap[x]].size();
    res.fibre[f.omap[x]].push_back(x);
  }
  // canonical lifts: lift[a][x] = unique arrow out of x over a
  std::unordered_map<std::uint64_t, int> lift;
  for (int x = 0; x < X.n_objects(); ++x)
    for (int u : X.out_of(x)) lift[pkey(f.amap[u], x)] = u;
  // W objects over each X object
  std::vector<std::vector<int>> gf(X.n_objects());
  for (int w = 0; w < W.n_objects(); ++w) gf[g.omap[w]].push_back(w);
  // sections
  FinCatBuilder bq;
  std::unordered_map<std::string, int> secidx;
  auto sec_id = [&](int y, const std::vector<int>& ws) {
    std::string s = "sec(" + Y.objects[y] + ";[";
    for (size_t i = 0; i < ws.size(); ++i) {
      if (i) s += ',';
      s += W.objects[ws[i]];
    }
    return s + "])";
  };
  for (int y = 0; y < Y.n_objects(); ++y) {
    // cartesian product over the fibre
    std::vector<std::vector<int>> choices;
    for (int x : res.fibre[y]) choices.push_back(gf[x]);
    std::vector<int> cur(choices.size(), 0);
    bool any = true;
    for (auto& c : choices) if (c.empty()) any = false;
    if (!any) continue;
    while (true) {
      std::vector<int> ws(choices.size());
      for (size_t i = 0; i < choices.size(); ++i) ws[i] = choices[i][cur[i]];
      if (!keep || keep(y, ws)) {
        std::string id = sec_id(y, ws);
        secidx[id] = bq.add_object(id);
        res.sections.push_back({y, ws});
      }
      int k = (int)choices.size() - 1;
      while (k >= 0 && ++cur[k] == (int)choices[k].size()) cur[k--] = 0;
      if (k < 0) break;
    }
  }
  // families over each Y arrow
  std::unordered_map<std::string, int> famidx;
  auto fam_id = [&](int a, int s1, int s2, const std::vector<int>& gs) {
    std::string s = "fam(" + Y.arrows[a].id + ";" +
                    bq.objects_[s1] + ";" + bq.objects_[s2] + ";[";
    for (size_t i = 0; i < gs.size(); ++i) {
      if (i) s += ',';
      s += W.arrows[gs[i]].id;
    }
    return s + "])";
  };
  struct FamRec { int a, src, dst; std::vector<int> gammas; };
  std::vector<FamRec> fams;
  std::vector<std::vector<int>> secs_by_y(Y.n_objects());
  for (int s = 0; s < (int)res.sections.size(); ++s)
    secs_by_y[res.sections[s].y].push_back(s);
  for (int a = 0; a < Y.n_arrows(); ++a) {
    int y1 = Y.arrows[a].src, y2 = Y.arrows[a].tgt;
    const auto& fib1 = res.fibre[y1];
    // targets of the canonical lifts and their fibre positions
    std::vector<int> dstpos(fib1.size());
    std::vector<int> lifts(fib1.size());
    for (size_t i = 0; i < fib1.size(); ++i) {
      lifts[i] = lift.at(pkey(a, fib1[i]));
      dstpos[i] = pos_in_fibre[X.arrows[lifts[i]].tgt];
    }
    for (int s1 : secs_by_y[y1]) {
      for (int s2 : secs_by_y[y2]) {
        // per position: arrows h1(x_i) -> h2(x_i') over the lift
        std::vector<std::vector<int>> choices(fib1.size());
        bool any = true;
        for (size_t i = 0; i < fib1.size() && any; ++i) {
          for (int gm : W.hom(res.sections[s1].ws[i],
                              res.sections[s2].ws[dstpos[i]]))
            if (g.amap[gm] == lifts[i]) choices[i].push_back(gm);
          if (choices[i].empty()) any = false;
        }
        if (!any) continue;
        std::vector<int> cur(choices.size(), 0);
        while (true) {
          std::vector<int> gs(choices.size());
          bool all_id = Y.is_identity(a);
          for (size_t i = 0; i < choices.size(); ++i) {
            gs[i] = choices[i][cur[i]];
            if (!W.is_identity(gs[i])) all_id = false;
          }
          if (!all_id) {
            std::string id = fam_id(a, s1, s2, gs);
            famidx[id] = bq.add_arrow(id, s1, s2);
            fams.push_back({a, s1, s2, gs});
          }
          int k = (int)choices.size() - 1;
          while (k >= 0 && ++cur[k] == (int)choices[k].size()) cur[k--] = 0;
          if (k < 0) break;
        }
      }
    }
  }
  // composition of families
  std::vector<std::vector<int>> fams_by_src(res.sections.size());
  for (size_t j = 0; j < fams.size(); ++j) fams_by_src[fams[j].src].push_back((int)j);
  for (size_t i = 0; i < fams.size(); ++i)
    for (int j : fams_by_src[fams[i].dst]) {
      int a = Y.compose(fams[i].a, fams[j].a);
      if (a < 0) continue;
      const auto& fib1 = res.fibre[Y.arrows[fams[i].a].src];
      std::vector<int> gs(fib1.size());
      bool all_id = Y.is_identity(a);
      for (size_t k = 0; k < fib1.size(); ++k) {
        int u = lift.at(pkey(fams[i].a, fib1[k]));
        int mid = pos_in_fibre[X.arrows[u].tgt];
        gs[k] = W.compose(fams[i].gammas[k], fams[j].gammas[mid]);
        if (gs[k] < 0) throw std::runtime_error("dpb: family not composable");
        if (!W.is_identity(gs[k])) all_id = false;
      }
      if (all_id)
        bq.set_comp((int)i, (int)j, FinCatBuilder::ident_of(fams[i].src));
      else
        bq.set_comp((int)i, (int)j,
                    famidx.at(fam_id(a, fams[i].src, fams[j].dst, gs)));
    }
  res.Q = bq.finalize();
  const auto& Q = *res.Q;
  res.families.resize(Q.n_arrows());
  for (size_t i = 0; i < fams.size(); ++i)
    res.families[i] = {fams[i].a, fams[i].src, fams[i].dst, fams[i].gammas};
  for (int o = 0; o < Q.n_objects(); ++o) {
    int y = res.sections[o].y;
    std::vector<int> gs;
    for (int w : res.sections[o].ws) gs.push_back(W.identity[w]);
    res.families[Q.identity[o]] = {Y.identity[y], o, o, gs};
  }
  res.r.dom = res.Q;
  res.r.cod = f.cod;
  for (int o = 0; o < Q.n_objects(); ++o) res.r.omap.push_back(res.sections[o].y);
  for (int m = 0; m < Q.n_arrows(); ++m) res.r.amap.push_back(res.families[m].a);
  // P with evaluation
  res.pb = pullback(res.r, f);
  res.P = res.pb.P;
  res.q = res.pb.toA;
  res.p.dom = res.P;
  res.p.cod = g.dom;
  for (int o = 0; o < res.P->n_objects(); ++o) {
    auto [s, x] = res.pb.obj_pairs[o];
    res.p.omap.push_back(res.sections[s].ws[pos_in_fibre[x]]);
  }
  for (int m = 0; m < res.P->n_arrows(); ++m) {
    auto [fm, xm] = res.pb.arr_pairs[m];
    int x = X.arrows[xm].src;
    res.p.amap.push_back(res.families[fm].gammas[pos_in_fibre[x]]);
  }
  return res;
}

bool dpb_terminal_against(const DpbResult& d, const FinFunctor& p2,
                          const FinFunctor& q2, const FinFunctor& r2,
                          std::string* why) {
  const auto& X = *d.f.dom;
  const auto& Y = *d.f.cod;
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const auto& Q2 = *q2.cod;
  const auto& P2 = *q2.dom;
  // canonical v : Q2 -> Q
  FinFunctor gp2 = compose_functors(p2, d.g);  // P2 -> X
  std::vector<int> pos_in_fibre(X.n_objects(), -1);
  for (int y = 0; y < Y.n_objects(); ++y)
    for (size_t i = 0; i < d.fibre[y].size(); ++i)
      pos_in_fibre[d.fibre[y][i]] = (int)i;
  // P2 object over (z, x): pullback property gives exactly one
  std::unordered_map<std::uint64_t, int> p2obj;
  for (int o = 0; o < P2.n_objects(); ++o) {
    auto k = pkey(q2.omap[o], gp2.omap[o]);
    if (p2obj.count(k)) return fail("competitor is not a pullback (objects)");
    p2obj[k] = o;
  }
  std::unordered_map<std::uint64_t, int> p2arr;
  for (int m = 0; m < P2.n_arrows(); ++m) {
    auto k = pkey(q2.amap[m], gp2.amap[m]);
    if (p2arr.count(k)) return fail("competitor is not a pullback (arrows)");
    p2arr[k] = m;
  }
  std::unordered_map<std::uint64_t, int> lift;
  for (int x = 0; x < X.n_objects(); ++x)
    for (int u : X.out_of(x)) lift[pkey(d.f.amap[u], x)] = u;
  FinFunctor v;
  v.dom = q2.cod;
  v.cod = d.Q;
  v.omap.resize(Q2.n_objects());
  v.amap.resize(Q2.n_arrows());
  for (int z = 0; z < Q2.n_objects(); ++z) {
    int y = r2.omap[z];
    std::string id = "sec(" + Y.objects[y] + ";[";
    for (size_t i = 0; i < d.fibre[y].size(); ++i) {
      auto it = p2obj.find(pkey(z, d.fibre[y][i]));
      if (it == p2obj.end()) return fail("no P2 object over (z,x)");
      if (i) id += ',';
      id += d.g.dom->objects[p2.omap[it->second]];
    }
    id += "])";
    v.omap[z] = d.Q->obj(id);
    if (v.omap[z] < 0) return fail("section not found: " + id);
  }
  for (int m = 0; m < Q2.n_arrows(); ++m) {
    int a = r2.amap[m];
    int y1 = Y.arrows[a].src;
    std::vector<int> gs;
    bool all_id = Y.is_identity(a);
    for (int x : d.fibre[y1]) {
      int u = lift.at(pkey(a, x));
      auto it = p2arr.find(pkey(m, u));
      if (it == p2arr.end()) return fail("no P2 arrow over (m,lift)");
      int gm = p2.amap[it->second];
      gs.push_back(gm);
      if (!d.g.dom->is_identity(gm)) all_id = false;
    }
    if (all_id) {
      v.amap[m] = d.Q->identity[v.omap[Q2.arrows[m].src]];
    } else {
      std::string id = "fam(" + Y.arrows[a].id + ";" +
                       d.Q->objects[v.omap[Q2.arrows[m].src]] + ";" +
                       d.Q->objects[v.omap[Q2.arrows[m].tgt]] + ";[";
      for (size_t i = 0; i < gs.size(); ++i) {
        if (i) id += ',';
        id += d.g.dom->arrows[gs[i]].id;
      }
      id += "])";
      v.amap[m] = d.Q->arr(id);
      if (v.amap[m] < 0) return fail("family not found: " + id);
    }
  }
  if (!check_functor(v).empty()) return fail("canonical v not functorial");
  FinFunctor u = d.pb.mediate(compose_functors(q2, v), gp2);
  for (int o = 0; o < P2.n_objects(); ++o)
    if (d.p.omap[u.omap[o]] != p2.omap[o]) return fail("p.u != p2 (objects)");
  for (int m = 0; m < P2.n_arrows(); ++m)
    if (d.p.amap[u.amap[m]] != p2.amap[m]) return fail("p.u != p2 (arrows)");
  // uniqueness: every functor v' : Q2 -> Q with r v' = r2 that admits a
  // compatible u' must equal v
  FunctorSearch s;
  s.dom = q2.cod;
  s.cod = d.Q;
  s.anchor_dom = r2;
  s.anchor_cod = d.r;
  int found = 0;
  for (auto& v2 : enumerate_functors(s)) {
    FinFunctor u2;
    try {
      u2 = d.pb.mediate(compose_functors(q2, v2), gp2);
    } catch (const std::invalid_argument&) {
      continue;
    }
    bool okp = true;
    for (int o = 0; o < P2.n_objects() && okp; ++o)
      if (d.p.omap[u2.omap[o]] != p2.omap[o]) okp = false;
    for (int m = 0; m < P2.n_arrows() && okp; ++m)
      if (d.p.amap[u2.amap[m]] != p2.amap[m]) okp = false;
    if (okp) {
      ++found;
      if (v2.omap != v.omap || v2.amap != v.amap)
        return fail("second mediating morphism exists");
    }
  }
  if (found != 1) return fail("mediating morphism not unique/found");
  return true;
}

CoidentResult coidentify(const CatPtr& x, const std::vector<int>& kill) {
  const auto& X = *x;
  CoidentResult res;
  for (int k : kill)
    if (X.inverse(k) < 0) {
      res.ok = false;
      res.error = "KillNotInvertible: " + X.arrows[k].id;
      return res;
    }
  UF ou(X.n_objects()), au(X.n_arrows());
  for (int k : kill) {
    ou.unite(X.arrows[k].src, X.arrows[k].tgt);
    au.unite(k, X.identity[X.arrows[k].src]);
  }
  // fixed-point saturation
  bool changed = true;
  while (changed) {
    changed = false;
    // merged objects force merged identities; merged arrows force merged
    // endpoints
    for (int a = 0; a < X.n_objects(); ++a)
      changed |= au.unite(X.identity[a], X.identity[ou.find(a)]);
    for (int m = 0; m < X.n_arrows(); ++m) {
      int r = au.find(m);
      changed |= ou.unite(X.arrows[m].src, X.arrows[r].src);
      changed |= ou.unite(X.arrows[m].tgt, X.arrows[r].tgt);
    }
    // congruence: equal factors give equal composites
    std::unordered_map<std::uint64_t, int> table;
    for (int m = 0; m < X.n_arrows(); ++m)
      for (int g : X.out_of(X.arrows[m].tgt)) {
        int c = X.compose(m, g);
        if (c < 0) continue;
        auto k = pkey(au.find(m), au.find(g));
        auto it = table.find(k);
        if (it == table.end())
          table[k] = au.find(c);
        else
          changed |= au.unite(it->second, c);
      }
  }
  // transports to class roots (kill arrows generate the object merges)
  std::vector<int> to_root(X.n_objects(), -1);   // arrow obj -> root
  std::vector<int> from_root(X.n_objects(), -1); // arrow root -> obj
  {
    std::vector<std::vector<std::pair<int, int>>> adj(X.n_objects());
    for (int k : kill) {
      int s = X.arrows[k].src, t = X.arrows[k].tgt;
      adj[s].push_back({t, k});
      int ki = X.inverse(k);
      adj[t].push_back({s, ki});
    }
    for (int a = 0; a < X.n_objects(); ++a) {
      if (ou.find(a) != a) continue;
      to_root[a] = X.identity[a];
      from_root[a] = X.identity[a];
      std::queue<int> bfs;
      bfs.push(a);
      while (!bfs.empty()) {
        int b = bfs.front();
        bfs.pop();
        for (auto [c, e] : adj[b]) {
          if (to_root[c] >= 0) continue;
          // e : b -> c ; from_root[c] = e . from_root[b] and
          // to_root[c] = to_root[b] . inverse(e)
          from_root[c] = X.compose(from_root[b], e);
          to_root[c] = X.compose(X.inverse(e), to_root[b]);
          bfs.push(c);
        }
      }
    }
  }
  // labels by first appearance
  res.ocls.assign(X.n_objects(), -1);
  res.acls.assign(X.n_arrows(), -1);
  FinCatBuilder bld;
  std::vector<int> root_label(X.n_objects(), -1);
  for (int a = 0; a < X.n_objects(); ++a) {
    int r = ou.find(a);
    if (root_label[r] < 0)
      root_label[r] = bld.add_object("orb(" + std::to_string(bld.objects_.size()) + ")");
    res.ocls[a] = root_label[r];
  }
  // identity classes: any class containing an identity arrow
  std::vector<char> is_id_class(X.n_arrows(), 0);
  for (int a = 0; a < X.n_objects(); ++a) is_id_class[au.find(X.identity[a])] = 1;
  std::vector<int> arr_label(X.n_arrows(), -1);
  std::vector<int> class_rep;  // quotient arrow -> representative X arrow
  for (int m = 0; m < X.n_arrows(); ++m) {
    int r = au.find(m);
    if (is_id_class[r]) {
      res.acls[m] = -1;  // resolved to identity after finalize
      continue;
    }
    if (arr_label[r] < 0) {
      arr_label[r] = bld.add_arrow(
          "qmor(" + std::to_string(bld.arrows_.size()) + ")",
          res.ocls[X.arrows[r].src], res.ocls[X.arrows[r].tgt]);
      class_rep.push_back(r);
    }
    res.acls[m] = arr_label[r];
  }
  // composition of quotient classes via transported representatives
  int ncls = (int)class_rep.size();
  for (int i = 0; i < ncls; ++i)
    for (int j = 0; j < ncls; ++j) {
      int f0 = class_rep[i], g0 = class_rep[j];
      if (ou.find(X.arrows[f0].tgt) != ou.find(X.arrows[g0].src)) continue;
      // t : tgt(f0) -> src(g0) through the root
      int t = X.compose(to_root[X.arrows[f0].tgt], from_root[X.arrows[g0].src]);
      if (t < 0) throw std::runtime_error("coidentify: transport failed");
      int tf = X.compose(f0, t);
      int c = tf < 0 ? -1 : X.compose(tf, g0);
      if (c < 0) throw std::runtime_error("coidentify: composite failed");
      int rc = au.find(c);
      if (is_id_class[rc])
        bld.set_comp(i, j, FinCatBuilder::ident_of(res.ocls[X.arrows[f0].src]));
      else
        bld.set_comp(i, j, arr_label[rc]);
    }
  res.C = bld.finalize();
  res.q.dom = x;
  res.q.cod = res.C;
  res.q.omap = res.ocls;
  res.q.amap.resize(X.n_arrows());
  for (int m = 0; m < X.n_arrows(); ++m)
    res.q.amap[m] = res.acls[m] >= 0
                        ? res.acls[m]
                        : res.C->identity[res.ocls[X.arrows[m].src]];
  return res;
}

namespace {
struct FunEnum {
  const FunctorSearch* s;
  const FinCategory *D, *C;
  std::vector<int> oassign, aassign;
  std::vector<std::vector<int>> oclass;  // object classes (force_identity)
  std::vector<int> class_of;
  std::vector<FinFunctor> out;
  std::size_t nodes = 0;
  bool bump() {
    if (++nodes > s->limit)
      throw std::runtime_error("enumerate_functors: node limit exceeded");
    return true;
  }

  bool obj_ok(int a, int img) {
    if (s->anchor_dom &&
        s->anchor_cod->omap[img] != s->anchor_dom->omap[a])
      return false;
    if (!s->fixed_obj.empty() && s->fixed_obj[a] >= 0 && s->fixed_obj[a] != img)
      return false;
    return true;
  }

  bool arr_candidates(int m, std::vector<int>& cand) {
    cand.clear();
    int sa = oassign[D->arrows[m].src], ta = oassign[D->arrows[m].tgt];
    if (D->is_identity(m)) {
      cand.push_back(C->identity[sa]);
      return true;
    }
    for (int g : C->hom(sa, ta)) {
      if (s->anchor_dom && s->anchor_cod->amap[g] != s->anchor_dom->amap[m])
        continue;
      cand.push_back(g);
    }
    return !cand.empty();
  }

  bool consistent(int m) {
    // check all composites involving m among assigned arrows
    for (int g = 0; g < D->n_arrows(); ++g) {
      if (aassign[g] < 0) continue;
      if (D->composable(m, g)) {
        int c = D->compose(m, g);
        if (c >= 0 && aassign[c] >= 0 &&
            C->compose(aassign[m], aassign[g]) != aassign[c])
          return false;
      }
      if (D->composable(g, m)) {
        int c = D->compose(g, m);
        if (c >= 0 && aassign[c] >= 0 &&
            C->compose(aassign[g], aassign[m]) != aassign[c])
          return false;
      }
    }
    if (D->composable(m, m)) {
      int c = D->compose(m, m);
      if (c >= 0 && aassign[c] >= 0 &&
          C->compose(aassign[m], aassign[m]) != aassign[c])
        return false;
    }
    return true;
  }

  void arrows_from(int m) {
    bump();
    while (m < D->n_arrows() && aassign[m] >= 0) ++m;
    if (m == D->n_arrows()) {
      FinFunctor f;
      f.dom = s->dom;
      f.cod = s->cod;
      f.omap = oassign;
      f.amap = aassign;
      out.push_back(std::move(f));
      return;
    }
    std::vector<int> cand;
    if (!arr_candidates(m, cand)) return;
    for (int g : cand) {
      aassign[m] = g;
      if (consistent(m)) arrows_from(m + 1);
      aassign[m] = -1;
    }
  }

  void objects_from(int k) {
    bump();
    if (k == (int)oclass.size()) {
      // identities and forced arrows first
      std::fill(aassign.begin(), aassign.end(), -1);
      for (int a = 0; a < D->n_objects(); ++a)
        aassign[D->identity[a]] = C->identity[oassign[a]];
      for (int m : s->force_identity)
        aassign[m] = C->identity[oassign[D->arrows[m].src]];
      // sanity of forced arrows against anchors
      for (int m : s->force_identity)
        if (s->anchor_dom &&
            s->anchor_cod->amap[aassign[m]] != s->anchor_dom->amap[m])
          return;
      arrows_from(0);
      return;
    }
    for (int img = 0; img < C->n_objects(); ++img) {
      bool ok = true;
      for (int a : oclass[k])
        if (!obj_ok(a, img)) { ok = false; break; }
      if (!ok) continue;
      for (int a : oclass[k]) oassign[a] = img;
      objects_from(k + 1);
      for (int a : oclass[k]) oassign[a] = -1;
    }
  }
};
}  // namespace

std::vector<FinFunctor> enumerate_functors(const FunctorSearch& s) {
  FunEnum e;
  e.s = &s;
  e.D = s.dom.get();
  e.C = s.cod.get();
  e.oassign.assign(e.D->n_objects(), -1);
  e.aassign.assign(e.D->n_arrows(), -1);
  UF uf(e.D->n_objects());
  for (int m : s.force_identity)
    uf.unite(e.D->arrows[m].src, e.D->arrows[m].tgt);
  e.class_of.assign(e.D->n_objects(), -1);
  for (int a = 0; a < e.D->n_objects(); ++a) {
    int r = uf.find(a);
    if (e.class_of[r] < 0) {
      e.class_of[r] = (int)e.oclass.size();
      e.oclass.push_back({});
    }
    e.class_of[a] = e.class_of[r];
    e.oclass[e.class_of[a]].push_back(a);
  }
  e.objects_from(0);
  return e.out;
}

namespace {
struct IsoEnum {
  const FinCategory *X, *Y;
  const FinFunctor *ax, *ay;
  std::vector<int> omap, amap, used_obj, used_arr;
  bool done = false;
  FinFunctor result;

  bool sig_match(int a, int b) {
    if (X->out_of(a).size() != Y->out_of(b).size()) return false;
    if (X->into(a).size() != Y->into(b).size()) return false;
    if (X->hom(a, a).size() != Y->hom(b, b).size()) return false;
    if (ax && ay) {
      // anchored: the anchor objects must correspond by id
      const auto& IA = *ax->cod;
      const auto& IB = *ay->cod;
      if (IA.objects[ax->omap[a]] != IB.objects[ay->omap[b]]) return false;
    }
    return true;
  }

  bool arrows_ok(int m) {
    for (int g = 0; g < X->n_arrows(); ++g) {
      if (amap[g] < 0) continue;
      if (X->composable(m, g)) {
        int c = X->compose(m, g);
        if (c >= 0 && amap[c] >= 0 && Y->compose(amap[m], amap[g]) != amap[c])
          return false;
      }
      if (X->composable(g, m)) {
        int c = X->compose(g, m);
        if (c >= 0 && amap[c] >= 0 && Y->compose(amap[g], amap[m]) != amap[c])
          return false;
      }
    }
    return true;
  }

  void arrows_from(int m) {
    if (done) return;
    while (m < X->n_arrows() && amap[m] >= 0) ++m;
    if (m == X->n_arrows()) {
      done = true;
      result.omap = omap;
      result.amap = amap;
      return;
    }
    int sa = omap[X->arrows[m].src], ta = omap[X->arrows[m].tgt];
    for (int g : Y->hom(sa, ta)) {
      if (used_arr[g] || Y->is_identity(g)) continue;
      amap[m] = g;
      used_arr[g] = 1;
      if (arrows_ok(m)) arrows_from(m + 1);
      used_arr[g] = 0;
      amap[m] = -1;
      if (done) return;
    }
  }

  void objects_from(int a) {
    if (done) return;
    if (a == X->n_objects()) {
      std::fill(amap.begin(), amap.end(), -1);
      std::fill(used_arr.begin(), used_arr.end(), 0);
      for (int o = 0; o < X->n_objects(); ++o) {
        amap[X->identity[o]] = Y->identity[omap[o]];
        used_arr[Y->identity[omap[o]]] = 1;
      }
      arrows_from(0);
      return;
    }
    for (int b = 0; b < Y->n_objects(); ++b) {
      if (used_obj[b] || !sig_match(a, b)) continue;
      omap[a] = b;
      used_obj[b] = 1;
      objects_from(a + 1);
      used_obj[b] = 0;
      omap[a] = -1;
      if (done) return;
    }
  }
};
}  // namespace

std::optional<FinFunctor> find_isomorphism(const CatPtr& x, const CatPtr& y,
                                           const std::optional<FinFunctor>& ax,
                                           const std::optional<FinFunctor>& ay) {
  if (x->n_objects() != y->n_objects() || x->n_arrows() != y->n_arrows())
    return std::nullopt;
  IsoEnum e;
  e.X = x.get();
  e.Y = y.get();
  e.ax = ax ? &*ax : nullptr;
  e.ay = ay ? &*ay : nullptr;
  e.omap.assign(x->n_objects(), -1);
  e.amap.assign(x->n_arrows(), -1);
  e.used_obj.assign(y->n_objects(), 0);
  e.used_arr.assign(y->n_arrows(), 0);
  e.result.dom = x;
  e.result.cod = y;
  e.objects_from(0);
  if (!e.done) return std::nullopt;
  return e.result;
}

int ProductCat::obj_of(const std::vector<int>& t) const {
  std::string id = "tup(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) id += '|';
    id += factors[i]->objects[t[i]];
  }
  id += ")";
  auto it = oidx_.find(id);
  return it == oidx_.end() ? -1 : it->second;
}

int ProductCat::arr_of(const std::vector<int>& t) const {
  bool all_id = true;
  for (size_t i = 0; i < t.size(); ++i)
    if (!factors[i]->is_identity(t[i])) all_id = false;
  if (all_id) {
    std::vector<int> ot(t.size());
    for (size_t i = 0; i < t.size(); ++i) ot[i] = factors[i]->arrows[t[i]].src;
    int o = obj_of(ot);
    return o < 0 ? -1 : C->identity[o];
  }
  std::string id = "tup(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) id += '|';
    id += factors[i]->arrows[t[i]].id;
  }
  id += ")";
  auto it = aidx_.find(id);
  return it == aidx_.end() ? -1 : it->second;
}

ProductCat product_cat(const std::vector<CatPtr>& factors) {
  ProductCat res;
  res.factors = factors;
  FinCatBuilder bld;
  // objects: lex product
  std::vector<int> cur(factors.size(), 0);
  bool empty = false;
  for (auto& f : factors)
    if (f->n_objects() == 0) empty = true;
  if (!empty) {
    while (true) {
      std::string id = "tup(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) id += '|';
        id += factors[i]->objects[cur[i]];
      }
      id += ")";
      res.oidx_[id] = bld.add_object(id);
      res.obj_tuple.push_back(cur);
      int k = (int)factors.size() - 1;
      while (k >= 0 && ++cur[k] == factors[k]->n_objects()) cur[k--] = 0;
      if (k < 0) break;
    }
  }
  // arrows
  std::vector<std::vector<int>> arrs;
  cur.assign(factors.size(), 0);
  bool anyarr = !empty;
  for (auto& f : factors)
    if (f->n_arrows() == 0) anyarr = false;
  if (anyarr) {
    while (true) {
      bool all_id = true;
      for (size_t i = 0; i < factors.size(); ++i)
        if (!factors[i]->is_identity(cur[i])) all_id = false;
      if (!all_id || factors.empty()) {
        if (!all_id) {
          std::string id = "tup(";
          std::vector<int> st(factors.size()), tt(factors.size());
          for (size_t i = 0; i < factors.size(); ++i) {
            if (i) id += '|';
            id += factors[i]->arrows[cur[i]].id;
            st[i] = factors[i]->arrows[cur[i]].src;
            tt[i] = factors[i]->arrows[cur[i]].tgt;
          }
          id += ")";
          std::string sid = "tup(", tid = "tup(";
          for (size_t i = 0; i < factors.size(); ++i) {
            if (i) { sid += '|'; tid += '|'; }
            sid += factors[i]->objects[st[i]];
            tid += factors[i]->objects[tt[i]];
          }
          sid += ")"; tid += ")";
          res.aidx_[id] = bld.add_arrow(id, res.oidx_.at(sid), res.oidx_.at(tid));
          res.arr_tuple.push_back(cur);
          arrs.push_back(cur);
        }
      }
      int k = (int)factors.size() - 1;
      while (k >= 0 && ++cur[k] == factors[k]->n_arrows()) cur[k--] = 0;
      if (k < 0) break;
    }
  }
  // composition
  for (size_t i = 0; i < arrs.size(); ++i)
    for (size_t j = 0; j < arrs.size(); ++j) {
      std::vector<int> comp(factors.size());
      bool ok = true, all_id = factors.size() > 0;
      for (size_t k = 0; k < factors.size(); ++k) {
        if (!factors[k]->composable(arrs[i][k], arrs[j][k])) { ok = false; break; }
        comp[k] = factors[k]->compose(arrs[i][k], arrs[j][k]);
        if (comp[k] < 0) { ok = false; break; }
        if (!factors[k]->is_identity(comp[k])) all_id = false;
      }
      if (!ok) continue;
      if (all_id) {
        std::string sid = "tup(";
        for (size_t k = 0; k < factors.size(); ++k) {
          if (k) sid += '|';
          sid += factors[k]->objects[factors[k]->arrows[arrs[i][k]].src];
        }
        sid += ")";
        bld.set_comp((int)i, (int)j,
                     FinCatBuilder::ident_of(res.oidx_.at(sid)));
      } else {
        std::string id = "tup(";
        for (size_t k = 0; k < factors.size(); ++k) {
          if (k) id += '|';
          id += factors[k]->arrows[comp[k]].id;
        }
        id += ")";
        bld.set_comp((int)i, (int)j, res.aidx_.at(id));
      }
    }
  res.C = bld.finalize();
  // decode for identities
  const auto& C = *res.C;
  std::vector<std::vector<int>> full(C.n_arrows());
  for (size_t i = 0; i < arrs.size(); ++i) full[i] = arrs[i];
  for (int o = 0; o < C.n_objects(); ++o) {
    std::vector<int> ids(factors.size());
    for (size_t k = 0; k < factors.size(); ++k)
      ids[k] = factors[k]->identity[res.obj_tuple[o][k]];
    full[C.identity[o]] = ids;
  }
  res.arr_tuple = std::move(full);
  return res;
}

FinFunctor product_proj(const ProductCat& p, int k) {
  FinFunctor f;
  f.dom = p.C;
  f.cod = p.factors[k];
  for (auto& t : p.obj_tuple) f.omap.push_back(t[k]);
  for (auto& t : p.arr_tuple) f.amap.push_back(t[k]);
  return f;
}

FinFunctor into_product(const ProductCat& p, const std::vector<FinFunctor>& fs) {
  FinFunctor f;
  f.dom = fs.empty() ? nullptr : fs[0].dom;
  f.cod = p.C;
  int no = f.dom ? f.dom->n_objects() : 0;
  int na = f.dom ? f.dom->n_arrows() : 0;
  for (int o = 0; o < no; ++o) {
    std::vector<int> t(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) t[i] = fs[i].omap[o];
    int img = p.obj_of(t);
    if (img < 0) throw std::runtime_error("into_product: missing tuple");
    f.omap.push_back(img);
  }
  for (int m = 0; m < na; ++m) {
    std::vector<int> t(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) t[i] = fs[i].amap[m];
    int img = p.arr_of(t);
    if (img < 0) throw std::runtime_error("into_product: missing arrow tuple");
    f.amap.push_back(img);
  }
  return f;
}

FinFunctor product_functor(const ProductCat& dom, const ProductCat& cod,
                           const std::vector<FinFunctor>& fs) {
  FinFunctor f;
  f.dom = dom.C;
  f.cod = cod.C;
  for (auto& t : dom.obj_tuple) {
    std::vector<int> u(t.size());
    for (size_t i = 0; i < t.size(); ++i) u[i] = fs[i].omap[t[i]];
    int img = cod.obj_of(u);
    if (img < 0) throw std::runtime_error("product_functor: missing tuple");
    f.omap.push_back(img);
  }
  for (auto& t : dom.arr_tuple) {
    std::vector<int> u(t.size());
    for (size_t i = 0; i < t.size(); ++i) u[i] = fs[i].amap[t[i]];
    int img = cod.arr_of(u);
    if (img < 0) throw std::runtime_error("product_functor: missing arrow");
    f.amap.push_back(img);
  }
  return f;
}

CatPtr terminal_cat() {
  FinCatBuilder b;
  b.add_object("*");
  return b.finalize();
}

CatPtr discrete_cat(const std::vector<std::string>& objects) {
  FinCatBuilder b;
  for (auto& o : objects) b.add_object(o);
  return b.finalize();
}

FullSubcat full_subcat(const CatPtr& c, const std::vector<char>& keep) {
  const FinCategory& X = *c;
  FullSubcat s;
  s.omap.assign(X.n_objects(), -1);
  s.amap.assign(X.n_arrows(), -1);
  FinCatBuilder b;
  for (int o = 0; o < X.n_objects(); ++o)
    if (keep[o]) s.omap[o] = b.add_object(X.objects[o]);
  std::vector<int> kept;
  for (int a = 0; a < X.n_arrows(); ++a) {
    if (X.is_identity(a)) continue;
    const auto& ar = X.arrows[a];
    if (!keep[ar.src] || !keep[ar.tgt]) continue;
    s.amap[a] = b.add_arrow(ar.id, s.omap[ar.src], s.omap[ar.tgt]);
    kept.push_back(a);
  }
  std::vector<std::vector<int>> kept_by_src(X.n_objects());
  for (int a : kept) kept_by_src[X.arrows[a].src].push_back(a);
  for (int a1 : kept)
    for (int a2 : kept_by_src[X.arrows[a1].tgt]) {
      int r = X.compose(a1, a2);
      b.set_comp(s.amap[a1], s.amap[a2],
                 X.is_identity(r)
                     ? FinCatBuilder::ident_of(s.omap[X.arrows[r].src])
                     : s.amap[r]);
    }
  s.C = b.finalize(nullptr, false);
  for (int o = 0; o < X.n_objects(); ++o)
    if (keep[o]) s.amap[X.identity[o]] = s.C->identity[s.omap[o]];
  s.incl.dom = s.C;
  s.incl.cod = c;
  s.incl.omap.assign(s.C->n_objects(), -1);
  s.incl.amap.assign(s.C->n_arrows(), -1);
  for (int o = 0; o < X.n_objects(); ++o)
    if (s.omap[o] >= 0) s.incl.omap[s.omap[o]] = o;
  for (int a = 0; a < X.n_arrows(); ++a)
    if (s.amap[a] >= 0) s.incl.amap[s.amap[a]] = a;
  return s;
}

}  // namespace opdcat
