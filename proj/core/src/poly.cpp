#include "opdcat/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace opdcat {

namespace {

bool is_bijective(const FinFunctor& f) {
  if (f.dom->n_objects() != f.cod->n_objects()) return false;
  if (f.dom->n_arrows() != f.cod->n_arrows()) return false;
  std::vector<char> seen(f.cod->n_objects(), 0);
  for (int o : f.omap) {
    if (seen[o]) return false;
    seen[o] = 1;
  }
  std::vector<char> aseen(f.cod->n_arrows(), 0);
  for (int a : f.amap) {
    if (aseen[a]) return false;
    aseen[a] = 1;
  }
  return true;
}

std::string sec_key(int y, const std::vector<int>& ws) {
  std::ostringstream os;
  os << y;
  for (int w : ws) os << ';' << w;
  return os.str();
}

}  // namespace

std::vector<Violation> validate_polynomial(const Polynomial& P) {
  std::vector<Violation> out;
  if (P.s.dom != P.E || P.p.dom != P.E || P.p.cod != P.B || P.t.dom != P.B ||
      P.s.cod != P.I || P.t.cod != P.I) {
    out.push_back({"ShapeMismatch", "legs do not share the expected ends"});
    return out;
  }
  for (const char* name : {"s", "p", "t"}) {
    const FinFunctor& f = name[0] == 's' ? P.s : name[0] == 'p' ? P.p : P.t;
    for (auto& v : check_functor(f))
      out.push_back({"FunctorInvalid", std::string(name) + ": " + v.code + " " + v.detail});
  }
  if (!out.empty()) return out;
  if (!is_discrete_fibration(P.p))
    out.push_back({"NotDiscreteFibration", "middle leg"});
  if (!is_discrete_opfibration(P.p))
    out.push_back({"NotDiscreteOpfibration", "middle leg"});
  return out;
}

Polynomial identity_poly(const CatPtr& I) {
  Polynomial P;
  P.I = P.E = P.B = I;
  P.s = P.p = P.t = identity_functor(I);
  return P;
}

PolyMorphism identity_poly_morphism(const Polynomial& P) {
  return {P, P, identity_functor(P.I), identity_functor(P.B),
          identity_functor(P.E)};
}

std::vector<Violation> validate_poly_morphism(const PolyMorphism& m) {
  std::vector<Violation> out;
  if (!functors_equal(compose_functors(m.f2, m.cod.s),
                      compose_functors(m.dom.s, m.f0)))
    out.push_back({"NotCommuting", "source square"});
  if (!functors_equal(compose_functors(m.f1, m.cod.t),
                      compose_functors(m.dom.t, m.f0)))
    out.push_back({"NotCommuting", "target square"});
  if (!functors_equal(compose_functors(m.f2, m.cod.p),
                      compose_functors(m.dom.p, m.f1)))
    out.push_back({"NotCommuting", "middle square"});
  if (!out.empty()) return out;
  PullbackResult pb = pullback(m.f1, m.cod.p);
  FinFunctor med = pb.mediate(m.dom.p, m.f2);
  if (!is_bijective(med))
    out.push_back({"NotPullback", "middle square comparison not invertible"});
  return out;
}

ComposeResult compose_polynomials(const Polynomial& P2, const Polynomial& P1,
                                  const SectionKeep& keep) {
  ComposeResult cr;
  cr.p1 = P1;
  cr.p2 = P2;
  cr.mid = pullback(P1.t, P2.s);                      // (B1 obj, E2 obj)
  cr.dpb = dpb_along_dopfib(P2.p, cr.mid.toB, keep);
  cr.left = pullback(compose_functors(cr.dpb.p, cr.mid.toA), P1.p);
  cr.comp.I = P1.I;
  cr.comp.B = cr.dpb.Q;
  cr.comp.E = cr.left.P;
  cr.comp.s = compose_functors(cr.left.toB, P1.s);
  cr.comp.p = compose_functors(cr.left.toA, cr.dpb.q);
  cr.comp.t = compose_functors(cr.dpb.r, P2.t);
  return cr;
}

std::pair<FinFunctor, FinFunctor> induced_on_composite(
    const ComposeResult& cr, const ComposeResult& cr2, const PolyMorphism& m2,
    const PolyMorphism& m1) {
  const FinCategory& E2 = *cr.p2.E;
  const FinCategory& E2b = *cr2.p2.E;
  // fibre positions in the codomain composite
  std::vector<int> pos2(E2b.n_objects(), -1);
  for (size_t y = 0; y < cr2.dpb.fibre.size(); ++y)
    for (size_t i = 0; i < cr2.dpb.fibre[y].size(); ++i)
      pos2[cr2.dpb.fibre[y][i]] = (int)i;

  std::unordered_map<std::string, int> sec2, fam2;
  for (int o = 0; o < (int)cr2.dpb.sections.size(); ++o)
    sec2[sec_key(cr2.dpb.sections[o].y, cr2.dpb.sections[o].ws)] = o;
  for (int a = 0; a < (int)cr2.dpb.families.size(); ++a) {
    const auto& fm = cr2.dpb.families[a];
    fam2[sec_key(fm.a, fm.gammas) + "@" + std::to_string(fm.src)] = a;
  }

  auto mid_obj = [&](int w) {
    auto pr = cr.mid.obj_pairs[w];
    return cr2.mid.obj_of(m1.f1.omap[pr.first], m2.f2.omap[pr.second]);
  };
  auto mid_arr = [&](int w) {
    auto pr = cr.mid.arr_pairs[w];
    return cr2.mid.arr_of(m1.f1.amap[pr.first], m2.f2.amap[pr.second]);
  };

  FinFunctor hB;
  hB.dom = cr.comp.B;
  hB.cod = cr2.comp.B;
  for (const auto& sec : cr.dpb.sections) {
    int y2 = m2.f1.omap[sec.y];
    std::vector<int> ws(cr2.dpb.fibre[y2].size(), -1);
    const auto& fib = cr.dpb.fibre[sec.y];
    for (size_t i = 0; i < fib.size(); ++i)
      ws[pos2[m2.f2.omap[fib[i]]]] = mid_obj(sec.ws[i]);
    auto it = sec2.find(sec_key(y2, ws));
    if (it == sec2.end()) throw std::logic_error("induced: section missing");
    hB.omap.push_back(it->second);
  }
  for (const auto& fm : cr.dpb.families) {
    int a2 = m2.f1.amap[fm.a];
    int y2 = cr2.p2.B->arrows[a2].src;
    std::vector<int> gs(cr2.dpb.fibre[y2].size(), -1);
    const auto& fib = cr.dpb.fibre[cr.p2.B->arrows[fm.a].src];
    for (size_t i = 0; i < fib.size(); ++i)
      gs[pos2[m2.f2.omap[fib[i]]]] = mid_arr(fm.gammas[i]);
    auto it = fam2.find(sec_key(a2, gs) + "@" + std::to_string(hB.omap[fm.src]));
    if (it == fam2.end()) throw std::logic_error("induced: family missing");
    hB.amap.push_back(it->second);
  }

  FinFunctor hE;
  hE.dom = cr.comp.E;
  hE.cod = cr2.comp.E;
  for (auto pr : cr.left.obj_pairs) {
    auto fp = cr.dpb.pb.obj_pairs[pr.first];  // (B3 obj, E2 obj)
    int f2i = cr2.dpb.pb.obj_of(hB.omap[fp.first], m2.f2.omap[fp.second]);
    hE.omap.push_back(cr2.left.obj_of(f2i, m1.f2.omap[pr.second]));
  }
  for (auto pr : cr.left.arr_pairs) {
    auto fp = cr.dpb.pb.arr_pairs[pr.first];
    int f2i = cr2.dpb.pb.arr_of(hB.amap[fp.first], m2.f2.amap[fp.second]);
    hE.amap.push_back(cr2.left.arr_of(f2i, m1.f2.amap[pr.second]));
  }
  return {hB, hE};
}

namespace {

FinFunctor restrict_functor(const FullSubcat& sub, const FinFunctor& f) {
  return compose_functors(sub.incl, f);
}

}  // namespace

SubPoly restrict_poly(const Polynomial& P, const std::vector<char>& keep_B) {
  FullSubcat sb = full_subcat(P.B, keep_B);
  std::vector<char> keep_E(P.E->n_objects(), 0);
  for (int e = 0; e < P.E->n_objects(); ++e)
    keep_E[e] = keep_B[P.p.omap[e]];
  FullSubcat se = full_subcat(P.E, keep_E);
  SubPoly r;
  r.P.I = P.I;
  r.P.B = sb.C;
  r.P.E = se.C;
  r.P.s = restrict_functor(se, P.s);
  r.P.t = restrict_functor(sb, P.t);
  FinFunctor pe = restrict_functor(se, P.p);  // E' -> B
  r.P.p.dom = se.C;
  r.P.p.cod = sb.C;
  for (int o : pe.omap) r.P.p.omap.push_back(sb.omap[o]);
  for (int a : pe.amap) r.P.p.amap.push_back(sb.amap[a]);
  r.incl_B = sb.incl;
  r.incl_E = se.incl;
  return r;
}

PolyMonadData identity_monad_data(const CatPtr& I) {
  PolyMonadData M;
  M.carrier = identity_poly(I);
  M.unit = identity_poly_morphism(M.carrier);
  M.selfcomp = compose_polynomials(M.carrier, M.carrier);
  M.mult_dom = restrict_poly(M.selfcomp.comp,
                             std::vector<char>(M.selfcomp.comp.B->n_objects(), 1));
  M.mult.dom = M.mult_dom.P;
  M.mult.cod = M.carrier;
  M.mult.f0 = identity_functor(I);
  M.mult.f1 = compose_functors(M.mult_dom.incl_B, M.selfcomp.comp.t);
  M.mult.f2 = compose_functors(M.mult_dom.incl_E, M.selfcomp.comp.s);
  return M;
}

int TruncatedS::b_arrow(int n, const Permutation& r) const {
  if (r.is_identity()) return poly.B->identity[pn_obj[n]];
  return poly.B->arr("p(" + std::to_string(n) + ";" + r.str() + ")");
}
int TruncatedS::e_obj(int n, int j) const {
  return poly.E->obj("e(" + std::to_string(n) + "," + std::to_string(j + 1) + ")");
}
int TruncatedS::e_arrow(int n, const Permutation& r, int j) const {
  if (r.is_identity()) return poly.E->identity[e_obj(n, j)];
  return poly.E->arr("e(" + std::to_string(n) + ";" + r.str() + ";" +
                     std::to_string(j + 1) + ")");
}

TruncatedS truncated_s(int N) {
  TruncatedS S;
  S.N = N;
  CatPtr one = terminal_cat();

  FinCatBuilder bb;
  std::vector<std::vector<Permutation>> perms(N + 1);
  for (int n = 0; n <= N; ++n) {
    perms[n] = all_perms(n);
    S.pn_obj.push_back(bb.add_object("p(" + std::to_string(n) + ")"));
  }
  std::vector<std::map<std::string, int>> barr(N + 1);
  for (int n = 0; n <= N; ++n)
    for (const auto& r : perms[n]) {
      if (r.is_identity()) continue;
      barr[n][r.str()] =
          bb.add_arrow("p(" + std::to_string(n) + ";" + r.str() + ")",
                       S.pn_obj[n], S.pn_obj[n]);
    }
  auto bidx = [&](int n, const Permutation& r) {
    return r.is_identity() ? FinCatBuilder::ident_of(S.pn_obj[n])
                           : barr[n][r.str()];
  };
  for (int n = 0; n <= N; ++n)
    for (const auto& r2 : perms[n])
      for (const auto& r1 : perms[n]) {
        if (r2.is_identity() || r1.is_identity()) continue;
        bb.set_comp(barr[n][r2.str()], barr[n][r1.str()],
                    bidx(n, compose(r1, r2)));
      }
  CatPtr B = bb.finalize(nullptr, false);

  FinCatBuilder eb;
  std::vector<std::vector<int>> eobj(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j < n; ++j)
      eobj[n].push_back(eb.add_object("e(" + std::to_string(n) + "," +
                                      std::to_string(j + 1) + ")"));
  std::vector<std::map<std::string, int>> earr(N + 1);
  for (int n = 1; n <= N; ++n)
    for (const auto& r : perms[n]) {
      if (r.is_identity()) continue;
      for (int j = 0; j < n; ++j)
        earr[n][r.str() + ";" + std::to_string(j)] =
            eb.add_arrow("e(" + std::to_string(n) + ";" + r.str() + ";" +
                             std::to_string(j + 1) + ")",
                         eobj[n][j], eobj[n][r(j)]);
    }
  auto eidx = [&](int n, const Permutation& r, int j) {
    return r.is_identity() ? FinCatBuilder::ident_of(eobj[n][j])
                           : earr[n][r.str() + ";" + std::to_string(j)];
  };
  for (int n = 1; n <= N; ++n)
    for (const auto& r2 : perms[n])
      for (const auto& r1 : perms[n]) {
        if (r2.is_identity() || r1.is_identity()) continue;
        for (int j = 0; j < n; ++j)
          eb.set_comp(eidx(n, r2, j), eidx(n, r1, r2(j)),
                      eidx(n, compose(r1, r2), j));
      }
  CatPtr E = eb.finalize(nullptr, false);

  S.poly.I = one;
  S.poly.B = B;
  S.poly.E = E;
  S.b_arity.assign(B->n_objects(), 0);
  for (int n = 0; n <= N; ++n) S.b_arity[S.pn_obj[n]] = n;
  S.b_perm.assign(B->n_arrows(), Permutation());
  for (int a = 0; a < B->n_arrows(); ++a) {
    int n = S.b_arity[B->arrows[a].src];
    if (B->is_identity(a)) {
      S.b_perm[a] = Permutation::identity(n);
    } else {
      // id "p(n;[..])"
      const std::string& id = B->arrows[a].id;
      auto lb = id.find(";[");
      std::vector<int> img;
      for (size_t i = lb + 2; i < id.size();) {
        size_t e = id.find_first_of(",]", i);
        img.push_back(std::stoi(id.substr(i, e - i)));
        i = e + 1;
        if (id[e] == ']') break;
      }
      S.b_perm[a] = Permutation::from_one_indexed(img);
    }
  }
  S.e_slot.assign(E->n_objects(), {0, 0});
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j < n; ++j) S.e_slot[eobj[n][j]] = {n, j};
  S.e_arr.assign(E->n_arrows(), {Permutation(), 0});
  for (int a = 0; a < E->n_arrows(); ++a) {
    auto [n, j] = S.e_slot[E->arrows[a].src];
    if (E->is_identity(a)) {
      S.e_arr[a] = {Permutation::identity(n), j};
    } else {
      const std::string& id = E->arrows[a].id;
      auto lb = id.find(";[");
      std::vector<int> img;
      size_t i = lb + 2;
      for (; i < id.size();) {
        size_t e = id.find_first_of(",]", i);
        img.push_back(std::stoi(id.substr(i, e - i)));
        i = e + 1;
        if (id[e] == ']') {
          i = e + 1;
          break;
        }
      }
      S.e_arr[a] = {Permutation::from_one_indexed(img), j};
    }
  }

  S.poly.s.dom = E;
  S.poly.s.cod = one;
  S.poly.s.omap.assign(E->n_objects(), 0);
  S.poly.s.amap.assign(E->n_arrows(), one->identity[0]);
  S.poly.t.dom = B;
  S.poly.t.cod = one;
  S.poly.t.omap.assign(B->n_objects(), 0);
  S.poly.t.amap.assign(B->n_arrows(), one->identity[0]);
  S.poly.p.dom = E;
  S.poly.p.cod = B;
  for (int e = 0; e < E->n_objects(); ++e)
    S.poly.p.omap.push_back(S.pn_obj[S.e_slot[e].first]);
  for (int a = 0; a < E->n_arrows(); ++a) {
    int n = S.e_slot[E->arrows[a].src].first;
    S.poly.p.amap.push_back(S.b_arrow(n, S.e_arr[a].first));
  }
  return S;
}

Classification classify_over_S(const Polynomial& P, const PolyMorphism& intoS) {
  Classification c;
  c.operad = P.I->is_discrete() && is_discrete_fibration(intoS.f1);
  c.sigma_free = c.operad && is_equiv_discrete(*P.B);
  c.club = c.operad && P.I->n_objects() == 1;
  return c;
}

Pi0PolyResult pi0_polynomial(const Polynomial& P) {
  Pi0PolyResult r;
  if (!P.I->is_discrete()) {
    r.error = "BaseNotDiscrete";
    return r;
  }
  Pi0Result pB = pi0(P.B), pE = pi0(P.E);
  r.q_B = pB.q;
  r.q_E = pE.q;
  auto discrete_map = [&](const CatPtr& dom, const CatPtr& cod,
                          const Pi0Result& pd,
                          const std::vector<int>& obj_im) {
    FinFunctor f;
    f.dom = dom;
    f.cod = cod;
    f.omap = obj_im;
    f.amap.assign(dom->n_arrows(), -1);
    for (int o = 0; o < dom->n_objects(); ++o)
      f.amap[dom->identity[o]] = cod->identity[obj_im[o]];
    (void)pd;
    return f;
  };
  // representatives: first object of each component
  std::vector<int> repB(pB.comp->n_objects(), -1), repE(pE.comp->n_objects(), -1);
  for (int o = 0; o < P.B->n_objects(); ++o)
    if (repB[pB.comp_of[o]] < 0) repB[pB.comp_of[o]] = o;
  for (int o = 0; o < P.E->n_objects(); ++o)
    if (repE[pE.comp_of[o]] < 0) repE[pE.comp_of[o]] = o;
  std::vector<int> pim(pE.comp->n_objects()), sim(pE.comp->n_objects()),
      tim(pB.comp->n_objects());
  for (int c = 0; c < pE.comp->n_objects(); ++c) {
    pim[c] = pB.comp_of[P.p.omap[repE[c]]];
    sim[c] = P.s.omap[repE[c]];
  }
  for (int c = 0; c < pB.comp->n_objects(); ++c) tim[c] = P.t.omap[repB[c]];
  r.P.I = P.I;
  r.P.B = pB.comp;
  r.P.E = pE.comp;
  r.P.p = discrete_map(pE.comp, pB.comp, pE, pim);
  r.P.s = discrete_map(pE.comp, P.I, pE, sim);
  r.P.t = discrete_map(pB.comp, P.I, pB, tim);
  PullbackResult pb = pullback(pB.q, r.P.p);
  FinFunctor med = pb.mediate(P.p, pE.q);
  if (!is_bijective(med)) {
    r.error = "NotSigmaFree";
    return r;
  }
  r.ok = true;
  return r;
}

PFunResult apply_polynomial(const Polynomial& P, const FinFunctor& x_anchor) {
  PFunResult r;
  r.xe = pullback(P.s, x_anchor);  // (E obj, X obj)
  r.dpb = dpb_along_dopfib(P.p, r.xe.toA);
  r.TX = r.dpb.Q;
  r.anchor = compose_functors(r.dpb.r, P.t);
  return r;
}

}  // namespace opdcat
