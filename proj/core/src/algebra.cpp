#include "opdcat/algebra.hpp"

#include "opdcat/catio.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace opdcat {

namespace {

std::string strip_tag(const std::string& s) {
  auto p = s.find(':');
  return p == std::string::npos ? s : s.substr(p + 1);
}

// id of a glued-carrier arrow with the colour tag removed
std::string strip_arr(const FinCategory& X, int f) {
  if (X.is_identity(f)) {
    // "1(c0:x)" -> "1(x)"
    const std::string& id = X.arrows[f].id;
    std::string inner = id.substr(2, id.size() - 3);
    return "1(" + strip_tag(inner) + ")";
  }
  return strip_tag(X.arrows[f].id);
}

std::string tup_of(const std::vector<std::string>& parts) {
  std::string s = "tup(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += parts[i];
  }
  return s + ")";
}

std::string id_list(const TruncatedOperad& T, const std::vector<int>& ops) {
  std::string s = "[";
  for (size_t i = 0; i < ops.size(); ++i) {
    if (i) s += ',';
    s += T.ops[ops[i]].id;
  }
  return s + "]";
}

std::string perm_list(const std::vector<Permutation>& ps) {
  std::string s = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ',';
    s += ps[i].str();
  }
  return s + "]";
}

}  // namespace

// ---------------------------------------------------------------- accessors

FinFunctor LaxMorphismData::c_rho(int op, const Permutation& rho) const {
  int op2 = T.act(op, rho);
  const ProductCat& A = doms[op];
  const ProductCat& B = doms[op2];
  FinFunctor f;
  f.dom = A.C;
  f.cod = B.C;
  f.omap.resize(A.C->n_objects());
  f.amap.resize(A.C->n_arrows());
  int n = rho.n();
  for (int o = 0; o < A.C->n_objects(); ++o) {
    std::vector<int> t(n);
    for (int j = 0; j < n; ++j) t[j] = A.obj_tuple[o][rho(j)];
    f.omap[o] = B.obj_of(t);
  }
  for (int a = 0; a < A.C->n_arrows(); ++a) {
    std::vector<int> t(n);
    for (int j = 0; j < n; ++j) t[j] = A.arr_tuple[a][rho(j)];
    f.amap[a] = B.arr_of(t);
  }
  return f;
}

int LaxMorphismData::xi(int op, const Permutation& rho, int x) const {
  auto it = symmetries.find({op, rho});
  if (it != symmetries.end()) return it->second[x];
  return fibres[T.ops[op].target]->identity[products[op].on_obj(x)];
}

int LaxMorphismData::nu(int colour, int x) const {
  if (!units.empty() && !units[colour].empty()) return units[colour][x];
  return fibres[colour]->identity[x];
}

int LaxMorphismData::sig(int outer, const std::vector<int>& inners,
                         int x) const {
  auto it = substitutions.find({outer, inners});
  if (it != substitutions.end()) return it->second[x];
  int comp = T.comp(outer, inners);
  return fibres[T.ops[comp].target]->identity[products[comp].on_obj(x)];
}

bool LaxMorphismData::has_sig(int outer, const std::vector<int>& inners) const {
  return substitutions.count({outer, inners}) > 0;
}

LaxMorphismData make_lax_skeleton(const TruncatedOperad& T,
                                  std::vector<CatPtr> fibres) {
  LaxMorphismData D;
  D.T = T;
  D.fibres = std::move(fibres);
  D.doms.reserve(T.ops.size());
  for (auto& op : T.ops) {
    std::vector<CatPtr> fs;
    for (int c : op.source) fs.push_back(D.fibres[c]);
    D.doms.push_back(product_cat(fs));
  }
  D.products.resize(T.ops.size());
  for (size_t a = 0; a < T.ops.size(); ++a) {
    D.products[a].dom = D.doms[a].C;
    D.products[a].cod = D.fibres[T.ops[a].target];
  }
  D.units.assign(D.fibres.size(), {});
  return D;
}

// ---------------------------------------------------- morphism validation

namespace {

// shared machinery for the componentwise axiom checks
struct MorCtx {
  const LaxMorphismData& D;
  CoherenceReport& R;
  std::map<std::pair<int, Permutation>, FinFunctor> crho_;

  const FinFunctor& crho(int op, const Permutation& rho) {
    auto key = std::make_pair(op, rho);
    auto it = crho_.find(key);
    if (it == crho_.end())
      it = crho_.emplace(key, D.c_rho(op, rho)).first;
    return it->second;
  }

  void fail(const std::string& axiom, const std::string& loc,
            const std::string& detail) {
    R.ok = false;
    if (R.issues.size() < 200) R.issues.push_back({axiom, loc, detail});
  }

  // per-slot objects of doms[inners[j]] from an object of doms[total]
  std::vector<int> blocks(int total, const std::vector<int>& inners,
                          int x) const {
    const auto& t = D.doms[total].obj_tuple[x];
    std::vector<int> out;
    size_t pos = 0;
    for (int b : inners) {
      int m = D.T.arity(b);
      std::vector<int> sub(t.begin() + pos, t.begin() + pos + m);
      out.push_back(D.doms[b].obj_of(sub));
      pos += m;
    }
    return out;
  }

  // object Phi(x) of doms[outer]: (H_{inners[j]}(x^{(j)}))_j
  int phi_obj(int outer, const std::vector<int>& inners, int total, int x) {
    auto bs = blocks(total, inners, x);
    std::vector<int> t(bs.size());
    for (size_t j = 0; j < bs.size(); ++j)
      t[j] = D.products[inners[j]].on_obj(bs[j]);
    return D.doms[outer].obj_of(t);
  }

  int phi_arr(int outer, const std::vector<int>& inners, int total, int f) {
    const auto& t = D.doms[total].arr_tuple[f];
    std::vector<int> parts;
    size_t pos = 0;
    for (int b : inners) {
      int m = D.T.arity(b);
      std::vector<int> sub(t.begin() + pos, t.begin() + pos + m);
      parts.push_back(D.products[b].on_arr(D.doms[b].arr_of(sub)));
      pos += m;
    }
    return D.doms[outer].arr_of(parts);
  }
};

}  // namespace

CoherenceReport validate_lax_morphism(const LaxMorphismData& D) {
  CoherenceReport R;
  const TruncatedOperad& T = D.T;
  int nops = (int)T.ops.size();
  // shape of the containers
  if ((int)D.fibres.size() != (int)T.colours.size() ||
      (int)D.doms.size() != nops || (int)D.products.size() != nops) {
    R.ok = false;
    R.issues.push_back({"shape", "", "container sizes do not match the operad"});
    return R;
  }
  MorCtx C{D, R, {}};
  for (int a = 0; a < nops; ++a) {
    if (D.products[a].dom != D.doms[a].C ||
        D.products[a].cod != D.fibres[T.ops[a].target] ||
        (int)D.products[a].omap.size() != D.doms[a].C->n_objects() ||
        (int)D.products[a].amap.size() != D.doms[a].C->n_arrows()) {
      C.fail("shape", "op=" + T.ops[a].id, "product functor shape");
      return R;
    }
    for (auto& v : check_functor(D.products[a]))
      C.fail("op-functor", "op=" + T.ops[a].id, v.code + ": " + v.detail);
  }
  for (auto& [key, comps] : D.symmetries) {
    if (key.first < 0 || key.first >= nops ||
        key.second.n() != T.arity(key.first) ||
        (int)comps.size() != D.doms[key.first].C->n_objects()) {
      C.fail("shape", "op=" + (key.first >= 0 && key.first < nops
                                   ? T.ops[key.first].id
                                   : std::string("?")),
             "symmetry table shape");
      return R;
    }
  }
  for (size_t i = 0; i < D.units.size(); ++i)
    if (!D.units[i].empty() &&
        (int)D.units[i].size() != D.fibres[i]->n_objects()) {
      C.fail("shape", "colour=" + T.colours[i], "unit table shape");
      return R;
    }
  for (auto& [key, comps] : D.substitutions) {
    int g = T.comp(key.first, key.second);
    if (g < 0 || (int)comps.size() != D.doms[g].C->n_objects()) {
      C.fail("shape", "op=" + T.ops[key.first].id,
             "substitution table shape or undefined composite");
      return R;
    }
  }

  // --- symmetries: endpoints, xi_{alpha,1}=id, naturality, functoriality
  for (int a = 0; a < nops; ++a) {
    int n = T.arity(a);
    const CatPtr& fib = D.fibres[T.ops[a].target];
    auto perms = all_perms(n);
    for (auto& rho : perms) {
      int a2 = T.act(a, rho);
      const FinFunctor& cr = C.crho(a, rho);
      for (int x = 0; x < D.doms[a].C->n_objects(); ++x) {
        int comp = D.xi(a, rho, x);
        ++R.checked;
        if (comp < 0 ||
            fib->arrows[comp].src != D.products[a2].on_obj(cr.on_obj(x)) ||
            fib->arrows[comp].tgt != D.products[a].on_obj(x)) {
          C.fail("shape",
                 "op=" + T.ops[a].id + ";rho=" + rho.str() +
                     ";x=" + D.doms[a].C->objects[x],
                 "symmetry component endpoints");
          continue;
        }
        if (rho.is_identity() && !fib->is_identity(comp))
          C.fail("xi-id",
                 "op=" + T.ops[a].id + ";x=" + D.doms[a].C->objects[x],
                 "identity-permutation symmetry is not an identity");
      }
      // naturality
      for (int f = 0; f < D.doms[a].C->n_arrows(); ++f) {
        int x = D.doms[a].C->arrows[f].src, y = D.doms[a].C->arrows[f].tgt;
        int lhs = fib->compose(D.xi(a, rho, x), D.products[a].on_arr(f));
        int rhs = fib->compose(D.products[a2].on_arr(cr.on_arr(f)),
                               D.xi(a, rho, y));
        ++R.checked;
        if (lhs < 0 || lhs != rhs)
          C.fail("xi-natural",
                 "op=" + T.ops[a].id + ";rho=" + rho.str() +
                     ";f=" + D.doms[a].C->arrows[f].id,
                 "naturality square of a symmetry");
      }
    }
    for (auto& r1 : perms)
      for (auto& r2 : perms) {
        Permutation r12 = compose(r1, r2);
        int a1 = T.act(a, r1);
        const FinFunctor& c1 = C.crho(a, r1);
        for (int x = 0; x < D.doms[a].C->n_objects(); ++x) {
          int lhs = D.xi(a, r12, x);
          int rhs = fib->compose(D.xi(a1, r2, c1.on_obj(x)), D.xi(a, r1, x));
          ++R.checked;
          if (lhs != rhs)
            C.fail("xi-comp",
                   "op=" + T.ops[a].id + ";rho1=" + r1.str() +
                       ";rho2=" + r2.str() + ";x=" + D.doms[a].C->objects[x],
                   "symmetries are not functorial in the permutation");
        }
      }
  }

  // --- units: endpoints and naturality
  for (size_t i = 0; i < D.fibres.size(); ++i) {
    int u = T.unit[i];
    const CatPtr& fib = D.fibres[i];
    for (int x = 0; x < fib->n_objects(); ++x) {
      int hx = D.products[u].on_obj(D.doms[u].obj_of({x}));
      int comp = D.nu((int)i, x);
      ++R.checked;
      if (comp < 0 || fib->arrows[comp].src != x ||
          fib->arrows[comp].tgt != hx) {
        C.fail("shape", "colour=" + T.colours[i] + ";x=" + fib->objects[x],
               "unit component endpoints");
        return R;
      }
    }
    for (int f = 0; f < fib->n_arrows(); ++f) {
      int x = fib->arrows[f].src, y = fib->arrows[f].tgt;
      int hf = D.products[u].on_arr(D.doms[u].arr_of({f}));
      int lhs = fib->compose(D.nu((int)i, x), hf);
      int rhs = fib->compose(f, D.nu((int)i, y));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        C.fail("nu-natural",
               "colour=" + T.colours[i] + ";f=" + fib->arrows[f].id,
               "naturality square of a unit cell");
    }
  }

  // --- substitutions: endpoints and naturality on every defined composite
  for (auto& [key, res] : T.compo_) {
    int a = key.first;
    const std::vector<int>& bs = key.second;
    int g = res;
    const CatPtr& fib = D.fibres[T.ops[g].target];
    for (int x = 0; x < D.doms[g].C->n_objects(); ++x) {
      int comp = D.sig(a, bs, x);
      int src = D.products[a].on_obj(C.phi_obj(a, bs, g, x));
      int tgt = D.products[g].on_obj(x);
      ++R.checked;
      if (comp < 0 || fib->arrows[comp].src != src ||
          fib->arrows[comp].tgt != tgt) {
        C.fail("shape",
               "outer=" + T.ops[a].id + ";inners=" + id_list(T, bs) +
                   ";x=" + D.doms[g].C->objects[x],
               "substitution component endpoints");
        return R;
      }
    }
    for (int f = 0; f < D.doms[g].C->n_arrows(); ++f) {
      int x = D.doms[g].C->arrows[f].src, y = D.doms[g].C->arrows[f].tgt;
      int lhs = fib->compose(D.sig(a, bs, x), D.products[g].on_arr(f));
      int rhs = fib->compose(D.products[a].on_arr(C.phi_arr(a, bs, g, f)),
                             D.sig(a, bs, y));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        C.fail("sigma-natural",
               "outer=" + T.ops[a].id + ";inners=" + id_list(T, bs) +
                   ";f=" + D.doms[g].C->arrows[f].id,
               "naturality square of a substitution cell");
    }
  }

  // --- unit triangles
  for (int a = 0; a < nops; ++a) {
    int n = T.arity(a);
    int tc = T.ops[a].target;
    const CatPtr& fib = D.fibres[tc];
    std::vector<int> us(n);
    for (int j = 0; j < n; ++j) us[j] = T.unit[T.ops[a].source[j]];
    if (T.comp(a, us) == a) {
      for (int x = 0; x < D.doms[a].C->n_objects(); ++x) {
        const auto& t = D.doms[a].obj_tuple[x];
        std::vector<int> parts(n);
        for (int j = 0; j < n; ++j)
          parts[j] = D.nu(T.ops[a].source[j], t[j]);
        int m = D.products[a].on_arr(D.doms[a].arr_of(parts));
        int lhs = fib->compose(m, D.sig(a, us, x));
        ++R.checked;
        if (lhs < 0 || !fib->is_identity(lhs))
          C.fail("unitA",
                 "op=" + T.ops[a].id + ";x=" + D.doms[a].C->objects[x],
                 "unit triangle on the inner slots");
      }
    } else {
      ++R.skipped;
    }
    int ut = T.unit[tc];
    if (T.comp(ut, {a}) == a) {
      for (int x = 0; x < D.doms[a].C->n_objects(); ++x) {
        int hx = D.products[a].on_obj(x);
        int lhs = fib->compose(D.nu(tc, hx), D.sig(ut, {a}, x));
        ++R.checked;
        if (lhs < 0 || !fib->is_identity(lhs))
          C.fail("unitB",
                 "op=" + T.ops[a].id + ";x=" + D.doms[a].C->objects[x],
                 "unit triangle on the outer slot");
      }
    } else {
      ++R.skipped;
    }
  }

  // --- compatibility of symmetries and substitutions
  for (auto& [key, res] : T.compo_) {
    int a = key.first;
    const std::vector<int>& bs = key.second;
    int g = res;
    int n = (int)bs.size();
    const CatPtr& fib = D.fibres[T.ops[g].target];
    auto outer = all_perms(n);
    std::vector<std::vector<Permutation>> inner(n);
    for (int j = 0; j < n; ++j) inner[j] = all_perms(T.arity(bs[j]));
    for (auto& rho : outer) {
      std::vector<size_t> od(n, 0);
      while (true) {
        std::vector<Permutation> rj(n);
        for (int j = 0; j < n; ++j) rj[j] = inner[j][od[j]];
        Permutation theta = block_perm(rho, rj);
        int a2 = T.act(a, rho);
        std::vector<int> b2(n);
        for (int k = 0; k < n; ++k)
          b2[k] = T.act(bs[rho(k)], rj[rho(k)]);
        if (T.comp(a2, b2) < 0) {
          ++R.skipped;
        } else {
          const FinFunctor& ct = C.crho(g, theta);
          for (int x = 0; x < D.doms[g].C->n_objects(); ++x) {
            int path1 =
                fib->compose(D.sig(a2, b2, ct.on_obj(x)), D.xi(g, theta, x));
            auto blks = C.blocks(g, bs, x);
            std::vector<int> parts(n);
            for (int k = 0; k < n; ++k)
              parts[k] = D.xi(bs[rho(k)], rj[rho(k)], blks[rho(k)]);
            int m = D.products[a2].on_arr(D.doms[a2].arr_of(parts));
            int t = C.phi_obj(a, bs, g, x);
            int path2 = fib->compose(fib->compose(m, D.xi(a, rho, t)),
                                     D.sig(a, bs, x));
            ++R.checked;
            if (path1 < 0 || path1 != path2)
              C.fail("xisigma",
                     "op=" + T.ops[a].id + ";rho=" + rho.str() +
                         ";inners=" + id_list(T, bs) + ";rhos=" +
                         perm_list(rj) + ";x=" + D.doms[g].C->objects[x],
                     "symmetry / substitution square");
          }
        }
        int k = n - 1;
        while (k >= 0 && ++od[k] == inner[k].size()) od[k--] = 0;
        if (k < 0) break;
      }
    }
  }

  // --- associativity pentagon
  std::map<int, std::vector<std::pair<std::vector<int>, int>>> by_outer;
  for (auto& [key, res] : T.compo_)
    by_outer[key.first].push_back({key.second, res});
  for (auto& [key, res] : T.compo_) {
    int a = key.first;
    const std::vector<int>& bs = key.second;
    int d = res;
    int n = (int)bs.size();
    const CatPtr& fib = D.fibres[T.ops[d].target];
    std::vector<const std::vector<std::pair<std::vector<int>, int>>*> ch(n);
    bool any = true;
    for (int j = 0; j < n; ++j) {
      auto it = by_outer.find(bs[j]);
      if (it == by_outer.end()) { any = false; break; }
      ch[j] = &it->second;
    }
    if (!any) continue;
    std::vector<size_t> od(n, 0);
    while (true) {
      std::vector<int> es(n);
      std::vector<int> flat;
      for (int j = 0; j < n; ++j) {
        es[j] = (*ch[j])[od[j]].second;
        for (int gop : (*ch[j])[od[j]].first) flat.push_back(gop);
      }
      int total = T.comp(a, es);
      if (total < 0 || T.comp(d, flat) < 0) {
        ++R.skipped;
      } else {
        for (int x = 0; x < D.doms[total].C->n_objects(); ++x) {
          auto eblks = C.blocks(total, es, x);
          std::vector<int> parts(n);
          for (int j = 0; j < n; ++j)
            parts[j] = D.sig(bs[j], (*ch[j])[od[j]].first, eblks[j]);
          int m = D.products[a].on_arr(D.doms[a].arr_of(parts));
          int path1 = fib->compose(m, D.sig(a, es, x));
          // middle object: every leaf replaced by its image
          const auto& t = D.doms[total].obj_tuple[x];
          std::vector<int> ys;
          size_t pos = 0;
          for (int j = 0; j < n; ++j)
            for (int gop : (*ch[j])[od[j]].first) {
              int mm = T.arity(gop);
              std::vector<int> sub(t.begin() + pos, t.begin() + pos + mm);
              ys.push_back(D.products[gop].on_obj(D.doms[gop].obj_of(sub)));
              pos += mm;
            }
          int ymid = D.doms[d].obj_of(ys);
          int path2 =
              fib->compose(D.sig(a, bs, ymid), D.sig(d, flat, x));
          ++R.checked;
          if (path1 < 0 || path1 != path2)
            C.fail("assoc",
                   "outer=" + T.ops[a].id + ";inners=" + id_list(T, bs) +
                       ";inners2=" + id_list(T, flat) +
                       ";x=" + D.doms[total].C->objects[x],
                   "substitution pentagon");
        }
      }
      int k = n - 1;
      while (k >= 0 && ++od[k] == ch[k]->size()) od[k--] = 0;
      if (k < 0) break;
    }
  }

  // --- flags
  R.lax = R.ok;
  bool inv = true, idn = true, comm = true;
  for (auto& [key, comps] : D.symmetries) {
    const CatPtr& fib = D.fibres[T.ops[key.first].target];
    for (int c : comps)
      if (!fib->is_identity(c)) comm = false;
  }
  auto scan = [&](const CatPtr& fib, const std::vector<int>& comps) {
    for (int c : comps) {
      if (!fib->is_identity(c)) idn = false;
      if (fib->inverse(c) < 0) inv = false;
    }
  };
  for (size_t i = 0; i < D.units.size(); ++i)
    scan(D.fibres[i], D.units[i]);
  for (auto& [key, comps] : D.substitutions) {
    int g = T.comp(key.first, key.second);
    scan(D.fibres[T.ops[g].target], comps);
  }
  R.pseudo = R.ok && inv;
  R.strict = R.ok && idn;
  R.commutative = R.ok && comm;
  return R;
}

LaxMorphismData dualize(const LaxMorphismData& D) {
  // opposite() preserves the object order and the arrow order of
  // builder-built categories, so every index table carries over
  LaxMorphismData E;
  E.T = D.T;
  for (auto& f : D.fibres) E.fibres.push_back(opposite(f));
  E.doms.reserve(D.doms.size());
  for (size_t a = 0; a < D.doms.size(); ++a) {
    std::vector<CatPtr> fs;
    for (int c : D.T.ops[a].source) fs.push_back(E.fibres[c]);
    E.doms.push_back(product_cat(fs));
    FinFunctor p;
    p.dom = E.doms[a].C;
    p.cod = E.fibres[D.T.ops[a].target];
    p.omap = D.products[a].omap;
    p.amap = D.products[a].amap;
    E.products.push_back(std::move(p));
  }
  E.symmetries = D.symmetries;
  E.units = D.units;
  E.substitutions = D.substitutions;
  return E;
}

CoherenceReport validate_colax_morphism(const LaxMorphismData& D) {
  return validate_lax_morphism(dualize(D));
}

// ------------------------------------------------------------- coproduct

FibredCat coproduct_fibres(const std::vector<CatPtr>& fibres) {
  FibredCat F;
  F.fibres = fibres;
  FinCatBuilder b;
  F.obj_in.resize(fibres.size());
  F.arr_in.resize(fibres.size());
  for (size_t i = 0; i < fibres.size(); ++i)
    for (int o = 0; o < fibres[i]->n_objects(); ++o) {
      F.obj_in[i].push_back(
          b.add_object("c" + std::to_string(i) + ":" + fibres[i]->objects[o]));
      F.obj_out.push_back({(int)i, o});
    }
  std::vector<std::vector<int>> amap(fibres.size());
  for (size_t i = 0; i < fibres.size(); ++i) {
    amap[i].assign(fibres[i]->n_arrows(), -1);
    for (int f = 0; f < fibres[i]->n_arrows(); ++f)
      if (!fibres[i]->is_identity(f))
        amap[i][f] = b.add_arrow(
            "c" + std::to_string(i) + ":" + fibres[i]->arrows[f].id,
            F.obj_in[i][fibres[i]->arrows[f].src],
            F.obj_in[i][fibres[i]->arrows[f].tgt]);
  }
  for (size_t i = 0; i < fibres.size(); ++i)
    for (int f = 0; f < fibres[i]->n_arrows(); ++f)
      for (int g : fibres[i]->out_of(fibres[i]->arrows[f].tgt)) {
        if (fibres[i]->is_identity(f) || fibres[i]->is_identity(g)) continue;
        int h = fibres[i]->compose(f, g);
        b.set_comp(amap[i][f], amap[i][g],
                   fibres[i]->is_identity(h)
                       ? FinCatBuilder::ident_of(
                             F.obj_in[i][fibres[i]->arrows[h].src])
                       : amap[i][h]);
      }
  F.X = b.finalize();
  F.arr_out.assign(F.X->n_arrows(), {-1, -1});
  for (size_t i = 0; i < fibres.size(); ++i)
    for (int f = 0; f < fibres[i]->n_arrows(); ++f) {
      int g = fibres[i]->is_identity(f)
                  ? F.X->identity[F.obj_in[i][fibres[i]->arrows[f].src]]
                  : amap[i][f];
      F.arr_in[i].push_back(g);
      F.arr_out[g] = {(int)i, f};
    }
  return F;
}

// ------------------------------------------------------- action translation

LaxActionData data_to_action(const LaxMorphismData& D) {
  const TruncatedOperad& T = D.T;
  if (D.fibres.size() != T.colours.size() ||
      D.products.size() != T.ops.size())
    throw std::invalid_argument("ShapeMismatch");
  LaxActionData A;
  A.T = T;
  A.glued = coproduct_fibres(D.fibres);
  std::vector<int> colour_of(A.glued.X->n_objects());
  for (int o = 0; o < A.glued.X->n_objects(); ++o)
    colour_of[o] = A.glued.obj_out[o].first;
  A.carrier = over_discrete(T, A.glued.X, colour_of);
  A.TX = std::make_shared<LabelledOpCategory>(apply_T(T, A.carrier));
  A.T2d = std::make_shared<LabelledOpCategory>(apply_T_defined(T, *A.TX));

  const LabelledOpCategory& TX = *A.TX;
  A.a.dom = TX.TX;
  A.a.cod = A.glued.X;
  A.a.omap.resize(TX.TX->n_objects());
  A.a.amap.resize(TX.TX->n_arrows());
  auto local_obj = [&](int op, const std::vector<int>& labels) {
    std::vector<int> t(labels.size());
    for (size_t j = 0; j < labels.size(); ++j)
      t[j] = A.glued.obj_out[labels[j]].second;
    return D.doms[op].obj_of(t);
  };
  for (int o = 0; o < TX.TX->n_objects(); ++o) {
    int op = TX.objs[o].op;
    A.a.omap[o] = A.glued.obj_in[T.ops[op].target]
                            [D.products[op].on_obj(local_obj(op, TX.objs[o].labels))];
  }
  for (int f = 0; f < TX.TX->n_arrows(); ++f) {
    int src = TX.TX->arrows[f].src, tgt = TX.TX->arrows[f].tgt;
    int op = TX.objs[tgt].op, sop = TX.objs[src].op;
    const auto& ar = TX.arrs[f];
    const CatPtr& fib = D.fibres[T.ops[op].target];
    std::vector<int> parts(ar.gammas.size());
    for (size_t j = 0; j < ar.gammas.size(); ++j)
      parts[j] = A.glued.arr_out[ar.gammas[j]].second;
    int m = D.products[sop].on_arr(D.doms[sop].arr_of(parts));
    int y = local_obj(op, TX.objs[tgt].labels);
    A.a.amap[f] = A.glued.arr_in[T.ops[op].target]
                            [fib->compose(m, D.xi(op, ar.rho, y))];
  }
  A.abar0.resize(A.glued.X->n_objects());
  for (int o = 0; o < A.glued.X->n_objects(); ++o) {
    auto [i, x] = A.glued.obj_out[o];
    A.abar0[o] = A.glued.arr_in[i][D.nu(i, x)];
  }
  const LabelledOpCategory& T2 = *A.T2d;
  A.abar2.resize(T2.TX->n_objects());
  for (int o = 0; o < T2.TX->n_objects(); ++o) {
    int op = T2.objs[o].op;
    std::vector<int> bs, flat;
    for (int xi : T2.objs[o].labels) {
      bs.push_back(TX.objs[xi].op);
      for (int l : TX.objs[xi].labels) flat.push_back(l);
    }
    int g = T.comp(op, bs);
    A.abar2[o] =
        A.glued.arr_in[T.ops[g].target][D.sig(op, bs, local_obj(g, flat))];
  }
  return A;
}

LaxMorphismData action_to_data(const LaxActionData& A) {
  const TruncatedOperad& T = A.T;
  const LabelledOpCategory& TX = *A.TX;
  const FinCategory& X = *A.glued.X;
  if ((int)A.a.omap.size() != TX.TX->n_objects() ||
      (int)A.abar0.size() != X.n_objects())
    throw std::invalid_argument("ShapeMismatch");
  LaxMorphismData D = make_lax_skeleton(T, A.glued.fibres);
  auto global_obj = [&](int op, int x) {
    const auto& t = D.doms[op].obj_tuple[x];
    std::vector<int> g(t.size());
    for (size_t j = 0; j < t.size(); ++j)
      g[j] = A.glued.obj_in[T.ops[op].source[j]][t[j]];
    return g;
  };
  for (size_t op = 0; op < T.ops.size(); ++op) {
    int tc = T.ops[op].target;
    FinFunctor& P = D.products[op];
    P.omap.resize(D.doms[op].C->n_objects());
    P.amap.resize(D.doms[op].C->n_arrows());
    for (int x = 0; x < D.doms[op].C->n_objects(); ++x)
      P.omap[x] =
          A.glued.obj_out[A.a.omap[TX.obj_of((int)op, global_obj((int)op, x))]]
              .second;
    for (int f = 0; f < D.doms[op].C->n_arrows(); ++f) {
      const auto& t = D.doms[op].arr_tuple[f];
      std::vector<int> g(t.size());
      for (size_t j = 0; j < t.size(); ++j)
        g[j] = A.glued.arr_in[T.ops[op].source[j]][t[j]];
      int src = TX.obj_of((int)op,
                          global_obj((int)op, D.doms[op].C->arrows[f].src));
      int u = TX.arr_of(src, Permutation::identity((int)t.size()), g);
      P.amap[f] = A.glued.arr_out[A.a.amap[u]].second;
      (void)tc;
    }
  }
  for (size_t op = 0; op < T.ops.size(); ++op) {
    int n = T.arity((int)op);
    for (auto& rho : all_perms(n)) {
      if (rho.is_identity()) continue;
      int op2 = T.act((int)op, rho);
      std::vector<int>& tbl =
          D.symmetries[{(int)op, rho}];
      tbl.resize(D.doms[op].C->n_objects());
      for (int y = 0; y < D.doms[op].C->n_objects(); ++y) {
        auto g = global_obj((int)op, y);
        std::vector<int> sl(n), ids(n);
        for (int j = 0; j < n; ++j) sl[j] = g[rho(j)];
        int src = TX.obj_of(op2, sl);
        for (int j = 0; j < n; ++j) ids[j] = X.identity[sl[j]];
        int p = TX.arr_of(src, rho, ids);
        tbl[y] = A.glued.arr_out[A.a.amap[p]].second;
      }
    }
  }
  D.units.assign(T.colours.size(), {});
  for (size_t i = 0; i < T.colours.size(); ++i) {
    D.units[i].resize(A.glued.fibres[i]->n_objects());
    for (int x = 0; x < A.glued.fibres[i]->n_objects(); ++x)
      D.units[i][x] =
          A.glued.arr_out[A.abar0[A.glued.obj_in[i][x]]].second;
  }
  const LabelledOpCategory& T2 = *A.T2d;
  for (auto& [key, res] : T.compo_) {
    int a = key.first;
    const std::vector<int>& bs = key.second;
    int g = res;
    std::vector<int>& tbl = D.substitutions[{a, bs}];
    tbl.resize(D.doms[g].C->n_objects());
    for (int x = 0; x < D.doms[g].C->n_objects(); ++x) {
      auto flat = global_obj(g, x);
      std::vector<int> inner(bs.size());
      size_t pos = 0;
      for (size_t j = 0; j < bs.size(); ++j) {
        int m = T.arity(bs[j]);
        std::vector<int> sub(flat.begin() + pos, flat.begin() + pos + m);
        inner[j] = TX.obj_of(bs[j], sub);
        pos += m;
      }
      int o2 = T2.obj_of(a, inner);
      tbl[x] = A.glued.arr_out[A.abar2[o2]].second;
    }
  }
  return D;
}

// --------------------------------------------------- lax action validation

CoherenceReport validate_lax_action(const LaxActionData& A) {
  CoherenceReport R;
  const TruncatedOperad& T = A.T;
  const LabelledOpCategory& TX = *A.TX;
  const LabelledOpCategory& T2 = *A.T2d;
  const FinCategory& X = *A.glued.X;
  auto fail = [&](const std::string& ax, const std::string& loc,
                  const std::string& detail) {
    R.ok = false;
    if (R.issues.size() < 200) R.issues.push_back({ax, loc, detail});
  };
  auto tup_objs = [&](const std::vector<int>& labels) {
    std::vector<std::string> parts;
    for (int l : labels) parts.push_back(strip_tag(X.objects[l]));
    return tup_of(parts);
  };
  auto tup_arrs = [&](const std::vector<int>& gammas) {
    std::vector<std::string> parts;
    for (int g : gammas) parts.push_back(strip_arr(X, g));
    return tup_of(parts);
  };

  // the action is a functor over the colours
  for (int o = 0; o < TX.TX->n_objects(); ++o) {
    if (A.carrier.anchor.omap[A.a.omap[o]] != T.ops[TX.objs[o].op].target) {
      fail("shape", "op=" + T.ops[TX.objs[o].op].id,
           "action is not over the colours");
      return R;
    }
    if (A.a.amap[TX.TX->identity[o]] != X.identity[A.a.omap[o]])
      fail("op-functor", "op=" + T.ops[TX.objs[o].op].id,
           "action does not preserve an identity");
  }
  for (int f = 0; f < TX.TX->n_arrows(); ++f)
    for (int g : TX.TX->out_of(TX.TX->arrows[f].tgt)) {
      int h = TX.TX->compose(f, g);
      int lhs = h < 0 ? -1 : A.a.amap[h];
      int rhs = X.compose(A.a.amap[f], A.a.amap[g]);
      ++R.checked;
      if (lhs >= 0 && lhs == rhs) continue;
      int tgt = TX.TX->arrows[g].tgt;
      int top = TX.objs[tgt].op;
      auto [lf, pf] = TX.factor(f);
      auto [lg, pg] = TX.factor(g);
      bool fperm = TX.TX->is_identity(lf), gperm = TX.TX->is_identity(lg);
      bool flev = TX.TX->is_identity(pf), glev = TX.TX->is_identity(pg);
      if (fperm && gperm)
        fail("xi-comp",
             "op=" + T.ops[top].id + ";rho1=" + TX.arrs[g].rho.str() +
                 ";rho2=" + TX.arrs[f].rho.str() +
                 ";x=" + tup_objs(TX.objs[tgt].labels),
             "action not functorial on permutative arrows");
      else if (flev && glev)
        fail("op-functor", "op=" + T.ops[top].id,
             "action not functorial on levelwise arrows");
      else if (h >= 0) {
        auto [lh, ph] = TX.factor(h);
        (void)ph;
        fail("xi-natural",
             "op=" + T.ops[top].id + ";rho=" + TX.arrs[h].rho.str() +
                 ";f=" + tup_arrs(TX.arrs[lh].gammas),
             "action not functorial on a mixed composite");
      } else {
        fail("op-functor", "op=" + T.ops[top].id, "missing composite");
      }
    }

  // unit comparison cell: endpoints and naturality
  FinFunctor eta = unit_T(TX);
  for (int o = 0; o < X.n_objects(); ++o) {
    int c = A.abar0[o];
    if (c < 0 || X.arrows[c].src != o ||
        X.arrows[c].tgt != A.a.omap[eta.omap[o]]) {
      fail("shape",
           "colour=" + T.colours[A.carrier.anchor.omap[o]] +
               ";x=" + strip_tag(X.objects[o]),
           "unit cell endpoints");
      return R;
    }
  }
  for (int f = 0; f < X.n_arrows(); ++f) {
    int x = X.arrows[f].src, y = X.arrows[f].tgt;
    int lhs = X.compose(A.abar0[x], A.a.amap[eta.amap[f]]);
    int rhs = X.compose(f, A.abar0[y]);
    ++R.checked;
    if (lhs < 0 || lhs != rhs)
      fail("nu-natural",
           "colour=" + T.colours[A.carrier.anchor.omap[x]] +
               ";f=" + strip_arr(X, f),
           "naturality of the unit cell");
  }

  // multiplication comparison cell
  MultResult mu = mult_T(T2, TX);
  FinFunctor Ta = apply_T_arrow(T2, TX, A.a);
  for (int o = 0; o < T2.TX->n_objects(); ++o) {
    int c = A.abar2[o];
    if (c < 0 || X.arrows[c].src != A.a.omap[Ta.omap[o]] ||
        X.arrows[c].tgt != A.a.omap[mu.m.omap[o]]) {
      fail("shape", "op=" + T.ops[T2.objs[o].op].id,
           "multiplication cell endpoints");
      return R;
    }
  }
  for (int f = 0; f < T2.TX->n_arrows(); ++f) {
    int src = T2.TX->arrows[f].src, tgt = T2.TX->arrows[f].tgt;
    const auto& ar = T2.arrs[f];
    int op = T2.objs[tgt].op;
    int n = (int)ar.gammas.size();
    bool allperm = true, alllev = ar.rho.is_identity();
    for (int k = 0; k < n; ++k) {
      auto [lg, pg] = TX.factor(ar.gammas[k]);
      if (!TX.TX->is_identity(lg)) allperm = false;
      if (!TX.TX->is_identity(pg)) alllev = false;
    }
    // a mixed arrow is the composite of its levelwise and permutative
    // factors, and the square is closed under composition: the pure
    // arrows already cover it
    if (!allperm && !alllev) {
      ++R.skipped;
      continue;
    }
    int lhs = X.compose(A.a.amap[Ta.amap[f]], A.abar2[tgt]);
    int rhs = X.compose(A.abar2[src], A.a.amap[mu.m.amap[f]]);
    ++R.checked;
    if (lhs >= 0 && lhs == rhs) continue;
    std::vector<int> bops;
    std::vector<int> flat;
    for (int t : T2.objs[tgt].labels) {
      bops.push_back(TX.objs[t].op);
      for (int l : TX.objs[t].labels) flat.push_back(l);
    }
    if (allperm) {
      std::vector<Permutation> rhos(n);
      for (int k = 0; k < n; ++k) rhos[ar.rho(k)] = TX.arrs[ar.gammas[k]].rho;
      fail("xisigma",
           "op=" + T.ops[op].id + ";rho=" + ar.rho.str() +
               ";inners=" + id_list(T, bops) + ";rhos=" + perm_list(rhos) +
               ";x=" + tup_objs(flat),
           "multiplication cell not natural on a permutative arrow");
    } else if (alllev) {
      std::vector<int> gs;
      for (int k = 0; k < n; ++k)
        for (int g : TX.arrs[ar.gammas[k]].gammas) gs.push_back(g);
      fail("sigma-natural",
           "outer=" + T.ops[op].id + ";inners=" + id_list(T, bops) +
               ";f=" + tup_arrs(gs),
           "multiplication cell not natural on a levelwise arrow");
    } else {
      fail("abar2-natural", "op=" + T.ops[op].id,
           "multiplication cell not natural");
    }
  }

  // unit laws
  for (int o = 0; o < TX.TX->n_objects(); ++o) {
    int op = TX.objs[o].op;
    int n = T.arity(op);
    std::vector<int> gam(n), eobjs(n);
    for (int j = 0; j < n; ++j) {
      int xj = TX.objs[o].labels[j];
      gam[j] = A.abar0[xj];
      eobjs[j] = eta.omap[xj];
    }
    int uA = TX.arr_of(o, Permutation::identity(n), gam);
    int XiA = T2.obj_of(op, eobjs);
    if (uA < 0 || XiA < 0) {
      ++R.skipped;
    } else {
      int lhs = X.compose(A.a.amap[uA], A.abar2[XiA]);
      ++R.checked;
      if (lhs < 0 || !X.is_identity(lhs))
        fail("unitA",
             "op=" + T.ops[op].id + ";x=" + tup_objs(TX.objs[o].labels),
             "unit law on the inner slots");
    }
    int XiB = T2.obj_of(T.unit[T.ops[op].target], {o});
    if (XiB < 0) {
      ++R.skipped;
    } else {
      int lhs = X.compose(A.abar0[A.a.omap[o]], A.abar2[XiB]);
      ++R.checked;
      if (lhs < 0 || !X.is_identity(lhs))
        fail("unitB",
             "op=" + T.ops[op].id + ";x=" + tup_objs(TX.objs[o].labels),
             "unit law on the outer slot");
    }
  }

  // associativity on doubly-decomposable objects
  std::vector<std::vector<int>> decomp(TX.TX->n_objects());
  for (int o = 0; o < T2.TX->n_objects(); ++o)
    decomp[mu.m.omap[o]].push_back(o);
  for (int o2 = 0; o2 < T2.TX->n_objects(); ++o2) {
    int op = T2.objs[o2].op;
    int n = T.arity(op);
    const auto& inner = T2.objs[o2].labels;
    bool any = true;
    for (int j = 0; j < n; ++j)
      if (decomp[inner[j]].empty()) any = false;
    if (!any || n == 0) {
      if (n == 0) {
        // nothing to decompose: law is trivial
      }
      continue;
    }
    std::vector<size_t> od(n, 0);
    while (true) {
      std::vector<int> psi(n), bops(n), topo(n), sA(n), gamA(n);
      for (int j = 0; j < n; ++j) {
        psi[j] = decomp[inner[j]][od[j]];
        bops[j] = T2.objs[psi[j]].op;
        topo[j] = Ta.omap[psi[j]];
        sA[j] = A.a.omap[topo[j]];
        gamA[j] = A.abar2[psi[j]];
      }
      int d = T.comp(op, bops);
      int Xtop = d < 0 ? -1 : T2.obj_of(op, topo);
      std::vector<int> flatTX, flatops, leaves;
      for (int j = 0; j < n; ++j)
        for (int t : T2.objs[psi[j]].labels) {
          flatTX.push_back(t);
          flatops.push_back(TX.objs[t].op);
          for (int l : TX.objs[t].labels) leaves.push_back(l);
        }
      int Xflat = d < 0 ? -1 : T2.obj_of(d, flatTX);
      if (Xtop < 0 || Xflat < 0) {
        ++R.skipped;
      } else {
        int srcA = TX.obj_of(op, sA);
        int uA2 = TX.arr_of(srcA, Permutation::identity(n), gamA);
        int path1 = X.compose(A.a.amap[uA2], A.abar2[o2]);
        int path2 = X.compose(A.abar2[Xtop], A.abar2[Xflat]);
        ++R.checked;
        if (path1 < 0 || path1 != path2)
          fail("assoc",
               "outer=" + T.ops[op].id + ";inners=" + id_list(T, bops) +
                   ";inners2=" + id_list(T, flatops) +
                   ";x=" + tup_objs(leaves),
               "associativity of the comparison cells");
      }
      int k = n - 1;
      while (k >= 0 && ++od[k] == decomp[inner[k]].size()) od[k--] = 0;
      if (k < 0) break;
    }
  }

  R.lax = R.ok;
  bool inv = true, idn = true, comm = true;
  for (int c : A.abar0) {
    if (!X.is_identity(c)) idn = false;
    if (X.inverse(c) < 0) inv = false;
  }
  for (int c : A.abar2) {
    if (!X.is_identity(c)) idn = false;
    if (X.inverse(c) < 0) inv = false;
  }
  for (int f = 0; f < TX.TX->n_arrows(); ++f)
    if (TX.permutative[f] && !X.is_identity(A.a.amap[f])) comm = false;
  R.pseudo = R.ok && inv;
  R.strict = R.ok && idn;
  R.commutative = R.ok && comm;
  return R;
}

// ------------------------------------------------------- transformations

int LaxNatData::fbar(int op, int x) const {
  auto it = coherences.find(op);
  if (it != coherences.end()) return it->second[x];
  int i = dom->T.ops[op].target;
  return cod->fibres[i]->identity[components[i].on_obj(
      dom->products[op].on_obj(x))];
}

CoherenceReport validate_lax_natural(const LaxNatData& N) {
  CoherenceReport R;
  const LaxMorphismData& H = *N.dom;
  const LaxMorphismData& K = *N.cod;
  const TruncatedOperad& T = H.T;
  auto fail = [&](const std::string& ax, const std::string& loc,
                  const std::string& detail) {
    R.ok = false;
    if (R.issues.size() < 200) R.issues.push_back({ax, loc, detail});
  };
  if (N.components.size() != T.colours.size()) {
    fail("shape", "", "one component functor per colour required");
    return R;
  }
  for (size_t i = 0; i < T.colours.size(); ++i) {
    if (N.components[i].dom != H.fibres[i] ||
        N.components[i].cod != K.fibres[i]) {
      fail("shape", "colour=" + T.colours[i], "component functor endpoints");
      return R;
    }
    for (auto& v : check_functor(N.components[i]))
      fail("shape", "colour=" + T.colours[i], v.code + ": " + v.detail);
  }
  int nops = (int)T.ops.size();
  // image tuple in the codomain product
  auto fobj = [&](int op, int x) {
    const auto& t = H.doms[op].obj_tuple[x];
    std::vector<int> u(t.size());
    for (size_t j = 0; j < t.size(); ++j)
      u[j] = N.components[T.ops[op].source[j]].on_obj(t[j]);
    return K.doms[op].obj_of(u);
  };
  auto farr = [&](int op, int f) {
    const auto& t = H.doms[op].arr_tuple[f];
    std::vector<int> u(t.size());
    for (size_t j = 0; j < t.size(); ++j)
      u[j] = N.components[T.ops[op].source[j]].on_arr(t[j]);
    return K.doms[op].arr_of(u);
  };
  // coherence endpoints and naturality
  for (int a = 0; a < nops; ++a) {
    int tc = T.ops[a].target;
    const CatPtr& Ki = K.fibres[tc];
    for (int x = 0; x < H.doms[a].C->n_objects(); ++x) {
      int c = N.fbar(a, x);
      ++R.checked;
      if (c < 0 || Ki->arrows[c].src != K.products[a].on_obj(fobj(a, x)) ||
          Ki->arrows[c].tgt !=
              N.components[tc].on_obj(H.products[a].on_obj(x))) {
        fail("shape",
             "op=" + T.ops[a].id + ";x=" + H.doms[a].C->objects[x],
             "coherence cell endpoints");
        return R;
      }
    }
    for (int f = 0; f < H.doms[a].C->n_arrows(); ++f) {
      int x = H.doms[a].C->arrows[f].src, y = H.doms[a].C->arrows[f].tgt;
      int lhs = Ki->compose(N.fbar(a, x), N.components[tc].on_arr(
                                              H.products[a].on_arr(f)));
      int rhs = Ki->compose(K.products[a].on_arr(farr(a, f)), N.fbar(a, y));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        fail("fbar-natural",
             "op=" + T.ops[a].id + ";f=" + H.doms[a].C->arrows[f].id,
             "naturality of a coherence cell");
    }
  }
  // symmetry squares
  for (int a = 0; a < nops; ++a) {
    int n = T.arity(a);
    int tc = T.ops[a].target;
    const CatPtr& Ki = K.fibres[tc];
    for (auto& rho : all_perms(n)) {
      int a2 = T.act(a, rho);
      FinFunctor crH = H.c_rho(a, rho);
      for (int x = 0; x < H.doms[a].C->n_objects(); ++x) {
        int lhs = Ki->compose(N.fbar(a2, crH.on_obj(x)),
                              N.components[tc].on_arr(H.xi(a, rho, x)));
        int rhs = Ki->compose(K.xi(a, rho, fobj(a, x)), N.fbar(a, x));
        ++R.checked;
        if (lhs < 0 || lhs != rhs)
          fail("nat-symmetry",
               "op=" + T.ops[a].id + ";rho=" + rho.str() +
                   ";x=" + H.doms[a].C->objects[x],
               "symmetry compatibility square");
      }
    }
  }
  // unit squares
  for (size_t i = 0; i < T.colours.size(); ++i) {
    int u = T.unit[i];
    const CatPtr& Ki = K.fibres[i];
    for (int x = 0; x < H.fibres[i]->n_objects(); ++x) {
      int lhs = Ki->compose(K.nu((int)i, N.components[i].on_obj(x)),
                            N.fbar(u, H.doms[u].obj_of({x})));
      int rhs = N.components[i].on_arr(H.nu((int)i, x));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        fail("nat-unit",
             "colour=" + T.colours[i] + ";x=" + H.fibres[i]->objects[x],
             "unit compatibility square");
    }
  }
  // substitution squares
  for (auto& [key, res] : T.compo_) {
    int a = key.first;
    const std::vector<int>& bs = key.second;
    int g = res;
    int tc = T.ops[g].target;
    const CatPtr& Ki = K.fibres[tc];
    for (int x = 0; x < H.doms[g].C->n_objects(); ++x) {
      // per-slot objects and coherence components
      const auto& t = H.doms[g].obj_tuple[x];
      std::vector<int> parts(bs.size());
      std::vector<int> himg(bs.size());
      size_t pos = 0;
      for (size_t j = 0; j < bs.size(); ++j) {
        int m = T.arity(bs[j]);
        std::vector<int> sub(t.begin() + pos, t.begin() + pos + m);
        int blk = H.doms[bs[j]].obj_of(sub);
        parts[j] = N.fbar(bs[j], blk);
        himg[j] = H.products[bs[j]].on_obj(blk);
        pos += m;
      }
      int m = K.products[a].on_arr(K.doms[a].arr_of(parts));
      int tH = H.doms[a].obj_of(himg);
      int lhs = Ki->compose(Ki->compose(m, N.fbar(a, tH)),
                            N.components[tc].on_arr(H.sig(a, bs, x)));
      int rhs = Ki->compose(K.sig(a, bs, fobj(g, x)), N.fbar(g, x));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        fail("nat-substitution",
             "outer=" + T.ops[a].id + ";inners=" + id_list(T, bs) +
                 ";x=" + H.doms[g].C->objects[x],
             "substitution compatibility square");
    }
  }
  R.lax = R.ok;
  bool inv = true, idn = true;
  for (int a = 0; a < nops; ++a) {
    const CatPtr& Ki = K.fibres[T.ops[a].target];
    for (int x = 0; x < H.doms[a].C->n_objects(); ++x) {
      int c = N.fbar(a, x);
      if (!Ki->is_identity(c)) idn = false;
      if (Ki->inverse(c) < 0) inv = false;
    }
  }
  R.pseudo = R.ok && inv;
  R.strict = R.ok && idn;
  R.commutative = false;
  return R;
}

CoherenceReport validate_colax_natural(const LaxNatData& N) {
  LaxMorphismData dH = dualize(*N.dom);
  LaxMorphismData dK = dualize(*N.cod);
  LaxNatData M;
  M.dom = &dH;
  M.cod = &dK;
  M.components.resize(N.components.size());
  for (size_t i = 0; i < N.components.size(); ++i) {
    M.components[i].dom = dH.fibres[i];
    M.components[i].cod = dK.fibres[i];
    M.components[i].omap = N.components[i].omap;
    M.components[i].amap = N.components[i].amap;
  }
  M.coherences = N.coherences;
  return validate_lax_natural(M);
}

CoherenceReport validate_modification(const ModificationData& M) {
  CoherenceReport R;
  const LaxNatData& Fn = *M.dom;
  const LaxNatData& Gn = *M.cod;
  auto fail = [&](const std::string& ax, const std::string& loc,
                  const std::string& detail) {
    R.ok = false;
    if (R.issues.size() < 200) R.issues.push_back({ax, loc, detail});
  };
  if (Fn.dom != Gn.dom || Fn.cod != Gn.cod) {
    fail("shape", "", "the transformations are not parallel");
    return R;
  }
  const LaxMorphismData& H = *Fn.dom;
  const LaxMorphismData& K = *Fn.cod;
  const TruncatedOperad& T = H.T;
  if (M.components.size() != T.colours.size()) {
    fail("shape", "", "one component per colour required");
    return R;
  }
  for (size_t i = 0; i < T.colours.size(); ++i) {
    const CatPtr& Ki = K.fibres[i];
    if ((int)M.components[i].size() != H.fibres[i]->n_objects()) {
      fail("shape", "colour=" + T.colours[i], "component table size");
      return R;
    }
    for (int x = 0; x < H.fibres[i]->n_objects(); ++x) {
      int c = M.components[i][x];
      if (c < 0 || Ki->arrows[c].src != Fn.components[i].on_obj(x) ||
          Ki->arrows[c].tgt != Gn.components[i].on_obj(x)) {
        fail("shape",
             "colour=" + T.colours[i] + ";x=" + H.fibres[i]->objects[x],
             "component endpoints");
        return R;
      }
    }
    for (int f = 0; f < H.fibres[i]->n_arrows(); ++f) {
      int x = H.fibres[i]->arrows[f].src, y = H.fibres[i]->arrows[f].tgt;
      int lhs = Ki->compose(M.components[i][x], Gn.components[i].on_arr(f));
      int rhs = Ki->compose(Fn.components[i].on_arr(f), M.components[i][y]);
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        fail("psi-natural",
             "colour=" + T.colours[i] + ";f=" + H.fibres[i]->arrows[f].id,
             "components are not natural");
    }
  }
  for (size_t a = 0; a < T.ops.size(); ++a) {
    int tc = T.ops[a].target;
    const CatPtr& Ki = K.fibres[tc];
    for (int x = 0; x < H.doms[a].C->n_objects(); ++x) {
      const auto& t = H.doms[a].obj_tuple[x];
      std::vector<int> parts(t.size());
      for (size_t j = 0; j < t.size(); ++j)
        parts[j] = M.components[T.ops[a].source[j]][t[j]];
      int m = K.products[a].on_arr(K.doms[a].arr_of(parts));
      int lhs = Ki->compose(Fn.fbar((int)a, x),
                            M.components[tc][H.products[a].on_obj(x)]);
      int rhs = Ki->compose(m, Gn.fbar((int)a, x));
      ++R.checked;
      if (lhs < 0 || lhs != rhs)
        fail("modification",
             "op=" + T.ops[a].id + ";x=" + H.doms[a].C->objects[x],
             "modification square");
    }
  }
  R.lax = R.ok;
  return R;
}

// ------------------------------------------------------- algebras in V

AlgebraInVResult algebra_in_V(const TruncatedOperad& T,
                              const SymMonCatData& V,
                              const AlgebraInVCandidate& cand) {
  AlgebraInVResult res;
  res.vreport = validate_lax_morphism(V.V);
  const TruncatedOperad& C = V.V.T;
  std::vector<int> by_arity(C.N + 1, -1);
  for (size_t o = 0; o < C.ops.size(); ++o) by_arity[C.arity((int)o)] = (int)o;
  const CatPtr& Vc = V.V.fibres[0];
  auto vb = std::make_shared<LaxMorphismData>(make_lax_skeleton(
      T, std::vector<CatPtr>(T.colours.size(), Vc)));
  for (size_t a = 0; a < T.ops.size(); ++a) {
    int n = T.arity((int)a);
    if (n > C.N || by_arity[n] < 0)
      throw std::invalid_argument("ShapeMismatch");
    int cn = by_arity[n];
    vb->products[a].omap = V.V.products[cn].omap;
    vb->products[a].amap = V.V.products[cn].amap;
    for (auto& rho : all_perms(n)) {
      auto it = V.V.symmetries.find({cn, rho});
      if (it != V.V.symmetries.end())
        vb->symmetries[{(int)a, rho}] = it->second;
    }
  }
  for (size_t i = 0; i < T.colours.size(); ++i)
    vb->units[i] = V.V.units.empty() ? std::vector<int>{} : V.V.units[0];
  for (auto& [key, rv] : T.compo_) {
    (void)rv;
    std::vector<int> cms;
    for (int b : key.second) cms.push_back(by_arity[T.arity(b)]);
    auto it = V.V.substitutions.find({by_arity[T.arity(key.first)], cms});
    if (it != V.V.substitutions.end())
      vb->substitutions[{key.first, key.second}] = it->second;
  }
  auto one = std::make_shared<LaxMorphismData>(make_lax_skeleton(
      T, std::vector<CatPtr>(T.colours.size(), terminal_cat())));
  for (size_t a = 0; a < T.ops.size(); ++a) {
    one->products[a].omap.assign(one->doms[a].C->n_objects(), 0);
    one->products[a].amap.assign(one->doms[a].C->n_arrows(), 0);
  }
  auto nat = std::make_shared<LaxNatData>();
  nat->dom = one.get();
  nat->cod = vb.get();
  nat->components.resize(T.colours.size());
  for (size_t i = 0; i < T.colours.size(); ++i) {
    if ((int)cand.objects.size() <= (int)i)
      throw std::invalid_argument("ShapeMismatch");
    FinFunctor f;
    f.dom = one->fibres[i];
    f.cod = Vc;
    f.omap = {cand.objects[i]};
    f.amap = {Vc->identity[cand.objects[i]]};
    nat->components[i] = f;
  }
  for (auto& [op, arr] : cand.mult) nat->coherences[op] = {arr};
  res.report = validate_lax_natural(*nat);
  res.one = one;
  res.vbullet = vb;
  res.nat = nat;
  return res;
}

// ------------------------------------------------------- strict algebras

StrictTAlgebra free_algebra(const TruncatedOperad& T, const ObjOverI& Z) {
  StrictTAlgebra A;
  auto TZ = std::make_shared<LabelledOpCategory>(apply_T(T, Z));
  A.carrier = TZ->as_over();
  A.dom = std::make_shared<LabelledOpCategory>(apply_T_defined(T, *TZ));
  A.action = mult_T(*A.dom, *TZ).m;
  return A;
}

AlgebraLawReport validate_strict_algebra(const TruncatedOperad& T,
                                         const StrictTAlgebra& A) {
  AlgebraLawReport R;
  const LabelledOpCategory& D = *A.dom;
  const FinCategory& X = *A.carrier.X;
  auto fail = [&](const std::string& detail) {
    R.ok = false;
    if (R.issues.size() < 40) R.issues.push_back({"LawViolation", detail});
  };
  for (auto& v : check_functor(A.action)) fail(v.code + ": " + v.detail);
  for (size_t o = 0; o < D.objs.size(); ++o)
    if (A.carrier.anchor.omap[A.action.omap[o]] !=
        T.ops[D.objs[o].op].target) {
      fail("action is not over the colours");
      return R;
    }
  // unit law
  for (int x = 0; x < X.n_objects(); ++x) {
    int o = D.obj_of(T.unit[A.carrier.anchor.omap[x]], {x});
    if (o < 0) continue;
    if (A.action.omap[o] != x) fail("unit law at object " + X.objects[x]);
  }
  for (int f = 0; f < X.n_arrows(); ++f) {
    int x = X.arrows[f].src;
    int o = D.obj_of(T.unit[A.carrier.anchor.omap[x]], {x});
    if (o < 0) continue;
    int uf = D.arr_of(o, Permutation::identity(1), {f});
    if (uf < 0) continue;
    if (A.action.amap[uf] != f) fail("unit law at arrow " + X.arrows[f].id);
  }
  // associativity on the doubly-defined part
  auto keep = [&](int op, const std::vector<int>& labels) {
    std::vector<int> ops2;
    std::vector<int> flat, as;
    for (int l : labels) {
      ops2.push_back(D.objs[l].op);
      as.push_back(A.action.omap[l]);
      for (int z : D.objs[l].labels) flat.push_back(z);
    }
    int c = T.comp(op, ops2);
    if (c < 0) return false;
    return D.obj_of(c, flat) >= 0 && D.obj_of(op, as) >= 0;
  };
  LabelledOpCategory T2 = apply_T(T, D.as_over(), keep);
  MultResult mu = mult_T(T2, D);
  for (size_t o = 0; o < T2.objs.size(); ++o) {
    std::vector<int> as;
    for (int l : T2.objs[o].labels) as.push_back(A.action.omap[l]);
    int tao = D.obj_of(T2.objs[o].op, as);
    if (A.action.omap[tao] != A.action.omap[mu.m.omap[o]])
      fail("associativity at a composite object");
  }
  for (size_t f = 0; f < T2.arrs.size(); ++f) {
    int src = T2.TX->arrows[f].src;
    std::vector<int> as, ag;
    for (int l : T2.objs[src].labels) as.push_back(A.action.omap[l]);
    for (int g : T2.arrs[f].gammas) ag.push_back(A.action.amap[g]);
    int tas = D.obj_of(T2.objs[src].op, as);
    int taf = D.arr_of(tas, T2.arrs[f].rho, ag);
    if (taf < 0) {
      fail("associativity: image arrow missing");
      continue;
    }
    if (A.action.amap[taf] != A.action.amap[mu.m.amap[f]])
      fail("associativity at a composite arrow");
  }
  // coverage against the unrestricted count of decomposable objects
  std::vector<double> cnt(T.colours.size(), 0.0);
  for (auto& o : D.objs) cnt[T.ops[o.op].target] += 1.0;
  double total = 0.0;
  for (auto& op : T.ops) {
    double p = 1.0;
    for (int c : op.source) p *= cnt[c];
    total += p;
  }
  R.assoc_coverage = total > 0 ? (double)T2.objs.size() / total : 1.0;
  return R;
}

// ------------------------------------------------------- commutativization

CommutativizeResult commutativize(const TruncatedOperad& T,
                                  const StrictTAlgebra& A) {
  CommutativizeResult res;
  const LabelledOpCategory& D = *A.dom;
  const FinCategory& X = *A.carrier.X;
  std::set<int> kills;
  for (int f = 0; f < D.TX->n_arrows(); ++f)
    if (D.permutative[f] && !D.TX->is_identity(f)) {
      int im = A.action.amap[f];
      if (!X.is_identity(im)) kills.insert(im);
    }
  res.r = coidentify(A.carrier.X,
                     std::vector<int>(kills.begin(), kills.end()));
  if (!res.r.ok) {
    res.ok = false;
    res.error = res.r.error;
    return res;
  }
  const FinCategory& C = *res.r.C;
  std::vector<int> colour_of(C.n_objects(), -1);
  for (int o = 0; o < X.n_objects(); ++o) {
    int c = res.r.q.omap[o];
    int col = A.carrier.anchor.omap[o];
    if (colour_of[c] >= 0 && colour_of[c] != col) {
      res.ok = false;
      res.error = "DescentFail";
      return res;
    }
    colour_of[c] = col;
  }
  res.CA.carrier = over_discrete(T, res.r.C, colour_of);
  std::vector<int> rep(C.n_objects(), -1), arep(C.n_arrows(), -1);
  for (int o = X.n_objects() - 1; o >= 0; --o) rep[res.r.q.omap[o]] = o;
  for (int f = X.n_arrows() - 1; f >= 0; --f) arep[res.r.q.amap[f]] = f;
  auto keepC = [&T, &D, rep](int op, const std::vector<int>& labels) {
    std::vector<int> reps(labels.size());
    for (size_t j = 0; j < labels.size(); ++j) reps[j] = rep[labels[j]];
    (void)T;
    return D.obj_of(op, reps) >= 0;
  };
  auto TC = std::make_shared<LabelledOpCategory>(
      apply_T(T, res.CA.carrier, keepC));
  FinFunctor ap;
  ap.dom = TC->TX;
  ap.cod = res.r.C;
  ap.omap.resize(TC->TX->n_objects());
  ap.amap.resize(TC->TX->n_arrows());
  for (size_t o = 0; o < TC->objs.size(); ++o) {
    std::vector<int> reps(TC->objs[o].labels.size());
    for (size_t j = 0; j < reps.size(); ++j)
      reps[j] = rep[TC->objs[o].labels[j]];
    int u = D.obj_of(TC->objs[o].op, reps);
    ap.omap[o] = res.r.q.omap[A.action.omap[u]];
  }
  for (size_t f = 0; f < TC->arrs.size(); ++f) {
    const auto& ar = TC->arrs[f];
    std::vector<int> gl(ar.gammas.size()), sl(ar.gammas.size());
    for (size_t j = 0; j < gl.size(); ++j) {
      gl[j] = arep[ar.gammas[j]];
      sl[j] = X.arrows[gl[j]].src;
    }
    int src = TC->TX->arrows[f].src;
    int srcl = D.obj_of(TC->objs[src].op, sl);
    int u = srcl < 0 ? -1 : D.arr_of(srcl, ar.rho, gl);
    if (u < 0) {
      res.ok = false;
      res.error = "DescentFail";
      return res;
    }
    ap.amap[f] = res.r.q.amap[A.action.amap[u]];
  }
  // consistency of the descent over every lift
  for (size_t o = 0; o < D.objs.size(); ++o) {
    std::vector<int> ql(D.objs[o].labels.size());
    for (size_t j = 0; j < ql.size(); ++j)
      ql[j] = res.r.q.omap[D.objs[o].labels[j]];
    int im = TC->obj_of(D.objs[o].op, ql);
    if (im >= 0 && ap.omap[im] != res.r.q.omap[A.action.omap[o]]) {
      res.ok = false;
      res.error = "DescentFail";
      return res;
    }
  }
  for (size_t f = 0; f < D.arrs.size(); ++f) {
    const auto& ar = D.arrs[f];
    int src = D.TX->arrows[f].src;
    std::vector<int> ql(D.objs[src].labels.size());
    for (size_t j = 0; j < ql.size(); ++j)
      ql[j] = res.r.q.omap[D.objs[src].labels[j]];
    int ims = TC->obj_of(D.objs[src].op, ql);
    if (ims < 0) continue;
    std::vector<int> qg(ar.gammas.size());
    for (size_t j = 0; j < qg.size(); ++j)
      qg[j] = res.r.q.amap[ar.gammas[j]];
    int imf = TC->arr_of(ims, ar.rho, qg);
    if (imf >= 0 && ap.amap[imf] != res.r.q.amap[A.action.amap[f]]) {
      res.ok = false;
      res.error = "DescentFail";
      return res;
    }
  }
  res.CA.dom = TC;
  res.CA.action = ap;
  res.commutative = true;
  for (int f = 0; f < TC->TX->n_arrows(); ++f)
    if (TC->permutative[f] && !C.is_identity(ap.amap[f]))
      res.commutative = false;
  return res;
}

std::vector<FinFunctor> enumerate_algebra_maps(const TruncatedOperad& T,
                                               const StrictTAlgebra& A,
                                               const StrictTAlgebra& B) {
  (void)T;
  FunctorSearch s;
  s.dom = A.carrier.X;
  s.cod = B.carrier.X;
  s.anchor_dom = A.carrier.anchor;
  s.anchor_cod = B.carrier.anchor;
  std::vector<FinFunctor> out;
  const LabelledOpCategory& DA = *A.dom;
  const LabelledOpCategory& DB = *B.dom;
  for (auto& f : enumerate_functors(s)) {
    bool good = true;
    for (size_t o = 0; o < DA.objs.size() && good; ++o) {
      std::vector<int> fl(DA.objs[o].labels.size());
      for (size_t j = 0; j < fl.size(); ++j)
        fl[j] = f.omap[DA.objs[o].labels[j]];
      int im = DB.obj_of(DA.objs[o].op, fl);
      if (im < 0) continue;
      if (B.action.omap[im] != f.omap[A.action.omap[o]]) good = false;
    }
    for (size_t u = 0; u < DA.arrs.size() && good; ++u) {
      const auto& ar = DA.arrs[u];
      int src = DA.TX->arrows[u].src;
      std::vector<int> fl(DA.objs[src].labels.size()), fg(ar.gammas.size());
      for (size_t j = 0; j < fl.size(); ++j)
        fl[j] = f.omap[DA.objs[src].labels[j]];
      for (size_t j = 0; j < fg.size(); ++j)
        fg[j] = f.amap[ar.gammas[j]];
      int ims = DB.obj_of(DA.objs[src].op, fl);
      if (ims < 0) continue;
      int imf = DB.arr_of(ims, ar.rho, fg);
      if (imf < 0) continue;
      if (B.action.amap[imf] != f.amap[A.action.amap[u]]) good = false;
    }
    if (good) out.push_back(f);
  }
  return out;
}

UniversalReport commutativize_universal(const TruncatedOperad& T,
                                        const StrictTAlgebra& A,
                                        const CommutativizeResult& CR,
                                        const StrictTAlgebra& B) {
  UniversalReport U;
  const FinCategory& XB = *B.carrier.X;
  for (int f = 0; f < B.dom->TX->n_arrows(); ++f)
    if (B.dom->permutative[f] && !XB.is_identity(B.action.amap[f])) {
      U.ok = false;
      U.issues.push_back({"TargetNotCommutative", XB.arrows[f].id});
      return U;
    }
  const FinCategory& X = *A.carrier.X;
  const FinCategory& C = *CR.r.C;
  for (auto& f : enumerate_algebra_maps(T, A, B)) {
    ++U.maps;
    FinFunctor g;
    g.dom = CR.r.C;
    g.cod = B.carrier.X;
    g.omap.assign(C.n_objects(), -1);
    g.amap.assign(C.n_arrows(), -1);
    bool good = true;
    for (int o = 0; o < X.n_objects(); ++o) {
      int c = CR.r.q.omap[o];
      if (g.omap[c] >= 0 && g.omap[c] != f.omap[o]) good = false;
      g.omap[c] = f.omap[o];
    }
    for (int u = 0; u < X.n_arrows(); ++u) {
      int c = CR.r.q.amap[u];
      if (g.amap[c] >= 0 && g.amap[c] != f.amap[u]) good = false;
      g.amap[c] = f.amap[u];
    }
    if (!good) {
      U.ok = false;
      U.issues.push_back({"NoFactorization", "map does not descend"});
      continue;
    }
    if (!check_functor(g).empty()) {
      U.ok = false;
      U.issues.push_back({"NoFactorization", "descended map not a functor"});
    }
    // uniqueness is automatic: the quotient map is surjective on objects
    // and arrows, so the factorization is determined by its values
  }
  return U;
}

// ------------------------------------------------------------------ JSON

LaxMorphismData read_lax_morphism(const nlohmann::json& j,
                                  const TruncatedOperad& T,
                                  const std::vector<CatPtr>& fibres,
                                  std::vector<Violation>* out) {
  using nlohmann::json;
  LaxMorphismData D = make_lax_skeleton(T, fibres);
  auto err = [&](const std::string& d) {
    if (out) out->push_back({"ParseError", d});
  };
  if (!j.contains("products") || !j.at("products").is_object()) {
    err("missing product tables");
    return D;
  }
  for (size_t a = 0; a < T.ops.size(); ++a) {
    if (!j.at("products").contains(T.ops[a].id)) {
      err("missing product table for " + T.ops[a].id);
      continue;
    }
    D.products[a] = read_functor(j.at("products").at(T.ops[a].id),
                                 D.doms[a].C, fibres[T.ops[a].target], out);
  }
  if (j.contains("symmetries"))
    for (auto& e : j.at("symmetries")) {
      int op = T.op(e.at("op").get<std::string>());
      if (op < 0) {
        err("unknown operation in a symmetry entry");
        continue;
      }
      Permutation rho =
          Permutation::from_one_indexed(e.at("perm").get<std::vector<int>>());
      const CatPtr& fib = fibres[T.ops[op].target];
      std::vector<int> tbl(D.doms[op].C->n_objects());
      for (int x = 0; x < D.doms[op].C->n_objects(); ++x)
        tbl[x] = fib->identity[D.products[op].on_obj(x)];
      for (auto& [k, v] : e.at("components").items()) {
        int x = D.doms[op].C->obj(k);
        int arr = fib->arr(v.get<std::string>());
        if (x < 0 || arr < 0)
          err("bad symmetry component " + k);
        else
          tbl[x] = arr;
      }
      D.symmetries[{op, rho}] = tbl;
    }
  if (j.contains("units"))
    for (auto& [cname, tblj] : j.at("units").items()) {
      int i = -1;
      for (size_t c = 0; c < T.colours.size(); ++c)
        if (T.colours[c] == cname) i = (int)c;
      if (i < 0) {
        err("unknown colour " + cname);
        continue;
      }
      int u = T.unit[i];
      D.units[i].resize(fibres[i]->n_objects());
      for (int x = 0; x < fibres[i]->n_objects(); ++x)
        D.units[i][x] = fibres[i]->identity[x];
      for (auto& [k, v] : tblj.items()) {
        int x = fibres[i]->obj(k);
        int arr = fibres[i]->arr(v.get<std::string>());
        if (x < 0 || arr < 0)
          err("bad unit component " + k);
        else
          D.units[i][x] = arr;
      }
      (void)u;
    }
  if (j.contains("substitutions"))
    for (auto& e : j.at("substitutions")) {
      int a = T.op(e.at("outer").get<std::string>());
      std::vector<int> bs;
      bool bad = a < 0;
      for (auto& b : e.at("inners")) {
        int x = T.op(b.get<std::string>());
        if (x < 0) bad = true;
        bs.push_back(x);
      }
      int g = bad ? -1 : T.comp(a, bs);
      if (g < 0) {
        err("substitution entry for an undefined composite");
        continue;
      }
      const CatPtr& fib = fibres[T.ops[g].target];
      std::vector<int> tbl(D.doms[g].C->n_objects());
      for (int x = 0; x < D.doms[g].C->n_objects(); ++x)
        tbl[x] = fib->identity[D.products[g].on_obj(x)];
      for (auto& [k, v] : e.at("components").items()) {
        int x = D.doms[g].C->obj(k);
        int arr = fib->arr(v.get<std::string>());
        if (x < 0 || arr < 0)
          err("bad substitution component " + k);
        else
          tbl[x] = arr;
      }
      D.substitutions[{a, bs}] = tbl;
    }
  return D;
}

nlohmann::json write_lax_morphism(const LaxMorphismData& D) {
  using nlohmann::json;
  const TruncatedOperad& T = D.T;
  json j;
  j["products"] = json::object();
  for (size_t a = 0; a < T.ops.size(); ++a)
    j["products"][T.ops[a].id] = write_functor(D.products[a]);
  json syms = json::array();
  for (auto& [key, comps] : D.symmetries) {
    const CatPtr& fib = D.fibres[T.ops[key.first].target];
    json e;
    e["op"] = T.ops[key.first].id;
    e["perm"] = key.second.one_indexed();
    json c = json::object();
    for (size_t x = 0; x < comps.size(); ++x)
      c[D.doms[key.first].C->objects[x]] = fib->arrows[comps[x]].id;
    e["components"] = c;
    syms.push_back(e);
  }
  j["symmetries"] = syms;
  json us = json::object();
  for (size_t i = 0; i < D.units.size(); ++i) {
    if (D.units[i].empty()) continue;
    json c = json::object();
    for (size_t x = 0; x < D.units[i].size(); ++x)
      c[D.fibres[i]->objects[x]] = D.fibres[i]->arrows[D.units[i][x]].id;
    us[T.colours[i]] = c;
  }
  j["units"] = us;
  json subs = json::array();
  for (auto& [key, comps] : D.substitutions) {
    int g = T.comp(key.first, key.second);
    const CatPtr& fib = D.fibres[T.ops[g].target];
    json e;
    e["outer"] = T.ops[key.first].id;
    json inn = json::array();
    for (int b : key.second) inn.push_back(T.ops[b].id);
    e["inners"] = inn;
    json c = json::object();
    for (size_t x = 0; x < comps.size(); ++x)
      c[D.doms[g].C->objects[x]] = fib->arrows[comps[x]].id;
    e["components"] = c;
    subs.push_back(e);
  }
  j["substitutions"] = subs;
  return j;
}

}  // namespace opdcat
