#include "opdcat/operad.hpp"

#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace opdcat {

using nlohmann::json;

int TruncatedOperad::op(const std::string& id) const {
  for (int i = 0; i < (int)ops.size(); ++i)
    if (ops[i].id == id) return i;
  return -1;
}

int TruncatedOperad::act(int a, const Permutation& r) const {
  if (r.is_identity()) return a;
  auto it = action_.find({a, r.str()});
  return it == action_.end() ? -1 : it->second;
}

int TruncatedOperad::comp(int outer, const std::vector<int>& inners) const {
  auto it = compo_.find({outer, inners});
  return it == compo_.end() ? -1 : it->second;
}

bool TruncatedOperad::comp_in_range(int outer, const std::vector<int>& inners) const {
  if ((int)inners.size() != arity(outer)) return false;
  int total = 0;
  for (size_t j = 0; j < inners.size(); ++j) {
    if (ops[inners[j]].target != ops[outer].source[j]) return false;
    total += arity(inners[j]);
  }
  return total <= N;
}

void TruncatedOperad::set_act(int a, const Permutation& r, int b) {
  if (!r.is_identity()) action_[{a, r.str()}] = b;
}
void TruncatedOperad::set_comp(int outer, const std::vector<int>& inners, int b) {
  compo_[{outer, inners}] = b;
}

namespace {

// enumerate typed inner tuples for `outer` with total arity <= N
void typed_tuples(const TruncatedOperad& T, int outer,
                  const std::function<void(const std::vector<int>&)>& fn) {
  int n = T.arity(outer);
  std::vector<int> cur(n);
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j == n) {
      fn(cur);
      return;
    }
    for (int b = 0; b < (int)T.ops.size(); ++b) {
      if (T.ops[b].target != T.ops[outer].source[j]) continue;
      if (T.arity(b) > budget) continue;
      cur[j] = b;
      rec(j + 1, budget - T.arity(b));
    }
  };
  rec(0, T.N);
}

std::string tup_str(const TruncatedOperad& T, const std::vector<int>& bs) {
  std::string s = "(";
  for (size_t j = 0; j < bs.size(); ++j)
    s += (j ? "," : "") + T.ops[bs[j]].id;
  return s + ")";
}

}  // namespace

std::vector<Violation> validate_operad(const TruncatedOperad& T) {
  std::vector<Violation> out;
  const size_t cap = 50;
  auto add = [&](const std::string& c, const std::string& d) {
    if (out.size() < cap) out.push_back({c, d});
  };

  for (const auto& o : T.ops) {
    if ((int)o.source.size() > T.N)
      add("TruncationViolation", o.id + " has arity above the bound");
    for (int c : o.source)
      if (c < 0 || c >= (int)T.colours.size())
        add("ShapeFail", o.id + " has an unknown source colour");
    if (o.target < 0 || o.target >= (int)T.colours.size())
      add("ShapeFail", o.id + " has an unknown target colour");
  }
  if ((int)T.unit.size() != (int)T.colours.size()) {
    add("UnitLawFail", "units must cover every colour");
    return out;
  }
  for (int i = 0; i < (int)T.colours.size(); ++i) {
    int u = T.unit[i];
    if (u < 0 || u >= (int)T.ops.size() || T.arity(u) != 1 ||
        T.ops[u].source[0] != i || T.ops[u].target != i)
      add("UnitLawFail", "unit of " + T.colours[i] + " is not unary on it");
  }
  if (!out.empty()) return out;

  // action totality, profile and functoriality
  std::vector<std::vector<Permutation>> perms(T.N + 1);
  for (int n = 0; n <= T.N; ++n) perms[n] = all_perms(n);
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    for (const auto& r : perms[n]) {
      int b = T.act(a, r);
      if (b < 0) {
        add("ActionNotFunctorial", T.ops[a].id + " has no entry for " + r.str());
        continue;
      }
      if (T.arity(b) != n || T.ops[b].target != T.ops[a].target) {
        add("ActionNotFunctorial", T.ops[a].id + "·" + r.str() + " changes shape");
        continue;
      }
      for (int j = 0; j < n; ++j)
        if (T.ops[b].source[j] != T.ops[a].source[r(j)]) {
          add("ActionNotFunctorial",
              T.ops[a].id + "·" + r.str() + " has the wrong source profile");
          break;
        }
    }
    for (const auto& r1 : perms[n])
      for (const auto& r2 : perms[n]) {
        int lhs = T.act(T.act(a, r1), r2);
        int rhs = T.act(a, compose(r1, r2));
        if (lhs != rhs)
          add("ActionNotFunctorial", "(" + T.ops[a].id + "·" + r1.str() + ")·" +
                                         r2.str() + " ≠ ·" + compose(r1, r2).str());
      }
  }
  if (!out.empty()) return out;

  // composition domain and shape
  for (auto& [key, res] : T.compo_) {
    auto& [a, bs] = key;
    if (!T.comp_in_range(a, bs)) {
      add("TruncationViolation",
          T.ops[a].id + tup_str(T, bs) + " is outside the defined range");
      continue;
    }
    std::vector<int> want;
    for (int b : bs)
      want.insert(want.end(), T.ops[b].source.begin(), T.ops[b].source.end());
    if (T.ops[res].source != want || T.ops[res].target != T.ops[a].target)
      add("AssocFail",
          T.ops[a].id + tup_str(T, bs) + " has the wrong source or target");
  }
  for (int a = 0; a < (int)T.ops.size(); ++a)
    typed_tuples(T, a, [&](const std::vector<int>& bs) {
      if (T.comp(a, bs) < 0)
        add("MissingComposite", T.ops[a].id + tup_str(T, bs));
    });
  if (!out.empty()) return out;

  // unit laws
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    std::vector<int> us;
    for (int c : T.ops[a].source) us.push_back(T.unit[c]);
    if (T.comp(a, us) != a)
      add("UnitLawFail", T.ops[a].id + " ∘ units ≠ itself");
    if (T.comp(T.unit[T.ops[a].target], {a}) != a)
      add("UnitLawFail", "unit ∘ (" + T.ops[a].id + ") ≠ itself");
  }

  // equivariance over every defined composite
  for (auto& [key, res] : T.compo_) {
    auto& [a, bs] = key;
    int n = T.arity(a);
    std::vector<int> ms(n);
    for (int j = 0; j < n; ++j) ms[j] = T.arity(bs[j]);
    for (const auto& rho : perms[n]) {
      // odometer over the inner permutations
      std::vector<size_t> idx(n, 0);
      while (true) {
        std::vector<Permutation> rhos(n);
        for (int j = 0; j < n; ++j) rhos[j] = perms[ms[j]][idx[j]];
        int lhs = T.act(res, block_perm(rho, rhos));
        int ra = T.act(a, rho);
        std::vector<int> rbs(n);
        for (int k = 0; k < n; ++k) rbs[k] = T.act(bs[rho(k)], rhos[rho(k)]);
        int rhs = T.comp(ra, rbs);
        if (lhs != rhs)
          add("EquivarianceFail", T.ops[a].id + tup_str(T, bs) + " under " +
                                      rho.str());
        int j = 0;
        for (; j < n; ++j) {
          if (++idx[j] < perms[ms[j]].size()) break;
          idx[j] = 0;
        }
        if (j == n) break;
      }
    }
  }

  // associativity over every fully defined nesting
  for (auto& [key, res] : T.compo_) {
    auto& [a, bs] = key;
    int n = T.arity(a);
    // choose per-slot inner tuples (c_j) with comp(b_j, c_j) defined
    std::vector<std::vector<std::pair<std::vector<int>, int>>> choices(n);
    for (int j = 0; j < n; ++j)
      for (auto& [k2, r2] : T.compo_)
        if (k2.first == bs[j]) choices[j].push_back({k2.second, r2});
    std::vector<size_t> idx(n, 0);
    bool any = true;
    for (int j = 0; j < n; ++j)
      if (choices[j].empty()) any = false;
    while (any) {
      std::vector<int> flat, mids(n);
      for (int j = 0; j < n; ++j) {
        const auto& [cs, m] = choices[j][idx[j]];
        flat.insert(flat.end(), cs.begin(), cs.end());
        mids[j] = m;
      }
      int lhs = T.comp(res, flat);
      if (lhs >= 0) {  // within the bound, so the nested side must agree
        int rhs = T.comp(a, mids);
        if (rhs != lhs)
          add("AssocFail", "(" + T.ops[a].id + tup_str(T, bs) + ")" +
                               tup_str(T, flat));
      }
      int j = 0;
      for (; j < n; ++j) {
        if (++idx[j] < choices[j].size()) break;
        idx[j] = 0;
      }
      if (j == n) break;
    }
  }
  return out;
}

TruncatedOperad read_operad(const std::string& text) {
  json j = json::parse(text);
  TruncatedOperad T;
  for (auto& c : j.at("colours")) T.colours.push_back(c.get<std::string>());
  T.N = j.at("arity_bound").get<int>();
  auto colour = [&](const std::string& id) {
    for (int i = 0; i < (int)T.colours.size(); ++i)
      if (T.colours[i] == id) return i;
    throw std::invalid_argument("unknown colour " + id);
  };
  for (auto& a : j.at("arrows")) {
    TruncatedOperad::Op o;
    o.id = a.at("id").get<std::string>();
    for (auto& s : a.at("source")) o.source.push_back(colour(s.get<std::string>()));
    o.target = colour(a.at("target").get<std::string>());
    T.ops.push_back(o);
  }
  auto opof = [&](const std::string& id) {
    int i = T.op(id);
    if (i < 0) throw std::invalid_argument("unknown arrow " + id);
    return i;
  };
  T.unit.assign(T.colours.size(), -1);
  for (auto& [c, u] : j.at("units").items())
    T.unit[colour(c)] = opof(u.get<std::string>());
  for (auto& e : j.value("action", json::array())) {
    std::vector<int> img;
    for (auto& k : e.at("perm")) img.push_back(k.get<int>());
    T.set_act(opof(e.at("arrow").get<std::string>()),
              Permutation::from_one_indexed(img),
              opof(e.at("result").get<std::string>()));
  }
  for (auto& e : j.value("composition", json::array())) {
    std::vector<int> bs;
    for (auto& b : e.at("inners")) bs.push_back(opof(b.get<std::string>()));
    T.set_comp(opof(e.at("outer").get<std::string>()), bs,
               opof(e.at("result").get<std::string>()));
  }
  return T;
}

std::string write_operad(const TruncatedOperad& T) {
  json j;
  j["colours"] = T.colours;
  j["arity_bound"] = T.N;
  j["arrows"] = json::array();
  for (const auto& o : T.ops) {
    json a;
    a["id"] = o.id;
    a["source"] = json::array();
    for (int c : o.source) a["source"].push_back(T.colours[c]);
    a["target"] = T.colours[o.target];
    j["arrows"].push_back(a);
  }
  j["units"] = json::object();
  for (int i = 0; i < (int)T.colours.size(); ++i)
    j["units"][T.colours[i]] = T.ops[T.unit[i]].id;
  j["action"] = json::array();
  for (const auto& [k, r] : T.action_) {
    json e;
    e["arrow"] = T.ops[k.first].id;
    std::vector<int> img;
    {
      // keys are canonical "[..]" strings
      const std::string& s = k.second;
      for (size_t i = 1; i < s.size();) {
        size_t e2 = s.find_first_of(",]", i);
        if (e2 == i) break;
        img.push_back(std::stoi(s.substr(i, e2 - i)));
        i = e2 + 1;
      }
    }
    e["perm"] = img;
    e["result"] = T.ops[r].id;
    j["action"].push_back(e);
  }
  j["composition"] = json::array();
  for (const auto& [k, r] : T.compo_) {
    json e;
    e["outer"] = T.ops[k.first].id;
    e["inners"] = json::array();
    for (int b : k.second) e["inners"].push_back(T.ops[b].id);
    e["result"] = T.ops[r].id;
    j["composition"].push_back(e);
  }
  return j.dump(2);
}

TruncatedOperad com_operad(int N) {
  TruncatedOperad T;
  T.colours = {"*"};
  T.N = N;
  for (int n = 0; n <= N; ++n)
    T.ops.push_back({"c" + std::to_string(n), std::vector<int>(n, 0), 0});
  T.unit = {1};
  for (int n = 0; n <= N; ++n)
    for (const auto& r : all_perms(n)) T.set_act(n, r, n);
  for (int a = 0; a <= N; ++a)
    typed_tuples(T, a, [&](const std::vector<int>& bs) {
      int tot = 0;
      for (int b : bs) tot += b;
      T.set_comp(a, bs, tot);
    });
  return T;
}

TruncatedOperad ass_operad(int N) {
  TruncatedOperad T;
  T.colours = {"*"};
  T.N = N;
  std::vector<std::vector<Permutation>> perms(N + 1);
  std::vector<std::map<std::string, int>> idx(N + 1);
  for (int n = 0; n <= N; ++n) {
    perms[n] = all_perms(n);
    for (const auto& s : perms[n]) {
      idx[n][s.str()] = (int)T.ops.size();
      T.ops.push_back({"a" + std::to_string(n) + s.str(),
                       std::vector<int>(n, 0), 0});
    }
  }
  T.unit = {idx[1]["[1]"]};
  for (int n = 0; n <= N; ++n)
    for (const auto& s : perms[n])
      for (const auto& r : perms[n])
        T.set_act(idx[n][s.str()], r, idx[n][compose(s, r).str()]);
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    const Permutation c = [&] {
      for (const auto& s : perms[n])
        if (idx[n][s.str()] == a) return s;
      return Permutation::identity(n);
    }();
    typed_tuples(T, a, [&](const std::vector<int>& bs) {
      std::vector<Permutation> ds;
      for (int b : bs) {
        int m = T.arity(b);
        for (const auto& s : perms[m])
          if (idx[m][s.str()] == b) {
            ds.push_back(s);
            break;
          }
      }
      Permutation r = block_substitute(c, ds);
      T.set_comp(a, bs, idx[r.n()][r.str()]);
    });
  }
  return T;
}

TruncatedOperad category_as_operad(const CatPtr& C) {
  TruncatedOperad T;
  T.N = 1;
  T.colours = C->objects;
  for (const auto& a : C->arrows)
    T.ops.push_back({a.id, {a.src}, a.tgt});
  for (int o = 0; o < C->n_objects(); ++o) T.unit.push_back(C->identity[o]);
  for (int g = 0; g < C->n_arrows(); ++g)
    for (int f : C->into(C->arrows[g].src))
      T.set_comp(g, {f}, C->compose(f, g));
  return T;
}

TruncatedOperad free_binary_operad() {
  TruncatedOperad T;
  T.colours = {"a", "b"};
  T.N = 2;
  T.ops.push_back({"1a", {0}, 0});       // 0
  T.ops.push_back({"1b", {1}, 1});       // 1
  T.ops.push_back({"g", {0, 1}, 0});     // 2
  T.ops.push_back({"g.s", {1, 0}, 0});   // 3
  T.unit = {0, 1};
  Permutation sw = Permutation::from_one_indexed({2, 1});
  T.set_act(2, sw, 3);
  T.set_act(3, sw, 2);
  T.set_comp(0, {0}, 0);
  T.set_comp(0, {2}, 2);
  T.set_comp(0, {3}, 3);
  T.set_comp(1, {1}, 1);
  T.set_comp(2, {0, 1}, 2);
  T.set_comp(3, {1, 0}, 3);
  return T;
}

std::vector<Violation> validate_operad_morphism(const OperadMorphism& h) {
  std::vector<Violation> out;
  const TruncatedOperad& S = *h.dom;
  const TruncatedOperad& T = *h.cod;
  for (int a = 0; a < (int)S.ops.size(); ++a) {
    int b = h.omap[a];
    if (T.arity(b) != S.arity(a) ||
        T.ops[b].target != h.cmap[S.ops[a].target]) {
      out.push_back({"EndpointFail", S.ops[a].id});
      continue;
    }
    for (int j = 0; j < S.arity(a); ++j)
      if (T.ops[b].source[j] != h.cmap[S.ops[a].source[j]])
        out.push_back({"EndpointFail", S.ops[a].id});
    for (const auto& r : all_perms(S.arity(a))) {
      int sa = S.act(a, r);
      if (sa < 0 || h.omap[sa] != T.act(b, r))
        out.push_back({"EquivarianceFail", S.ops[a].id + "·" + r.str()});
    }
  }
  for (int i = 0; i < (int)S.colours.size(); ++i)
    if (h.omap[S.unit[i]] != T.unit[h.cmap[i]])
      out.push_back({"UnitFail", S.colours[i]});
  for (const auto& [k, r] : S.compo_) {
    std::vector<int> bs;
    for (int b : k.second) bs.push_back(h.omap[b]);
    if (T.comp(h.omap[k.first], bs) != h.omap[r])
      out.push_back({"CompositeFail", S.ops[k.first].id + tup_str(S, k.second)});
  }
  return out;
}

std::vector<OperadMorphism> enumerate_operad_morphisms(const TruncatedOperad& S,
                                                       const TruncatedOperad& T) {
  std::vector<OperadMorphism> res;
  std::vector<int> cmap(S.colours.size(), 0), omap(S.ops.size(), 0);
  std::function<void(size_t)> ops_rec = [&](size_t a) {
    if (a == S.ops.size()) {
      OperadMorphism h{&S, &T, cmap, omap};
      if (validate_operad_morphism(h).empty()) res.push_back(h);
      return;
    }
    for (int b = 0; b < (int)T.ops.size(); ++b) {
      if (T.arity(b) != S.arity(a)) continue;
      if (T.ops[b].target != cmap[S.ops[a].target]) continue;
      bool tok = true;
      for (int j = 0; j < S.arity((int)a); ++j)
        if (T.ops[b].source[j] != cmap[S.ops[a].source[j]]) tok = false;
      if (!tok) continue;
      omap[a] = b;
      ops_rec(a + 1);
    }
  };
  std::function<void(size_t)> col_rec = [&](size_t i) {
    if (i == S.colours.size()) {
      ops_rec(0);
      return;
    }
    for (int c = 0; c < (int)T.colours.size(); ++c) {
      cmap[i] = c;
      col_rec(i + 1);
    }
  };
  col_rec(0);
  return res;
}

bool operad_isomorphic(const TruncatedOperad& S, const TruncatedOperad& T) {
  if (S.colours.size() != T.colours.size() || S.ops.size() != T.ops.size())
    return false;
  std::vector<int> cmap(S.colours.size(), -1), omap(S.ops.size(), -1);
  std::vector<char> usedc(T.colours.size(), 0), usedo(T.ops.size(), 0);
  std::vector<std::vector<Permutation>> perms;
  for (int a = 0; a < (int)S.ops.size(); ++a)
    while ((int)perms.size() <= S.arity(a)) perms.push_back(all_perms((int)perms.size()));

  // injective assignment with symmetric-group-equivariance pruning; full
  // morphism validation (both directions) only at complete assignments
  std::function<bool(size_t)> ops_rec = [&](size_t a) -> bool {
    if (a == S.ops.size()) {
      OperadMorphism h{&S, &T, cmap, omap};
      if (!validate_operad_morphism(h).empty()) return false;
      std::vector<int> icmap(cmap.size()), iomap(omap.size());
      for (size_t i = 0; i < cmap.size(); ++i) icmap[cmap[i]] = (int)i;
      for (size_t i = 0; i < omap.size(); ++i) iomap[omap[i]] = (int)i;
      OperadMorphism hi{&T, &S, icmap, iomap};
      return validate_operad_morphism(hi).empty();
    }
    int n = S.arity((int)a);
    for (int b = 0; b < (int)T.ops.size(); ++b) {
      if (usedo[b] || T.arity(b) != n) continue;
      if (T.ops[b].target != cmap[S.ops[a].target]) continue;
      bool ok = true;
      for (int j = 0; ok && j < n; ++j)
        if (T.ops[b].source[j] != cmap[S.ops[a].source[j]]) ok = false;
      for (const auto& r : perms[n]) {
        if (!ok) break;
        int sa = S.act((int)a, r);
        if (omap[sa] >= 0 && omap[sa] != T.act(b, r)) ok = false;
      }
      if (!ok) continue;
      omap[a] = b;
      usedo[b] = 1;
      if (ops_rec(a + 1)) return true;
      omap[a] = -1;
      usedo[b] = 0;
    }
    return false;
  };
  std::function<bool(size_t)> col_rec = [&](size_t i) -> bool {
    if (i == S.colours.size()) return ops_rec(0);
    for (int c = 0; c < (int)T.colours.size(); ++c) {
      if (usedc[c]) continue;
      cmap[i] = c;
      usedc[c] = 1;
      if (col_rec(i + 1)) return true;
      cmap[i] = -1;
      usedc[c] = 0;
    }
    return false;
  };
  return col_rec(0);
}

int OperadToPoly::b_obj(int op) const { return op; }
int OperadToPoly::b_arrow(int op, const Permutation& r) const {
  const CatPtr& B = M.carrier.B;
  if (r.is_identity()) return B->identity[op];
  return B->arr("act(" + B->objects[op] + ";" + r.str() + ")");
}
int OperadToPoly::e_obj(int op, int j) const {
  return M.carrier.E->obj("e(" + M.carrier.B->objects[op] + ";" +
                          std::to_string(j + 1) + ")");
}

OperadToPoly to_polynomial(const TruncatedOperad& T) {
  OperadToPoly R;
  R.S = truncated_s(T.N);
  CatPtr I = discrete_cat(T.colours);

  std::vector<std::vector<Permutation>> perms(T.N + 1);
  for (int n = 0; n <= T.N; ++n) perms[n] = all_perms(n);

  // B: objects are the operations, arrows act(alpha;rho) : alpha rho -> alpha
  FinCatBuilder bb;
  for (const auto& o : T.ops) bb.add_object(o.id);
  std::map<std::pair<int, std::string>, int> barr;
  for (int a = 0; a < (int)T.ops.size(); ++a)
    for (const auto& r : perms[T.arity(a)]) {
      if (r.is_identity()) continue;
      barr[{a, r.str()}] = bb.add_arrow("act(" + T.ops[a].id + ";" + r.str() + ")",
                                        T.act(a, r), a);
    }
  auto bidx = [&](int a, const Permutation& r) {
    return r.is_identity() ? FinCatBuilder::ident_of(a) : barr[{a, r.str()}];
  };
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    for (const auto& r1 : perms[n]) {
      if (r1.is_identity()) continue;
      int b = T.act(a, r1);
      for (const auto& r2 : perms[n]) {
        if (r2.is_identity()) continue;
        bb.set_comp(barr[{b, r2.str()}], barr[{a, r1.str()}],
                    bidx(a, compose(r1, r2)));
      }
    }
  }
  CatPtr B = bb.finalize(nullptr, false);

  // E: objects e(alpha;j), arrows act(alpha;rho;j) : (alpha rho, j) -> (alpha, rho j)
  FinCatBuilder eb;
  std::vector<std::vector<int>> eobj(T.ops.size());
  for (int a = 0; a < (int)T.ops.size(); ++a)
    for (int j = 0; j < T.arity(a); ++j)
      eobj[a].push_back(
          eb.add_object("e(" + T.ops[a].id + ";" + std::to_string(j + 1) + ")"));
  std::map<std::tuple<int, std::string, int>, int> earr;
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    for (const auto& r : perms[n]) {
      if (r.is_identity()) continue;
      for (int j = 0; j < n; ++j)
        earr[{a, r.str(), j}] =
            eb.add_arrow("act(" + T.ops[a].id + ";" + r.str() + ";" +
                             std::to_string(j + 1) + ")",
                         eobj[T.act(a, r)][j], eobj[a][r(j)]);
    }
  }
  auto eidx = [&](int a, const Permutation& r, int j) {
    return r.is_identity() ? FinCatBuilder::ident_of(eobj[a][j])
                           : earr[{a, r.str(), j}];
  };
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    for (const auto& r1 : perms[n]) {
      if (r1.is_identity()) continue;
      int b = T.act(a, r1);
      for (const auto& r2 : perms[n]) {
        if (r2.is_identity()) continue;
        for (int j = 0; j < n; ++j)
          eb.set_comp(earr[{b, r2.str(), j}], earr[{a, r1.str(), r2(j)}],
                      eidx(a, compose(r1, r2), j));
      }
    }
  }
  CatPtr E = eb.finalize(nullptr, false);

  Polynomial P;
  P.I = I;
  P.B = B;
  P.E = E;
  P.t.dom = B;
  P.t.cod = I;
  for (const auto& o : T.ops) P.t.omap.push_back(o.target);
  for (int m = 0; m < B->n_arrows(); ++m) {
    int a = B->arrows[m].tgt;
    P.t.amap.push_back(I->identity[T.ops[a].target]);
  }
  P.p.dom = E;
  P.p.cod = B;
  P.s.dom = E;
  P.s.cod = I;
  P.p.omap.assign(E->n_objects(), -1);
  P.s.omap.assign(E->n_objects(), -1);
  for (int a = 0; a < (int)T.ops.size(); ++a)
    for (int j = 0; j < T.arity(a); ++j) {
      P.p.omap[eobj[a][j]] = a;
      P.s.omap[eobj[a][j]] = T.ops[a].source[j];
    }
  P.p.amap.assign(E->n_arrows(), -1);
  P.s.amap.assign(E->n_arrows(), -1);
  for (int m = 0; m < E->n_arrows(); ++m) {
    if (E->is_identity(m)) {
      int a = P.p.omap[E->arrows[m].src];
      P.p.amap[m] = B->identity[a];
      P.s.amap[m] = I->identity[P.s.omap[E->arrows[m].src]];
    }
  }
  for (auto& [k, m] : earr) {
    auto& [a, rs, j] = k;
    P.p.amap[m] = barr[{a, rs}];
    P.s.amap[m] = I->identity[P.s.omap[E->arrows[m].src]];
  }

  // decode tables
  R.b_op.resize(B->n_objects());
  for (int o = 0; o < B->n_objects(); ++o) R.b_op[o] = o;
  R.b_arr.assign(B->n_arrows(), {0, Permutation()});
  for (int m = 0; m < B->n_arrows(); ++m)
    if (B->is_identity(m)) {
      int a = B->arrows[m].src;
      R.b_arr[m] = {a, Permutation::identity(T.arity(a))};
    }
  for (auto& [k, m] : barr)
    R.b_arr[m] = {k.first, [&] {
                    for (const auto& r : perms[T.arity(k.first)])
                      if (r.str() == k.second) return r;
                    return Permutation();
                  }()};
  R.e_slot.assign(E->n_objects(), {0, 0});
  for (int a = 0; a < (int)T.ops.size(); ++a)
    for (int j = 0; j < T.arity(a); ++j) R.e_slot[eobj[a][j]] = {a, j};

  // morphism into the truncated symmetric polynomial
  R.intoS.dom = P;
  R.intoS.cod = R.S.poly;
  R.intoS.f0.dom = I;
  R.intoS.f0.cod = R.S.poly.s.cod;
  R.intoS.f0.omap.assign(I->n_objects(), 0);
  R.intoS.f0.amap.assign(I->n_arrows(), R.S.poly.s.cod->identity[0]);
  R.intoS.f1.dom = B;
  R.intoS.f1.cod = R.S.poly.B;
  for (int o = 0; o < B->n_objects(); ++o)
    R.intoS.f1.omap.push_back(R.S.pn_obj[T.arity(o)]);
  for (int m = 0; m < B->n_arrows(); ++m) {
    auto& [a, r] = R.b_arr[m];
    R.intoS.f1.amap.push_back(R.S.b_arrow(T.arity(a), r));
  }
  R.intoS.f2.dom = E;
  R.intoS.f2.cod = R.S.poly.E;
  for (int e = 0; e < E->n_objects(); ++e) {
    auto [a, j] = R.e_slot[e];
    R.intoS.f2.omap.push_back(R.S.e_obj(T.arity(a), j));
  }
  for (int m = 0; m < E->n_arrows(); ++m) {
    if (E->is_identity(m)) {
      auto [a, j] = R.e_slot[E->arrows[m].src];
      R.intoS.f2.amap.push_back(R.S.poly.E->identity[R.S.e_obj(T.arity(a), j)]);
    } else {
      R.intoS.f2.amap.push_back(-1);
    }
  }
  for (auto& [k, m] : earr) {
    auto& [a, rs, j] = k;
    int n = T.arity(a);
    for (const auto& r : perms[n])
      if (r.str() == rs) {
        R.intoS.f2.amap[m] = R.S.e_arrow(n, r, j);
        break;
      }
  }

  // monad data: carrier, unit, multiplication on the defined part
  R.M.carrier = P;
  Polynomial idp = identity_poly(I);
  R.M.unit.dom = idp;
  R.M.unit.cod = P;
  R.M.unit.f0 = identity_functor(I);
  R.M.unit.f1.dom = I;
  R.M.unit.f1.cod = B;
  R.M.unit.f2.dom = I;
  R.M.unit.f2.cod = E;
  for (int i = 0; i < (int)T.colours.size(); ++i) {
    R.M.unit.f1.omap.push_back(T.unit[i]);
    R.M.unit.f2.omap.push_back(eobj[T.unit[i]][0]);
  }
  for (int i = 0; i < I->n_arrows(); ++i) {
    int o = I->arrows[i].src;
    R.M.unit.f1.amap.push_back(B->identity[T.unit[o]]);
    R.M.unit.f2.amap.push_back(E->identity[eobj[T.unit[o]][0]]);
  }

  // the composite is only needed on the truncation-defined part, and the
  // unrestricted section count grows like |B|^N; filter at construction.
  // pullback() is deterministic, so this decodes the same mid as the one
  // compose_polynomials builds internally.
  PullbackResult midpre = pullback(P.t, P.s);
  SectionKeep defined = [&](int y, const std::vector<int>& ws) {
    std::vector<int> inners;
    inners.reserve(ws.size());
    for (int w : ws) inners.push_back(midpre.obj_pairs[w].first);
    return T.comp_in_range(y, inners) && T.comp(y, inners) >= 0;
  };
  R.M.selfcomp = compose_polynomials(P, P, defined);
  const auto& cr = R.M.selfcomp;
  // honest coverage against the unrestricted section count
  {
    double total = 0, kept = cr.comp.B->n_objects();
    for (const auto& op : T.ops) {
      double prod = 1;
      for (int c : op.source) {
        int cnt = 0;
        for (const auto& b : T.ops) cnt += b.target == c;
        prod *= cnt;
      }
      total += prod;
    }
    R.M.coverage_B = total > 0 ? kept / total : 1.0;
  }
  int nB2 = cr.comp.B->n_objects();
  // section decode: (outer op, inner ops by slot)
  std::vector<int> outer_of(nB2);
  std::vector<std::vector<int>> inners_of(nB2);
  for (int o = 0; o < nB2; ++o) {
    const auto& sec = cr.dpb.sections[o];
    outer_of[o] = sec.y;
    for (int w : sec.ws)
      inners_of[o].push_back(cr.mid.obj_pairs[w].first);
  }
  std::vector<char> keep(nB2, 0);
  int covered = 0;
  for (int o = 0; o < nB2; ++o) {
    if (T.comp_in_range(outer_of[o], inners_of[o]) &&
        T.comp(outer_of[o], inners_of[o]) >= 0)
      keep[o] = 1, ++covered;
  }
  (void)covered;  // with the construction filter every section is defined
  R.M.mult_dom = restrict_poly(cr.comp, keep);
  R.M.mult.dom = R.M.mult_dom.P;
  R.M.mult.cod = P;
  R.M.mult.f0 = identity_functor(I);
  R.M.mult.f1.dom = R.M.mult_dom.P.B;
  R.M.mult.f1.cod = B;
  for (int o = 0; o < R.M.mult_dom.P.B->n_objects(); ++o) {
    int b3 = R.M.mult_dom.incl_B.omap[o];
    R.M.mult.f1.omap.push_back(T.comp(outer_of[b3], inners_of[b3]));
  }
  // arrow image: the acting permutation is the block permutation of the
  // outer label by the per-slot inner labels
  auto theta_of = [&](int fam) -> std::pair<int, Permutation> {
    const auto& fm = cr.dpb.families[fam];
    auto [aop, rho] = R.b_arr[fm.a];
    const auto& tgt_in = inners_of[fm.dst];
    int n = (int)tgt_in.size();
    std::vector<Permutation> rhos(n);
    for (int k = 0; k < n; ++k) {
      int u = cr.mid.arr_pairs[fm.gammas[k]].first;  // B arrow into inner rho(k)
      rhos[rho(k)] = R.b_arr[u].second;
    }
    return {T.comp(outer_of[fm.dst], tgt_in), block_perm(rho, rhos)};
  };
  for (int m = 0; m < R.M.mult_dom.P.B->n_arrows(); ++m) {
    int fam = R.M.mult_dom.incl_B.amap[m];
    auto [cop, th] = theta_of(fam);
    R.M.mult.f1.amap.push_back(R.b_arrow(cop, th));
  }
  R.M.mult.f2.dom = R.M.mult_dom.P.E;
  R.M.mult.f2.cod = E;
  auto leaf_obj = [&](int e3) -> int {
    auto [fo, e1] = cr.left.obj_pairs[e3];
    auto [b3, e2] = cr.dpb.pb.obj_pairs[fo];
    int slot = R.e_slot[e2].second;
    auto [inner, l] = R.e_slot[e1];
    (void)inner;
    int off = 0;
    for (int k = 0; k < slot; ++k) off += T.arity(inners_of[b3][k]);
    return eobj[T.comp(outer_of[b3], inners_of[b3])][off + l];
  };
  for (int o = 0; o < R.M.mult_dom.P.E->n_objects(); ++o)
    R.M.mult.f2.omap.push_back(leaf_obj(R.M.mult_dom.incl_E.omap[o]));
  for (int m = 0; m < R.M.mult_dom.P.E->n_arrows(); ++m) {
    int e3a = R.M.mult_dom.incl_E.amap[m];
    auto [fa, e1a] = cr.left.arr_pairs[e3a];
    auto [b3a, e2a] = cr.dpb.pb.arr_pairs[fa];
    (void)e1a;
    (void)e2a;
    auto [cop, th] = theta_of(b3a);
    int srcleaf = leaf_obj(cr.left.P->arrows[e3a].src);
    int j = R.e_slot[srcleaf].second;
    R.M.mult.f2.amap.push_back(th.is_identity() ? E->identity[srcleaf]
                                                : earr[{cop, th.str(), j}]);
  }
  return R;
}

TruncatedOperad from_polynomial(const PolyMonadData& M, const TruncatedS& S,
                                const PolyMorphism& intoS) {
  const Polynomial& P = M.carrier;
  if (!classify_over_S(P, intoS).operad)
    throw std::invalid_argument("NotOperadShape");
  TruncatedOperad T;
  T.N = S.N;
  T.colours = P.I->objects;
  const FinCategory& B = *P.B;
  const FinCategory& E = *P.E;
  for (int b = 0; b < B.n_objects(); ++b) {
    int n = S.b_arity[intoS.f1.omap[b]];
    TruncatedOperad::Op o;
    o.id = B.objects[b];
    o.source.assign(n, -1);
    o.target = P.t.omap[b];
    T.ops.push_back(o);
  }
  for (int e = 0; e < E.n_objects(); ++e) {
    int b = P.p.omap[e];
    T.ops[b].source[S.e_slot[intoS.f2.omap[e]].second] = P.s.omap[e];
  }
  // actions: unique arrow lifts along the discrete fibration into S
  for (int b = 0; b < B.n_objects(); ++b) {
    int n = T.arity(b);
    for (const auto& r : all_perms(n)) {
      if (r.is_identity()) continue;
      int want = S.b_arrow(n, r);
      int found = -1;
      for (int m : B.into(b))
        if (intoS.f1.amap[m] == want) found = m;
      if (found < 0) throw std::invalid_argument("NotOperadShape");
      T.set_act(b, r, B.arrows[found].src);
    }
  }
  for (int i = 0; i < (int)T.colours.size(); ++i)
    T.unit.push_back(M.unit.f1.omap[i]);
  // composition from the multiplication on its domain of definition
  for (int o = 0; o < M.mult_dom.P.B->n_objects(); ++o) {
    int b3 = M.mult_dom.incl_B.omap[o];
    const auto& sec = M.selfcomp.dpb.sections[b3];
    std::vector<int> inners(sec.ws.size());
    const auto& fib = M.selfcomp.dpb.fibre[sec.y];
    for (size_t i = 0; i < sec.ws.size(); ++i) {
      int slot = S.e_slot[intoS.f2.omap[fib[i]]].second;
      inners[slot] = M.selfcomp.mid.obj_pairs[sec.ws[i]].first;
    }
    T.set_comp(sec.y, inners, M.mult.f1.omap[o]);
  }
  return T;
}

SigmaFreeReport sigma_free(const TruncatedOperad& T) {
  SigmaFreeReport r;
  r.direct = true;
  for (int a = 0; a < (int)T.ops.size(); ++a) {
    int n = T.arity(a);
    for (const auto& rho : all_perms(n)) {
      if (rho.is_identity()) continue;
      bool fixes_profile = true;
      for (int j = 0; j < n; ++j)
        if (T.ops[a].source[rho(j)] != T.ops[a].source[j]) fixes_profile = false;
      if (fixes_profile && T.act(a, rho) == a) r.direct = false;
    }
  }
  OperadToPoly tp = to_polynomial(T);
  r.via_B = is_equiv_discrete(*tp.M.carrier.B);
  r.via_pullback = pi0_polynomial(tp.M.carrier).ok;
  return r;
}

}  // namespace opdcat
