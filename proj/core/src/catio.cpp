#include "opdcat/catio.hpp"

#include <climits>

namespace opdcat {

CatPtr read_category(const json& j, std::vector<Violation>* out) {
  FinCatBuilder b;
  if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array()) {
    if (out) out->push_back({"ParseError", "missing objects array"});
    return nullptr;
  }
  for (auto& o : j["objects"]) b.add_object(o.get<std::string>());
  for (auto& a : j.value("arrows", json::array())) {
    int s = -1, t = -1;
    auto si = b.oidx_.find(a.at("src").get<std::string>());
    auto ti = b.oidx_.find(a.at("tgt").get<std::string>());
    if (si == b.oidx_.end() || ti == b.oidx_.end()) {
      if (out)
        out->push_back({"UnknownObject",
                        "arrow " + a.at("id").get<std::string>()});
      return nullptr;
    }
    s = si->second;
    t = ti->second;
    b.add_arrow(a.at("id").get<std::string>(), s, t);
  }
  // identities are written as "1(<obj>)" and may appear as results
  auto arrow_of = [&](const std::string& id) {
    auto it = b.aidx_.find(id);
    if (it != b.aidx_.end()) return it->second;
    if (id.size() > 3 && id.rfind("1(", 0) == 0 && id.back() == ')') {
      auto oi = b.oidx_.find(id.substr(2, id.size() - 3));
      if (oi != b.oidx_.end()) return FinCatBuilder::ident_of(oi->second);
    }
    return INT_MIN;
  };
  for (auto& c : j.value("compose", json::array())) {
    int fi = arrow_of(c.at("first").get<std::string>());
    int gi = arrow_of(c.at("then").get<std::string>());
    int hi = arrow_of(c.at("result").get<std::string>());
    if (fi == INT_MIN || gi == INT_MIN || hi == INT_MIN) {
      if (out) out->push_back({"UnknownArrow", c.dump()});
      return nullptr;
    }
    if (fi < 0 || gi < 0) continue;  // identity rows are implied
    b.set_comp(fi, gi, hi);
  }
  return b.finalize(out);
}

json write_category(const FinCategory& c) {
  json j;
  j["objects"] = json::array();
  for (auto& o : c.objects) j["objects"].push_back(o);
  j["arrows"] = json::array();
  for (int f = 0; f < c.n_arrows(); ++f) {
    if (c.is_identity(f)) continue;
    j["arrows"].push_back({{"id", c.arrows[f].id},
                           {"src", c.objects[c.arrows[f].src]},
                           {"tgt", c.objects[c.arrows[f].tgt]}});
  }
  j["compose"] = json::array();
  for (int f = 0; f < c.n_arrows(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out_of(c.arrows[f].tgt)) {
      if (c.is_identity(g)) continue;
      int h = c.compose(f, g);
      if (h < 0) continue;
      j["compose"].push_back({{"first", c.arrows[f].id},
                              {"then", c.arrows[g].id},
                              {"result", c.arrows[h].id}});
    }
  }
  return j;
}

FinFunctor read_functor(const json& j, const CatPtr& dom, const CatPtr& cod,
                        std::vector<Violation>* out) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.omap.assign(dom->n_objects(), -1);
  f.amap.assign(dom->n_arrows(), -1);
  const json omaps = j.value("objects", json::object());
  for (auto& [k, v] : omaps.items()) {
    int a = dom->obj(k), b = cod->obj(v.get<std::string>());
    if (a < 0 || b < 0) {
      if (out) out->push_back({"UnknownObject", k});
      continue;
    }
    f.omap[a] = b;
  }
  for (int a = 0; a < dom->n_objects(); ++a)
    if (f.omap[a] < 0 && out)
      out->push_back({"MissingImage", dom->objects[a]});
  const json amaps = j.value("arrows", json::object());
  for (auto& [k, v] : amaps.items()) {
    int m = dom->arr(k), n = cod->arr(v.get<std::string>());
    if (m < 0 || n < 0) {
      if (out) out->push_back({"UnknownArrow", k});
      continue;
    }
    f.amap[m] = n;
  }
  for (int m = 0; m < dom->n_arrows(); ++m)
    if (f.amap[m] < 0) {
      if (dom->is_identity(m) && f.omap[dom->arrows[m].src] >= 0)
        f.amap[m] = cod->identity[f.omap[dom->arrows[m].src]];
      else if (out)
        out->push_back({"MissingImage", dom->arrows[m].id});
    }
  return f;
}

json write_functor(const FinFunctor& f) {
  json j;
  j["objects"] = json::object();
  for (int a = 0; a < f.dom->n_objects(); ++a)
    j["objects"][f.dom->objects[a]] = f.cod->objects[f.omap[a]];
  j["arrows"] = json::object();
  for (int m = 0; m < f.dom->n_arrows(); ++m) {
    if (f.dom->is_identity(m)) continue;
    j["arrows"][f.dom->arrows[m].id] = f.cod->arrows[f.amap[m]].id;
  }
  return j;
}

}  // namespace opdcat
