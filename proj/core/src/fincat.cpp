#include "opdcat/fincat.hpp"

#include <stdexcept>

namespace opdcat {

static std::uint64_t pkey(int a, int b) {
  return (std::uint64_t)(std::uint32_t)a << 32 | (std::uint32_t)b;
}

int FinCategory::obj(const std::string& id) const {
  auto it = obj_idx_.find(id);
  return it == obj_idx_.end() ? -1 : it->second;
}

int FinCategory::arr(const std::string& id) const {
  auto it = arr_idx_.find(id);
  return it == arr_idx_.end() ? -1 : it->second;
}

int FinCategory::compose(int first, int then) const {
  auto it = comp_.find(pkey(first, then));
  return it == comp_.end() ? -1 : it->second;
}

const std::vector<int>& FinCategory::hom(int a, int b) const {
  static const std::vector<int> empty;
  auto it = hom_.find(pkey(a, b));
  return it == hom_.end() ? empty : it->second;
}

const std::vector<int>& FinCategory::out_of(int a) const { return out_[a]; }
const std::vector<int>& FinCategory::into(int b) const { return in_[b]; }

int FinCategory::inverse(int f) const {
  int a = arrows[f].src, b = arrows[f].tgt;
  for (int g : hom(b, a))
    if (compose(f, g) == identity[a] && compose(g, f) == identity[b]) return g;
  return -1;
}

bool FinCategory::is_discrete() const {
  for (int f = 0; f < n_arrows(); ++f)
    if (!is_identity(f)) return false;
  return true;
}

int FinCatBuilder::add_object(const std::string& id) {
  auto it = oidx_.find(id);
  if (it != oidx_.end()) return it->second;
  oidx_[id] = (int)objects_.size();
  objects_.push_back(id);
  return (int)objects_.size() - 1;
}

int FinCatBuilder::add_arrow(const std::string& id, int src, int tgt) {
  auto it = aidx_.find(id);
  if (it != aidx_.end()) return it->second;
  aidx_[id] = (int)arrows_.size();
  arrows_.push_back({id, src, tgt});
  return (int)arrows_.size() - 1;
}

void FinCatBuilder::set_comp(int first, int then, int result) {
  comps_.emplace_back(first, then, result);
}

CatPtr FinCatBuilder::finalize(std::vector<Violation>* out, bool validate) {
  auto c = std::make_shared<FinCategory>();
  c->objects = objects_;
  c->arrows = arrows_;
  c->ident_flag.assign(arrows_.size(), 0);
  c->obj_idx_ = oidx_;
  // identities
  c->identity.resize(objects_.size());
  for (int a = 0; a < (int)objects_.size(); ++a) {
    std::string id = "1(" + objects_[a] + ")";
    if (aidx_.count(id)) {
      if (out) out->push_back({"DuplicateId", "identity id already used: " + id});
    }
    c->identity[a] = (int)c->arrows.size();
    c->arrows.push_back({id, a, a});
    c->ident_flag.push_back(1);
  }
  for (int f = 0; f < (int)c->arrows.size(); ++f) {
    if (!c->arr_idx_.emplace(c->arrows[f].id, f).second && out)
      out->push_back({"DuplicateId", "arrow id: " + c->arrows[f].id});
  }
  // composition table: explicit entries, then identity rows
  for (auto& [f, g, h] : comps_)
    c->comp_[pkey(f, g)] = h <= -2 ? c->identity[-h - 2] : h;
  for (int f = 0; f < (int)c->arrows.size(); ++f) {
    c->comp_[pkey(c->identity[c->arrows[f].src], f)] = f;
    c->comp_[pkey(f, c->identity[c->arrows[f].tgt])] = f;
  }
  // indexes
  c->out_.resize(objects_.size());
  c->in_.resize(objects_.size());
  for (int f = 0; f < (int)c->arrows.size(); ++f) {
    c->out_[c->arrows[f].src].push_back(f);
    c->in_[c->arrows[f].tgt].push_back(f);
    c->hom_[pkey(c->arrows[f].src, c->arrows[f].tgt)].push_back(f);
  }
  if (validate && out) {
    auto v = validate_category(*c);
    out->insert(out->end(), v.begin(), v.end());
  }
  return c;
}

std::vector<Violation> validate_category(const FinCategory& c) {
  std::vector<Violation> v;
  for (int f = 0; f < c.n_arrows(); ++f) {
    const auto& af = c.arrows[f];
    if (af.src < 0 || af.src >= c.n_objects() || af.tgt < 0 ||
        af.tgt >= c.n_objects()) {
      v.push_back({"BadEndpoints", "arrow " + af.id});
      return v;  // everything else would be unreliable
    }
  }
  // totality + endpoints of composites
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g : c.out_of(c.arrows[f].tgt)) {
      int h = c.compose(f, g);
      if (h < 0) {
        v.push_back({"MissingComposite",
                     c.arrows[g].id + " . " + c.arrows[f].id});
        continue;
      }
      if (c.arrows[h].src != c.arrows[f].src ||
          c.arrows[h].tgt != c.arrows[g].tgt)
        v.push_back({"BadEndpoints", "composite " + c.arrows[g].id + " . " +
                                         c.arrows[f].id + " = " +
                                         c.arrows[h].id});
    }
  // identity laws (non-trivial only if the raw table overrode a row,
  // which finalize prevents; still checked for hand-built values)
  for (int f = 0; f < c.n_arrows(); ++f) {
    if (c.compose(c.identity[c.arrows[f].src], f) != f ||
        c.compose(f, c.identity[c.arrows[f].tgt]) != f)
      v.push_back({"IdentityLawFail", c.arrows[f].id});
  }
  // associativity
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g : c.out_of(c.arrows[f].tgt)) {
      int gf = c.compose(f, g);
      if (gf < 0) continue;
      for (int h : c.out_of(c.arrows[g].tgt)) {
        int hg = c.compose(g, h);
        if (hg < 0 || c.compose(gf, h) < 0) continue;
        if (c.compose(gf, h) != c.compose(f, hg)) {
          v.push_back({"NonAssociative", c.arrows[h].id + " . " +
                                             c.arrows[g].id + " . " +
                                             c.arrows[f].id});
          if (v.size() > 20) return v;
        }
      }
    }
  return v;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f;
  f.dom = f.cod = c;
  f.omap.resize(c->n_objects());
  f.amap.resize(c->n_arrows());
  for (int a = 0; a < c->n_objects(); ++a) f.omap[a] = a;
  for (int m = 0; m < c->n_arrows(); ++m) f.amap[m] = m;
  return f;
}

FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& then) {
  if (first.cod.get() != then.dom.get())
    throw std::invalid_argument("compose_functors: middle mismatch");
  FinFunctor f;
  f.dom = first.dom;
  f.cod = then.cod;
  f.omap.resize(first.omap.size());
  f.amap.resize(first.amap.size());
  for (size_t a = 0; a < first.omap.size(); ++a)
    f.omap[a] = then.omap[first.omap[a]];
  for (size_t m = 0; m < first.amap.size(); ++m)
    f.amap[m] = then.amap[first.amap[m]];
  return f;
}

std::vector<Violation> check_functor(const FinFunctor& f) {
  std::vector<Violation> v;
  const auto& D = *f.dom;
  const auto& C = *f.cod;
  if ((int)f.omap.size() != D.n_objects() || (int)f.amap.size() != D.n_arrows()) {
    v.push_back({"ShapeMismatch", "functor maps have wrong lengths"});
    return v;
  }
  for (int m = 0; m < D.n_arrows(); ++m) {
    int fm = f.amap[m];
    if (fm < 0 || fm >= C.n_arrows()) {
      v.push_back({"ShapeMismatch", "arrow image out of range: " + D.arrows[m].id});
      return v;
    }
    if (C.arrows[fm].src != f.omap[D.arrows[m].src] ||
        C.arrows[fm].tgt != f.omap[D.arrows[m].tgt])
      v.push_back({"EndpointFail", D.arrows[m].id});
  }
  for (int a = 0; a < D.n_objects(); ++a)
    if (f.amap[D.identity[a]] != C.identity[f.omap[a]])
      v.push_back({"IdentityFail", D.objects[a]});
  for (int m = 0; m < D.n_arrows(); ++m)
    for (int g : D.out_of(D.arrows[m].tgt)) {
      int gm = D.compose(m, g);
      if (gm < 0) continue;
      if (C.compose(f.amap[m], f.amap[g]) != f.amap[gm]) {
        v.push_back({"CompositeFail",
                     D.arrows[g].id + " . " + D.arrows[m].id});
        if (v.size() > 20) return v;
      }
    }
  return v;
}

bool functors_equal(const FinFunctor& f, const FinFunctor& g) {
  return f.dom.get() == g.dom.get() && f.cod.get() == g.cod.get() &&
         f.omap == g.omap && f.amap == g.amap;
}

std::vector<Violation> check_nat(const FinNatTrans& t) {
  std::vector<Violation> v;
  const auto& D = *t.dom.dom;
  const auto& C = *t.dom.cod;
  if ((int)t.comp.size() != D.n_objects()) {
    v.push_back({"ShapeMismatch", "component list has wrong length"});
    return v;
  }
  for (int a = 0; a < D.n_objects(); ++a) {
    int c = t.comp[a];
    if (c < 0 || c >= C.n_arrows() || C.arrows[c].src != t.dom.omap[a] ||
        C.arrows[c].tgt != t.cod.omap[a]) {
      v.push_back({"ComponentFail", D.objects[a]});
      return v;
    }
  }
  for (int m = 0; m < D.n_arrows(); ++m) {
    int a = D.arrows[m].src, b = D.arrows[m].tgt;
    // naturality: comp_b . F(m) = G(m) . comp_a
    if (C.compose(t.dom.amap[m], t.comp[b]) !=
        C.compose(t.comp[a], t.cod.amap[m]))
      v.push_back({"NaturalityFail", D.arrows[m].id});
  }
  return v;
}

FinNatTrans identity_nat(const FinFunctor& f) {
  FinNatTrans t;
  t.dom = t.cod = f;
  t.comp.resize(f.dom->n_objects());
  for (int a = 0; a < f.dom->n_objects(); ++a)
    t.comp[a] = f.cod->identity[f.omap[a]];
  return t;
}

FinNatTrans vcomp(const FinNatTrans& t1, const FinNatTrans& t2) {
  FinNatTrans t;
  t.dom = t1.dom;
  t.cod = t2.cod;
  t.comp.resize(t1.comp.size());
  const auto& C = *t1.dom.cod;
  for (size_t a = 0; a < t1.comp.size(); ++a) {
    t.comp[a] = C.compose(t1.comp[a], t2.comp[a]);
    if (t.comp[a] < 0) throw std::invalid_argument("vcomp: not composable");
  }
  return t;
}

CatPtr opposite(const CatPtr& c) {
  FinCatBuilder b;
  for (auto& o : c->objects) b.add_object(o);
  std::vector<int> amap(c->n_arrows(), -1);
  for (int f = 0; f < c->n_arrows(); ++f)
    if (!c->is_identity(f))
      amap[f] = b.add_arrow(c->arrows[f].id, c->arrows[f].tgt, c->arrows[f].src);
  for (int f = 0; f < c->n_arrows(); ++f)
    for (int g : c->out_of(c->arrows[f].tgt)) {
      int h = c->compose(f, g);
      if (h < 0 || c->is_identity(f) || c->is_identity(g)) continue;
      b.set_comp(amap[g], amap[f],
                 c->is_identity(h) ? FinCatBuilder::ident_of(c->arrows[h].src)
                                   : amap[h]);
    }
  return b.finalize();
}

FinFunctor opposite_functor(const FinFunctor& f, const CatPtr& odom,
                            const CatPtr& ocod) {
  FinFunctor g;
  g.dom = odom;
  g.cod = ocod;
  g.omap.resize(odom->n_objects());
  g.amap.resize(odom->n_arrows());
  for (int a = 0; a < odom->n_objects(); ++a)
    g.omap[a] = ocod->obj(f.cod->objects[f.omap[f.dom->obj(odom->objects[a])]]);
  for (int m = 0; m < odom->n_arrows(); ++m)
    g.amap[m] = ocod->arr(f.cod->arrows[f.amap[f.dom->arr(odom->arrows[m].id)]].id);
  return g;
}

}  // namespace opdcat
