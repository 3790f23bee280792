#include "umbra/groupoid.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace umbra {

// ----- groups -----

int GroupTable::inverse(int g) const {
  for (int h = 0; h < order(); ++h)
    if (mult[g][h] == 0) return h;
  return -1;
}

GroupTable GroupTable::trivial() { return GroupTable{{{0}}}; }

GroupTable GroupTable::cyclic(int n) {
  GroupTable t;
  t.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mult[i][j] = (i + j) % n;
  return t;
}

GroupTable GroupTable::klein4() {
  GroupTable t;
  t.mult.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t.mult[i][j] = i ^ j;
  return t;
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2}: id, (01), (02), (12), (012), (021).
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  auto find = [&](const std::array<int, 3>& p) {
    for (int k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    return -1;
  };
  GroupTable t;
  t.mult.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];  // i after j
      t.mult[i][j] = find(comp);
    }
  return t;
}

std::vector<std::vector<int>> group_homs(const GroupTable& g, const GroupTable& h) {
  int n = g.order(), m = h.order();
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, -1);
  img[0] = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (img[g.mult[a][b]] != h.mult[img[a]][img[b]]) return;
      out.push_back(img);
      return;
    }
    for (int v = 0; v < m; ++v) {
      img[k] = v;
      bool ok = true;
      for (int a = 0; a <= k && ok; ++a)
        for (int b = 0; b <= k && ok; ++b) {
          int p = g.mult[a][b];
          if (p <= k && img[p] >= 0 && img[p] != h.mult[img[a]][img[b]]) ok = false;
        }
      if (ok) rec(k + 1);
      img[k] = -1;
    }
  };
  if (n == 1)
    out.push_back(img);
  else
    rec(1);
  return out;
}

// ----- FiniteGroupoid -----

int FiniteGroupoid::compose(int g, int f) const {
  auto it = comp_table.find(key(g, f));
  if (it == comp_table.end()) throw std::invalid_argument("composition undefined");
  return it->second;
}

int FiniteGroupoid::inv(int m) const {
  int i = inverse_mor[m];
  if (i < 0) throw std::invalid_argument("morphism has no inverse");
  return i;
}

std::vector<int> FiniteGroupoid::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < n_mor(); ++m)
    if (mor_src[m] == a && mor_dst[m] == b) out.push_back(m);
  return out;
}

void FiniteGroupoid::add_object() {
  ++n_objects;
  identity_mor.push_back(-1);
}

int FiniteGroupoid::add_morphism(int src, int dst) {
  mor_src.push_back(src);
  mor_dst.push_back(dst);
  inverse_mor.push_back(-1);
  return n_mor() - 1;
}

ValidationReport FiniteGroupoid::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  for (int m = 0; m < n_mor(); ++m)
    if (mor_src[m] < 0 || mor_src[m] >= n_objects || mor_dst[m] < 0 || mor_dst[m] >= n_objects)
      return fail("morphism " + std::to_string(m) + " has invalid endpoints");
  if (int(identity_mor.size()) != n_objects) return fail("identity table size mismatch");
  for (int o = 0; o < n_objects; ++o) {
    int e = identity_mor[o];
    if (e < 0 || e >= n_mor() || mor_src[e] != o || mor_dst[e] != o)
      return fail("object " + std::to_string(o) + " has no identity");
  }
  for (int f = 0; f < n_mor(); ++f)
    for (int g = 0; g < n_mor(); ++g) {
      auto it = comp_table.find(key(g, f));
      if (composable(g, f)) {
        if (it == comp_table.end())
          return fail("composition of " + std::to_string(g) + " after " + std::to_string(f) +
                      " missing");
        int gf = it->second;
        if (gf < 0 || gf >= n_mor() || mor_src[gf] != mor_src[f] || mor_dst[gf] != mor_dst[g])
          return fail("composition of " + std::to_string(g) + " after " + std::to_string(f) +
                      " ill-typed");
      } else if (it != comp_table.end()) {
        return fail("composition defined for non-composable pair");
      }
    }
  for (int m = 0; m < n_mor(); ++m) {
    if (compose(m, identity_mor[mor_src[m]]) != m)
      return fail("right unit law fails at morphism " + std::to_string(m));
    if (compose(identity_mor[mor_dst[m]], m) != m)
      return fail("left unit law fails at morphism " + std::to_string(m));
  }
  for (int f = 0; f < n_mor(); ++f)
    for (int g = 0; g < n_mor(); ++g) {
      if (!composable(g, f)) continue;
      for (int h = 0; h < n_mor(); ++h) {
        if (!composable(h, g)) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          return fail("associativity fails");
      }
    }
  // inverses, by exhaustive search
  for (int m = 0; m < n_mor(); ++m) {
    bool found = false;
    for (int w = 0; w < n_mor(); ++w) {
      if (mor_src[w] != mor_dst[m] || mor_dst[w] != mor_src[m]) continue;
      if (compose(w, m) == identity_mor[mor_src[m]] &&
          compose(m, w) == identity_mor[mor_dst[m]]) {
        found = true;
        break;
      }
    }
    if (!found) return fail("morphism " + std::to_string(m) + " has no inverse");
  }
  return {};
}

uint64_t FiniteGroupoid::signature() const {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(uint64_t(n_objects));
  for (int m = 0; m < n_mor(); ++m) {
    mix(uint64_t(mor_src[m]));
    mix(uint64_t(mor_dst[m]));
  }
  uint64_t csum = 0;
  for (auto& [k, v] : comp_table) csum += k * 31 + uint64_t(v);
  mix(csum);
  return h;
}

std::vector<int> FiniteGroupoid::component_of(int obj) const {
  std::vector<int> out;
  for (int o = 0; o < n_objects; ++o)
    if (connected_to(obj, o)) out.push_back(o);
  return out;
}

bool same_gpd(const Gpd& a, const Gpd& b) {
  if (a.get() == b.get()) return true;
  return a->n_objects == b->n_objects && a->mor_src == b->mor_src &&
         a->mor_dst == b->mor_dst && a->identity_mor == b->identity_mor &&
         a->comp_table == b->comp_table;
}

Gpd point() { return discrete(1); }

Gpd discrete(int n) {
  auto g = std::make_shared<FiniteGroupoid>();
  g->n_objects = n;
  g->identity_mor.assign(n, -1);
  for (int o = 0; o < n; ++o) {
    int m = g->add_morphism(o, o);
    g->identity_mor[o] = m;
    g->inverse_mor[m] = m;
    g->set_comp(m, m, m);
  }
  return g;
}

Gpd connected_groupoid(int n_objects, const GroupTable& t) {
  auto g = std::make_shared<FiniteGroupoid>();
  int n = n_objects, k = t.order();
  g->n_objects = n;
  g->mor_src.resize(n * n * k);
  g->mor_dst.resize(n * n * k);
  g->inverse_mor.assign(n * n * k, -1);
  auto enc = [&](int a, int b, int e) { return (a * n + b) * k + e; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < k; ++e) {
        g->mor_src[enc(a, b, e)] = a;
        g->mor_dst[enc(a, b, e)] = b;
      }
  g->identity_mor.resize(n);
  for (int a = 0; a < n; ++a) g->identity_mor[a] = enc(a, a, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < k; ++e) {
        g->inverse_mor[enc(a, b, e)] = enc(b, a, t.inverse(e));
        for (int c = 0; c < n; ++c)
          for (int e2 = 0; e2 < k; ++e2)
            g->set_comp(enc(b, c, e2), enc(a, b, e), enc(a, c, t.mult[e2][e]));
      }
  return g;
}

Gpd cyclic_groupoid(int n) { return connected_groupoid(1, GroupTable::cyclic(n)); }

int conn_mor(const FiniteGroupoid& g, int group_order, int a, int b, int elt) {
  return (a * g.n_objects + b) * group_order + elt;
}

void conn_decode(const FiniteGroupoid& g, int group_order, int mor, int& a, int& b, int& elt) {
  elt = mor % group_order;
  int ab = mor / group_order;
  b = ab % g.n_objects;
  a = ab / g.n_objects;
}

Gpd disjoint_union(const Gpd& a, const Gpd& b) {
  auto g = std::make_shared<FiniteGroupoid>();
  g->n_objects = a->n_objects + b->n_objects;
  int mo = a->n_mor();
  g->mor_src = a->mor_src;
  g->mor_dst = a->mor_dst;
  for (int m = 0; m < b->n_mor(); ++m) {
    g->mor_src.push_back(b->mor_src[m] + a->n_objects);
    g->mor_dst.push_back(b->mor_dst[m] + a->n_objects);
  }
  g->identity_mor = a->identity_mor;
  for (int o = 0; o < b->n_objects; ++o) g->identity_mor.push_back(b->identity_mor[o] + mo);
  g->inverse_mor = a->inverse_mor;
  for (int m = 0; m < b->n_mor(); ++m) g->inverse_mor.push_back(b->inverse_mor[m] + mo);
  g->comp_table = a->comp_table;
  for (auto& [k, v] : b->comp_table) {
    int gg = int(k >> 32), ff = int(k & 0xffffffffu);
    g->set_comp(gg + mo, ff + mo, v + mo);
  }
  return g;
}

Gpd product(const Gpd& a, const Gpd& b) {
  auto g = std::make_shared<FiniteGroupoid>();
  g->n_objects = a->n_objects * b->n_objects;
  int mb = b->n_mor();
  auto enc = [&](int m1, int m2) { return m1 * mb + m2; };
  g->mor_src.resize(a->n_mor() * mb);
  g->mor_dst.resize(a->n_mor() * mb);
  g->inverse_mor.assign(a->n_mor() * mb, -1);
  for (int m1 = 0; m1 < a->n_mor(); ++m1)
    for (int m2 = 0; m2 < mb; ++m2) {
      g->mor_src[enc(m1, m2)] = a->mor_src[m1] * b->n_objects + b->mor_src[m2];
      g->mor_dst[enc(m1, m2)] = a->mor_dst[m1] * b->n_objects + b->mor_dst[m2];
      g->inverse_mor[enc(m1, m2)] = enc(a->inverse_mor[m1], b->inverse_mor[m2]);
    }
  g->identity_mor.resize(g->n_objects);
  for (int o1 = 0; o1 < a->n_objects; ++o1)
    for (int o2 = 0; o2 < b->n_objects; ++o2)
      g->identity_mor[o1 * b->n_objects + o2] = enc(a->identity_mor[o1], b->identity_mor[o2]);
  for (auto& [k1, v1] : a->comp_table)
    for (auto& [k2, v2] : b->comp_table) {
      int g1 = int(k1 >> 32), f1 = int(k1 & 0xffffffffu);
      int g2 = int(k2 >> 32), f2 = int(k2 & 0xffffffffu);
      g->set_comp(enc(g1, g2), enc(f1, f2), enc(v1, v2));
    }
  return g;
}

// ----- GroupoidMap -----

ValidationReport GroupoidMap::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (int(obj_map.size()) != src->n_objects || int(mor_map.size()) != src->n_mor())
    return fail("map table sizes mismatch");
  for (int m = 0; m < src->n_mor(); ++m) {
    int fm = mor_map[m];
    if (fm < 0 || fm >= dst->n_mor()) return fail("morphism image out of range");
    if (dst->mor_src[fm] != obj_map[src->mor_src[m]] ||
        dst->mor_dst[fm] != obj_map[src->mor_dst[m]])
      return fail("map does not preserve endpoints");
  }
  for (int o = 0; o < src->n_objects; ++o)
    if (mor_map[src->identity_mor[o]] != dst->identity_mor[obj_map[o]])
      return fail("map does not preserve identities");
  for (auto& [k, v] : src->comp_table) {
    int g = int(k >> 32), f = int(k & 0xffffffffu);
    if (mor_map[v] != dst->compose(mor_map[g], mor_map[f]))
      return fail("map does not preserve composition");
  }
  return {};
}

GroupoidMap identity_map(const Gpd& g) {
  GroupoidMap f;
  f.src = f.dst = g;
  f.obj_map.resize(g->n_objects);
  f.mor_map.resize(g->n_mor());
  for (int o = 0; o < g->n_objects; ++o) f.obj_map[o] = o;
  for (int m = 0; m < g->n_mor(); ++m) f.mor_map[m] = m;
  return f;
}

GroupoidMap compose(const GroupoidMap& g, const GroupoidMap& f) {
  GroupoidMap h;
  h.src = f.src;
  h.dst = g.dst;
  h.obj_map.resize(f.src->n_objects);
  h.mor_map.resize(f.src->n_mor());
  for (int o = 0; o < f.src->n_objects; ++o) h.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (int m = 0; m < f.src->n_mor(); ++m) h.mor_map[m] = g.mor_map[f.mor_map[m]];
  return h;
}

GroupoidMap to_point(const Gpd& g) {
  GroupoidMap f;
  f.src = g;
  f.dst = point();
  f.obj_map.assign(g->n_objects, 0);
  f.mor_map.assign(g->n_mor(), 0);
  return f;
}

GroupoidMap product_proj(const Gpd& a, const Gpd& b, int which) {
  Gpd p = product(a, b);
  GroupoidMap f;
  f.src = p;
  f.dst = which == 0 ? a : b;
  f.obj_map.resize(p->n_objects);
  f.mor_map.resize(p->n_mor());
  for (int o1 = 0; o1 < a->n_objects; ++o1)
    for (int o2 = 0; o2 < b->n_objects; ++o2)
      f.obj_map[o1 * b->n_objects + o2] = which == 0 ? o1 : o2;
  for (int m1 = 0; m1 < a->n_mor(); ++m1)
    for (int m2 = 0; m2 < b->n_mor(); ++m2)
      f.mor_map[m1 * b->n_mor() + m2] = which == 0 ? m1 : m2;
  return f;
}

GroupoidMap diagonal_map(const Gpd& a) {
  Gpd p = product(a, a);
  GroupoidMap f;
  f.src = a;
  f.dst = p;
  f.obj_map.resize(a->n_objects);
  f.mor_map.resize(a->n_mor());
  for (int o = 0; o < a->n_objects; ++o) f.obj_map[o] = o * a->n_objects + o;
  for (int m = 0; m < a->n_mor(); ++m) f.mor_map[m] = m * a->n_mor() + m;
  return f;
}

GroupoidMap pair_map(const GroupoidMap& f, const GroupoidMap& g) {
  if (!same_gpd(f.src, g.src)) throw std::invalid_argument("pair_map: different sources");
  Gpd p = product(f.dst, g.dst);
  GroupoidMap h;
  h.src = f.src;
  h.dst = p;
  h.obj_map.resize(f.src->n_objects);
  h.mor_map.resize(f.src->n_mor());
  for (int o = 0; o < f.src->n_objects; ++o)
    h.obj_map[o] = f.obj_map[o] * g.dst->n_objects + g.obj_map[o];
  for (int m = 0; m < f.src->n_mor(); ++m)
    h.mor_map[m] = f.mor_map[m] * g.dst->n_mor() + g.mor_map[m];
  return h;
}

GroupoidMap product_map(const GroupoidMap& f, const GroupoidMap& g) {
  Gpd ps = product(f.src, g.src);
  Gpd pd = product(f.dst, g.dst);
  GroupoidMap h;
  h.src = ps;
  h.dst = pd;
  h.obj_map.resize(ps->n_objects);
  h.mor_map.resize(ps->n_mor());
  for (int o1 = 0; o1 < f.src->n_objects; ++o1)
    for (int o2 = 0; o2 < g.src->n_objects; ++o2)
      h.obj_map[o1 * g.src->n_objects + o2] = f.obj_map[o1] * g.dst->n_objects + g.obj_map[o2];
  for (int m1 = 0; m1 < f.src->n_mor(); ++m1)
    for (int m2 = 0; m2 < g.src->n_mor(); ++m2)
      h.mor_map[m1 * g.src->n_mor() + m2] = f.mor_map[m1] * g.dst->n_mor() + g.mor_map[m2];
  return h;
}

GroupoidMap object_inclusion(const Gpd& g, int obj) {
  GroupoidMap f;
  f.src = point();
  f.dst = g;
  f.obj_map = {obj};
  f.mor_map = {g->identity_mor[obj]};
  return f;
}

GroupoidMap connected_functor(const Gpd& a, int orderG, const Gpd& b, int orderH,
                              const std::vector<int>& sigma, const std::vector<int>& hom,
                              const std::vector<int>& gauge) {
  GroupoidMap f;
  f.src = a;
  f.dst = b;
  f.obj_map = sigma;
  f.mor_map.resize(a->n_mor());
  auto hmul = [&](int u, int v) {
    int mu = conn_mor(*b, orderH, 0, 0, u);
    int mv = conn_mor(*b, orderH, 0, 0, v);
    int mw = b->compose(mu, mv);
    int p, q, w;
    conn_decode(*b, orderH, mw, p, q, w);
    return w;
  };
  auto hinv = [&](int u) {
    int mu = conn_mor(*b, orderH, 0, 0, u);
    int p, q, w;
    conn_decode(*b, orderH, b->inv(mu), p, q, w);
    return w;
  };
  for (int m = 0; m < a->n_mor(); ++m) {
    int x, y, e;
    conn_decode(*a, orderG, m, x, y, e);
    int elt = hmul(gauge[y], hmul(hom[e], hinv(gauge[x])));
    f.mor_map[m] = conn_mor(*b, orderH, sigma[x], sigma[y], elt);
  }
  return f;
}

// ----- natural isos and squares -----

ValidationReport NaturalIso::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (!same_gpd(f.src, g.src) || !same_gpd(f.dst, g.dst))
    return fail("natural iso endpoints mismatch");
  const FiniteGroupoid& B = *f.dst;
  if (int(component.size()) != f.src->n_objects) return fail("component count mismatch");
  for (int a = 0; a < f.src->n_objects; ++a) {
    int c = component[a];
    if (B.mor_src[c] != f.obj_map[a] || B.mor_dst[c] != g.obj_map[a])
      return fail("component ill-typed at object " + std::to_string(a));
  }
  for (int m = 0; m < f.src->n_mor(); ++m) {
    int a = f.src->mor_src[m], b = f.src->mor_dst[m];
    if (B.compose(g.mor_map[m], component[a]) != B.compose(component[b], f.mor_map[m]))
      return fail("naturality fails at morphism " + std::to_string(m));
  }
  return {};
}

NaturalIso identity_iso(const GroupoidMap& f) {
  NaturalIso n;
  n.f = n.g = f;
  n.component.resize(f.src->n_objects);
  for (int a = 0; a < f.src->n_objects; ++a) n.component[a] = f.dst->identity_mor[f.obj_map[a]];
  return n;
}

NaturalIso whisker_left(const GroupoidMap& h, const NaturalIso& eta) {
  NaturalIso n;
  n.f = compose(h, eta.f);
  n.g = compose(h, eta.g);
  n.component.resize(eta.component.size());
  for (size_t a = 0; a < eta.component.size(); ++a) n.component[a] = h.mor_map[eta.component[a]];
  return n;
}

NaturalIso whisker_right(const NaturalIso& eta, const GroupoidMap& k) {
  NaturalIso n;
  n.f = compose(eta.f, k);
  n.g = compose(eta.g, k);
  n.component.resize(k.src->n_objects);
  for (int a = 0; a < k.src->n_objects; ++a) n.component[a] = eta.component[k.obj_map[a]];
  return n;
}

NaturalIso vcompose(const NaturalIso& later, const NaturalIso& first) {
  NaturalIso n;
  n.f = first.f;
  n.g = later.g;
  n.component.resize(first.component.size());
  const FiniteGroupoid& B = *first.f.dst;
  for (size_t a = 0; a < first.component.size(); ++a)
    n.component[a] = B.compose(later.component[a], first.component[a]);
  return n;
}

ValidationReport GroupoidSquare::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (!same_gpd(p.src, q.src)) return fail("square corners mismatch (P)");
  if (!same_gpd(f.src, p.dst)) return fail("square corners mismatch (A)");
  if (!same_gpd(g.src, q.dst)) return fail("square corners mismatch (B)");
  if (!same_gpd(f.dst, g.dst)) return fail("square corners mismatch (C)");
  auto r = filler.validate();
  if (!r.ok) return r;
  GroupoidMap fp = compose(f, p), gq = compose(g, q);
  if (filler.f.obj_map != fp.obj_map || filler.f.mor_map != fp.mor_map ||
      filler.g.obj_map != gq.obj_map || filler.g.mor_map != gq.mor_map)
    return fail("filler does not fill f∘p ⇒ g∘q");
  return {};
}

// ----- iso-comma -----

int IsoComma::obj_index(int a, int b, int gamma) const {
  uint64_t k = (uint64_t(a) << 42) ^ (uint64_t(b) << 21) ^ uint64_t(gamma);
  auto it = obj_lookup_.find(k);
  if (it == obj_lookup_.end()) throw std::out_of_range("iso-comma object not found");
  return it->second;
}

int IsoComma::mor_index(int src_obj, int u, int v) const {
  uint64_t k = (uint64_t(src_obj) << 42) ^ (uint64_t(u) << 21) ^ uint64_t(v);
  auto it = mor_lookup_.find(k);
  if (it == mor_lookup_.end()) throw std::out_of_range("iso-comma morphism not found");
  return it->second;
}

IsoComma iso_comma(const GroupoidMap& f, const GroupoidMap& g) {
  if (!same_gpd(f.dst, g.dst)) throw std::invalid_argument("iso_comma: codomain mismatch");
  const FiniteGroupoid& A = *f.src;
  const FiniteGroupoid& B = *g.src;
  const FiniteGroupoid& C = *f.dst;

  IsoComma ic;
  auto gp = std::make_shared<FiniteGroupoid>();

  for (int a = 0; a < A.n_objects; ++a)
    for (int b = 0; b < B.n_objects; ++b)
      for (int gamma : C.hom(f.obj_map[a], g.obj_map[b])) {
        uint64_t k = (uint64_t(a) << 42) ^ (uint64_t(b) << 21) ^ uint64_t(gamma);
        ic.obj_lookup_[k] = int(ic.objects.size());
        ic.objects.push_back({a, b, gamma});
        gp->add_object();
      }

  // morphisms: (u, v) with γ' = g(v)∘γ∘f(u)⁻¹
  for (int o1 = 0; o1 < int(ic.objects.size()); ++o1) {
    const auto& s = ic.objects[o1];
    for (int u = 0; u < A.n_mor(); ++u) {
      if (A.mor_src[u] != s.a) continue;
      for (int v = 0; v < B.n_mor(); ++v) {
        if (B.mor_src[v] != s.b) continue;
        int fu = f.mor_map[u], gv = g.mor_map[v];
        int gamma2 = C.compose(C.compose(gv, s.gamma), C.inv(fu));
        int o2 = ic.obj_index(A.mor_dst[u], B.mor_dst[v], gamma2);
        int m = gp->add_morphism(o1, o2);
        ic.mor_pair.push_back({u, v});
        uint64_t k = (uint64_t(o1) << 42) ^ (uint64_t(u) << 21) ^ uint64_t(v);
        ic.mor_lookup_[k] = m;
      }
    }
  }

  for (int o = 0; o < int(ic.objects.size()); ++o) {
    const auto& s = ic.objects[o];
    gp->identity_mor[o] = ic.mor_index(o, A.identity_mor[s.a], B.identity_mor[s.b]);
  }
  for (int m = 0; m < gp->n_mor(); ++m) {
    auto [u, v] = ic.mor_pair[m];
    int o2 = gp->mor_dst[m];
    gp->inverse_mor[m] = ic.mor_index(o2, A.inverse_mor[u], B.inverse_mor[v]);
  }
  for (int m1 = 0; m1 < gp->n_mor(); ++m1) {
    int mid = gp->mor_dst[m1];
    auto [u1, v1] = ic.mor_pair[m1];
    for (int m2 = 0; m2 < gp->n_mor(); ++m2) {
      if (gp->mor_src[m2] != mid) continue;
      auto [u2, v2] = ic.mor_pair[m2];
      int w = ic.mor_index(gp->mor_src[m1], A.compose(u2, u1), B.compose(v2, v1));
      gp->set_comp(m2, m1, w);
    }
  }

  ic.gpd = gp;
  ic.proj_a.src = gp;
  ic.proj_a.dst = f.src;
  ic.proj_b.src = gp;
  ic.proj_b.dst = g.src;
  for (const auto& o : ic.objects) {
    ic.proj_a.obj_map.push_back(o.a);
    ic.proj_b.obj_map.push_back(o.b);
  }
  for (int m = 0; m < gp->n_mor(); ++m) {
    ic.proj_a.mor_map.push_back(ic.mor_pair[m].first);
    ic.proj_b.mor_map.push_back(ic.mor_pair[m].second);
  }
  ic.filler.f = compose(f, ic.proj_a);
  ic.filler.g = compose(g, ic.proj_b);
  for (const auto& o : ic.objects) ic.filler.component.push_back(o.gamma);
  return ic;
}

bool is_equivalence(const GroupoidMap& f) {
  const FiniteGroupoid& A = *f.src;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    bool hit = false;
    for (int a = 0; a < A.n_objects && !hit; ++a)
      if (!B.hom(f.obj_map[a], b).empty()) hit = true;
    if (!hit) return false;
  }
  for (int a = 0; a < A.n_objects; ++a)
    for (int a2 = 0; a2 < A.n_objects; ++a2) {
      auto ha = A.hom(a, a2);
      auto hb = B.hom(f.obj_map[a], f.obj_map[a2]);
      if (ha.size() != hb.size()) return false;
      std::vector<int> images;
      for (int m : ha) images.push_back(f.mor_map[m]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
  return true;
}

GroupoidMap comparison_map(const GroupoidSquare& sq, const IsoComma& ic) {
  GroupoidMap k;
  k.src = sq.p.src;
  k.dst = ic.gpd;
  const FiniteGroupoid& P = *sq.p.src;
  k.obj_map.resize(P.n_objects);
  k.mor_map.resize(P.n_mor());
  for (int o = 0; o < P.n_objects; ++o)
    k.obj_map[o] = ic.obj_index(sq.p.obj_map[o], sq.q.obj_map[o], sq.filler.component[o]);
  for (int m = 0; m < P.n_mor(); ++m)
    k.mor_map[m] = ic.mor_index(k.obj_map[P.mor_src[m]], sq.p.mor_map[m], sq.q.mor_map[m]);
  return k;
}

bool is_homotopy_cartesian(const GroupoidSquare& sq) {
  IsoComma ic = iso_comma(sq.f, sq.g);
  return is_equivalence(comparison_map(sq, ic));
}

GroupoidSquare iso_comma_square(const GroupoidMap& f, const GroupoidMap& g) {
  IsoComma ic = iso_comma(f, g);
  GroupoidSquare sq;
  sq.p = ic.proj_a;
  sq.q = ic.proj_b;
  sq.f = f;
  sq.g = g;
  sq.filler = ic.filler;
  return sq;
}

}  // namespace umbra
