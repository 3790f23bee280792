#include "umbra/base_change.hpp"

#include <stdexcept>

namespace umbra {

// ----- pullback -----

LocalSystem pullback(const GroupoidMap& f, const LocalSystem& y) {
  LocalSystem x;
  x.base = f.src;
  for (int a = 0; a < f.src->n_objects; ++a) x.fibres.push_back(y.fibre(f.obj_map[a]));
  for (int m = 0; m < f.src->n_mor(); ++m) x.action.push_back(y.act(f.mor_map[m]));
  return x;
}

ParamMap pullback_map(const GroupoidMap& f, const ParamMap& psi) {
  ParamMap p;
  p.src = pullback(f, psi.src);
  p.dst = pullback(f, psi.dst);
  p.degree = psi.degree;
  for (int a = 0; a < f.src->n_objects; ++a) p.component.push_back(psi.at(f.obj_map[a]));
  return p;
}

// ----- shriek -----

int Shriek::obj_index(int b, int a, int gamma) const {
  const auto& os = at.at(b).objs;
  for (size_t i = 0; i < os.size(); ++i)
    if (os[i].a == a && os[i].gamma == gamma) return int(i);
  throw std::out_of_range("shriek comma object not found");
}

Shriek shriek(const GroupoidMap& f, const LocalSystem& x) {
  const FiniteGroupoid& A = *f.src;
  const FiniteGroupoid& B = *f.dst;
  Shriek s;
  s.f = f;
  s.source = x;
  s.sys.base = f.dst;
  s.at.resize(B.n_objects);

  for (int b = 0; b < B.n_objects; ++b) {
    auto& sa = s.at[b];
    FiniteDiagram d;
    for (int a = 0; a < A.n_objects; ++a)
      for (int gamma : B.hom(b, f.obj_map[a])) {
        sa.objs.push_back({a, gamma});
        d.nodes.push_back(x.fibre(a));
      }
    // arrows: (a,γ) → (a2,γ2) for v: a2 → a with γ = f(v)∘γ2
    for (size_t o1 = 0; o1 < sa.objs.size(); ++o1)
      for (size_t o2 = 0; o2 < sa.objs.size(); ++o2) {
        int a1 = sa.objs[o1].a, a2 = sa.objs[o2].a;
        for (int v : A.hom(a2, a1))
          if (B.compose(f.mor_map[v], sa.objs[o2].gamma) == sa.objs[o1].gamma)
            d.arrows.push_back({int(o1), int(o2), x.act(v)});
      }
    if (d.nodes.empty()) {
      // empty comma category: the colimit is 0
      sa.colim.space = GradedVectorSpace(x.field());
      sa.colim.sum = GradedVectorSpace(x.field());
      sa.colim.proj = GradedLinearMap::zero(sa.colim.sum, sa.colim.space, 0);
    } else {
      sa.colim = diagram_colimit(d);
    }
    s.sys.fibres.push_back(sa.colim.space);
  }

  // contravariant structure maps
  for (int m = 0; m < B.n_mor(); ++m) {
    int b1 = B.mor_src[m], b2 = B.mor_dst[m];
    const auto& from = s.at[b2];
    const auto& to = s.at[b1];
    // reindex (a, γ: b2 → f a) ↦ (a, γ∘m: b1 → f a)
    std::vector<GradedVectorSpace> from_nodes, to_nodes;
    for (const auto& o : from.objs) from_nodes.push_back(x.fibre(o.a));
    for (const auto& o : to.objs) to_nodes.push_back(x.fibre(o.a));
    GradedLinearMap r = GradedLinearMap::zero(from.colim.sum, to.colim.sum, 0);
    for (size_t i = 0; i < from.objs.size(); ++i) {
      int tgt = s.obj_index(b1, from.objs[i].a, B.compose(from.objs[i].gamma, m));
      r = r + sum_inclusion(to_nodes, tgt).compose(sum_projection(from_nodes, int(i)));
    }
    s.sys.action.push_back(
        factor_through_surjection(from.colim.proj, to.colim.proj.compose(r)));
  }
  return s;
}

ParamMap shriek_unit(const Shriek& s) {
  ParamMap p;
  p.src = s.source;
  p.dst = pullback(s.f, s.sys);
  p.degree = 0;
  const FiniteGroupoid& A = *s.f.src;
  for (int a = 0; a < A.n_objects; ++a) {
    int fa = s.f.obj_map[a];
    int idx = s.obj_index(fa, a, s.f.dst->identity_mor[fa]);
    p.component.push_back(s.at[fa].colim.injections[idx]);
  }
  return p;
}

namespace {

// Assemble a map out of the comma sum from per-object legs. legs[i] must
// have source x.fibre(objs[i].a) and common target.
GradedLinearMap assemble_from_sum(const std::vector<GradedVectorSpace>& nodes,
                                  const std::vector<GradedLinearMap>& legs,
                                  const GradedVectorSpace& target, int degree) {
  GradedVectorSpace sum = diagram_sum(nodes);
  GradedLinearMap out = GradedLinearMap::zero(sum, target, degree);
  for (size_t i = 0; i < legs.size(); ++i)
    out = out + legs[i].compose(sum_projection(nodes, int(i)));
  return out;
}

}  // namespace

ParamMap shriek_counit(const GroupoidMap& f, const LocalSystem& y) {
  LocalSystem fy = pullback(f, y);
  Shriek s = shriek(f, fy);
  ParamMap p;
  p.src = s.sys;
  p.dst = y;
  p.degree = 0;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa = s.at[b];
    std::vector<GradedVectorSpace> nodes;
    std::vector<GradedLinearMap> legs;
    for (const auto& o : sa.objs) {
      nodes.push_back(fy.fibre(o.a));
      legs.push_back(y.act(o.gamma));  // Y(γ): Y(f a) → Y(b)
    }
    GradedLinearMap big = assemble_from_sum(nodes, legs, y.fibre(b), 0);
    p.component.push_back(factor_through_surjection(sa.colim.proj, big));
  }
  return p;
}

ParamMap shriek_map(const GroupoidMap& f, const ParamMap& theta) {
  Shriek s1 = shriek(f, theta.src);
  Shriek s2 = shriek(f, theta.dst);
  ParamMap p;
  p.src = s1.sys;
  p.dst = s2.sys;
  p.degree = theta.degree;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa1 = s1.at[b];
    const auto& sa2 = s2.at[b];
    std::vector<GradedVectorSpace> nodes1, nodes2;
    for (const auto& o : sa1.objs) nodes1.push_back(theta.src.fibre(o.a));
    for (const auto& o : sa2.objs) nodes2.push_back(theta.dst.fibre(o.a));
    std::vector<GradedLinearMap> legs;
    for (size_t i = 0; i < sa1.objs.size(); ++i) {
      int tgt = s2.obj_index(b, sa1.objs[i].a, sa1.objs[i].gamma);
      legs.push_back(sum_inclusion(nodes2, tgt).compose(theta.at(sa1.objs[i].a)));
    }
    GradedLinearMap big = assemble_from_sum(nodes1, legs, sa2.colim.sum, theta.degree);
    p.component.push_back(
        factor_through_surjection(sa1.colim.proj, sa2.colim.proj.compose(big)));
  }
  return p;
}

ParamMap adjunct_shriek(const GroupoidMap& f, const ParamMap& phi, const LocalSystem& y) {
  // φ: X → f*Y  ⟼  f_!X → Y, on the comma node (a, γ): Y(γ)∘φ_a.
  Shriek s = shriek(f, phi.src);
  ParamMap p;
  p.src = s.sys;
  p.dst = y;
  p.degree = phi.degree;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa = s.at[b];
    std::vector<GradedVectorSpace> nodes;
    std::vector<GradedLinearMap> legs;
    for (const auto& o : sa.objs) {
      nodes.push_back(phi.src.fibre(o.a));
      legs.push_back(y.act(o.gamma).compose(phi.at(o.a)));
    }
    GradedLinearMap big = assemble_from_sum(nodes, legs, y.fibre(b), phi.degree);
    p.component.push_back(factor_through_surjection(sa.colim.proj, big));
  }
  return p;
}

ParamMap coadjunct_shriek(const Shriek& s, const ParamMap& psi) {
  ParamMap p;
  p.src = s.source;
  p.dst = pullback(s.f, psi.dst);
  p.degree = psi.degree;
  const FiniteGroupoid& A = *s.f.src;
  for (int a = 0; a < A.n_objects; ++a) {
    int fa = s.f.obj_map[a];
    int idx = s.obj_index(fa, a, s.f.dst->identity_mor[fa]);
    p.component.push_back(psi.at(fa).compose(s.at[fa].colim.injections[idx]));
  }
  return p;
}

// ----- star -----

int Star::obj_index(int b, int a, int delta) const {
  const auto& os = at.at(b).objs;
  for (size_t i = 0; i < os.size(); ++i)
    if (os[i].a == a && os[i].gamma == delta) return int(i);
  throw std::out_of_range("star comma object not found");
}

Star star(const GroupoidMap& f, const LocalSystem& x) {
  const FiniteGroupoid& A = *f.src;
  const FiniteGroupoid& B = *f.dst;
  Star s;
  s.f = f;
  s.source = x;
  s.sys.base = f.dst;
  s.at.resize(B.n_objects);

  for (int b = 0; b < B.n_objects; ++b) {
    auto& sa = s.at[b];
    FiniteDiagram d;
    for (int a = 0; a < A.n_objects; ++a)
      for (int delta : B.hom(f.obj_map[a], b)) {
        sa.objs.push_back({a, delta});
        d.nodes.push_back(x.fibre(a));
      }
    // arrows: (a,δ) → (a2,δ2) for u: a2 → a with δ2 = δ∘f(u)
    for (size_t o1 = 0; o1 < sa.objs.size(); ++o1)
      for (size_t o2 = 0; o2 < sa.objs.size(); ++o2) {
        int a1 = sa.objs[o1].a, a2 = sa.objs[o2].a;
        for (int u : A.hom(a2, a1))
          if (B.compose(sa.objs[o1].gamma, f.mor_map[u]) == sa.objs[o2].gamma)
            d.arrows.push_back({int(o1), int(o2), x.act(u)});
      }
    if (d.nodes.empty()) {
      sa.lim.space = GradedVectorSpace(x.field());
      sa.lim.sum = GradedVectorSpace(x.field());
      sa.lim.incl = GradedLinearMap::zero(sa.lim.space, sa.lim.sum, 0);
    } else {
      sa.lim = diagram_limit(d);
    }
    s.sys.fibres.push_back(sa.lim.space);
  }

  for (int m = 0; m < B.n_mor(); ++m) {
    int b1 = B.mor_src[m], b2 = B.mor_dst[m];
    const auto& from = s.at[b2];
    const auto& to = s.at[b1];
    std::vector<GradedVectorSpace> from_nodes, to_nodes;
    for (const auto& o : from.objs) from_nodes.push_back(x.fibre(o.a));
    for (const auto& o : to.objs) to_nodes.push_back(x.fibre(o.a));
    // reindex: the b1-component (a, δ) is read from the b2-component (a, m∘δ)
    GradedLinearMap r = GradedLinearMap::zero(from.lim.sum, to.lim.sum, 0);
    for (size_t i = 0; i < to.objs.size(); ++i) {
      int src = s.obj_index(b2, to.objs[i].a, B.compose(m, to.objs[i].gamma));
      r = r + sum_inclusion(to_nodes, int(i)).compose(sum_projection(from_nodes, src));
    }
    s.sys.action.push_back(factor_through_injection(to.lim.incl, r.compose(from.lim.incl)));
  }
  return s;
}

namespace {

GradedLinearMap assemble_into_sum(const std::vector<GradedVectorSpace>& nodes,
                                  const std::vector<GradedLinearMap>& legs,
                                  const GradedVectorSpace& source, int degree) {
  GradedVectorSpace sum = diagram_sum(nodes);
  GradedLinearMap out = GradedLinearMap::zero(source, sum, degree);
  for (size_t i = 0; i < legs.size(); ++i)
    out = out + sum_inclusion(nodes, int(i)).compose(legs[i]);
  return out;
}

}  // namespace

ParamMap star_unit(const GroupoidMap& f, const LocalSystem& y) {
  LocalSystem fy = pullback(f, y);
  Star s = star(f, fy);
  ParamMap p;
  p.src = y;
  p.dst = s.sys;
  p.degree = 0;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa = s.at[b];
    std::vector<GradedVectorSpace> nodes;
    std::vector<GradedLinearMap> legs;
    for (const auto& o : sa.objs) {
      nodes.push_back(fy.fibre(o.a));
      legs.push_back(y.act(o.gamma));  // Y(δ): Y(b) → Y(f a)
    }
    GradedLinearMap big = assemble_into_sum(nodes, legs, y.fibre(b), 0);
    p.component.push_back(factor_through_injection(sa.lim.incl, big));
  }
  return p;
}

ParamMap star_counit(const Star& s) {
  ParamMap p;
  p.src = pullback(s.f, s.sys);
  p.dst = s.source;
  p.degree = 0;
  const FiniteGroupoid& A = *s.f.src;
  for (int a = 0; a < A.n_objects; ++a) {
    int fa = s.f.obj_map[a];
    int idx = s.obj_index(fa, a, s.f.dst->identity_mor[fa]);
    p.component.push_back(s.at[fa].lim.projections[idx]);
  }
  return p;
}

ParamMap star_map(const GroupoidMap& f, const ParamMap& theta) {
  Star s1 = star(f, theta.src);
  Star s2 = star(f, theta.dst);
  ParamMap p;
  p.src = s1.sys;
  p.dst = s2.sys;
  p.degree = theta.degree;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa1 = s1.at[b];
    const auto& sa2 = s2.at[b];
    std::vector<GradedVectorSpace> nodes2;
    for (const auto& o : sa2.objs) nodes2.push_back(theta.dst.fibre(o.a));
    std::vector<GradedLinearMap> legs;
    for (size_t i = 0; i < sa2.objs.size(); ++i) {
      int src = s1.obj_index(b, sa2.objs[i].a, sa2.objs[i].gamma);
      legs.push_back(theta.at(sa2.objs[i].a).compose(sa1.lim.projections[src]));
    }
    GradedLinearMap big = assemble_into_sum(nodes2, legs, sa1.lim.space, theta.degree);
    p.component.push_back(factor_through_injection(sa2.lim.incl, big));
  }
  return p;
}

ParamMap adjunct_star(const GroupoidMap& f, const LocalSystem& y, const ParamMap& phi) {
  // φ: f*Y → X  ⟼  Y → f_*X, into the node (a, δ): φ_a∘Y(δ).
  Star s = star(f, phi.dst);
  ParamMap p;
  p.src = y;
  p.dst = s.sys;
  p.degree = phi.degree;
  const FiniteGroupoid& B = *f.dst;
  for (int b = 0; b < B.n_objects; ++b) {
    const auto& sa = s.at[b];
    std::vector<GradedVectorSpace> nodes;
    std::vector<GradedLinearMap> legs;
    for (const auto& o : sa.objs) {
      nodes.push_back(phi.dst.fibre(o.a));
      legs.push_back(phi.at(o.a).compose(y.act(o.gamma)));
    }
    GradedLinearMap big = assemble_into_sum(nodes, legs, y.fibre(b), phi.degree);
    p.component.push_back(factor_through_injection(sa.lim.incl, big));
  }
  return p;
}

ParamMap coadjunct_star(const Star& s, const ParamMap& psi) {
  ParamMap p;
  p.src = pullback(s.f, psi.src);
  p.dst = s.source;
  p.degree = psi.degree;
  const FiniteGroupoid& A = *s.f.src;
  for (int a = 0; a < A.n_objects; ++a) {
    int fa = s.f.obj_map[a];
    int idx = s.obj_index(fa, a, s.f.dst->identity_mor[fa]);
    p.component.push_back(s.at[fa].lim.projections[idx].compose(psi.at(fa)));
  }
  return p;
}

// ----- composition comparisons -----

ParamMap compose_shriek_iso(const GroupoidMap& g, const GroupoidMap& f, const LocalSystem& x) {
  GroupoidMap gf = compose(g, f);
  Shriek sgf = shriek(gf, x);
  // unit: X → (gf)*(gf)_!X = f*(g*(gf)_!X)
  ParamMap u = shriek_unit(sgf);
  LocalSystem gT = pullback(g, sgf.sys);
  ParamMap u2 = u.retarget(u.src, pullback(f, gT));
  ParamMap a1 = adjunct_shriek(f, u2, gT);  // f_!X → g*(gf)_!X
  return adjunct_shriek(g, a1, sgf.sys);    // g_!f_!X → (gf)_!X
}

ParamMap compose_star_iso(const GroupoidMap& g, const GroupoidMap& f, const LocalSystem& x) {
  GroupoidMap gf = compose(g, f);
  Star sgf = star(gf, x);
  // counit: (gf)*(gf)_*X → X, read as f*(g*(gf)_*X) → X
  ParamMap c = star_counit(sgf);
  LocalSystem gW = pullback(g, sgf.sys);
  ParamMap c2 = c.retarget(pullback(f, gW), c.dst);
  ParamMap a1 = adjunct_star(f, gW, c2);       // g*(gf)_*X → f_*X
  return adjunct_star(g, sgf.sys, a1);         // (gf)_*X → g_*f_*X
}

ParamMap sigma_pull(const NaturalIso& sigma, const LocalSystem& w) {
  ParamMap p;
  p.src = pullback(sigma.g, w);
  p.dst = pullback(sigma.f, w);
  p.degree = 0;
  for (size_t a = 0; a < sigma.component.size(); ++a)
    p.component.push_back(w.act(sigma.component[a]));
  return p;
}

ParamMap sigma_star(const NaturalIso& sigma, const LocalSystem& w) {
  // F_*W → G_*W: adjunct over G of (G*F_*W → F*F_*W → W).
  Star sf = star(sigma.f, w);
  ParamMap pull = sigma_pull(sigma, sf.sys);  // G*(F_*W) → F*(F_*W)
  ParamMap c = star_counit(sf).compose(pull);
  return adjunct_star(sigma.g, sf.sys, c);
}

// ----- monoidal structure -----

LocalSystem tensor_system(const LocalSystem& x, const LocalSystem& y) {
  LocalSystem t;
  t.base = x.base;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    t.fibres.push_back(graded_tensor(x.fibres[o], y.fibres[o]));
  for (size_t m = 0; m < x.action.size(); ++m)
    t.action.push_back(tensor_map(x.action[m], y.action[m]));
  return t;
}

ParamMap tensor_param(const ParamMap& phi, const ParamMap& psi) {
  ParamMap p;
  p.src = tensor_system(phi.src, psi.src);
  p.dst = tensor_system(phi.dst, psi.dst);
  p.degree = phi.degree + psi.degree;
  for (size_t o = 0; o < phi.component.size(); ++o)
    p.component.push_back(tensor_map(phi.component[o], psi.component[o]));
  return p;
}

LocalSystem hom_system(const LocalSystem& x, const LocalSystem& y) {
  LocalSystem h;
  h.base = x.base;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    h.fibres.push_back(graded_hom(x.fibres[o], y.fibres[o]));
  const FiniteGroupoid& B = *x.base;
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.mor_src[m], b = B.mor_dst[m];
    // φ ↦ Y(m)∘φ∘X(m)⁻¹ : Hom(X(b),Y(b)) → Hom(X(a),Y(a))
    GradedLinearMap pre = hom_pre(x.action[m].inverse(), y.fibres[b]);
    GradedLinearMap post = hom_post(x.fibres[a], y.action[m]);
    h.action.push_back(post.compose(pre));
  }
  return h;
}

ParamMap hom_system_post(const LocalSystem& x, const ParamMap& q) {
  ParamMap p;
  p.src = hom_system(x, q.src);
  p.dst = hom_system(x, q.dst);
  p.degree = q.degree;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    p.component.push_back(hom_post(x.fibres[o], q.at(int(o))));
  return p;
}

ParamMap hom_system_pre(const ParamMap& pmap, const LocalSystem& w) {
  ParamMap p;
  p.src = hom_system(pmap.dst, w);
  p.dst = hom_system(pmap.src, w);
  p.degree = pmap.degree;
  for (size_t o = 0; o < w.fibres.size(); ++o)
    p.component.push_back(hom_pre(pmap.at(int(o)), w.fibres[o]));
  return p;
}

ParamMap tensor_system_assoc(const LocalSystem& x, const LocalSystem& y, const LocalSystem& z) {
  ParamMap p;
  p.src = tensor_system(tensor_system(x, y), z);
  p.dst = tensor_system(x, tensor_system(y, z));
  p.degree = 0;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    p.component.push_back(tensor_assoc(x.fibres[o], y.fibres[o], z.fibres[o]));
  return p;
}

ParamMap tensor_system_unit_left(const LocalSystem& x) {
  ParamMap p;
  p.src = tensor_system(LocalSystem::unit(x.base, x.field()), x);
  p.dst = x;
  p.degree = 0;
  for (const auto& f : x.fibres) p.component.push_back(tensor_unit_left(f));
  return p;
}

ParamMap tensor_system_unit_right(const LocalSystem& x) {
  ParamMap p;
  p.src = tensor_system(x, LocalSystem::unit(x.base, x.field()));
  p.dst = x;
  p.degree = 0;
  for (const auto& f : x.fibres) p.component.push_back(tensor_unit_right(f));
  return p;
}

ParamMap tensor_system_symmetry(const LocalSystem& x, const LocalSystem& y) {
  ParamMap p;
  p.src = tensor_system(x, y);
  p.dst = tensor_system(y, x);
  p.degree = 0;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    p.component.push_back(symmetry(x.fibres[o], y.fibres[o]));
  return p;
}

ParamMap hom_system_eval(const LocalSystem& x, const LocalSystem& y) {
  ParamMap p;
  p.src = tensor_system(hom_system(x, y), x);
  p.dst = y;
  p.degree = 0;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    p.component.push_back(hom_eval(x.fibres[o], y.fibres[o]));
  return p;
}

ParamMap curry_param(const ParamMap& f, const LocalSystem& u, const LocalSystem& v) {
  ParamMap p;
  p.src = u;
  p.dst = hom_system(v, f.dst);
  p.degree = f.degree;
  for (size_t o = 0; o < u.fibres.size(); ++o)
    p.component.push_back(curry(f.at(int(o)), u.fibres[o], v.fibres[o]));
  return p;
}

ParamMap uncurry_param(const ParamMap& g, const LocalSystem& v, const LocalSystem& w) {
  ParamMap p;
  p.src = tensor_system(g.src, v);
  p.dst = w;
  p.degree = g.degree;
  for (size_t o = 0; o < v.fibres.size(); ++o)
    p.component.push_back(uncurry_to(g.at(int(o)), v.fibres[o], w.fibres[o]));
  return p;
}

LocalSystem external_tensor(const LocalSystem& x, const LocalSystem& y) {
  Gpd prod = product(x.base, y.base);
  LocalSystem t;
  t.base = prod;
  int nb = y.base->n_objects, mb = y.base->n_mor();
  for (int o1 = 0; o1 < x.base->n_objects; ++o1)
    for (int o2 = 0; o2 < nb; ++o2)
      t.fibres.push_back(graded_tensor(x.fibres[o1], y.fibres[o2]));
  for (int m1 = 0; m1 < x.base->n_mor(); ++m1)
    for (int m2 = 0; m2 < mb; ++m2)
      t.action.push_back(tensor_map(x.action[m1], y.action[m2]));
  return t;
}

ParamMap external_tensor_map(const ParamMap& phi, const ParamMap& psi) {
  ParamMap p;
  p.src = external_tensor(phi.src, psi.src);
  p.dst = external_tensor(phi.dst, psi.dst);
  p.degree = phi.degree + psi.degree;
  int nb = psi.src.base->n_objects;
  for (int o1 = 0; o1 < phi.src.base->n_objects; ++o1)
    for (int o2 = 0; o2 < nb; ++o2)
      p.component.push_back(tensor_map(phi.component[o1], psi.component[o2]));
  return p;
}

// ----- duality plumbing -----

LocalSystem dual_system(const LocalSystem& x) {
  return hom_system(x, LocalSystem::unit(x.base, x.field()));
}

ParamMap eval_system(const LocalSystem& x) {
  return hom_system_eval(x, LocalSystem::unit(x.base, x.field()));
}

bool is_invertible_system(const LocalSystem& x) { return eval_system(x).is_iso(); }

// ----- fibrewise functors, t_C -----

LocalSystem induced_fibrewise(const GradedVectorSpace& w0, const LocalSystem& x) {
  return tensor_system(x, LocalSystem::constant(x.base, w0));
}

ParamMap induced_fibrewise_map(const GradedVectorSpace& w0, const ParamMap& m) {
  LocalSystem c = LocalSystem::constant(m.src.base, w0);
  return tensor_param(m, ParamMap::identity(c));
}

LocalSystem push_unit(const GroupoidMap& alpha, Field f) {
  return shriek(alpha, LocalSystem::unit(alpha.src, f)).sys;
}

// ----- the six base-change relations -----

ParamMap wirthmuller_comparison(WirthRelation rel, const GroupoidMap& f,
                                const std::vector<LocalSystem>& args) {
  Field k = args.empty() ? Field::rationals() : args[0].field();
  switch (rel) {
    case WirthRelation::Unit: {
      // f*S_B → S_A: the identity on components.
      LocalSystem sb = LocalSystem::unit(f.dst, k);
      LocalSystem sa = LocalSystem::unit(f.src, k);
      return ParamMap::identity(sa).retarget(pullback(f, sb), sa);
    }
    case WirthRelation::Product: {
      // f*(Y⊗Z) → f*Y ⊗ f*Z: identity on components (strict in this model).
      const LocalSystem& y = args.at(0);
      const LocalSystem& z = args.at(1);
      LocalSystem lhs = pullback(f, tensor_system(y, z));
      LocalSystem rhs = tensor_system(pullback(f, y), pullback(f, z));
      return ParamMap::identity(rhs).retarget(lhs, rhs);
    }
    case WirthRelation::Homs: {
      // f*F_B(Y,Z) → F_A(f*Y, f*Z): identity on components.
      const LocalSystem& y = args.at(0);
      const LocalSystem& z = args.at(1);
      LocalSystem lhs = pullback(f, hom_system(y, z));
      LocalSystem rhs = hom_system(pullback(f, y), pullback(f, z));
      return ParamMap::identity(rhs).retarget(lhs, rhs);
    }
    case WirthRelation::StarAdjoint: {
      // F_B(Y, f_*X) → f_*F_A(f*Y, X)
      const LocalSystem& y = args.at(0);
      const LocalSystem& x = args.at(1);
      Star sx = star(f, x);
      LocalSystem fy = pullback(f, y);
      LocalSystem lhs = hom_system(y, sx.sys);
      // f*F_B(Y, f_*X) = F_A(f*Y, f*f_*X) → F_A(f*Y, X) via the counit
      ParamMap chi = hom_system_post(fy, star_counit(sx))
                         .retarget(pullback(f, lhs), hom_system(fy, x));
      return adjunct_star(f, lhs, chi);
    }
    case WirthRelation::Projection: {
      // f_!(f*Y⊗X) → Y⊗f_!X
      const LocalSystem& y = args.at(0);
      const LocalSystem& x = args.at(1);
      Shriek sx = shriek(f, x);
      LocalSystem fy = pullback(f, y);
      // f*Y⊗X → f*Y⊗f*f_!X = f*(Y⊗f_!X)
      ParamMap step = tensor_param(ParamMap::identity(fy), shriek_unit(sx));
      LocalSystem tgt = tensor_system(y, sx.sys);
      ParamMap step2 = step.retarget(step.src, pullback(f, tgt));
      return adjunct_shriek(f, step2, tgt);
    }
    case WirthRelation::ShriekAdjoint: {
      // F_B(f_!X, Y) → f_*F_A(X, f*Y)
      const LocalSystem& x = args.at(0);
      const LocalSystem& y = args.at(1);
      Shriek sx = shriek(f, x);
      LocalSystem fy = pullback(f, y);
      LocalSystem lhs = hom_system(sx.sys, y);
      // f*F_B(f_!X,Y) = F_A(f*f_!X, f*Y) → F_A(X, f*Y) via the unit
      ParamMap chi = hom_system_pre(shriek_unit(sx), fy)
                         .retarget(pullback(f, lhs), hom_system(x, fy));
      return adjunct_star(f, lhs, chi);
    }
  }
  throw std::logic_error("unreachable");
}

// ----- Beck–Chevalley -----

ParamMap beck_chevalley(BCKind kind, const GroupoidSquare& sq, const LocalSystem& x) {
  const GroupoidMap& p = sq.p;
  const GroupoidMap& q = sq.q;
  const GroupoidMap& f = sq.f;
  const GroupoidMap& g = sq.g;
  if (kind == BCKind::Shriek) {
    // p_! q* X → f* g_! X for X over the domain of g.
    Shriek sg = shriek(g, x);
    LocalSystem w = sg.sys;  // g_!X over C
    // q*X → q*g*g_!X = (gq)*W
    ParamMap step1 = pullback_map(q, shriek_unit(sg));
    LocalSystem gqw = pullback(compose(g, q), w);
    ParamMap step1b = step1.retarget(step1.src, gqw);
    // (gq)*W → (fp)*W via the filler
    ParamMap step2 = sigma_pull(sq.filler, w);
    // (fp)*W = p*(f*W); adjunct over p
    LocalSystem fw = pullback(f, w);
    ParamMap total = step2.compose(step1b).retarget(step1.src, pullback(p, fw));
    return adjunct_shriek(p, total, fw);
  }
  // Star: g* f_* X → q_* p* X for X over the domain of f.
  Star sf = star(f, x);
  LocalSystem w = sf.sys;  // f_*X over C
  LocalSystem px = pullback(p, x);
  // f_*X → f_*p_*p*X
  ParamMap t1 = star_map(f, star_unit(p, x));
  // f_*p_*(p*X) → (fp)_*(p*X): adjunct over fp of the double counit
  GroupoidMap fp = compose(f, p);
  Star sp = star(p, px);
  Star sfp_inner = star(f, sp.sys);
  // counit chain: (fp)*(f_*p_*p*X) = p*(f*(f_* p_* p*X)) → p*(p_* p*X) → p*X
  ParamMap cf = star_counit(sfp_inner);  // f*f_*(p_*p*X) → p_*p*X
  ParamMap inner = pullback_map(p, cf);  // p*f*f_*(p_*p*X) → p*p_*p*X
  ParamMap cp = star_counit(sp);         // p*p_*(p*X) → p*X
  ParamMap omega = cp.compose(inner.retarget(inner.src, cp.src));
  ParamMap omega2 = omega.retarget(pullback(fp, sfp_inner.sys), px);
  ParamMap t2 = adjunct_star(fp, sfp_inner.sys, omega2);  // f_*p_*p*X → (fp)_*p*X
  // (fp)_*p*X → (gq)_*p*X via the filler
  ParamMap t3 = sigma_star(sq.filler, px);
  // (gq)_*p*X → g_*q_*p*X
  ParamMap t4 = compose_star_iso(g, q, px);
  ParamMap chain = t4.compose(t3.compose(t2.retarget(t2.src, t3.src).compose(t1)));
  // g*f_*X → g*(g_* q_* p* X) → q_* p* X
  ParamMap down = pullback_map(g, chain);
  Star sq_star = star(q, px);
  Star sg_outer = star(g, sq_star.sys);
  ParamMap cg = star_counit(sg_outer);  // g*g_*(q_*p*X) → q_*p*X
  return cg.compose(down.retarget(down.src, cg.src));
}

}  // namespace umbra
